#pragma once

#include <stdexcept>
#include <string>

namespace phidescent {

/// Base type for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (composite modulus, even
/// symbol denominator, ...). The CLI maps these to usage errors.
struct InvalidArgument : Error {
    using Error::Error;
};

/// A (p, c, l) instance violating the problem constraints.
struct InvalidTriple : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// A rational series coefficient failed the integrality gate.
struct NonIntegralCoefficient : Error {
    long degree;
    NonIntegralCoefficient(long deg, const std::string& value)
        : Error("non-integral coefficient at degree " + std::to_string(deg) +
                ": " + value),
          degree(deg) {}
};

/// The exact identity 4*Phi_p = A^2 - delta*p*B^2 (or one of its
/// normalization consequences) failed to verify.
struct IdentityFailure : Error {
    using Error::Error;
};

/// A series coefficient beyond the nominal polynomial degree was nonzero.
struct GuardTermNonzero : Error {
    using Error::Error;
};

/// gcd(A_p(a), B_p(a)) fell outside {1, 2}.
struct LemmaViolation : Error {
    using Error::Error;
};

/// descend() was fed a pair (a, b) with c*b^l != Phi_p(a).
struct NotASolution : Error {
    using Error::Error;
};

struct IncompatibleDiscriminants : Error {
    using Error::Error;
};

/// prime_form: the prime is inert, (D/q) = -1.
struct NotSplit : Error {
    using Error::Error;
};

/// prime_form: q divides the discriminant.
struct Ramified : Error {
    using Error::Error;
};

/// A configured resource bound (discriminant size, modulus size) was exceeded.
struct BoundExceeded : Error {
    using Error::Error;
};

/// A classically guaranteed invariant failed at runtime; always a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace phidescent
