#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "phidescent/errors.hpp"

namespace phidescent::series {

/// Dense polynomial over Q, optionally carrying a truncation order N, in
/// which case it represents a power series whose terms of degree > N are
/// unspecified (and not stored). Coefficients are kept in lowest terms with
/// positive denominator; trailing zeros are stripped.
struct RatPoly {
    std::vector<mpq_class> coeffs; // index = degree
    std::optional<long> truncation_order;

    RatPoly() = default;

    explicit RatPoly(std::vector<mpq_class> cs,
                     std::optional<long> trunc = std::nullopt)
        : coeffs(std::move(cs)), truncation_order(trunc) {
        for (auto& c : coeffs) c.canonicalize();
        strip();
    }

    static RatPoly constant(const mpq_class& v,
                            std::optional<long> trunc = std::nullopt) {
        return RatPoly(std::vector<mpq_class>{v}, trunc);
    }

    static RatPoly one(std::optional<long> trunc = std::nullopt) {
        return constant(mpq_class(1), trunc);
    }

    bool is_zero() const { return coeffs.empty(); }

    /// Degree of the stored polynomial part; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    mpq_class coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(coeffs.size())) return mpq_class(0);
        return coeffs[static_cast<std::size_t>(k)];
    }

    /// Equality of the stored coefficients (truncation metadata ignored).
    friend bool operator==(const RatPoly& a, const RatPoly& b) {
        return a.coeffs == b.coeffs;
    }

  private:
    void strip() {
        if (truncation_order) {
            const long cap = std::max<long>(*truncation_order, -1);
            if (static_cast<long>(coeffs.size()) > cap + 1)
                coeffs.resize(static_cast<std::size_t>(cap + 1));
        }
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
};

namespace detail {
inline std::optional<long> min_order(const std::optional<long>& a,
                                     const std::optional<long>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}
} // namespace detail

/// Coefficient-wise sum; truncation orders combine by minimum.
inline RatPoly poly_add(const RatPoly& p, const RatPoly& q) {
    std::vector<mpq_class> out(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = p.coeff(static_cast<long>(k)) + q.coeff(static_cast<long>(k));
    return RatPoly(std::move(out),
                   detail::min_order(p.truncation_order, q.truncation_order));
}

inline RatPoly poly_scale(const RatPoly& p, const mpq_class& s) {
    std::vector<mpq_class> out(p.coeffs.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeffs[k] * s;
    return RatPoly(std::move(out), p.truncation_order);
}

/// Product truncated at order N (exact below the truncation).
inline RatPoly series_mul(const RatPoly& p, const RatPoly& q, long n) {
    if (n < 0) throw InvalidArgument("series_mul: order must be >= 0");
    long ne = n;
    if (p.truncation_order) ne = std::min(ne, *p.truncation_order);
    if (q.truncation_order) ne = std::min(ne, *q.truncation_order);
    const long dp = p.degree();
    const long dq = q.degree();
    const long dmax = std::min(ne, dp + dq);
    std::vector<mpq_class> out(static_cast<std::size_t>(std::max<long>(dmax + 1, 0)));
    for (long i = 0; i <= std::min(dp, dmax); ++i) {
        const mpq_class& pi = p.coeffs[static_cast<std::size_t>(i)];
        if (pi == 0) continue;
        const long jmax = std::min(dq, dmax - i);
        for (long j = 0; j <= jmax; ++j)
            out[static_cast<std::size_t>(i + j)] +=
                pi * q.coeffs[static_cast<std::size_t>(j)];
    }
    return RatPoly(std::move(out), ne);
}

/// Square root of a series with constant term 1, to order N.
/// Coefficient recurrence: s_0 = 1, s_k = (p_k - sum_{i=1}^{k-1} s_i s_{k-i})/2.
inline RatPoly series_sqrt(const RatPoly& p, long n) {
    if (n < 0) throw InvalidArgument("series_sqrt: order must be >= 0");
    if (p.coeff(0) != 1)
        throw InvalidArgument("series_sqrt: constant term must be 1");
    long ne = n;
    if (p.truncation_order) ne = std::min(ne, *p.truncation_order);
    std::vector<mpq_class> s(static_cast<std::size_t>(ne + 1));
    s[0] = 1;
    for (long k = 1; k <= ne; ++k) {
        mpq_class acc = p.coeff(k);
        for (long i = 1; i < k; ++i)
            acc -= s[static_cast<std::size_t>(i)] *
                   s[static_cast<std::size_t>(k - i)];
        s[static_cast<std::size_t>(k)] = acc / 2;
    }
    return RatPoly(std::move(s), ne);
}

/// Dense polynomial over Z; the zero polynomial is the empty sequence.
struct IntPoly {
    std::vector<mpz_class> coeffs; // index = degree

    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> cs) : coeffs(std::move(cs)) {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    mpz_class coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(coeffs.size())) return mpz_class(0);
        return coeffs[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.coeffs == b.coeffs;
    }
};

/// Integrality gate: succeeds iff every coefficient has denominator 1.
inline IntPoly to_integer_poly(const RatPoly& p) {
    std::vector<mpz_class> out;
    out.reserve(p.coeffs.size());
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        const mpq_class& q = p.coeffs[k];
        if (q.get_den() != 1)
            throw NonIntegralCoefficient(static_cast<long>(k), q.get_str());
        out.push_back(q.get_num());
    }
    return IntPoly(std::move(out));
}

/// Injection of an integer polynomial into Q[x] (optionally as a series).
inline RatPoly to_rational_poly(const IntPoly& p,
                                std::optional<long> trunc = std::nullopt) {
    std::vector<mpq_class> out;
    out.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) out.emplace_back(c);
    return RatPoly(std::move(out), trunc);
}

inline IntPoly poly_mul_exact(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly();
    std::vector<mpz_class> out(p.coeffs.size() + q.coeffs.size() - 1);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            out[i + j] += p.coeffs[i] * q.coeffs[j];
    }
    return IntPoly(std::move(out));
}

inline IntPoly poly_add_exact(const IntPoly& p, const IntPoly& q) {
    std::vector<mpz_class> out(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = p.coeff(static_cast<long>(k)) + q.coeff(static_cast<long>(k));
    return IntPoly(std::move(out));
}

inline IntPoly poly_sub_exact(const IntPoly& p, const IntPoly& q) {
    std::vector<mpz_class> out(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = p.coeff(static_cast<long>(k)) - q.coeff(static_cast<long>(k));
    return IntPoly(std::move(out));
}

inline IntPoly poly_scale_exact(const IntPoly& p, const mpz_class& s) {
    std::vector<mpz_class> out(p.coeffs.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeffs[k] * s;
    return IntPoly(std::move(out));
}

/// Horner evaluation.
inline mpz_class poly_eval(const IntPoly& p, const mpz_class& a) {
    mpz_class acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * a + *it;
    return acc;
}

} // namespace phidescent::series
