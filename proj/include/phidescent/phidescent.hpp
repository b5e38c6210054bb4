#pragma once

// Insolubility certificates for c*y^l = Phi_p(x) = (x^p - 1)/(x - 1):
// exact Gauss identity decomposition, symbol and class-group criteria,
// and brute-force oracles, all over unbounded integers.

#include "phidescent/criteria.hpp"
#include "phidescent/errors.hpp"
#include "phidescent/gauss.hpp"
#include "phidescent/ntheory.hpp"
#include "phidescent/quadforms.hpp"
#include "phidescent/search.hpp"
#include "phidescent/series.hpp"
