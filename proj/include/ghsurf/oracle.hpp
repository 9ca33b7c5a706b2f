#pragma once

#include <string>

#include "ghsurf/rational.hpp"

namespace ghsurf::oracle {

// Independent validation path for the exact cyclotomic evaluators:
// the same sums are re-evaluated by floating summation over the complex
// roots of unity at 256-bit precision (about 77 decimal digits), and the
// exact results must agree within 1e-30.

/// Decimal rendering (50 significant digits) of the numeric reciprocal sum.
std::string sum_reciprocal_decimal(long long n, long long k);

/// Decimal rendering of the numeric fixed-point index contribution.
std::string index_contribution_decimal(long long n, long long p, long long q, long long w);

bool agrees_sum_reciprocal(long long n, long long k, const Rational& exact);
bool agrees_index_contribution(long long n, long long p, long long q, long long w, const Rational& exact);

}  // namespace ghsurf::oracle
