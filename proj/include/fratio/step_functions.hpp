#pragma once

#include <cstdint>
#include <vector>

#include "fratio/int_list.hpp"
#include "fratio/rational.hpp"

namespace fratio {

/// Reduced fraction num/den with 0 <= num < den, used for breakpoint grids
/// in the integer kernels. Comparisons use exact 128-bit cross products.
struct UnitFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat to_rat() const { return Rat(num, den); }
  friend bool operator==(const UnitFraction &, const UnitFraction &) = default;
  friend bool operator<(const UnitFraction &a, const UnitFraction &b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

enum class Limit { Pointwise, Right };

/// Saw-tooth 1/2 - {x}, pointwise (so psi(n) = 1/2 at integers).
Rat psi(const Rat &x);

/// Right-continuous list function sum_j psi(a_j x).
/// At a_j x in Z the term contributes +1/2 for a_j > 0 and -1/2 for a_j < 0.
Rat a_eval(const IntList &a, const Rat &x);

/// Landau floor sum sum_{p>0} floor(p x) - sum_{n>0, -n in a} floor(n x).
///
/// Limit::Right evaluates the limit from the right via the sign-free form
/// sum_j floor(a_j x^+) + #negatives; the two modes agree everywhere
/// because every term is a floor of a positive multiple of x.
BigInt floor_sum(const IntList &a, const Rat &x, Limit limit = Limit::Right);

/// Integer-only floor sum at x = bp.num / bp.den (right limit).
std::int64_t floor_sum_at(const IntList &a, UnitFraction bp);

/// Sorted distinct m/|a_j| in [0, 1); always contains 0.
std::vector<UnitFraction> breakpoint_grid(const IntList &a);

/// Same set as Rat values.
std::vector<Rat> breakpoints(const IntList &a);

/// Exact integral of a(x)^2 over [0, 1), piecewise on the breakpoint grid.
/// On each piece a(x) is affine with slope -s(a), integrated in closed form.
Rat norm_by_integral(const IntList &a);

} // namespace fratio
