#include "fratio/step_functions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fratio {

namespace {

const Rat kHalf(1, 2);

void require_nonempty(const IntList &a) {
  if (a.empty()) {
    throw ListError(ListErrorKind::EmptyList, "operation needs a nonempty list");
  }
}

std::int64_t floor_div(__int128 num, std::int64_t den) {
  __int128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return static_cast<std::int64_t>(q);
}

} // namespace

Rat psi(const Rat &x) { return kHalf - x.frac(); }

Rat a_eval(const IntList &a, const Rat &x) {
  require_nonempty(a);
  Rat total;
  for (auto v : a) {
    const Rat ax = Rat(static_cast<long>(v)) * x;
    if (ax.is_integer()) {
      total += v > 0 ? kHalf : -kHalf;
    } else {
      total += psi(ax);
    }
  }
  return total;
}

BigInt floor_sum(const IntList &a, const Rat &x, Limit limit) {
  BigInt total = 0;
  if (limit == Limit::Pointwise) {
    for (auto v : a) {
      const Rat ax = Rat(static_cast<long>(v < 0 ? -v : v)) * x;
      total += v > 0 ? ax.floor() : BigInt(-ax.floor());
    }
    return total;
  }
  for (auto v : a) {
    const Rat ax = Rat(static_cast<long>(v)) * x;
    BigInt f = ax.floor();
    if (v < 0) {
      // floor(a x) from the right drops by one at an integer when a < 0.
      if (ax.is_integer()) {
        f -= 1;
      }
      f += 1;
    }
    total += f;
  }
  return total;
}

std::int64_t floor_sum_at(const IntList &a, UnitFraction bp) {
  std::int64_t total = 0;
  for (auto v : a) {
    const __int128 prod = static_cast<__int128>(v < 0 ? -v : v) * bp.num;
    const std::int64_t f = floor_div(prod, bp.den);
    total += v > 0 ? f : -f;
  }
  return total;
}

std::vector<UnitFraction> breakpoint_grid(const IntList &a) {
  std::set<std::int64_t> dens;
  for (auto v : a) {
    dens.insert(v < 0 ? -v : v);
  }
  std::vector<UnitFraction> out;
  for (auto q : dens) {
    for (std::int64_t m = 0; m < q; ++m) {
      const std::int64_t g = std::gcd(m, q);
      out.push_back(UnitFraction{m / g, q / g});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rat> breakpoints(const IntList &a) {
  require_nonempty(a);
  // Built from Rat directly so the reference paths do not share breakpoint_grid.
  std::set<Rat> pts;
  for (auto v : a) {
    const std::int64_t q = v < 0 ? -v : v;
    for (std::int64_t m = 0; m < q; ++m) {
      pts.insert(Rat(m, q));
    }
  }
  return {pts.begin(), pts.end()};
}

Rat norm_by_integral(const IntList &a) {
  require_nonempty(a);
  const auto pts = breakpoints(a);
  const Rat slope = -Rat(static_cast<long>(a.sum()));
  Rat total;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Rat left = pts[k];
    const Rat right = k + 1 < pts.size() ? pts[k + 1] : Rat(1);
    const Rat w = right - left;
    const Rat v = a_eval(a, left);
    // integral over [0, w) of (v + slope t)^2 dt
    total += v * v * w + v * slope * w * w + slope * slope * w * w * w / Rat(3);
  }
  return total;
}

} // namespace fratio
