#include "fratio/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "fratio/parallel.hpp"
#include "fratio/step_functions.hpp"

namespace fratio {

namespace {

std::optional<std::string> invalid_reason(const IntList &a) {
  if (a.empty()) {
    return "empty list";
  }
  if (a.sum() != 0) {
    return "sum is " + std::to_string(a.sum()) + ", not 0";
  }
  if (a.height() < 1) {
    return "height is " + std::to_string(a.height()) + ", need at least 1";
  }
  return std::nullopt;
}

template <typename PointAt>
RatioVerdict finish(const IntList &a, const std::vector<std::int64_t> &values, PointAt point_at) {
  RatioVerdict v;
  v.height = a.height();
  for (std::size_t i = 0; i < values.size(); ++i) {
    v.value_range.insert(values[i]);
    if (values[i] < 0 && !v.witness_x) {
      v.witness_x = point_at(i);
    }
  }
  if (v.witness_x) {
    v.status = RatioVerdict::Status::NotIntegral;
    return v;
  }
  // F(-x) = D - F(x) off the breakpoints, so F >= 0 forces F <= D.
  if (*v.value_range.rbegin() > v.height) {
    throw std::logic_error("floor sum exceeds height without a negative value for " + a.to_string());
  }
  v.status = RatioVerdict::Status::Integral;
  return v;
}

} // namespace

std::string to_string(RatioVerdict::Status s) {
  switch (s) {
  case RatioVerdict::Status::Integral:
    return "integral";
  case RatioVerdict::Status::NotIntegral:
    return "not_integral";
  case RatioVerdict::Status::Invalid:
    return "invalid";
  }
  return "invalid";
}

Rat norm(const IntList &a) {
  if (a.empty()) {
    throw ListError(ListErrorKind::EmptyList, "norm of an empty list");
  }
  Rat total;
  const auto e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      const long g = std::gcd(e[i], e[j]);
      total += Rat(BigInt(g) * g, BigInt(e[i]) * BigInt(e[j]));
    }
  }
  return total / Rat(12);
}

RatioVerdict is_integral_ratio(const IntList &a) {
  if (auto why = invalid_reason(a)) {
    RatioVerdict v;
    v.reason = *why;
    return v;
  }
  const auto grid = breakpoint_grid(a);
  std::vector<std::int64_t> values(grid.size());
  const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static) num_threads(jobs())
  for (std::int64_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] = floor_sum_at(a, grid[static_cast<std::size_t>(i)]);
  }
  return finish(a, values, [&](std::size_t i) { return grid[i].to_rat(); });
}

RatioVerdict is_integral_ratio_reference(const IntList &a) {
  if (auto why = invalid_reason(a)) {
    RatioVerdict v;
    v.reason = *why;
    return v;
  }
  const auto xs = breakpoints(a);
  std::vector<std::int64_t> values;
  values.reserve(xs.size());
  for (const auto &x : xs) {
    values.push_back(to_int64(floor_sum(a, x, Limit::Right)));
  }
  return finish(a, values, [&](std::size_t i) { return xs[i]; });
}

std::set<std::int64_t> value_range(const IntList &a) {
  if (a.empty() || a.sum() != 0) {
    throw std::invalid_argument("value_range needs a nonempty list with sum 0");
  }
  std::set<std::int64_t> out;
  for (const auto &bp : breakpoint_grid(a)) {
    out.insert(floor_sum_at(a, bp));
  }
  return out;
}

OracleResult factorial_oracle(const IntList &a, long n_max) {
  if (a.sum() != 0) {
    throw std::invalid_argument("factorial oracle needs sum 0");
  }
  OracleResult r;
  BigInt num;
  BigInt den;
  BigInt f;
  for (long n = 1; n <= n_max; ++n) {
    num = 1;
    den = 1;
    for (auto v : a) {
      const unsigned long arg = static_cast<unsigned long>(v < 0 ? -v : v) * static_cast<unsigned long>(n);
      mpz_fac_ui(f.get_mpz_t(), arg);
      (v > 0 ? num : den) *= f;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
      r.integral = false;
      r.first_failure = n;
      return r;
    }
  }
  return r;
}

int monotone_jump(const IntList &b, const Rat &x0) {
  int jump = 0;
  for (auto v : b) {
    if ((Rat(static_cast<long>(v)) * x0).is_integer()) {
      jump += v > 0 ? 1 : -1;
    }
  }
  return jump;
}

bool is_monotone(const IntList &b) {
  if (b.empty()) {
    throw ListError(ListErrorKind::EmptyList, "monotonicity of an empty list");
  }
  bool up = false;
  bool down = false;
  for (const auto &bp : breakpoint_grid(b)) {
    int jump = 0;
    for (auto v : b) {
      const __int128 prod = static_cast<__int128>(v) * bp.num;
      if (prod % bp.den == 0) {
        jump += v > 0 ? 1 : -1;
      }
    }
    up = up || jump > 0;
    down = down || jump < 0;
  }
  const bool monotone = !(up && down);
  if (monotone && b.sum() != 0 && (up || down)) {
    // Over one period the jumps add up to s(b).
    if ((b.sum() > 0) != up) {
      throw std::logic_error("monotone direction disagrees with sign of the sum for " + b.to_string());
    }
  }
  return monotone;
}

SeparationReport verify_separation(const IntList &a, std::int64_t B, const IntList &b, std::int64_t C,
                                   const IntList &c, std::int64_t k) {
  SeparationReport r;
  auto fail = [&](std::string clause) { r.failed_clauses.push_back(std::move(clause)); };
  if (k < 2) {
    fail("k >= 2");
  }
  if (b.empty() || c.empty() || b.length() >= a.length() || c.length() >= a.length()) {
    fail("1 <= l(b), l(c) < l(a)");
  }
  if (!b.is_primitive() || !c.is_primitive()) {
    fail("b and c primitive");
  }
  if (B == 0 || C == 0 || std::gcd(B, C) != 1) {
    fail("B, C nonzero and coprime");
  }
  if (!r.failed_clauses.empty()) {
    return r;
  }
  const IntList Bb = dilate(b, B);
  const IntList Cc = dilate(c, C);
  if (concat(Bb, Cc) != a) {
    fail("a = B b + C c");
  }
  const bool kB = B % k == 0;
  const bool kC = C % k == 0;
  if (kB == kC) {
    fail("exactly one of B, C divisible by k");
  } else if (std::gcd(kB ? C : B, k) != 1) {
    fail("the other of B, C coprime to k");
  } else {
    const IntList &mult = kB ? Bb : Cc;
    const IntList &other = kB ? Cc : Bb;
    auto gcd_ok = [&] {
      for (auto x : mult) {
        for (auto y : other) {
          if (std::gcd(x, y) != std::gcd(x / k, y)) {
            return false;
          }
        }
      }
      return true;
    };
    if (!gcd_ok()) {
      fail("gcd condition (k x, y) = (x, y)");
    }
  }
  r.norm_a = norm(a);
  r.bound = (Rat(1) - Rat(1, k)) * (norm(b) + norm(c));
  if (r.norm_a < r.bound) {
    fail("N(a) >= (1 - 1/k)(N(b) + N(c))");
  }
  r.holds = r.failed_clauses.empty();
  return r;
}

} // namespace fratio
