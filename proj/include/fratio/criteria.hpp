#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fratio/int_list.hpp"
#include "fratio/rational.hpp"

namespace fratio {

/// Outcome of the Landau integrality test on a concrete list.
struct RatioVerdict {
  enum class Status { Integral, NotIntegral, Invalid };

  Status status = Status::Invalid;
  int height = 0;                     // D when Integral
  std::optional<Rat> witness_x;       // first breakpoint with F(x+) < 0
  std::set<std::int64_t> value_range; // values of F(x+) over [0, 1)
  std::string reason;                 // set when Invalid

  bool integral() const { return status == Status::Integral; }
  bool integral_with_height(int d) const { return integral() && height == d; }
};

/// (1/12) sum_{i,j} gcd(a_i, a_j)^2 / (a_i a_j).
Rat norm(const IntList &a);

/// Landau criterion: sweep F(x+) over the breakpoint grid.
///
/// Invalid unless the list is nonempty with s = 0 and h >= 1. Breakpoints
/// are evaluated in parallel; the reduction is ordered, so the witness is the
/// smallest failing breakpoint regardless of worker count.
RatioVerdict is_integral_ratio(const IntList &a);

/// Serial Rat-based implementation of is_integral_ratio, kept as a test oracle.
RatioVerdict is_integral_ratio_reference(const IntList &a);

/// Exact set of F(x+) values on [0, 1). Requires s(a) = 0.
std::set<std::int64_t> value_range(const IntList &a);

struct OracleResult {
  bool integral = true;
  std::optional<long> first_failure;
};

/// Computes prod (a_i n)! / prod (b_j n)! exactly for n = 1..n_max and tests
/// divisibility. Necessary condition only. Requires s(a) = 0.
OracleResult factorial_oracle(const IntList &a, long n_max);

/// Jump of the right-continuous step function sum_j floor(b_j x) at x0.
int monotone_jump(const IntList &b, const Rat &x0);

/// True iff sum_j floor(b_j x) is monotone in x.
bool is_monotone(const IntList &b);

struct SeparationReport {
  bool holds = false;
  std::vector<std::string> failed_clauses;
  Rat norm_a;
  Rat bound; // (1 - 1/k)(N(b) + N(c))
};

/// Checks a stated k-separation witness a = B b + C c clause by clause.
SeparationReport verify_separation(const IntList &a, std::int64_t B, const IntList &b, std::int64_t C,
                                   const IntList &c, std::int64_t k);

std::string to_string(RatioVerdict::Status s);

} // namespace fratio
