#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fratio/arrangement.hpp"
#include "fratio/int_list.hpp"
#include "fratio/rational.hpp"

namespace fratio {

enum class FamilyErrorKind { ConstraintViolation, ZeroList, DimensionUnsupported, Unbalanced, MissingHeight, Malformed, Parse };

class FamilyError : public std::invalid_argument {
public:
  FamilyError(FamilyErrorKind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {}
  FamilyErrorKind kind() const noexcept { return kind_; }

private:
  FamilyErrorKind kind_;
};

using Coeffs = std::vector<std::int64_t>;

enum class Relation { Positive, NonNegative };

/// coeffs . t > 0 or coeffs . t >= 0.
struct LinearConstraint {
  Coeffs coeffs;
  Relation rel = Relation::Positive;

  bool holds(std::span<const std::int64_t> t) const;
  friend bool operator==(const LinearConstraint &, const LinearConstraint &) = default;
};

/// A list whose entries are homogeneous integer linear forms in d parameters.
///
/// Entry i stands for sum_p entries[i][p] * t_p. Parameters are named by
/// single letters in order (a, b, c, d).
struct AffineList {
  static constexpr int kMaxParams = 4;

  int d = 0;
  std::vector<Coeffs> entries;
  std::vector<LinearConstraint> constraints;
  bool coprime = false;
  std::optional<int> height; // claimed height of the admissible instances

  /// Validates shape: 1 <= d <= 4, nonzero coefficient vectors of length d,
  /// and a zero coefficient sum whenever a height is claimed.
  static AffineList make(int d, std::vector<Coeffs> entries, std::vector<LinearConstraint> constraints = {},
                         bool coprime = false, std::optional<int> height = std::nullopt);

  /// Coefficientwise sum over entries; zero iff every instance has sum 0.
  Coeffs coefficient_sum() const;
  bool balanced() const;

  /// Text form "6a,b,-2a,-3a,-6b,-a+5b".
  std::string to_string() const;

  friend bool operator==(const AffineList &, const AffineList &) = default;
};

/// Parses the text shorthand: comma-separated signed sums of terms such as
/// "6(a+b)", "-(a-5b)", "-11a+b", "3*(a+b)". Letters are parameters, sorted
/// alphabetically to fix their order; pure constants are rejected.
/// Throws FamilyError(Parse).
AffineList parse_family(std::string_view text, int min_params = 0);

/// Constraints hold and, when required, gcd(params) = 1.
bool admissible(const AffineList &f, std::span<const std::int64_t> params);

/// Evaluates every entry; zero entries are dropped and +/- pairs cancelled.
/// Throws FamilyError(ConstraintViolation) or FamilyError(ZeroList).
IntList instantiate(const AffineList &f, std::span<const std::int64_t> params);

/// Entry values without dropping or cancelling anything.
std::vector<std::int64_t> evaluate_entries(const AffineList &f, std::span<const std::int64_t> params);

struct FamilyVerdict {
  enum class Status { VerifiedExact, VerifiedSampled, Fails, FailsInstance };

  Status status = Status::Fails;

  // Exact sweep: value = sum_i floor(c_i x + d_i y) + #negative entries.
  std::optional<Point2> point;
  std::int64_t value = 0;
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  std::size_t samples = 0;

  // Sampling.
  std::int64_t bound = 0;
  std::vector<std::int64_t> params;
  std::optional<IntList> instance;
  std::optional<long> n;         // first n with a non-integral ratio, if within n_max
  std::optional<Rat> witness_x;  // Landau witness on the instance
  std::size_t instances_checked = 0;
  std::size_t instances_skipped = 0;

  bool passed() const { return status == Status::VerifiedExact || status == Status::VerifiedSampled; }
};

std::string to_string(FamilyVerdict::Status s);

/// Exact decision over the unit square for a two-parameter family.
///
/// With D the claimed height and L = (l + D)/2, checks that
/// sum_i floor(c_i x + d_i y) + L lies in {0..D} over every cell, edge and
/// vertex of the line arrangement, taking lexicographic right limits. A pass
/// certifies every instance with no zero entry and realized height D.
/// Sign constraints are ignored: the whole square is a superset of the
/// instances. Throws DimensionUnsupported, Unbalanced or MissingHeight.
FamilyVerdict verify_family_exact(const AffineList &f);

/// Same decision through the serial Rat sweep.
FamilyVerdict verify_family_exact_reference(const AffineList &f);

/// Checks every admissible primitive tuple with max |t_p| <= bound (tuples in
/// lexicographic order over [-bound, bound]^d). Instances that are not valid
/// ratios, or whose height differs from the claimed one, are skipped. Every
/// checked instance also runs the factorial oracle up to n_max.
FamilyVerdict verify_family_sampled(const AffineList &f, std::int64_t bound, long n_max);

struct NormLimit {
  Rat limit;                       // exact limit along generic primitive rays
  std::vector<std::int64_t> params; // representative instance
  IntList instance;
  Rat instance_norm;
};

/// Limit of N(instance) as the parameters grow coprimely along `direction`.
///
/// Only pairs of proportional entries survive in the limit, which gives an
/// exact value; the representative instance is the first admissible tuple
/// M * direction + (0, 1) with M >= scale. Requires d = 2 and a primitive
/// direction, otherwise throws FamilyError(Malformed).
NormLimit family_norm_limit(const AffineList &f, std::span<const std::int64_t> direction,
                            std::int64_t scale = 100000);

} // namespace fratio
