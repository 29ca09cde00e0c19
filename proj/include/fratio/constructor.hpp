#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fratio/affine_family.hpp"
#include "fratio/int_list.hpp"

namespace fratio {

enum class ConstructErrorKind { NotPrimitive, NotMonotone, ZeroSum, SumsNotCoprime, BaseNotIntegral };

class ConstructError : public std::invalid_argument {
public:
  ConstructError(ConstructErrorKind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {}
  ConstructErrorKind kind() const noexcept { return kind_; }

private:
  ConstructErrorKind kind_;
};

std::string to_string(ConstructErrorKind k);

/// Inputs of the monotone-list construction: a primitive list a, a primitive
/// monotone list b with coprime nonzero sums u = s(a), v = s(b), and the base
/// v a - u b, an integral ratio of height base_height.
struct ConstructionInput {
  IntList a;
  IntList b;
  std::int64_t u = 0;
  std::int64_t v = 0;
  IntList base;
  int base_height = 0;
};

/// Validates every hypothesis in turn. Throws ConstructError naming the first
/// one that fails.
ConstructionInput build_input(const IntList &a, const IntList &b);

/// The family alpha a + beta b + (-alpha u - beta v)[1] over (alpha, beta)
/// of either sign, with claimed height base_height + 1. Instances of another
/// height are outside the claim.
AffineList emit_family(const ConstructionInput &t);

struct ProofChecks {
  // a(vx) + b(-ux) in {-D/2..D/2}, summed without cancelling.
  bool base_range = false;
  // a(x) + b(y) + psi(-ux - vy) in {-(D+1)/2..(D+1)/2} over the plane.
  bool plane_range = false;
  // a(vx) + b(-u(x + k/uv)) in {-D/2..D/2} for k = 0..|uv|-1.
  bool shift_range = false;

  std::optional<Rat> base_witness;
  std::optional<Point2> plane_witness;
  std::optional<Rat> shift_witness;
  std::int64_t shift_k = 0;
  std::size_t plane_samples = 0;

  bool holds() const { return base_range && plane_range && shift_range; }
};

/// Exact checks of the three value-range statements behind the construction.
/// Does not revalidate t, so corrupted inputs can be probed.
ProofChecks check_proof_inequalities(const ConstructionInput &t);

} // namespace fratio
