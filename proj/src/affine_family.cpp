#include "fratio/affine_family.hpp"

#include <limits>
#include <map>
#include <numeric>

#include "fratio/criteria.hpp"
#include "fratio/parallel.hpp"

namespace fratio {

namespace {

std::int64_t dot(const Coeffs &c, std::span<const std::int64_t> t) {
  __int128 v = 0;
  for (std::size_t p = 0; p < c.size(); ++p) {
    v += static_cast<__int128>(c[p]) * t[p];
  }
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("family entry exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t tuple_gcd(std::span<const std::int64_t> t) {
  std::int64_t g = 0;
  for (auto v : t) {
    g = std::gcd(g, v);
  }
  return g;
}

std::vector<Form2> forms_of(const AffineList &f) {
  if (f.d != 2) {
    throw FamilyError(FamilyErrorKind::DimensionUnsupported,
                      "exact verification needs 2 parameters, family has " + std::to_string(f.d));
  }
  if (!f.balanced()) {
    throw FamilyError(FamilyErrorKind::Unbalanced, "family coefficients do not sum to zero");
  }
  if (!f.height) {
    throw FamilyError(FamilyErrorKind::MissingHeight, "exact verification needs a claimed height");
  }
  if ((f.entries.size() + static_cast<std::size_t>(*f.height)) % 2 != 0) {
    throw FamilyError(FamilyErrorKind::Malformed, "entry count and claimed height differ in parity");
  }
  std::vector<Form2> forms;
  for (const auto &e : f.entries) {
    forms.push_back({e[0], e[1]});
  }
  return forms;
}

template <typename Scan>
FamilyVerdict exact_with(const AffineList &f, Scan scan) {
  const auto forms = forms_of(f);
  const std::int64_t D = *f.height;
  const std::int64_t L = (static_cast<std::int64_t>(forms.size()) + D) / 2;
  const ArrangementScan s = scan(forms, -L, D - L);
  FamilyVerdict v;
  v.min_value = s.min_value + L;
  v.max_value = s.max_value + L;
  v.samples = s.samples;
  if (s.first_violation) {
    v.status = FamilyVerdict::Status::Fails;
    v.point = s.first_violation;
    v.value = s.violation_value + L;
  } else {
    v.status = FamilyVerdict::Status::VerifiedExact;
  }
  return v;
}

} // namespace

bool LinearConstraint::holds(std::span<const std::int64_t> t) const {
  const std::int64_t v = dot(coeffs, t);
  return rel == Relation::Positive ? v > 0 : v >= 0;
}

AffineList AffineList::make(int d, std::vector<Coeffs> entries, std::vector<LinearConstraint> constraints,
                            bool coprime, std::optional<int> height) {
  if (d < 1 || d > kMaxParams) {
    throw FamilyError(FamilyErrorKind::Malformed, "parameter count must be 1.." + std::to_string(kMaxParams));
  }
  if (entries.empty()) {
    throw FamilyError(FamilyErrorKind::Malformed, "family has no entries");
  }
  for (const auto &e : entries) {
    if (e.size() != static_cast<std::size_t>(d)) {
      throw FamilyError(FamilyErrorKind::Malformed, "entry has the wrong number of coefficients");
    }
    if (std::all_of(e.begin(), e.end(), [](std::int64_t c) { return c == 0; })) {
      throw FamilyError(FamilyErrorKind::Malformed, "entry with all-zero coefficients");
    }
  }
  for (const auto &c : constraints) {
    if (c.coeffs.size() != static_cast<std::size_t>(d)) {
      throw FamilyError(FamilyErrorKind::Malformed, "constraint has the wrong number of coefficients");
    }
  }
  if (height && *height < 1) {
    throw FamilyError(FamilyErrorKind::Malformed, "claimed height must be positive");
  }
  AffineList f;
  f.d = d;
  f.entries = std::move(entries);
  f.constraints = std::move(constraints);
  f.coprime = coprime;
  f.height = height;
  if (height && !f.balanced()) {
    throw FamilyError(FamilyErrorKind::Unbalanced, "a family claiming a height must have coefficient sum zero");
  }
  return f;
}

Coeffs AffineList::coefficient_sum() const {
  Coeffs s(static_cast<std::size_t>(d), 0);
  for (const auto &e : entries) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      s[p] += e[p];
    }
  }
  return s;
}

bool AffineList::balanced() const {
  const auto s = coefficient_sum();
  return std::all_of(s.begin(), s.end(), [](std::int64_t c) { return c == 0; });
}

std::string to_string(FamilyVerdict::Status s) {
  switch (s) {
  case FamilyVerdict::Status::VerifiedExact:
    return "verified_exact";
  case FamilyVerdict::Status::VerifiedSampled:
    return "verified_sampled";
  case FamilyVerdict::Status::Fails:
    return "fails";
  case FamilyVerdict::Status::FailsInstance:
    return "fails_instance";
  }
  return "fails";
}

bool admissible(const AffineList &f, std::span<const std::int64_t> params) {
  if (params.size() != static_cast<std::size_t>(f.d)) {
    return false;
  }
  for (const auto &c : f.constraints) {
    if (!c.holds(params)) {
      return false;
    }
  }
  return !f.coprime || tuple_gcd(params) == 1;
}

std::vector<std::int64_t> evaluate_entries(const AffineList &f, std::span<const std::int64_t> params) {
  if (params.size() != static_cast<std::size_t>(f.d)) {
    throw FamilyError(FamilyErrorKind::Malformed, "expected " + std::to_string(f.d) + " parameters");
  }
  std::vector<std::int64_t> out;
  out.reserve(f.entries.size());
  for (const auto &e : f.entries) {
    out.push_back(dot(e, params));
  }
  return out;
}

IntList instantiate(const AffineList &f, std::span<const std::int64_t> params) {
  if (!admissible(f, params)) {
    throw FamilyError(FamilyErrorKind::ConstraintViolation, "parameters violate the family constraints");
  }
  IntList out = from_multiset(evaluate_entries(f, params));
  if (out.empty()) {
    throw FamilyError(FamilyErrorKind::ZeroList, "every entry vanished or cancelled");
  }
  return out;
}

FamilyVerdict verify_family_exact(const AffineList &f) { return exact_with(f, scan_arrangement); }

FamilyVerdict verify_family_exact_reference(const AffineList &f) { return exact_with(f, scan_arrangement_reference); }

FamilyVerdict verify_family_sampled(const AffineList &f, std::int64_t bound, long n_max) {
  if (bound < 1) {
    throw std::invalid_argument("sampling bound must be positive");
  }
  const std::int64_t side = 2 * bound + 1;
  std::int64_t total = 1;
  for (int p = 0; p < f.d; ++p) {
    if (total > 100000000 / side) {
      throw std::invalid_argument("sampling grid too large");
    }
    total *= side;
  }
  enum : std::uint8_t { kSkipped, kPassed, kFailed };
  std::vector<std::uint8_t> outcome(static_cast<std::size_t>(total), kSkipped);

  auto tuple_at = [&](std::int64_t idx) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(f.d));
    for (int p = f.d - 1; p >= 0; --p) {
      t[static_cast<std::size_t>(p)] = idx % side - bound;
      idx /= side;
    }
    return t;
  };
  auto check = [&](const std::vector<std::int64_t> &t, IntList &inst, RatioVerdict &r) {
    if (tuple_gcd(t) != 1 || !admissible(f, t)) {
      return kSkipped;
    }
    inst = from_multiset(evaluate_entries(f, t));
    if (inst.empty()) {
      return kSkipped;
    }
    r = is_integral_ratio(inst);
    if (r.status == RatioVerdict::Status::Invalid || (f.height && r.height != *f.height)) {
      return kSkipped;
    }
    if (r.status == RatioVerdict::Status::NotIntegral) {
      return kFailed;
    }
    if (!factorial_oracle(inst, n_max).integral) {
      throw std::logic_error("factorial oracle disagrees with the floor-sum criterion on " + inst.to_string());
    }
    return kPassed;
  };

#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs())
  for (std::int64_t i = 0; i < total; ++i) {
    IntList inst;
    RatioVerdict r;
    outcome[static_cast<std::size_t>(i)] = check(tuple_at(i), inst, r);
  }

  FamilyVerdict v;
  v.bound = bound;
  v.status = FamilyVerdict::Status::VerifiedSampled;
  for (std::int64_t i = 0; i < total; ++i) {
    const auto o = outcome[static_cast<std::size_t>(i)];
    if (o == kSkipped) {
      ++v.instances_skipped;
      continue;
    }
    ++v.instances_checked;
    if (o == kFailed && v.status != FamilyVerdict::Status::FailsInstance) {
      v.status = FamilyVerdict::Status::FailsInstance;
      v.params = tuple_at(i);
      IntList inst;
      RatioVerdict r;
      check(v.params, inst, r);
      v.instance = inst;
      v.witness_x = r.witness_x;
      v.n = factorial_oracle(inst, n_max).first_failure;
    }
  }
  return v;
}

NormLimit family_norm_limit(const AffineList &f, std::span<const std::int64_t> direction, std::int64_t scale) {
  if (f.d != 2) {
    throw FamilyError(FamilyErrorKind::DimensionUnsupported, "norm limit needs 2 parameters");
  }
  if (direction.size() != 2 || tuple_gcd(direction) != 1) {
    throw FamilyError(FamilyErrorKind::Malformed, "direction must be a primitive pair");
  }
  // Group entries by the primitive direction of their coefficient vector:
  // entries p*w and q*w keep gcd(p, q)^2 / (p q) in the limit; every other
  // pair has bounded gcd and contributes O(1/M^2).
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> groups;
  for (const auto &e : f.entries) {
    std::int64_t g = std::gcd(e[0], e[1]);
    std::int64_t c = e[0] / g;
    std::int64_t d = e[1] / g;
    if (c < 0 || (c == 0 && d < 0)) {
      c = -c;
      d = -d;
      g = -g;
    }
    groups[{c, d}].push_back(g);
  }
  NormLimit out;
  for (const auto &[dir, mult] : groups) {
    for (auto p : mult) {
      for (auto q : mult) {
        const std::int64_t g = std::gcd(p, q);
        out.limit += Rat(BigInt(g) * g, BigInt(p) * BigInt(q));
      }
    }
  }
  out.limit /= Rat(12);

  for (std::int64_t m = scale; m < scale + 10000; ++m) {
    std::vector<std::int64_t> t{m * direction[0], m * direction[1] + 1};
    if (tuple_gcd(t) != 1 || !admissible(f, t)) {
      continue;
    }
    IntList inst = from_multiset(evaluate_entries(f, t));
    if (inst.empty() || (f.height && inst.height() != *f.height)) {
      continue;
    }
    out.params = t;
    out.instance = inst;
    out.instance_norm = norm(inst);
    return out;
  }
  throw FamilyError(FamilyErrorKind::ConstraintViolation, "no admissible instance along the direction");
}

} // namespace fratio
