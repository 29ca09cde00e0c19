#include "fratio/constructor.hpp"

#include <algorithm>
#include <numeric>

#include "fratio/criteria.hpp"
#include "fratio/step_functions.hpp"

namespace fratio {

namespace {

// The function x -> psi(c x + e) for integer c != 0, right-continuous in x.
struct AffinePsi {
  Rat c;
  Rat e;
};

Rat psi_right(const AffinePsi &t, const Rat &x) {
  const Rat v = t.c * x + t.e;
  if (v.is_integer()) {
    return Rat(t.c.sign() > 0 ? 1 : -1, 2);
  }
  return psi(v);
}

std::vector<Rat> jump_points(const std::vector<AffinePsi> &terms) {
  const Rat zero;
  const Rat one(1);
  std::vector<Rat> xs{zero};
  for (const auto &t : terms) {
    const Rat lo = t.e + (t.c.sign() < 0 ? t.c : zero);
    const Rat hi = t.e + (t.c.sign() > 0 ? t.c : zero);
    for (BigInt m = lo.floor(); m <= hi.floor(); ++m) {
      const Rat x = (Rat(m) - t.e) / t.c;
      if (x >= zero && x < one) {
        xs.push_back(x);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// First x in [0, 1) where sum of terms leaves {-D/2, ..., D/2}.
std::optional<Rat> first_out_of_range(const std::vector<AffinePsi> &terms, int D) {
  const Rat half_d(D, 2);
  for (const auto &x : jump_points(terms)) {
    Rat total;
    for (const auto &t : terms) {
      total += psi_right(t, x);
    }
    const Rat k = total + half_d;
    if (!k.is_integer() || k.sign() < 0 || k > Rat(D)) {
      return x;
    }
  }
  return std::nullopt;
}

void add_terms(std::vector<AffinePsi> &terms, const IntList &list, const Rat &scale, const Rat &offset_per_entry) {
  for (auto v : list) {
    const Rat r(static_cast<long>(v));
    terms.push_back({r * scale, r * offset_per_entry});
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

} // namespace

std::string to_string(ConstructErrorKind k) {
  switch (k) {
  case ConstructErrorKind::NotPrimitive:
    return "not_primitive";
  case ConstructErrorKind::NotMonotone:
    return "not_monotone";
  case ConstructErrorKind::ZeroSum:
    return "zero_sum";
  case ConstructErrorKind::SumsNotCoprime:
    return "sums_not_coprime";
  case ConstructErrorKind::BaseNotIntegral:
    return "base_not_integral";
  }
  return "invalid";
}

ConstructionInput build_input(const IntList &a, const IntList &b) {
  if (a.empty() || b.empty()) {
    throw ListError(ListErrorKind::EmptyList, "construction needs nonempty lists");
  }
  if (!a.is_primitive() || !b.is_primitive()) {
    throw ConstructError(ConstructErrorKind::NotPrimitive,
                         (a.is_primitive() ? b : a).to_string() + " is not primitive");
  }
  if (!is_monotone(b)) {
    throw ConstructError(ConstructErrorKind::NotMonotone, b.to_string() + " is not monotone");
  }
  ConstructionInput t;
  t.a = a;
  t.b = b;
  t.u = a.sum();
  t.v = b.sum();
  if (t.u == 0 || t.v == 0) {
    throw ConstructError(ConstructErrorKind::ZeroSum, "both sums must be nonzero");
  }
  if (std::gcd(t.u, t.v) != 1) {
    throw ConstructError(ConstructErrorKind::SumsNotCoprime,
                         "sums " + std::to_string(t.u) + " and " + std::to_string(t.v) + " are not coprime");
  }
  t.base = concat(dilate(a, t.v), dilate(b, -t.u));
  const RatioVerdict r = is_integral_ratio(t.base);
  if (!r.integral()) {
    throw ConstructError(ConstructErrorKind::BaseNotIntegral,
                         "base " + t.base.to_string() + " is " + to_string(r.status));
  }
  t.base_height = r.height;
  return t;
}

AffineList emit_family(const ConstructionInput &t) {
  std::vector<Coeffs> entries;
  for (auto v : t.a) {
    entries.push_back({v, 0});
  }
  for (auto v : t.b) {
    entries.push_back({0, v});
  }
  entries.push_back({-t.u, -t.v});
  return AffineList::make(2, std::move(entries), {}, true, t.base_height + 1);
}

ProofChecks check_proof_inequalities(const ConstructionInput &t) {
  ProofChecks out;
  const int D = t.base_height;
  const Rat u(static_cast<long>(t.u));
  const Rat v(static_cast<long>(t.v));

  std::vector<AffinePsi> base_terms;
  add_terms(base_terms, t.a, v, Rat());
  add_terms(base_terms, t.b, -u, Rat());
  out.base_witness = first_out_of_range(base_terms, D);
  out.base_range = !out.base_witness;

  std::vector<Form2> forms;
  for (auto x : t.a) {
    forms.push_back({x, 0});
  }
  for (auto y : t.b) {
    forms.push_back({0, y});
  }
  forms.push_back({-t.u, -t.v});
  // With zero coefficient sum, sum_i psi(f_i) = l/2 + sum_i floor(f_i).
  const auto l = static_cast<std::int64_t>(forms.size());
  const std::int64_t lo = -floor_div(D + 1 + l, 2);
  const std::int64_t hi = floor_div(D + 1 - l, 2);
  const ArrangementScan scan = scan_arrangement(forms, lo, hi);
  out.plane_samples = scan.samples;
  out.plane_witness = scan.first_violation;
  out.plane_range = !scan.first_violation && (D + 1 + l) % 2 == 0;

  const std::int64_t uv = t.u * t.v;
  const std::int64_t count = uv < 0 ? -uv : uv;
  out.shift_range = true;
  for (std::int64_t k = 0; k < count && out.shift_range; ++k) {
    std::vector<AffinePsi> terms;
    add_terms(terms, t.a, v, Rat());
    // b(-u(x + k/uv)) = sum_j psi(-u b_j x - b_j k / v)
    add_terms(terms, t.b, -u, -Rat(static_cast<long>(k)) / v);
    if (auto w = first_out_of_range(terms, D)) {
      out.shift_range = false;
      out.shift_witness = w;
      out.shift_k = k;
    }
  }
  return out;
}

} // namespace fratio
