#include "fratio/catalog.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "fratio/criteria.hpp"
#include "fratio/json_io.hpp"
#include "fratio/parallel.hpp"
#include "fratio/reducibility.hpp"
#include "fratio/step_functions.hpp"

namespace fratio {

extern const char *const kBuiltinCatalogText;

namespace {

const std::set<std::string, std::less<>> kScopes{"norms", "families", "table", "external"};

// Multiset of forms with opposite pairs (c, -c) removed.
std::map<Coeffs, int> cancelled_forms(const std::vector<Coeffs> &forms) {
  std::map<Coeffs, int> count;
  for (const auto &f : forms) {
    Coeffs neg(f.size());
    std::transform(f.begin(), f.end(), neg.begin(), [](std::int64_t c) { return -c; });
    auto it = count.find(neg);
    if (it != count.end()) {
      if (--it->second == 0) {
        count.erase(it);
      }
    } else {
      ++count[f];
    }
  }
  return count;
}

std::string params_string(std::span<const std::int64_t> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    s += (i ? "," : "") + std::to_string(t[i]);
  }
  return s + ")";
}

std::string range_string(const FamilyVerdict &v) {
  return "values " + std::to_string(v.min_value) + ".." + std::to_string(v.max_value) + " over " +
         std::to_string(v.samples) + " samples";
}

Coeffs form_from_text(const std::string &text, int d) {
  const AffineList f = parse_family(text, d);
  if (f.entries.size() != 1 || f.d != d) {
    throw CatalogError("expected a single linear form in " + std::to_string(d) + " parameters: " + text);
  }
  return f.entries.front();
}

IntList list_field(const Json &j, const char *key) { return list_from_json(j.at(key)); }

CatalogEntry parse_entry(const Json &j) {
  CatalogEntry e;
  e.id = j.at("id").get<std::string>();
  e.scope = j.at("scope").get<std::string>();
  if (!kScopes.contains(e.scope)) {
    throw CatalogError(e.id + ": unknown scope " + e.scope);
  }
  const auto kind = j.at("kind").get<std::string>();
  if (j.contains("height")) {
    e.height = j.at("height").get<int>();
  }
  if (j.contains("correction")) {
    const auto &c = j.at("correction");
    e.correction = Correction{c.at("field").get<std::string>(), c.at("printed").get<std::string>(),
                              c.at("note").get<std::string>()};
  }
  if (j.contains("certify")) {
    e.certify = CertifyTarget{j.at("certify").at("params").get<std::vector<std::int64_t>>(),
                              j.at("certify").at("p").get<std::int64_t>()};
  }
  if (kind == "list") {
    e.kind = CatalogEntry::Kind::List;
    e.list = list_field(j, "list");
    if (j.contains("norm")) {
      e.norm = rat_from_json(j.at("norm"));
    }
    e.sporadic = j.value("sporadic", false);
  } else if (kind == "family") {
    e.kind = CatalogEntry::Kind::Family;
    e.family_text = j.at("family").get<std::string>();
    const AffineList shape = parse_family(e.family_text);
    std::vector<LinearConstraint> cs;
    if (j.contains("constraints")) {
      cs = constraints_from_json(j.at("constraints"), shape.d);
    }
    e.family = AffineList::make(shape.d, shape.entries, std::move(cs), j.value("coprime", false), e.height);
    for (const auto &part : j.value("identity", std::vector<std::string>{})) {
      e.identity.push_back(parse_family(part, shape.d));
    }
    e.exact = j.value("exact", false);
    for (const auto &p : j.value("restricted_points", std::vector<std::string>{})) {
      e.restricted_points.push_back(Rat::parse(p));
    }
    if (j.contains("sampled")) {
      e.sampled = SampledPlan{j.at("sampled").at("bound").get<std::int64_t>(), j.at("sampled").at("n_max").get<long>()};
    }
    e.expect_fail = j.value("expect", "pass") == "fails";
    if (j.contains("norm_limit")) {
      e.norm_limit_direction = j.at("norm_limit").at("direction").get<std::vector<std::int64_t>>();
      e.norm_limit = rat_from_json(j.at("norm_limit").at("value"));
    }
  } else if (kind == "row") {
    e.kind = CatalogEntry::Kind::Row;
    e.row = j.at("row").get<int>();
    e.a = list_field(j, "a");
    e.b = list_field(j, "b");
    e.base = list_field(j, "base");
  } else if (kind == "link") {
    e.kind = CatalogEntry::Kind::Link;
    e.target = j.at("family").get<std::string>();
    e.a = list_field(j, "a");
    e.b = list_field(j, "b");
    e.alpha = j.at("alpha").get<Coeffs>();
    e.beta = j.at("beta").get<Coeffs>();
  } else if (kind == "span") {
    e.kind = CatalogEntry::Kind::Span;
    e.target = j.at("family").get<std::string>();
    for (const auto &p : j.at("parts")) {
      e.parts.push_back(list_from_json(p));
    }
    for (const auto &c : j.at("coefficients")) {
      e.coefficients.push_back(form_from_text(c.get<std::string>(), 2));
    }
    if (e.parts.size() != e.coefficients.size()) {
      throw CatalogError(e.id + ": parts and coefficients differ in number");
    }
  } else {
    throw CatalogError(e.id + ": unknown kind " + kind);
  }
  return e;
}

CheckResult result(const CatalogEntry &e, std::string check, bool passed, std::string detail = {}) {
  return CheckResult{e.id, std::move(check), passed, false, std::move(detail)};
}

std::int64_t restricted_minimum(const AffineList &f, std::span<const Rat> points) {
  std::vector<Form2> forms;
  for (const auto &c : f.entries) {
    forms.push_back({c[0], c[1]});
  }
  const std::int64_t L = (static_cast<std::int64_t>(forms.size()) + *f.height) / 2;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto &y : points) {
    for (const auto &x : points) {
      best = std::min(best, to_int64(floor_sum_2d(forms, x, y)) + L);
    }
  }
  return best;
}

void certify_check(const CatalogEntry &e, const AffineList &f, std::vector<CheckResult> &out) {
  const IntList inst = instantiate(f, e.certify->params);
  const RatioVerdict r = is_integral_ratio(inst);
  const IrreducibilityCertificate c = certify_irreducible(inst, e.certify->p);
  out.push_back(result(e, "certify", r.integral_with_height(2) && c.irreducible(),
                       inst.to_string() + " at " + params_string(e.certify->params) + ", p = " +
                           std::to_string(e.certify->p) + ": " + to_string(c.conclusion) +
                           (c.pair_exclusion.empty() ? "" : " (" + c.pair_exclusion + ")")));
}

void printed_check(const CatalogEntry &e, std::vector<CheckResult> &out) {
  const Correction &c = *e.correction;
  std::string detail = c.field + " printed as " + c.printed + ": " + c.note;
  bool printed_ok = false;
  try {
    if (c.field == "family") {
      const AffineList f = parse_family(c.printed);
      AffineList::make(f.d, f.entries, {}, true, e.height);
      printed_ok = true;
    } else {
      const IntList printed = IntList::parse(c.printed);
      if (c.field == "list") {
        printed_ok = e.norm && norm(printed) == *e.norm;
      } else if (c.field == "base") {
        printed_ok = printed == e.base;
      } else if (c.field == "b") {
        printed_ok = printed == e.b;
      }
    }
  } catch (const std::exception &ex) {
    detail += " [" + std::string(ex.what()) + "]";
  }
  out.push_back(CheckResult{e.id, "printed", printed_ok, true, detail});
}

void list_checks(const CatalogEntry &e, std::vector<CheckResult> &out) {
  if (e.norm) {
    const Rat n = norm(e.list);
    const Rat ni = norm_by_integral(e.list);
    out.push_back(result(e, "norm", n == *e.norm, e.list.to_string() + " has norm " + n.to_string()));
    out.push_back(result(e, "norm_integral", ni == *e.norm, "integral form gives " + ni.to_string()));
  }
  if (e.height) {
    const RatioVerdict r = is_integral_ratio(e.list);
    std::string detail = e.list.to_string() + " is " + to_string(r.status);
    if (r.integral()) {
      detail += " of height " + std::to_string(r.height);
    }
    out.push_back(result(e, "integral", r.integral_with_height(*e.height), detail));
  }
}

void family_checks(const CatalogEntry &e, std::vector<CheckResult> &out) {
  const AffineList &f = *e.family;
  if (!e.identity.empty()) {
    const IdentityCheck c = verify_decomposition_identity(e);
    out.push_back(result(e, "identity", c.holds(), c.detail));
  }
  if (e.exact) {
    const FamilyVerdict v = verify_family_exact(f);
    std::string detail = to_string(v.status) + ", " + range_string(v);
    if (v.point) {
      detail += ", value " + std::to_string(v.value) + " at (" + v.point->x.to_string() + ", " +
                v.point->y.to_string() + ")";
    }
    out.push_back(result(e, "exact", v.passed() != e.expect_fail, detail));
    if (!e.restricted_points.empty()) {
      const std::int64_t m = restricted_minimum(f, e.restricted_points);
      out.push_back(result(e, "restricted", m == v.min_value,
                           "grid minimum " + std::to_string(m) + ", sweep minimum " + std::to_string(v.min_value)));
    }
  }
  if (e.sampled) {
    const FamilyVerdict v = verify_family_sampled(f, e.sampled->bound, e.sampled->n_max);
    std::string detail = to_string(v.status) + ", " + std::to_string(v.instances_checked) + " instances";
    if (v.instance) {
      detail += ", first failure " + v.instance->to_string() + " at " + params_string(v.params);
    }
    out.push_back(result(e, "sampled", v.passed() != e.expect_fail, detail));
  }
  if (e.norm_limit) {
    const NormLimit nl = family_norm_limit(f, *e.norm_limit_direction);
    out.push_back(result(e, "norm_limit", nl.limit == *e.norm_limit,
                         "limit " + nl.limit.to_string() + ", instance " + nl.instance.to_string() + " has norm " +
                             nl.instance_norm.approx(8)));
  }
  if (e.certify) {
    certify_check(e, f, out);
  }
}

void row_checks(const CatalogEntry &e, std::vector<CheckResult> &out) {
  const RowReport r = verify_table_row(e);
  if (!r.input) {
    out.push_back(result(e, "build", false, r.error));
    return;
  }
  out.push_back(result(e, "monotone", r.monotone, e.b.to_string()));
  out.push_back(result(e, "base", r.base_matches, "recomputed " + r.input->base.to_string()));
  out.push_back(result(e, "base_integral", r.base_integral,
                       "base height " + std::to_string(r.input->base_height)));
  out.push_back(result(e, "family", r.family && r.family->passed(),
                       r.family ? to_string(r.family->status) + ", " + range_string(*r.family) : ""));
  if (e.certify) {
    certify_check(e, emit_family(*r.input), out);
  }
}

void link_checks(const Catalog &catalog, const CatalogEntry &e, std::vector<CheckResult> &out) {
  const CatalogEntry &target = catalog.at(e.target);
  const AffineList emitted = emit_family(build_input(e.a, e.b));
  const int d = target.family->d;
  if (e.alpha.size() != static_cast<std::size_t>(d) || e.beta.size() != static_cast<std::size_t>(d)) {
    throw CatalogError(e.id + ": alpha and beta must have " + std::to_string(d) + " coefficients");
  }
  std::vector<Coeffs> mapped;
  for (const auto &c : emitted.entries) {
    Coeffs m(static_cast<std::size_t>(d));
    for (std::size_t p = 0; p < m.size(); ++p) {
      m[p] = c[0] * e.alpha[p] + c[1] * e.beta[p];
    }
    mapped.push_back(std::move(m));
  }
  const bool same = cancelled_forms(mapped) == cancelled_forms(target.family->entries);
  out.push_back(result(e, "link", same, emitted.to_string() + " against " + target.family_text));
  const FamilyVerdict v = verify_family_exact(emitted);
  out.push_back(result(e, "link_family", v.passed(), to_string(v.status) + ", " + range_string(v)));
}

void span_checks(const Catalog &catalog, const CatalogEntry &e, std::vector<CheckResult> &out) {
  const CatalogEntry &target = catalog.at(e.target);
  Coeffs sum(2, 0);
  std::vector<Coeffs> forms;
  for (std::size_t i = 0; i < e.parts.size(); ++i) {
    const auto &x = e.coefficients[i];
    for (std::size_t p = 0; p < 2; ++p) {
      sum[p] += x[p] * e.parts[i].sum();
    }
    for (auto v : e.parts[i]) {
      forms.push_back({v * x[0], v * x[1]});
    }
  }
  const bool balanced = sum[0] == 0 && sum[1] == 0;
  const bool same = cancelled_forms(forms) == cancelled_forms(target.family->entries);
  out.push_back(result(e, "span", balanced && same,
                       std::string(balanced ? "sum constraint holds" : "sum constraint fails") +
                           (same ? ", reproduces " : ", differs from ") + target.id));
}

} // namespace

Catalog Catalog::parse(std::string_view json) {
  Catalog c;
  try {
    const Json doc = Json::parse(json);
    if (!doc.is_array()) {
      throw CatalogError("catalog must be a JSON array");
    }
    std::set<std::string> ids;
    for (const auto &j : doc) {
      CatalogEntry e = parse_entry(j);
      if (!ids.insert(e.id).second) {
        throw CatalogError("duplicate catalog id " + e.id);
      }
      c.entries_.push_back(std::move(e));
    }
  } catch (const CatalogError &) {
    throw;
  } catch (const std::exception &ex) {
    throw CatalogError(std::string("malformed catalog: ") + ex.what());
  }
  for (const auto &e : c.entries_) {
    if (!e.target.empty()) {
      const CatalogEntry *t = c.find(e.target);
      if (!t || t->kind != CatalogEntry::Kind::Family) {
        throw CatalogError(e.id + ": unknown family " + e.target);
      }
    }
  }
  return c;
}

const Catalog &Catalog::builtin() {
  static const Catalog c = parse(kBuiltinCatalogText);
  return c;
}

const CatalogEntry *Catalog::find(std::string_view id) const {
  for (const auto &e : entries_) {
    if (e.id == id) {
      return &e;
    }
  }
  return nullptr;
}

const CatalogEntry &Catalog::at(std::string_view id) const {
  if (const CatalogEntry *e = find(id)) {
    return *e;
  }
  throw CatalogError("no catalog entry " + std::string(id));
}

const CatalogEntry &Catalog::table_row(int row) const {
  for (const auto &e : entries_) {
    if (e.kind == CatalogEntry::Kind::Row && e.row == row) {
      return e;
    }
  }
  throw CatalogError("no table row " + std::to_string(row));
}

std::vector<IntList> Catalog::sporadic_lists() const {
  std::vector<IntList> out;
  for (const auto &e : entries_) {
    if (e.kind == CatalogEntry::Kind::List && e.sporadic) {
      out.push_back(e.list);
    }
  }
  return out;
}

std::string to_string(CatalogEntry::Kind k) {
  switch (k) {
  case CatalogEntry::Kind::List:
    return "list";
  case CatalogEntry::Kind::Family:
    return "family";
  case CatalogEntry::Kind::Row:
    return "row";
  case CatalogEntry::Kind::Link:
    return "link";
  case CatalogEntry::Kind::Span:
    return "span";
  }
  return "list";
}

IdentityCheck verify_decomposition_identity(const AffineList &lhs, std::span<const AffineList> parts,
                                            std::int64_t grid) {
  IdentityCheck out;
  std::vector<Coeffs> rhs;
  for (const auto &p : parts) {
    if (p.d != lhs.d) {
      out.detail = "parts use a different parameter count";
      return out;
    }
    rhs.insert(rhs.end(), p.entries.begin(), p.entries.end());
  }
  out.symbolic = cancelled_forms(rhs) == cancelled_forms(lhs.entries);
  if (!out.symbolic) {
    out.detail = "concatenated parts differ from the family";
    return out;
  }

  const std::int64_t side = 2 * grid + 1;
  std::int64_t total = 1;
  for (int p = 0; p < lhs.d; ++p) {
    total *= side;
  }
  // 0 skipped, 1 checked, 2 failed
  std::vector<std::uint8_t> outcome(static_cast<std::size_t>(total), 0);
  auto tuple_at = [&](std::int64_t idx) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(lhs.d));
    for (int p = lhs.d - 1; p >= 0; --p) {
      t[static_cast<std::size_t>(p)] = idx % side - grid;
      idx /= side;
    }
    return t;
  };
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs())
  for (std::int64_t i = 0; i < total; ++i) {
    const auto t = tuple_at(i);
    std::int64_t g = 0;
    for (auto v : t) {
      g = std::gcd(g, v);
    }
    if (g != 1 || !admissible(lhs, t)) {
      continue;
    }
    const IntList whole = from_multiset(evaluate_entries(lhs, t));
    if (whole.empty() || (lhs.height && whole.height() != *lhs.height)) {
      continue;
    }
    IntList joined;
    bool ok = true;
    for (const auto &p : parts) {
      const IntList piece = from_multiset(evaluate_entries(p, t));
      ok = ok && !piece.empty() && is_integral_ratio(piece).integral_with_height(1);
      joined = concat(joined, piece);
    }
    ok = ok && joined == whole && is_integral_ratio(whole).integral();
    outcome[static_cast<std::size_t>(i)] = ok ? 1 : 2;
  }
  for (std::int64_t i = 0; i < total; ++i) {
    const auto o = outcome[static_cast<std::size_t>(i)];
    if (o == 0) {
      continue;
    }
    ++out.instances;
    if (o == 2 && !out.failing_params) {
      out.failing_params = tuple_at(i);
    }
  }
  out.detail = "symbolic match, " + std::to_string(out.instances) + " instances with |t| <= " + std::to_string(grid);
  if (out.failing_params) {
    out.detail += ", fails at " + params_string(*out.failing_params);
  } else if (out.instances == 0) {
    out.detail += ", none of the claimed height";
  }
  return out;
}

IdentityCheck verify_decomposition_identity(const CatalogEntry &e, std::int64_t grid) {
  if (!e.family || e.identity.empty()) {
    throw CatalogError(e.id + " carries no decomposition identity");
  }
  return verify_decomposition_identity(*e.family, e.identity, grid);
}

RowReport verify_table_row(const CatalogEntry &row, bool with_proof) {
  RowReport r;
  r.monotone = is_monotone(row.b);
  try {
    r.input = build_input(row.a, row.b);
  } catch (const std::invalid_argument &ex) {
    r.error = ex.what();
    return r;
  }
  r.base_matches = r.input->base == row.base;
  r.base_integral = r.input->base_height == 1;
  r.family = verify_family_exact(emit_family(*r.input));
  if (with_proof) {
    r.proof = check_proof_inequalities(*r.input);
  }
  return r;
}

std::size_t CatalogReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.passed && !c.flagged; }));
}

std::vector<CheckResult> verify_entry(const Catalog &catalog, const CatalogEntry &e) {
  std::vector<CheckResult> out;
  try {
    switch (e.kind) {
    case CatalogEntry::Kind::List:
      list_checks(e, out);
      break;
    case CatalogEntry::Kind::Family:
      family_checks(e, out);
      break;
    case CatalogEntry::Kind::Row:
      row_checks(e, out);
      break;
    case CatalogEntry::Kind::Link:
      link_checks(catalog, e, out);
      break;
    case CatalogEntry::Kind::Span:
      span_checks(catalog, e, out);
      break;
    }
  } catch (const std::exception &ex) {
    out.push_back(result(e, "error", false, ex.what()));
  }
  if (e.correction) {
    printed_check(e, out);
  }
  return out;
}

CatalogReport verify_catalog(const Catalog &catalog, std::string_view scope) {
  if (scope != "all" && !kScopes.contains(scope)) {
    throw CatalogError("unknown scope " + std::string(scope));
  }
  std::vector<const CatalogEntry *> selected;
  for (const auto &e : catalog.entries()) {
    if (scope == "all" || e.scope == scope) {
      selected.push_back(&e);
    }
  }
  std::vector<std::vector<CheckResult>> parts(selected.size());
  const auto n = static_cast<std::int64_t>(selected.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs())
  for (std::int64_t i = 0; i < n; ++i) {
    parts[static_cast<std::size_t>(i)] = verify_entry(catalog, *selected[static_cast<std::size_t>(i)]);
  }
  CatalogReport rep;
  rep.entries = selected.size();
  for (auto &p : parts) {
    rep.checks.insert(rep.checks.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return rep;
}

} // namespace fratio
