#include "fratio/json_io.hpp"

#include <stdexcept>

namespace fratio {

namespace {

Json optional_rat(const std::optional<Rat> &r) { return r ? to_json(*r) : Json(nullptr); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Json constraint_json(const LinearConstraint &c) {
  return Json::array({c.coeffs, c.rel == Relation::Positive ? ">0" : ">=0"});
}

LinearConstraint constraint_from(const Json &j, int d) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_string()) {
    throw std::invalid_argument("constraint must be [[coeffs], \">0\" | \">=0\"]");
  }
  LinearConstraint c;
  c.coeffs = j[0].get<Coeffs>();
  if (c.coeffs.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("constraint has the wrong number of coefficients");
  }
  const auto rel = j[1].get<std::string>();
  if (rel == ">0") {
    c.rel = Relation::Positive;
  } else if (rel == ">=0") {
    c.rel = Relation::NonNegative;
  } else {
    throw std::invalid_argument("unknown relation \"" + rel + "\"");
  }
  return c;
}

} // namespace

Json to_json(const Rat &r) { return r.to_string(); }

Json to_json(const IntList &a) { return Json(std::vector<std::int64_t>(a.begin(), a.end())); }

Json to_json(const Point2 &p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const RatioVerdict &v) {
  Json j{{"status", to_string(v.status)}};
  if (v.status == RatioVerdict::Status::Invalid) {
    j["reason"] = v.reason;
    return j;
  }
  j["height"] = v.height;
  if (v.witness_x) {
    j["witness_x"] = to_json(*v.witness_x);
  }
  if (!v.value_range.empty()) {
    j["value_range"] = std::vector<std::int64_t>(v.value_range.begin(), v.value_range.end());
  }
  return j;
}

Json to_json(const AffineList &f) {
  Json cs = Json::array();
  for (const auto &c : f.constraints) {
    cs.push_back(constraint_json(c));
  }
  Json j{{"d", f.d}, {"entries", f.entries}, {"constraints", cs}, {"coprime", f.coprime}};
  if (f.height) {
    j["height"] = *f.height;
  }
  j["text"] = f.to_string();
  return j;
}

Json to_json(const FamilyVerdict &v) {
  Json j{{"status", to_string(v.status)}};
  if (v.status == FamilyVerdict::Status::VerifiedExact || v.status == FamilyVerdict::Status::Fails) {
    if (v.point) {
      j["point"] = to_json(*v.point);
      j["value"] = v.value;
    }
    j["min_value"] = v.min_value;
    j["max_value"] = v.max_value;
    j["samples"] = v.samples;
    return j;
  }
  j["bound"] = v.bound;
  j["instances_checked"] = v.instances_checked;
  j["instances_skipped"] = v.instances_skipped;
  if (v.status == FamilyVerdict::Status::FailsInstance) {
    j["params"] = v.params;
    j["instance"] = v.instance ? to_json(*v.instance) : Json(nullptr);
    j["witness_x"] = optional_rat(v.witness_x);
    j["n"] = v.n ? Json(*v.n) : Json(nullptr);
  }
  return j;
}

Json to_json(const ConstructionInput &t) {
  return Json{{"a", to_json(t.a)},       {"b", to_json(t.b)},
              {"u", t.u},                {"v", t.v},
              {"base", to_json(t.base)}, {"base_height", t.base_height}};
}

Json to_json(const ProofChecks &c) {
  Json j{{"holds", c.holds()},
         {"base_range", c.base_range},
         {"plane_range", c.plane_range},
         {"shift_range", c.shift_range},
         {"plane_samples", c.plane_samples}};
  if (c.base_witness) {
    j["base_witness"] = to_json(*c.base_witness);
  }
  if (c.plane_witness) {
    j["plane_witness"] = to_json(*c.plane_witness);
  }
  if (c.shift_witness) {
    j["shift_witness"] = to_json(*c.shift_witness);
    j["shift_k"] = c.shift_k;
  }
  return j;
}

Json to_json(const Decomposition &d) {
  return Json{{"b", to_json(d.b)}, {"c", to_json(d.c)}, {"canceled", d.canceled}};
}

Json to_json(const IrreducibilityCertificate &c) {
  Json j{{"p", c.p},
         {"sporadic_pair", c.sporadic_pair},
         {"sporadic_family_cases", c.sporadic_family},
         {"family_pair_applicable", c.family_pair_applicable},
         {"family_pair_cases", c.family_pair},
         {"pair_exclusion", c.pair_exclusion},
         {"conclusion", to_string(c.conclusion)},
         {"reason", c.reason}};
  if (c.decomposition) {
    j["decomposition"] = to_json(*c.decomposition);
  }
  return j;
}

Json to_json(const SmallNormReport &r) {
  auto lists = [](const std::vector<IntList> &ls) {
    Json out = Json::array();
    for (const auto &l : ls) {
      out.push_back(to_json(l));
    }
    return out;
  };
  Json below = Json::array();
  for (const auto &[l, n] : r.below) {
    below.push_back(Json{{"list", to_json(l)}, {"norm", to_json(n)}});
  }
  return Json{{"scanned", r.scanned},
              {"below", below},
              {"unexplained", lists(r.unexplained)},
              {"odd_balanced_below_quarter", lists(r.odd_balanced_below_quarter)},
              {"even_balanced_below", lists(r.even_balanced_below)}};
}

Json to_json(const RowReport &r) {
  Json j{{"ok", r.ok()}};
  if (!r.input) {
    j["error"] = r.error;
    return j;
  }
  j["input"] = to_json(*r.input);
  j["monotone"] = r.monotone;
  j["base_matches"] = r.base_matches;
  j["base_integral"] = r.base_integral;
  if (r.family) {
    j["family"] = to_json(*r.family);
  }
  if (r.proof) {
    j["proof"] = to_json(*r.proof);
  }
  return j;
}

Json to_json(const CatalogReport &r) {
  Json checks = Json::array();
  for (const auto &c : r.checks) {
    Json j{{"entry", c.entry}, {"check", c.check}, {"passed", c.passed}};
    if (c.flagged) {
      j["flagged"] = true;
    }
    if (!c.detail.empty()) {
      j["detail"] = c.detail;
    }
    checks.push_back(std::move(j));
  }
  return Json{{"passed", r.passed()}, {"entries", r.entries}, {"failures", r.failures()}, {"checks", checks}};
}

Rat rat_from_json(const Json &j) {
  if (j.is_number_integer()) {
    return Rat(static_cast<long>(j.get<std::int64_t>()));
  }
  if (!j.is_string()) {
    throw std::invalid_argument("rational must be an integer or a \"num/den\" string");
  }
  return Rat::parse(j.get<std::string>());
}

IntList list_from_json(const Json &j) {
  if (!j.is_array()) {
    throw std::invalid_argument("list must be a JSON array of integers");
  }
  std::vector<std::int64_t> raw;
  for (const auto &v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument("list must be a JSON array of integers");
    }
    raw.push_back(v.get<std::int64_t>());
  }
  return IntList::make(std::span<const std::int64_t>(raw));
}

RatioVerdict verdict_from_json(const Json &j) {
  RatioVerdict v;
  const auto status = field(j, "status").get<std::string>();
  if (status == "integral") {
    v.status = RatioVerdict::Status::Integral;
  } else if (status == "not_integral") {
    v.status = RatioVerdict::Status::NotIntegral;
  } else if (status == "invalid") {
    v.status = RatioVerdict::Status::Invalid;
  } else {
    throw std::invalid_argument("unknown verdict status \"" + status + "\"");
  }
  if (j.contains("reason")) {
    v.reason = j.at("reason").get<std::string>();
  }
  if (j.contains("height")) {
    v.height = j.at("height").get<int>();
  }
  if (j.contains("witness_x")) {
    v.witness_x = rat_from_json(j.at("witness_x"));
  }
  if (j.contains("value_range")) {
    for (const auto &x : j.at("value_range")) {
      v.value_range.insert(x.get<std::int64_t>());
    }
  }
  return v;
}

std::vector<LinearConstraint> constraints_from_json(const Json &j, int d) {
  if (!j.is_array()) {
    throw std::invalid_argument("constraints must be an array");
  }
  std::vector<LinearConstraint> out;
  if (j.size() == 2 && j[0].is_array() && j[1].is_string()) {
    out.push_back(constraint_from(j, d));
    return out;
  }
  for (const auto &c : j) {
    out.push_back(constraint_from(c, d));
  }
  return out;
}

AffineList family_from_json(const Json &j) {
  const int d = field(j, "d").get<int>();
  const auto entries = field(j, "entries").get<std::vector<Coeffs>>();
  std::vector<LinearConstraint> cs;
  if (j.contains("constraints")) {
    cs = constraints_from_json(j.at("constraints"), d);
  }
  const bool coprime = j.value("coprime", false);
  std::optional<int> height;
  if (j.contains("height") && !j.at("height").is_null()) {
    height = j.at("height").get<int>();
  }
  return AffineList::make(d, entries, std::move(cs), coprime, height);
}

} // namespace fratio
