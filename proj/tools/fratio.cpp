// fratio: command-line front end.
//
// Exit codes: 0 verified, 1 refuted (witness printed), 2 invalid input,
// 3 inconclusive (reduce / certify only), 4 internal inconsistency.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fratio/affine_family.hpp"
#include "fratio/catalog.hpp"
#include "fratio/constructor.hpp"
#include "fratio/criteria.hpp"
#include "fratio/enumerate.hpp"
#include "fratio/json_io.hpp"
#include "fratio/parallel.hpp"
#include "fratio/reducibility.hpp"
#include "fratio/step_functions.hpp"

using namespace fratio;

namespace {

enum Exit { kPass = 0, kRefuted = 1, kInvalid = 2, kInconclusive = 3, kInternal = 4 };

struct Options {
  bool json = false;
  int jobs = 0;

  std::string list;
  long oracle = 0;

  std::string a;
  std::string b;
  bool proof = false;

  std::string family;
  int height = 2;
  std::int64_t sample_bound = 0;
  long n_max = 30;

  std::int64_t cancel_bound = 0;
  int pairs = 2;
  std::int64_t p = 0;

  std::string scope = "all";
  bool verbose = false;

  int max_length = 5;
  int max_entry = 18;
  std::string threshold = "31/180";
};

std::string join(const std::set<std::int64_t> &s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  }
  return out + "}";
}

void emit(const Options &o, const Json &j, const std::string &human) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int run_check(const Options &o) {
  const IntList a = IntList::parse(o.list);
  const RatioVerdict v = is_integral_ratio(a);
  Json j = to_json(v);
  j = Json{{"list", to_json(a)}, {"verdict", j}};
  std::string human;
  switch (v.status) {
  case RatioVerdict::Status::Integral:
    human = "Integral, height " + std::to_string(v.height) + ", values " + join(v.value_range) + "\n";
    break;
  case RatioVerdict::Status::NotIntegral:
    human = "Not integral, height " + std::to_string(v.height) + ", witness x = " + v.witness_x->to_string() +
            " (F = " + floor_sum(a, *v.witness_x).get_str() + ")\n";
    break;
  case RatioVerdict::Status::Invalid:
    human = "Invalid: " + v.reason + "\n";
    break;
  }
  if (o.oracle > 0 && v.status != RatioVerdict::Status::Invalid) {
    const OracleResult r = factorial_oracle(a, o.oracle);
    j["oracle"] = Json{{"n_max", o.oracle}, {"integral", r.integral}};
    if (r.first_failure) {
      j["oracle"]["first_failure"] = *r.first_failure;
    }
    human += "Factorial oracle to n = " + std::to_string(o.oracle) + ": " +
             (r.integral ? std::string("all integral")
                         : "not integral at n = " + std::to_string(*r.first_failure)) + "\n";
    if (r.integral != v.integral()) {
      throw std::logic_error("factorial oracle disagrees with the floor-sum criterion");
    }
  }
  emit(o, j, human);
  return v.status == RatioVerdict::Status::Integral ? kPass : v.status == RatioVerdict::Status::NotIntegral ? kRefuted : kInvalid;
}

int run_norm(const Options &o) {
  const IntList a = IntList::parse(o.list);
  const Rat n = norm(a);
  emit(o, Json{{"list", to_json(a)}, {"norm", to_json(n)}, {"approx", n.approx()}},
       n.to_string() + "  (approx " + n.approx() + ")\n");
  return kPass;
}

int run_monotone(const Options &o) {
  const IntList b = IntList::parse(o.list);
  if (b.empty()) {
    throw std::invalid_argument("empty list");
  }
  std::optional<Rat> up;
  std::optional<Rat> down;
  for (const auto &x : breakpoints(b)) {
    const int j = monotone_jump(b, x);
    if (j > 0 && !up) {
      up = x;
    }
    if (j < 0 && !down) {
      down = x;
    }
  }
  const bool mono = !(up && down);
  Json j{{"list", to_json(b)}, {"monotone", mono}};
  std::string human = mono ? "Monotone\n" : "Not monotone: jumps up at x = " + up->to_string() +
                                                 " and down at x = " + down->to_string() + "\n";
  if (!mono) {
    j["up"] = to_json(*up);
    j["down"] = to_json(*down);
  }
  emit(o, j, human);
  return mono ? kPass : kRefuted;
}

int run_construct(const Options &o) {
  const ConstructionInput t = build_input(IntList::parse(o.a), IntList::parse(o.b));
  const AffineList f = emit_family(t);
  const FamilyVerdict v = verify_family_exact(f);
  Json j{{"input", to_json(t)}, {"family", to_json(f)}, {"verdict", to_json(v)}};
  std::string human = "base " + t.base.to_string() + ": integral, height " + std::to_string(t.base_height) +
                      "\nfamily " + f.to_string() + " (height " + std::to_string(*f.height) + ")\n" +
                      "exact sweep: " + to_string(v.status) + ", values " + std::to_string(v.min_value) + ".." +
                      std::to_string(v.max_value) + "\n";
  bool ok = v.passed();
  if (o.proof) {
    const ProofChecks c = check_proof_inequalities(t);
    j["proof"] = to_json(c);
    human += std::string("proof checks: base ") + (c.base_range ? "ok" : "FAIL") + ", plane " +
             (c.plane_range ? "ok" : "FAIL") + ", shifts " + (c.shift_range ? "ok" : "FAIL") + "\n";
    ok = ok && c.holds();
  }
  emit(o, j, human);
  return ok ? kPass : kRefuted;
}

AffineList read_family(const Options &o) {
  const auto first = o.family.find_first_not_of(" \t\n");
  if (first != std::string::npos && o.family[first] == '{') {
    return family_from_json(Json::parse(o.family));
  }
  const AffineList shape = parse_family(o.family);
  return AffineList::make(shape.d, shape.entries, {}, true, o.height);
}

int run_verify_family(const Options &o) {
  const AffineList f = read_family(o);
  FamilyVerdict v;
  if (o.sample_bound > 0) {
    v = verify_family_sampled(f, o.sample_bound, o.n_max);
  } else {
    v = verify_family_exact(f);
  }
  std::string human = f.to_string() + ": " + to_string(v.status);
  if (o.sample_bound > 0) {
    human += ", " + std::to_string(v.instances_checked) + " instances checked";
    if (v.instance) {
      human += "\nfailing instance " + v.instance->to_string() + " at parameters";
      for (auto t : v.params) {
        human += " " + std::to_string(t);
      }
      if (v.witness_x) {
        human += ", witness x = " + v.witness_x->to_string();
      }
      if (v.n) {
        human += ", first non-integral n = " + std::to_string(*v.n);
      }
    }
  } else {
    human += ", values " + std::to_string(v.min_value) + ".." + std::to_string(v.max_value) + " over " +
             std::to_string(v.samples) + " samples";
    if (v.point) {
      human += "\nwitness (x, y) = (" + v.point->x.to_string() + ", " + v.point->y.to_string() +
               "), value " + std::to_string(v.value);
    }
  }
  emit(o, Json{{"family", to_json(f)}, {"verdict", to_json(v)}}, human + "\n");
  return v.passed() ? kPass : kRefuted;
}

int run_reduce(const Options &o) {
  const IntList a = IntList::parse(o.list);
  const auto d = search_decomposition(a, o.cancel_bound, o.pairs);
  Json j{{"list", to_json(a)}, {"decomposition", d ? to_json(*d) : Json(nullptr)}};
  std::string human;
  if (d) {
    human = d->b.to_string() + " + " + d->c.to_string();
    if (!d->canceled.empty()) {
      human += "  (cancelled:";
      for (auto w : d->canceled) {
        human += " " + std::to_string(w);
      }
      human += ")";
    }
    human += "\n";
  } else {
    human = "No decomposition within the search bounds (inconclusive)\n";
  }
  emit(o, j, human);
  return d ? kPass : kInconclusive;
}

int run_certify(const Options &o) {
  const IntList a = IntList::parse(o.list);
  const IrreducibilityCertificate c = certify_irreducible(a, o.p);
  std::string human = to_string(c.conclusion);
  if (!c.pair_exclusion.empty()) {
    human += " (family pair excluded by " + c.pair_exclusion + ")";
  }
  if (!c.reason.empty()) {
    human += ": " + c.reason;
  }
  if (c.decomposition) {
    human += "\ndecomposition " + c.decomposition->b.to_string() + " + " + c.decomposition->c.to_string();
  }
  emit(o, Json{{"list", to_json(a)}, {"certificate", to_json(c)}}, human + "\n");
  return c.irreducible() ? kPass : kInconclusive;
}

int run_verify_catalog(const Options &o) {
  const CatalogReport r = verify_catalog(Catalog::builtin(), o.scope);
  std::string human;
  for (const auto &c : r.checks) {
    if (!o.verbose && c.passed && !c.flagged) {
      continue;
    }
    const char *tag = c.passed ? (c.flagged ? "NOTE" : "ok  ") : (c.flagged ? "NOTE" : "FAIL");
    human += std::string(tag) + "  " + c.entry + "  " + c.check + "  " + c.detail + "\n";
  }
  human += std::to_string(r.entries) + " entries, " + std::to_string(r.checks.size()) + " checks, " +
           std::to_string(r.failures()) + " failures\n";
  emit(o, to_json(r), human);
  return r.passed() ? kPass : kRefuted;
}

int run_enumerate(const Options &o) {
  const auto sporadics = Catalog::builtin().sporadic_lists();
  const SmallNormReport r = enumerate_small_norm(o.max_length, o.max_entry, Rat::parse(o.threshold), sporadics);
  std::string human = std::to_string(r.scanned) + " lists scanned, " + std::to_string(r.below.size()) +
                      " with norm below " + o.threshold + ", " + std::to_string(r.unexplained.size()) +
                      " unexplained\n";
  for (const auto &l : r.unexplained) {
    human += "  unexplained " + l.to_string() + "\n";
  }
  emit(o, to_json(r), human);
  return r.unexplained.empty() ? kPass : kRefuted;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Integral factorial ratios: checks, norms, families, constructions, reducibility"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--jobs", o.jobs, "Worker threads (default FRATIO_JOBS or all cores)")->check(CLI::PositiveNumber);

  auto *check = app.add_subcommand("check", "Decide integrality of a list");
  check->add_option("list", o.list, "e.g. \"30,1,-15,-10,-6\"")->required();
  check->add_option("--oracle", o.oracle, "Also test the factorial ratio for n = 1..N");

  auto *nrm = app.add_subcommand("norm", "Exact norm of a list");
  nrm->add_option("list", o.list)->required();

  auto *mono = app.add_subcommand("monotone", "Is sum floor(b_j x) monotone");
  mono->add_option("list", o.list)->required();

  auto *cons = app.add_subcommand("construct", "Build a family of height D+1 from a and monotone b");
  cons->add_option("--a", o.a)->required();
  cons->add_option("--b", o.b)->required();
  cons->add_flag("--proof", o.proof, "Also run the value-range checks behind the construction");

  auto *fam = app.add_subcommand("verify-family", "Verify a family exactly (2 parameters) or by sampling");
  fam->add_option("family", o.family, "Text such as \"6a,b,-2a,-3a,-6b,-(a-5b)\" or family JSON")->required();
  fam->add_option("--height", o.height, "Claimed height for text input");
  fam->add_option("--sample", o.sample_bound, "Sample all tuples with |t| <= BOUND instead");
  fam->add_option("--n-max", o.n_max, "Factorial oracle range when sampling");

  auto *red = app.add_subcommand("reduce", "Search a height-2 list for a split into two height-1 ratios");
  red->add_option("list", o.list)->required();
  red->add_option("--cancel-bound", o.cancel_bound, "Largest cancelled value (default max |entry|)");
  red->add_option("--pairs", o.pairs, "Cancelled pairs allowed")->check(CLI::Range(0, 2));

  auto *cert = app.add_subcommand("certify", "Irreducibility certificate for a height-2 list");
  cert->add_option("list", o.list)->required();
  cert->add_option("--p", o.p, "Prime >= 11")->required();

  auto *cat = app.add_subcommand("verify-catalog", "Check every catalogued expectation");
  cat->add_option("--scope", o.scope, "all, norms, families, table or external");
  cat->add_flag("--verbose", o.verbose, "List passing checks too");

  auto *en = app.add_subcommand("enumerate", "Exhaustive search for lists of small norm");
  en->add_option("--max-length", o.max_length);
  en->add_option("--max-entry", o.max_entry);
  en->add_option("--threshold", o.threshold, "Rational bound, e.g. 31/180");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }
  if (o.jobs > 0) {
    set_jobs(o.jobs);
  }

  try {
    if (*check) return run_check(o);
    if (*nrm) return run_norm(o);
    if (*mono) return run_monotone(o);
    if (*cons) return run_construct(o);
    if (*fam) return run_verify_family(o);
    if (*red) return run_reduce(o);
    if (*cert) return run_certify(o);
    if (*cat) return run_verify_catalog(o);
    if (*en) return run_enumerate(o);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::logic_error &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
