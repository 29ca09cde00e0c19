#include <doctest.h>

#include <random>

#include "fratio/affine_family.hpp"
#include "fratio/criteria.hpp"
#include "fratio/parallel.hpp"

using namespace fratio;

namespace {

AffineList with_height(const std::string &text, int height, std::vector<LinearConstraint> cs = {}) {
  const AffineList f = parse_family(text);
  return AffineList::make(f.d, f.entries, std::move(cs), true, height);
}

FamilyErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const FamilyError &e) {
    return e.kind();
  }
  FAIL("expected FamilyError");
  return FamilyErrorKind::Malformed;
}

} // namespace

TEST_CASE("family text") {
  const AffineList f = parse_family("6a,b,-2a,-3a,-6b,-(a-5b)");
  CHECK(f.d == 2);
  CHECK(f.entries == std::vector<Coeffs>{{6, 0}, {0, 1}, {-2, 0}, {-3, 0}, {0, -6}, {-1, 5}});
  CHECK(f.to_string() == "6a,b,-2a,-3a,-6b,-a+5b");
  CHECK(parse_family(f.to_string()).entries == f.entries);
  CHECK(parse_family("[2a, 2b, 6(a+b), -3*(a+b)]").entries == std::vector<Coeffs>{{2, 0}, {0, 2}, {6, 6}, {-3, -3}});
  CHECK(parse_family("a+2b,a+2c,-d").d == 4);
  CHECK(parse_family("-b,b-7a", 2).entries == std::vector<Coeffs>{{0, -1}, {-7, 1}});
  CHECK(parse_family("3a,-a", 3).d == 3);
  CHECK(kind_of([] { parse_family("a+1,-a"); }) == FamilyErrorKind::Parse);
  CHECK(kind_of([] { parse_family("a,-e"); }) == FamilyErrorKind::Parse);
  CHECK(kind_of([] { parse_family("2a,,-a"); }) == FamilyErrorKind::Parse);
  CHECK(kind_of([] { parse_family("2(a,-a"); }) == FamilyErrorKind::Parse);
}

TEST_CASE("family validation") {
  CHECK(kind_of([] { AffineList::make(2, {{1, 0}, {0, 0}}); }) == FamilyErrorKind::Malformed);
  CHECK(kind_of([] { AffineList::make(2, {{1, 0}, {0, -1}}, {}, true, 1); }) == FamilyErrorKind::Unbalanced);
  CHECK(kind_of([] { AffineList::make(5, {{1, 0, 0, 0, 0}}); }) == FamilyErrorKind::Malformed);
  CHECK(kind_of([] { AffineList::make(2, {{1}}); }) == FamilyErrorKind::Malformed);
  CHECK(AffineList::make(2, {{1, 1}, {-1, 0}, {0, -1}}, {}, true, 1).balanced());
}

TEST_CASE("instances drop zeros and cancel pairs") {
  const AffineList f = with_height("6a,b,-2a,-3a,-6b,-(a-5b)", 2, {{{1, -5}, Relation::Positive}});
  const std::vector<std::int64_t> ok{11, 2};
  CHECK(admissible(f, ok));
  CHECK(instantiate(f, ok) == IntList::make({2, 66, -12, -22, -33, -1}));
  const std::vector<std::int64_t> edge{5, 1};
  CHECK_FALSE(admissible(f, edge));
  CHECK(kind_of([&] { instantiate(f, edge); }) == FamilyErrorKind::ConstraintViolation);
  // Without the constraint, a = 5b gives a zero entry and the height-1 example.
  const AffineList loose = with_height("6a,b,-2a,-3a,-6b,-(a-5b)", 2);
  CHECK(instantiate(loose, edge) == IntList::make({30, 1, -15, -10, -6}));
  CHECK(evaluate_entries(loose, edge) == std::vector<std::int64_t>{30, 1, -10, -15, -6, 0});
  const std::vector<std::int64_t> shared{4, 2};
  CHECK_FALSE(admissible(loose, shared));
  const AffineList cancel = AffineList::make(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  CHECK(kind_of([&] { instantiate(cancel, std::vector<std::int64_t>{1, 1}); }) == FamilyErrorKind::ZeroList);
}

TEST_CASE("exact verification") {
  const AffineList good = with_height("6a,b,-2a,-3a,-6b,-(a-5b)", 2);
  const FamilyVerdict v = verify_family_exact(good);
  CHECK(v.status == FamilyVerdict::Status::VerifiedExact);
  CHECK(v.min_value == 0);
  CHECK(v.max_value == 2);
  CHECK_FALSE(v.point);

  const AffineList bad = with_height("3a,18a,-a,-9a,-b,-11a+b", 2);
  const FamilyVerdict w = verify_family_exact(bad);
  REQUIRE(w.status == FamilyVerdict::Status::Fails);
  REQUIRE(w.point);
  // First failure in y-major order; (73/264, 1/36) fails with the same value.
  CHECK(w.point->x == Rat(3, 11));
  CHECK(w.point->y == Rat(0));
  CHECK(w.value == -1);
  std::vector<Form2> forms;
  for (const Coeffs &c : bad.entries) {
    forms.push_back({c[0], c[1]});
  }
  CHECK(floor_sum_2d(forms, Rat(73, 264), Rat(1, 36)) + 4 == -1);

  CHECK(kind_of([] { verify_family_exact(with_height("a+b+c,-a,-b,-c", 2)); }) ==
        FamilyErrorKind::DimensionUnsupported);
  CHECK(kind_of([] { verify_family_exact(parse_family("2a,-a,2b,-b,-a-b")); }) == FamilyErrorKind::MissingHeight);
  CHECK(kind_of([] { verify_family_exact(with_height("2a,-a,2b,-b,-a-b", 2)); }) == FamilyErrorKind::Malformed);
}

TEST_CASE("exact kernel matches the reference") {
  for (const char *text : {"6a,b,-2a,-3a,-6b,-(a-5b)", "3a,18a,-a,-9a,-b,-11a+b", "2a,2b,6(a+b),-a,-4a,-b,-4b,-3(a+b)",
                           "3a,-a,3b,-b,-(a+b),-(a+b)"}) {
    const AffineList f = with_height(text, 2);
    const FamilyVerdict x = verify_family_exact(f);
    const FamilyVerdict y = verify_family_exact_reference(f);
    CHECK(x.status == y.status);
    CHECK(x.point == y.point);
    CHECK(x.min_value == y.min_value);
    CHECK(x.max_value == y.max_value);
    CHECK(x.samples == y.samples);
  }
}

TEST_CASE("exact verdicts are sound on random families") {
  // Random forms closed by the negated coefficient sum. When the sweep
  // verifies a height, every sampled instance of that height is integral.
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> n(3, 6);
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  int verified = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<Coeffs> entries;
    Coeffs sum{0, 0};
    const int k = n(rng);
    while (static_cast<int>(entries.size()) < k) {
      Coeffs e{c(rng), c(rng)};
      if (e[0] != 0 || e[1] != 0) {
        sum[0] += e[0];
        sum[1] += e[1];
        entries.push_back(e);
      }
    }
    if (sum[0] == 0 && sum[1] == 0) {
      continue;
    }
    entries.push_back({-sum[0], -sum[1]});
    for (int D = 1; D <= 3; ++D) {
      if ((static_cast<int>(entries.size()) + D) % 2 != 0) {
        continue;
      }
      const AffineList f = AffineList::make(2, entries, {}, true, D);
      if (verify_family_exact(f).passed()) {
        ++verified;
        const FamilyVerdict s = verify_family_sampled(f, 6, 12);
        CHECK_MESSAGE(s.passed(), f.to_string());
      }
    }
  }
  CHECK(verified > 5);
}

TEST_CASE("sampled verification finds a failing instance") {
  const AffineList f = with_height("3a,18a,-a,-9a,-b,-11a+b", 2,
                                   {{{1, 0}, Relation::Positive}, {{0, 1}, Relation::Positive}});
  const FamilyVerdict v = verify_family_sampled(f, 30, 30);
  REQUIRE(v.status == FamilyVerdict::Status::FailsInstance);
  REQUIRE(v.instance);
  CHECK(std::gcd(v.params[0], v.params[1]) == 1);
  CHECK(v.params[0] <= 30);
  CHECK(v.params[1] <= 30);
  CHECK(instantiate(f, v.params) == *v.instance);
  CHECK(is_integral_ratio_reference(*v.instance).status == RatioVerdict::Status::NotIntegral);
  CHECK(v.witness_x);

  const AffineList g = with_height("a+2b,a+2c,-a,-b,-c,-(a+b+c)", 3);
  CHECK_THROWS_AS(verify_family_sampled(g, 0, 10), std::invalid_argument);
}

TEST_CASE("sampled verification does not depend on the worker count") {
  const AffineList f = with_height("2a,3b,-a,-4a,-b,-(2b-3a)", 2);
  const int saved = jobs();
  set_jobs(1);
  const FamilyVerdict one = verify_family_sampled(f, 8, 10);
  set_jobs(4);
  const FamilyVerdict four = verify_family_sampled(f, 8, 10);
  set_jobs(saved);
  CHECK(one.status == FamilyVerdict::Status::VerifiedSampled);
  CHECK(one.instances_checked == four.instances_checked);
  CHECK(one.instances_skipped == four.instances_skipped);
}

TEST_CASE("norm limits") {
  const AffineList f = with_height("3a,18a,-a,-9a,-b,-11a+b", 2);
  const std::vector<std::int64_t> dir{1, 0};
  const NormLimit nl = family_norm_limit(f, dir, 10000);
  CHECK(nl.limit == Rat(37, 108));
  CHECK(nl.params[0] >= 10000);
  CHECK(norm(nl.instance) == nl.instance_norm);
  const Rat gap = nl.instance_norm - nl.limit;
  CHECK(gap * gap < Rat(1, 1000000));

  const AffineList g = with_height("a+b,-a,-b", 1);
  CHECK(family_norm_limit(g, std::vector<std::int64_t>{1, 1}, 1000).limit == Rat(1, 4));
  CHECK(kind_of([&] { family_norm_limit(g, std::vector<std::int64_t>{2, 2}); }) == FamilyErrorKind::Malformed);
}
