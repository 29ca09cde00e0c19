#include <doctest.h>

#include <random>

#include "fratio/criteria.hpp"
#include "fratio/reducibility.hpp"

using namespace fratio;

TEST_CASE("multinomial split with one cancelled pair") {
  const IntList a = IntList::make({6, -1, -2, -3});
  const auto d = search_decomposition(a);
  REQUIRE(d);
  CHECK(d->b == IntList::make({6, -1, -5}));
  CHECK(d->c == IntList::make({5, -2, -3}));
  CHECK(d->canceled == std::vector<std::int64_t>{5});
  CHECK(revalidate(a, *d));
  Decomposition tampered = *d;
  tampered.c = IntList::make({4, -1, -3});
  CHECK_FALSE(revalidate(a, tampered));
}

TEST_CASE("split of a concatenation") {
  // 1 and -1 cancel.
  const IntList a = concat(IntList::make({30, 1, -15, -10, -6}), IntList::make({2, -1, -1}));
  REQUIRE(is_integral_ratio(a).integral_with_height(2));
  const auto d = search_decomposition(a);
  REQUIRE(d);
  CHECK(revalidate(a, *d));
}

TEST_CASE("no split for the two-parameter example within bounds") {
  const IntList a = IntList::make({3, 33, -1, -11, -12, -12});
  CHECK_FALSE(search_decomposition(a, 33));
  CHECK_FALSE(search_decomposition(a, 4 * a.max_abs()));
}

TEST_CASE("divisibility criteria") {
  const IntList wider = IntList::make({3, 33, -1, -11, -12, -12});
  CHECK(sporadic_pair_excluded(wider, 11));
  CHECK_FALSE(sporadic_pair_excluded(wider, 13));
  CHECK_THROWS_AS(sporadic_family_cases(wider, 13), HypothesisNotMet);
  CHECK_THROWS_AS(family_pair_cases(wider, 11), HypothesisNotMet);
  CHECK_THROWS_AS(sporadic_pair_excluded(wider, 9), std::invalid_argument);
  CHECK_THROWS_AS(sporadic_pair_excluded(wider, 7), std::invalid_argument);
  CHECK(is_prime(11));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("whole-list shapes") {
  // a, b, c, d = 1, 3, 5, 7
  CHECK(matches_ten_shape(IntList::make({2, -1, 6, -3, 10, -5, 14, -7, -4, -12})));
  CHECK_FALSE(matches_ten_shape(IntList::make({2, -1, 6, -3, 10, -5, 14, -7, -5, -11})));
  // The sums pair t's other than the first one: (4, 99) and (5, 6).
  CHECK(matches_ten_shape(IntList::make({8, 10, 12, 198, -4, -5, -6, -11, -99, -103})));
  CHECK(matches_eight_shape(IntList::make({2, -1, 6, -3, -4, 12, -5, -7})));
  CHECK(matches_eight_shape(IntList::make({2, -1, 6, -3, -4, 12, -4, -8})));
  CHECK_FALSE(matches_eight_shape(IntList::make({2, -1, 6, -3, -4, 13, -5, -7})));
}

TEST_CASE("certificates") {
  SUBCASE("odd largest element") {
    // a = 1, b = 10: a + b is 11.
    const IntList askey = IntList::make({2, 20, 30, 33, -1, -10, -10, -11, -21, -32});
    const IrreducibilityCertificate c = certify_irreducible(askey, 11);
    CHECK(c.irreducible());
    CHECK(c.sporadic_pair);
    CHECK(c.sporadic_family.empty());
    CHECK_FALSE(c.family_pair_applicable);
    CHECK(c.pair_exclusion == "parity");
  }
  SUBCASE("exhaustive search") {
    const IrreducibilityCertificate c = certify_irreducible(IntList::make({3, 33, -1, -11, -12, -12}), 11);
    CHECK(c.irreducible());
    CHECK(c.pair_exclusion == "search");
    CHECK_FALSE(c.decomposition);
  }
  SUBCASE("reducible lists stay inconclusive") {
    const IrreducibilityCertificate c = certify_irreducible(IntList::make({6, -1, -2, -3}), 11);
    CHECK_FALSE(c.irreducible());
    CHECK(to_string(c.conclusion) == "inconclusive");
  }
  SUBCASE("non-integral input") {
    const IrreducibilityCertificate c = certify_irreducible(IntList::make({6, 36, -2, -11, -11, -18}), 11);
    CHECK_FALSE(c.irreducible());
    CHECK(c.reason == "not an integral ratio of height 2");
  }
  CHECK_THROWS_AS(certify_irreducible(IntList::make({6, -1, -2, -3}), 10), std::invalid_argument);
}

TEST_CASE("certificates never contradict an explicit split") {
  // Height-2 lists assembled from two height-1 ratios, scaled so that p = 11
  // divides some entries.
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::int64_t> par(1, 9);
  auto member = [&](std::int64_t x, std::int64_t y) -> IntList {
    if (rng() % 2 == 0) {
      return from_multiset({x + y, -x, -y});
    }
    return from_multiset({2 * x, -x, 2 * y, -y, -(x + y)});
  };
  const std::vector<IntList> sporadic{IntList::make({30, 1, -15, -10, -6}), IntList::make({3, 14, -1, -7, -9}),
                                      IntList::make({1, 12, -3, -4, -6})};
  int split = 0;
  for (int i = 0; i < 150; ++i) {
    IntList first;
    IntList second;
    if (i % 3 == 0) {
      first = dilate(sporadic[static_cast<std::size_t>(rng() % 3)], 11);
    } else {
      first = member(11 * par(rng), par(rng));
    }
    second = i % 2 == 0 ? member(par(rng), par(rng)) : sporadic[static_cast<std::size_t>(rng() % 3)];
    if (first.empty() || second.empty()) {
      continue;
    }
    const IntList joined = concat(first, second);
    if (first.length() + second.length() > joined.length() + 4) {
      continue; // more cancelled pairs than the search allows
    }
    const IntList a = to_primitive(joined).first;
    if (a.empty() || !is_integral_ratio(a).integral_with_height(2)) {
      continue;
    }
    ++split;
    const auto d = search_decomposition(a, 4 * a.max_abs());
    CHECK_MESSAGE(d, a.to_string());
    CHECK_MESSAGE(!certify_irreducible(a, 11).irreducible(), a.to_string());
  }
  CHECK(split > 50);
}
