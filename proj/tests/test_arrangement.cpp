#include <doctest.h>

#include <random>

#include "fratio/arrangement.hpp"
#include "fratio/parallel.hpp"

using namespace fratio;

namespace {

std::vector<Form2> random_forms(std::mt19937_64 &rng, int max_forms, std::int64_t max_coeff) {
  std::uniform_int_distribution<int> n(2, max_forms);
  std::uniform_int_distribution<std::int64_t> c(-max_coeff, max_coeff);
  std::vector<Form2> out;
  const int k = n(rng);
  while (static_cast<int>(out.size()) < k) {
    Form2 f{c(rng), c(rng)};
    if (f.c != 0 || f.d != 0) {
      out.push_back(f);
    }
  }
  return out;
}

bool same_scan(const ArrangementScan &a, const ArrangementScan &b) {
  return a.min_value == b.min_value && a.max_value == b.max_value && a.first_violation == b.first_violation &&
         a.violation_value == b.violation_value && a.samples == b.samples && a.y_slices == b.y_slices;
}

} // namespace

TEST_CASE("lexicographic right limit") {
  // On the line x + y = 1 the value is that of the cell above it.
  CHECK(floor_right({1, 1}, Rat(1, 2), Rat(1, 2)) == 1);
  // -x at x = 0: the cell to the right has -x slightly negative.
  CHECK(floor_right({-1, 0}, Rat(0), Rat(1, 3)) == -1);
  // Vertical coefficient zero: the y perturbation decides.
  CHECK(floor_right({0, 2}, Rat(1, 5), Rat(1, 2)) == 1);
  CHECK(floor_right({0, -2}, Rat(1, 5), Rat(1, 2)) == -2);
  // x and y perturbations of opposite effect: x dominates.
  CHECK(floor_right({1, -1}, Rat(1, 3), Rat(1, 3)) == 0);
  CHECK(floor_right({-1, 1}, Rat(1, 3), Rat(1, 3)) == -1);
}

TEST_CASE("critical y values") {
  const std::vector<Form2> forms{{1, 0}, {0, 2}, {1, 1}};
  const auto ys = critical_ys(forms);
  CHECK(ys.front() == Rat(0));
  CHECK(std::is_sorted(ys.begin(), ys.end()));
  CHECK(std::find(ys.begin(), ys.end(), Rat(1, 2)) != ys.end());
  for (const auto &y : ys) {
    CHECK(y >= Rat(0));
    CHECK(y < Rat(1));
  }
}

TEST_CASE("kernel matches the reference sweep") {
  std::mt19937_64 rng(424242);
  const int saved = jobs();
  for (int threads : {1, 3}) {
    set_jobs(threads);
    for (int i = 0; i < 150; ++i) {
      const auto forms = random_forms(rng, 6, 5);
      const auto fast = scan_arrangement(forms, -2, 1);
      const auto ref = scan_arrangement_reference(forms, -2, 1);
      REQUIRE(same_scan(fast, ref));
    }
  }
  set_jobs(saved);
}

TEST_CASE("scan covers every cell") {
  // Any point of the square has a value inside the scanned range.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> num(0, 996);
  std::uniform_int_distribution<std::int64_t> num_y(0, 990);
  for (int i = 0; i < 60; ++i) {
    const auto forms = random_forms(rng, 5, 4);
    const auto scan = scan_arrangement(forms, -100, 100);
    for (int k = 0; k < 50; ++k) {
      const Rat x(num(rng), 997);
      const Rat y(num_y(rng), 991);
      const auto v = to_int64(floor_sum_2d(forms, x, y));
      CHECK(v >= scan.min_value);
      CHECK(v <= scan.max_value);
    }
  }
}

TEST_CASE("violation is the first out-of-range sample") {
  const std::vector<Form2> forms{{2, 0}, {-1, 0}, {0, 2}, {0, -1}, {-1, -1}};
  const auto scan = scan_arrangement(forms, -1, 0);
  if (scan.first_violation) {
    const auto v = to_int64(floor_sum_2d(forms, scan.first_violation->x, scan.first_violation->y));
    CHECK(v == scan.violation_value);
    CHECK((v < -1 || v > 0));
  }
  const auto tight = scan_arrangement(forms, scan.min_value, scan.max_value);
  CHECK_FALSE(tight.first_violation);
}
