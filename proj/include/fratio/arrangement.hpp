#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fratio/rational.hpp"

namespace fratio {

/// The linear form c x + d y.
struct Form2 {
  std::int64_t c = 0;
  std::int64_t d = 0;
  friend bool operator==(const Form2 &, const Form2 &) = default;
};

struct Point2 {
  Rat x;
  Rat y;
  friend bool operator==(const Point2 &, const Point2 &) = default;
};

/// Result of scanning H(x, y) = sum_i floor(c_i x + d_i y) over [0, 1)^2.
///
/// Every value is taken as the lexicographic right limit (x + e, y + e^2),
/// so a sample on a line or vertex reports the value of the open cell to its
/// right; no numeric epsilon is involved.
struct ArrangementScan {
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  std::optional<Point2> first_violation; // first sample (y-major order) outside [lo, hi]
  std::int64_t violation_value = 0;
  std::size_t samples = 0;
  std::size_t y_slices = 0;
};

/// floor(c x + d y) taken as the lexicographic right limit.
BigInt floor_right(const Form2 &f, const Rat &x, const Rat &y);

/// sum_i floor_right(forms_i, x, y).
BigInt floor_sum_2d(std::span<const Form2> forms, const Rat &x, const Rat &y);

/// Sorted distinct critical y values in [0, 1): 0, every pairwise line
/// intersection and every crossing of the edge x = 0.
std::vector<Rat> critical_ys(std::span<const Form2> forms);

/// Scans criticals and midpoints in y; for each y, x-breakpoints and midpoints.
/// This samples every vertex, edge and cell of the line arrangement
/// { c_i x + d_i y in Z }. The y-slices run in parallel and are merged in order.
ArrangementScan scan_arrangement(std::span<const Form2> forms, std::int64_t lo, std::int64_t hi);

/// Serial Rat implementation of scan_arrangement; same samples, same order.
ArrangementScan scan_arrangement_reference(std::span<const Form2> forms, std::int64_t lo, std::int64_t hi);

} // namespace fratio
