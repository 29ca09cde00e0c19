#include <algorithm>
#include <limits>

#include "fratio/arrangement.hpp"

namespace fratio {

namespace {

std::vector<Rat> sample_axis(std::vector<Rat> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Rat> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rat next = i + 1 < pts.size() ? pts[i + 1] : Rat(1);
    out.push_back(pts[i]);
    out.push_back((pts[i] + next) / Rat(2));
  }
  return out;
}

std::vector<Rat> reference_critical_ys(std::span<const Form2> forms) {
  struct Line {
    long c, d, m;
  };
  std::vector<Line> lines;
  for (const auto &f : forms) {
    const long c = static_cast<long>(f.c);
    const long d = static_cast<long>(f.d);
    for (long m = std::min(0L, c) + std::min(0L, d); m <= std::max(0L, c) + std::max(0L, d); ++m) {
      lines.push_back({c, d, m});
    }
  }
  const Rat zero;
  const Rat one(1);
  std::vector<Rat> ys{zero};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line &p = lines[i];
    // Crossings of the edge x = 0; horizontal lines included.
    if (p.d != 0) {
      const Rat y(BigInt(p.m), BigInt(p.d));
      if (y >= zero && y < one) {
        ys.push_back(y);
      }
    }
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line &q = lines[j];
      const long det = p.c * q.d - q.c * p.d;
      if (det == 0) {
        continue;
      }
      const Rat x(BigInt(p.m * q.d - q.m * p.d), BigInt(det));
      const Rat y(BigInt(p.c * q.m - q.c * p.m), BigInt(det));
      if (x >= zero && x < one && y >= zero && y < one) {
        ys.push_back(y);
      }
    }
  }
  return ys;
}

} // namespace

ArrangementScan scan_arrangement_reference(std::span<const Form2> forms, std::int64_t lo, std::int64_t hi) {
  ArrangementScan out;
  out.min_value = std::numeric_limits<std::int64_t>::max();
  out.max_value = std::numeric_limits<std::int64_t>::min();
  const Rat zero;
  const Rat one(1);
  const auto ys = sample_axis(reference_critical_ys(forms));
  out.y_slices = ys.size();
  for (const auto &y : ys) {
    std::vector<Rat> xs{zero};
    for (const auto &f : forms) {
      if (f.c == 0) {
        continue;
      }
      const Rat c(static_cast<long>(f.c));
      const Rat dy = Rat(static_cast<long>(f.d)) * y;
      // Every integer m with (m - d y) / c in [0, 1).
      const BigInt first = (dy + Rat(static_cast<long>(std::min<std::int64_t>(0, f.c)))).floor();
      const BigInt last = (dy + Rat(static_cast<long>(std::max<std::int64_t>(0, f.c)))).floor();
      for (BigInt m = first; m <= last; ++m) {
        const Rat x = (Rat(m) - dy) / c;
        if (x >= zero && x < one) {
          xs.push_back(x);
        }
      }
    }
    for (const auto &x : sample_axis(std::move(xs))) {
      const std::int64_t v = to_int64(floor_sum_2d(forms, x, y));
      ++out.samples;
      out.min_value = std::min(out.min_value, v);
      out.max_value = std::max(out.max_value, v);
      if ((v < lo || v > hi) && !out.first_violation) {
        out.first_violation = Point2{x, y};
        out.violation_value = v;
      }
    }
  }
  return out;
}

} // namespace fratio
