#include "fratio/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fratio/parallel.hpp"

namespace fratio {

namespace {

using i128 = __int128;

// Reduced fraction with positive denominator; the kernel's only number type.
struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;

  static Frac make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min() ||
        d > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("arrangement coordinate exceeds 64 bits");
    }
    return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
  }

  friend bool operator==(const Frac &, const Frac &) = default;
  friend bool operator<(const Frac &a, const Frac &b) { return static_cast<i128>(a.n) * b.d < static_cast<i128>(b.n) * a.d; }

  Rat to_rat() const { return Rat(n, d); }
};

Frac midpoint(const Frac &a, const Frac &b) {
  return Frac::make(static_cast<i128>(a.n) * b.d + static_cast<i128>(b.n) * a.d, static_cast<i128>(a.d) * b.d * 2);
}

i128 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

std::int64_t floor_right_fast(const Form2 &f, const Frac &x, const Frac &y) {
  const i128 num = static_cast<i128>(f.c) * x.n * y.d + static_cast<i128>(f.d) * y.n * x.d;
  const i128 den = static_cast<i128>(x.d) * y.d;
  i128 q = floor_div(num, den);
  if (num % den == 0 && !(f.c > 0 || (f.c == 0 && f.d > 0))) {
    --q;
  }
  return static_cast<std::int64_t>(q);
}

struct Line {
  std::int64_t c, d, m;
};

// Forms up to sign, without duplicates; +/-(c, d) define the same lines.
std::vector<Form2> line_directions(std::span<const Form2> forms) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Form2> out;
  for (const auto &f : forms) {
    if (f.c == 0 && f.d == 0) {
      continue;
    }
    Form2 g = f;
    if (g.c < 0 || (g.c == 0 && g.d < 0)) {
      g = {-g.c, -g.d};
    }
    if (seen.insert({g.c, g.d}).second) {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Frac> critical_ys_frac(std::span<const Form2> forms) {
  const auto dirs = line_directions(forms);
  std::vector<Line> lines;
  for (const auto &f : dirs) {
    const std::int64_t lo = std::min<std::int64_t>(0, f.c) + std::min<std::int64_t>(0, f.d);
    const std::int64_t hi = std::max<std::int64_t>(0, f.c) + std::max<std::int64_t>(0, f.d);
    for (std::int64_t m = lo; m <= hi; ++m) {
      lines.push_back({f.c, f.d, m});
    }
  }
  std::vector<Frac> ys{Frac{0, 1}};
  auto in_unit = [](const Frac &v) { return v.n >= 0 && v.n < v.d; };
  // Crossings of the edge x = 0; horizontal lines included. Cells clipped by
  // that edge need not span a whole slab unless the forms sum to zero.
  for (const auto &l : lines) {
    if (l.d != 0) {
      const Frac y = Frac::make(l.m, l.d);
      if (in_unit(y)) {
        ys.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line &p = lines[i];
      const Line &q = lines[j];
      const i128 det = static_cast<i128>(p.c) * q.d - static_cast<i128>(q.c) * p.d;
      if (det == 0) {
        continue;
      }
      const Frac x = Frac::make(static_cast<i128>(p.m) * q.d - static_cast<i128>(q.m) * p.d, det);
      const Frac y = Frac::make(static_cast<i128>(p.c) * q.m - static_cast<i128>(q.c) * p.m, det);
      if (in_unit(x) && in_unit(y)) {
        ys.push_back(y);
      }
    }
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

template <typename T>
std::vector<T> with_midpoints(const std::vector<T> &pts, const T &one) {
  std::vector<T> out;
  out.reserve(pts.size() * 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i]);
    out.push_back(midpoint(pts[i], i + 1 < pts.size() ? pts[i + 1] : one));
  }
  return out;
}

std::vector<Frac> x_breakpoints(std::span<const Form2> dirs, const Frac &y) {
  std::vector<Frac> xs{Frac{0, 1}};
  for (const auto &f : dirs) {
    if (f.c == 0) {
      continue;
    }
    // c x = m - d y with x in [0, 1)
    const i128 dy_floor = floor_div(static_cast<i128>(f.d) * y.n, y.d);
    const i128 lo = dy_floor + std::min<std::int64_t>(0, f.c) - 1;
    const i128 hi = dy_floor + std::max<std::int64_t>(0, f.c) + 1;
    for (i128 m = lo; m <= hi; ++m) {
      const Frac x = Frac::make(m * y.d - static_cast<i128>(f.d) * y.n, static_cast<i128>(f.c) * y.d);
      if (x.n >= 0 && x.n < x.d) {
        xs.push_back(x);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

struct Slice {
  std::int64_t min_value = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_value = std::numeric_limits<std::int64_t>::min();
  std::optional<Frac> violation_x;
  std::int64_t violation_value = 0;
  std::size_t samples = 0;
};

} // namespace

BigInt floor_right(const Form2 &f, const Rat &x, const Rat &y) {
  const Rat v = Rat(static_cast<long>(f.c)) * x + Rat(static_cast<long>(f.d)) * y;
  BigInt q = v.floor();
  if (v.is_integer() && !(f.c > 0 || (f.c == 0 && f.d > 0))) {
    q -= 1;
  }
  return q;
}

BigInt floor_sum_2d(std::span<const Form2> forms, const Rat &x, const Rat &y) {
  BigInt total = 0;
  for (const auto &f : forms) {
    total += floor_right(f, x, y);
  }
  return total;
}

std::vector<Rat> critical_ys(std::span<const Form2> forms) {
  std::vector<Rat> out;
  for (const auto &y : critical_ys_frac(forms)) {
    out.push_back(y.to_rat());
  }
  return out;
}

ArrangementScan scan_arrangement(std::span<const Form2> forms, std::int64_t lo, std::int64_t hi) {
  const auto dirs = line_directions(forms);
  const auto ys = with_midpoints(critical_ys_frac(forms), Frac{1, 1});
  std::vector<Slice> slices(ys.size());
  const auto n = static_cast<std::int64_t>(ys.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs())
  for (std::int64_t i = 0; i < n; ++i) {
    const Frac &y = ys[static_cast<std::size_t>(i)];
    Slice &s = slices[static_cast<std::size_t>(i)];
    for (const auto &x : with_midpoints(x_breakpoints(dirs, y), Frac{1, 1})) {
      std::int64_t v = 0;
      for (const auto &f : forms) {
        v += floor_right_fast(f, x, y);
      }
      ++s.samples;
      s.min_value = std::min(s.min_value, v);
      s.max_value = std::max(s.max_value, v);
      if ((v < lo || v > hi) && !s.violation_x) {
        s.violation_x = x;
        s.violation_value = v;
      }
    }
  }
  ArrangementScan out;
  out.min_value = std::numeric_limits<std::int64_t>::max();
  out.max_value = std::numeric_limits<std::int64_t>::min();
  out.y_slices = ys.size();
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Slice &s = slices[i];
    out.samples += s.samples;
    out.min_value = std::min(out.min_value, s.min_value);
    out.max_value = std::max(out.max_value, s.max_value);
    if (s.violation_x && !out.first_violation) {
      out.first_violation = Point2{s.violation_x->to_rat(), ys[i].to_rat()};
      out.violation_value = s.violation_value;
    }
  }
  return out;
}

} // namespace fratio
