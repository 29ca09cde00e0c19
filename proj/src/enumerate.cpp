#include "fratio/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "fratio/criteria.hpp"
#include "fratio/parallel.hpp"

namespace fratio {

namespace {

using i128 = __int128;

bool has_halving_pairs(const std::vector<std::int64_t> &v, std::size_t want) {
  // Count disjoint pairs (x, -2x); lists here have at most 4 entries.
  std::vector<bool> used(v.size(), false);
  auto rec = [&](auto &self, std::size_t got) -> bool {
    if (got == want) {
      return true;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (i != j && !used[i] && !used[j] && v[j] == -2 * v[i]) {
          used[i] = used[j] = true;
          const bool ok = self(self, got + 1);
          used[i] = used[j] = false;
          if (ok) {
            return true;
          }
        }
      }
    }
    return false;
  };
  return rec(rec, 0);
}

struct Scan {
  std::size_t scanned = 0;
  std::vector<IntList> below;
};

// Visits multisets idx[0] <= ... <= idx[len-1] over `values` with idx[0] = first.
template <typename Below>
void scan_from(const std::vector<std::int64_t> &values, int len, std::size_t first, const Below &below, Scan &out) {
  const int max_entry = static_cast<int>(values.back());
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), first);
  std::vector<std::int64_t> v(static_cast<std::size_t>(len));
  std::vector<int> count(static_cast<std::size_t>(2 * max_entry + 1), 0);
  for (;;) {
    std::fill(count.begin(), count.end(), 0);
    bool degenerate = false;
    std::int64_t g = 0;
    for (int k = 0; k < len; ++k) {
      v[static_cast<std::size_t>(k)] = values[idx[static_cast<std::size_t>(k)]];
      const std::int64_t x = v[static_cast<std::size_t>(k)];
      degenerate = degenerate || count[static_cast<std::size_t>(-x + max_entry)] > 0;
      ++count[static_cast<std::size_t>(x + max_entry)];
      g = std::gcd(g, x);
    }
    if (!degenerate && g == 1) {
      ++out.scanned;
      if (below(v)) {
        out.below.push_back(IntList::make(std::span<const std::int64_t>(v)));
      }
    }
    // Next non-decreasing tuple with the first index fixed.
    int k = len - 1;
    while (k >= 1 && idx[static_cast<std::size_t>(k)] + 1 == values.size()) {
      --k;
    }
    if (k < 1) {
      return;
    }
    const std::size_t nv = idx[static_cast<std::size_t>(k)] + 1;
    for (int r = k; r < len; ++r) {
      idx[static_cast<std::size_t>(r)] = nv;
    }
  }
}

template <typename Below>
SmallNormReport drive(int max_length, int max_entry, const Rat &threshold, std::span<const IntList> sporadics,
                      const Below &below, bool parallel) {
  if (max_length < 1 || max_entry < 1 || max_entry > 1000) {
    throw std::invalid_argument("enumeration bounds out of range");
  }
  std::vector<std::int64_t> values;
  for (std::int64_t x = -max_entry; x <= max_entry; ++x) {
    if (x != 0) {
      values.push_back(x);
    }
  }
  SmallNormReport rep;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Scan> parts(values.size());
    const auto n = static_cast<std::int64_t>(values.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs()) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
      scan_from(values, len, static_cast<std::size_t>(i), below, parts[static_cast<std::size_t>(i)]);
    }
    for (auto &p : parts) {
      rep.scanned += p.scanned;
      for (auto &l : p.below) {
        rep.below.emplace_back(l, Rat());
      }
    }
  }
  for (auto &[l, nm] : rep.below) {
    nm = norm(l);
    if (small_norm_shape(l, sporadics) == SmallNormShape::None) {
      rep.unexplained.push_back(l);
    }
    if (l.sum() == 0) {
      if (l.length() % 2 == 1 && nm < Rat(1, 4)) {
        rep.odd_balanced_below_quarter.push_back(l);
      }
      if (l.length() % 2 == 0 && nm < threshold) {
        rep.even_balanced_below.push_back(l);
      }
    }
  }
  return rep;
}

} // namespace

std::string to_string(SmallNormShape s) {
  switch (s) {
  case SmallNormShape::Singleton:
    return "singleton";
  case SmallNormShape::Pair:
    return "pair";
  case SmallNormShape::HalvingTriple:
    return "halving_triple";
  case SmallNormShape::HalvingQuad:
    return "halving_quad";
  case SmallNormShape::Sporadic:
    return "sporadic";
  case SmallNormShape::None:
    return "none";
  }
  return "none";
}

SmallNormShape small_norm_shape(const IntList &a, std::span<const IntList> sporadics) {
  const IntList neg = a.empty() ? a : dilate(a, -1);
  for (const auto &s : sporadics) {
    if (s == a || s == neg) {
      return SmallNormShape::Sporadic;
    }
  }
  const std::vector<std::int64_t> v(a.begin(), a.end());
  if (v.size() == 1 && (v[0] == 1 || v[0] == -1)) {
    return SmallNormShape::Singleton;
  }
  if (v.size() == 2) {
    return SmallNormShape::Pair;
  }
  if (v.size() == 3 && has_halving_pairs(v, 1)) {
    return SmallNormShape::HalvingTriple;
  }
  if (v.size() == 4 && has_halving_pairs(v, 2)) {
    return SmallNormShape::HalvingQuad;
  }
  return SmallNormShape::None;
}

SmallNormReport enumerate_small_norm(int max_length, int max_entry, const Rat &threshold,
                                     std::span<const IntList> sporadics) {
  const i128 tp = to_int64(threshold.num());
  const i128 tq = to_int64(threshold.den());
  auto below = [&](const std::vector<std::int64_t> &v) {
    std::int64_t L = 1;
    for (auto x : v) {
      L = std::lcm(L, x < 0 ? -x : x);
    }
    // 12 N L^2 = sum_{i,j} g^2 (L/a_i)(L/a_j), signs included.
    i128 S = 0;
    for (auto x : v) {
      for (auto y : v) {
        const i128 g = std::gcd(x, y);
        S += g * g * (L / x) * (L / y);
      }
    }
    return S * tq < 12 * tp * static_cast<i128>(L) * L;
  };
  return drive(max_length, max_entry, threshold, sporadics, below, true);
}

SmallNormReport enumerate_small_norm_reference(int max_length, int max_entry, const Rat &threshold,
                                               std::span<const IntList> sporadics) {
  auto below = [&](const std::vector<std::int64_t> &v) {
    return norm(IntList::make(std::span<const std::int64_t>(v))) < threshold;
  };
  return drive(max_length, max_entry, threshold, sporadics, below, false);
}

} // namespace fratio
