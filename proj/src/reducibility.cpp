#include "fratio/reducibility.hpp"

#include <algorithm>
#include <numeric>

#include "fratio/criteria.hpp"
#include "fratio/parallel.hpp"

namespace fratio {

namespace {

using Values = std::vector<std::int64_t>;

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void require_prime(std::int64_t p) {
  if (p < 11 || !is_prime(p)) {
    throw std::invalid_argument("p must be a prime >= 11, got " + std::to_string(p));
  }
}

std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

void split_by(const IntList &a, std::int64_t p, Values &mult, Values &non) {
  for (auto v : a) {
    (v % p == 0 ? mult : non).push_back(v);
  }
}

std::int64_t total(const Values &v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

bool same_multiset(Values x, Values y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// A candidate part: entries plus cancelled values. Cheap necessary
// conditions for a height-1 integral ratio come first.
bool plausible_part(const Values &v) {
  if (v.size() % 2 == 0) {
    return false;
  }
  int h = 0;
  std::int64_t biggest = 0;
  for (auto x : v) {
    h += x < 0 ? 1 : -1;
    if (abs64(x) > abs64(biggest)) {
      biggest = x;
    }
  }
  // The entry of largest size must be positive, else F(1/M) = -1.
  return h == 1 && biggest > 0;
}

std::optional<IntList> integral_part(const Values &v) {
  if (!plausible_part(v)) {
    return std::nullopt;
  }
  IntList part;
  try {
    part = IntList::make(std::span<const std::int64_t>(v));
  } catch (const ListError &) {
    return std::nullopt;
  }
  if (norm(part) != Rat(1, 4)) {
    return std::nullopt;
  }
  if (!is_integral_ratio(part).integral_with_height(1)) {
    return std::nullopt;
  }
  return part;
}

std::optional<Decomposition> try_split(const IntList &a, const Values &s, const Values &c, const Values &w) {
  Values b = s;
  Values cc = c;
  for (auto x : w) {
    b.push_back(x);
    cc.push_back(-x);
  }
  if (!plausible_part(b) || !plausible_part(cc)) {
    return std::nullopt;
  }
  auto pb = integral_part(b);
  if (!pb) {
    return std::nullopt;
  }
  auto pc = integral_part(cc);
  if (!pc) {
    return std::nullopt;
  }
  if (concat(*pb, *pc) != a) {
    return std::nullopt;
  }
  Decomposition d{*pb, *pc, {}};
  for (auto x : w) {
    d.canceled.push_back(abs64(x));
  }
  std::sort(d.canceled.begin(), d.canceled.end());
  return d;
}

std::optional<Decomposition> search_mask(const IntList &a, std::uint32_t mask, int pairs, std::int64_t bound) {
  const auto e = a.entries();
  Values s{e[0]};
  Values c;
  for (std::size_t i = 1; i < e.size(); ++i) {
    (mask >> (i - 1) & 1U ? s : c).push_back(e[i]);
  }
  const std::int64_t sum_s = total(s);
  if (pairs == 0) {
    if (sum_s != 0 || c.empty()) {
      return std::nullopt;
    }
    return try_split(a, s, c, {});
  }
  if (pairs == 1) {
    const std::int64_t w = -sum_s;
    if (w == 0 || abs64(w) > bound) {
      return std::nullopt;
    }
    return try_split(a, s, c, {w});
  }
  for (std::int64_t w1 = -bound; w1 <= bound; ++w1) {
    const std::int64_t w2 = -sum_s - w1;
    if (w1 == 0 || w2 == 0 || w2 < w1 || abs64(w2) > bound || w1 == -w2) {
      continue;
    }
    if (auto d = try_split(a, s, c, {w1, w2})) {
      return d;
    }
  }
  return std::nullopt;
}

// Pairs (2t, -t) chosen from unused entries, smallest index first.
template <typename Visit>
bool choose_pairs(const Values &v, std::vector<bool> &used, Values &ts, std::size_t want, std::size_t start,
                  const Visit &visit) {
  if (ts.size() == want) {
    return visit();
  }
  for (std::size_t i = start; i < v.size(); ++i) {
    if (used[i] || v[i] % 2 != 0) {
      continue;
    }
    const std::int64_t t = v[i] / 2;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (used[j] || j == i || v[j] != -t) {
        continue;
      }
      used[i] = used[j] = true;
      ts.push_back(t);
      const bool done = choose_pairs(v, used, ts, want, i + 1, visit);
      ts.pop_back();
      used[i] = used[j] = false;
      if (done) {
        return true;
      }
      break; // equal values are interchangeable
    }
  }
  return false;
}

} // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::string to_string(IrreducibilityCertificate::Conclusion c) {
  return c == IrreducibilityCertificate::Conclusion::Irreducible ? "irreducible" : "inconclusive";
}

std::optional<Decomposition> search_decomposition(const IntList &a, std::int64_t cancel_bound, int max_pairs) {
  if (a.length() < 2 || a.length() > 25) {
    return std::nullopt;
  }
  const std::int64_t bound = cancel_bound > 0 ? cancel_bound : a.max_abs();
  const auto masks = static_cast<std::int64_t>(1) << (a.length() - 1);
  for (int pairs = 0; pairs <= max_pairs; ++pairs) {
    std::vector<std::optional<Decomposition>> found(static_cast<std::size_t>(masks));
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs())
    for (std::int64_t m = 0; m < masks; ++m) {
      found[static_cast<std::size_t>(m)] = search_mask(a, static_cast<std::uint32_t>(m), pairs, bound);
    }
    for (auto &d : found) {
      if (d) {
        return d;
      }
    }
  }
  return std::nullopt;
}

bool revalidate(const IntList &a, const Decomposition &d) {
  return concat(d.b, d.c) == a && is_integral_ratio(d.b).integral_with_height(1) &&
         is_integral_ratio(d.c).integral_with_height(1);
}

bool sporadic_pair_excluded(const IntList &a, std::int64_t p) {
  require_prime(p);
  Values mult;
  Values non;
  split_by(a, p, mult, non);
  return !mult.empty() && !non.empty() && total(mult) != 0;
}

std::vector<std::string> sporadic_family_cases(const IntList &a, std::int64_t p) {
  if (!sporadic_pair_excluded(a, p)) {
    throw HypothesisNotMet("p must divide some but not all entries, with multiples summing to nonzero");
  }
  Values mult;
  Values non;
  split_by(a, p, mult, non);
  std::vector<std::string> out;
  const std::size_t cnt = mult.size();
  if (cnt == 1 || (cnt % 2 == 0 && cnt >= 4)) {
    out.emplace_back("i");
  }
  if (cnt == 2 && (mult[0] == -2 * mult[1] || mult[1] == -2 * mult[0])) {
    out.emplace_back("ii");
  }
  if (non.size() == 3) {
    bool hit = false;
    for (std::size_t i = 0; i < 3 && !hit; ++i) {
      for (std::size_t j = 0; j < 3 && !hit; ++j) {
        const std::size_t k = 3 - i - j;
        if (i == j || k > 2 || k == i || k == j) {
          continue;
        }
        // non[i] = 2b, non[j] = -b, third = -b mod p
        hit = non[i] == -2 * non[j] && mod(non[k] - non[j], p) == 0;
      }
    }
    if (hit) {
      out.emplace_back("iii");
    }
  }
  return out;
}

std::vector<std::string> family_pair_cases(const IntList &a, std::int64_t p) {
  require_prime(p);
  Values mult;
  Values non;
  split_by(a, p, mult, non);
  if (mult.size() < 3 || mult.size() % 2 == 0 || total(mult) == 0) {
    throw HypothesisNotMet("need an odd number >= 3 of multiples of p with nonzero sum");
  }
  std::vector<std::string> out;

  if (non.size() == 3) {
    bool hit = false;
    for (std::size_t k = 0; k < 3 && !hit; ++k) {
      const std::size_t i = (k + 1) % 3;
      const std::size_t j = (k + 2) % 3;
      hit = mod(non[i] - non[j], p) == 0 && mod(non[k] + 2 * non[i], p) == 0;
    }
    if (hit) {
      out.emplace_back("i");
    }
  }

  if (non.size() == 5 && mult.size() == 3) {
    Values perm = non;
    std::sort(perm.begin(), perm.end());
    bool two = false;
    bool three = false;
    do {
      // roles 4x, -x, 2y, -y, -z
      if (!two && perm[0] == -4 * perm[1] && perm[2] == -2 * perm[3]) {
        const std::int64_t x = -perm[1];
        const std::int64_t y = -perm[3];
        const std::int64_t z = -perm[4];
        two = same_multiset(mult, {2 * z - 4 * x, -(z - 2 * x), -(x + y)}) ||
              same_multiset(mult, {2 * (z - x), -(z - x), -(2 * x + y)});
      }
      // roles x, 2y, -y, 2z, -z
      if (!three && perm[1] == -2 * perm[2] && perm[3] == -2 * perm[4]) {
        const std::int64_t x = perm[0];
        const std::int64_t y = -perm[2];
        const std::int64_t z = -perm[4];
        three = (x % 2 == 0 && same_multiset(mult, {-(x / 2 + y), -(x + 2 * z), x / 2 + z})) ||
                same_multiset(mult, {x - y, -2 * (2 * x + z), 2 * x + z});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (two) {
      out.emplace_back("ii");
    }
    if (three) {
      out.emplace_back("iii");
    }
  }

  if (matches_ten_shape(a) || matches_eight_shape(a)) {
    out.emplace_back("iv");
  }
  return out;
}

bool matches_ten_shape(const IntList &a) {
  if (a.length() != 10) {
    return false;
  }
  const Values v(a.begin(), a.end());
  std::vector<bool> used(v.size(), false);
  Values ts;
  return choose_pairs(v, used, ts, 4, 0, [&] {
    Values rest;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!used[i]) {
        rest.push_back(v[i]);
      }
    }
    // rest = {-(t_i + t_j), -(t_k + t_l)} for some pairing of the four t's.
    for (std::size_t k = 1; k < 4; ++k) {
      const std::int64_t first = -(ts[0] + ts[k]);
      const std::int64_t second = -(ts[0] + ts[1] + ts[2] + ts[3]) - first;
      if ((rest[0] == first && rest[1] == second) || (rest[0] == second && rest[1] == first)) {
        return true;
      }
    }
    return false;
  });
}

bool matches_eight_shape(const IntList &a) {
  if (a.length() != 8) {
    return false;
  }
  const Values v(a.begin(), a.end());
  std::vector<bool> used(v.size(), false);
  Values ts;
  // Three entries x, y, z with x + y + z = 0 are c+d, -c, -d for c = -y, d = -z.
  return choose_pairs(v, used, ts, 2, 0, [&] {
    Values rest;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!used[i]) {
        rest.push_back(v[i]);
      }
    }
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (rest[k] == -(ts[0] + ts[1]) && total(rest) == rest[k]) {
        return true;
      }
    }
    return false;
  });
}

IrreducibilityCertificate certify_irreducible(const IntList &a, std::int64_t p) {
  require_prime(p);
  IrreducibilityCertificate cert;
  cert.p = p;
  if (!is_integral_ratio(a).integral_with_height(2)) {
    cert.reason = "not an integral ratio of height 2";
    return cert;
  }
  cert.sporadic_pair = sporadic_pair_excluded(a, p);
  if (!cert.sporadic_pair) {
    cert.reason = "p does not separate the entries";
    return cert;
  }
  cert.sporadic_family = sporadic_family_cases(a, p);

  Values mult;
  Values non;
  split_by(a, p, mult, non);
  cert.family_pair_applicable = mult.size() >= 3 && mult.size() % 2 == 1;
  if (cert.family_pair_applicable) {
    cert.family_pair = family_pair_cases(a, p);
  }
  const std::int64_t largest = *std::max_element(a.begin(), a.end());

  if (a.length() > 10) {
    cert.pair_exclusion = "length";
  } else if (cert.family_pair_applicable && cert.family_pair.empty()) {
    cert.pair_exclusion = "cases";
  } else if (a.length() == 10 && (largest % 2 != 0 || !matches_ten_shape(a))) {
    // Two five-entry members without cancellation; the largest entry of
    // that shape is some 2t, hence even.
    cert.pair_exclusion = largest % 2 != 0 ? "parity" : "shape";
  } else if (a.length() >= 6) {
    cert.decomposition = search_decomposition(a, 4 * a.max_abs(), 2);
    if (!cert.decomposition) {
      cert.pair_exclusion = "search";
    }
  }

  if (!cert.sporadic_family.empty()) {
    cert.reason = "a sporadic + family split is not excluded";
  } else if (cert.decomposition) {
    cert.reason = "explicit decomposition found";
  } else if (cert.pair_exclusion.empty()) {
    cert.reason = "a family + family split is not excluded";
  } else {
    cert.conclusion = IrreducibilityCertificate::Conclusion::Irreducible;
  }
  return cert;
}

} // namespace fratio
