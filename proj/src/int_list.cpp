#include "fratio/int_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fratio {

namespace {

using V = IntList::value_type;

V checked_abs(V v) {
  if (v == std::numeric_limits<V>::min()) {
    throw std::overflow_error("list entry out of range");
  }
  return v < 0 ? -v : v;
}

} // namespace

bool canonical_less(V a, V b) {
  const bool na = a < 0;
  const bool nb = b < 0;
  if (na != nb) {
    return !na;
  }
  return checked_abs(a) < checked_abs(b);
}

IntList IntList::make(std::span<const V> raw) {
  std::vector<V> out(raw.begin(), raw.end());
  for (V v : out) {
    if (v == 0) {
      throw ListError(ListErrorKind::ZeroEntry, "list entries must be nonzero");
    }
    checked_abs(v);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  for (V v : out) {
    if (v > 0 && std::binary_search(out.begin(), out.end(), -v, canonical_less)) {
      throw ListError(ListErrorKind::Degenerate,
                      "list contains both " + std::to_string(v) + " and " + std::to_string(-v));
    }
  }
  return IntList(std::move(out));
}

IntList IntList::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(c);
    }
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') {
      throw ListError(ListErrorKind::Parse, "unbalanced bracket in list '" + std::string(text) + "'");
    }
    s = s.substr(1, s.size() - 2);
  }
  std::vector<V> raw;
  if (s.empty()) {
    return IntList();
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    std::string_view tok(s.data() + start, comma - start);
    if (!tok.empty() && tok.front() == '+') {
      tok.remove_prefix(1);
    }
    V v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ListError(ListErrorKind::Parse, "bad list entry '" + std::string(tok) + "'");
    }
    raw.push_back(v);
    start = comma + 1;
  }
  return make(raw);
}

V IntList::sum() const {
  V total = 0;
  for (V v : entries_) {
    if (__builtin_add_overflow(total, v, &total)) {
      throw std::overflow_error("list sum overflows 64 bits");
    }
  }
  return total;
}

std::size_t IntList::positive_count() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](V v) { return v > 0; }));
}

int IntList::height() const {
  return static_cast<int>(negative_count()) - static_cast<int>(positive_count());
}

V IntList::content() const {
  V g = 0;
  for (V v : entries_) {
    g = std::gcd(g, checked_abs(v));
  }
  return g;
}

V IntList::max_abs() const {
  V m = 0;
  for (V v : entries_) {
    m = std::max(m, checked_abs(v));
  }
  return m;
}

std::string IntList::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += std::to_string(entries_[i]);
  }
  return out + "]";
}

std::pair<IntList, V> to_primitive(const IntList &a) {
  const V g = a.content();
  if (g <= 1) {
    return {a, g == 0 ? 1 : g};
  }
  std::vector<V> out(a.begin(), a.end());
  for (V &v : out) {
    v /= g;
  }
  return {IntList::make(out), g};
}

IntList dilate(const IntList &a, V k) {
  if (k == 0) {
    throw ListError(ListErrorKind::ZeroDilation, "dilation factor must be nonzero");
  }
  std::vector<V> out(a.begin(), a.end());
  for (V &v : out) {
    if (__builtin_mul_overflow(v, k, &v)) {
      throw std::overflow_error("dilation overflows 64 bits");
    }
  }
  return IntList::make(out);
}

IntList from_multiset(std::vector<V> values) {
  std::map<V, long> counts;
  for (V v : values) {
    if (v != 0) {
      checked_abs(v);
      ++counts[v];
    }
  }
  std::vector<V> out;
  for (auto &[v, n] : counts) {
    if (v > 0) {
      auto it = counts.find(-v);
      if (it != counts.end()) {
        const long k = std::min(n, it->second);
        n -= k;
        it->second -= k;
      }
    }
  }
  for (const auto &[v, n] : counts) {
    out.insert(out.end(), static_cast<std::size_t>(n), v);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return IntList(std::move(out));
}

IntList concat(const IntList &a, const IntList &b) {
  std::vector<V> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return from_multiset(std::move(all));
}

} // namespace fratio
