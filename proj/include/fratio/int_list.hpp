#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fratio {

enum class ListErrorKind { ZeroEntry, Degenerate, ZeroDilation, EmptyList, Parse };

class ListError : public std::invalid_argument {
public:
  ListError(ListErrorKind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {}
  ListErrorKind kind() const noexcept { return kind_; }

private:
  ListErrorKind kind_;
};

/// A non-degenerate multiset of nonzero integers.
///
/// Positive entries are numerator factorial arguments, negated entries are
/// denominator arguments. Storage is canonical: positives ascending, then
/// negatives by ascending magnitude, so equality is multiset equality.
/// Entries are 64-bit; breakpoint sweeps cost O(sum |a_j|), which already
/// restricts practical inputs far below that range.
class IntList {
public:
  using value_type = std::int64_t;

  /// The empty list. Only concat produces it; criteria reject it.
  IntList() = default;

  /// Validating constructor (make_list).
  static IntList make(std::span<const value_type> raw);
  static IntList make(std::initializer_list<value_type> raw) {
    return make(std::span<const value_type>(raw.begin(), raw.size()));
  }

  /// Parses "[30,1,-15,-10,-6]" or "30,1,-15,-10,-6"; whitespace is ignored.
  static IntList parse(std::string_view text);

  std::span<const value_type> entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  value_type sum() const;
  /// (#negative entries) - (#positive entries).
  int height() const;
  std::size_t positive_count() const;
  std::size_t negative_count() const { return length() - positive_count(); }
  /// gcd of absolute values; 0 for the empty list.
  value_type content() const;
  bool is_primitive() const { return content() == 1; }
  value_type max_abs() const;

  /// Compact text form "[a,b,...]".
  std::string to_string() const;

  friend bool operator==(const IntList &, const IntList &) = default;
  friend auto operator<=>(const IntList &, const IntList &) = default;

private:
  explicit IntList(std::vector<value_type> canonical) : entries_(std::move(canonical)) {}
  friend IntList concat(const IntList &, const IntList &);
  friend IntList from_multiset(std::vector<value_type>);

  std::vector<value_type> entries_;
};

/// Canonical ordering key used for storage and printing.
bool canonical_less(IntList::value_type a, IntList::value_type b);

/// Returns (a / content(a), content(a)).
std::pair<IntList, IntList::value_type> to_primitive(const IntList &a);

/// Every entry multiplied by k. Throws ListError(ZeroDilation) for k == 0.
IntList dilate(const IntList &a, IntList::value_type k);

/// Multiset union with (v, -v) pairs cancelled until non-degenerate.
IntList concat(const IntList &a, const IntList &b);

/// Builds a list from an arbitrary multiset: zeros dropped, +/- pairs cancelled.
IntList from_multiset(std::vector<IntList::value_type> values);

} // namespace fratio
