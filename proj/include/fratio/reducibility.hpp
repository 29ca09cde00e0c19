#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fratio/int_list.hpp"

namespace fratio {

class HypothesisNotMet : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// a = b + c with both parts integral ratios of height 1. `canceled` holds
/// |w| for every pair (w in b, -w in c) removed by the concatenation.
struct Decomposition {
  IntList b;
  IntList c;
  std::vector<std::int64_t> canceled;
};

/// Bounded search for a splitting of a height-2 list into two height-1
/// integral ratios, allowing up to max_pairs cancelling pairs (w, -w) with
/// 1 <= |w| <= cancel_bound. Splits are tried with fewer pairs first, then in
/// ascending subset order (entry 0 always in b). nullopt is not a proof of
/// irreducibility. cancel_bound <= 0 means max |entry|.
std::optional<Decomposition> search_decomposition(const IntList &a, std::int64_t cancel_bound = 0, int max_pairs = 2);

/// concat(b, c) == a and both parts are integral of height 1.
bool revalidate(const IntList &a, const Decomposition &d);

/// Prime p >= 11 dividing some but not all entries, with the multiples of p
/// summing to a nonzero value. Then no split into two dilates of sporadic
/// height-1 ratios exists (sporadic entries are 7-smooth).
bool sporadic_pair_excluded(const IntList &a, std::int64_t p);

/// Case labels ("i", "ii", "iii") a split into a sporadic dilate plus an
/// infinite-family member would force. Empty means no such split.
/// Throws HypothesisNotMet unless sporadic_pair_excluded(a, p).
std::vector<std::string> sporadic_family_cases(const IntList &a, std::int64_t p);

/// Case labels ("i".."iv") a split into two infinite-family members would
/// force, given an odd number >= 3 of multiples of p with nonzero sum.
/// Throws HypothesisNotMet otherwise.
std::vector<std::string> family_pair_cases(const IntList &a, std::int64_t p);

/// Whole-list match of [2a,-a,2b,-b,2c,-c,2d,-d,-(a+b),-(c+d)] (length 10).
bool matches_ten_shape(const IntList &a);
/// Whole-list match of [2a,-a,2b,-b,-(a+b),c+d,-c,-d] (length 8).
bool matches_eight_shape(const IntList &a);

struct IrreducibilityCertificate {
  enum class Conclusion { Irreducible, Inconclusive };

  std::int64_t p = 0;
  bool sporadic_pair = false;             // first criterion holds
  std::vector<std::string> sporadic_family; // cases that survive
  bool family_pair_applicable = false;
  std::vector<std::string> family_pair;
  // How a split into two infinite-family members was excluded:
  // "length", "cases", "parity", "search" or empty.
  std::string pair_exclusion;
  std::optional<Decomposition> decomposition; // found by the bounded search
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string reason;

  bool irreducible() const { return conclusion == Conclusion::Irreducible; }
};

std::string to_string(IrreducibilityCertificate::Conclusion c);

/// Irreducible only when all three kinds of splitting are excluded:
/// sporadic + sporadic by the divisibility criterion, sporadic + family by an
/// empty case set, and family + family by length > 10, an empty or refuted
/// case set, or (length >= 6) an exhaustive bounded search. Height-1
/// infinite-family members have at most 5 entries with cancelled values below
/// 3 max |entry|, so a search with cancel bound 4 max |entry| and 2 pairs is
/// complete for that kind. Never claims reducibility.
IrreducibilityCertificate certify_irreducible(const IntList &a, std::int64_t p);

bool is_prime(std::int64_t n);

} // namespace fratio
