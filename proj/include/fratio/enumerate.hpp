#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fratio/int_list.hpp"
#include "fratio/rational.hpp"

namespace fratio {

enum class SmallNormShape { Singleton, Pair, HalvingTriple, HalvingQuad, Sporadic, None };

std::string to_string(SmallNormShape s);

/// Shapes of the primitive lists of norm below 31/180, up to negation:
/// [1], [a,b], [a,-2a,b], [a,-2a,b,-2b] or one of `sporadics`.
SmallNormShape small_norm_shape(const IntList &a, std::span<const IntList> sporadics);

struct SmallNormReport {
  std::size_t scanned = 0; // primitive non-degenerate lists visited
  std::vector<std::pair<IntList, Rat>> below; // norm < threshold, in enumeration order
  std::vector<IntList> unexplained;           // below, with no known shape
  std::vector<IntList> odd_balanced_below_quarter; // s = 0, odd length, norm < 1/4
  std::vector<IntList> even_balanced_below;         // s = 0, even length, norm < threshold
};

/// Exhaustive scan of primitive non-degenerate lists with 1 <= length <=
/// max_length and entries in [-max_entry, max_entry]. Multisets are visited
/// by length, then lexicographically in ascending value order. The norm test
/// uses exact 128-bit arithmetic over the common denominator lcm(|a_i|)^2;
/// work is split across threads by first entry and merged in order.
SmallNormReport enumerate_small_norm(int max_length, int max_entry, const Rat &threshold,
                                     std::span<const IntList> sporadics);

/// Serial implementation computing every norm with Rat; same order.
SmallNormReport enumerate_small_norm_reference(int max_length, int max_entry, const Rat &threshold,
                                               std::span<const IntList> sporadics);

} // namespace fratio
