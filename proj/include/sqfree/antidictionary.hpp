#pragma once

// Streaming generation of minimal squares (the antidictionary M_l: minimal
// squares of half-length at most l). Nothing is stored; each square is
// handed to the visitor and discarded.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>

#include "sqfree/word.hpp"

namespace sqfree {

struct MinimalSquare {
  Word half;
  Word doubled;
  std::size_t half_length = 0;
};

using MinimalSquareVisitor = std::function<void(const MinimalSquare&)>;

/// Visits every minimal square with half-length in [lo, hi], ordered by
/// half-length and then lexicographically by half. Throws
/// std::invalid_argument unless 1 <= lo <= hi.
std::uint64_t minimal_squares_in_range(std::size_t lo, std::size_t hi,
                                       const MinimalSquareVisitor& visit);

/// Same stream restricted to halves starting with `prefix`. Halves shorter
/// than the prefix are never visited; callers partitioning the stream must
/// pick |prefix| <= lo.
std::uint64_t minimal_squares_in_range_from(WordView prefix, std::size_t lo, std::size_t hi,
                                            const MinimalSquareVisitor& visit);

/// The same set as minimal_squares_in_range_from in DFS preorder of the
/// half (one pass instead of one per half-length). For consumers that do
/// not depend on order.
std::uint64_t minimal_squares_unordered(WordView prefix, std::size_t lo, std::size_t hi,
                                        const MinimalSquareVisitor& visit);

std::uint64_t minimal_squares_up_to(std::size_t max_half, const MinimalSquareVisitor& visit);

/// Sum of |ww| over M_l, the input of the automaton size bound.
std::uint64_t antidictionary_total_length(std::size_t max_half);

/// One doubled word per line, in stream order. Returns the count.
std::uint64_t dump_antidictionary(std::size_t max_half, std::ostream& out);

}  // namespace sqfree
