#pragma once

// Machine checks of the two structural facts the improved counter relies on.
//
// Overlap check: for a word s whose proper prefix uu and proper suffix vv
// are both minimal squares, either |s| >= 3*min(|u|,|v|) + 1, or |u| = |v|
// and s = uup with p a non-empty prefix of u. For each (|s|, |u|, |v|) the
// equalities forced by the two squares are propagated with union-find; a
// forced square shorter than uu inside uu (or shorter than vv inside vv)
// rules the case out.
//
// Run check: a word with no square of half < |s|/3 that is not square-free
// contains a unique maximal factor wwp (p a prefix of w), and its minimal
// square factors are exactly the |p|+1 factors of wwp of length 2|w|.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false if already joined.
  bool unite(std::size_t x, std::size_t y);
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

struct ForcedEqualityGraph {
  std::size_t length = 0;
  std::size_t hu = 0;
  std::size_t hv = 0;
  /// Component label per position, numbered 1, 2, ... by first occurrence.
  std::vector<std::uint32_t> labels;

  /// Labels as a digit string ("1232123232123"); comma-separated once any
  /// label exceeds 9.
  std::string render() const;
};

/// Positions i ~ i+hu for i < hu and i ~ i+hv for length-2hv <= i < length-hv.
/// Requires hu, hv >= 1, 2hu < length and 2hv < length; throws
/// std::invalid_argument otherwise.
ForcedEqualityGraph build_forced_components(std::size_t length, std::size_t hu, std::size_t hv);

struct ForcedSquare {
  std::size_t position = 0;
  std::size_t half = 0;
  friend bool operator==(const ForcedSquare&, const ForcedSquare&) = default;
};

/// Smallest-half, then leftmost, square of labels within [window_start,
/// window_end) with half <= max_half.
std::optional<ForcedSquare> find_forced_square(const ForcedEqualityGraph& g,
                                               std::size_t window_start, std::size_t window_end,
                                               std::size_t max_half);

enum class OverlapStatus {
  kExcludedByForcedSquare,
  kExceptionalFormConfirmed,
  kSatisfiedVacuously,
  kViolation,
};

const char* to_string(OverlapStatus s);

struct OverlapVerdict {
  std::size_t length = 0;
  std::size_t hu = 0;
  std::size_t hv = 0;
  OverlapStatus status = OverlapStatus::kViolation;
  std::optional<ForcedSquare> witness;

  /// "len=13 hu=4 hv=6 status=EXCLUDED_BY_FORCED_SQUARE witness=5:2"
  std::string to_record() const;
};

/// Classifies a single (|s|, |u|, |v|) case.
OverlapVerdict check_overlap_case(std::size_t length, std::size_t hu, std::size_t hv);

struct OverlapReport {
  std::size_t max_length = 0;
  std::vector<OverlapVerdict> verdicts;
  std::uint64_t cases_checked = 0;
  std::uint64_t excluded = 0;
  std::uint64_t exceptional = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t violations = 0;
};

/// Sweeps every (|s|, hu, hv) with 3 <= |s| <= max_length, 2hu < |s| and
/// 2hv < |s|. Cases with |s| > 3*min(hu,hv) are counted as vacuous and only
/// listed when `exhaustive` is set. Throws std::invalid_argument if
/// max_length < 3.
OverlapReport verify_overlap_lemma(std::size_t max_length, bool exhaustive = false);

struct SquareOccurrence {
  std::size_t position = 0;
  std::size_t half = 0;
  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

struct SquareRun {
  Word w;
  Word p;
  std::size_t start = 0;
};

struct KeyLemmaReport {
  Word s;
  std::vector<SquareOccurrence> minimal_squares;
  std::optional<SquareRun> run;
  std::size_t expected_count = 0;
  std::size_t observed_count = 0;
  /// Empty when the word conforms.
  std::string failure;

  bool ok() const noexcept { return failure.empty(); }
  std::string to_record() const;
};

/// All minimal-square factors of s, ordered by position.
std::vector<SquareOccurrence> minimal_square_factors(WordView s);

/// Checks the run structure of one word. A square-free word conforms
/// vacuously and has no run.
KeyLemmaReport analyze_key_lemma(WordView s);

struct KeyLemmaSummary {
  std::size_t max_length = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t with_squares = 0;
  std::vector<KeyLemmaReport> violations;
};

/// Every ternary word of length <= max_length without a square of half h,
/// 3h < |s|, is analyzed. Throws std::invalid_argument if max_length < 3.
KeyLemmaSummary verify_key_lemma(std::size_t max_length);

}  // namespace sqfree
