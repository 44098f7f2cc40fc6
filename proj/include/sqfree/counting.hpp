#pragma once

// Exact counting of ternary square-free words.
//
// count_simple runs a forward DP over the automaton for M_{n/2}.
// count_improved uses the automaton for M_{n/3} only: it counts promising
// words (no square of half <= n/3) and then removes those containing a
// longer minimal square. Such a word has a unique maximal factor wwp whose
// |p|+1 minimal squares are counted once each by the ww sum and |p| times
// by the www_0 sum, so the difference counts every such word exactly once.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "sqfree/automaton.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

enum class TableSemantics {
  kForward,   // f(l, q) = #words w, |w| = l, run(q0, w) = q
  kRejected,  // f(l, q) = #words s, |s| = l, run(q, s) not accepting
};

struct CountTable {
  TableSemantics semantics = TableSemantics::kForward;
  /// First row index held in `rows`; non-zero when only the final row was kept.
  std::size_t first_row = 0;
  std::vector<std::vector<BigCount>> rows;

  std::size_t max_len() const noexcept { return first_row + rows.size() - 1; }
  const BigCount& at(std::size_t len, StateId q) const { return rows.at(len - first_row).at(q); }
  const std::vector<BigCount>& row(std::size_t len) const { return rows.at(len - first_row); }
};

/// Forward DP. With `keep_all_rows == false` only the row for `max_len` is
/// retained and at most two rows are resident at any time.
CountTable forward_table(const PatternAutomaton& a, std::size_t max_len,
                         bool keep_all_rows = true);

/// Rejected-suffix DP; every row 0..max_len is retained.
CountTable rejected_table(const PatternAutomaton& a, std::size_t max_len);

/// Sum of a forward row over the non-accepting states.
BigCount rejected_mass(const PatternAutomaton& a, const std::vector<BigCount>& row);

/// Number of promising words of length n with `t` starting at position
/// `offset`: f(offset, run(q0, t^R)) * f(n - |t| - offset, run(q0, t)).
/// `table` must be a rejected table built from `a`. Requires
/// 2*floor(n/3)+1 <= |t| <= n and offset <= n - |t|; throws
/// std::invalid_argument otherwise. A t that is itself accepted by `a`
/// has no promising extension and yields 0.
BigCount g_count(const CountTable& table, const PatternAutomaton& a, std::size_t n, WordView t,
                 std::size_t offset);

enum class Method { kNaive, kSimple, kImproved };

std::string_view to_string(Method m);
/// Throws std::invalid_argument for unknown names.
Method parse_method(std::string_view name);

struct CountStats {
  std::size_t automaton_states = 0;
  std::uint64_t antidictionary_size = 0;
  std::uint64_t squares_iterated = 0;
  std::chrono::nanoseconds elapsed{0};
  /// Improved method only: f(n, q0) and the bracketed correction term.
  std::optional<BigCount> promising_total;
  std::optional<BigCount> promising_with_square;
};

struct CountResult {
  std::size_t n = 0;
  Method method = Method::kSimple;
  BigCount value;
  CountStats stats;
};

struct CountOptions {
  /// Worker threads for the minimal-square sweep of the improved method.
  unsigned threads = 1;
  /// Heartbeat sink; every `heartbeat_interval` squares a progress line is
  /// written here. nullptr disables it.
  std::ostream* heartbeat = nullptr;
  std::uint64_t heartbeat_interval = 1'000'000;
};

CountResult count_naive(std::size_t n);
CountResult count_simple(std::size_t n);
CountResult count_improved(std::size_t n, const CountOptions& options = {});
CountResult count(std::size_t n, Method method, const CountOptions& options = {});

/// One result per n in [lo, hi]. The simple method shares one automaton and
/// one forward sweep across the whole range. Throws std::invalid_argument if
/// lo > hi.
std::vector<CountResult> count_range(std::size_t lo, std::size_t hi, Method method,
                                     const CountOptions& options = {});

}  // namespace sqfree
