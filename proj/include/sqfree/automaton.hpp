#pragma once

// Deterministic pattern automaton over {a,b,c} accepting exactly the words
// that contain at least one pattern as a factor.
//
// Built as a trie with failure links, then materialized into a dense table
// of three transitions per state. Every accepting trie node is collapsed
// into one absorbing accept sink, so a built automaton has at most one
// accepting state. State 0 is the start state.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

using StateId = std::uint32_t;

struct Predecessor {
  StateId state;
  Symbol symbol;
};

/// Reverse-transition index in compressed-row form: the predecessors of q
/// are entries[offsets[q] .. offsets[q+1]).
struct PredecessorIndex {
  std::vector<std::size_t> offsets;
  std::vector<Predecessor> entries;

  std::span<const Predecessor> of(StateId q) const {
    return {entries.data() + offsets[q], offsets[q + 1] - offsets[q]};
  }
};

class PatternAutomaton {
 public:
  static constexpr StateId kStart = 0;

  std::size_t state_count() const noexcept { return next_.size() / kAlphabetSize; }
  StateId start_state() const noexcept { return kStart; }
  std::optional<StateId> accept_sink() const noexcept { return sink_; }

  StateId transition(StateId q, Symbol s) const noexcept {
    return next_[q * kAlphabetSize + index(s)];
  }
  bool is_accepting(StateId q) const noexcept { return sink_ && *sink_ == q; }

  StateId run(StateId q, WordView w) const noexcept {
    for (Symbol s : w) q = transition(q, s);
    return q;
  }
  bool accepts(WordView w) const noexcept { return is_accepting(run(kStart, w)); }

  PredecessorIndex predecessors() const;

  /// One line per state: "<id> <next a> <next b> <next c> <0|1>".
  void dump(std::ostream& out) const;

  const std::vector<StateId>& table() const noexcept { return next_; }

  /// Number of patterns dropped because they contained an earlier pattern.
  std::size_t redundant_patterns() const noexcept { return redundant_; }

 private:
  friend class AutomatonBuilder;

  std::vector<StateId> next_;
  std::optional<StateId> sink_;
  std::size_t redundant_ = 0;
};

/// Incremental trie construction followed by a single build().
class AutomatonBuilder {
 public:
  AutomatonBuilder();

  /// Throws std::invalid_argument on an empty pattern.
  void add(WordView pattern);

  PatternAutomaton build() const;

  std::size_t pattern_count() const noexcept { return patterns_; }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  struct Node {
    std::array<std::uint32_t, kAlphabetSize> child{kNone, kNone, kNone};
    bool terminal = false;
  };

  std::vector<Node> nodes_;
  std::size_t patterns_ = 0;
  std::size_t redundant_ = 0;
};

PatternAutomaton build_automaton(std::span<const Word> patterns);

/// Automaton for M_l, the minimal squares of half-length at most l.
/// `max_half == 0` gives the single-state automaton accepting nothing.
PatternAutomaton build_minimal_square_automaton(std::size_t max_half,
                                                std::uint64_t* patterns_used = nullptr);

}  // namespace sqfree
