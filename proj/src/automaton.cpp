#include "sqfree/automaton.hpp"

#include <ostream>
#include <stdexcept>

#include "sqfree/antidictionary.hpp"

namespace sqfree {

PredecessorIndex PatternAutomaton::predecessors() const {
  const std::size_t n = state_count();
  PredecessorIndex idx;
  idx.offsets.assign(n + 1, 0);
  for (StateId target : next_) ++idx.offsets[target + 1];
  for (std::size_t q = 0; q < n; ++q) idx.offsets[q + 1] += idx.offsets[q];

  idx.entries.resize(next_.size());
  std::vector<std::size_t> fill(idx.offsets.begin(), idx.offsets.end() - 1);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t d = 0; d < kAlphabetSize; ++d) {
      const StateId target = next_[p * kAlphabetSize + d];
      idx.entries[fill[target]++] = {static_cast<StateId>(p), symbol_from_index(d)};
    }
  return idx;
}

void PatternAutomaton::dump(std::ostream& out) const {
  for (std::size_t q = 0; q < state_count(); ++q) {
    out << q;
    for (std::size_t d = 0; d < kAlphabetSize; ++d) out << ' ' << next_[q * kAlphabetSize + d];
    out << ' ' << (is_accepting(static_cast<StateId>(q)) ? 1 : 0) << '\n';
  }
}

AutomatonBuilder::AutomatonBuilder() : nodes_(1) {}

void AutomatonBuilder::add(WordView pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern in automaton input");
  ++patterns_;
  std::uint32_t node = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (nodes_[node].terminal) {
      // An earlier pattern is a prefix of this one; nothing new is accepted.
      ++redundant_;
      return;
    }
    const std::size_t d = index(pattern[i]);
    if (nodes_[node].child[d] == kNone) {
      nodes_[node].child[d] = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    node = nodes_[node].child[d];
  }
  nodes_[node].terminal = true;
}

PatternAutomaton AutomatonBuilder::build() const {
  const std::size_t n = nodes_.size();
  std::vector<std::uint32_t> go(n * kAlphabetSize);
  std::vector<std::uint32_t> fail(n, 0);
  std::vector<char> accepting(n, 0);
  std::vector<std::uint32_t> order;
  order.reserve(n);

  order.push_back(0);
  accepting[0] = nodes_[0].terminal;
  for (std::size_t d = 0; d < kAlphabetSize; ++d) {
    const std::uint32_t c = nodes_[0].child[d];
    go[d] = c == kNone ? 0 : c;
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t u = order[head];
    for (std::size_t d = 0; d < kAlphabetSize; ++d) {
      const std::uint32_t v = nodes_[u].child[d];
      if (v == kNone) {
        if (u != 0) go[u * kAlphabetSize + d] = go[fail[u] * kAlphabetSize + d];
        continue;
      }
      fail[v] = u == 0 ? 0 : go[fail[u] * kAlphabetSize + d];
      // A node accepts if its label ends with a pattern (fail chain) or
      // extends an accepting prefix (parent).
      accepting[v] = nodes_[v].terminal || accepting[u] || accepting[fail[v]];
      go[u * kAlphabetSize + d] = v;
      order.push_back(v);
    }
  }

  std::vector<StateId> renumber(n, 0);
  StateId live = 0;
  for (std::uint32_t u : order)
    if (!accepting[u]) renumber[u] = live++;
  const bool any_accepting = live != n;
  const StateId sink = live;

  PatternAutomaton a;
  a.redundant_ = redundant_;
  const std::size_t states = live + (any_accepting ? 1 : 0);
  a.next_.resize(states * kAlphabetSize);
  for (std::uint32_t u : order) {
    if (accepting[u]) continue;
    for (std::size_t d = 0; d < kAlphabetSize; ++d) {
      const std::uint32_t t = go[u * kAlphabetSize + d];
      a.next_[renumber[u] * kAlphabetSize + d] = accepting[t] ? sink : renumber[t];
    }
  }
  if (any_accepting) {
    a.sink_ = sink;
    for (std::size_t d = 0; d < kAlphabetSize; ++d) a.next_[sink * kAlphabetSize + d] = sink;
  }
  return a;
}

PatternAutomaton build_automaton(std::span<const Word> patterns) {
  AutomatonBuilder builder;
  for (const Word& p : patterns) builder.add(p);
  return builder.build();
}

PatternAutomaton build_minimal_square_automaton(std::size_t max_half,
                                                std::uint64_t* patterns_used) {
  AutomatonBuilder builder;
  if (max_half > 0)
    minimal_squares_unordered(WordView{}, 1, max_half,
                              [&](const MinimalSquare& sq) { builder.add(sq.doubled); });
  if (patterns_used) *patterns_used = builder.pattern_count();
  return builder.build();
}

}  // namespace sqfree
