#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sqfree/antidictionary.hpp"
#include "sqfree/automaton.hpp"

using namespace sqfree;

namespace {

PatternAutomaton from_strings(const std::vector<std::string>& patterns) {
  std::vector<Word> words;
  for (const auto& p : patterns) words.push_back(parse_word(p));
  return build_automaton(words);
}

std::size_t total_length(const std::vector<std::string>& patterns) {
  std::size_t t = 0;
  for (const auto& p : patterns) t += p.size();
  return t;
}

bool accepting_states_absorb(const PatternAutomaton& a) {
  for (StateId q = 0; q < a.state_count(); ++q)
    if (a.is_accepting(q))
      for (std::size_t d = 0; d < kAlphabetSize; ++d)
        if (!a.is_accepting(a.transition(q, symbol_from_index(d)))) return false;
  return true;
}

}  // namespace

TEST_CASE("automaton for aa, bb, cc") {
  const std::vector<std::string> pats{"aa", "bb", "cc"};
  const PatternAutomaton a = from_strings(pats);
  CHECK(a.state_count() <= 7);
  CHECK(a.accept_sink().has_value());
  for (std::size_t len = 0; len <= 8; ++len)
    oracle::for_each_word(len, [&](const std::string& s) {
      bool repeated = false;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) repeated |= s[i] == s[i + 1];
      if (a.accepts(parse_word(s)) != repeated) FAIL("mismatch on " << s);
    });
  CHECK(a.is_accepting(a.run(a.start_state(), parse_word("aa"))));
}

TEST_CASE("empty pattern set accepts nothing") {
  const PatternAutomaton a = build_automaton({});
  CHECK(a.state_count() == 1);
  CHECK_FALSE(a.accept_sink().has_value());
  for (std::size_t d = 0; d < kAlphabetSize; ++d)
    CHECK(a.transition(0, symbol_from_index(d)) == 0);
  CHECK_FALSE(a.accepts(parse_word("aaaa")));
  CHECK(build_minimal_square_automaton(0).state_count() == 1);
}

TEST_CASE("empty pattern is rejected") {
  AutomatonBuilder b;
  b.add(parse_word("ab"));
  CHECK_THROWS_AS(b.add(Word{}), std::invalid_argument);
}

TEST_CASE("run folds transitions") {
  const PatternAutomaton m2 = build_minimal_square_automaton(2);
  CHECK(m2.run(m2.start_state(), Word{}) == m2.start_state());
  CHECK_FALSE(m2.is_accepting(m2.run(m2.start_state(), parse_word("abc"))));
  const Word w = parse_word("abcab");
  StateId q = m2.start_state();
  for (Symbol s : w) q = m2.transition(q, s);
  CHECK(m2.run(m2.start_state(), w) == q);
}

TEST_CASE("M_2 automaton agrees with the half-bound oracle on all words up to 8") {
  const PatternAutomaton a = build_minimal_square_automaton(2);
  for (std::size_t len = 0; len <= 8; ++len)
    oracle::for_each_word(len, [&](const std::string& s) {
      if (a.accepts(parse_word(s)) != oracle::has_square_half_at_most(s, 2))
        FAIL("mismatch on " << s);
    });
}

TEST_CASE("predecessor index") {
  const PatternAutomaton single = build_automaton({});
  const PredecessorIndex p1 = single.predecessors();
  REQUIRE(p1.of(0).size() == 3);
  for (const Predecessor& p : p1.of(0)) CHECK(p.state == 0);

  const PatternAutomaton a = from_strings({"aa", "bb", "cc"});
  const PredecessorIndex idx = a.predecessors();
  std::size_t total = 0;
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (const Predecessor& p : idx.of(q)) CHECK(a.transition(p.state, p.symbol) == q);
    total += idx.of(q).size();
  }
  CHECK(total == 3 * a.state_count());

  const StateId after_a = a.run(a.start_state(), parse_word("a"));
  const StateId after_ab = a.run(a.start_state(), parse_word("ab"));
  const auto preds = idx.of(after_ab);
  CHECK(std::any_of(preds.begin(), preds.end(), [&](const Predecessor& p) {
    return p.state == after_a && p.symbol == Symbol::b;
  }));
}

TEST_CASE("minimal-square automata: oracle equivalence, absorption, size bound") {
  for (std::size_t l = 1; l <= 3; ++l) {
    const PatternAutomaton a = build_minimal_square_automaton(l);
    CAPTURE(l);
    CHECK(a.state_count() <= 1 + antidictionary_total_length(l));
    CHECK(accepting_states_absorb(a));
    for (std::size_t len = 0; len <= 10; ++len)
      oracle::for_each_word(len, [&](const std::string& s) {
        if (a.accepts(parse_word(s)) != oracle::has_square_half_at_most(s, l))
          FAIL("mismatch on " << s);
      });
  }
  for (std::size_t l = 4; l <= 12; ++l) {
    const PatternAutomaton a = build_minimal_square_automaton(l);
    CHECK(a.state_count() <= 1 + antidictionary_total_length(l));
    CHECK(accepting_states_absorb(a));
  }
}

TEST_CASE("builds are reproducible and independent of stream order") {
  std::vector<Word> ordered;
  minimal_squares_up_to(9, [&](const MinimalSquare& sq) { ordered.push_back(sq.doubled); });
  const PatternAutomaton a = build_automaton(ordered);
  const PatternAutomaton b = build_automaton(ordered);
  CHECK(a.table() == b.table());
  CHECK(a.table() == build_minimal_square_automaton(9).table());

  std::ostringstream da, db;
  a.dump(da);
  b.dump(db);
  CHECK(da.str() == db.str());
}

TEST_CASE("dump format") {
  const PatternAutomaton a = from_strings({"aa"});
  std::ostringstream out;
  a.dump(out);
  // States: 0 = start, 1 = after a, 2 = sink.
  CHECK(out.str() == "0 1 0 0 0\n1 2 0 0 0\n2 2 2 2 1\n");
}

TEST_CASE("superstring patterns stay correct") {
  for (const auto& pats : std::vector<std::vector<std::string>>{
           {"ab", "abc", "cab"}, {"abc", "ab"}, {"b", "abba", "cc"}, {"aba", "b"}}) {
    const PatternAutomaton a = from_strings(pats);
    CHECK(a.state_count() <= 1 + total_length(pats));
    CHECK(accepting_states_absorb(a));
    for (std::size_t len = 0; len <= 7; ++len)
      oracle::for_each_word(len, [&](const std::string& s) {
        if (a.accepts(parse_word(s)) != oracle::contains_any(s, pats)) FAIL("mismatch on " << s);
      });
  }
  CHECK(from_strings({"ab", "abc"}).redundant_patterns() == 1);
}

TEST_CASE("property: random pattern sets against substring search") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<std::string> pats;
    const std::size_t k = 1 + rng() % 6;
    for (std::size_t i = 0; i < k; ++i) pats.push_back(oracle::random_word(rng, 1 + rng() % 5));
    const PatternAutomaton a = from_strings(pats);
    CHECK(a.state_count() <= 1 + total_length(pats));
    CHECK(accepting_states_absorb(a));
    for (int j = 0; j < 200; ++j) {
      const std::string s = oracle::random_word(rng, rng() % 16);
      if (a.accepts(parse_word(s)) != oracle::contains_any(s, pats)) FAIL("mismatch on " << s);
    }
  }
}
