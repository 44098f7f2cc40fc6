// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Optional argv[1]: path to the unit test binary.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sqfree/antidictionary.hpp"
#include "sqfree/automaton.hpp"
#include "sqfree/cli.hpp"
#include "sqfree/counting.hpp"
#include "sqfree/lemma_lab.hpp"

using namespace sqfree;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

bool oracle_equivalence(std::string& detail) {
  for (std::size_t n = 0; n <= 22; ++n) {
    const BigCount simple = count_simple(n).value;
    if (simple != count_square_free_naive(n)) {
      detail = "n=" + std::to_string(n);
      return false;
    }
  }
  const bool anchors = count_simple(3).value == 12 && count_simple(4).value == 18 &&
                       count_simple(9).value == 108;
  if (!anchors) detail = "anchor values";
  return anchors;
}

bool method_equivalence(std::string& detail) {
  for (std::size_t n = 0; n <= 45; ++n)
    if (count_improved(n).value != count_simple(n).value) {
      detail = "n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool automaton_correctness(std::string& detail) {
  for (std::size_t l = 1; l <= 3; ++l) {
    const PatternAutomaton a = build_minimal_square_automaton(l);
    if (a.state_count() > 1 + antidictionary_total_length(l)) {
      detail = "size bound at l=" + std::to_string(l);
      return false;
    }
    for (std::size_t k = 0; k <= 10; ++k) {
      bool ok = true;
      oracle::for_each_word(k, [&](const std::string& s) {
        if (ok && a.accepts(parse_word(s)) != oracle::has_square_half_at_most(s, l)) {
          ok = false;
          detail = "l=" + std::to_string(l) + " word " + s;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool overlap_verification(std::string& detail) {
  const ForcedEqualityGraph g = build_forced_components(13, 4, 6);
  if (g.render() != "1232123232123") {
    detail = "labeling " + g.render();
    return false;
  }
  const auto sq = find_forced_square(g, 1, 13, 5);
  if (!sq || sq->position != 5 || sq->half != 2) {
    detail = "forced square";
    return false;
  }
  std::string labels;
  for (std::size_t i = 0; i < 4; ++i) labels += std::to_string(g.labels[5 + i]);
  if (labels != "2323") {
    detail = "forced square labels " + labels;
    return false;
  }
  const OverlapReport r = verify_overlap_lemma(100);
  detail = std::to_string(r.cases_checked) + " cases";
  return r.violations == 0;
}

bool key_lemma_verification(std::string& detail) {
  const KeyLemmaReport ex = analyze_key_lemma(parse_word("abcabcab"));
  if (!ex.ok() || ex.minimal_squares.size() != 3 || !ex.run || ex.run->p.size() + 1 != 3) {
    detail = "abcabcab: " + ex.to_record();
    return false;
  }
  const KeyLemmaSummary s = verify_key_lemma(15);
  detail = std::to_string(s.words_checked) + " words";
  return s.violations.empty();
}

bool conservation(std::string& detail) {
  const PatternAutomaton a = build_minimal_square_automaton(15);
  const CountTable t = forward_table(a, 30);
  for (std::size_t l = 0; l <= 30; ++l) {
    BigCount sum = 0;
    for (const BigCount& v : t.row(l)) sum += v;
    if (sum != power_of_three(l)) {
      detail = "l=" + std::to_string(l);
      return false;
    }
  }
  detail = std::to_string(a.state_count()) + " states";
  return true;
}

bool property_suite(std::string& detail, const char* unit_tests) {
  std::ostringstream out, err;
  const int code = cli::run({"selftest", "--max-n", "30"}, out, err);
  if (code != 0) {
    detail = "selftest exit " + std::to_string(code);
    return false;
  }
  if (unit_tests == nullptr) {
    detail = "selftest only";
    return true;
  }
  const std::string cmd = std::string("\"") + unit_tests + "\" --minimal > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) {
    detail = "unit tests failed";
    return false;
  }
  detail = "selftest and unit tests";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const char* unit_tests = argc > 1 ? argv[1] : nullptr;
  const std::vector<Criterion> criteria{
      {"AC1 oracle equivalence n<=22", oracle_equivalence},
      {"AC2 method equivalence n<=45", method_equivalence},
      {"AC3 automaton correctness l<=3, words<=10", automaton_correctness},
      {"AC4 overlap verification to 100", overlap_verification},
      {"AC5 key-lemma verification to 15", key_lemma_verification},
      {"AC6 forward conservation l<=30 on M_15", conservation},
      {"AC7 property suite and selftest",
       [&](std::string& d) { return property_suite(d, unit_tests); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS " : "FAIL ") << c.name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << " [" << ms << " ms]\n";
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << '\n';
  return failures == 0 ? 0 : 1;
}
