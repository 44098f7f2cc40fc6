#include "sqfree/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "sqfree/antidictionary.hpp"
#include "sqfree/automaton.hpp"
#include "sqfree/counting.hpp"
#include "sqfree/lemma_lab.hpp"
#include "sqfree/word.hpp"

namespace sqfree::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kNaiveLimit = 30;
constexpr std::size_t kOverlapLimit = 300;
constexpr std::size_t kKeyLemmaLimit = 18;
constexpr std::size_t kListingLimit = 12;

double millis(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

// Raised for argument problems detected after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json stats_json(const CountStats& s) {
  json j{{"automaton_states", s.automaton_states},
         {"antidictionary_size", s.antidictionary_size},
         {"squares_iterated", s.squares_iterated},
         {"elapsed_ms", millis(s.elapsed)}};
  if (s.promising_total) j["promising_total"] = s.promising_total->get_str();
  if (s.promising_with_square) j["promising_with_square"] = s.promising_with_square->get_str();
  return j;
}

json result_json(const CountResult& r) {
  return {{"n", r.n},
          {"method", std::string(to_string(r.method))},
          {"count", r.value.get_str()},
          {"elapsed_ms", millis(r.stats.elapsed)}};
}

json envelope(const std::string& command, json parameters, json results, json stats) {
  return {{"schema", kSchemaVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)},
          {"stats", std::move(stats)}};
}

// --- selftest -------------------------------------------------------------

class SelfTest {
 public:
  SelfTest(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& diff = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !diff.empty()) out_ << "  " << diff;
    out_ << '\n';
    failures_ += ok ? 0 : 1;
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

bool automaton_matches_oracle(std::size_t max_half, std::size_t max_len, std::string& diff) {
  const PatternAutomaton a = build_minimal_square_automaton(max_half);
  for (std::size_t len = 0; len <= max_len; ++len) {
    Word w(len, Symbol::a);
    for (;;) {
      if (a.accepts(w) != has_square_with_half_at_most(w, max_half)) {
        diff = "word " + to_string(w);
        return false;
      }
      std::size_t i = 0;
      while (i < len && w[i] == Symbol::c) w[i++] = Symbol::a;
      if (i == len) break;
      w[i] = symbol_from_index(index(w[i]) + 1);
    }
  }
  return true;
}

int run_selftest(std::size_t max_n, unsigned threads, std::ostream& out) {
  SelfTest t(out);
  CountOptions opts;
  opts.threads = threads;

  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 22); ++n) {
    const BigCount naive = count_square_free_naive(n);
    const BigCount simple = count_simple(n).value;
    t.check("naive==simple n=" + std::to_string(n), naive == simple,
            "naive=" + naive.get_str() + " simple=" + simple.get_str());
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    const BigCount simple = count_simple(n).value;
    const BigCount improved = count_improved(n, opts).value;
    t.check("simple==improved n=" + std::to_string(n), simple == improved,
            "simple=" + simple.get_str() + " improved=" + improved.get_str());
  }
  for (std::size_t h = 1; h <= 3; ++h) {
    std::string diff;
    const bool ok = automaton_matches_oracle(h, 8, diff);
    t.check("automaton M_" + std::to_string(h) + " matches oracle", ok, diff);
  }
  const OverlapReport overlap = verify_overlap_lemma(40);
  t.check("overlap verification to 40", overlap.violations == 0,
          std::to_string(overlap.violations) + " violations");
  const KeyLemmaSummary key = verify_key_lemma(12);
  t.check("key-lemma verification to 12", key.violations.empty(),
          std::to_string(key.violations.size()) + " violations");
  return t.failures() == 0 ? kExitOk : kExitFailure;
}

}  // namespace

unsigned threads_from_environment() {
  if (const char* v = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of ternary square-free words", "sqfree"};
  app.require_subcommand(1);

  const std::vector<std::string> methods{"naive", "simple", "improved"};

  std::size_t n = 0;
  std::string method = "improved";
  std::string output = "plain";
  bool force = false;
  auto* count_cmd = app.add_subcommand("count", "Count square-free words of length n");
  count_cmd->add_option("--n", n, "Word length")->required();
  count_cmd->add_option("--method", method, "naive, simple or improved")
      ->check(CLI::IsMember(methods));
  count_cmd->add_option("--output", output, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
  count_cmd->add_flag("--force", force, "Allow the naive method above n=30");

  std::size_t from = 0, to = 0;
  std::string table_method = "simple";
  std::string format = "plain";
  auto* table_cmd = app.add_subcommand("table", "Counts for a range of lengths");
  table_cmd->add_option("--from", from, "First length")->required();
  table_cmd->add_option("--to", to, "Last length")->required();
  table_cmd->add_option("--method", table_method, "naive, simple or improved")
      ->check(CLI::IsMember(methods));
  table_cmd->add_option("--format", format, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  table_cmd->add_flag("--force", force, "Allow the naive method above n=30");

  std::string kind;
  std::size_t max_len = 0;
  bool exhaustive = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verify the overlap or key lemma");
  verify_cmd->add_option("kind", kind, "overlap or key-lemma")
      ->required()
      ->check(CLI::IsMember({"overlap", "key-lemma"}));
  verify_cmd->add_option("--max-len", max_len, "Largest word length checked")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "Also list vacuous overlap cases");
  verify_cmd->add_flag("--force", force, "Lift the desk-scale length guard");

  std::size_t half_length = 0;
  bool count_only = false;
  auto* antidict_cmd = app.add_subcommand("antidict", "List minimal squares up to a half-length");
  antidict_cmd->add_option("--half-length", half_length, "Largest half-length")->required();
  antidict_cmd->add_flag("--count-only", count_only, "Print only the number of squares");
  antidict_cmd->add_flag("--force", force, "Allow listing above half-length 12");

  std::size_t max_n = 30;
  auto* selftest_cmd = app.add_subcommand("selftest", "Cross-check all methods and verifiers");
  selftest_cmd->add_option("--max-n", max_n, "Largest length for method comparison");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CountOptions opts;
  opts.threads = threads_from_environment();
  opts.heartbeat = &err;

  try {
    if (*count_cmd) {
      const Method m = parse_method(method);
      if (m == Method::kNaive && n > kNaiveLimit && !force)
        throw UsageError("naive counting above n=30 requires --force");
      const CountResult r = count(n, m, opts);
      if (output == "json") {
        out << envelope("count", {{"n", n}, {"method", method}}, json::array({result_json(r)}),
                        stats_json(r.stats))
            << '\n';
      } else {
        out << r.value.get_str() << '\n';
      }
      return kExitOk;
    }

    if (*table_cmd) {
      if (from > to) throw UsageError("--from must not exceed --to");
      const Method m = parse_method(table_method);
      if (m == Method::kNaive && to > kNaiveLimit && !force)
        throw UsageError("naive counting above n=30 requires --force");
      const std::vector<CountResult> rows = count_range(from, to, m, opts);
      if (format == "json") {
        json results = json::array();
        for (const CountResult& r : rows) results.push_back(result_json(r));
        out << envelope("table", {{"from", from}, {"to", to}, {"method", table_method}},
                        std::move(results), stats_json(rows.back().stats))
            << '\n';
      } else if (format == "csv") {
        out << "n,count,elapsed_ms\n";
        for (const CountResult& r : rows)
          out << r.n << ',' << r.value.get_str() << ',' << millis(r.stats.elapsed) << '\n';
      } else {
        for (const CountResult& r : rows)
          out << r.n << ' ' << r.value.get_str() << ' ' << millis(r.stats.elapsed) << '\n';
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      if (max_len < 3) throw UsageError("--max-len must be at least 3");
      const auto t0 = Clock::now();
      if (kind == "overlap") {
        if (max_len > kOverlapLimit && !force)
          throw UsageError("overlap verification above 300 requires --force");
        const OverlapReport report = verify_overlap_lemma(max_len, exhaustive);
        for (const OverlapVerdict& v : report.verdicts) out << v.to_record() << '\n';
        out << json{{"schema", kSchemaVersion},
                    {"command", "verify"},
                    {"kind", kind},
                    {"max_len", max_len},
                    {"cases_checked", report.cases_checked},
                    {"excluded", report.excluded},
                    {"exceptional", report.exceptional},
                    {"vacuous", report.vacuous},
                    {"violations", report.violations},
                    {"wall_ms", millis(Clock::now() - t0)}}
            << '\n';
        return report.violations == 0 ? kExitOk : kExitFailure;
      }
      if (max_len > kKeyLemmaLimit && !force)
        throw UsageError("key-lemma verification above 18 requires --force");
      const KeyLemmaSummary summary = verify_key_lemma(max_len);
      for (const KeyLemmaReport& r : summary.violations) out << r.to_record() << '\n';
      out << json{{"schema", kSchemaVersion},
                  {"command", "verify"},
                  {"kind", kind},
                  {"max_len", max_len},
                  {"cases_checked", summary.words_checked},
                  {"with_squares", summary.with_squares},
                  {"violations", summary.violations.size()},
                  {"wall_ms", millis(Clock::now() - t0)}}
          << '\n';
      return summary.violations.empty() ? kExitOk : kExitFailure;
    }

    if (*antidict_cmd) {
      if (half_length < 1) throw UsageError("--half-length must be at least 1");
      if (count_only) {
        out << minimal_squares_up_to(half_length, [](const MinimalSquare&) {}) << '\n';
        return kExitOk;
      }
      if (half_length > kListingLimit && !force)
        throw UsageError("listing above half-length 12 requires --force (or use --count-only)");
      const std::uint64_t total = dump_antidictionary(half_length, out);
      err << "count=" << total << '\n';
      return kExitOk;
    }

    if (*selftest_cmd) {
      if (max_n < 4) throw UsageError("--max-n must be at least 4");
      return run_selftest(max_n, opts.threads, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sqfree::cli
