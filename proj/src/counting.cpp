#include "sqfree/counting.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "sqfree/antidictionary.hpp"

namespace sqfree {
namespace {

using Clock = std::chrono::steady_clock;

template <typename RowCallback>
void forward_sweep(const PatternAutomaton& a, std::size_t max_len, RowCallback&& on_row) {
  const std::size_t states = a.state_count();
  const PredecessorIndex preds = a.predecessors();
  std::vector<BigCount> cur(states, 0), next(states, 0);
  cur[a.start_state()] = 1;
  on_row(std::size_t{0}, cur);
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t q = 0; q < states; ++q) {
      BigCount& acc = next[q];
      acc = 0;
      for (const Predecessor& p : preds.of(static_cast<StateId>(q))) acc += cur[p.state];
    }
    std::swap(cur, next);
    on_row(len, cur);
  }
}

// Sum over i in [0, span] of f(i, q_left) * f(span - i, q_right).
void accumulate_split(const CountTable& t, StateId q_left, StateId q_right, std::size_t span,
                      BigCount& acc) {
  for (std::size_t i = 0; i <= span; ++i) {
    const BigCount& left = t.rows[i][q_left];
    if (left == 0) continue;
    const BigCount& right = t.rows[span - i][q_right];
    mpz_addmul(acc.get_mpz_t(), left.get_mpz_t(), right.get_mpz_t());
  }
}

struct SweepTotals {
  BigCount subtracted = 0;  // sum of g(i, ww)
  BigCount added = 0;       // sum of g(i, ww w_0)
  std::uint64_t squares = 0;
};

struct Progress {
  std::atomic<std::uint64_t> seen{0};
  std::mutex mu;
};

class MinimalSquareSweep {
 public:
  MinimalSquareSweep(const PatternAutomaton& a, const CountTable& t, std::size_t n,
                     const CountOptions& opts, Progress& progress)
      : a_(a), t_(t), n_(n), opts_(opts), progress_(progress) {}

  void operator()(const MinimalSquare& sq, SweepTotals& totals) {
    const std::size_t len = sq.doubled.size();
    const StateId q0 = a_.start_state();
    const StateId forward = a_.run(q0, sq.doubled);
    reversed_.assign(sq.doubled.rbegin(), sq.doubled.rend());
    const StateId backward = a_.run(q0, reversed_);
    ++totals.squares;

    if (!a_.is_accepting(forward) && !a_.is_accepting(backward)) {
      accumulate_split(t_, backward, forward, n_ - len, totals.subtracted);

      // ww w_0: the next cyclic shift begins inside, so p grows by one.
      if (len + 1 <= n_) {
        const Symbol first = sq.half.front();
        const StateId forward_ext = a_.transition(forward, first);
        const StateId backward_ext = a_.run(a_.transition(q0, first), reversed_);
        if (!a_.is_accepting(forward_ext) && !a_.is_accepting(backward_ext))
          accumulate_split(t_, backward_ext, forward_ext, n_ - len - 1, totals.added);
      }
    }
    heartbeat(totals);
  }

 private:
  void heartbeat(const SweepTotals& totals) {
    const std::uint64_t seen = progress_.seen.fetch_add(1) + 1;
    if (!opts_.heartbeat || opts_.heartbeat_interval == 0 ||
        seen % opts_.heartbeat_interval != 0)
      return;
    std::lock_guard lock(progress_.mu);
    *opts_.heartbeat << "[improved n=" << n_ << "] squares=" << seen
                     << " partial_subtracted=" << totals.subtracted.get_str()
                     << " partial_added=" << totals.added.get_str() << std::endl;
  }

  const PatternAutomaton& a_;
  const CountTable& t_;
  std::size_t n_;
  const CountOptions& opts_;
  Progress& progress_;
  Word reversed_;
};

}  // namespace

CountTable forward_table(const PatternAutomaton& a, std::size_t max_len, bool keep_all_rows) {
  CountTable table;
  table.semantics = TableSemantics::kForward;
  table.first_row = keep_all_rows ? 0 : max_len;
  forward_sweep(a, max_len, [&](std::size_t len, const std::vector<BigCount>& row) {
    if (keep_all_rows || len == max_len) table.rows.push_back(row);
  });
  return table;
}

CountTable rejected_table(const PatternAutomaton& a, std::size_t max_len) {
  const std::size_t states = a.state_count();
  CountTable table;
  table.semantics = TableSemantics::kRejected;
  table.rows.reserve(max_len + 1);
  table.rows.emplace_back(states, 1);
  if (auto sink = a.accept_sink()) table.rows[0][*sink] = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::vector<BigCount>& prev = table.rows.back();
    std::vector<BigCount> row(states, 0);
    for (std::size_t q = 0; q < states; ++q) {
      if (a.is_accepting(static_cast<StateId>(q))) continue;
      BigCount& acc = row[q];
      for (std::size_t d = 0; d < kAlphabetSize; ++d)
        acc += prev[a.transition(static_cast<StateId>(q), symbol_from_index(d))];
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

BigCount rejected_mass(const PatternAutomaton& a, const std::vector<BigCount>& row) {
  BigCount total = 0;
  for (std::size_t q = 0; q < row.size(); ++q)
    if (!a.is_accepting(static_cast<StateId>(q))) total += row[q];
  return total;
}

BigCount g_count(const CountTable& table, const PatternAutomaton& a, std::size_t n, WordView t,
                 std::size_t offset) {
  if (table.semantics != TableSemantics::kRejected || table.first_row != 0)
    throw std::invalid_argument("g_count needs a full rejected table");
  if (t.size() > n || t.size() < 2 * (n / 3) + 1)
    throw std::invalid_argument("g_count requires 2*floor(n/3)+1 <= |t| <= n");
  if (offset > n - t.size()) throw std::invalid_argument("g_count requires offset <= n - |t|");
  if (n - t.size() > table.max_len()) throw std::invalid_argument("rejected table too short");

  const StateId forward = a.run(a.start_state(), t);
  const Word reversed = reverse(t);
  const StateId backward = a.run(a.start_state(), reversed);
  if (a.is_accepting(forward) || a.is_accepting(backward)) return 0;
  return table.at(offset, backward) * table.at(n - t.size() - offset, forward);
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kNaive: return "naive";
    case Method::kSimple: return "simple";
    case Method::kImproved: return "improved";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "naive") return Method::kNaive;
  if (name == "simple") return Method::kSimple;
  if (name == "improved") return Method::kImproved;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

CountResult count_naive(std::size_t n) {
  const auto t0 = Clock::now();
  CountResult r;
  r.n = n;
  r.method = Method::kNaive;
  r.value = count_square_free_naive(n);
  r.stats.elapsed = Clock::now() - t0;
  return r;
}

CountResult count_simple(std::size_t n) {
  const auto t0 = Clock::now();
  CountResult r;
  r.n = n;
  r.method = Method::kSimple;
  if (n <= 1) {
    r.value = n == 0 ? 1 : 3;
    r.stats.elapsed = Clock::now() - t0;
    return r;
  }
  const PatternAutomaton a = build_minimal_square_automaton(n / 2, &r.stats.antidictionary_size);
  r.stats.automaton_states = a.state_count();
  const CountTable table = forward_table(a, n, /*keep_all_rows=*/false);
  r.value = rejected_mass(a, table.row(n));
  r.stats.elapsed = Clock::now() - t0;
  return r;
}

CountResult count_improved(std::size_t n, const CountOptions& options) {
  if (n < 6) {
    CountResult r = count_simple(n);
    r.method = Method::kImproved;
    return r;
  }
  const auto t0 = Clock::now();
  CountResult r;
  r.n = n;
  r.method = Method::kImproved;

  const std::size_t short_half = n / 3;
  const std::size_t lo = short_half + 1;
  const std::size_t hi = n / 2;

  const PatternAutomaton a =
      build_minimal_square_automaton(short_half, &r.stats.antidictionary_size);
  r.stats.automaton_states = a.state_count();
  const CountTable table = rejected_table(a, n);
  const BigCount promising = table.at(n, a.start_state());

  SweepTotals totals;
  Progress progress;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    MinimalSquareSweep sweep(a, table, n, options, progress);
    minimal_squares_unordered(WordView{}, lo, hi,
                              [&](const MinimalSquare& sq) { sweep(sq, totals); });
  } else {
    // Partition the halves by their leading symbols; lo >= 3 here.
    const std::size_t depth = std::min<std::size_t>(lo, 4);
    std::vector<Word> prefixes;
    enumerate_square_free(depth, [&](const Word& w) { prefixes.push_back(w); });

    std::vector<SweepTotals> partial(threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        MinimalSquareSweep sweep(a, table, n, options, progress);
        for (std::size_t i = next++; i < prefixes.size(); i = next++)
          minimal_squares_unordered(prefixes[i], lo, hi,
                                    [&](const MinimalSquare& sq) { sweep(sq, partial[w]); });
      });
    for (std::thread& t : workers) t.join();
    for (const SweepTotals& p : partial) {
      totals.subtracted += p.subtracted;
      totals.added += p.added;
      totals.squares += p.squares;
    }
  }

  r.stats.squares_iterated = totals.squares;
  r.stats.promising_total = promising;
  r.stats.promising_with_square = totals.subtracted - totals.added;
  r.value = promising - *r.stats.promising_with_square;
  r.stats.elapsed = Clock::now() - t0;
  return r;
}

CountResult count(std::size_t n, Method method, const CountOptions& options) {
  switch (method) {
    case Method::kNaive: return count_naive(n);
    case Method::kSimple: return count_simple(n);
    case Method::kImproved: return count_improved(n, options);
  }
  throw std::invalid_argument("unknown method");
}

std::vector<CountResult> count_range(std::size_t lo, std::size_t hi, Method method,
                                     const CountOptions& options) {
  if (lo > hi) throw std::invalid_argument("count_range requires lo <= hi");
  std::vector<CountResult> out;
  out.reserve(hi - lo + 1);
  if (method != Method::kSimple) {
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(count(n, method, options));
    return out;
  }

  // Patterns longer than n never match words of length n, so the automaton
  // for M_{hi/2} serves every n in the range.
  const auto t0 = Clock::now();
  std::uint64_t patterns = 0;
  const PatternAutomaton a = build_minimal_square_automaton(hi / 2, &patterns);
  forward_sweep(a, hi, [&](std::size_t len, const std::vector<BigCount>& row) {
    if (len < lo) return;
    CountResult r;
    r.n = len;
    r.method = Method::kSimple;
    r.value = rejected_mass(a, row);
    r.stats.automaton_states = a.state_count();
    r.stats.antidictionary_size = patterns;
    r.stats.elapsed = Clock::now() - t0;
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace sqfree
