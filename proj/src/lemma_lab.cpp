#include "sqfree/lemma_lab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sqfree {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

std::string ForcedEqualityGraph::render() const {
  const bool wide = std::any_of(labels.begin(), labels.end(), [](auto l) { return l > 9; });
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (wide && i > 0) out.push_back(',');
    out += std::to_string(labels[i]);
  }
  return out;
}

ForcedEqualityGraph build_forced_components(std::size_t length, std::size_t hu, std::size_t hv) {
  if (hu == 0 || hv == 0 || 2 * hu >= length || 2 * hv >= length)
    throw std::invalid_argument("forced graph requires 1 <= hu, hv and 2hu, 2hv < length");

  UnionFind uf(length);
  for (std::size_t i = 0; i < hu; ++i) uf.unite(i, i + hu);
  for (std::size_t i = length - 2 * hv; i < length - hv; ++i) uf.unite(i, i + hv);

  ForcedEqualityGraph g{length, hu, hv, std::vector<std::uint32_t>(length, 0)};
  std::vector<std::uint32_t> label_of_root(length, 0);
  std::uint32_t next = 1;
  for (std::size_t i = 0; i < length; ++i) {
    std::uint32_t& l = label_of_root[uf.find(i)];
    if (l == 0) l = next++;
    g.labels[i] = l;
  }
  return g;
}

std::optional<ForcedSquare> find_forced_square(const ForcedEqualityGraph& g,
                                               std::size_t window_start, std::size_t window_end,
                                               std::size_t max_half) {
  window_end = std::min(window_end, g.labels.size());
  if (window_start >= window_end) return std::nullopt;
  const std::size_t width = window_end - window_start;
  for (std::size_t h = 1; h <= max_half && 2 * h <= width; ++h) {
    std::size_t run = 0;
    for (std::size_t i = window_start; i + h < window_end; ++i) {
      run = g.labels[i] == g.labels[i + h] ? run + 1 : 0;
      if (run == h) return ForcedSquare{i + 1 - h, h};
    }
  }
  return std::nullopt;
}

const char* to_string(OverlapStatus s) {
  switch (s) {
    case OverlapStatus::kExcludedByForcedSquare: return "EXCLUDED_BY_FORCED_SQUARE";
    case OverlapStatus::kExceptionalFormConfirmed: return "EXCEPTIONAL_FORM_CONFIRMED";
    case OverlapStatus::kSatisfiedVacuously: return "LEMMA_SATISFIED_VACUOUSLY";
    case OverlapStatus::kViolation: return "VIOLATION";
  }
  return "?";
}

std::string OverlapVerdict::to_record() const {
  std::ostringstream out;
  out << "len=" << length << " hu=" << hu << " hv=" << hv << " status=" << to_string(status);
  if (witness) out << " witness=" << witness->position << ':' << witness->half;
  return out.str();
}

OverlapVerdict check_overlap_case(std::size_t length, std::size_t hu, std::size_t hv) {
  if (hu == 0 || hv == 0 || 2 * hu >= length || 2 * hv >= length)
    throw std::invalid_argument("overlap case requires 1 <= hu, hv and 2hu, 2hv < length");
  OverlapVerdict v{length, hu, hv, OverlapStatus::kViolation, std::nullopt};
  if (length >= 3 * std::min(hu, hv) + 1) {
    v.status = OverlapStatus::kSatisfiedVacuously;
    return v;
  }

  const ForcedEqualityGraph g = build_forced_components(length, hu, hv);
  if (hu == hv) {
    // s must be a prefix of u^infinity; |s| > 2hu makes p non-empty.
    bool periodic = true;
    for (std::size_t i = 0; i + hu < length && periodic; ++i)
      periodic = g.labels[i] == g.labels[i + hu];
    if (periodic) v.status = OverlapStatus::kExceptionalFormConfirmed;
    return v;
  }

  if (auto sq = find_forced_square(g, 0, 2 * hu, hu - 1)) {
    v.status = OverlapStatus::kExcludedByForcedSquare;
    v.witness = sq;
  } else if (auto sq2 = find_forced_square(g, length - 2 * hv, length, hv - 1)) {
    v.status = OverlapStatus::kExcludedByForcedSquare;
    v.witness = sq2;
  }
  return v;
}

OverlapReport verify_overlap_lemma(std::size_t max_length, bool exhaustive) {
  if (max_length < 3) throw std::invalid_argument("overlap verification needs max length >= 3");
  OverlapReport report;
  report.max_length = max_length;
  for (std::size_t len = 3; len <= max_length; ++len)
    for (std::size_t hu = 1; 2 * hu < len; ++hu)
      for (std::size_t hv = 1; 2 * hv < len; ++hv) {
        OverlapVerdict v = check_overlap_case(len, hu, hv);
        ++report.cases_checked;
        switch (v.status) {
          case OverlapStatus::kExcludedByForcedSquare: ++report.excluded; break;
          case OverlapStatus::kExceptionalFormConfirmed: ++report.exceptional; break;
          case OverlapStatus::kSatisfiedVacuously: ++report.vacuous; break;
          case OverlapStatus::kViolation: ++report.violations; break;
        }
        if (v.status != OverlapStatus::kSatisfiedVacuously || exhaustive)
          report.verdicts.push_back(std::move(v));
      }
  return report;
}

std::vector<SquareOccurrence> minimal_square_factors(WordView s) {
  std::vector<SquareOccurrence> out;
  for (std::size_t pos = 0; pos < s.size(); ++pos)
    for (std::size_t h = 1; pos + 2 * h <= s.size(); ++h) {
      const WordView f = s.subspan(pos, 2 * h);
      if (is_minimal_square_cyclic(f)) out.push_back({pos, h});
    }
  return out;
}

std::string KeyLemmaReport::to_record() const {
  std::ostringstream out;
  out << "s=" << to_string(s) << " squares=";
  for (std::size_t i = 0; i < minimal_squares.size(); ++i)
    out << (i ? "," : "") << minimal_squares[i].position << ':' << minimal_squares[i].half;
  if (run)
    out << " run=" << to_string(run->w) << '|' << to_string(run->p) << '@' << run->start;
  out << " expected=" << expected_count << " observed=" << observed_count;
  if (!failure.empty()) out << " failure=\"" << failure << '"';
  return out.str();
}

KeyLemmaReport analyze_key_lemma(WordView s) {
  KeyLemmaReport r;
  r.s.assign(s.begin(), s.end());
  r.minimal_squares = minimal_square_factors(s);
  r.observed_count = r.minimal_squares.size();
  if (r.minimal_squares.empty()) return r;

  const std::size_t h = r.minimal_squares.front().half;
  for (const SquareOccurrence& o : r.minimal_squares)
    if (o.half != h) {
      r.failure = "minimal squares of different half-lengths";
      return r;
    }

  // minimal_square_factors orders by position, so the union of the leftmost
  // and rightmost square spans [first, last + 2h).
  const std::size_t first = r.minimal_squares.front().position;
  const std::size_t last = r.minimal_squares.back().position;
  if (last - first > h) {
    r.failure = "leftmost and rightmost minimal squares do not form a wwp run";
    return r;
  }
  SquareRun run;
  run.start = first;
  run.w.assign(s.begin() + first, s.begin() + first + h);
  run.p.assign(s.begin() + first + 2 * h, s.begin() + last + 2 * h);
  r.expected_count = run.p.size() + 1;
  const bool p_is_prefix = std::equal(run.p.begin(), run.p.end(), run.w.begin());
  r.run = std::move(run);

  if (!p_is_prefix) {
    r.failure = "p is not a prefix of w";
  } else if (r.observed_count != r.expected_count) {
    r.failure = "minimal square count differs from |p|+1";
  } else {
    for (std::size_t a = first; a <= last; ++a)
      if (!is_minimal_square_direct(s.subspan(a, 2 * h))) {
        r.failure = "factor of length 2|w| in the run is not a minimal square";
        break;
      }
  }
  return r;
}

KeyLemmaSummary verify_key_lemma(std::size_t max_length) {
  if (max_length < 3) throw std::invalid_argument("key-lemma verification needs max length >= 3");
  KeyLemmaSummary summary;
  summary.max_length = max_length;
  for (std::size_t len = 1; len <= max_length; ++len) {
    // Largest half-length h with 3h < len; all such squares are excluded.
    const std::size_t excluded_half = (len - 1) / 3;
    for_each_word_avoiding(len, excluded_half, WordView{}, [&](const Word& s) {
      ++summary.words_checked;
      KeyLemmaReport r = analyze_key_lemma(s);
      if (r.minimal_squares.empty()) return;
      ++summary.with_squares;
      if (!r.ok()) summary.violations.push_back(std::move(r));
    });
  }
  return summary;
}

}  // namespace sqfree
