#include "sqfree/antidictionary.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sqfree {

namespace {

void check_range(std::size_t lo, std::size_t hi) {
  if (lo < 1 || lo > hi)
    throw std::invalid_argument("minimal square range requires 1 <= lo <= hi");
}

// Filters square-free halves down to those whose double is minimal.
class Doubler {
 public:
  explicit Doubler(const MinimalSquareVisitor& visit) : visit_(visit) {}

  void operator()(const Word& half) {
    sq_.doubled = half;
    sq_.doubled.insert(sq_.doubled.end(), half.begin(), half.end());
    if (!is_minimal_square_cyclic(sq_.doubled)) return;
    sq_.half = half;
    sq_.half_length = half.size();
    ++count_;
    visit_(sq_);
  }

  std::uint64_t count() const { return count_; }

 private:
  const MinimalSquareVisitor& visit_;
  MinimalSquare sq_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t minimal_squares_in_range_from(WordView prefix, std::size_t lo, std::size_t hi,
                                            const MinimalSquareVisitor& visit) {
  check_range(lo, hi);
  Doubler doubler(visit);
  for (std::size_t h = std::max(lo, prefix.size()); h <= hi; ++h)
    for_each_square_free(h, prefix, doubler);
  return doubler.count();
}

std::uint64_t minimal_squares_unordered(WordView prefix, std::size_t lo, std::size_t hi,
                                        const MinimalSquareVisitor& visit) {
  check_range(lo, hi);
  Doubler doubler(visit);
  for_each_word_avoiding_in(lo, hi, hi, prefix, doubler);
  return doubler.count();
}

std::uint64_t minimal_squares_in_range(std::size_t lo, std::size_t hi,
                                       const MinimalSquareVisitor& visit) {
  return minimal_squares_in_range_from(WordView{}, lo, hi, visit);
}

std::uint64_t minimal_squares_up_to(std::size_t max_half, const MinimalSquareVisitor& visit) {
  return minimal_squares_in_range(1, max_half, visit);
}

std::uint64_t antidictionary_total_length(std::size_t max_half) {
  std::uint64_t total = 0;
  minimal_squares_up_to(max_half, [&](const MinimalSquare& sq) { total += sq.doubled.size(); });
  return total;
}

std::uint64_t dump_antidictionary(std::size_t max_half, std::ostream& out) {
  return minimal_squares_up_to(max_half, [&](const MinimalSquare& sq) {
    out << to_string(sq.doubled) << '\n';
  });
}

}  // namespace sqfree
