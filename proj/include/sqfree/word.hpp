#pragma once

// Ternary words and square predicates.
//
// Symbols are stored as small integers 0..2 and only rendered as a/b/c at
// I/O boundaries. A square is a word of the form uu with u non-empty; its
// half-length is |u|.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sqfree {

enum class Symbol : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::size_t kAlphabetSize = 3;

inline constexpr std::size_t index(Symbol s) noexcept {
  return static_cast<std::size_t>(s);
}

inline constexpr Symbol symbol_from_index(std::size_t i) noexcept {
  return static_cast<Symbol>(i);
}

using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// Exact unbounded non-negative count.
using BigCount = mpz_class;

/// Parses a lowercase string over {a,b,c}. Throws std::invalid_argument on
/// any other character.
Word parse_word(std::string_view text);
std::string to_string(WordView w);
char to_char(Symbol s);

bool is_square(WordView w);

/// True iff some substring of `w` is a square with half-length <= `max_half`.
bool has_square_with_half_at_most(WordView w, std::size_t max_half);

bool is_square_free(WordView w);

/// True iff the square ending at the last position of `w` with half-length
/// `half` exists.
inline bool ends_with_square(WordView w, std::size_t half) noexcept {
  const std::size_t m = w.size();
  if (half == 0 || 2 * half > m) return false;
  for (std::size_t i = m - half; i < m; ++i)
    if (w[i] != w[i - half]) return false;
  return true;
}

/// Minimality by scanning every proper substring for a square.
bool is_minimal_square_direct(WordView w);

/// Minimality via cyclic square-freeness of the half: uu is a minimal square
/// iff u is square-free when read as a cyclic word.
bool is_minimal_square_cyclic(WordView w);

/// True iff `u` has no square among its cyclic factors of length <= |u|.
bool is_cyclically_square_free(WordView u);

/// Dispatches to the cyclic criterion.
inline bool is_minimal_square(WordView w) { return is_minimal_square_cyclic(w); }

Word reverse(WordView w);

using WordVisitor = std::function<void(const Word&)>;

/// Visits every word of length `len` starting with `prefix` that has no
/// square of half-length <= `max_half`, in lexicographic order. Returns the
/// number of visits; a prefix that already contains such a square yields 0.
template <typename Visitor>
std::uint64_t for_each_word_avoiding(std::size_t len, std::size_t max_half, WordView prefix,
                                     Visitor&& visit);

/// Single DFS visiting every such word with length in [min_len, max_len] in
/// preorder: a word comes before its extensions, siblings in a < b < c order.
template <typename Visitor>
std::uint64_t for_each_word_avoiding_in(std::size_t min_len, std::size_t max_len,
                                        std::size_t max_half, WordView prefix, Visitor&& visit);

/// Visits every square-free word of length `len` that starts with `prefix`,
/// in lexicographic order. `prefix` must itself be square-free and no longer
/// than `len`, otherwise nothing is visited. Returns the number of visits.
template <typename Visitor>
std::uint64_t for_each_square_free(std::size_t len, WordView prefix, Visitor&& visit);

inline std::uint64_t enumerate_square_free(std::size_t len, const WordVisitor& visit) {
  return for_each_square_free(len, WordView{}, visit);
}

inline std::uint64_t enumerate_square_free_from(WordView prefix, std::size_t len,
                                                const WordVisitor& visit) {
  return for_each_square_free(len, prefix, visit);
}

/// Number of square-free words of length n by exhaustive pruned search.
BigCount count_square_free_naive(std::size_t n);

/// 3^n as an exact integer.
BigCount power_of_three(std::size_t n);

// ---------------------------------------------------------------------------

namespace detail {

inline bool suffix_avoids_squares(WordView w, std::size_t max_half) noexcept {
  for (std::size_t h = 1; h <= max_half && 2 * h <= w.size(); ++h)
    if (ends_with_square(w, h)) return false;
  return true;
}

}  // namespace detail

template <typename Visitor>
std::uint64_t for_each_word_avoiding_in(std::size_t min_len, std::size_t max_len,
                                        std::size_t max_half, WordView prefix, Visitor&& visit) {
  if (min_len > max_len || prefix.size() > max_len ||
      has_square_with_half_at_most(prefix, max_half))
    return 0;

  Word word(prefix.begin(), prefix.end());
  word.reserve(max_len);
  std::uint64_t visited = 0;
  if (word.size() >= min_len) {
    visit(static_cast<const Word&>(word));
    ++visited;
  }
  if (word.size() == max_len) return visited;

  // Iterative DFS; only squares ending at the newest position need checking
  // since every shorter prefix already passed. choice[k] is the symbol tried
  // at position |prefix| + k.
  const std::size_t base = word.size();
  word.push_back(Symbol::a);
  std::vector<std::uint8_t> choice(max_len - base, 0);
  std::size_t depth = 0;
  for (;;) {
    const std::size_t pos = base + depth;
    word[pos] = symbol_from_index(choice[depth]);
    if (detail::suffix_avoids_squares(WordView(word.data(), pos + 1), max_half)) {
      if (pos + 1 >= min_len) {
        visit(static_cast<const Word&>(word));
        ++visited;
      }
      if (pos + 1 < max_len) {
        ++depth;
        choice[depth] = 0;
        word.push_back(Symbol::a);
        continue;
      }
    }
    while (choice[depth] + 1 == kAlphabetSize) {
      if (depth == 0) return visited;
      word.pop_back();
      --depth;
    }
    ++choice[depth];
  }
}

template <typename Visitor>
std::uint64_t for_each_word_avoiding(std::size_t len, std::size_t max_half, WordView prefix,
                                     Visitor&& visit) {
  return for_each_word_avoiding_in(len, len, max_half, prefix, std::forward<Visitor>(visit));
}

template <typename Visitor>
std::uint64_t for_each_square_free(std::size_t len, WordView prefix, Visitor&& visit) {
  return for_each_word_avoiding(len, len, prefix, std::forward<Visitor>(visit));
}

}  // namespace sqfree
