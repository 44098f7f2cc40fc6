#include "sqfree/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqfree {

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch < 'a' || ch > 'c')
      throw std::invalid_argument("word may only contain a, b, c: '" + std::string(text) + "'");
    w.push_back(symbol_from_index(static_cast<std::size_t>(ch - 'a')));
  }
  return w;
}

char to_char(Symbol s) { return static_cast<char>('a' + index(s)); }

std::string to_string(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(to_char(s));
  return out;
}

bool is_square(WordView w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2 != 0) return false;
  const std::size_t h = n / 2;
  return std::equal(w.begin(), w.begin() + h, w.begin() + h);
}

bool has_square_with_half_at_most(WordView w, std::size_t max_half) {
  const std::size_t n = w.size();
  for (std::size_t h = 1; h <= max_half && 2 * h <= n; ++h) {
    // Run length of positions i with w[i] == w[i+h]; a square of half h
    // exists iff some run reaches h.
    std::size_t run = 0;
    for (std::size_t i = 0; i + h < n; ++i) {
      run = (w[i] == w[i + h]) ? run + 1 : 0;
      if (run == h) return true;
    }
  }
  return false;
}

bool is_square_free(WordView w) { return !has_square_with_half_at_most(w, w.size() / 2); }

bool is_minimal_square_direct(WordView w) {
  if (!is_square(w)) return false;
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start)
    for (std::size_t len = 2; start + len <= n; len += 2) {
      if (len == n) continue;
      if (is_square(w.subspan(start, len))) return false;
    }
  return true;
}

namespace {

// `ww` is u written twice. Every cyclic factor of u of length <= |u| is a
// factor of ww starting in [0, |u|), so a run-length scan per half-length
// over ww finds every cyclic square.
bool doubled_has_cyclic_square(WordView ww) {
  const std::size_t n = ww.size() / 2;
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + 1 < n + h; ++i) {
      run = ww[i] == ww[i + h] ? run + 1 : 0;
      if (run == h) return true;
    }
  }
  return false;
}

}  // namespace

bool is_cyclically_square_free(WordView u) {
  Word ww(u.begin(), u.end());
  ww.insert(ww.end(), u.begin(), u.end());
  return !doubled_has_cyclic_square(ww);
}

bool is_minimal_square_cyclic(WordView w) {
  return is_square(w) && !doubled_has_cyclic_square(w);
}

Word reverse(WordView w) { return Word(w.rbegin(), w.rend()); }

BigCount count_square_free_naive(std::size_t n) {
  const std::uint64_t visited = enumerate_square_free(n, [](const Word&) {});
  return BigCount(static_cast<unsigned long>(visited));
}

BigCount power_of_three(std::size_t n) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(n));
  return r;
}

}  // namespace sqfree
