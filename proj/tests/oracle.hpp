#pragma once

// Brute-force reference predicates over plain std::string. Nothing here
// touches the library's predicates, DFS or automaton.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline bool is_square(const std::string& s) {
  return s.size() >= 2 && s.size() % 2 == 0 &&
         s.compare(0, s.size() / 2, s, s.size() / 2, s.size() / 2) == 0;
}

inline bool has_square_half_at_most(const std::string& s, std::size_t max_half) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t h = 1; h <= max_half && a + 2 * h <= s.size(); ++h)
      if (s.compare(a, h, s, a + h, h) == 0) return true;
  return false;
}

inline bool is_square_free(const std::string& s) { return !has_square_half_at_most(s, s.size()); }

/// Smallest half-length of a square factor, or 0 when square-free.
inline std::size_t smallest_square_half(const std::string& s) {
  for (std::size_t h = 1; 2 * h <= s.size(); ++h)
    for (std::size_t a = 0; a + 2 * h <= s.size(); ++a)
      if (s.compare(a, h, s, a + h, h) == 0) return h;
  return 0;
}

inline bool is_minimal_square(const std::string& s) {
  if (!is_square(s)) return false;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t len = 2; a + len <= s.size(); len += 2)
      if (len < s.size() && is_square(s.substr(a, len))) return false;
  return true;
}

inline bool contains_any(const std::string& s, const std::vector<std::string>& patterns) {
  for (const std::string& p : patterns)
    if (s.find(p) != std::string::npos) return true;
  return false;
}

/// Calls f on every word of length len over {a,b,c}, lexicographically.
template <typename F>
void for_each_word(std::size_t len, F&& f) {
  std::string w(len, 'a');
  for (;;) {
    f(static_cast<const std::string&>(w));
    std::size_t i = len;
    while (i > 0 && w[i - 1] == 'c') w[--i] = 'a';
    if (i == 0) return;
    ++w[i - 1];
  }
}

inline std::uint64_t count_words(std::size_t len, bool (*pred)(const std::string&)) {
  std::uint64_t n = 0;
  for_each_word(len, [&](const std::string& w) { n += pred(w) ? 1 : 0; });
  return n;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> d(0, 2);
  std::string w(len, 'a');
  for (char& c : w) c = static_cast<char>('a' + d(rng));
  return w;
}

/// Random square-free word grown by rejection of bad extensions.
inline std::string random_square_free(std::mt19937_64& rng, std::size_t len) {
  for (;;) {
    std::string w;
    std::uniform_int_distribution<int> d(0, 2);
    int stuck = 0;
    while (w.size() < len && stuck < 50) {
      const char c = static_cast<char>('a' + d(rng));
      if (is_square_free(w + c)) {
        w.push_back(c);
        stuck = 0;
      } else {
        ++stuck;
      }
    }
    if (w.size() == len) return w;
  }
}

}  // namespace oracle
