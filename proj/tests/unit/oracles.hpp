#pragma once

// Naive reference implementations used as test oracles.

#include <set>
#include <string>

#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"
#include "strattr/word.hpp"

namespace oracle {

// Prefix of the Fibonacci fixed point of 0 -> 01, 1 -> 0 by plain iteration.
inline std::string fibonacci(std::size_t n) {
  std::string w = "0";
  while (w.size() < n) {
    std::string next;
    for (char c : w) next += c == '0' ? "01" : "0";
    w = next;
  }
  return w.substr(0, n);
}

// Letter of the lower characteristic Fibonacci word: ...f2 f1 f0 . 1 0 f0 f1 ...
inline char fib_char(std::int64_t p, const std::string& f) {
  if (p == 0) return '1';
  if (p == 1) return '0';
  if (p >= 2) return f[static_cast<std::size_t>(p - 2)];
  return f[static_cast<std::size_t>(-p - 1)];
}

inline std::string fib_window(std::int64_t i, std::int64_t j) {
  const std::int64_t need = std::max<std::int64_t>(std::abs(i), std::abs(j)) + 2;
  const std::string f = fibonacci(static_cast<std::size_t>(need));
  std::string out;
  for (std::int64_t p = i; p <= j; ++p) out += fib_char(p, f);
  return out;
}

// Every factor of text (length <= N, read from the middle half) occurs in text
// crossing some position of gamma; positions are relative to text[offset].
inline bool covers(const std::string& text, std::int64_t offset,
                   const std::set<std::int64_t>& gamma, std::size_t N) {
  const std::size_t quarter = text.size() / 4;
  for (std::size_t n = 1; n <= N; ++n) {
    std::set<std::string> seen;
    for (std::size_t t = quarter; t + n <= text.size() - quarter; ++t) seen.insert(text.substr(t, n));
    for (const std::string& f : seen) {
      bool hit = false;
      for (std::size_t t = 0; t + n <= text.size() && !hit; ++t) {
        if (text.compare(t, n, f) != 0) continue;
        const std::int64_t s = static_cast<std::int64_t>(t) + offset;
        for (std::int64_t g : gamma) {
          if (g >= s && g < s + static_cast<std::int64_t>(n)) hit = true;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

inline std::size_t distinct_factors(const std::string& text, std::size_t n) {
  std::set<std::string> s;
  for (std::size_t t = 0; t + n <= text.size(); ++t) s.insert(text.substr(t, n));
  return s.size();
}

}  // namespace oracle
