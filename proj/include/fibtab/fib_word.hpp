#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibtab/error.hpp"

// Words over the alphabet {1_1, ..., 1_k, 2} and the cover relations of the
// Fibonacci lattice Z(k):
//
//   z is covered by w  iff  z is obtained from w by turning one of the 2's in
//   the maximal leading run of 2's into a 1_i, or by deleting the leftmost 1
//   (of any colour).
//
// Every element of rank n is covered by exactly k more elements than it
// covers, which makes Z(k) a k-differential poset; chain counts e(w) satisfy
// sum over rank-n words of e(w)^2 = k^n * n!.

namespace fibtab {

using big_int = boost::multiprecision::cpp_int;

class letter {
public:
  static letter one(int height) {
    assert(height >= 1);
    letter l;
    l.h_ = height;
    return l;
  }
  static letter two() { return letter{}; }

  bool is_two() const { return h_ == 0; }
  bool is_one() const { return h_ != 0; }

  // Colour/height of a 1_j letter.
  int height() const {
    assert(is_one());
    return h_;
  }

  // Rank contribution: a 1_j weighs 1, a 2 weighs 2.
  int weight() const { return is_two() ? 2 : 1; }

  friend bool operator==(letter a, letter b) = default;
  // 1_1 < 1_2 < ... < 1_k < 2
  friend std::strong_ordering operator<=>(letter a, letter b) {
    return a.sort_key() <=> b.sort_key();
  }

private:
  int sort_key() const { return is_two() ? std::numeric_limits<int>::max() : h_; }

  int h_ = 0;  // 0 encodes a 2
};

// A word in Z(k); letters[0] is the leftmost letter.
struct fib_word {
  int k = 1;
  std::vector<letter> letters;

  fib_word() = default;
  explicit fib_word(int k_, std::vector<letter> ls = {}) : k(k_), letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  int size() const { return static_cast<int>(letters.size()); }

  int rank() const {
    int r = 0;
    for (letter l : letters) r += l.weight();
    return r;
  }

  friend bool operator==(const fib_word&, const fib_word&) = default;
  friend std::strong_ordering operator<=>(const fib_word& a, const fib_word& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(),
                                                  b.letters.begin(), b.letters.end());
  }
};

inline void validate(const fib_word& w) {
  if (w.k < 1) throw error("fib_word: k must be >= 1");
  for (int i = 0; i < w.size(); ++i) {
    letter l = w.letters[i];
    if (l.is_one() && (l.height() < 1 || l.height() > w.k))
      throw error("fib_word: letter colour out of range 1..k", i + 1);
  }
}

// Length of the maximal leading run of 2's.
inline int leading_two_run(const fib_word& w) {
  int r = 0;
  while (r < w.size() && w.letters[r].is_two()) ++r;
  return r;
}

// Index of the leftmost 1 of any colour, or nullopt for all-2 words.
inline std::optional<int> leftmost_one(const fib_word& w) {
  int r = leading_two_run(w);
  if (r == w.size()) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------------------
// Text format: letters separated by single spaces, "1_j" and "2"; the empty
// word prints as "@".

inline std::string format_word(const fib_word& w) {
  if (w.empty()) return "@";
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    if (w.letters[i].is_two())
      out += '2';
    else
      out += "1_" + std::to_string(w.letters[i].height());
  }
  return out;
}

inline fib_word parse_word(const std::string& text, int k) {
  if (k < 1) throw error("parse_word: k must be >= 1");
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  fib_word w(k);
  if (tokens.size() == 1 && tokens[0] == "@") return w;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "2") {
      w.letters.push_back(letter::two());
    } else if (tok.rfind("1_", 0) == 0 && tok.size() > 2 &&
               tok.find_first_not_of("0123456789", 2) == std::string::npos) {
      int h = 0;
      try {
        h = std::stoi(tok.substr(2));
      } catch (const std::exception&) {
        throw error("parse_word: malformed letter '" + tok + "'", i + 1);
      }
      if (h < 1 || h > k)
        throw error("parse_word: colour " + std::to_string(h) + " out of range 1.." +
                        std::to_string(k),
                    i + 1);
      w.letters.push_back(letter::one(h));
    } else {
      throw error("parse_word: malformed letter '" + tok + "'", i + 1);
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Cover relations.

inline std::vector<fib_word> covers_down(const fib_word& w) {
  std::vector<fib_word> out;
  const int r = leading_two_run(w);
  for (int pos = 0; pos < r; ++pos) {
    for (int c = 1; c <= w.k; ++c) {
      fib_word z = w;
      z.letters[pos] = letter::one(c);
      out.push_back(std::move(z));
    }
  }
  if (r < w.size()) {
    fib_word z = w;
    z.letters.erase(z.letters.begin() + r);
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<fib_word> covers_up(const fib_word& z) {
  std::vector<fib_word> out;
  const int r = leading_two_run(z);
  for (int pos = 0; pos <= r; ++pos) {
    for (int c = 1; c <= z.k; ++c) {
      fib_word w = z;
      w.letters.insert(w.letters.begin() + pos, letter::one(c));
      out.push_back(std::move(w));
    }
  }
  if (r < z.size()) {
    fib_word w = z;
    w.letters[r] = letter::two();
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_cover(const fib_word& z, const fib_word& w) {
  if (z.k != w.k) throw error("is_cover: words live in different Z(k) alphabets");
  auto down = covers_down(w);
  return std::binary_search(down.begin(), down.end(), z);
}

// All words of rank n, lexicographic (1_1 < ... < 1_k < 2, letter by letter).
inline std::vector<fib_word> elements_of_rank(int k, int n) {
  if (k < 1) throw error("elements_of_rank: k must be >= 1");
  if (n < 0) throw error("elements_of_rank: n must be >= 0");
  std::vector<fib_word> out;
  fib_word prefix(k);
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      prefix.letters.push_back(letter::one(c));
      self(self, remaining - 1);
      prefix.letters.pop_back();
    }
    if (remaining >= 2) {
      prefix.letters.push_back(letter::two());
      self(self, remaining - 2);
      prefix.letters.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// ---------------------------------------------------------------------------
// Saturated chain counts e(w), by the recursion e(w) = sum of e(z) over the
// covers z of w.  The memo is per-instance; use one counter per thread.

class chain_counter {
public:
  const big_int& count(const fib_word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    big_int total = 0;
    if (w.empty()) {
      total = 1;
    } else {
      for (const fib_word& z : covers_down(w)) total += count(z);
    }
    return memo_.emplace(w, std::move(total)).first->second;
  }

private:
  std::map<fib_word, big_int> memo_;
};

inline big_int chain_count(const fib_word& w) {
  chain_counter counter;
  return counter.count(w);
}

// |covers_up(w)| - |covers_down(w)| == k, the differential-poset degree law.
inline bool degree_law(const fib_word& w) {
  return static_cast<int>(covers_up(w).size()) ==
         static_cast<int>(covers_down(w).size()) + w.k;
}

struct differential_identity_result {
  big_int lhs;  // sum of e(w)^2 over rank-n words
  big_int rhs;  // k^n * n!
  bool ok = false;
};

inline differential_identity_result verify_differential_identity(int k, int n) {
  differential_identity_result res;
  chain_counter counter;
  res.lhs = 0;
  for (const fib_word& w : elements_of_rank(k, n)) {
    const big_int& e = counter.count(w);
    res.lhs += e * e;
  }
  res.rhs = 1;
  for (int i = 1; i <= n; ++i) res.rhs *= i;
  big_int p = 1;
  for (int i = 0; i < n; ++i) p *= k;
  res.rhs *= p;
  res.ok = (res.lhs == res.rhs);
  return res;
}

}  // namespace fibtab
