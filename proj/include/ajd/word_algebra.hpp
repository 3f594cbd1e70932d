#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ajd/chain.hpp"
#include "ajd/magma.hpp"
#include "ajd/word.hpp"

namespace ajd {

namespace detail {

/// Signed expansion of eta(w) before like terms are merged.
inline std::vector<std::pair<Word, int>> eta_terms(const Word& w) {
  std::vector<std::pair<Word, int>> cur;
  if (w.empty()) {
    cur.emplace_back(Word{}, 1);
    return cur;
  }
  cur.emplace_back(w.slice(0, 1), 1);
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word a = w.slice(k, k + 1);
    std::vector<std::pair<Word, int>> next;
    next.reserve(cur.size() * 2);
    for (const auto& [u, s] : cur) {
      next.emplace_back(a + u, s);
      next.emplace_back(u + a, -s);
    }
    cur = std::move(next);
  }
  return cur;
}

inline int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// eta(a_1..a_n) = a_n eta(a_1..a_{n-1}) - eta(a_1..a_{n-1}) a_n, eta(a) = a.
/// The empty word is fixed.
inline Chain eta(const Word& w, int alphabet, Field field = Field::rationals()) {
  Chain out(alphabet, field);
  for (const auto& [u, s] : detail::eta_terms(w)) out.add(u, s);
  return out;
}

inline Chain eta(const Chain& c) {
  Chain out(c.alphabet(), c.field());
  for (const auto& [w, k] : c) {
    for (const auto& [u, s] : detail::eta_terms(w)) out.add(u, k * s);
  }
  return out;
}

/// h^l_n: (-1)^{n-1} a_n eta(a_1..a_{n-1}) a_{n+1}..a_len for 2 <= n <= len,
/// otherwise the word itself.
inline Chain fold_l(std::size_t n, const Word& w, int alphabet,
                    Field field = Field::rationals()) {
  Chain out(alphabet, field);
  if (n < 2 || n > w.size()) {
    out.add(w, 1);
    return out;
  }
  Word head = w.slice(n - 1, n);
  Word rest = w.slice(n, w.size());
  int sign = detail::sign_pow(n - 1);
  for (const auto& [u, s] : detail::eta_terms(w.slice(0, n - 1))) {
    out.add(head + u + rest, s * sign);
  }
  return out;
}

inline Chain fold_l(std::size_t n, const Chain& c) {
  Chain out(c.alphabet(), c.field());
  for (const auto& [w, k] : c) out.add(fold_l(n, w, c.alphabet(), c.field()), k);
  return out;
}

/// h'_n: 0 on single letters, (-1)^n reversal when n = len > 1, h^l_n otherwise.
inline Chain fold_prime(std::size_t n, const Word& w, int alphabet,
                        Field field = Field::rationals()) {
  Chain out(alphabet, field);
  if (w.size() == 1) return out;
  if (n == w.size()) {
    out.add(w.reversed(), detail::sign_pow(n));
    return out;
  }
  return fold_l(n, w, alphabet, field);
}

inline Chain fold_prime(std::size_t n, const Chain& c) {
  Chain out(c.alphabet(), c.field());
  for (const auto& [w, k] : c) out.add(fold_prime(n, w, c.alphabet(), c.field()), k);
  return out;
}

/// leaf a -> [a], node(x, y) -> xy - yx.
inline Chain commutator_expand(const MagmaTerm& t, int alphabet,
                               Field field = Field::rationals()) {
  if (alphabet != 0 && t.max_letter() > alphabet) {
    throw InputError("magma leaf exceeds alphabet bound");
  }
  if (t.is_leaf()) return Chain::word(Word{t.letter()}, alphabet, field);
  Chain x = commutator_expand(t.left(), alphabet, field);
  Chain y = commutator_expand(t.right(), alphabet, field);
  return concat(x, y) - concat(y, x);
}

}  // namespace ajd
