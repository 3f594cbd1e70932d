#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ajd/chain.hpp"
#include "ajd/linear_algebra.hpp"
#include "ajd/word.hpp"
#include "ajd/word_algebra.hpp"

namespace ajd {

/// The two families of fold relations: h^l (quotient ~ free Lie algebra) and
/// h' (quotient ~ tree diagrams).
enum class Family { lie, prime };

inline std::string family_name(Family f) { return f == Family::lie ? "lH" : "H'"; }

inline constexpr std::uint64_t kDefaultWordBound = 2'000'000;

inline Integer power(std::uint64_t base, std::size_t exp) {
  Integer r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Row-reduced span of {fold(k, w) - w} in degree n. Fold moves preserve
/// multidegree, so the span splits into one echelon form per multidegree.
class RelationSpan {
 public:
  RelationSpan(std::size_t n, int p, Family family, Field field = Field::rationals(),
               std::uint64_t word_bound = kDefaultWordBound)
      : n_(n), p_(p), family_(family), field_(field) {
    if (n < 1 || p < 1) throw InputError("relation span needs n >= 1 and p >= 1");
    if (power(static_cast<std::uint64_t>(p), n) > word_bound) {
      throw ResourceError("relation span in degree " + std::to_string(n) + " over " +
                          std::to_string(p) + " letters has " +
                          power(static_cast<std::uint64_t>(p), n).str() +
                          " words, above the bound " + std::to_string(word_bound));
    }
    for (const Multidegree& m : multidegrees(static_cast<int>(n), p)) build(m);
  }

  std::size_t degree() const { return n_; }
  int alphabet() const { return p_; }
  Family family() const { return family_; }
  Field field() const { return field_; }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& [m, e] : blocks_) r += e.rank();
    return r;
  }
  std::size_t rank(const Multidegree& m) const { return block(m).rank(); }

  /// dim ASS_n(p) - rank.
  std::size_t quotient_dimension() const {
    std::size_t words = 0;
    for (const auto& [m, e] : blocks_) words += block_words_.at(m);
    return words - rank();
  }
  std::size_t quotient_dimension(const Multidegree& m) const {
    return block_words_.at(m) - block(m).rank();
  }

  /// Normal form modulo the span (unique per coset).
  Chain reduce(const Chain& c) const {
    Chain out(p_, field_);
    std::map<Multidegree, SparseRow<Word>> parts;
    for (const auto& [w, k] : c) {
      if (w.size() != n_) throw InputError("chain degree differs from the relation span");
      parts[w.multidegree(p_)].emplace(w, k.in(field_));
    }
    for (const auto& [m, row] : parts) out += from_row(block(m).reduce(row), p_, field_);
    return out;
  }

  bool contains(const Chain& c) const { return reduce(c).is_zero(); }

  const RowEchelon<Word>& block(const Multidegree& m) const {
    auto it = blocks_.find(m);
    if (it == blocks_.end()) throw InputError("multidegree " + m.str() + " not in span");
    return it->second;
  }

  /// The stored rows as chains.
  std::vector<Chain> basis() const {
    std::vector<Chain> out;
    for (const auto& [m, e] : blocks_) {
      for (const auto& [pivot, row] : e.rows()) out.push_back(from_row(row, p_, field_));
    }
    return out;
  }

 private:
  void build(const Multidegree& m) {
    RowEchelon<Word>& e = blocks_[m];
    std::vector<Word> words = words_with_multidegree(m);
    block_words_[m] = words.size();
    for (const Word& w : words) {
      if (family_ == Family::prime && n_ == 1) {
        e.insert(to_row(Chain::word(w, p_, field_)));
        continue;
      }
      for (std::size_t k = 2; k <= n_; ++k) {
        Chain rel = family_ == Family::lie ? fold_l(k, w, p_, field_)
                                           : fold_prime(k, w, p_, field_);
        rel.add(w, -1);
        e.insert(to_row(rel));
      }
    }
  }

  std::size_t n_;
  int p_;
  Family family_;
  Field field_;
  std::map<Multidegree, RowEchelon<Word>> blocks_;
  std::map<Multidegree, std::size_t> block_words_;
};

/// Process-wide memo of relation spans. Inserts are idempotent, so the memo
/// behaves as if populated sequentially.
class RelationSpanCache {
 public:
  static RelationSpanCache& instance() {
    static RelationSpanCache cache;
    return cache;
  }

  std::shared_ptr<const RelationSpan> get(std::size_t n, int p, Family family,
                                          Field field = Field::rationals()) {
    Key key{n, p, family, field.characteristic()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = spans_.find(key);
      if (it != spans_.end()) return it->second;
    }
    auto span = std::make_shared<const RelationSpan>(n, p, family, field, word_bound_);
    std::lock_guard<std::mutex> lock(mu_);
    return spans_.try_emplace(key, std::move(span)).first->second;
  }

  void set_word_bound(std::uint64_t bound) {
    std::lock_guard<std::mutex> lock(mu_);
    word_bound_ = bound;
  }

 private:
  using Key = std::tuple<std::size_t, int, Family, std::uint64_t>;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const RelationSpan>> spans_;
  std::uint64_t word_bound_ = kDefaultWordBound;
};

inline std::shared_ptr<const RelationSpan> relation_span(std::size_t n, int p, Family family,
                                                         Field field = Field::rationals()) {
  return RelationSpanCache::instance().get(n, p, family, field);
}

/// Canonical representative of a class in the Lie quotient.
struct LieCanonical {
  Chain projected;
  std::size_t degree = 0;
  /// Set when the characteristic divides the degree and the representative
  /// is a span normal form instead of a Dynkin projection.
  bool via_span = false;

  friend bool operator==(const LieCanonical& a, const LieCanonical& b) {
    return a.projected == b.projected;
  }
  std::string str() const { return projected.str(); }
};

/// Dynkin projector (-1)^{n-1} eta / n on a homogeneous chain of degree n.
inline Chain dynkin_projector(const Chain& c) {
  if (c.is_zero()) return c;
  std::size_t n = c.homogeneous_degree();
  Coefficient k(detail::sign_pow(n - 1), static_cast<long long>(n));
  return eta(c) * k;
}

inline LieCanonical canonical_l(const Chain& c) {
  if (c.is_zero()) return {c, 0, false};
  std::size_t n = c.homogeneous_degree();
  if (n == 0) throw InputError("degree-0 chain has no Lie class");
  std::uint64_t q = c.field().characteristic();
  if (q != 0 && n % q == 0) {
    return {relation_span(n, c.alphabet(), Family::lie, c.field())->reduce(c), n, true};
  }
  return {dynkin_projector(c), n, false};
}

inline LieCanonical canonical_l(const Word& w, int alphabet, Field field = Field::rationals()) {
  return canonical_l(Chain::word(w, alphabet, field));
}

/// Element of L_{n-1}(p) (x) p: letter -> left factor.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(int alphabet, Field field = Field::rationals())
      : p_(alphabet), field_(field) {}

  int alphabet() const { return p_; }
  Field field() const { return field_; }
  const std::map<int, Chain>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds k·(a (x) b).
  TensorElement& add(const Chain& a, int b, const Coefficient& k = 1) {
    if (b < 1 || (p_ != 0 && b > p_)) throw InputError("tensor letter out of range");
    auto [it, inserted] = terms_.try_emplace(b, Chain(p_, field_));
    it->second.add(a, k);
    if (it->second.is_zero()) terms_.erase(it);
    return *this;
  }

  TensorElement& operator+=(const TensorElement& t) {
    for (const auto& [b, a] : t.terms_) add(a, b, 1);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& t) {
    for (const auto& [b, a] : t.terms_) add(a, b, -1);
    return *this;
  }
  TensorElement& operator*=(const Coefficient& k) {
    if (k.in(field_).is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, a] : terms_) a *= k;
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Coefficient& k) { return a *= k; }
  friend TensorElement operator*(const Coefficient& k, TensorElement a) { return a *= k; }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Coordinates keyed by (letter, word).
  SparseRow<std::pair<int, Word>> to_row() const {
    SparseRow<std::pair<int, Word>> r;
    for (const auto& [b, a] : terms_) {
      for (const auto& [w, k] : a) r.emplace(std::pair{b, w}, k);
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const TensorElement& t) {
    return os << t.str();
  }

  /// "1*([2,3] (x) 1) - 1*([3,2] (x) 1)"; zero is "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, a] : terms_) {
      for (const auto& [w, k] : a) {
        std::string coeff = k.str();
        bool negative = coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (first) {
          if (negative) s += '-';
        } else {
          s += negative ? " - " : " + ";
        }
        first = false;
        s += coeff + "*(" + w.str() + " (x) " + std::to_string(b) + ")";
      }
    }
    return s;
  }

 private:
  int p_ = 0;
  Field field_;
  std::map<int, Chain> terms_;
};

/// Canonical key of a class in the tree quotient: its g-image.
struct PrimeCanonical {
  TensorElement image;
  std::size_t degree = 0;

  friend bool operator==(const PrimeCanonical& a, const PrimeCanonical& b) {
    return a.image == b.image;
  }
  bool is_zero() const { return image.is_zero(); }
  std::string str() const { return image.str(); }
};

namespace detail {

/// Sum over terms k·u·b of k·P(u) (x) b.
inline TensorElement split_last(const Chain& c) {
  std::map<int, Chain> prefixes;
  for (const auto& [w, k] : c) {
    if (w.size() < 2) throw InputError("g' needs words of length at least 2");
    auto [it, ins] = prefixes.try_emplace(w.back(), Chain(c.alphabet(), c.field()));
    it->second.add(w.slice(0, w.size() - 1), k);
  }
  TensorElement t(c.alphabet(), c.field());
  for (const auto& [b, u] : prefixes) {
    if (!u.is_zero()) t.add(canonical_l(u).projected, b);
  }
  return t;
}

inline Chain join(const TensorElement& t) {
  Chain out(t.alphabet(), t.field());
  for (const auto& [b, a] : t.terms()) {
    out += concat(a, Chain::word(Word{b}, t.alphabet(), t.field()));
  }
  return out;
}

}  // namespace detail

/// g'(b_1..b_n) = P(b_1..b_{n-1}) (x) b_n, extended linearly.
inline TensorElement g_prime_map(const Chain& c) { return detail::split_last(c); }

inline TensorElement g_prime_map(const Word& w, int alphabet, Field field = Field::rationals()) {
  return g_prime_map(Chain::word(w, alphabet, field));
}

/// g(c) = g'(c) - g'(h^l_n(c)) on a homogeneous chain of degree n >= 2.
inline TensorElement g_map(const Chain& c) {
  if (c.is_zero()) return TensorElement(c.alphabet(), c.field());
  std::size_t n = c.homogeneous_degree();
  if (n < 2) throw InputError("g needs degree at least 2");
  return detail::split_last(c) - detail::split_last(fold_l(n, c));
}

inline TensorElement g_map(const Word& w, int alphabet, Field field = Field::rationals()) {
  return g_map(Chain::word(w, alphabet, field));
}

inline PrimeCanonical canonical_prime(const Chain& c) {
  if (c.is_zero()) return {TensorElement(c.alphabet(), c.field()), 0};
  std::size_t n = c.homogeneous_degree();
  if (n == 0) throw InputError("degree-0 chain has no tree class");
  if (n == 1) return {TensorElement(c.alphabet(), c.field()), 1};
  return {g_map(c), n};
}

inline PrimeCanonical canonical_prime(const Word& w, int alphabet,
                                      Field field = Field::rationals()) {
  return canonical_prime(Chain::word(w, alphabet, field));
}

/// l(a (x) b) = class of a·b in the Lie quotient.
inline LieCanonical ell_map(const TensorElement& t) { return canonical_l(detail::join(t)); }

/// g~(a (x) b) = class of a·b in the tree quotient.
inline PrimeCanonical g_tilde(const TensorElement& t) {
  return canonical_prime(detail::join(t));
}

/// Moves position i (1-based) to the front by a fold move: fold_l(i, w).
inline Chain choose_head(const Word& w, std::size_t i, int alphabet,
                         Field field = Field::rationals()) {
  if (i < 1 || i > w.size()) throw InputError("head position out of range");
  return fold_l(i, w, alphabet, field);
}

/// Chooses the unique occurrence of `a` as head in every summand.
inline Chain choose_head_letter(const Chain& c, int a) {
  Chain out(c.alphabet(), c.field());
  for (const auto& [w, k] : c) {
    if (w.count(a) != 1) {
      throw InputError("letter " + std::to_string(a) + " does not mark a unique leg in " +
                       w.str());
    }
    std::size_t pos = static_cast<std::size_t>(std::find(w.begin(), w.end(), a) - w.begin());
    out.add(fold_l(pos + 1, w, c.alphabet(), c.field()), k);
  }
  return out;
}

/// The Y relation: 2·w·eta(w) is sent to 0, anything else is kept.
inline Chain y_reduce(const Word& w, const Chain& v) {
  Chain y = concat(Chain::word(w, v), eta(Chain::word(w, v))) * 2;
  if (v == y) return Chain(v.alphabet(), v.field());
  return v;
}

}  // namespace ajd
