#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ajd/coefficient.hpp"
#include "ajd/error.hpp"
#include "ajd/word.hpp"

namespace ajd {

/// Finite formal sum of words with exact coefficients; an element of ASS(p).
///
/// An alphabet bound of 0 means "not yet bound": such a chain adopts the bound
/// of the first chain it is combined with.
class Chain {
 public:
  using Terms = std::map<Word, Coefficient>;

  Chain() = default;
  explicit Chain(int alphabet, Field field = Field::rationals())
      : p_(alphabet), field_(field) {
    if (alphabet < 0 || alphabet > kMaxAlphabet) throw InputError("bad alphabet bound");
  }

  static Chain word(const Word& w, int alphabet, Field field = Field::rationals()) {
    Chain c(alphabet, field);
    c.add(w, 1);
    return c;
  }
  static Chain word(const Word& w, const Chain& like) { return word(w, like.p_, like.field_); }

  int alphabet() const { return p_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coefficient coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Adds k·w, pruning a resulting zero.
  Chain& add(const Word& w, const Coefficient& k) {
    if (p_ != 0 && w.max_letter() > p_) {
      throw InputError("letter " + std::to_string(w.max_letter()) +
                       " exceeds alphabet bound " + std::to_string(p_));
    }
    Coefficient kk = k.in(field_);
    if (kk.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(w, kk);
    if (!inserted) {
      it->second += kk;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  /// Adds k·c.
  Chain& add(const Chain& c, const Coefficient& k = 1) {
    adopt(c);
    Coefficient kk = k.in(field_);
    if (kk.is_zero()) return *this;
    for (const auto& [w, v] : c.terms_) add(w, v * kk);
    return *this;
  }

  Chain& operator+=(const Chain& c) { return add(c, 1); }
  Chain& operator-=(const Chain& c) { return add(c, -1); }
  Chain& operator*=(const Coefficient& k) {
    Coefficient kk = k.in(field_);
    if (kk.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= kk;
    return *this;
  }

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a) { return a *= -1; }
  friend Chain operator*(Chain a, const Coefficient& k) { return a *= k; }
  friend Chain operator*(const Coefficient& k, Chain a) { return a *= k; }

  /// Term-wise equality; alphabet bounds are not compared.
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

  /// Same chain re-read over `f`.
  Chain in(Field f) const {
    Chain c(p_, f);
    for (const auto& [w, v] : terms_) c.add(w, v);
    return c;
  }

  /// The common length of all words, if there is one. The zero chain has none.
  std::optional<std::size_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t n = terms_.begin()->first.size();
    for (const auto& [w, v] : terms_) {
      if (w.size() != n) return std::nullopt;
    }
    return n;
  }
  bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

  /// Degree of a homogeneous chain; 0 for the zero chain.
  std::size_t homogeneous_degree() const {
    if (terms_.empty()) return 0;
    auto d = degree();
    if (!d) throw InputError("chain is not homogeneous");
    return *d;
  }

  /// Canonical text, e.g. "1*[1,2] - 1*[2,1]"; the empty word is a bare
  /// coefficient and the zero chain is "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, v] : terms_) {
      std::string coeff = v.str();
      bool negative = !coeff.empty() && coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      if (first) {
        if (negative) s += '-';
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      s += coeff;
      if (!w.empty()) s += "*" + w.str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.str(); }

  /// Parses the chain grammar. With alphabet 0 the bound is the largest
  /// letter that occurs (at least 1).
  static Chain parse(std::string_view text, int alphabet = 0,
                     Field field = Field::rationals());

 private:
  void adopt(const Chain& c) {
    if (p_ == 0) {
      p_ = c.p_;
    } else if (c.p_ != 0 && c.p_ != p_) {
      throw InputError("mismatched alphabet bounds " + std::to_string(p_) + " and " +
                       std::to_string(c.p_));
    }
    if (field_ != c.field_) {
      if (field_.is_rational()) {
        *this = in(c.field_);
      } else if (!c.field_.is_rational()) {
        throw InputError("mismatched coefficient fields");
      }
    }
  }

  int p_ = 0;
  Field field_;
  Terms terms_;
};

/// Bilinear extension of word concatenation.
inline Chain concat(const Chain& a, const Chain& b) {
  if (a.alphabet() != 0 && b.alphabet() != 0 && a.alphabet() != b.alphabet()) {
    throw InputError("mismatched alphabet bounds");
  }
  Chain out(a.alphabet() ? a.alphabet() : b.alphabet(),
            a.field().is_rational() ? b.field() : a.field());
  for (const auto& [u, x] : a) {
    for (const auto& [v, y] : b) out.add(u + v, x * y);
  }
  return out;
}

inline Chain operator*(const Chain& a, const Chain& b) { return concat(a, b); }

inline Chain reverse(const Chain& c) {
  Chain out(c.alphabet(), c.field());
  for (const auto& [w, v] : c) out.add(w.reversed(), v);
  return out;
}

namespace detail {

class ChainParser {
 public:
  explicit ChainParser(std::string_view s) : s_(s) {}

  std::size_t pos() const { return i_; }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  std::string digits() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected digits", start);
    return std::string(s_.substr(start, i_ - start));
  }

  Rational coeff() {
    Integer num(digits());
    Integer den = 1;
    if (peek() == '/') {
      ++i_;
      std::size_t at = i_;
      den = Integer(digits());
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return Rational(num, den);
  }

  Word word(int alphabet) {
    expect('[');
    Word w;
    while (true) {
      std::size_t at = (skip(), i_);
      std::string d = digits();
      if (d.size() > 3 || std::stoi(d) < 1 || std::stoi(d) > kMaxAlphabet) {
        throw ParseError("letter out of range", at);
      }
      int a = std::stoi(d);
      if (alphabet != 0 && a > alphabet) {
        throw ParseError("letter " + d + " exceeds alphabet bound " + std::to_string(alphabet),
                         at);
      }
      w.push_back(a);
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect(']');
      return w;
    }
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Chain Chain::parse(std::string_view text, int alphabet, Field field) {
  detail::ChainParser in(text);
  std::vector<std::pair<Word, Rational>> terms;
  if (in.at_end()) throw ParseError("empty chain", 0);
  bool first = true;
  while (!in.at_end()) {
    bool negative = false;
    char c = in.peek();
    if (!first) {
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", in.pos());
      negative = c == '-';
      in.expect(c);
      c = in.peek();
    }
    if (first && c == '-') {
      negative = true;
      in.expect('-');
      c = in.peek();
    }
    first = false;
    Rational k = 1;
    Word w;
    if (c == '[') {
      w = in.word(alphabet);
    } else {
      k = in.coeff();
      if (in.peek() == '*') {
        in.expect('*');
        w = in.word(alphabet);
      }
    }
    terms.emplace_back(std::move(w), negative ? Rational(-k) : k);
  }
  int p = alphabet;
  if (p == 0) {
    p = 1;
    for (const auto& [w, k] : terms) p = std::max(p, w.max_letter());
  }
  Chain out(p, field);
  for (const auto& [w, k] : terms) out.add(w, Coefficient(k));
  return out;
}

}  // namespace ajd
