#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ajd/error.hpp"
#include "ajd/word.hpp"

namespace ajd {

/// Element of the free magma: a binary rooted tree with letter leaves.
class MagmaTerm {
 public:
  static MagmaTerm leaf(int letter) {
    if (letter < 1 || letter > kMaxAlphabet) throw InputError("leaf letter out of range");
    MagmaTerm t;
    t.letter_ = letter;
    return t;
  }
  static MagmaTerm node(MagmaTerm left, MagmaTerm right) {
    MagmaTerm t;
    t.left_ = std::make_shared<const MagmaTerm>(std::move(left));
    t.right_ = std::make_shared<const MagmaTerm>(std::move(right));
    t.leaves_ = t.left_->leaves_ + t.right_->leaves_;
    return t;
  }

  bool is_leaf() const { return letter_ != 0; }
  int letter() const { return letter_; }
  const MagmaTerm& left() const { return *left_; }
  const MagmaTerm& right() const { return *right_; }
  std::size_t leaves() const { return leaves_; }

  /// Leaf letters in left-to-right order.
  Word leaf_word() const {
    Word w;
    collect(w);
    return w;
  }

  int max_letter() const {
    return is_leaf() ? letter_ : std::max(left_->max_letter(), right_->max_letter());
  }

  /// "3" or "((1 2) 3)".
  std::string str() const {
    if (is_leaf()) return std::to_string(letter_);
    return "(" + left_->str() + " " + right_->str() + ")";
  }

  static MagmaTerm parse(std::string_view text) {
    std::size_t i = 0;
    MagmaTerm t = parse_at(text, i);
    skip(text, i);
    if (i != text.size()) throw ParseError("trailing input after magma term", i);
    return t;
  }

  /// Parses one term starting at `i`, advancing past it.
  static MagmaTerm parse_at(std::string_view s, std::size_t& i) {
    skip(s, i);
    if (i >= s.size()) throw ParseError("expected magma term", i);
    if (s[i] == '(') {
      ++i;
      MagmaTerm l = parse_at(s, i);
      MagmaTerm r = parse_at(s, i);
      skip(s, i);
      if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
      ++i;
      return node(std::move(l), std::move(r));
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || i - start > 3) throw ParseError("expected a letter", start);
    int a = std::stoi(std::string(s.substr(start, i - start)));
    if (a < 1 || a > kMaxAlphabet) throw ParseError("letter out of range", start);
    return leaf(a);
  }

  friend bool operator==(const MagmaTerm& a, const MagmaTerm& b) {
    if (a.is_leaf() || b.is_leaf()) return a.letter_ == b.letter_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }

 private:
  MagmaTerm() = default;

  static void skip(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  void collect(Word& w) const {
    if (is_leaf()) {
      w.push_back(letter_);
      return;
    }
    left_->collect(w);
    right_->collect(w);
  }

  int letter_ = 0;
  std::size_t leaves_ = 1;
  std::shared_ptr<const MagmaTerm> left_;
  std::shared_ptr<const MagmaTerm> right_;
};

}  // namespace ajd
