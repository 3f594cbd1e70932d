#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ajd/error.hpp"

namespace ajd {

inline constexpr int kMaxAlphabet = 255;

/// A generator 1..p of the free algebra.
struct Letter {
  int index = 0;

  constexpr Letter() = default;
  constexpr explicit Letter(int i) : index(i) {}

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Letter counts (n_1, ..., n_p). The vector length is the alphabet bound.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
      if (c < 0) throw InputError("negative multidegree entry");
    }
  }
  Multidegree(std::initializer_list<int> counts)
      : Multidegree(std::vector<int>(counts)) {}

  static Multidegree zero(int alphabet) {
    return Multidegree(std::vector<int>(static_cast<std::size_t>(alphabet), 0));
  }

  /// Parses "3,3,3".
  static Multidegree parse(std::string_view text) {
    std::vector<int> counts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(pos, end - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item.empty() ||
          !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("expected a non-negative integer in multidegree", pos);
      }
      counts.push_back(std::stoi(std::string(item)));
      pos = end + 1;
    }
    if (counts.size() > static_cast<std::size_t>(kMaxAlphabet)) {
      throw InputError("multidegree longer than the maximal alphabet");
    }
    return Multidegree(std::move(counts));
  }

  int alphabet() const { return static_cast<int>(counts_.size()); }
  int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }
  int operator[](std::size_t i) const { return counts_[i]; }
  int& operator[](std::size_t i) { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }
  int count(Letter a) const { return counts_[static_cast<std::size_t>(a.index - 1)]; }

  /// Same multidegree with the count of letter `a` lowered by one.
  Multidegree without(Letter a) const {
    Multidegree m = *this;
    int& c = m.counts_[static_cast<std::size_t>(a.index - 1)];
    if (c == 0) throw InputError("letter absent from multidegree");
    --c;
    return m;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(counts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<int> counts_;
};

/// A finite sequence of letters; the empty word is the algebra identity.
class Word {
 public:
  using Storage = boost::container::small_vector<std::uint8_t, 16>;

  Word() = default;
  Word(std::initializer_list<int> letters) {
    for (int a : letters) push_back(a);
  }
  explicit Word(std::span<const int> letters) {
    for (int a : letters) push_back(a);
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  Letter letter(std::size_t i) const { return Letter(letters_[i]); }
  int front() const { return letters_.front(); }
  int back() const { return letters_.back(); }

  void push_back(int a) {
    if (a < 1 || a > kMaxAlphabet) {
      throw InputError("letter " + std::to_string(a) + " out of range");
    }
    letters_.push_back(static_cast<std::uint8_t>(a));
  }
  void push_back(Letter a) { push_back(a.index); }

  Word& append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
  }

  /// Letters [from, to).
  Word slice(std::size_t from, std::size_t to) const {
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                      letters_.begin() + static_cast<std::ptrdiff_t>(to));
    return w;
  }

  Word reversed() const {
    Word w = *this;
    std::reverse(w.letters_.begin(), w.letters_.end());
    return w;
  }

  int max_letter() const {
    int m = 0;
    for (auto a : letters_) m = std::max<int>(m, a);
    return m;
  }

  Multidegree multidegree(int alphabet) const {
    Multidegree m = Multidegree::zero(alphabet);
    for (auto a : letters_) {
      if (a > alphabet) throw InputError("letter exceeds alphabet bound");
      ++m[a - 1U];
    }
    return m;
  }

  /// Number of occurrences of `a`.
  std::size_t count(int a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
  }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(letters_[i]);
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

  friend Word operator+(Word a, const Word& b) { return a.append(b); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  Storage letters_;
};

inline Word reverse(const Word& w) { return w.reversed(); }

/// All words with multidegree `m`, in lexicographic order.
inline std::vector<Word> words_with_multidegree(const Multidegree& m) {
  std::vector<int> letters;
  for (int a = 1; a <= m.alphabet(); ++a) {
    letters.insert(letters.end(), static_cast<std::size_t>(m[a - 1U]), a);
  }
  std::vector<Word> out;
  do {
    out.emplace_back(std::span<const int>(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

/// All multidegrees over `alphabet` letters with the given total, in
/// lexicographically decreasing order of count vectors.
inline std::vector<Multidegree> multidegrees(int total, int alphabet) {
  std::vector<Multidegree> out;
  if (alphabet <= 0) return out;
  std::vector<int> counts(static_cast<std::size_t>(alphabet), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == counts.size()) {
      counts[i] = left;
      out.emplace_back(counts);
      return;
    }
    for (int c = left; c >= 0; --c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, total);
  return out;
}

/// All p^n words of length n, lexicographic.
inline std::vector<Word> all_words(int length, int alphabet) {
  std::vector<Word> out;
  std::vector<int> cur(static_cast<std::size_t>(length), 1);
  if (alphabet < 1) return out;
  while (true) {
    out.emplace_back(std::span<const int>(cur));
    int i = length - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == alphabet) {
      cur[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace ajd
