#pragma once

#include <cstddef>
#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ajd/dimensions.hpp"
#include "ajd/error.hpp"
#include "ajd/lie_quotient.hpp"
#include "ajd/linear_algebra.hpp"
#include "ajd/word.hpp"
#include "ajd/word_algebra.hpp"

namespace ajd {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

enum class Space { lie, h };

inline std::string space_name(Space s) { return s == Space::lie ? "lie" : "h"; }

/// Number of words with multidegree `m`.
inline Integer multinomial(const Multidegree& m) {
  Integer r = detail::factorial(m.total());
  for (int c : m.counts()) r /= detail::factorial(c);
  return r;
}

inline std::vector<Word> enum_words(const Multidegree& m,
                                    std::uint64_t bound = kDefaultEnumerationBound) {
  Integer count = multinomial(m);
  if (count > bound) {
    throw ResourceError("multidegree " + m.str() + " has " + count.str() +
                        " words, above the bound " + std::to_string(bound));
  }
  return words_with_multidegree(m);
}

/// Rank data backing a basis selection.
struct Certificate {
  std::size_t words = 0;           // words of the multidegree
  std::size_t relation_rank = 0;   // rank of the relation block
  std::size_t image_rank = 0;      // rank of the canonical images of the representatives
  std::size_t kernel_rank = 0;     // (h only) representatives whose image ell kills
  Integer formula = 0;

  std::size_t quotient_dimension() const { return words - relation_rank; }
};

struct BasisSet {
  Multidegree multidegree;
  Space space = Space::lie;
  std::vector<Word> words;
  Certificate certificate;

  std::size_t size() const { return words.size(); }

  /// Independent (image rank), spanning (quotient dimension) and of formula size.
  bool certified() const {
    const Certificate& c = certificate;
    bool ok = c.image_rank == words.size() && c.quotient_dimension() == words.size() &&
              Integer(words.size()) == c.formula;
    if (space == Space::h) ok = ok && c.kernel_rank == words.size();
    return ok;
  }
};

namespace detail {

/// Words that are not leading terms of the relation block when pivots sit at
/// the largest word. These are exactly the greedy lex-order choices.
inline std::vector<Word> standard_words(const std::vector<Word>& words, int p, Family family,
                                        std::size_t& rank) {
  using Row = SparseRow<Word, std::greater<Word>>;
  RowEchelon<Word, std::greater<Word>> e;
  std::size_t n = words.empty() ? 0 : words.front().size();
  auto insert = [&](const Chain& c) {
    Row r;
    for (const auto& [w, k] : c) r.emplace(w, k);
    e.insert(r);
  };
  for (const Word& w : words) {
    if (family == Family::prime && n == 1) {
      insert(Chain::word(w, p));
      continue;
    }
    for (std::size_t k = 2; k <= n; ++k) {
      Chain rel = family == Family::lie ? fold_l(k, w, p) : fold_prime(k, w, p);
      rel.add(w, -1);
      insert(rel);
    }
  }
  rank = e.rank();
  std::vector<Word> out;
  for (const Word& w : words) {
    if (!e.rows().contains(w)) out.push_back(w);
  }
  return out;
}

}  // namespace detail

/// Greedy lex-order representatives of L_m inside the free associative algebra.
inline BasisSet lie_basis(const Multidegree& m,
                          std::uint64_t bound = kDefaultEnumerationBound) {
  if (m.total() < 1) throw InputError("lie basis needs total degree >= 1");
  BasisSet b{m, Space::lie, {}, {}};
  int p = m.alphabet();
  std::vector<Word> words = enum_words(m, bound);
  b.certificate.words = words.size();
  b.words = detail::standard_words(words, p, Family::lie, b.certificate.relation_rank);
  RowEchelon<Word> images;
  for (const Word& w : b.words) images.insert(to_row(canonical_l(w, p).projected));
  b.certificate.image_rank = images.rank();
  b.certificate.formula = witt_multidegree(m);
  return b;
}

/// Greedy lex-order representatives of the h-space in multidegree `m`.
inline BasisSet h_basis(const Multidegree& m, std::uint64_t bound = kDefaultEnumerationBound) {
  if (m.total() < 2) throw InputError("h basis needs total degree >= 2");
  BasisSet b{m, Space::h, {}, {}};
  int p = m.alphabet();
  std::vector<Word> words = enum_words(m, bound);
  b.certificate.words = words.size();
  b.words = detail::standard_words(words, p, Family::prime, b.certificate.relation_rank);
  RowEchelon<std::pair<int, Word>> images;
  for (const Word& w : b.words) {
    TensorElement t = canonical_prime(w, p).image;
    images.insert(t.to_row());
    if (ell_map(t).projected.is_zero()) ++b.certificate.kernel_rank;
  }
  b.certificate.image_rank = images.rank();
  b.certificate.formula = h_dim_multidegree(m);
  return b;
}

inline BasisSet basis(Space s, const Multidegree& m,
                      std::uint64_t bound = kDefaultEnumerationBound) {
  return s == Space::lie ? lie_basis(m, bound) : h_basis(m, bound);
}

/// One aggregated line of the degree-9 table over nine letters: the letter
/// multiplicities, the printed total and the printed combinatorial factors.
struct Section4Line {
  std::vector<int> partition;
  long long printed = 0;
  std::string factors;
  std::vector<long long> factor_values;
};

inline const std::vector<Section4Line>& section4_lines() {
  static const std::vector<Section4Line> lines = {
      {{1, 1, 1, 1, 1, 1, 1, 1, 1}, 5040, "7!", {5040}},
      {{1, 1, 1, 1, 1, 1, 1, 2}, 181440, "9x8xC(7,2)x5!", {9, 8, 21, 120}},
      {{1, 1, 1, 1, 1, 1, 3}, 211680, "C(9,7)x7xC(7,3)x4!", {36, 7, 35, 24}},
      {{1, 1, 1, 1, 1, 4}, 105840, "C(9,6)x6xC(7,4)x3!", {84, 6, 35, 6}},
      {{1, 1, 1, 1, 5}, 26460, "C(9,5)x5xC(7,5)x2!", {126, 5, 21, 2}},
      {{1, 1, 1, 6}, 3528, "C(9,4)x4x7", {126, 4, 7}},
      {{1, 1, 7}, 252, "C(9,3)x3", {84, 3}},
      {{1, 1, 1, 1, 1, 2, 2}, 952560, "C(9,7)xC(7,2)xC(7,2)xC(5,2)x3!", {36, 21, 21, 10, 6}},
      {{1, 1, 1, 1, 2, 3}, 1058400, "C(9,6)x6x5xC(7,3)xC(4,2)x2!", {84, 6, 5, 35, 6, 2}},
      {{1, 1, 1, 2, 4}, 264600, "C(9,5)x5x4xC(7,4)x3", {126, 5, 4, 35, 3}},
      {{1, 1, 2, 5}, 31752, "C(9,4)x4x3xC(7,2)", {126, 4, 3, 21}},
      // The printed factors multiply to 352800, a third of the printed total;
      // the total is what the recomputation reproduces.
      {{1, 1, 1, 2, 2, 2}, 1058400, "C(9,6)xC(6,3)xC(7,2)xC(5,2)", {84, 20, 21, 10}},
      {{1, 1, 2, 2, 3}, 793800, "C(9,5)x5xC(4,2)xC(7,2)xC(5,2)", {126, 5, 6, 21, 10}},
      {{1, 1, 1, 3, 3}, 176400, "C(9,5)xC(5,2)xC(7,3)x4", {126, 10, 35, 4}},
      {{1, 1, 3, 4}, 52920, "C(9,4)x12xC(7,3)", {126, 12, 35}},
      {{1, 2, 2, 2, 2}, 196560, "C(9,5)x5x312", {126, 5, 312}},
      {{1, 2, 2, 4}, 77112, "C(9,4)x4x3x51", {126, 4, 3, 51}},
      {{1, 2, 6}, 1512, "C(9,3)x3!x3", {84, 6, 3}},
      {{1, 2, 3, 3}, 105840, "C(9,4)x4x3x70", {126, 4, 3, 70}},
      {{1, 3, 5}, 3528, "C(9,3)x3!x7", {84, 6, 7}},
      {{1, 4, 4}, 2016, "C(9,3)x3x8", {84, 3, 8}},
      {{2, 2, 2, 3}, 51408, "504x102", {504, 102}},
      {{2, 2, 5}, 2268, "252x9", {252, 9}},
      {{2, 3, 4}, 8064, "504x16", {504, 16}},
      {{3, 3, 3}, 2016, "84x24", {84, 24}},
      {{3, 6}, 72, "72x1", {72, 1}},
      {{4, 5}, 72, "72x1", {72, 1}},
  };
  return lines;
}

inline constexpr long long kSection4Total = 5373540;

/// Recomputed line of the degree-9 table.
struct Section4Result {
  Section4Line line;
  Integer assignments = 0;   // multidegrees over nine letters that permute the line
  Integer per_assignment = 0;
  Integer value = 0;
  Integer factor_product = 0;

  bool matches() const { return value == line.printed; }
  bool factors_match() const { return factor_product == line.printed; }
};

/// Distinct rearrangements of `partition` padded with zeros to `letters` slots.
inline Integer letter_assignments(const std::vector<int>& partition, int letters) {
  std::vector<int> v = partition;
  v.resize(static_cast<std::size_t>(letters), 0);
  std::map<int, long long> mult;
  for (int c : v) ++mult[c];
  Integer r = detail::factorial(letters);
  for (const auto& [c, k] : mult) r /= detail::factorial(k);
  return r;
}

inline std::vector<Section4Result> section4_table(int p = 9, int n = 9) {
  if (p != 9 || n != 9) throw InputError("the itemized table exists only for p = n = 9");
  std::vector<Section4Result> out;
  for (const Section4Line& line : section4_lines()) {
    Section4Result r;
    r.line = line;
    r.assignments = letter_assignments(line.partition, p);
    r.per_assignment = h_dim_multidegree(Multidegree(line.partition));
    r.value = r.assignments * r.per_assignment;
    r.factor_product = 1;
    for (long long f : line.factor_values) r.factor_product *= f;
    out.push_back(std::move(r));
  }
  return out;
}

inline Integer section4_total(const std::vector<Section4Result>& rows) {
  Integer s = 0;
  for (const Section4Result& r : rows) s += r.value;
  return s;
}

/// Normalizations of the even-run condition on two-letter words.
struct RunPredicate {
  enum class Boundary { constrained, exempt };
  enum class Leading { free, one, one_end_two };
  enum class Form { two_letter, larger_letters };

  Boundary boundary = Boundary::constrained;
  Leading leading = Leading::free;
  Form form = Form::two_letter;

  std::string name() const {
    std::string s = form == Form::two_letter ? "runs-of-2" : "larger-letters";
    s += boundary == Boundary::constrained ? "/boundary-constrained" : "/boundary-exempt";
    switch (leading) {
      case Leading::free: s += "/lead-free"; break;
      case Leading::one: s += "/lead-1"; break;
      case Leading::one_end_two: s += "/lead-1-end-2"; break;
    }
    return s;
  }

  bool operator()(const Word& w) const {
    if (w.empty()) return false;
    if (leading != Leading::free && w[0] != 1) return false;
    if (leading == Leading::one_end_two && w[w.size() - 1] != 2) return false;
    return form == Form::two_letter ? two_letter_ok(w) : larger_ok(w);
  }

  static std::vector<RunPredicate> variants() {
    std::vector<RunPredicate> out;
    for (Form f : {Form::two_letter, Form::larger_letters}) {
      for (Boundary b : {Boundary::constrained, Boundary::exempt}) {
        for (Leading l : {Leading::free, Leading::one, Leading::one_end_two}) {
          out.push_back({b, l, f});
        }
      }
    }
    return out;
  }

 private:
  bool two_letter_ok(const Word& w) const {
    std::size_t i = 0;
    while (i < w.size()) {
      if (w[i] != 2) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < w.size() && w[j] == 2) ++j;
      bool interior = i > 0 && j < w.size();
      if ((j - i) % 2 == 0 && (interior || boundary == Boundary::constrained)) return false;
      i = j;
    }
    return true;
  }

  // A block of letters all larger than its neighbours must have odd length;
  // a missing neighbour counts as the letter 1.
  bool larger_ok(const Word& w) const {
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        bool left = i > 0, right = j < n;
        if ((!left || !right) && boundary == Boundary::exempt) continue;
        int bound = std::max({1, left ? int(w[i - 1]) : 0, right ? int(w[j]) : 0});
        bool larger = true;
        for (std::size_t k = i; k < j && larger; ++k) larger = w[k] > bound;
        if (larger && (j - i) % 2 == 0) return false;
      }
    }
    return true;
  }
};

struct EvenRunResult {
  Multidegree multidegree;
  RunPredicate predicate;
  std::vector<Word> passing;
  Integer target = 0;
  std::size_t rank = 0;

  bool count_matches() const { return Integer(passing.size()) == target; }
  bool independent() const { return rank == passing.size(); }
  bool spanning() const { return Integer(rank) == target; }
};

inline EvenRunResult evenrun_experiment(const Multidegree& m, const RunPredicate& v,
                                        std::uint64_t bound = kDefaultEnumerationBound) {
  if (m.total() < 1) throw InputError("even-run experiment needs total degree >= 1");
  if (v.form == RunPredicate::Form::two_letter && m.alphabet() != 2) {
    throw InputError("the two-letter predicate needs a multidegree over two letters");
  }
  EvenRunResult r{m, v, {}, witt_multidegree(m), 0};
  int p = m.alphabet();
  RowEchelon<Word> images;
  for (const Word& w : enum_words(m, bound)) {
    if (!v(w)) continue;
    r.passing.push_back(w);
    images.insert(to_row(canonical_l(w, p).projected));
  }
  r.rank = images.rank();
  return r;
}

}  // namespace ajd
