#include <gtest/gtest.h>

#include <random>

#include "ajd/chain.hpp"
#include "ajd/magma.hpp"
#include "ajd/word_algebra.hpp"
#include "oracle.hpp"

using namespace ajd;

namespace {

Chain C(const char* text, int p = 3) { return Chain::parse(text, p); }
Chain W(Word w, int p = 3) { return Chain::word(w, p); }

}  // namespace

TEST(Coefficient, RationalsInLowestTerms) {
  Coefficient a(2, 4);
  EXPECT_EQ(a.str(), "1/2");
  EXPECT_EQ(Coefficient(3, -6).str(), "-1/2");
  EXPECT_EQ((a + a).str(), "1");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((Coefficient(2, 3) / Coefficient(4, 9)).str(), "3/2");
  EXPECT_THROW(Coefficient(1, 0), InputError);
}

TEST(Coefficient, ResiduesAndLiterals) {
  Field f5 = Field::residues(5);
  Coefficient x = Coefficient(3).in(f5);
  EXPECT_EQ((x * Coefficient(2)).str(), "1");
  EXPECT_EQ(Coefficient(1, 2).in(f5).str(), "3");
  EXPECT_EQ(x.inverse().str(), "2");
  EXPECT_EQ((-x).str(), "2");
  EXPECT_THROW(Coefficient(1, 5).in(f5), InputError);
  EXPECT_THROW(Field::residues(2), InputError);
  EXPECT_THROW(Field::residues(9), InputError);
}

TEST(Chain, ParseAndRender) {
  Chain c = C("1*[1,2] - 1*[2,1]");
  EXPECT_EQ(c.size(), 2U);
  EXPECT_EQ(c.str(), "1*[1,2] - 1*[2,1]");
  EXPECT_EQ(C("2*[1,2] + 3*[1,2]").str(), "5*[1,2]");
  EXPECT_EQ(C("3*[1,2,1] - 1/2*[2,1,1]").str(), "3*[1,2,1] - 1/2*[2,1,1]");
  EXPECT_EQ(C("[1] - [1]").str(), "0");
  EXPECT_EQ(C("2 + [1]").str(), "2 + 1*[1]");
  EXPECT_EQ(C("-1/3*[2]").str(), "-1/3*[2]");
  EXPECT_THROW(C("[1,5]"), InputError);
  try {
    C("[1,2] + *");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8U);
  }
  EXPECT_THROW(C("[1,2"), ParseError);
  EXPECT_THROW(C(""), ParseError);
  EXPECT_EQ(Chain::parse("[4,1]").alphabet(), 4);
}

TEST(Chain, RenderParseRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Chain c(3);
    int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
      Word w;
      int len = static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) w.push_back(1 + static_cast<int>(rng() % 3));
      c.add(w, Coefficient(static_cast<long long>(rng() % 7) - 3,
                           1 + static_cast<long long>(rng() % 4)));
    }
    Chain back = Chain::parse(c.str(), 3);
    EXPECT_EQ(back, c);
    EXPECT_EQ(back.str(), c.str());
  }
}

TEST(Chain, ConcatAndReverse) {
  EXPECT_EQ(concat(W({1}), W({2})), W({1, 2}));
  EXPECT_EQ(concat(W({}), W({1, 2})), W({1, 2}));
  EXPECT_EQ(concat(C("[1]-[2]"), W({3})), C("[1,3]-[2,3]"));
  EXPECT_THROW(concat(W({1}, 2), W({1}, 3)), InputError);
  EXPECT_EQ(reverse(Word{1, 2, 3}), (Word{3, 2, 1}));
  EXPECT_EQ(reverse(Word{1}), (Word{1}));
  EXPECT_EQ(reverse(reverse(Word{1, 2})), (Word{1, 2}));
  Chain a = C("[1,2]-2*[3]"), b = C("[2]+1"), c = C("1/2*[3,1]");
  EXPECT_EQ(concat(concat(a, b), c), concat(a, concat(b, c)));
}

TEST(Chain, Homogeneity) {
  EXPECT_TRUE(C("[1,2]+[2,2]").is_homogeneous());
  EXPECT_FALSE(C("[1,2]+[2]").is_homogeneous());
  EXPECT_THROW(C("[1,2]+[2]").homogeneous_degree(), InputError);
  EXPECT_EQ(C("[1,2,3]").homogeneous_degree(), 3U);
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(W({1})), W({1}));
  EXPECT_EQ(eta(W({1, 2})), C("[2,1]-[1,2]"));
  EXPECT_EQ(eta(W({1, 2, 3})), C("[3,2,1]-[3,1,2]-[2,1,3]+[1,2,3]"));
}

TEST(Eta, MatchesSubsetOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : all_words(n, 3)) {
      oracle::Vec v(w.begin(), w.end());
      ASSERT_EQ(oracle::from(eta(W(w))), oracle::eta_subsets(v)) << w.str();
    }
  }
}

TEST(Eta, IsSignedLeftNormedBracket) {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_words(n, 3)) {
      oracle::Vec v(w.begin(), w.end());
      oracle::OChain expected;
      oracle::add(expected, {}, 0);
      expected = oracle::sum(expected, oracle::left_normed(v), n % 2 == 1 ? 1 : -1);
      ASSERT_EQ(oracle::from(eta(W(w))), expected) << w.str();
    }
  }
}

TEST(Fold, LeftExamples) {
  EXPECT_EQ(fold_l(1, Word{1, 2}, 3), W({1, 2}));
  EXPECT_EQ(fold_l(2, Word{1, 2}, 3), C("-[2,1]"));
  EXPECT_EQ(fold_l(3, Word{1, 2, 3}, 3), C("[3,2,1]-[3,1,2]"));
  EXPECT_EQ(fold_l(9, Word{1, 2, 3}, 3), W({1, 2, 3}));
}

TEST(Fold, PrimeExamples) {
  EXPECT_TRUE(fold_prime(5, Word{1}, 3).is_zero());
  EXPECT_EQ(fold_prime(3, Word{1, 2, 3}, 3), C("-[3,2,1]"));
  EXPECT_EQ(fold_prime(2, Word{1, 2, 3}, 3), C("-[2,1,3]"));
  EXPECT_EQ(fold_prime(2, Word{1, 2}, 3), W({2, 1}));
}

TEST(Fold, PreserveMultidegreeAndLinearity) {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_words(n, 3)) {
      Multidegree m = w.multidegree(3);
      for (std::size_t k = 1; k <= static_cast<std::size_t>(n) + 1; ++k) {
        for (const Chain& c : {fold_l(k, w, 3), fold_prime(k, w, 3), eta(W(w))}) {
          for (const auto& [u, x] : c) ASSERT_EQ(u.multidegree(3), m);
        }
      }
    }
  }
  Chain a = C("[1,2,3]-1/2*[2,2,1]"), b = C("3*[3,1,2]");
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_EQ(fold_l(k, a * 2 + b), fold_l(k, a) * 2 + fold_l(k, b));
    EXPECT_EQ(fold_prime(k, a * 2 + b), fold_prime(k, a) * 2 + fold_prime(k, b));
  }
  EXPECT_EQ(eta(a * 2 + b), eta(a) * 2 + eta(b));
}

TEST(Magma, ParseAndExpand) {
  MagmaTerm t = MagmaTerm::parse("((1 2) 3)");
  EXPECT_EQ(t.str(), "((1 2) 3)");
  EXPECT_EQ(t.leaves(), 3U);
  EXPECT_EQ(commutator_expand(MagmaTerm::leaf(3), 3), W({3}));
  EXPECT_EQ(commutator_expand(MagmaTerm::parse("(1 2)"), 3), C("[1,2]-[2,1]"));
  EXPECT_EQ(commutator_expand(t, 3), C("[1,2,3]-[2,1,3]-[3,1,2]+[3,2,1]"));
  EXPECT_THROW(MagmaTerm::parse("(1 2"), ParseError);
  EXPECT_THROW(MagmaTerm::parse("(1 2) 3"), ParseError);
  EXPECT_THROW(commutator_expand(MagmaTerm::parse("(1 4)"), 3), InputError);
}

TEST(Magma, LeftCombIsEtaWithSign) {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : all_words(n, 2)) {
      MagmaTerm t = MagmaTerm::leaf(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) t = MagmaTerm::node(t, MagmaTerm::leaf(w[i]));
      ASSERT_EQ(commutator_expand(t, 2) * (n % 2 == 1 ? 1 : -1), eta(W(w, 2)));
    }
  }
}

TEST(Lemmas, EtaSquared) {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : all_words(n, n <= 5 ? 3 : 2)) {
      Chain e = eta(W(w));
      ASSERT_EQ(eta(e), e * ((n % 2 == 1 ? 1 : -1) * n)) << w.str();
    }
  }
}

TEST(Lemmas, BakerProofForm) {
  for (int l1 = 1; l1 <= 3; ++l1) {
    for (int l2 = 1; l2 <= 3; ++l2) {
      for (const Word& a : all_words(l1, 2)) {
        for (const Word& b : all_words(l2, 2)) {
          Chain ea = eta(W(a)), eb = eta(W(b));
          Chain lhs = eta(concat(W(a), eb));
          Chain rhs = (concat(ea, eb) - concat(eb, ea)) * (l2 % 2 == 0 ? 1 : -1);
          ASSERT_EQ(lhs, rhs) << a.str() << " " << b.str();
        }
      }
    }
  }
}

// Literal equality fails (w = [1,1,1], i = 2); the difference starts with a
// repeated letter in every term, so one h^l_2 move negates it.
TEST(Lemmas, RepeatedLetterFold) {
  EXPECT_NE(fold_l(2, Word{1, 1, 1}, 2), fold_l(3, Word{1, 1, 1}, 2));
  for (int n = 2; n <= 6; ++n) {
    for (const Word& w : all_words(n, 2)) {
      for (std::size_t i = 2; i + 1 <= w.size(); ++i) {
        if (w[i - 1] != w[i]) continue;
        Chain d = fold_l(i, w, 2) - fold_l(i + 1, w, 2);
        ASSERT_EQ(fold_l(2, d), -d) << w.str();
      }
    }
  }
}

TEST(Lemmas, FoldReduce) {
  for (int n = 3; n <= 6; ++n) {
    for (const Word& w : all_words(n, 2)) {
      for (std::size_t i = 3; i <= w.size(); ++i) {
        for (std::size_t j = 2; j < i; ++j) {
          ASSERT_EQ(fold_l(i, fold_l(j, w, 2)), fold_l(i, w, 2)) << w.str();
        }
      }
    }
  }
}
