#include <gtest/gtest.h>

#include "ajd/diagrams.hpp"

using namespace ajd;

namespace {

Chain C(const char* text, int p = 4) { return Chain::parse(text, p); }

// Legs 0,1,2 around center 3; edge i joins leg i to the center.
JacobiTree y_tree(int a, int b, int c) {
  return JacobiTree({0, 1, 2, 3}, {{0, 3}, {1, 3}, {2, 3}}, {{3, {0, 1, 2}}},
                    {{0, a}, {1, b}, {2, c}});
}

// Legs 0,1 on center 4, legs 2,3 on center 5, internal edge 4.
JacobiTree h_tree(int a, int b, int c, int d) {
  return JacobiTree({0, 1, 2, 3, 4, 5}, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}},
                    {{4, {4, 0, 1}}, {5, {4, 2, 3}}}, {{0, a}, {1, b}, {2, c}, {3, d}});
}

PrimeCanonical cls(const JacobiTree& t, int p = 4) { return diagram_class(t, p); }

}  // namespace

TEST(Tree, Validate) {
  EXPECT_FALSE(JacobiTree::strut(1, 2).validation_error());
  EXPECT_FALSE(y_tree(1, 2, 3).validation_error());
  EXPECT_FALSE(JacobiTree::point(1).validation_error());
  JacobiTree four({0, 1, 2, 3, 4}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, {},
                  {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  EXPECT_EQ(four.validation_error(), "valence");
  JacobiTree two({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {}, {{0, 1}, {1, 2}, {2, 1}, {3, 2}});
  EXPECT_EQ(two.validation_error(), "connected");
  JacobiTree unlabeled({0, 1}, {{0, 1}}, {}, {{0, 1}});
  EXPECT_EQ(unlabeled.validation_error(), "label");
  JacobiTree bad_cyclic({0, 1, 2, 3}, {{0, 3}, {1, 3}, {2, 3}}, {{3, {0, 1, 1}}},
                        {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(bad_cyclic.validation_error(), "cyclic");
}

TEST(Tree, JsonRoundTrip) {
  JacobiTree t = h_tree(1, 2, 1, 2);
  nlohmann::json j = t.to_json();
  JacobiTree back = JacobiTree::from_json(j);
  EXPECT_EQ(back.to_json(), j);
  EXPECT_EQ(cls(back), cls(t));
  auto parsed = nlohmann::json::parse(
      R"({"vertices":[7,9],"edges":[[7,9]],"cyclic":{},"legs":{"7":1,"9":2}})");
  EXPECT_EQ(JacobiTree::from_json(parsed).legs().at(9), 2);
  EXPECT_THROW(JacobiTree::from_json(nlohmann::json::parse(R"({"vertices":[1]})")), InputError);
  EXPECT_THROW(JacobiTree::from_json(nlohmann::json::parse(
                   R"({"vertices":[0,1,2,3],"edges":[[0,1],[2,3]],"legs":{"0":1,"1":1,"2":1,"3":1}})")),
               InputError);
}

TEST(Tree, ShapeCounts) {
  std::vector<std::size_t> expected{1, 1, 1, 1, 1, 2, 2, 4};
  for (std::size_t legs = 1; legs <= 8; ++legs) {
    auto shapes = tree_shapes(legs);
    EXPECT_EQ(shapes.size(), expected[legs - 1]) << legs;
    for (const auto& t : shapes) {
      EXPECT_FALSE(t.validation_error());
      EXPECT_EQ(t.leg_order().size(), legs);
    }
  }
}

TEST(Moves, AsSwap) {
  JacobiTree y = y_tree(1, 2, 3);
  auto [s, sign] = as_swap(y, 3);
  EXPECT_EQ(sign, -1);
  EXPECT_NE(s.cyclic_at(3), y.cyclic_at(3));
  EXPECT_EQ(cls(s).image, cls(y).image * -1);
  EXPECT_FALSE(cls(y).is_zero());
  EXPECT_EQ(cls(as_swap(s, 3).first), cls(y));
  EXPECT_THROW(as_swap(y, 0), InputError);
  Chain r = rho(read_swingword(to_vertebrate(s)), 4);
  EXPECT_EQ(canonical_prime(r).image, canonical_prime(rho(read_swingword(to_vertebrate(y)), 4)).image * -1);
}

TEST(Moves, Ihx) {
  JacobiTree i = h_tree(1, 2, 3, 4);
  auto terms = ihx_expand(i, 4);
  ASSERT_EQ(terms.size(), 2U);
  TensorElement sum(4);
  for (const auto& [t, k] : terms) {
    EXPECT_EQ(k, 1);
    EXPECT_FALSE(t.validation_error());
    EXPECT_EQ(t.leg_order().size(), 4U);
    sum += cls(t).image;
  }
  EXPECT_EQ(cls(i).image, sum);
  EXPECT_THROW(ihx_expand(i, 0), InputError);
  // AS on a vertex of one IHX term flips that term only.
  auto [h, k] = terms[0];
  TensorElement flipped = cls(as_swap(h, 4).first).image + cls(terms[1].first).image;
  EXPECT_EQ(flipped, cls(i).image - cls(h).image * 2);
}

TEST(Vertebrate, HeadTailAndReading) {
  Vertebrate s = to_vertebrate(JacobiTree::strut(1, 2));
  EXPECT_EQ(s.head, 0);
  EXPECT_EQ(s.tail, 1);
  SwingWord strut = read_swingword(make_vertebrate(JacobiTree::strut(1, 2), 1, 0));
  EXPECT_EQ(strut.str(), "<1 | 2>");
  EXPECT_TRUE(strut.beads.empty());
  Vertebrate y = make_vertebrate(y_tree(1, 2, 3), 0, 1);
  SwingWord sy = read_swingword(y);
  ASSERT_EQ(sy.beads.size(), 1U);
  EXPECT_EQ(sy.beads[0], MagmaTerm::leaf(3));
  EXPECT_EQ(sy.tail, 2);
  EXPECT_EQ(sy.head, 1);
  Vertebrate ty = to_vertebrate(y_tree(1, 2, 3));
  EXPECT_EQ(read_swingword(ty).beads.size(), 1U);
  SwingWord cat = read_swingword(swing_of(Word{1, 2, 3, 4, 5}));
  EXPECT_EQ(cat.str(), "<1 | 2 | 3 | 4 | 5>");
  EXPECT_TRUE(is_swing(cat));
  EXPECT_TRUE(is_swing(strut));
}

TEST(Vertebrate, DepthTwoBeadIsNotSwing) {
  // Path tail(0) - 6 - 7 - head(1); vertex 7 carries the subtree (2 3) via 8.
  JacobiTree t({0, 1, 2, 3, 4, 6, 7, 8},
               {{0, 6}, {6, 4}, {6, 7}, {7, 1}, {7, 8}, {8, 2}, {8, 3}},
               {{6, {0, 1, 2}}, {7, {2, 4, 3}}, {8, {4, 5, 6}}},
               {{0, 1}, {1, 4}, {2, 2}, {3, 3}, {4, 1}});
  ASSERT_FALSE(t.validation_error());
  Vertebrate v = make_vertebrate(t, 1, 0);
  EXPECT_FALSE(is_swing(v));
  EXPECT_EQ(read_swingword(v).str(), "<1 | 1 | (2 3) | 4>");
}

TEST(SwingWord, ParseAndRho) {
  SwingWord s = SwingWord::parse("<1 | (2 3) | 4>");
  EXPECT_EQ(s.str(), "<1 | (2 3) | 4>");
  EXPECT_EQ(rho(s, 4), C("[1,2,3,4]-[1,3,2,4]"));
  EXPECT_EQ(rho(SwingWord::parse("<1 | 2>"), 4), C("[1,2]"));
  EXPECT_EQ(rho(SwingWord::parse("-<1 | 3 | 2>"), 4), C("-[1,3,2]"));
  EXPECT_EQ(rho(SwingWord::parse("<3>"), 4), C("[3]"));
  EXPECT_EQ(SwingWord::parse("<3>").length(), 1U);
  EXPECT_THROW(SwingWord::parse("<1 | 2"), ParseError);
  EXPECT_THROW(SwingWord::parse("<(1 2) | 2>"), ParseError);
  EXPECT_THROW(rho(s, 3), InputError);
}

TEST(SwingWord, BreakdownSchedules) {
  SwingWord flat = SwingWord::parse("<1 | 2 | 3>");
  EXPECT_EQ(rho_alt(flat, {}, 3), rho(flat, 3));
  SwingWord nested = SwingWord::parse("<1 | ((1 2) 3) | 2>");
  EXPECT_EQ(rho_alt(nested, {{0, 0}, {1, 0}}, 3), rho(nested, 3));
  EXPECT_EQ(rho_alt(nested, {{1, 1}, {0, 1}}, 3), rho(nested, 3));
  EXPECT_THROW(rho_alt(nested, {{0, 0}}, 3), InputError);
  EXPECT_THROW(rho_alt(nested, {{0, 0}, {0, 1}}, 3), InputError);
  EXPECT_THROW(rho_alt(nested, {{0, 2}, {1, 0}}, 3), InputError);
  for (const char* text : {"<2 | ((1 2) (2 1)) | 1>", "<1 | (1 2) | (2 2) | 2>",
                           "<1 | (((1 2) 1) 2) | 1>", "-<2 | (1 (2 (1 2))) | 2>"}) {
    SwingWord sw = SwingWord::parse(text);
    Chain expected = rho(sw, 2);
    for (const auto& schedule : all_schedules(sw)) ASSERT_EQ(rho_alt(sw, schedule, 2), expected);
  }
}

TEST(Classes, Examples) {
  EXPECT_EQ(cls(JacobiTree::strut(1, 2)), cls(JacobiTree::strut(2, 1)));
  EXPECT_FALSE(cls(JacobiTree::strut(1, 2)).is_zero());
  EXPECT_TRUE(cls(JacobiTree::point(2)).is_zero());
  EXPECT_THROW(cls(JacobiTree({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {}, {{0, 1}, {1, 2}, {2, 1}, {3, 2}})),
               InputError);
}

TEST(Classes, SwingRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : all_words(n, 2)) {
      SwingWord sw = read_swingword(swing_of(w));
      ASSERT_EQ(sw.sign, 1);
      ASSERT_EQ(rho(sw, 2), Chain::word(w, 2)) << w;
    }
  }
}

TEST(Classes, DegreeBookkeeping) {
  for (std::size_t legs = 2; legs <= 6; ++legs) {
    for (const JacobiTree& shape : tree_shapes(legs)) {
      for (const JacobiTree& t : labelings(shape, 2)) {
        Chain r = rho(read_swingword(to_vertebrate(t)), 2);
        for (const auto& [w, k] : r) {
          ASSERT_EQ(w.size(), legs);
          ASSERT_EQ(w.multidegree(2), t.multidegree(2));
        }
      }
    }
  }
}

TEST(Classes, MovesAndHeadTailOnSmallTrees) {
  for (std::size_t legs = 2; legs <= 5; ++legs) {
    for (const JacobiTree& shape : tree_shapes(legs)) {
      for (const JacobiTree& oriented : orientations(shape)) {
        for (const JacobiTree& t : labelings(oriented, 2)) {
          PrimeCanonical base = cls(t, 2);
          for (int v : t.trivalent_vertices()) {
            ASSERT_EQ(cls(as_swap(t, v).first, 2).image, base.image * -1);
          }
          for (int e : t.internal_edges()) {
            TensorElement sum(2);
            for (const auto& [g, k] : ihx_expand(t, e)) sum += cls(g, 2).image * k;
            ASSERT_EQ(sum, base.image);
          }
          for (int h : t.leg_order()) {
            for (int tl : t.leg_order()) {
              if (h == tl) continue;
              ASSERT_EQ(diagram_class(make_vertebrate(t, h, tl), 2), base);
            }
          }
        }
      }
    }
  }
}
