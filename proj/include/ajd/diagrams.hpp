#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ajd/chain.hpp"
#include "ajd/error.hpp"
#include "ajd/lie_quotient.hpp"
#include "ajd/magma.hpp"
#include "ajd/word_algebra.hpp"

namespace ajd {

/// Unrooted uni-trivalent tree with labeled legs and a cyclic order of the
/// three edges at every trivalent vertex. Vertex and edge orderings are fixed
/// at construction; edges are referred to by their index.
class JacobiTree {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  using Cyclic = std::array<int, 3>;

  JacobiTree() = default;
  JacobiTree(std::vector<int> vertices, std::vector<Edge> edges, std::map<int, Cyclic> cyclic,
             std::map<int, int> legs)
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        cyclic_(std::move(cyclic)),
        legs_(std::move(legs)) {
    index_vertices();
  }

  /// Two labeled vertices joined by one edge.
  static JacobiTree strut(int a, int b) { return JacobiTree({0, 1}, {{0, 1}}, {}, {{0, a}, {1, b}}); }

  /// A single labeled vertex.
  static JacobiTree point(int a) { return JacobiTree({0}, {}, {}, {{0, a}}); }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<int, Cyclic>& cyclic() const { return cyclic_; }
  const std::map<int, int>& legs() const { return legs_; }

  bool has_vertex(int v) const { return position_.count(v) != 0; }
  bool is_leg(int v) const { return legs_.count(v) != 0; }
  bool is_trivalent(int v) const { return cyclic_.count(v) != 0; }
  int letter(int v) const { return legs_.at(v); }
  const Cyclic& cyclic_at(int v) const { return cyclic_.at(v); }

  int other(int e, int v) const {
    const Edge& x = edges_.at(static_cast<std::size_t>(e));
    return x.u == v ? x.v : x.u;
  }

  std::vector<int> incident(int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].u == v || edges_[i].v == v) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  /// Legs in stored vertex order.
  std::vector<int> leg_order() const {
    std::vector<int> out;
    for (int v : vertices_) {
      if (is_leg(v)) out.push_back(v);
    }
    return out;
  }

  std::vector<int> trivalent_vertices() const {
    std::vector<int> out;
    for (int v : vertices_) {
      if (is_trivalent(v)) out.push_back(v);
    }
    return out;
  }

  /// Edges joining two trivalent vertices.
  std::vector<int> internal_edges() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (is_trivalent(edges_[i].u) && is_trivalent(edges_[i].v)) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  /// Multiset of leg labels as letter counts over `alphabet`.
  Multidegree multidegree(int alphabet) const {
    Multidegree m = Multidegree::zero(alphabet);
    for (const auto& [v, a] : legs_) {
      if (a > alphabet) throw InputError("leg label exceeds alphabet bound");
      ++m[static_cast<std::size_t>(a - 1)];
    }
    return m;
  }

  int max_letter() const {
    int m = 0;
    for (const auto& [v, a] : legs_) m = std::max(m, a);
    return m;
  }

  /// First violated invariant, named: "vertices", "edge", "valence", "cyclic",
  /// "label", "connected", "acyclic".
  std::optional<std::string> validation_error() const {
    if (vertices_.empty()) return "vertices";
    if (position_.size() != vertices_.size()) return "vertices";
    for (const Edge& e : edges_) {
      if (!has_vertex(e.u) || !has_vertex(e.v) || e.u == e.v) return "edge";
    }
    for (int v : vertices_) {
      std::size_t deg = incident(v).size();
      bool single = vertices_.size() == 1 && deg == 0;
      if (deg != 1 && deg != 3 && !single) return "valence";
    }
    for (const auto& [v, c] : cyclic_) {
      if (!has_vertex(v)) return "cyclic";
      std::vector<int> inc = incident(v);
      std::vector<int> got(c.begin(), c.end());
      std::sort(got.begin(), got.end());
      if (inc != got) return "cyclic";
    }
    for (int v : vertices_) {
      std::size_t deg = incident(v).size();
      if (deg == 3 && !is_trivalent(v)) return "cyclic";
      if (deg != 3 && is_trivalent(v)) return "cyclic";
      if (deg <= 1) {
        auto it = legs_.find(v);
        if (it == legs_.end() || it->second < 1 || it->second > kMaxAlphabet) return "label";
      } else if (is_leg(v)) {
        return "label";
      }
    }
    for (const auto& [v, a] : legs_) {
      if (!has_vertex(v)) return "label";
    }
    std::set<int> seen{vertices_.front()};
    std::vector<int> stack{vertices_.front()};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : incident(x)) {
        int y = other(e, x);
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    if (seen.size() != vertices_.size()) return "connected";
    if (edges_.size() + 1 != vertices_.size()) return "acyclic";
    return std::nullopt;
  }

  void validate() const {
    if (auto err = validation_error()) throw InputError("invalid Jacobi tree: " + *err);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices_;
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : edges_) j["edges"].push_back({e.u, e.v});
    j["cyclic"] = nlohmann::json::object();
    for (const auto& [v, c] : cyclic_) j["cyclic"][std::to_string(v)] = c;
    j["legs"] = nlohmann::json::object();
    for (const auto& [v, a] : legs_) j["legs"][std::to_string(v)] = a;
    return j;
  }

  /// Reads {"vertices":[..], "edges":[[u,v],..], "cyclic":{v:[e1,e2,e3]}, "legs":{v:letter}}.
  static JacobiTree from_json(const nlohmann::json& j) {
    try {
      std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
      std::vector<Edge> edges;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
      }
      std::map<int, Cyclic> cyclic;
      if (j.contains("cyclic")) {
        for (const auto& [k, c] : j.at("cyclic").items()) {
          auto list = c.get<std::vector<int>>();
          if (list.size() != 3) throw InputError("cyclic order must list three edges");
          for (int e : list) {
            if (e < 0 || static_cast<std::size_t>(e) >= edges.size()) {
              throw InputError("cyclic order names unknown edge " + std::to_string(e));
            }
          }
          cyclic[std::stoi(k)] = {list[0], list[1], list[2]};
        }
      }
      std::map<int, int> legs;
      for (const auto& [k, a] : j.at("legs").items()) legs[std::stoi(k)] = a.get<int>();
      JacobiTree t(std::move(vertices), std::move(edges), std::move(cyclic), std::move(legs));
      t.validate();
      return t;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed tree JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const InputError*>(&e)) throw;
      throw InputError(std::string("malformed tree JSON: ") + e.what());
    }
  }

  JacobiTree with_cyclic(int v, Cyclic c) const {
    JacobiTree t = *this;
    t.cyclic_.at(v) = c;
    return t;
  }

  JacobiTree with_legs(std::map<int, int> legs) const {
    JacobiTree t = *this;
    t.legs_ = std::move(legs);
    return t;
  }

  JacobiTree with_edges(std::vector<Edge> edges, std::map<int, Cyclic> cyclic) const {
    JacobiTree t = *this;
    t.edges_ = std::move(edges);
    t.cyclic_ = std::move(cyclic);
    return t;
  }

 private:
  void index_vertices() {
    position_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) position_.emplace(vertices_[i], i);
  }

  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::map<int, Cyclic> cyclic_;
  std::map<int, int> legs_;
  std::map<int, std::size_t> position_;
};

namespace detail {

/// The two edges following `e` in the cyclic order `c`.
inline std::pair<int, int> after(const JacobiTree::Cyclic& c, int e) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (c[i] == e) return {c[(i + 1) % 3], c[(i + 2) % 3]};
  }
  throw InputError("edge not incident to vertex");
}

}  // namespace detail

/// Transposes the first two edges of the cyclic order at `v`.
inline std::pair<JacobiTree, int> as_swap(const JacobiTree& t, int v) {
  if (!t.is_trivalent(v)) throw InputError("AS move needs a trivalent vertex");
  JacobiTree::Cyclic c = t.cyclic_at(v);
  std::swap(c[0], c[1]);
  return {t.with_cyclic(v, c), -1};
}

/// The two trees H and X with I = H + X at internal edge `e`.
///
/// With cyclic orders read from e, I = [u:(e,a,b), v:(e,c,d)] becomes
/// [u:(e,d,a), v:(e,b,c)] + [u:(e,a,c), v:(e,b,d)].
inline std::vector<std::pair<JacobiTree, int>> ihx_expand(const JacobiTree& t, int e) {
  if (e < 0 || static_cast<std::size_t>(e) >= t.edges().size()) {
    throw InputError("unknown edge " + std::to_string(e));
  }
  const JacobiTree::Edge& ue = t.edges()[static_cast<std::size_t>(e)];
  int u = ue.u, v = ue.v;
  if (!t.is_trivalent(u) || !t.is_trivalent(v)) throw InputError("IHX edge touches a leg");
  auto [a, b] = detail::after(t.cyclic_at(u), e);
  auto [c, d] = detail::after(t.cyclic_at(v), e);
  auto rewire = [&](std::array<int, 2> at_u, std::array<int, 2> at_v) {
    std::vector<JacobiTree::Edge> edges = t.edges();
    auto attach = [&](int x, int to) {
      JacobiTree::Edge& ed = edges[static_cast<std::size_t>(x)];
      if (ed.u == u || ed.u == v) {
        ed.u = to;
      } else {
        ed.v = to;
      }
    };
    for (int x : at_u) attach(x, u);
    for (int x : at_v) attach(x, v);
    std::map<int, JacobiTree::Cyclic> cyc = t.cyclic();
    cyc[u] = {e, at_u[0], at_u[1]};
    cyc[v] = {e, at_v[0], at_v[1]};
    return t.with_edges(std::move(edges), std::move(cyc));
  };
  std::vector<std::pair<JacobiTree, int>> out;
  out.emplace_back(rewire({d, a}, {b, c}), 1);
  out.emplace_back(rewire({a, c}, {b, d}), 1);
  return out;
}

/// A tree with distinguished head and tail legs.
struct Vertebrate {
  JacobiTree tree;
  int head = 0;
  int tail = 0;

  bool degenerate() const { return head == tail; }
};

inline Vertebrate make_vertebrate(const JacobiTree& t, int head, int tail) {
  if (!t.is_leg(head) || !t.is_leg(tail)) throw InputError("head and tail must be legs");
  if (head == tail && t.vertices().size() != 1) throw InputError("head equals tail");
  return {t, head, tail};
}

/// Head = first leg in vertex order, tail = the next one.
inline Vertebrate to_vertebrate(const JacobiTree& t) {
  std::vector<int> legs = t.leg_order();
  if (legs.empty()) throw InputError("tree has no legs");
  if (legs.size() == 1) return make_vertebrate(t, legs[0], legs[0]);
  return make_vertebrate(t, legs[0], legs[1]);
}

/// Tail letter, beads along the column, head letter, and a sign.
struct SwingWord {
  int tail = 0;
  std::vector<MagmaTerm> beads;
  int head = 0;
  int sign = 1;
  /// Set for the single-vertex tree, which reads as the word [tail].
  bool degenerate = false;

  /// "<1 | (2 3) | 4>"; a negative sign is a leading '-'.
  std::string str() const {
    std::string s = sign < 0 ? "-<" : "<";
    s += std::to_string(tail);
    if (!degenerate) {
      for (const MagmaTerm& b : beads) s += " | " + b.str();
      s += " | " + std::to_string(head);
    }
    return s + ">";
  }

  static SwingWord parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    SwingWord sw;
    skip();
    if (i < text.size() && text[i] == '-') {
      sw.sign = -1;
      ++i;
      skip();
    }
    if (i >= text.size() || text[i] != '<') throw ParseError("expected '<'", i);
    ++i;
    std::vector<MagmaTerm> parts;
    while (true) {
      parts.push_back(MagmaTerm::parse_at(text, i));
      skip();
      if (i < text.size() && text[i] == '|') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '>') {
        ++i;
        break;
      }
      throw ParseError("expected '|' or '>'", i);
    }
    skip();
    if (i != text.size()) throw ParseError("trailing input after swing word", i);
    if (!parts.front().is_leaf() || !parts.back().is_leaf()) {
      throw ParseError("tail and head must be letters", 0);
    }
    sw.tail = parts.front().letter();
    sw.head = parts.back().letter();
    if (parts.size() == 1) {
      sw.degenerate = true;
      return sw;
    }
    sw.beads.assign(parts.begin() + 1, parts.end() - 1);
    return sw;
  }

  std::size_t length() const {
    if (degenerate) return 1;
    std::size_t n = 2;
    for (const MagmaTerm& b : beads) n += b.leaves();
    return n;
  }

  int max_letter() const {
    int m = std::max(tail, head);
    for (const MagmaTerm& b : beads) m = std::max(m, b.max_letter());
    return m;
  }
};

namespace detail {

/// Rooted subtree hanging from edge `e` at its endpoint `y`; the cyclic order
/// (parent, x, z) reads as node(x, z).
inline MagmaTerm bead_at(const JacobiTree& t, int e, int y) {
  if (t.is_leg(y)) return MagmaTerm::leaf(t.letter(y));
  auto [x, z] = after(t.cyclic_at(y), e);
  return MagmaTerm::node(bead_at(t, x, t.other(x, y)), bead_at(t, z, t.other(z, y)));
}

/// Vertices and edges of the path from s to t.
inline std::pair<std::vector<int>, std::vector<int>> path(const JacobiTree& g, int s, int t) {
  std::map<int, std::pair<int, int>> prev;
  prev.emplace(s, std::pair{s, -1});
  std::vector<int> queue{s};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int e : g.incident(x)) {
      int y = g.other(e, x);
      if (prev.emplace(y, std::pair{x, e}).second) queue.push_back(y);
    }
  }
  if (!prev.count(t)) throw InputError("tree is not connected");
  std::vector<int> vs{t}, es;
  while (vs.back() != s) {
    auto [x, e] = prev.at(vs.back());
    es.push_back(e);
    vs.push_back(x);
  }
  std::reverse(vs.begin(), vs.end());
  std::reverse(es.begin(), es.end());
  return {vs, es};
}

}  // namespace detail

/// Walks the column from tail to head. A column vertex whose cyclic order read
/// from the incoming edge is (in, bead, out) counts as positive.
inline SwingWord read_swingword(const Vertebrate& v) {
  const JacobiTree& t = v.tree;
  SwingWord sw;
  sw.tail = t.letter(v.tail);
  sw.head = t.letter(v.head);
  if (v.degenerate()) {
    sw.degenerate = true;
    return sw;
  }
  auto [vs, es] = detail::path(t, v.tail, v.head);
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    int x = vs[i];
    auto [p, q] = detail::after(t.cyclic_at(x), es[i - 1]);
    int bead = p;
    if (p == es[i]) {
      bead = q;
      sw.sign = -sw.sign;
    }
    sw.beads.push_back(detail::bead_at(t, bead, t.other(bead, x)));
  }
  return sw;
}

inline bool is_swing(const SwingWord& sw) {
  return std::all_of(sw.beads.begin(), sw.beads.end(),
                     [](const MagmaTerm& b) { return b.is_leaf(); });
}

inline bool is_swing(const Vertebrate& v) { return is_swing(read_swingword(v)); }

/// sign · [tail] · expand(bead_1) ··· expand(bead_k) · [head].
inline Chain rho(const SwingWord& sw, int alphabet = 0) {
  int p = alphabet ? alphabet : sw.max_letter();
  if (sw.max_letter() > p) throw InputError("swing word letter exceeds alphabet bound");
  Chain c = Chain::word(Word{sw.tail}, p);
  if (!sw.degenerate) {
    for (const MagmaTerm& b : sw.beads) c = concat(c, commutator_expand(b, p));
    c = concat(c, Chain::word(Word{sw.head}, p));
  }
  return c * sw.sign;
}

/// One step of a breakdown: break bead vertex `vertex`, leading with child `arc`.
struct BreakStep {
  std::size_t vertex = 0;
  int arc = 0;
};

/// Number of non-leaf bead vertices, which are numbered in preorder across the
/// beads from tail to head.
inline std::size_t bead_vertex_count(const SwingWord& sw) {
  std::size_t n = 0;
  for (const MagmaTerm& b : sw.beads) n += b.leaves() - 1;
  return n;
}

namespace detail {

struct Expr {
  // A leaf letter, a bracket (id, left, right), or a sequence.
  enum Kind { leaf, bracket, seq } kind = leaf;
  int letter = 0;
  std::size_t id = 0;
  std::vector<Expr> parts;
};

inline Expr build_expr(const MagmaTerm& t, std::size_t& next) {
  Expr e;
  if (t.is_leaf()) {
    e.letter = t.letter();
    return e;
  }
  e.kind = Expr::bracket;
  e.id = next++;
  e.parts.push_back(build_expr(t.left(), next));
  e.parts.push_back(build_expr(t.right(), next));
  return e;
}

/// Rewrites bracket `id` inside `e` as the two signed orderings; returns the
/// resulting terms (a single unchanged term if `id` does not occur).
inline std::vector<std::pair<int, Expr>> break_at(const Expr& e, std::size_t id, int arc) {
  if (e.kind == Expr::leaf) return {{1, e}};
  if (e.kind == Expr::bracket && e.id == id) {
    const Expr& lead = e.parts[static_cast<std::size_t>(arc)];
    const Expr& rest = e.parts[static_cast<std::size_t>(1 - arc)];
    int s = arc == 0 ? 1 : -1;
    Expr first{Expr::seq, 0, 0, {lead, rest}};
    Expr second{Expr::seq, 0, 0, {rest, lead}};
    return {{s, first}, {-s, second}};
  }
  std::vector<std::pair<int, Expr>> acc{{1, Expr{e.kind, e.letter, e.id, {}}}};
  for (const Expr& part : e.parts) {
    std::vector<std::pair<int, Expr>> next;
    for (const auto& [s, partial] : acc) {
      for (const auto& [t, piece] : break_at(part, id, arc)) {
        Expr grown = partial;
        grown.parts.push_back(piece);
        next.emplace_back(s * t, std::move(grown));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

inline void flatten(const Expr& e, Word& w) {
  if (e.kind == Expr::leaf) {
    w.push_back(e.letter);
    return;
  }
  if (e.kind == Expr::bracket) throw std::logic_error("unbroken bracket");
  for (const Expr& part : e.parts) flatten(part, w);
}

}  // namespace detail

/// Breaks the bead vertices in the scheduled order by multilinear rewriting.
inline Chain rho_alt(const SwingWord& sw, const std::vector<BreakStep>& schedule,
                     int alphabet = 0) {
  int p = alphabet ? alphabet : sw.max_letter();
  std::size_t count = bead_vertex_count(sw);
  std::vector<bool> used(count, false);
  if (schedule.size() != count) throw InputError("schedule must cover every bead vertex once");
  for (const BreakStep& s : schedule) {
    if (s.vertex >= count || used[s.vertex]) throw InputError("malformed breakdown schedule");
    if (s.arc != 0 && s.arc != 1) throw InputError("breakdown arc must be 0 or 1");
    used[s.vertex] = true;
  }
  Chain out(p);
  if (sw.degenerate) return Chain::word(Word{sw.tail}, p) * sw.sign;
  detail::Expr root{detail::Expr::seq, 0, 0, {}};
  root.parts.push_back(detail::Expr{detail::Expr::leaf, sw.tail, 0, {}});
  std::size_t next = 0;
  for (const MagmaTerm& b : sw.beads) root.parts.push_back(detail::build_expr(b, next));
  root.parts.push_back(detail::Expr{detail::Expr::leaf, sw.head, 0, {}});
  std::vector<std::pair<int, detail::Expr>> terms{{sw.sign, root}};
  for (const BreakStep& s : schedule) {
    std::vector<std::pair<int, detail::Expr>> next_terms;
    for (const auto& [k, e] : terms) {
      for (auto& [t, piece] : detail::break_at(e, s.vertex, s.arc)) {
        next_terms.emplace_back(k * t, std::move(piece));
      }
    }
    terms = std::move(next_terms);
  }
  for (const auto& [k, e] : terms) {
    Word w;
    detail::flatten(e, w);
    out.add(w, k);
  }
  return out;
}

/// Class in the tree quotient of the vertebrate reading.
inline PrimeCanonical diagram_class(const Vertebrate& v, int alphabet = 0) {
  int p = alphabet ? alphabet : v.tree.max_letter();
  return canonical_prime(rho(read_swingword(v), p));
}

inline PrimeCanonical diagram_class(const JacobiTree& t, int alphabet = 0) {
  t.validate();
  return diagram_class(to_vertebrate(t), alphabet);
}

/// Caterpillar vertebrate of a word: tail a_1, pendant legs a_2..a_{n-1} in
/// column order, head a_n, oriented so that it reads back with sign +1.
inline Vertebrate swing_of(const Word& w) {
  if (w.empty()) throw InputError("empty word has no swing");
  if (w.size() == 1) {
    JacobiTree t = JacobiTree::point(w[0]);
    return {t, 0, 0};
  }
  std::size_t n = w.size();
  // Legs 0..n-1 carry a_1..a_n; column vertices are n..2n-3.
  std::vector<int> vertices;
  for (std::size_t i = 0; i < 2 * n - 2; ++i) vertices.push_back(static_cast<int>(i));
  std::vector<JacobiTree::Edge> edges;
  std::map<int, JacobiTree::Cyclic> cyclic;
  std::map<int, int> legs;
  for (std::size_t i = 0; i < n; ++i) legs[static_cast<int>(i)] = w[i];
  if (n == 2) {
    edges.push_back({0, 1});
  } else {
    int prev = 0;
    int in_edge = -1;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      int x = static_cast<int>(n + k - 1);
      edges.push_back({prev, x});
      in_edge = static_cast<int>(edges.size() - 1);
      edges.push_back({x, static_cast<int>(k)});
      int bead = static_cast<int>(edges.size() - 1);
      cyclic[x] = {in_edge, bead, -1};
      prev = x;
    }
    edges.push_back({prev, static_cast<int>(n - 1)});
    for (std::size_t k = 1; k + 1 < n; ++k) {
      int x = static_cast<int>(n + k - 1);
      int out = k + 2 < n ? static_cast<int>(2 * k) : static_cast<int>(edges.size() - 1);
      cyclic[x][2] = out;
    }
  }
  JacobiTree t(vertices, edges, cyclic, legs);
  return {t, static_cast<int>(n - 1), 0};
}

namespace detail {

inline std::string rooted_code(const JacobiTree& t, int v, int from) {
  std::vector<std::string> kids;
  for (int e : t.incident(v)) {
    int y = t.other(e, v);
    if (y != from) kids.push_back(rooted_code(t, y, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string shape_code(const JacobiTree& t) {
  std::string best;
  for (int leg : t.leg_order()) {
    std::string c = rooted_code(t, leg, -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

/// Subdivides edge `e` and hangs a new leg from the new vertex.
inline JacobiTree grow(const JacobiTree& t, int e) {
  std::vector<int> vertices = t.vertices();
  std::vector<JacobiTree::Edge> edges = t.edges();
  std::map<int, JacobiTree::Cyclic> cyclic = t.cyclic();
  std::map<int, int> legs = t.legs();
  int m = static_cast<int>(vertices.size());
  int leaf = m + 1;
  vertices.push_back(m);
  vertices.push_back(leaf);
  JacobiTree::Edge old = edges[static_cast<std::size_t>(e)];
  edges[static_cast<std::size_t>(e)] = {old.u, m};
  edges.push_back({m, old.v});
  int e2 = static_cast<int>(edges.size() - 1);
  edges.push_back({m, leaf});
  int e3 = static_cast<int>(edges.size() - 1);
  if (cyclic.count(old.v)) {
    for (int& x : cyclic[old.v]) {
      if (x == e) x = e2;
    }
  }
  cyclic[m] = {e, e3, e2};
  legs[leaf] = 1;
  return JacobiTree(vertices, edges, cyclic, legs);
}

}  // namespace detail

/// All uni-trivalent tree shapes with `legs` legs up to isomorphism, each with
/// a fixed orientation; legs are labeled 1.
inline std::vector<JacobiTree> tree_shapes(std::size_t legs) {
  if (legs == 0) return {};
  if (legs == 1) return {JacobiTree::point(1)};
  std::vector<JacobiTree> cur{JacobiTree::strut(1, 1)};
  for (std::size_t k = 2; k < legs; ++k) {
    std::vector<JacobiTree> next;
    std::set<std::string> seen;
    for (const JacobiTree& t : cur) {
      for (std::size_t e = 0; e < t.edges().size(); ++e) {
        JacobiTree g = detail::grow(t, static_cast<int>(e));
        if (seen.insert(detail::shape_code(g)).second) next.push_back(std::move(g));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Every labeling of the legs of `shape` by letters 1..p, in lexicographic
/// order of the labels along the stored leg order.
inline std::vector<JacobiTree> labelings(const JacobiTree& shape, int p) {
  std::vector<int> legs = shape.leg_order();
  std::vector<JacobiTree> out;
  for (const Word& w : all_words(static_cast<int>(legs.size()), p)) {
    std::map<int, int> labels;
    for (std::size_t i = 0; i < legs.size(); ++i) labels[legs[i]] = w[i];
    out.push_back(shape.with_legs(std::move(labels)));
  }
  return out;
}

/// Every orientation of `t`: each trivalent vertex in either cyclic class.
inline std::vector<JacobiTree> orientations(const JacobiTree& t) {
  std::vector<int> tri = t.trivalent_vertices();
  std::vector<JacobiTree> out;
  for (unsigned long mask = 0; mask < (1UL << tri.size()); ++mask) {
    JacobiTree g = t;
    for (std::size_t i = 0; i < tri.size(); ++i) {
      if (mask & (1UL << i)) g = as_swap(g, tri[i]).first;
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// All breakdown schedules: every order of the bead vertices and every arc.
inline std::vector<std::vector<BreakStep>> all_schedules(const SwingWord& sw) {
  std::size_t n = bead_vertex_count(sw);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::vector<BreakStep>> out;
  do {
    for (unsigned long arcs = 0; arcs < (1UL << n); ++arcs) {
      std::vector<BreakStep> s;
      for (std::size_t i = 0; i < n; ++i) {
        s.push_back({order[i], static_cast<int>((arcs >> i) & 1UL)});
      }
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace ajd
