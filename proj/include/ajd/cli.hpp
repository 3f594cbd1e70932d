#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ajd/chain.hpp"
#include "ajd/diagrams.hpp"
#include "ajd/dimensions.hpp"
#include "ajd/enumeration.hpp"
#include "ajd/error.hpp"
#include "ajd/lie_quotient.hpp"
#include "ajd/report.hpp"
#include "ajd/verify.hpp"
#include "ajd/word_algebra.hpp"

namespace ajd::cli {

inline constexpr int kDefaultMaxDegree = 12;

/// A parsed invocation: the verb, its flags and payloads.
struct Command {
  std::string verb;
  std::optional<int> p;
  std::optional<std::uint64_t> characteristic;
  std::optional<int> max_degree;
  Format format = Format::text;

  std::string chain;
  std::string kind = "l";
  int n = 0;
  std::string space;
  std::string swingword;
  bool check_schedules = false;
  std::string tree_file;
  std::optional<int> head;
  std::optional<int> tail;
  std::string dims_kind;
  std::string method = "formula";
  std::vector<std::string> multidegrees;
  std::string suite;
  std::uint64_t seed = 1;
  std::string variant;

  Field field() const {
    return characteristic ? Field::residues(*characteristic) : Field::rationals();
  }
  int degree_bound() const { return max_degree.value_or(kDefaultMaxDegree); }
};

inline Chain parse_chain(const std::string& text, const Command& c) {
  return Chain::parse(text, c.p.value_or(0), c.field());
}

namespace detail {

inline void guard_degree(const Chain& c, const Command& cmd) {
  for (const auto& [w, k] : c) {
    if (static_cast<int>(w.size()) > cmd.degree_bound()) {
      throw ResourceError("degree " + std::to_string(w.size()) + " exceeds --max-degree " +
                          std::to_string(cmd.degree_bound()));
    }
  }
}

inline void guard_degree(int n, const Command& cmd) {
  if (n > cmd.degree_bound()) {
    throw ResourceError("degree " + std::to_string(n) + " exceeds --max-degree " +
                        std::to_string(cmd.degree_bound()));
  }
}

inline Multidegree single_multidegree(const Command& c) {
  if (c.multidegrees.size() != 1) throw InputError("exactly one --multidegree is required");
  return Multidegree::parse(c.multidegrees.front());
}

inline nlohmann::json words_json(const std::vector<Word>& ws) {
  nlohmann::json a = nlohmann::json::array();
  for (const Word& w : ws) a.push_back(std::vector<int>(w.begin(), w.end()));
  return a;
}

inline Report chain_result(const std::string& anchor, const std::string& input,
                           const std::string& result, nlohmann::json extra = {}) {
  Report rep(anchor);
  nlohmann::json data{{"input", input}, {"result", result}};
  if (extra.is_object()) data.update(extra);
  rep.info(anchor, input, result, data);
  return rep;
}

inline Report run_eta(const Command& c) {
  Chain x = parse_chain(c.chain, c);
  guard_degree(x, c);
  return chain_result("eta", x.str(), eta(x).str());
}

inline Report run_fold(const Command& c) {
  if (c.n < 1) throw InputError("--n must be positive");
  Chain x = parse_chain(c.chain, c);
  guard_degree(x, c);
  Chain y;
  if (c.kind == "l") {
    y = fold_l(static_cast<std::size_t>(c.n), x);
  } else if (c.kind == "prime") {
    y = fold_prime(static_cast<std::size_t>(c.n), x);
  } else {
    throw InputError("--kind must be l or prime");
  }
  bool identity = false;
  for (const auto& [w, k] : x) identity = identity || c.n < 2 || static_cast<std::size_t>(c.n) > w.size();
  Report rep = chain_result("fold", x.str(), y.str(), {{"kind", c.kind}, {"n", c.n}});
  if (identity) {
    rep.info("fold", "warning", "index " + std::to_string(c.n) +
                                    " is outside 2..len(w) for some term, which is left unchanged");
  }
  return rep;
}

inline Report run_reduce(const Command& c) {
  Chain x = parse_chain(c.chain, c);
  guard_degree(x, c);
  if (c.space == "l") {
    LieCanonical r = canonical_l(x);
    return chain_result("reduce", x.str(), r.projected.str(),
                        {{"space", "l"}, {"degree", r.degree}, {"via_span", r.via_span}});
  }
  if (c.space == "prime") {
    if (x.is_zero()) return chain_result("reduce", x.str(), "0", {{"space", "prime"}});
    PrimeCanonical r = canonical_prime(x);
    return chain_result("reduce", x.str(), r.is_zero() ? "0" : r.str(),
                        {{"space", "prime"}, {"degree", r.degree}});
  }
  throw InputError("--space must be l or prime");
}

inline Report run_rho(const Command& c) {
  SwingWord sw = SwingWord::parse(c.swingword);
  int p = c.p.value_or(sw.max_letter());
  guard_degree(static_cast<int>(sw.length()), c);
  Chain r = rho(sw, p);
  Report rep = chain_result("rho", sw.str(), r.str());
  if (c.check_schedules) {
    Tally t("rho:schedule-independence", "all breakdown schedules of " + sw.str());
    for (const auto& s : all_schedules(sw)) {
      t.expect(rho_alt(sw, s, p) == r, [&] {
        std::string out;
        for (const BreakStep& b : s) {
          out += std::to_string(b.vertex) + ":" + std::to_string(b.arc) + " ";
        }
        return out;
      });
    }
    t.into(rep);
  }
  return rep;
}

inline Report run_class(const Command& c) {
  std::ifstream in(c.tree_file);
  if (!in) throw InputError("cannot read tree file '" + c.tree_file + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("tree file is not JSON: ") + e.what());
  }
  JacobiTree t = JacobiTree::from_json(j);
  guard_degree(static_cast<int>(t.legs().size()), c);
  int p = c.p.value_or(t.max_letter());
  Vertebrate v = to_vertebrate(t);
  if (c.head || c.tail) {
    if (!c.head || !c.tail) throw InputError("--head and --tail go together");
    v = make_vertebrate(t, *c.head, *c.tail);
  }
  SwingWord sw = read_swingword(v);
  PrimeCanonical k = diagram_class(v, p);
  return chain_result("class", sw.str(), k.is_zero() ? "0" : k.str(),
                      {{"swingword", sw.str()}, {"rho", rho(sw, p).str()},
                       {"swing", is_swing(sw)}, {"head", v.head}, {"tail", v.tail}});
}

inline Report run_dims(const Command& c) {
  DimensionKind kind;
  if (c.dims_kind == "witt") {
    kind = DimensionKind::witt;
  } else if (c.dims_kind == "necklace") {
    kind = DimensionKind::necklace;
  } else if (c.dims_kind == "h") {
    kind = DimensionKind::h;
  } else {
    throw InputError("dims needs witt, necklace or h");
  }
  Method method;
  if (c.method == "formula") {
    method = Method::formula;
  } else if (c.method == "rank-oracle") {
    method = Method::rank_oracle;
  } else if (c.method == "both") {
    method = Method::both;
  } else {
    throw InputError("--method must be formula, rank-oracle or both");
  }
  std::optional<Multidegree> m;
  if (!c.multidegrees.empty()) m = single_multidegree(c);
  if (!m && (c.n < 1 || !c.p)) throw InputError("dims needs --n and --p, or --multidegree");
  if (method != Method::formula) {
    guard_degree(m ? m->total() : c.n, c);
  }
  DimensionReport d = dimension(kind, m, c.n, c.p.value_or(0), method);
  Report rep("dims");
  nlohmann::json data{{"query", d.query}, {"value", d.value.str()},
                      {"method", method_name(d.method)}, {"anchor", d.anchor}};
  if (d.oracle_value) {
    data["oracle_value"] = d.oracle_value->str();
    Record& r = rep.compare(d.anchor, d.query, d.value.str(), d.oracle_value->str(), d.query);
    r.data = data;
    r.computed = d.value.str();
  } else {
    rep.info(d.anchor, d.query, d.value.str(), data);
  }
  return rep;
}

inline Report run_enumerate(const Command& c) {
  Space s;
  if (c.space == "lie") {
    s = Space::lie;
  } else if (c.space == "h") {
    s = Space::h;
  } else {
    throw InputError("--space must be lie or h");
  }
  Multidegree m = single_multidegree(c);
  guard_degree(m.total(), c);
  BasisSet b = basis(s, m);
  Report rep("enumerate");
  Record r;
  r.status = b.certified() ? Status::pass : Status::fail;
  r.anchor = s == Space::lie ? "basis:lie" : "basis:h";
  r.check = "basis of " + space_name(s) + "(" + m.str() + ")";
  r.expected = b.certificate.formula.str();
  r.computed = std::to_string(b.size());
  if (r.status == Status::fail) r.input = m.str();
  nlohmann::json cert{{"rank", b.certificate.image_rank},
                      {"words_in_multidegree", b.certificate.words},
                      {"relation_rank", b.certificate.relation_rank},
                      {"quotient_dimension", b.certificate.quotient_dimension()},
                      {"formula", b.certificate.formula.str()}};
  if (s == Space::h) cert["kernel_of_ell"] = b.certificate.kernel_rank;
  r.data = {{"multidegree", m.counts()},
            {"space", space_name(s)},
            {"dimension", b.size()},
            {"words", words_json(b.words)},
            {"certificate", cert}};
  std::string listing;
  for (const Word& w : b.words) listing += (listing.empty() ? "" : " ") + w.str();
  r.computed += listing.empty() ? "" : ": " + listing;
  rep.add(std::move(r));
  return rep;
}

inline Report run_verify(const Command& c) {
  verify::Options o;
  o.max_degree = c.max_degree.value_or(o.max_degree);
  o.p = c.p.value_or(o.p);
  o.seed = c.seed;
  return verify::run_suite(c.suite, o);
}

inline Report run_evenruns(const Command& c) {
  verify::Options o;
  o.max_degree = c.max_degree.value_or(9);
  std::vector<Multidegree> ms;
  for (const std::string& s : c.multidegrees) {
    Multidegree m = Multidegree::parse(s);
    if (m.alphabet() != 2) throw InputError("even-run multidegrees have two entries");
    guard_degree(m.total(), c);
    ms.push_back(m);
  }
  Report rep = verify::evenruns(o, ms);
  if (c.variant.empty()) return rep;
  Report filtered(rep.title());
  bool found = false;
  for (const Record& r : rep.records()) {
    bool match = r.data.is_object() && r.data.value("variant", "") == c.variant;
    found = found || match;
    if (match || r.anchor == "evenruns:baseline") filtered.add(r);
  }
  if (!found) throw InputError("unknown variant '" + c.variant + "'");
  return filtered;
}

}  // namespace detail

inline Report run(const Command& c) {
  if (c.verb == "eta") return detail::run_eta(c);
  if (c.verb == "fold") return detail::run_fold(c);
  if (c.verb == "reduce") return detail::run_reduce(c);
  if (c.verb == "rho") return detail::run_rho(c);
  if (c.verb == "class") return detail::run_class(c);
  if (c.verb == "dims") return detail::run_dims(c);
  if (c.verb == "enumerate") return detail::run_enumerate(c);
  if (c.verb == "verify") return detail::run_verify(c);
  if (c.verb == "section4") return verify::section4();
  if (c.verb == "evenruns") return detail::run_evenruns(c);
  throw InputError("unknown command '" + c.verb + "'");
}

/// Parses `args` (without the program name), runs the command and writes the
/// report. Returns the exit code: 0 success, 1 verification failure, 2 input error.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word-model computations for acyclic Jacobi diagrams", "ajd"};
  app.require_subcommand(1);
  Command c;
  std::string format = "text";
  auto globals = [&](CLI::App* s) {
    s->add_option("--p", c.p, "alphabet bound")->check(CLI::Range(1, kMaxAlphabet));
    s->add_option("--char", c.characteristic, "odd prime characteristic of the coefficients");
    s->add_option("--max-degree", c.max_degree, "degree guard (suite degree for verify)")
        ->check(CLI::PositiveNumber);
    s->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* eta_cmd = app.add_subcommand("eta", "apply eta to a chain");
  eta_cmd->add_option("--chain", c.chain, "chain text")->required();
  CLI::App* fold = app.add_subcommand("fold", "apply a fold move");
  fold->add_option("--kind", c.kind, "l or prime")->check(CLI::IsMember({"l", "prime"}));
  fold->add_option("--n", c.n, "fold index")->required();
  fold->add_option("--chain", c.chain, "chain text")->required();
  CLI::App* reduce = app.add_subcommand("reduce", "canonical form in a quotient");
  reduce->add_option("--space", c.space, "l or prime")->required()
      ->check(CLI::IsMember({"l", "prime"}));
  reduce->add_option("--chain", c.chain, "chain text")->required();
  CLI::App* rho_cmd = app.add_subcommand("rho", "expand a swing word");
  rho_cmd->add_option("--swingword", c.swingword, "e.g. \"<1 | (2 3) | 4>\"")->required();
  rho_cmd->add_flag("--check-schedules", c.check_schedules, "compare every breakdown schedule");
  CLI::App* cls = app.add_subcommand("class", "class of a tree in the tree quotient");
  cls->add_option("--tree", c.tree_file, "tree JSON file")->required();
  cls->add_option("--head", c.head, "head leg vertex");
  cls->add_option("--tail", c.tail, "tail leg vertex");
  CLI::App* dims = app.add_subcommand("dims", "dimension formulas");
  dims->add_option("kind", c.dims_kind, "witt, necklace or h")->required()
      ->check(CLI::IsMember({"witt", "necklace", "h"}));
  dims->add_option("--n", c.n, "degree");
  dims->add_option("--multidegree", c.multidegrees, "comma list, e.g. 3,3,3");
  dims->add_option("--method", c.method, "formula, rank-oracle or both");
  CLI::App* en = app.add_subcommand("enumerate", "basis representatives");
  en->add_option("--space", c.space, "lie or h")->required()->check(CLI::IsMember({"lie", "h"}));
  en->add_option("--multidegree", c.multidegrees, "comma list")->required();
  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suites;
  for (const std::string& s : verify::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  ver->add_option("--suite", c.suite, suites)->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--seed", c.seed, "seed for the random spot checks");
  CLI::App* s4 = app.add_subcommand("section4", "the itemized degree-9 table");
  CLI::App* ev = app.add_subcommand("evenruns", "even-run experiment over two letters");
  ev->add_option("--multidegree", c.multidegrees, "comma list with two entries");
  ev->add_option("--variant", c.variant, "restrict to one predicate variant");
  for (CLI::App* s : {eta_cmd, fold, reduce, rho_cmd, cls, dims, en, ver, s4, ev}) globals(s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  for (CLI::App* s : app.get_subcommands()) c.verb = s->get_name();
  c.format = format == "json" ? Format::json : Format::text;
  try {
    c.field();
    Report rep = run(c);
    emit(rep, c.format, out);
    return rep.exit_code();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ajd::cli
