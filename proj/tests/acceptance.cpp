#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ajd/cli.hpp"
#include "ajd/verify.hpp"

using namespace ajd;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }

  void require(const Report& rep) {
    for (const Record& r : rep.records()) {
      if (r.status == Status::fail) require(false, render_text(r));
    }
  }
};

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::main(args, out, err);
  return out.str() + err.str();
}

void expect_cli_value(Outcome& o, const std::vector<std::string>& args, const std::string& value) {
  int code = 0;
  std::string s = cli_output(args, code);
  std::string cmd;
  for (const std::string& a : args) cmd += (cmd.empty() ? "" : " ") + a;
  o.require(code == 0, cmd + " exited " + std::to_string(code));
  o.require(s.find("\"value\":\"" + value + "\"") != std::string::npos,
            cmd + " printed " + s);
}

void expect_eq(Outcome& o, const std::string& what, const Integer& computed, long long expected) {
  o.require(computed == Integer(expected),
            what + " = " + computed.str() + ", expected " + std::to_string(expected));
}

Outcome criterion1() {
  Outcome o;
  expect_cli_value(o, {"dims", "witt", "--n", "9", "--p", "9", "--format", "json"}, "43046640");
  expect_cli_value(o, {"dims", "h", "--n", "9", "--p", "9", "--format", "json"}, "5373540");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::vector<long long> printed{5040,   181440, 211680, 105840, 26460,  3528,   252,
                                       952560, 1058400, 264600, 31752, 1058400, 793800, 176400,
                                       52920,  196560, 77112,  1512,   105840, 3528,   2016,
                                       51408,  2268,   8064,   2016,   72,     72};
  int code = 0;
  std::string s = cli_output({"section4"}, code);
  o.require(code == 0, "section4 exited " + std::to_string(code));
  std::vector<Section4Result> rows = section4_table();
  o.require(rows.size() == printed.size(), "line count " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size() && i < printed.size(); ++i) {
    expect_eq(o, "line " + std::to_string(i + 1), rows[i].value, printed[i]);
  }
  expect_eq(o, "total", section4_total(rows), 5373540);
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto [m, v] : std::vector<std::pair<Multidegree, long long>>{
           {{2, 2, 2, 2}, 312}, {{4, 4}, 8}, {{3, 5}, 7}, {{2, 2, 4}, 51}}) {
    expect_eq(o, "witt(" + m.str() + ")", witt_multidegree(m), v);
  }
  for (auto [m, v] : std::vector<std::pair<Multidegree, long long>>{
           {{3, 3, 3}, 24}, {{2, 2, 2, 3}, 102}, {{2, 2, 5}, 9}, {{2, 3, 4}, 16}, {{4, 5}, 1}}) {
    expect_eq(o, "h(" + m.str() + ")", h_dim_multidegree(m), v);
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  Report rep;
  verify::check_rank_oracle(rep, 6, 3);
  o.require(!rep.records().empty(), "no records");
  o.require(rep);
  return o;
}

Outcome criterion5() {
  Outcome o;
  Report rep;
  verify::check_kernel(rep, 5, 3);
  o.require(!rep.records().empty(), "no records");
  o.require(rep);
  return o;
}

Outcome criterion6() {
  Outcome o;
  verify::Options opt;
  opt.max_degree = 6;
  opt.p = 3;
  o.require(verify::lemmas(opt));
  return o;
}

Outcome criterion7() {
  Outcome o;
  Report rep;
  verify::check_schedules(rep, 4, 2);
  verify::check_head_tail(rep, 7, 2);
  o.require(rep.records().size() == 2, "expected two tallies");
  o.require(rep);
  return o;
}

Outcome criterion8() {
  Outcome o;
  Report rep;
  verify::check_moves(rep, 6, 2);
  o.require(rep.records().size() == 2, "expected two tallies");
  o.require(rep);
  return o;
}

Outcome criterion9() {
  Outcome o;
  verify::Options opt;
  opt.max_degree = 6;
  opt.p = 3;
  Report rep = verify::exactness(opt);
  o.require(!rep.records().empty(), "no records");
  o.require(rep);
  return o;
}

Outcome criterion10() {
  Outcome o;
  verify::Options opt;
  opt.max_degree = 9;
  opt.p = 2;
  Report ml = verify::maxlen(opt);
  std::size_t rows = 0;
  for (const Record& r : ml.records()) {
    rows += r.anchor == "experiment:maxlen" && r.data.contains("claim_holds");
  }
  o.require(rows == 18, "maxlen rows " + std::to_string(rows));
  Report ev = verify::evenruns(opt);
  std::size_t baselines = 0, summaries = 0;
  for (const Record& r : ev.records()) {
    baselines += r.anchor == "evenruns:baseline" && r.status == Status::pass;
    summaries += r.anchor == "experiment:evenruns-summary";
  }
  o.require(baselines == 2, "baselines " + std::to_string(baselines));
  o.require(summaries == RunPredicate::variants().size(), "summaries " + std::to_string(summaries));
  o.require(ml);
  o.require(ev);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "total Witt and h dimensions at n=9, p=9", 1, criterion1},
      {2, "itemized degree-9 table and its total", 10, criterion2},
      {3, "necklace and h spot values", 1, criterion3},
      {4, "rank oracle agrees with the formulas, n<=6, p<=3", 120, criterion4},
      {5, "ker(eta) equals the lH span, n<=5, p<=3", 60, criterion5},
      {6, "lemma suite, degree<=6, p<=3", 300, criterion6},
      {7, "rho schedules and head/tail independence", 300, criterion7},
      {8, "AS and IHX compatibility, legs<=6, p=2", 300, criterion8},
      {9, "exact sequence, n<=6, p<=3", 120, criterion9},
      {10, "maxlen and even-run experiment reports", 120, criterion10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    o.require(secs < c.limit_s, "runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << t.str() << " s)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
