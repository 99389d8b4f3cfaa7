// End-to-end acceptance gate.  Each criterion prints one line:
//   NN <name>: PASS (1.234s)
// with an optional note, or FAIL with the reason.  A criterion with a time
// limit fails when the limit is exceeded even if its checks pass.  Exit
// status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ccalc/cli.hpp"
#include "ccalc/coding.hpp"
#include "ccalc/error.hpp"
#include "ccalc/gen.hpp"
#include "ccalc/heyting.hpp"
#include "ccalc/hfset.hpp"
#include "ccalc/kripke.hpp"
#include "ccalc/machines.hpp"
#include "ccalc/subject.hpp"
#include "ccalc/truthtable.hpp"
#include "ccalc/workspace.hpp"

using namespace ccalc;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // <= 0: no limit
  std::function<bool(std::string& note)> body;
};

// every check funnels through this so a single FAIL reason survives;
// variadic so brace initializers with commas pass through
#define REQUIRE_TRUE(...)                          \
  do {                                             \
    if (!(__VA_ARGS__)) {                          \
      note = "failed: " #__VA_ARGS__;              \
      return false;                                \
    }                                              \
  } while (0)

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  if (cli::run_cli(std::move(args), out, err) != 0)
    return "<exit nonzero: " + err.str() + ">";
  return out.str();
}

bool criterion_ordinals(std::string& note) {
  REQUIRE_TRUE(cli_out({"ordinal", "0"}) == "{}\n");
  REQUIRE_TRUE(cli_out({"ordinal", "1"}) == "{{}}\n");
  REQUIRE_TRUE(cli_out({"ordinal", "2"}) == "{{},{{}}}\n");
  REQUIRE_TRUE(cli_out({"ordinal", "3"}) == "{{},{{}},{{},{{}}}}\n");
  return true;
}

bool criterion_boolean_ring(std::string& note) {
  hf::SubsetRing ring({"a", "b", "c"});
  auto elems = ring.all_elements();
  REQUIRE_TRUE(elems.size() == 8);
  for (const auto& x : elems) {
    REQUIRE_TRUE(ring_add(x, x) == ring.zero());
    REQUIRE_TRUE(ring_mul(x, x) == x);
  }
  for (const auto& x : elems)
    for (const auto& y : elems) {
      REQUIRE_TRUE(ring_mul(x, y) == ring_mul(y, x));
      REQUIRE_TRUE(ring_add(x, y) == ring_add(y, x));
    }
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        REQUIRE_TRUE(ring_mul(x, ring_add(y, z)) ==
                     ring_add(ring_mul(x, y), ring_mul(x, z)));
  return true;
}

bool criterion_heyting_laws(std::string& note) {
  for (int n = 2; n <= 6; ++n)
    REQUIRE_TRUE(heyting::HeytingAlgebra::chain(n).check_laws().ok);
  auto survey = heyting::downset_law_survey(4, ExecMode::Parallel);
  REQUIRE_TRUE(survey.posets == 242);
  REQUIRE_TRUE(survey.all_ok());
  note = "242 downset algebras, all laws hold";
  return true;
}

bool criterion_residuation_scan(std::string& note) {
  auto c = heyting::HeytingAlgebra::chain(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      // independent route: the largest x with meet(a, x) <= b
      int best = -1;
      for (int x = 0; x < 3; ++x)
        if (c.leq(c.meet(a, x), b) && (best < 0 || c.leq(best, x))) best = x;
      REQUIRE_TRUE(best == c.imp(a, b));
    }
  return true;
}

bool criterion_filters_quotients(std::string& note) {
  auto c3 = heyting::HeytingAlgebra::chain(3);
  int half = c3.index("1/2"), top = c3.index("1");

  auto f = heyting::generate_filter(c3, {half});
  REQUIRE_TRUE(f.members == std::vector<int>{half, top});
  REQUIRE_TRUE(heyting::generate_filter(c3, {}).members ==
               std::vector<int>{top});

  auto q = heyting::quotient(c3, heyting::principal_filter(c3, half));
  REQUIRE_TRUE(
      heyting::isomorphic(q.algebra, heyting::HeytingAlgebra::chain(2)));

  std::vector<heyting::HeytingAlgebra> test_algebras;
  for (int n = 2; n <= 5; ++n)
    test_algebras.push_back(heyting::HeytingAlgebra::chain(n));
  test_algebras.push_back(heyting::HeytingAlgebra::downset_algebra(
      heyting::FinitePoset::antichain(2)));
  test_algebras.push_back(heyting::HeytingAlgebra::downset_algebra(
      heyting::FinitePoset::chain(3)));
  test_algebras.push_back(heyting::HeytingAlgebra::downset_algebra(
      heyting::FinitePoset({"r", "a", "b"}, {{0, 1}, {0, 2}}, true)));
  int quotients = 0;
  for (const auto& h : test_algebras)
    for (const auto& filt : heyting::all_filters(h)) {
      auto qq = heyting::quotient(h, filt);
      REQUIRE_TRUE(qq.algebra.check_laws().ok);
      ++quotients;
    }
  note = std::to_string(quotients) + " quotients pass the law suite";
  return true;
}

bool criterion_kripke(std::string& note) {
  auto em = kripke::countermodel_search(logic::parse_formula("p | ~p"), 4);
  REQUIRE_TRUE(em && em->model.worlds() <= 2);
  auto dn = kripke::countermodel_search(logic::parse_formula("~~p -> p"), 4);
  REQUIRE_TRUE(dn && dn->model.worlds() <= 2);

  REQUIRE_TRUE(
      !kripke::countermodel_search(logic::parse_formula("p -> p"), 4));
  REQUIRE_TRUE(!kripke::countermodel_search(
      logic::parse_formula("(p & (p -> q)) -> q"), 4));

  gen::Rng rng(6021);
  std::vector<std::string> atoms{"p", "q"};
  for (int i = 0; i < 500; ++i) {
    auto m = gen::random_model(rng, 4, atoms);
    auto f = gen::random_formula(rng, atoms, 3, true);
    REQUIRE_TRUE(kripke::persistent(m, f));
  }
  note = "500 random models stay persistent";
  return true;
}

bool criterion_correspondence(std::string& note) {
  std::vector<heyting::FinitePoset> posets;
  for (int n = 1; n <= 3; ++n)
    for (auto& p : heyting::all_posets(n)) posets.push_back(p);
  REQUIRE_TRUE(posets.size() == 23);

  // the orientation-sensitive classics first, then the random sweep
  std::vector<logic::Formula> formulas;
  for (const char* text : {"~p | ~~p", "(p -> q) | (q -> p)", "p | ~p",
                           "~~p -> p"})
    formulas.push_back(logic::parse_formula(text));
  gen::Rng rng(7001);
  std::vector<std::string> atoms{"p", "q"};
  for (int i = 0; i < 200; ++i)
    formulas.push_back(gen::random_formula(rng, atoms, 3, true));

  int agreements = 0;
  for (const auto& f : formulas) {
    for (const auto& p : posets) {
      try {
        kripke::correspondence_check(p, f);
        ++agreements;
      } catch (const std::logic_error&) {
        note = "semantics disagree on " + f.str();
        return false;
      }
    }
  }
  note = std::to_string(agreements) + " frame/algebra agreements";
  return true;
}

bool criterion_joint_denial(std::string& note) {
  auto rep = logic::nor_complete_survey();
  REQUIRE_TRUE(rep.complete);
  for (unsigned i = 0; i < 16; ++i) {
    REQUIRE_TRUE(rep.entries[i].bits == i);
    REQUIRE_TRUE(rep.entries[i].verified);
  }

  gen::Rng rng(8101);
  std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 200; ++i) {
    auto f = gen::random_formula(rng, atoms, 4, true);
    REQUIRE_TRUE(logic::tables_equal_on_union(f, logic::to_n_form(f)));
  }
  return true;
}

bool criterion_currying(std::string& note) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        auto rep = heyting::curry_check(a, b, c);
        REQUIRE_TRUE(rep.uncurried_count == rep.curried_count);
        REQUIRE_TRUE(rep.bijection_ok);
      }
  REQUIRE_TRUE(heyting::curry_check(3, 3, 3).uncurried_count == 19683);
  return true;
}

bool criterion_workspace(std::string& note) {
  const char* script =
      "lex a\nlex b\nlex c\nlex d\n"
      "merge a b as e\nmerge c d as f\nmerge e f as g\n"
      "imerge g L/L as h\n"
      "triple a\ntriple c\n";
  auto r1 = workspace::run_script(script);
  auto r2 = workspace::run_script(script);
  REQUIRE_TRUE(r1.ws.str() == r2.ws.str());
  REQUIRE_TRUE(r1.triples == r2.triples);
  REQUIRE_TRUE(r1.ws.stage_nat() == 4);  // one per merge, imerge included

  // stepwise: the leaf multiset never changes once all items are in
  workspace::Workspace ws =
      workspace::Workspace().lex("a").lex("b").lex("c").lex("d");
  auto leaves = ws.leaf_names();
  ws = ws.merge("a", "b", "e");
  REQUIRE_TRUE(ws.leaf_names() == leaves);
  ws = ws.merge("c", "d", "f");
  REQUIRE_TRUE(ws.leaf_names() == leaves);
  ws = ws.merge("e", "f", "g");
  REQUIRE_TRUE(ws.leaf_names() == leaves);
  ws = ws.imerge("g", "L/L", "h");
  REQUIRE_TRUE(ws.leaf_names() == leaves);
  REQUIRE_TRUE(ws.stage_nat() == 4);

  // tampering with a foreign root is rejected and changes nothing
  auto with_z = ws.lex("z");
  std::string before = with_z.str();
  bool rejected = false;
  try {
    with_z.merge("z", "a", "bad");
  } catch (const domain_error&) {
    rejected = true;
  }
  REQUIRE_TRUE(rejected);
  REQUIRE_TRUE(with_z.str() == before);
  return true;
}

bool criterion_subject(std::string& note) {
  REQUIRE_TRUE(subject::ledger(1) == 0);
  REQUIRE_TRUE(subject::homogeneity_flag(1).verdict ==
               subject::Homogeneity::NonDeterminate);
  for (std::int64_t n = 0; n <= 100; ++n)
    REQUIRE_TRUE(subject::ledger(n) == n * n - n);

  auto p = subject::affinity({"f1", "f2", "f3"}, {"e1", "e2", "e3"});
  auto r = subject::rearticulate(p);
  REQUIRE_TRUE(r.pair_count() + 1 == p.pair_count());
  return true;
}

bool criterion_diagonalization(std::string& note) {
  gen::Rng rng(12001);
  for (int t = 0; t < 100; ++t) {
    std::size_t m = rng() % 6 + 1;
    std::vector<std::vector<std::uint64_t>> rows(m + 1);
    for (auto& row : rows) {
      row.resize(m + 1);
      for (auto& v : row) v = rng() % 1000;
    }
    auto g = logic::diag_table(rows, m);
    for (std::size_t n = 0; n <= m; ++n) REQUIRE_TRUE(g[n] != rows[n][n]);
  }

  for (const char* body : {"h & p", "~h", "N(h, q)"}) {
    logic::DiagTemplate t{logic::parse_formula(body), "h"};
    auto fp = logic::fixed_point(t);
    REQUIRE_TRUE(logic::expand_diag(fp.formula) ==
                 logic::substitute(t.body, t.hole, logic::quote_code(fp.code)));
  }
  return true;
}

bool criterion_machines(std::string& note) {
  auto base = machines::enumerate_specs(2, 2, 1000, ExecMode::Serial);
  REQUIRE_TRUE(base.total == 6561);
  REQUIRE_TRUE(base.halted_blank + base.halted_nonblank +
                   base.budget_exhausted ==
               base.total);

  auto again = machines::enumerate_specs(2, 2, 1000, ExecMode::Serial);
  REQUIRE_TRUE(again.str() == base.str());

  int saved = ccalc::max_threads();
  for (int t : {1, 2, 4}) {
    ccalc::set_threads(t);
    auto rep = machines::enumerate_specs(2, 2, 1000, ExecMode::Parallel);
    if (rep.str() != base.str()) {
      ccalc::set_threads(saved);
      note = "report differs at " + std::to_string(t) + " threads";
      return false;
    }
  }
  ccalc::set_threads(saved);

  char buf[64];
  std::snprintf(buf, sizeof buf, "nonblank fraction %.6f",
                base.nonblank_fraction());
  note = buf;
  return true;
}

#undef REQUIRE_TRUE

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "ordinal display", 1.0, criterion_ordinals},
      {2, "boolean subset ring", 1.0, criterion_boolean_ring},
      {3, "heyting law suite", 10.0, criterion_heyting_laws},
      {4, "implication by residuation scan", 0, criterion_residuation_scan},
      {5, "filters and quotients", 0, criterion_filters_quotients},
      {6, "kripke countermodels", 30.0, criterion_kripke},
      {7, "frame and algebra correspondence", 0, criterion_correspondence},
      {8, "joint denial basis", 0, criterion_joint_denial},
      {9, "currying bijection", 0, criterion_currying},
      {10, "workspace replay", 0, criterion_workspace},
      {11, "subject ledger", 0, criterion_subject},
      {12, "diagonalization", 0, criterion_diagonalization},
      {13, "machine census", 10.0, criterion_machines},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string note;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      note = "time limit " + std::to_string(c.limit_s) + "s exceeded";
    }
    if (!ok) ++failures;
    std::printf("%02d %s: %s (%.3fs)%s%s\n", c.id, c.name.c_str(),
                ok ? "PASS" : "FAIL", secs, note.empty() ? "" : " - ",
                note.c_str());
  }
  return failures;
}
