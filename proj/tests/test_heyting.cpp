#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "ccalc/error.hpp"
#include "ccalc/gen.hpp"
#include "ccalc/heyting.hpp"

using namespace ccalc;
using heyting::FinitePoset;
using heyting::HeytingAlgebra;

namespace {

// five-element nondistributive lattices, the classic counterexamples
FinitePoset m3() {
  return FinitePoset({"bot", "x", "y", "z", "top"},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, true);
}

FinitePoset n5() {
  return FinitePoset({"bot", "a", "b", "c", "top"},
                     {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, true);
}

bool has_law(const heyting::LawReport& rep, const std::string& name) {
  for (const auto& v : rep.violations)
    if (v.law == name) return true;
  return false;
}

}  // namespace

TEST_CASE("poset construction validates the order axioms") {
  // antisymmetry violation survives closure, so both modes reject it
  CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{0, 1}, {1, 0}}, true),
                  domain_error);
  // missing transitive edge without closure
  CHECK_THROWS_AS(FinitePoset({"a", "b", "c"}, {{0, 1}, {1, 2}}, false),
                  domain_error);
  // same pairs with closure are fine
  FinitePoset p({"a", "b", "c"}, {{0, 1}, {1, 2}}, true);
  CHECK(p.leq(0, 2));
  CHECK_THROWS_AS(FinitePoset({"a", "a"}, {}, false), domain_error);
  CHECK_THROWS_AS(FinitePoset({"a"}, {{0, 1}}, false), domain_error);
}

TEST_CASE("chain and antichain shapes") {
  auto c = FinitePoset::chain(3);
  CHECK(c.size() == 3);
  CHECK(c.leq(0, 2));
  CHECK(!c.leq(2, 0));
  CHECK(c.hasse_edges() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  auto a = FinitePoset::antichain(3);
  CHECK(a.leq(1, 1));
  CHECK(!a.leq(0, 1));
  CHECK(a.hasse_edges().empty());
  CHECK(c.index("2") == 2);
  CHECK_THROWS_AS(c.index("9"), domain_error);
}

TEST_CASE("labeled poset census matches the known counts") {
  CHECK(heyting::all_posets(1).size() == 1);
  CHECK(heyting::all_posets(2).size() == 3);
  CHECK(heyting::all_posets(3).size() == 19);
  CHECK(heyting::all_posets(4).size() == 219);
  CHECK(heyting::all_posets(5).size() == 4231);
  CHECK(heyting::all_posets(0).empty());
  CHECK_THROWS_AS(heyting::all_posets(6), domain_error);
  CHECK_THROWS_AS(heyting::all_posets(-1), domain_error);

  // pairwise distinct relations on 3 points
  std::set<std::string> seen;
  for (const auto& p : heyting::all_posets(3)) {
    std::string key;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) key += p.leq(i, j) ? '1' : '0';
    seen.insert(key);
  }
  CHECK(seen.size() == 19);
}

TEST_CASE("dot rendering is stable") {
  std::string dot = heyting::to_dot(HeytingAlgebra::chain(3).poset(), "hasse");
  CHECK(dot ==
        "digraph hasse {\n  rankdir=BT;\n  \"0\";\n  \"1/2\";\n  \"1\";\n"
        "  \"0\" -> \"1/2\";\n  \"1/2\" -> \"1\";\n}\n");
  CHECK(dot == heyting::to_dot(HeytingAlgebra::chain(3).poset(), "hasse"));
}

TEST_CASE("chain labels are rationals in lowest terms") {
  CHECK(HeytingAlgebra::chain(1).label(0) == "0");
  auto c4 = HeytingAlgebra::chain(4);
  CHECK(c4.label(0) == "0");
  CHECK(c4.label(1) == "1/3");
  CHECK(c4.label(2) == "2/3");
  CHECK(c4.label(3) == "1");
  CHECK_THROWS_AS(HeytingAlgebra::chain(0), domain_error);
}

TEST_CASE("chain closed-form implication agrees with residuation search") {
  for (int n = 2; n <= 6; ++n) {
    auto closed = HeytingAlgebra::chain(n);
    auto searched = HeytingAlgebra::from_poset(FinitePoset::chain(n));
    REQUIRE(closed.size() == searched.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(closed.imp(a, b) == searched.imp(a, b));
        CHECK(closed.meet(a, b) == searched.meet(a, b));
        CHECK(closed.join(a, b) == searched.join(a, b));
      }
  }
}

TEST_CASE("downsets of a two-point antichain form the four-element Boolean algebra") {
  auto b4 = HeytingAlgebra::downset_algebra(FinitePoset::antichain(2));
  CHECK(b4.size() == 4);
  CHECK(b4.check_laws().ok);
  for (int a = 0; a < 4; ++a) CHECK(b4.neg(b4.neg(a)) == a);
  CHECK(b4.label(0) == "{}");
  CHECK(b4.label(3) == "{0,1}");
}

TEST_CASE("chains and sampled downset algebras satisfy every law") {
  for (int n = 1; n <= 6; ++n) CHECK(HeytingAlgebra::chain(n).check_laws().ok);
  gen::Rng rng(7);
  for (int i = 0; i < 8; ++i) {
    auto p = gen::random_poset(rng, 4);
    CHECK(HeytingAlgebra::downset_algebra(p).check_laws().ok);
  }
}

TEST_CASE("a corrupted implication table is caught by name") {
  auto c = HeytingAlgebra::chain(3);
  int n = 3;
  std::vector<int> meet(n * n), join(n * n), imp(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[a * n + b] = c.meet(a, b);
      join[a * n + b] = c.join(a, b);
      imp[a * n + b] = c.imp(a, b);
    }
  imp[1 * n + 0] = 2;  // claim 1/2 -> 0 = 1, breaking modus ponens
  auto bad = HeytingAlgebra::from_tables(c.poset(), 0, 2, meet, join, imp);
  auto rep = bad.check_laws();
  CHECK(!rep.ok);
  CHECK(has_law(rep, "modus-ponens"));
  CHECK(has_law(rep, "imp-top-iff-leq"));
  CHECK(std::is_sorted(rep.violations.begin(), rep.violations.end()));
}

TEST_CASE("the nondistributive lattices fail exactly where expected") {
  auto rep_m3 = HeytingAlgebra::from_poset(m3()).check_laws();
  CHECK(!rep_m3.ok);
  CHECK(has_law(rep_m3, "distributive"));
  CHECK(has_law(rep_m3, "residuation"));

  auto rep_n5 = HeytingAlgebra::from_poset(n5()).check_laws();
  CHECK(!rep_n5.ok);
  CHECK(has_law(rep_n5, "distributive"));
  CHECK(has_law(rep_n5, "residuation"));
}

TEST_CASE("filter generation and the principal filter census") {
  auto c = HeytingAlgebra::chain(3);
  int half = c.index("1/2"), top = c.index("1");
  auto f = heyting::generate_filter(c, {half});
  CHECK(f.members == std::vector<int>{half, top});
  CHECK(heyting::is_filter(c, f));
  CHECK(heyting::generate_filter(c, {}).members == std::vector<int>{top});
  CHECK(f == heyting::principal_filter(c, half));

  auto all = heyting::all_filters(c);
  CHECK(all.size() == 3);
  for (const auto& g : all) {
    CHECK(heyting::is_filter(c, g));
    // principal: the filter equals the upward closure of its least member
    CHECK(g == heyting::principal_filter(c, g.members.front()));
  }

  // not upward closed
  CHECK(!heyting::is_filter(c, heyting::Filter{{half}}));
  // missing top
  CHECK(!heyting::is_filter(c, heyting::Filter{{}}));
}

TEST_CASE("quotients collapse filters and keep the laws") {
  auto c = HeytingAlgebra::chain(3);
  auto q = heyting::quotient(c, heyting::principal_filter(c, c.index("1/2")));
  CHECK(q.algebra.size() == 2);
  CHECK(heyting::isomorphic(q.algebra, HeytingAlgebra::chain(2)));
  CHECK(q.algebra.label(q.class_of[c.index("1/2")]) == "[1/2]");
  CHECK(q.class_of[c.index("1/2")] == q.class_of[c.index("1")]);

  // quotient by {top} changes nothing
  auto q1 = heyting::quotient(c, heyting::generate_filter(c, {}));
  CHECK(heyting::isomorphic(q1.algebra, c));

  // every quotient of the test algebras still passes the laws
  auto b4 = HeytingAlgebra::downset_algebra(FinitePoset::antichain(2));
  for (const auto* h : {&c, &b4}) {
    for (const auto& f : heyting::all_filters(*h)) {
      auto qq = heyting::quotient(*h, f);
      CHECK(qq.algebra.check_laws().ok);
    }
  }
}

TEST_CASE("ceiling and floor of element sets") {
  auto c = HeytingAlgebra::chain(4);
  CHECK(heyting::label_ceiling(c, {0, 2}) == 2);
  CHECK(heyting::label_floor(c, {1, 3}) == 1);
  CHECK(heyting::label_ceiling(c, {1}) == 1);
  CHECK_THROWS_AS(heyting::label_ceiling(c, {}), domain_error);
  CHECK_THROWS_AS(heyting::label_floor(c, {}), domain_error);
}

TEST_CASE("order isomorphism testing") {
  CHECK(heyting::isomorphic(HeytingAlgebra::chain(3),
                            HeytingAlgebra::from_poset(FinitePoset::chain(3))));
  CHECK(!heyting::isomorphic(
      HeytingAlgebra::chain(4),
      HeytingAlgebra::downset_algebra(FinitePoset::antichain(2))));
  // size 8 is the cap and still allowed
  auto b8 = HeytingAlgebra::downset_algebra(FinitePoset::antichain(3));
  CHECK(heyting::isomorphic(b8, b8));
  auto b16 = HeytingAlgebra::downset_algebra(FinitePoset::antichain(4));
  CHECK_THROWS_AS(heyting::isomorphic(b16, b16), domain_error);
}

TEST_CASE("function space enumeration") {
  heyting::FunctionSpace fs(2, 3);
  CHECK(fs.count() == 9);
  // arg 0 is the least significant digit
  CHECK(fs.table(5) == std::vector<int>{2, 1});
  for (std::uint64_t i = 0; i < fs.count(); ++i)
    CHECK(fs.index_of(fs.table(i)) == i);
  CHECK_THROWS_AS(heyting::FunctionSpace(21, 2), domain_error);
  CHECK_THROWS_AS(fs.table(9), domain_error);
}

TEST_CASE("currying bijection at desk scale") {
  auto rep = heyting::curry_check(3, 3, 3);
  CHECK(rep.uncurried_count == 19683);
  CHECK(rep.curried_count == 19683);
  CHECK(rep.bijection_ok);
  CHECK(heyting::curry_check(1, 2, 3).bijection_ok);
  CHECK(heyting::curry_check(2, 1, 2).bijection_ok);
}

TEST_CASE("algebra-valued evaluation") {
  auto c = HeytingAlgebra::chain(3);
  int half = c.index("1/2");
  std::map<std::string, int> env{{"p", half}};
  auto f = logic::parse_formula("p | ~p");
  CHECK(heyting::eval_in_algebra(c, f, env) == half);
  CHECK(heyting::eval_in_algebra(c, logic::parse_formula("~~p"), env) ==
        c.top());
  // N is the meet of negations
  CHECK(heyting::eval_in_algebra(c, logic::parse_formula("N(p, p)"), env) ==
        c.neg(half));
  CHECK_THROWS_AS(heyting::eval_in_algebra(c, logic::parse_formula("q"), env),
                  domain_error);
}

TEST_CASE("validity in an algebra") {
  auto c = HeytingAlgebra::chain(3);
  CHECK(heyting::valid_in_algebra(c, logic::parse_formula("p -> p")));
  CHECK(!heyting::valid_in_algebra(c, logic::parse_formula("p | ~p")));
  CHECK(heyting::valid_in_algebra(c, logic::parse_formula("~(p & ~p)")));
  // two-element chain is Boolean, excluded middle returns
  CHECK(heyting::valid_in_algebra(HeytingAlgebra::chain(2),
                                  logic::parse_formula("p | ~p")));
}

TEST_CASE("poset files parse with closure applied") {
  std::istringstream in(
      "# three points\nelements: a b c\na <= b\nb <= c\n\n");
  auto p = heyting::parse_poset_file(in);
  CHECK(p.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.leq(0, 2));

  std::istringstream bad1("a <= b\n");
  CHECK_THROWS_AS(heyting::parse_poset_file(bad1), parse_error);
  std::istringstream bad2("elements: a b\na <= z\n");
  CHECK_THROWS_AS(heyting::parse_poset_file(bad2), parse_error);
  std::istringstream bad3("elements: a b\na < b\n");
  CHECK_THROWS_AS(heyting::parse_poset_file(bad3), parse_error);
}

TEST_CASE("downset law survey is deterministic across execution modes") {
  auto serial = heyting::downset_law_survey(4, ExecMode::Serial);
  auto parallel = heyting::downset_law_survey(4, ExecMode::Parallel);
  CHECK(serial.str() == parallel.str());
  CHECK(serial.posets == 242);
  CHECK(serial.all_ok());
  CHECK(serial.failures.empty());
  CHECK_THROWS_AS(heyting::downset_law_survey(0, ExecMode::Serial),
                  domain_error);
  CHECK_THROWS_AS(heyting::downset_law_survey(5, ExecMode::Serial),
                  domain_error);
}
