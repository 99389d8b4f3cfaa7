#include <doctest.h>

#include "ccalc/error.hpp"
#include "ccalc/gen.hpp"
#include "ccalc/kripke.hpp"

using namespace ccalc;
using kripke::KripkeFrame;
using kripke::Model;

namespace {

// two worlds w0 <= w1, p appears at w1
Model rising_p() {
  KripkeFrame f({"w0", "w1"}, {{0, 1}}, true);
  return Model(f, {{"p", {1}}});
}

}  // namespace

TEST_CASE("valuations must be upward closed") {
  KripkeFrame f({"w0", "w1"}, {{0, 1}}, true);
  CHECK_THROWS_AS(Model(f, {{"p", {0}}}), domain_error);  // true then lost
  Model ok(f, {{"p", {0, 1}}});
  CHECK(ok.holds("p", 0));
  CHECK(!ok.holds("q", 0));
  CHECK_THROWS_AS(Model(f, {{"p", {7}}}), domain_error);  // no such world
}

TEST_CASE("model display") {
  KripkeFrame f({"w0", "w1", "w2"}, {{0, 1}, {0, 2}}, true);
  Model m(f, {{"p", {1}}, {"q", {1, 2}}});
  CHECK(m.str() == "p: {w1}\nq: {w1,w2}\n");
}

TEST_CASE("forcing on the two-world riser") {
  Model m = rising_p();
  // p arrives late, so w0 refutes both p and ~p
  CHECK(!kripke::forces(m, 0, logic::parse_formula("p")));
  CHECK(kripke::forces(m, 1, logic::parse_formula("p")));
  CHECK(!kripke::forces(m, 0, logic::parse_formula("~p")));
  CHECK(!kripke::forces(m, 0, logic::parse_formula("p | ~p")));
  CHECK(kripke::forces(m, 0, logic::parse_formula("~~p")));
  CHECK(!kripke::forces(m, 0, logic::parse_formula("~~p -> p")));
  CHECK(kripke::forces(m, 0, logic::parse_formula("p -> p")));
  CHECK(kripke::forces(m, 0, logic::parse_formula("q -> p")));  // q nowhere
  CHECK(kripke::forces(m, 0, logic::parse_formula("N(p & ~p)")));
  CHECK(!kripke::forces(m, 0, logic::parse_formula("N(p)")));
}

TEST_CASE("persistence holds on random monotone valuations") {
  gen::Rng rng(42);
  std::vector<std::string> atoms{"p", "q"};
  for (int i = 0; i < 100; ++i) {
    Model m = gen::random_model(rng, 4, atoms);
    logic::Formula f = gen::random_formula(rng, atoms, 3, true);
    CHECK(kripke::persistent(m, f));
  }
}

TEST_CASE("frame validity") {
  KripkeFrame chain2 = KripkeFrame::chain(2);
  CHECK(kripke::valid_in_frame(chain2, logic::parse_formula("p -> p")));
  CHECK(!kripke::valid_in_frame(chain2, logic::parse_formula("p | ~p")));
  // a one-point frame is classical
  CHECK(kripke::valid_in_frame(KripkeFrame::chain(1),
                               logic::parse_formula("p | ~p")));
  // weak excluded middle holds on every chain but not on the 3-point fork
  CHECK(kripke::valid_in_frame(KripkeFrame::chain(3),
                               logic::parse_formula("~p | ~~p")));
  KripkeFrame fork({"r", "a", "b"}, {{0, 1}, {0, 2}}, true);
  CHECK(!kripke::valid_in_frame(fork, logic::parse_formula("~p | ~~p")));

  CHECK_THROWS_AS(kripke::valid_in_frame(KripkeFrame::chain(7),
                                         logic::parse_formula("p")),
                  domain_error);
  CHECK_THROWS_AS(
      kripke::valid_in_frame(chain2, logic::parse_formula("a&b&c&d&e")),
      domain_error);
}

TEST_CASE("countermodel for excluded middle is the canonical two-world riser") {
  auto cm = kripke::countermodel_search(logic::parse_formula("p | ~p"), 4);
  REQUIRE(cm.has_value());
  CHECK(cm->str() ==
        "worlds: 2\norder: w1 <= w0\nrefuted: w1\np: {w0}\n");
  CHECK(cm->model.worlds() == 2);
  CHECK(cm->world == 1);
}

TEST_CASE("countermodel sizes match the known minimal refutations") {
  auto dn = kripke::countermodel_search(logic::parse_formula("~~p -> p"), 4);
  REQUIRE(dn.has_value());
  CHECK(dn->model.worlds() == 2);

  auto wem = kripke::countermodel_search(logic::parse_formula("~p | ~~p"), 4);
  REQUIRE(wem.has_value());
  CHECK(wem->model.worlds() == 3);  // needs the fork

  CHECK(!kripke::countermodel_search(logic::parse_formula("p -> p"), 3)
             .has_value());
  CHECK(!kripke::countermodel_search(
             logic::parse_formula("(p & (p -> q)) -> q"), 3)
             .has_value());
}

TEST_CASE("countermodel search is mode independent") {
  for (const char* text : {"p | ~p", "~~p -> p", "~p | ~~p",
                           "(p -> q) | (q -> p)", "p -> p"}) {
    auto s = kripke::countermodel_search(logic::parse_formula(text), 4,
                                         ExecMode::Serial);
    auto p = kripke::countermodel_search(logic::parse_formula(text), 4,
                                         ExecMode::Parallel);
    CAPTURE(text);
    CHECK(s.has_value() == p.has_value());
    if (s && p) CHECK(s->str() == p->str());
  }
  CHECK_THROWS_AS(kripke::countermodel_search(logic::parse_formula("p"), 0),
                  domain_error);
  CHECK_THROWS_AS(kripke::countermodel_search(logic::parse_formula("p"), 6),
                  domain_error);
}

TEST_CASE("upsets enumerate ascending by mask") {
  CHECK(kripke::upsets_of(KripkeFrame::chain(2)) ==
        std::vector<std::uint32_t>{0, 2, 3});
  CHECK(kripke::upsets_of(KripkeFrame::antichain(2)) ==
        std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(kripke::upsets_of(KripkeFrame::chain(3)) ==
        std::vector<std::uint32_t>{0, 4, 6, 7});
}

TEST_CASE("frame validity matches downset-algebra validity") {
  std::vector<logic::Formula> fs;
  for (const char* text :
       {"p | ~p", "~~p -> p", "p -> p", "p -> (q -> p)", "~p | ~~p",
        "(p -> q) | (q -> p)", "N(p, q) -> ~p", "0 -> p"})
    fs.push_back(logic::parse_formula(text));
  for (const auto& p : heyting::all_posets(3))
    for (const auto& f : fs) CHECK_NOTHROW(kripke::correspondence_check(p, f));

  // chain(2) separates intuitionistic from classical on both sides
  CHECK(!kripke::correspondence_check(heyting::FinitePoset::chain(2),
                                      logic::parse_formula("p | ~p")));
  CHECK(kripke::correspondence_check(heyting::FinitePoset::chain(2),
                                     logic::parse_formula("~p | ~~p")));

  CHECK_THROWS_AS(
      kripke::correspondence_check(heyting::FinitePoset::chain(4),
                                   logic::parse_formula("p")),
      domain_error);
  CHECK_THROWS_AS(
      kripke::correspondence_check(heyting::FinitePoset::chain(2),
                                   logic::parse_formula("p & q & r")),
      domain_error);
}
