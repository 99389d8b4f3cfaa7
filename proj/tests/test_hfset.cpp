#include <doctest.h>

#include "ccalc/error.hpp"
#include "ccalc/hfset.hpp"

using namespace ccalc;
using hf::HFSet;

TEST_CASE("empty set basics") {
  HFSet e;
  CHECK(e.is_empty());
  CHECK(e.size() == 0);
  CHECK(e.rank() == 0);
  CHECK(e.str() == "{}");
  CHECK(e == HFSet::empty());
  CHECK(e == HFSet{});
}

TEST_CASE("duplicate elements collapse") {
  HFSet e;
  HFSet s{e, e, e};
  CHECK(s.size() == 1);
  CHECK(s.str() == "{{}}");
}

TEST_CASE("equality is independent of construction route") {
  HFSet e;
  HFSet one{e};
  HFSet a{e, one};
  HFSet b = HFSet{one, e};  // other insertion order
  CHECK(a == b);
  CHECK(a.str() == "{{},{{}}}");
  CHECK(a.hash() == b.hash());
}

TEST_CASE("canonical order sorts by rank, then size, then children") {
  HFSet e;                 // rank 0
  HFSet one{e};            // rank 1
  HFSet nest2{one};        // {{{}}} rank 2, size 1
  HFSet two{e, one};       // {{},{{}}} rank 2, size 2
  CHECK(hf::compare(e, one) < 0);
  CHECK(hf::compare(one, nest2) < 0);
  CHECK(hf::compare(nest2, two) < 0);  // same rank, smaller first
  CHECK(hf::compare(two, two) == 0);
  CHECK(e < one);
  CHECK(nest2 < two);
  // serialization respects the same order
  HFSet mixed{two, e, nest2};
  CHECK(mixed.str() == "{{},{{{}}},{{},{{}}}}");
}

TEST_CASE("contains and with") {
  HFSet e;
  HFSet one{e};
  CHECK(one.contains(e));
  CHECK(!e.contains(one));
  CHECK(e.with(e) == one);
  CHECK(one.with(e) == one);  // already present
  CHECK(e.with(one) == HFSet{one});
}

TEST_CASE("transitivity and ordinals") {
  HFSet e;
  HFSet one{e};
  HFSet nest2{one};  // {{{}}}
  CHECK(hf::is_transitive(e));
  CHECK(hf::is_transitive(one));
  CHECK(!hf::is_transitive(nest2));
  // transitive but one element is not transitive itself
  HFSet t{e, one, nest2};
  CHECK(hf::is_transitive(t));
  CHECK(!hf::is_ordinal(t));
  CHECK(hf::is_ordinal(e));
  CHECK(hf::is_ordinal(hf::ord_of_nat(5).set()));
}

TEST_CASE("ordinal construction and display") {
  CHECK(hf::ord_of_nat(0).set().str() == "{}");
  CHECK(hf::ord_of_nat(1).set().str() == "{{}}");
  CHECK(hf::ord_of_nat(2).set().str() == "{{},{{}}}");
  CHECK(hf::ord_of_nat(3).set().str() == "{{},{{}},{{},{{}}}}");
  CHECK(hf::Ordinal::zero().nat() == 0);
  CHECK(hf::Ordinal::zero().succ().succ().nat() == 2);
  CHECK(hf::ord_of_nat(7).succ() == hf::ord_of_nat(8));
}

TEST_CASE("ordinal cap") {
  CHECK(hf::ord_of_nat(hf::kMaxOrdinal).nat() == 64);
  CHECK_THROWS_AS(hf::ord_of_nat(65), domain_error);
  CHECK_THROWS_AS(hf::ord_of_nat(-1), domain_error);
  CHECK_THROWS_AS(hf::ord_of_nat(64).succ(), domain_error);
}

TEST_CASE("nat_of_ord inverts and rejects") {
  for (int n = 0; n <= 10; ++n)
    CHECK(hf::nat_of_ord(hf::ord_of_nat(n).set()) == n);
  HFSet e;
  HFSet nest2{HFSet{e}};
  CHECK_THROWS_AS(hf::nat_of_ord(nest2), domain_error);
}

TEST_CASE("ordinal order is membership or equality") {
  CHECK(hf::ord_leq(hf::ord_of_nat(2), hf::ord_of_nat(3)));
  CHECK(hf::ord_leq(hf::ord_of_nat(3), hf::ord_of_nat(3)));
  CHECK(!hf::ord_leq(hf::ord_of_nat(3), hf::ord_of_nat(2)));
}

TEST_CASE("kuratowski pair and its inverse") {
  HFSet a = hf::ord_of_nat(1).set();
  HFSet b = hf::ord_of_nat(2).set();
  HFSet p = hf::pair(a, b);
  CHECK(p.size() == 2);
  auto back = hf::as_pair(p);
  REQUIRE(back.has_value());
  CHECK(back->first == a);
  CHECK(back->second == b);

  HFSet d = hf::pair(a, a);  // collapses
  CHECK(d.size() == 1);
  auto dback = hf::as_pair(d);
  REQUIRE(dback.has_value());
  CHECK(dback->first == a);
  CHECK(dback->second == a);

  CHECK(!hf::as_pair(HFSet{}).has_value());
  CHECK(!hf::as_pair(a).has_value());
  // pairs of distinct values never collide
  CHECK(hf::pair(a, b) != hf::pair(b, a));
}

TEST_CASE("nest builds right-nested tuples") {
  HFSet a = hf::ord_of_nat(0).set();
  HFSet b = hf::ord_of_nat(1).set();
  HFSet c = hf::ord_of_nat(2).set();
  CHECK(hf::nest({a}) == a);
  CHECK(hf::nest({a, b}) == hf::pair(a, b));
  CHECK(hf::nest({a, b, c}) == hf::pair(a, hf::pair(b, c)));
  CHECK_THROWS_AS(hf::nest({}), domain_error);
}

TEST_CASE("subset ring laws hold exhaustively on three atoms") {
  hf::SubsetRing ring({"a", "b", "c"});
  auto elems = ring.all_elements();
  REQUIRE(elems.size() == 8);
  for (const auto& x : elems) {
    CHECK(ring_add(x, x) == ring.zero());  // a + a = 0
    CHECK(ring_mul(x, x) == x);            // idempotent
    CHECK(ring_mul(x, ring.one()) == x);
    CHECK(ring_add(x, ring.zero()) == x);
  }
  for (const auto& x : elems)
    for (const auto& y : elems) {
      CHECK(ring_mul(x, y) == ring_mul(y, x));
      CHECK(ring_add(x, y) == ring_add(y, x));
      for (const auto& z : elems)
        CHECK(ring_mul(x, ring_add(y, z)) ==
              ring_add(ring_mul(x, y), ring_mul(x, z)));
    }
}

TEST_CASE("subset ring element access and display") {
  hf::SubsetRing ring({"a", "b", "c"});
  auto ac = ring.element({"a", "c"});
  CHECK(ac.str() == "{a,c}");
  CHECK(ring.zero().str() == "{}");
  CHECK(ring.one().str() == "{a,b,c}");
  CHECK(ring.element_mask(5) == ac);
  CHECK_THROWS_AS(ring.element({"q"}), domain_error);
}

TEST_CASE("subset ring guards") {
  std::vector<std::string> big;
  for (int i = 0; i < 65; ++i) big.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(hf::SubsetRing{big}, domain_error);
  CHECK_THROWS_AS(hf::SubsetRing({"a", "a"}), domain_error);

  hf::SubsetRing r1({"a", "b"});
  hf::SubsetRing r2({"a", "c"});
  CHECK_THROWS_AS(ring_add(r1.one(), r2.one()), domain_error);
  // same universe content in a distinct ring object is fine
  hf::SubsetRing r3({"a", "b"});
  CHECK(ring_add(r1.one(), r3.zero()) == r1.one());

  std::vector<std::string> wide;
  for (int i = 0; i < 21; ++i) wide.push_back("y" + std::to_string(i));
  hf::SubsetRing w(wide);
  CHECK_THROWS_AS(w.all_elements(), domain_error);
  CHECK(w.zero().bits() == 0);  // other operations still work
}
