#include <doctest.h>

#include "support.hpp"
#include "ddc/ars.hpp"

using namespace ddc::ars;
using Pairs = std::set<std::pair<std::string, std::string>>;

namespace {

ArsInput example() { return parse_ars(testing::fixture("four_objects.ars")); }

}  // namespace

TEST_CASE("parse_ars closes the orders") {
  const ArsInput in = example();
  CHECK(in.ars.objects() == std::set<std::string>{"a", "b", "c", "d"});
  CHECK(in.ars.labels() == std::set<std::string>{"1", "1.5", "2"});
  CHECK(in.orders.strict == LabelRelation{{"2", "1"}});
  CHECK(in.orders.geq("2", "1"));
  CHECK(in.orders.geq("1.5", "1.5"));
  CHECK_FALSE(in.orders.geq("1", "1.5"));
  CHECK_FALSE(validate(in.orders, in.ars.labels()));
  CHECK_THROWS_AS(parse_ars("a 1\n"), ddc::ParseError);
  CHECK_THROWS_AS(parse_ars("[ORDER]\n"), ddc::ParseError);
}

TEST_CASE("down_set") {
  const ArsInput in = example();
  const auto& L = in.ars.labels();
  CHECK(down_set(in.orders, Which::Strict, {"2"}, L) ==
        std::set<std::string>{"1"});
  CHECK(down_set(in.orders, Which::Weak, {"1.5"}, L) ==
        std::set<std::string>{"1", "1.5"});
  CHECK(down_set(in.orders, Which::Strict, {}, L).empty());
  CHECK(down_set(in.orders, Which::Weak, {}, L).empty());
}

TEST_CASE("coarsen") {
  const ArsInput in = example();
  const FiniteArs c = coarsen(in.ars, in.orders);
  CHECK(c.relation("2") == Pairs{{"a", "b"}, {"c", "d"}, {"a", "c"}, {"b", "d"}});
  CHECK(c.relation("1.5") == Pairs{{"b", "d"}, {"a", "b"}, {"c", "d"}});
  CHECK(c.relation("1") == Pairs{{"a", "b"}, {"c", "d"}});

  const LabelOrders id = LabelOrders::with_identity_weak(in.orders.strict, in.ars.labels());
  CHECK(coarsen(in.ars, id).edges() == in.ars.edges());
}

TEST_CASE("check_eld on the example and its coarsening") {
  const ArsInput in = example();
  const EldReport r = check_eld(in.ars, in.orders);
  CHECK(r.ok);
  for (const auto& pk : r.peaks) CHECK(pk.witness);

  const FiniteArs c = coarsen(in.ars, in.orders);
  const LabelOrders plain = LabelOrders::with_identity_weak(in.orders.strict, c.labels());
  CHECK(check_eld(c, plain).ok);

  // Closing b ←1 a →2 c by b →1.5 d ←1 c is not decreasing without the
  // weak order relating 1.5 to 2.
  CHECK_FALSE(check_eld(in.ars, plain).ok);
}

TEST_CASE("check_eld witnesses follow the five segments") {
  const ArsInput in = example();
  const EldReport r = check_eld(in.ars, in.orders);
  for (const auto& pk : r.peaks) {
    REQUIRE(pk.witness);
    std::string at = pk.left.target;
    int seg = 0;
    for (const auto& st : *pk.witness) {
      CHECK(st.from == at);
      CHECK(st.segment >= seg);
      seg = st.segment;
      at = st.to;
    }
    CHECK(at == pk.right.target);
  }
}

TEST_CASE("check_eld: no peaks") {
  const FiniteArs one = FiniteArs::from_edges({{"a", "1", "b"}});
  CHECK(check_eld(one, LabelOrders{}).ok);
}

TEST_CASE("confluent_bruteforce") {
  CHECK(confluent_bruteforce(example().ars));
  CHECK_FALSE(confluent_bruteforce(
      FiniteArs::from_edges({{"a", "1", "b"}, {"a", "1", "c"}})));
  CHECK(confluent_bruteforce(FiniteArs{}));
}

TEST_CASE("order validation reports incompatibility") {
  const std::set<std::string> L{"p", "q", "r"};
  LabelOrders bad;
  bad.strict = {{"q", "r"}};
  bad.weak = {{"p", "q"}, {"p", "p"}, {"q", "q"}, {"r", "r"}};
  auto v = validate(bad, L);
  REQUIRE(v);
  CHECK(v->kind == "incompatible");

  LabelOrders cyclic = LabelOrders::closed({{"p", "q"}, {"q", "p"}}, {}, L);
  REQUIRE(validate(cyclic, L));
  CHECK(validate(cyclic, L)->kind == "strict-irreflexive");
}

TEST_CASE("FiniteArs rejects unknown objects and labels") {
  CHECK_THROWS_AS(FiniteArs({"a"}, {"1"}, {{"a", "1", "b"}}), ddc::Error);
  CHECK_THROWS_AS(FiniteArs({"a", "b"}, {"1"}, {{"a", "2", "b"}}), ddc::Error);
}

TEST_CASE("down_set is monotone") {
  const ArsInput in = example();
  const auto& L = in.ars.labels();
  const std::vector<std::set<std::string>> chain{{}, {"1"}, {"1", "1.5"}, L};
  for (Which w : {Which::Strict, Which::Weak}) {
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const auto lo = down_set(in.orders, w, chain[k - 1], L);
      const auto hi = down_set(in.orders, w, chain[k], L);
      CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
    }
  }
}
