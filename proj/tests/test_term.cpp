#include <doctest.h>

#include "support.hpp"

using namespace ddc;
using testing::T;
using testing::trs;

TEST_CASE("positions follow the recursive definition") {
  using PK = PosKind;
  CHECK(positions(T("x")) ==
        std::vector<std::pair<Position, PK>>{{Position{}, PK::Variable}});
  CHECK(positions(T("f(x,x)")) == std::vector<std::pair<Position, PK>>{
                                      {Position{}, PK::Function},
                                      {Position{1}, PK::Variable},
                                      {Position{2}, PK::Variable}});
  CHECK(positions(T("f(g(x),a)")) == std::vector<std::pair<Position, PK>>{
                                         {Position{}, PK::Function},
                                         {Position{1}, PK::Function},
                                         {Position{1, 1}, PK::Variable},
                                         {Position{2}, PK::Function}});
  CHECK(function_positions(T("f(g(x),a)")) ==
        std::vector<Position>{{}, {1}, {2}});
}

TEST_CASE("subterm_at and replace_at") {
  const Term t = T("f(g(a),b)");
  CHECK(subterm_at(t, {1}) == T("g(a)"));
  CHECK(subterm_at(t, {}) == t);
  CHECK_THROWS_AS(subterm_at(t, {1, 2}), InvalidPosition);
  CHECK_THROWS_AS(subterm_at(t, {3}), InvalidPosition);

  CHECK(replace_at(T("f(a,b)"), {1}, T("c")) == T("f(c,b)"));
  CHECK(replace_at(t, {}, T("c")) == T("c"));
  CHECK_THROWS_AS(replace_at(t, {2, 1}, T("c")), InvalidPosition);
  for (const auto& [p, kind] : positions(t)) {
    CHECK(replace_at(t, p, subterm_at(t, p)) == t);
  }
}

TEST_CASE("positions: algebra") {
  const Position p{1, 2, 3};
  const Position q{1, 2};
  CHECK(q.is_prefix_of(p));
  CHECK(Position{}.is_prefix_of(p));
  CHECK_FALSE(p.is_prefix_of(q));
  CHECK(Position{1}.is_parallel_to(Position{2, 1}));
  CHECK_FALSE(Position{1}.is_parallel_to(Position{1, 1}));
  CHECK(p.minus(q) == Position{3});
  CHECK(q.concat(p.minus(q)) == p);
  CHECK_THROWS_AS(q.minus(p), PreconditionError);
  CHECK(p.concat({}) == p);
  CHECK(Position{}.concat(p) == p);
  CHECK(Position{}.to_string() == "ε");
  CHECK(p.to_string() == "1.2.3");
}

TEST_CASE("apply_subst") {
  CHECK(apply_subst(T("f(x,y)"), {{"x", T("a")}}) == T("f(a,y)"));
  CHECK(apply_subst(T("a"), {{"x", T("b")}}) == T("a"));
  CHECK(apply_subst(T("g(x)"), {{"x", T("f(x,x)")}}) == T("g(f(x,x))"));
}

TEST_CASE("compose applies the first substitution, then the second") {
  const Substitution s1{{"x", T("g(y)")}};
  const Substitution s2{{"y", T("a")}, {"z", T("b")}};
  const Substitution c = compose(s1, s2);
  const Term t = T("f(x,f(y,z))");
  CHECK(apply_subst(t, c) == apply_subst(apply_subst(t, s1), s2));
}

TEST_CASE("var_count") {
  CHECK(var_count(T("f(x,x)"), "x") == 2);
  CHECK(var_count(T("a"), "x") == 0);
  CHECK(var_count(T("g(x)"), "x") == 1);
}

TEST_CASE("variables in order of first occurrence") {
  CHECK(variables(T("f(y,g(x))")) == std::vector<std::string>{"y", "x"});
  CHECK(variables(T("a")).empty());
}

TEST_CASE("split_duplicating") {
  const Trs r = testing::fixture_trs("counterexample.trs");
  auto [rd, rnd] = split_duplicating(r);
  REQUIRE(rd.size() == 1);
  CHECK(rd.rule(0) == Rule{T("g(x)"), T("f(x,x)")});
  CHECK(rnd.size() == 4);

  auto [rd2, rnd2] = split_duplicating(testing::fixture_trs("ground.trs"));
  CHECK(rd2.empty());
  CHECK(rnd2.size() == 5);

  auto [rd3, rnd3] = split_duplicating(trs("f(x,x) -> g(x)"));
  CHECK(rd3.empty());
  CHECK(rnd3.size() == 1);
}

TEST_CASE("linearity") {
  CHECK(linearity(testing::fixture_trs("ground.trs")) == Linearity::Linear);
  CHECK(linearity(testing::fixture_trs("counterexample.trs")) == Linearity::LeftLinear);
  CHECK(linearity(trs("f(x,x) -> a")) == Linearity::Neither);
}

TEST_CASE("mgu") {
  auto mu = mgu(T("f(x,a)"), T("f(b,y)"));
  REQUIRE(mu);
  CHECK(*mu == Substitution{{"x", T("b")}, {"y", T("a")}});
  CHECK_FALSE(mgu(T("x"), T("g(x)")));
  auto id = mgu(T("f(a,a)"), T("f(a,a)"));
  REQUIRE(id);
  CHECK(id->empty());
  CHECK_FALSE(mgu(T("f(a,x)"), T("f(b,y)")));
  CHECK_FALSE(mgu(T("f(x,x)"), T("f(y,g(y))")));
}

TEST_CASE("mgu is idempotent on chained variables") {
  auto mu = mgu(T("f(x,y)"), T("f(y,g(z))"));
  REQUIRE(mu);
  const Term s = apply_subst(T("f(x,y)"), *mu);
  CHECK(s == apply_subst(T("f(y,g(z))"), *mu));
  CHECK(apply_subst(s, *mu) == s);
}

TEST_CASE("match") {
  auto s = match(T("f(x,g(y))"), T("f(a,g(b))"));
  REQUIRE(s);
  CHECK(*s == Substitution{{"x", T("a")}, {"y", T("b")}});
  CHECK_FALSE(match(T("f(x,x)"), T("f(a,b)")));
  CHECK_FALSE(match(T("g(x)"), T("x")));
}

TEST_CASE("rename_apart") {
  const Rule dup{T("g(x)"), T("f(x,x)")};
  auto [r1, r2] = rename_apart(dup, dup);
  CHECK(r1 == dup);
  CHECK(r2 == Rule{T("g(x')", "x'"), T("f(x',x')", "x'")});

  const Rule g1{T("a"), T("b")};
  const Rule g2{T("c"), T("d")};
  CHECK(rename_apart(g1, g2) == std::pair{g1, g2});

  auto [s1, s2] = rename_apart(Rule{T("f(x,y)"), T("x")}, Rule{T("g(y)"), T("y")});
  CHECK(s2.lhs.arg(0).name() != "y");
  CHECK(variant_renaming(s2.lhs, T("g(y)")));
}

TEST_CASE("variant_renaming is bijective") {
  CHECK(variant_renaming(T("g(y)"), T("g(x)")) ==
        std::optional<Substitution>{{{"y", T("x")}}});
  CHECK_FALSE(variant_renaming(T("f(x,y)"), T("f(x,x)")));
  CHECK_FALSE(variant_renaming(T("f(x,x)"), T("f(x,y)")));
  CHECK_FALSE(variant_renaming(T("g(x)"), T("g(a)")));
  CHECK(variant_renaming(T("a"), T("a")) == std::optional<Substitution>{Substitution{}});
}

TEST_CASE("Trs signature and arity clashes") {
  const Trs r = trs("g(x) -> f(x,x) a -> b");
  CHECK(r.size() == 2);
  CHECK(r.signature() ==
        Signature{{"a", 0}, {"b", 0}, {"f", 2}, {"g", 1}});
  CHECK_THROWS_AS(trs("f(x) -> f(x,x)"), ArityClash);
}

TEST_CASE("term invariants on random terms") {
  testing::TermGen gen(7);
  for (int k = 0; k < 500; ++k) {
    const Term t = gen.term(4);
    const Term s = gen.term(2);
    std::size_t sum = 1;
    for (const Term& a : t.args()) sum += positions(a).size();
    CHECK(positions(t).size() == sum);
    CHECK(t.size() == positions(t).size());
    const Position p = gen.random_position(t);
    CHECK(replace_at(t, p, subterm_at(t, p)) == t);
    CHECK(subterm_at(replace_at(t, p, s), p) == s);

    const Term u = gen.term(3);
    if (auto mu = mgu(t, u)) {
      CHECK(apply_subst(t, *mu) == apply_subst(u, *mu));
      const Term w = gen.term(3);
      CHECK(apply_subst(apply_subst(w, *mu), *mu) == apply_subst(w, *mu));
    }
  }
}

TEST_CASE("mgu is most general against a unifying instance") {
  testing::TermGen gen(11);
  int unified = 0;
  for (int k = 0; k < 2000 && unified < 200; ++k) {
    const Term s = gen.term(3);
    const Term t = gen.term(3);
    // Ground instance that may unify both.
    Substitution delta;
    for (const char* x : {"x", "y", "z"}) delta.emplace(x, gen.ground(1));
    if (apply_subst(s, delta) != apply_subst(t, delta)) continue;
    ++unified;
    auto mu = mgu(s, t);
    REQUIRE(mu);
    // δ = μδ on every variable, i.e. δ factors through μ.
    for (const char* x : {"x", "y", "z"}) {
      CHECK(apply_subst(apply_subst(Term::var(x), *mu), delta) ==
            apply_subst(Term::var(x), delta));
    }
  }
  CHECK(unified > 0);
}

TEST_CASE("split_duplicating partitions the rules") {
  const Trs r = trs("g(x) -> f(x,x) f(x,y) -> x h(x,y,z) -> f(z,z) a -> b");
  auto [rd, rnd] = split_duplicating(r);
  CHECK(rd.size() + rnd.size() == r.size());
  for (const Rule& rule : r.rules()) {
    const bool in_d = std::count(rd.rules().begin(), rd.rules().end(), rule);
    const bool in_nd = std::count(rnd.rules().begin(), rnd.rules().end(), rule);
    CHECK(in_d != in_nd);
    CHECK(in_d == is_duplicating(rule));
  }
}
