#include <doctest.h>

#include "generators.hpp"

using namespace ddc;
using testing::TermGen;

namespace {

Term apply_sequentially(Term s, const std::vector<RedexPattern>& ps) {
  for (const auto& pi : ps) {
    s = replace_at(s, pi.pos, apply_subst(pi.rule.rhs, pi.subst));
  }
  return s;
}

}  // namespace

TEST_CASE("parallel steps: empty, singleton and split") {
  TermGen gen(101);
  for (int k = 0; k < 1000; ++k) {
    auto [s, P] = testing::random_parallel(gen);
    CHECK(apply_parallel(s, ParallelStep{}) == s);
    const Term t = apply_parallel(s, P);
    for (std::size_t i = 0; i < P.size(); ++i) {
      const RedexPattern& pi = P.patterns[i];
      auto st = step_at(s, pi.rule, pi.pos, pi.rule_index);
      REQUIRE(st);
      const Term u = apply_parallel(s, ParallelStep{{pi}});
      CHECK(st->target == u);
      ParallelStep rest = P;
      rest.patterns.erase(rest.patterns.begin() + static_cast<long>(i));
      CHECK(apply_parallel(u, rest) == t);
    }
  }
}

TEST_CASE("parallel steps: context embedding") {
  TermGen gen(102);
  for (int k = 0; k < 1000; ++k) {
    auto [s, P] = testing::random_parallel(gen);
    const Term t = apply_parallel(s, P);
    const Term ctx = gen.term(3);
    const Position q = gen.random_position(ctx);
    const Term us = replace_at(ctx, q, s);
    const ParallelStep qP = embed_parallel(us, q, P);
    CHECK(apply_parallel(us, qP) == replace_at(ctx, q, t));
  }
}

TEST_CASE("parallel steps: substitution lifting") {
  TermGen gen(103);
  int lifted = 0;
  for (int k = 0; lifted < 1000 && k < 20000; ++k) {
    const Term sx = gen.term(3);
    const auto rs = testing::redexes(testing::parallel_rules(), sx);
    if (rs.empty()) continue;
    const RedexPattern pi = rs[gen.below(rs.size())];
    const Term tx = replace_at(sx, pi.pos, apply_subst(pi.rule.rhs, pi.subst));
    Substitution sigma{{"x", sx}}, tau{{"x", tx}};
    for (const char* y : {"y", "z"}) {
      const Term v = gen.term(2);
      sigma.emplace(y, v);
      tau.emplace(y, v);
    }
    const Term t = gen.term(3);
    const ParallelStep P = lift_variable_step(t, sigma, tau, "x", pi);
    CHECK(P.size() == var_count(t, "x"));
    CHECK(apply_parallel(apply_subst(t, sigma), P) == apply_subst(t, tau));
    for (const auto& p : P.patterns) CHECK(p.rule == pi.rule);
    ++lifted;
  }
  CHECK(lifted == 1000);
}

TEST_CASE("parallel steps: sequentialization and order independence") {
  TermGen gen(104);
  for (int k = 0; k < 1000; ++k) {
    auto [s, P] = testing::random_parallel(gen);
    const Term t = apply_parallel(s, P);
    const Conversion c = sequentialize(s, P);
    CHECK(c.size() == P.size());
    CHECK(validate_conversion(c));
    CHECK(c.end() == t);
    for (const Step& st : c.steps) CHECK(st.dir == Direction::Forward);
    auto order = P.patterns;
    std::shuffle(order.begin(), order.end(), gen.rng());
    CHECK(apply_sequentially(s, order) == t);
  }
}

TEST_CASE("function peaks are instances of critical peaks") {
  TermGen gen(105);
  int found = 0;
  for (int k = 0; found < 500 && k < 50000; ++k) {
    const Trs R = testing::random_trs(gen, 5, false);
    auto pk = testing::random_function_peak(gen, R);
    if (!pk) continue;
    REQUIRE(classify(*pk) == PeakKind::Function);
    const auto cps = critical_peaks(R);
    auto m = match_function_peak(*pk, cps);
    REQUIRE(m);
    const CriticalPeak& cp = cps[m->cp_index];
    const Term& s = pk->source();
    CHECK(subterm_at(s, m->context) == apply_subst(cp.peak_source, m->tau));
    CHECK(pk->left.target == replace_at(s, m->context, apply_subst(cp.peak_left, m->tau)));
    CHECK(pk->right.target == replace_at(s, m->context, apply_subst(cp.peak_right, m->tau)));
    ++found;
  }
  CHECK(found == 500);
}

TEST_CASE("peak joins for parallel and variable peaks") {
  TermGen gen(106);
  int parallel = 0, variable = 0;
  for (int k = 0; k < 3000; ++k) {
    const Term s = gen.term(4);
    const auto steps = one_step_rewrites(testing::parallel_rules(), s);
    if (steps.size() < 2) continue;
    const LocalPeak pk{steps[gen.below(steps.size())], steps[gen.below(steps.size())]};
    const PeakKind kind = classify(pk);
    // At equal positions both orientations are root-aligned function peaks.
    if (pk.left.pos != pk.right.pos) CHECK(classify(pk.mirrored()) ==
          (kind == PeakKind::Function           ? PeakKind::MirroredFunction
           : kind == PeakKind::MirroredFunction ? PeakKind::Function
           : kind == PeakKind::Variable         ? PeakKind::MirroredVariable
           : kind == PeakKind::MirroredVariable ? PeakKind::Variable
                                                : PeakKind::Parallel));
    if (kind == PeakKind::Parallel) {
      auto [l, r] = join_parallel(pk);
      CHECK(validate_step(l));
      CHECK(validate_step(r));
      CHECK(l.target == r.target);
      ++parallel;
    } else if (kind == PeakKind::Variable && linearity(Trs({pk.right.rule})) !=
                                                 Linearity::Neither) {
      auto [st, conv] = join_variable(pk);
      CHECK(validate_step(st));
      CHECK(validate_conversion(conv));
      CHECK(st.target == conv.end());
      CHECK(st.rule == pk.right.rule);
      for (const Step& c : conv.steps) CHECK(c.rule == pk.left.rule);
      // n = |r₂|_x with x the variable of l₂ above the inner redex.
      const Position below = pk.left.pos.minus(pk.right.pos);
      Position xp;
      for (unsigned i : below.steps()) {
        if (subterm_at(pk.right.rule.lhs, xp).is_var()) break;
        xp = xp.child(i);
      }
      const std::string x = subterm_at(pk.right.rule.lhs, xp).name();
      CHECK(conv.size() == var_count(pk.right.rule.rhs, x));
      if (!is_duplicating(pk.right.rule)) CHECK(conv.size() <= 1);
      ++variable;
    }
  }
  CHECK(parallel > 50);
  CHECK(variable > 50);
}

TEST_CASE("greedy split agrees with exhaustive search") {
  std::size_t cases = 0;
  testing::for_each_split_case([&](unsigned a, unsigned b, const std::vector<unsigned>& s) {
    auto sp = greedy_split(a, b, s);
    const bool exists = testing::split_exists(a, b, s);
    if (sp.has_value() != exists) {
      FAIL_CHECK("greedy/exhaustive mismatch");
    }
    if (sp && !testing::split_valid(a, b, s, *sp)) FAIL_CHECK("invalid split");
    ++cases;
  });
  CHECK(cases == 16 * (1 + 4 + 16 + 64 + 256 + 1024 + 4096));
}

TEST_CASE("decreasing label conditions are mirror symmetric") {
  TermGen gen(107);
  auto seq = [&] {
    std::vector<unsigned> out(gen.below(3));
    for (auto& l : out) l = static_cast<unsigned>(gen.below(4));
    return out;
  };
  auto side = [&] {
    SideLabels s{seq(), std::nullopt, seq()};
    if (gen.below(2)) s.step = static_cast<unsigned>(gen.below(4));
    return s;
  };
  for (int k = 0; k < 5000; ++k) {
    const unsigned a = static_cast<unsigned>(gen.below(4));
    const unsigned b = static_cast<unsigned>(gen.below(4));
    const SideLabels l = side(), r = side();
    CHECK(eld_label_failure(a, b, l, r).has_value() ==
          eld_label_failure(b, a, r, l).has_value());
  }
}

TEST_CASE("decreasing ARSs are confluent") {
  TermGen gen(108);
  for (int k = 0; k < 300; ++k) {
    const auto [A, ord] = testing::random_ars(gen);
    REQUIRE_FALSE(ars::validate(ord, A.labels()));
    if (ars::check_eld(A, ord, 6).ok) CHECK(ars::confluent_bruteforce(A));
  }
}

TEST_CASE("coarsening an extended locally decreasing ARS makes it locally decreasing") {
  TermGen gen(109);
  int echoed = 0;
  for (int k = 0; k < 300; ++k) {
    const auto [A, ord] = testing::random_ars(gen);
    if (!ars::check_eld(A, ord, 6).ok) continue;
    const ars::FiniteArs C = ars::coarsen(A, ord);
    const auto plain = ars::LabelOrders::with_identity_weak(ord.strict, C.labels());
    CHECK(ars::check_eld(C, plain, 6).ok);
    ++echoed;
  }
  CHECK(echoed > 0);
}

TEST_CASE("prover output is accepted by the checker") {
  TermGen gen(110);
  int emitted = 0;
  for (int k = 0; k < 200; ++k) {
    const Trs R = testing::random_trs(gen, 4, true);
    ProverConfig cfg;
    cfg.join_depth = 2;
    cfg.node_cap = 20000;
    std::optional<Certificate> c;
    try {
      c = prove(R, cfg);
    } catch (const ResourceExhausted&) {
      continue;
    }
    if (!c) continue;
    ++emitted;
    const Verdict v = check(R, *c);
    CHECK_MESSAGE(v.kind == VerdictKind::Accept, v.to_string());
    for (const auto& cp : critical_peaks(R)) {
      CHECK(joinable_within(R, cp.peak_left, cp.peak_right, cfg.join_depth));
    }
  }
  CHECK(emitted > 20);
}
