#include "ddc/peaks.hpp"

namespace ddc {

bool LocalPeak::valid() const {
  return left.dir == Direction::Forward && right.dir == Direction::Forward &&
         left.source == right.source && validate_step(left) &&
         validate_step(right);
}

std::string to_string(PeakKind k) {
  switch (k) {
    case PeakKind::Parallel:
      return "parallel";
    case PeakKind::Function:
      return "function";
    case PeakKind::Variable:
      return "variable";
    case PeakKind::MirroredFunction:
      return "mirrored-function";
    case PeakKind::MirroredVariable:
      return "mirrored-variable";
  }
  return "?";
}

PeakKind classify(const LocalPeak& pk) {
  const Position& p = pk.left.pos;
  const Position& q = pk.right.pos;
  if (p.is_parallel_to(q)) return PeakKind::Parallel;
  if (q.is_prefix_of(p)) {
    return is_function_position(pk.right.rule.lhs, p.minus(q))
               ? PeakKind::Function
               : PeakKind::Variable;
  }
  return is_function_position(pk.left.rule.lhs, q.minus(p))
             ? PeakKind::MirroredFunction
             : PeakKind::MirroredVariable;
}

std::pair<Step, Step> join_parallel(const LocalPeak& pk) {
  if (classify(pk) != PeakKind::Parallel) {
    throw PreconditionError("join_parallel needs a parallel peak, got " +
                            to_string(classify(pk)));
  }
  auto contract = [](const Term& from, const Step& like) {
    Term to = replace_at(from, like.pos, apply_subst(like.rule.rhs, like.subst));
    return Step{from,       like.rule_index,    like.rule, like.pos,
                like.subst, Direction::Forward, std::move(to)};
  };
  return {contract(pk.left.target, pk.right), contract(pk.right.target, pk.left)};
}

std::pair<Step, Conversion> join_variable(const LocalPeak& pk) {
  if (classify(pk) != PeakKind::Variable) {
    throw PreconditionError("join_variable needs a variable peak, got " +
                            to_string(classify(pk)));
  }
  const Step& inner = pk.left;
  const Step& outer = pk.right;
  const Term& l2 = outer.rule.lhs;
  if (!is_linear(l2)) {
    throw UnsupportedPeak("variable peak below non-left-linear rule " +
                          outer.rule.to_string());
  }
  // Walk down l₂ along p \ q to the variable x at q'.
  const Position rel = inner.pos.minus(outer.pos);
  std::vector<unsigned> prefix;
  const Term* cur = &l2;
  std::size_t k = 0;
  while (cur->is_fun()) {
    prefix.push_back(rel[k]);
    cur = &cur->arg(rel[k] - 1);
    ++k;
  }
  const Position var_pos(std::move(prefix));
  const std::string x = cur->name();
  const Position below = rel.minus(var_pos);

  const Substitution& sigma = outer.subst;
  Term sigma_x = apply_subst(Term::var(x), sigma);
  RedexPattern pi{below, inner.rule_index, inner.rule, inner.subst};
  Substitution tau = sigma;
  tau.insert_or_assign(
      x, replace_at(sigma_x, below, apply_subst(inner.rule.rhs, inner.subst)));

  const Term& t = inner.target;
  Term v = replace_at(t, outer.pos, apply_subst(outer.rule.rhs, tau));
  Step left_join{t,   outer.rule_index,   outer.rule, outer.pos,
                 tau, Direction::Forward, v};

  ParallelStep P = lift_variable_step(outer.rule.rhs, sigma, tau, x, pi);
  ParallelStep qP = embed_parallel(outer.target, outer.pos, P);
  Conversion right_join = sequentialize(outer.target, qP);
  return {std::move(left_join), std::move(right_join)};
}

LocalPeak CriticalPeak::as_local_peak() const {
  Step left{peak_source, inner_index,        rule_inner, pos,
            mgu,         Direction::Forward, peak_left};
  Step right{peak_source, outer_index,        rule_outer, Position::root(),
             mgu,         Direction::Forward, peak_right};
  return {std::move(left), std::move(right)};
}

std::string CriticalPeak::to_string() const {
  return peak_left.to_string() + " <- " + peak_source.to_string() + " -> " +
         peak_right.to_string();
}

std::vector<CriticalPeak> critical_peaks(const Trs& R) {
  std::vector<CriticalPeak> out;
  for (std::size_t j = 0; j < R.size(); ++j) {
    for (std::size_t i = 0; i < R.size(); ++i) {
      auto [outer, inner] = rename_apart(R.rule(j), R.rule(i));
      for (const Position& p : function_positions(outer.lhs)) {
        auto mu = mgu(inner.lhs, subterm_at(outer.lhs, p));
        if (!mu) continue;
        Term source = apply_subst(outer.lhs, *mu);
        Term left = replace_at(source, p, apply_subst(inner.rhs, *mu));
        Term right = apply_subst(outer.rhs, *mu);
        out.push_back(CriticalPeak{i, j, inner, outer, p, std::move(*mu),
                                   std::move(left), std::move(source),
                                   std::move(right)});
      }
    }
  }
  return out;
}

std::optional<FunctionPeakMatch> match_function_peak(
    const LocalPeak& pk, const std::vector<CriticalPeak>& cps) {
  if (classify(pk) != PeakKind::Function) {
    throw PreconditionError("match_function_peak needs a function peak, got " +
                            to_string(classify(pk)));
  }
  const Position& q = pk.right.pos;
  const Position rel = pk.left.pos.minus(q);

  auto try_match = [&](bool by_index) -> std::optional<FunctionPeakMatch> {
    for (std::size_t k = 0; k < cps.size(); ++k) {
      const CriticalPeak& cp = cps[k];
      if (!(cp.pos == rel)) continue;
      if (by_index && (cp.inner_index != pk.left.rule_index ||
                       cp.outer_index != pk.right.rule_index)) {
        continue;
      }
      const std::pair<Term, Term> eqs[] = {
          {cp.peak_source, subterm_at(pk.source(), q)},
          {cp.peak_left, subterm_at(pk.left.target, q)},
          {cp.peak_right, subterm_at(pk.right.target, q)}};
      if (auto tau = match(eqs)) return FunctionPeakMatch{q, std::move(*tau), k};
    }
    return std::nullopt;
  };
  if (auto m = try_match(true)) return m;
  return try_match(false);
}

}  // namespace ddc
