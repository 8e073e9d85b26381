#include "ddc/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace ddc {

Step Step::reversed() const {
  Step st = *this;
  std::swap(st.source, st.target);
  st.dir = dir == Direction::Forward ? Direction::Backward : Direction::Forward;
  return st;
}

std::vector<Term> Conversion::terms() const {
  std::vector<Term> out{start};
  for (const Step& st : steps) out.push_back(st.target);
  return out;
}

bool ParallelStep::pairwise_parallel() const {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      if (!patterns[i].pos.is_parallel_to(patterns[j].pos)) return false;
    }
  }
  return true;
}

std::optional<Step> step_at(const Term& s, const Rule& rule, const Position& p,
                            std::size_t rule_index) {
  const Term& redex = subterm_at(s, p);
  auto sigma = match(rule.lhs, redex);
  if (!sigma) return std::nullopt;
  Term target = replace_at(s, p, apply_subst(rule.rhs, *sigma));
  return Step{s, rule_index, rule, p, std::move(*sigma), Direction::Forward,
              std::move(target)};
}

std::optional<Step> derive_step(const Term& source, const Term& target,
                                const Rule& rule, std::size_t rule_index,
                                const Position& p, Direction dir) {
  const Term& from = dir == Direction::Forward ? source : target;
  const Term& to = dir == Direction::Forward ? target : source;
  if (!has_position(from, p) || !has_position(to, p)) return std::nullopt;
  const std::pair<Term, Term> pairs[] = {{rule.lhs, subterm_at(from, p)},
                                         {rule.rhs, subterm_at(to, p)}};
  auto sigma = match(pairs);
  if (!sigma) return std::nullopt;
  // The contexts around p must agree.
  if (!(replace_at(from, p, subterm_at(to, p)) == to)) {
    return std::nullopt;
  }
  return Step{source, rule_index, rule, p, std::move(*sigma), dir, target};
}

bool validate_step(const Step& st) {
  const Term& from = st.dir == Direction::Forward ? st.source : st.target;
  const Term& to = st.dir == Direction::Forward ? st.target : st.source;
  if (!has_position(from, st.pos)) return false;
  if (!(subterm_at(from, st.pos) == apply_subst(st.rule.lhs, st.subst))) {
    return false;
  }
  return replace_at(from, st.pos, apply_subst(st.rule.rhs, st.subst)) == to;
}

bool validate_conversion(const Conversion& c) {
  const Term* cur = &c.start;
  for (const Step& st : c.steps) {
    if (!(st.source == *cur) || !validate_step(st)) return false;
    cur = &st.target;
  }
  return true;
}

namespace {

void check_pattern_matches(const Term& s, const RedexPattern& pi) {
  if (!has_position(s, pi.pos) ||
      !(subterm_at(s, pi.pos) == apply_subst(pi.rule.lhs, pi.subst))) {
    throw PreconditionError("redex pattern at " + pi.pos.to_string() +
                            " with rule " + pi.rule.to_string() +
                            " does not match " + s.to_string());
  }
}

// The three inference rules: empty set, root pattern, and argument-wise
// decomposition with the patterns grouped by their first index.
Term parallel_rec(const Term& s, std::vector<RedexPattern> P) {
  if (P.empty()) return s;
  for (const RedexPattern& pi : P) {
    if (pi.pos.is_root()) {
      if (P.size() != 1) {
        throw PreconditionError("root pattern is not parallel to the others");
      }
      check_pattern_matches(s, pi);
      return apply_subst(pi.rule.rhs, pi.subst);
    }
  }
  if (s.is_var()) {
    throw PreconditionError("pattern below a variable in " + s.to_string());
  }
  std::vector<std::vector<RedexPattern>> per_arg(s.arity());
  for (RedexPattern& pi : P) {
    unsigned i = pi.pos[0];
    if (i == 0 || i > s.arity()) {
      throw PreconditionError("pattern position " + pi.pos.to_string() +
                              " outside the term");
    }
    pi.pos = pi.pos.minus(Position{i});
    per_arg[i - 1].push_back(std::move(pi));
  }
  std::vector<Term> args;
  args.reserve(s.arity());
  for (std::size_t i = 0; i < s.arity(); ++i) {
    args.push_back(parallel_rec(s.arg(i), std::move(per_arg[i])));
  }
  return Term::fun(s.name(), std::move(args));
}

}  // namespace

Term apply_parallel(const Term& s, const ParallelStep& P) {
  if (!P.pairwise_parallel()) {
    throw PreconditionError("redex patterns are not pairwise parallel");
  }
  return parallel_rec(s, P.patterns);
}

Conversion sequentialize(const Term& s, const ParallelStep& P) {
  if (!P.pairwise_parallel()) {
    throw PreconditionError("redex patterns are not pairwise parallel");
  }
  std::vector<const RedexPattern*> order;
  for (const RedexPattern& pi : P.patterns) order.push_back(&pi);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return a->pos < b->pos; });
  Conversion c(s);
  for (const RedexPattern* pi : order) {
    const Term& cur = c.end();
    check_pattern_matches(cur, *pi);
    Term next = replace_at(cur, pi->pos, apply_subst(pi->rule.rhs, pi->subst));
    c.steps.push_back(Step{cur, pi->rule_index, pi->rule, pi->pos, pi->subst,
                           Direction::Forward, std::move(next)});
  }
  return c;
}

ParallelStep lift_variable_step(const Term& t, const Substitution& sigma,
                                const Substitution& tau, const std::string& x,
                                const RedexPattern& pi) {
  Term sx = apply_subst(Term::var(x), sigma);
  Term tx = apply_subst(Term::var(x), tau);
  check_pattern_matches(sx, pi);
  if (!(replace_at(sx, pi.pos, apply_subst(pi.rule.rhs, pi.subst)) == tx)) {
    throw PreconditionError("σ(x) does not rewrite to τ(x) by the pattern");
  }
  auto agree = [&](const Substitution& a) {
    for (const auto& [y, u] : a) {
      if (y == x) continue;
      if (!(apply_subst(Term::var(y), sigma) == apply_subst(Term::var(y), tau))) {
        return false;
      }
    }
    return true;
  };
  if (!agree(sigma) || !agree(tau)) {
    throw PreconditionError("σ and τ differ on a variable other than " + x);
  }
  ParallelStep P;
  for (const auto& [q, kind] : positions(t)) {
    if (kind == PosKind::Variable && subterm_at(t, q).name() == x) {
      P.patterns.push_back(
          RedexPattern{q.concat(pi.pos), pi.rule_index, pi.rule, pi.subst});
    }
  }
  return P;
}

ParallelStep embed_parallel(const Term& u, const Position& q,
                            const ParallelStep& P) {
  if (!has_position(u, q)) {
    throw InvalidPosition(q.to_string() + " is not a position of " +
                          u.to_string());
  }
  ParallelStep out = P;
  for (RedexPattern& pi : out.patterns) pi.pos = q.concat(pi.pos);
  return out;
}

std::vector<Step> one_step_rewrites(const Trs& R, const Term& s) {
  std::vector<Step> out;
  auto pos = positions(s);
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (const auto& [p, kind] : pos) {
      if (kind == PosKind::Variable && !R.rule(i).lhs.is_var()) continue;
      if (auto st = step_at(s, R.rule(i), p, i)) out.push_back(std::move(*st));
    }
  }
  return out;
}

TermSet reachable_within(const Trs& R, const Term& s, std::size_t bound,
                         std::size_t node_cap) {
  TermSet seen{s};
  std::vector<Term> frontier{s};
  for (std::size_t depth = 0; depth < bound && !frontier.empty(); ++depth) {
    std::vector<Term> next;
    for (const Term& t : frontier) {
      for (Step& st : one_step_rewrites(R, t)) {
        if (seen.insert(st.target).second) {
          if (seen.size() > node_cap) {
            throw ResourceExhausted("reachability exceeded " +
                                    std::to_string(node_cap) + " terms");
          }
          next.push_back(std::move(st.target));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

bool joinable_within(const Trs& R, const Term& s, const Term& t,
                     std::size_t bound, std::size_t node_cap) {
  TermSet from_s = reachable_within(R, s, bound, node_cap);
  TermSet from_t = reachable_within(R, t, bound, node_cap);
  return std::any_of(from_t.begin(), from_t.end(),
                     [&](const Term& u) { return from_s.contains(u); });
}

}  // namespace ddc
