#pragma once

// Annotated rewrite steps, conversions, the annotated parallel rewrite
// relation and bounded reachability.

#include <cstddef>
#include <optional>
#include <vector>

#include "ddc/term.hpp"

namespace ddc {

enum class Direction { Forward, Backward };

/// One rewrite step with full annotation. For a forward step
/// source|pos = lhs·subst and target = source[rhs·subst]_pos; a backward
/// step is the same with source and target swapped.
///
/// `rule_index` is the 0-based index of `rule` in the system it came from;
/// labels are attached through it.
struct Step {
  Term source;
  std::size_t rule_index = 0;
  Rule rule;
  Position pos;
  Substitution subst;
  Direction dir = Direction::Forward;
  Term target;

  /// The same step read in the opposite direction.
  Step reversed() const;
};

struct Conversion {
  Term start;
  std::vector<Step> steps;

  explicit Conversion(Term s) : start(std::move(s)) {}
  Conversion(Term s, std::vector<Step> st)
      : start(std::move(s)), steps(std::move(st)) {}

  const Term& end() const { return steps.empty() ? start : steps.back().target; }
  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  /// start followed by every step target.
  std::vector<Term> terms() const;
};

/// ⟨p, l → r, σ⟩. Matches t when t|p = lσ.
struct RedexPattern {
  Position pos;
  std::size_t rule_index = 0;
  Rule rule;
  Substitution subst;
};

/// A set of pairwise parallel redex patterns.
struct ParallelStep {
  std::vector<RedexPattern> patterns;

  bool empty() const { return patterns.empty(); }
  std::size_t size() const { return patterns.size(); }
  bool pairwise_parallel() const;
};

/// Forward step contracting the redex at `p` with `rule`, if `s|p` is an
/// instance of the left-hand side. Throws InvalidPosition.
std::optional<Step> step_at(const Term& s, const Rule& rule, const Position& p,
                            std::size_t rule_index = 0);

/// Reconstructs a step from its endpoints, deriving the substitution by
/// matching lhs/rhs against the subterms at `p` of both endpoints. Returns
/// nullopt if no valid step exists. Never throws.
std::optional<Step> derive_step(const Term& source, const Term& target,
                                const Rule& rule, std::size_t rule_index,
                                const Position& p, Direction dir);

bool validate_step(const Step& st);
bool validate_conversion(const Conversion& c);

/// s ⇛_P t by the inference rules of the parallel rewrite relation. Throws
/// PreconditionError for non-matching or non-parallel patterns.
Term apply_parallel(const Term& s, const ParallelStep& P);

/// s →^{π₁} ⋯ →^{πₙ} t, patterns in position-lexicographic order.
Conversion sequentialize(const Term& s, const ParallelStep& P);

/// Given σ(x) →^π τ(x) with σ, τ equal elsewhere, the parallel step
/// tσ ⇛_P tτ contracting π below every occurrence of x in t.
ParallelStep lift_variable_step(const Term& t, const Substitution& sigma,
                                const Substitution& tau, const std::string& x,
                                const RedexPattern& pi);

/// qP: every pattern position prefixed with q. Throws InvalidPosition if
/// q ∉ Pos(u).
ParallelStep embed_parallel(const Term& u, const Position& q,
                            const ParallelStep& P);

/// Every forward step from `s` with any rule at any position, ordered by
/// rule index then position.
std::vector<Step> one_step_rewrites(const Trs& R, const Term& s);

constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// { t | s →ⁱ t, i ⩽ bound }. Throws ResourceExhausted once more than
/// `node_cap` distinct terms are discovered.
TermSet reachable_within(const Trs& R, const Term& s, std::size_t bound,
                         std::size_t node_cap = kDefaultNodeCap);

bool joinable_within(const Trs& R, const Term& s, const Term& t,
                     std::size_t bound,
                     std::size_t node_cap = kDefaultNodeCap);

}  // namespace ddc
