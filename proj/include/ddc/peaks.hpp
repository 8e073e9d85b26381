#pragma once

// Local peaks t ← s → u: classification, joins for parallel and variable
// peaks, critical peaks, and instantiation of function peaks from critical
// peaks.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddc/rewrite.hpp"
#include "ddc/term.hpp"

namespace ddc {

/// Both steps are stored as forward steps out of the common source:
/// `left` is s → t and `right` is s → u.
struct LocalPeak {
  Step left;
  Step right;

  const Term& source() const { return left.source; }
  bool valid() const;
  LocalPeak mirrored() const { return {right, left}; }
};

enum class PeakKind {
  Parallel,
  Function,
  Variable,
  MirroredFunction,
  MirroredVariable,
};

std::string to_string(PeakKind k);

/// With p the left position and q the right one: Parallel if p ∥ q;
/// Function/Variable if q ⩽ p, depending on whether p \ q hits a function
/// position of the right rule's lhs; the Mirrored kinds when p < q.
PeakKind classify(const LocalPeak& pk);

/// t →^{π₂} v and u →^{π₁} v. Throws PreconditionError unless Parallel.
std::pair<Step, Step> join_parallel(const LocalPeak& pk);

/// t → v with the outer (right) rule, and u →ⁿ v with the inner rule where
/// n = |r₂|_x. Throws PreconditionError unless Variable, UnsupportedPeak
/// if the outer rule is not left-linear.
std::pair<Step, Conversion> join_variable(const LocalPeak& pk);

/// l₂μ[r₁μ]_p ← l₂μ → r₂μ for the overlap of the inner rule at p ∈ FPos(l₂).
struct CriticalPeak {
  std::size_t inner_index;
  std::size_t outer_index;
  Rule rule_inner;  // renamed apart from rule_outer
  Rule rule_outer;
  Position pos;
  Substitution mgu;
  Term peak_left;
  Term peak_source;
  Term peak_right;

  bool trivial() const { return peak_left == peak_right; }
  /// The peak as two annotated forward steps from peak_source.
  LocalPeak as_local_peak() const;
  std::string to_string() const;
};

/// All critical peaks, ordered by outer rule index, inner rule index, then
/// position. Root overlaps of a rule with a variant of itself are included.
std::vector<CriticalPeak> critical_peaks(const Trs& R);

struct FunctionPeakMatch {
  Position context;  // hole position of C
  Substitution tau;
  std::size_t cp_index;
};

/// Finds C, τ and a critical peak with s = C[l₂μτ], t = C[(l₂μ[r₁μ]_p)τ]
/// and u = C[r₂μτ]. Throws PreconditionError unless the peak is a Function
/// peak.
std::optional<FunctionPeakMatch> match_function_peak(
    const LocalPeak& pk, const std::vector<CriticalPeak>& cps);

}  // namespace ddc
