#pragma once

// Relative termination of R_d modulo R_nd via linear polynomial
// interpretations over ℕ.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddc/term.hpp"

namespace ddc {

/// f(x₁,…,xₙ) ↦ c + a₁x₁ + ⋯ + aₙxₙ.
struct SymbolInterpretation {
  std::uint64_t constant = 0;
  std::vector<std::uint64_t> coefficients;

  bool operator==(const SymbolInterpretation&) const = default;
};

struct PolyInterpretation {
  std::map<std::string, SymbolInterpretation> symbols;

  bool operator==(const PolyInterpretation&) const = default;
};

/// Throws InvalidInterpretation if a coefficient is 0 (not monotone) or
/// the number of coefficients disagrees with `sig`; UninterpretedSymbol if
/// a symbol of `sig` is missing.
void validate(const PolyInterpretation& ip, const Signature& sig);

/// constant + Σ coefficient·variable; zero coefficients are never stored.
struct LinearForm {
  std::uint64_t constant = 0;
  std::map<std::string, std::uint64_t> coefficients;

  bool operator==(const LinearForm&) const = default;
  std::string to_string() const;
};

/// Throws UninterpretedSymbol.
LinearForm eval_linear(const Term& t, const PolyInterpretation& ip);

/// Coefficient-wise comparison, sound for all ℕ-assignments.
bool strictly_greater(const LinearForm& l, const LinearForm& r);
bool greater_or_equal(const LinearForm& l, const LinearForm& r);

struct RelativeResult {
  bool ok = true;
  bool in_duplicating = false;  // which system the failing rule belongs to
  std::size_t failing_rule = 0;
  std::string reason;
};

/// Every R_d rule strictly decreasing and every R_nd rule weakly
/// decreasing. Validates `ip` against the joint signature first (throws as
/// `validate`).
RelativeResult verify_relative(const Trs& rd, const Trs& rnd,
                               const PolyInterpretation& ip);

/// First interpretation in enumeration order (symbols by name, constants in
/// 0..bound, coefficients in 1..bound) accepted by verify_relative.
std::optional<PolyInterpretation> search_interpretation(const Trs& rd,
                                                        const Trs& rnd,
                                                        unsigned coeff_bound);

}  // namespace ddc
