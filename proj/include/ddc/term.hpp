#pragma once

// First-order terms, positions, substitutions, rules and rewrite systems.
//
// Terms are immutable and share structure. Variables and function symbols
// are plain identifiers; a name is a variable or a symbol depending on how
// the node was constructed, never on the spelling.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ddc/error.hpp"

namespace ddc {

class Term {
 public:
  static Term var(std::string name);
  static Term fun(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  bool is_fun() const { return !node_->is_var; }
  /// Variable name or function symbol.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }

  std::size_t hash() const { return node_->hash; }
  /// Number of positions.
  std::size_t size() const { return node_->size; }
  bool is_ground() const { return node_->ground; }

  bool operator==(const Term& other) const;
  /// Structural total order: variables before applications, then by name,
  /// arity and arguments.
  std::strong_ordering operator<=>(const Term& other) const;

  std::string to_string() const;

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Term> args;
    std::size_t hash;
    std::size_t size;
    bool ground;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
using TermSet = std::unordered_set<Term, TermHash>;

/// A position: path of 1-based argument indices from the root.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<unsigned> steps) : steps_(steps) {}
  explicit Position(std::vector<unsigned> steps) : steps_(std::move(steps)) {}

  static Position root() { return {}; }

  bool is_root() const { return steps_.empty(); }
  std::size_t depth() const { return steps_.size(); }
  std::span<const unsigned> steps() const { return steps_; }
  unsigned operator[](std::size_t i) const { return steps_[i]; }

  /// q ⩽ p: this position is a prefix of `p`.
  bool is_prefix_of(const Position& p) const;
  /// Neither position is a prefix of the other.
  bool is_parallel_to(const Position& p) const;
  /// p \ q for q ⩽ p. Throws PreconditionError otherwise.
  Position minus(const Position& prefix) const;

  Position concat(const Position& suffix) const;
  Position child(unsigned i) const;

  /// `ε` for the root, otherwise the indices joined by dots.
  std::string to_string() const;

  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;

 private:
  std::vector<unsigned> steps_;
};

std::ostream& operator<<(std::ostream& os, const Position& p);

enum class PosKind { Function, Variable };

/// Variables outside the domain are mapped to themselves.
using Substitution = std::map<std::string, Term>;

std::string to_string(const Substitution& s);

struct Rule {
  Term lhs;
  Term rhs;

  bool operator==(const Rule&) const = default;
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Rule& r);

using Signature = std::map<std::string, std::size_t>;

/// An ordered rule sequence with a consistent signature.
class Trs {
 public:
  Trs() = default;
  /// Throws ArityClash if a symbol is used with two arities.
  explicit Trs(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t i) const { return rules_.at(i); }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const Signature& signature() const { return signature_; }
  std::set<std::string> variables() const;

 private:
  std::vector<Rule> rules_;
  Signature signature_;
};

// Positions and subterms.

/// All positions in pre-order (which is also lexicographic order).
std::vector<std::pair<Position, PosKind>> positions(const Term& t);
std::vector<Position> function_positions(const Term& t);
bool is_function_position(const Term& t, const Position& p);
bool has_position(const Term& t, const Position& p);

/// Throws InvalidPosition if `p` is not a position of `t`.
const Term& subterm_at(const Term& t, const Position& p);
/// Throws InvalidPosition if `p` is not a position of `t`.
Term replace_at(const Term& t, const Position& p, const Term& s);

// Variables.

Term apply_subst(const Term& t, const Substitution& sigma);
/// σ applied after `first`: x ↦ (first(x))σ, plus σ on variables outside
/// dom(first).
Substitution compose(const Substitution& first, const Substitution& sigma);
std::size_t var_count(const Term& t, const std::string& x);
/// Distinct variables in order of first occurrence (left to right).
std::vector<std::string> variables(const Term& t);
std::vector<std::string> variables(const Rule& r);
bool is_linear(const Term& t);

// Rules and systems.

/// Rules with some x such that |l|_x < |r|_x, and the rest. Order preserved.
std::pair<Trs, Trs> split_duplicating(const Trs& trs);
bool is_duplicating(const Rule& r);

enum class Linearity { Linear, LeftLinear, Neither };
Linearity linearity(const Trs& trs);
std::string to_string(Linearity l);

// Unification and matching.

/// Idempotent most general unifier, or nullopt on clash / occurs check.
std::optional<Substitution> mgu(const Term& s, const Term& t);
/// Simultaneous unifier of all pairs.
std::optional<Substitution> mgu(std::vector<std::pair<Term, Term>> equations);

/// σ with pattern·σ = subject, restricted to the variables of `pattern`.
std::optional<Substitution> match(const Term& pattern, const Term& subject);
/// Simultaneous matching of each (pattern, subject) pair.
std::optional<Substitution> match(
    std::span<const std::pair<Term, Term>> pairs);

/// Renames the variables of `r2` that also occur in `r1` by appending
/// primes until fresh. `r1` is returned unchanged.
std::pair<Rule, Rule> rename_apart(const Rule& r1, const Rule& r2);

/// A bijective variable renaming ρ with sρ = t, if one exists.
std::optional<Substitution> variant_renaming(const Term& s, const Term& t);

}  // namespace ddc
