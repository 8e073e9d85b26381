#include "ddc/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ddc {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name) {
  std::size_t h = combine(0x51ed27u, std::hash<std::string>{}(name));
  return Term(std::make_shared<const Node>(
      Node{true, std::move(name), {}, h, 1, false}));
}

Term Term::fun(std::string symbol, std::vector<Term> args) {
  std::size_t h = combine(0xf00du, std::hash<std::string>{}(symbol));
  std::size_t size = 1;
  bool ground = true;
  for (const Term& a : args) {
    h = combine(h, a.hash());
    size += a.size();
    ground = ground && a.is_ground();
  }
  return Term(std::make_shared<const Node>(
      Node{false, std::move(symbol), std::move(args), h, size, ground}));
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->size != other.node_->size ||
      node_->is_var != other.node_->is_var || node_->name != other.node_->name ||
      node_->args.size() != other.node_->args.size()) {
    return false;
  }
  return std::equal(node_->args.begin(), node_->args.end(),
                    other.node_->args.begin());
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (is_var() != other.is_var()) {
    return is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = name() <=> other.name(); c != 0) return c;
  if (auto c = arity() <=> other.arity(); c != 0) return c;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (auto c = arg(i) <=> other.arg(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Term::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  os << t.name();
  if (t.is_fun() && t.arity() > 0) {
    os << '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) os << ',';
      os << t.arg(i);
    }
    os << ')';
  }
  return os;
}

// Position

bool Position::is_prefix_of(const Position& p) const {
  return steps_.size() <= p.steps_.size() &&
         std::equal(steps_.begin(), steps_.end(), p.steps_.begin());
}

bool Position::is_parallel_to(const Position& p) const {
  return !is_prefix_of(p) && !p.is_prefix_of(*this);
}

Position Position::minus(const Position& prefix) const {
  if (!prefix.is_prefix_of(*this)) {
    throw PreconditionError(prefix.to_string() + " is not a prefix of " +
                            to_string());
  }
  return Position(std::vector<unsigned>(
      steps_.begin() + static_cast<std::ptrdiff_t>(prefix.depth()),
      steps_.end()));
}

Position Position::concat(const Position& suffix) const {
  std::vector<unsigned> s = steps_;
  s.insert(s.end(), suffix.steps_.begin(), suffix.steps_.end());
  return Position(std::move(s));
}

Position Position::child(unsigned i) const {
  std::vector<unsigned> s = steps_;
  s.push_back(i);
  return Position(std::move(s));
}

std::string Position::to_string() const {
  if (steps_.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(steps_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << p.to_string();
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += x + " ↦ " + t.to_string();
  }
  return out + "}";
}

std::string Rule::to_string() const {
  return lhs.to_string() + " -> " + rhs.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rule& r) {
  return os << r.to_string();
}

// Trs

namespace {

void collect_signature(const Term& t, Signature& sig) {
  if (t.is_var()) return;
  auto [it, inserted] = sig.emplace(t.name(), t.arity());
  if (!inserted && it->second != t.arity()) {
    throw ArityClash("symbol " + t.name() + " used with arities " +
                     std::to_string(it->second) + " and " +
                     std::to_string(t.arity()));
  }
  for (const Term& a : t.args()) collect_signature(a, sig);
}

}  // namespace

Trs::Trs(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (const Rule& r : rules_) {
    collect_signature(r.lhs, signature_);
    collect_signature(r.rhs, signature_);
  }
}

std::set<std::string> Trs::variables() const {
  std::set<std::string> out;
  for (const Rule& r : rules_) {
    for (auto& x : ddc::variables(r)) out.insert(x);
  }
  return out;
}

// Positions

namespace {

void collect_positions(const Term& t, Position& cur,
                       std::vector<std::pair<Position, PosKind>>& out) {
  out.emplace_back(cur, t.is_var() ? PosKind::Variable : PosKind::Function);
  for (unsigned i = 0; i < t.arity(); ++i) {
    Position next = cur.child(i + 1);
    collect_positions(t.arg(i), next, out);
  }
}

const Term* try_subterm(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (unsigned i : p.steps()) {
    if (i == 0 || i > cur->arity()) return nullptr;
    cur = &cur->arg(i - 1);
  }
  return cur;
}

Term replace_rec(const Term& t, std::span<const unsigned> path,
                 const Term& s) {
  if (path.empty()) return s;
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[path[0] - 1] = replace_rec(args[path[0] - 1], path.subspan(1), s);
  return Term::fun(t.name(), std::move(args));
}

}  // namespace

std::vector<std::pair<Position, PosKind>> positions(const Term& t) {
  std::vector<std::pair<Position, PosKind>> out;
  out.reserve(t.size());
  Position root;
  collect_positions(t, root, out);
  return out;
}

std::vector<Position> function_positions(const Term& t) {
  std::vector<Position> out;
  for (auto& [p, k] : positions(t)) {
    if (k == PosKind::Function) out.push_back(std::move(p));
  }
  return out;
}

bool is_function_position(const Term& t, const Position& p) {
  const Term* s = try_subterm(t, p);
  return s != nullptr && s->is_fun();
}

bool has_position(const Term& t, const Position& p) {
  return try_subterm(t, p) != nullptr;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* s = try_subterm(t, p);
  if (!s) {
    throw InvalidPosition(p.to_string() + " is not a position of " +
                          t.to_string());
  }
  return *s;
}

Term replace_at(const Term& t, const Position& p, const Term& s) {
  if (!has_position(t, p)) {
    throw InvalidPosition(p.to_string() + " is not a position of " +
                          t.to_string());
  }
  return replace_rec(t, p.steps(), s);
}

// Variables

Term apply_subst(const Term& t, const Substitution& sigma) {
  if (sigma.empty() || t.is_ground()) return t;
  if (t.is_var()) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply_subst(a, sigma));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::fun(t.name(), std::move(args)) : t;
}

Substitution compose(const Substitution& first, const Substitution& sigma) {
  Substitution out;
  for (const auto& [x, t] : first) {
    Term u = apply_subst(t, sigma);
    if (!(u.is_var() && u.name() == x)) out.emplace(x, std::move(u));
  }
  for (const auto& [x, t] : sigma) {
    if (!first.contains(x)) out.emplace(x, t);
  }
  return out;
}

std::size_t var_count(const Term& t, const std::string& x) {
  if (t.is_var()) return t.name() == x ? 1 : 0;
  if (t.is_ground()) return 0;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += var_count(a, x);
  return n;
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

}  // namespace

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

std::vector<std::string> variables(const Rule& r) {
  std::vector<std::string> out;
  collect_vars(r.lhs, out);
  collect_vars(r.rhs, out);
  return out;
}

bool is_linear(const Term& t) {
  for (const auto& x : variables(t)) {
    if (var_count(t, x) > 1) return false;
  }
  return true;
}

// Rules and systems

bool is_duplicating(const Rule& r) {
  for (const auto& x : variables(r.rhs)) {
    if (var_count(r.lhs, x) < var_count(r.rhs, x)) return true;
  }
  return false;
}

std::pair<Trs, Trs> split_duplicating(const Trs& trs) {
  std::vector<Rule> dup, rest;
  for (const Rule& r : trs.rules()) {
    (is_duplicating(r) ? dup : rest).push_back(r);
  }
  return {Trs(std::move(dup)), Trs(std::move(rest))};
}

Linearity linearity(const Trs& trs) {
  bool left = true;
  bool right = true;
  for (const Rule& r : trs.rules()) {
    left = left && is_linear(r.lhs);
    right = right && is_linear(r.rhs);
  }
  if (!left) return Linearity::Neither;
  return right ? Linearity::Linear : Linearity::LeftLinear;
}

std::string to_string(Linearity l) {
  switch (l) {
    case Linearity::Linear:
      return "linear";
    case Linearity::LeftLinear:
      return "left-linear";
    case Linearity::Neither:
      return "neither";
  }
  return "?";
}

// Unification

namespace {

bool occurs(const std::string& x, const Term& t) {
  return var_count(t, x) > 0;
}

}  // namespace

std::optional<Substitution> mgu(std::vector<std::pair<Term, Term>> equations) {
  // Martelli-Montanari: every binding x ↦ t is eagerly applied to the
  // pending equations and to the solved part, which keeps it idempotent.
  Substitution solved;
  while (!equations.empty()) {
    auto [s, t] = std::move(equations.back());
    equations.pop_back();
    if (s == t) continue;
    if (!s.is_var() && t.is_var()) std::swap(s, t);
    if (s.is_var()) {
      if (occurs(s.name(), t)) return std::nullopt;
      Substitution bind{{s.name(), t}};
      for (auto& [a, b] : equations) {
        a = apply_subst(a, bind);
        b = apply_subst(b, bind);
      }
      for (auto& [x, u] : solved) u = apply_subst(u, bind);
      solved.emplace(s.name(), t);
      continue;
    }
    if (s.name() != t.name() || s.arity() != t.arity()) return std::nullopt;
    for (std::size_t i = 0; i < s.arity(); ++i) {
      equations.emplace_back(s.arg(i), t.arg(i));
    }
  }
  return solved;
}

std::optional<Substitution> mgu(const Term& s, const Term& t) {
  return mgu(std::vector<std::pair<Term, Term>>{{s, t}});
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& sigma) {
  if (pattern.is_var()) {
    auto [it, inserted] = sigma.emplace(pattern.name(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var() || pattern.name() != subject.name() ||
      pattern.arity() != subject.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.arg(i), subject.arg(i), sigma)) return false;
  }
  return true;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> match(
    std::span<const std::pair<Term, Term>> pairs) {
  Substitution sigma;
  for (const auto& [p, s] : pairs) {
    if (!match_into(p, s, sigma)) return std::nullopt;
  }
  return sigma;
}

std::pair<Rule, Rule> rename_apart(const Rule& r1, const Rule& r2) {
  std::vector<std::string> v1 = variables(r1);
  std::vector<std::string> v2 = variables(r2);
  std::set<std::string> taken(v1.begin(), v1.end());
  taken.insert(v2.begin(), v2.end());
  Substitution rho;
  for (const auto& x : v2) {
    if (std::find(v1.begin(), v1.end(), x) == v1.end()) continue;
    std::string fresh = x + "'";
    while (taken.contains(fresh)) fresh += "'";
    taken.insert(fresh);
    rho.emplace(x, Term::var(fresh));
  }
  return {r1, Rule{apply_subst(r2.lhs, rho), apply_subst(r2.rhs, rho)}};
}

std::optional<Substitution> variant_renaming(const Term& s, const Term& t) {
  auto rho = match(s, t);
  if (!rho) return std::nullopt;
  std::set<std::string> image;
  for (const auto& [x, u] : *rho) {
    if (!u.is_var() || !image.insert(u.name()).second) return std::nullopt;
  }
  return rho;
}

}  // namespace ddc
