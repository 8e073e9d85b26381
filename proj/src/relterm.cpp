#include "ddc/relterm.hpp"

#include <algorithm>

namespace ddc {

namespace {

Signature joint_signature(const Trs& a, const Trs& b) {
  std::vector<Rule> rules = a.rules();
  rules.insert(rules.end(), b.rules().begin(), b.rules().end());
  return Trs(std::move(rules)).signature();
}

}  // namespace

void validate(const PolyInterpretation& ip, const Signature& sig) {
  for (const auto& [f, arity] : sig) {
    auto it = ip.symbols.find(f);
    if (it == ip.symbols.end()) throw UninterpretedSymbol("no interpretation for " + f);
    if (it->second.coefficients.size() != arity) {
      throw InvalidInterpretation(f + " has arity " + std::to_string(arity) +
                                  " but " +
                                  std::to_string(it->second.coefficients.size()) +
                                  " coefficients");
    }
  }
  for (const auto& [f, si] : ip.symbols) {
    for (std::uint64_t a : si.coefficients) {
      if (a == 0) {
        throw InvalidInterpretation("coefficient 0 for " + f +
                                    " is not monotone");
      }
    }
  }
}

std::string LinearForm::to_string() const {
  std::string out = std::to_string(constant);
  for (const auto& [x, a] : coefficients) {
    out += " + " + (a == 1 ? std::string() : std::to_string(a) + "·") + x;
  }
  return out;
}

LinearForm eval_linear(const Term& t, const PolyInterpretation& ip) {
  if (t.is_var()) return LinearForm{0, {{t.name(), 1}}};
  auto it = ip.symbols.find(t.name());
  if (it == ip.symbols.end()) {
    throw UninterpretedSymbol("no interpretation for " + t.name());
  }
  const SymbolInterpretation& si = it->second;
  if (si.coefficients.size() != t.arity()) {
    throw InvalidInterpretation(t.name() + " interpreted with wrong arity");
  }
  LinearForm out{si.constant, {}};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    const std::uint64_t a = si.coefficients[i];
    if (a == 0) continue;
    LinearForm arg = eval_linear(t.arg(i), ip);
    out.constant += a * arg.constant;
    for (const auto& [x, c] : arg.coefficients) out.coefficients[x] += a * c;
  }
  return out;
}

bool greater_or_equal(const LinearForm& l, const LinearForm& r) {
  if (l.constant < r.constant) return false;
  for (const auto& [x, c] : r.coefficients) {
    auto it = l.coefficients.find(x);
    if (it == l.coefficients.end() || it->second < c) return false;
  }
  return true;
}

bool strictly_greater(const LinearForm& l, const LinearForm& r) {
  return l.constant > r.constant && greater_or_equal(l, r);
}

RelativeResult verify_relative(const Trs& rd, const Trs& rnd,
                               const PolyInterpretation& ip) {
  validate(ip, joint_signature(rd, rnd));
  for (std::size_t i = 0; i < rd.size(); ++i) {
    const Rule& r = rd.rule(i);
    LinearForm l = eval_linear(r.lhs, ip);
    LinearForm rr = eval_linear(r.rhs, ip);
    if (!strictly_greater(l, rr)) {
      return {false, true, i,
              r.to_string() + ": " + l.to_string() + " > " + rr.to_string() +
                  " fails"};
    }
  }
  for (std::size_t i = 0; i < rnd.size(); ++i) {
    const Rule& r = rnd.rule(i);
    LinearForm l = eval_linear(r.lhs, ip);
    LinearForm rr = eval_linear(r.rhs, ip);
    if (!greater_or_equal(l, rr)) {
      return {false, false, i,
              r.to_string() + ": " + l.to_string() + " >= " + rr.to_string() +
                  " fails"};
    }
  }
  return {};
}

namespace {

struct Search {
  std::vector<std::pair<std::string, std::size_t>> symbols;
  // rules_done_at[k]: rules whose symbols are all among symbols[0..k]
  std::vector<std::vector<std::pair<const Rule*, bool>>> rules_done_at;
  unsigned bound;
  PolyInterpretation ip;

  bool rule_ok(const Rule& r, bool strict) const {
    LinearForm l = eval_linear(r.lhs, ip);
    LinearForm rr = eval_linear(r.rhs, ip);
    return strict ? strictly_greater(l, rr) : greater_or_equal(l, rr);
  }

  bool assign(std::size_t k) {
    if (k == symbols.size()) return true;
    const auto& [f, arity] = symbols[k];
    SymbolInterpretation& si = ip.symbols[f];
    si.coefficients.assign(arity, 1);
    for (std::uint64_t c = 0; c <= bound; ++c) {
      si.constant = c;
      if (try_coefficients(k, 0)) return true;
    }
    ip.symbols.erase(f);
    return false;
  }

  bool try_coefficients(std::size_t k, std::size_t j) {
    SymbolInterpretation& si = ip.symbols[symbols[k].first];
    if (j == si.coefficients.size()) {
      for (const auto& [r, strict] : rules_done_at[k]) {
        if (!rule_ok(*r, strict)) return false;
      }
      return assign(k + 1);
    }
    for (std::uint64_t a = 1; a <= bound; ++a) {
      ip.symbols[symbols[k].first].coefficients[j] = a;
      if (try_coefficients(k, j + 1)) return true;
    }
    return false;
  }
};

std::size_t last_symbol(const Term& t,
                        const std::map<std::string, std::size_t>& order) {
  if (t.is_var()) return 0;
  std::size_t m = order.at(t.name());
  for (const Term& a : t.args()) m = std::max(m, last_symbol(a, order));
  return m;
}

}  // namespace

std::optional<PolyInterpretation> search_interpretation(const Trs& rd,
                                                        const Trs& rnd,
                                                        unsigned coeff_bound) {
  Signature sig = joint_signature(rd, rnd);
  Search s;
  s.bound = coeff_bound;
  std::map<std::string, std::size_t> order;
  for (const auto& [f, arity] : sig) {
    order.emplace(f, s.symbols.size());
    s.symbols.emplace_back(f, arity);
  }
  s.rules_done_at.resize(s.symbols.size());
  bool impossible = false;
  auto place = [&](const Trs& trs, bool strict) {
    for (const Rule& r : trs.rules()) {
      if (r.lhs.is_var() && r.rhs.is_var()) {
        // x → x never decreases strictly and x → y is never ⩾.
        impossible = impossible || strict || r.lhs.name() != r.rhs.name();
        continue;
      }
      std::size_t k = std::max(last_symbol(r.lhs, order),
                               last_symbol(r.rhs, order));
      s.rules_done_at[k].emplace_back(&r, strict);
    }
  };
  place(rd, true);
  place(rnd, false);
  if (impossible || !s.assign(0)) return std::nullopt;
  return s.ip;
}

}  // namespace ddc
