#pragma once

// Shared test helpers: term literals, fixture loading and random generators.

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ddc/certificate.hpp"

namespace testing {

inline ddc::Trs trs(const std::string& rules, const std::string& vars = "x y z") {
  return ddc::parse_trs("(VAR " + vars + ")(RULES " + rules + ")");
}

/// Parses `text` with x, y, z (or `vars`) as variables.
inline ddc::Term T(const std::string& text, const std::string& vars = "x y z") {
  return trs(text + " -> " + text, vars).rule(0).lhs;
}

inline std::string fixture(const std::string& name) {
  std::ifstream in(std::string(DDC_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ddc::Trs fixture_trs(const std::string& name) {
  return ddc::parse_trs(fixture(name));
}

inline ddc::Certificate fixture_cert(const std::string& name) {
  return ddc::parse_certificate(fixture(name));
}

/// Random terms over f/2, g/1, h/3, a/0, b/0 and variables x, y, z.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  ddc::Term term(int depth, bool allow_vars = true) {
    const std::size_t pick = below(allow_vars ? 8 : 5);
    if (depth <= 0 || pick < 2) {
      return constant_or_var(allow_vars);
    }
    switch (pick % 3) {
      case 0:
        return ddc::Term::fun("g", {term(depth - 1, allow_vars)});
      case 1:
        return ddc::Term::fun("f", {term(depth - 1, allow_vars),
                                    term(depth - 1, allow_vars)});
      default:
        return ddc::Term::fun("h", {term(depth - 1, allow_vars),
                                    term(depth - 1, allow_vars),
                                    term(depth - 1, allow_vars)});
    }
  }

  ddc::Term ground(int depth) { return term(depth, false); }

  ddc::Term constant_or_var(bool allow_vars) {
    static const char* vars[] = {"x", "y", "z"};
    if (allow_vars && below(2) == 0) return ddc::Term::var(vars[below(3)]);
    return ddc::Term::fun(below(2) == 0 ? "a" : "b");
  }

  /// A term with every variable occurring at most once.
  ddc::Term linear(int depth) {
    int next = 0;
    return linear_rec(depth, next);
  }

  ddc::Position random_position(const ddc::Term& t) {
    const auto ps = ddc::positions(t);
    return ps[below(ps.size())].first;
  }

 private:
  ddc::Term linear_rec(int depth, int& next) {
    if (depth <= 0 || below(3) == 0) {
      if (below(2) == 0) return ddc::Term::var("v" + std::to_string(next++));
      return ddc::Term::fun(below(2) == 0 ? "a" : "b");
    }
    if (below(2) == 0) return ddc::Term::fun("g", {linear_rec(depth - 1, next)});
    auto l = linear_rec(depth - 1, next);
    return ddc::Term::fun("f", {l, linear_rec(depth - 1, next)});
  }

  std::mt19937_64 rng_;
};

}  // namespace testing
