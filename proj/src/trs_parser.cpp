#include <set>

#include "ddc/certificate.hpp"

namespace ddc {

namespace {

struct Token {
  enum Kind { LParen, RParen, Comma, Arrow, Ident, End } kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto is_break = [&](std::size_t j) {
    char c = s[j];
    return c == '(' || c == ')' || c == ',' || c == ';' || c == ' ' ||
           c == '\t' || c == '\n' || c == '\r' ||
           (c == '-' && j + 1 < s.size() && s[j + 1] == '>');
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
    } else if (c == ';') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", line, col});
      advance(1);
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", line, col});
      advance(1);
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", line, col});
      advance(1);
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", line, col});
      advance(2);
    } else {
      std::size_t j = i;
      while (j < s.size() && !is_break(j)) ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Trs parse() {
    collect_vars();
    std::vector<Rule> rules;
    while (peek().kind != Token::End) {
      expect(Token::LParen, "`(`");
      const Token& head = expect(Token::Ident, "section name");
      if (head.text == "VAR") {
        while (peek().kind == Token::Ident) next();
      } else if (head.text == "RULES") {
        while (peek().kind != Token::RParen) {
          Term l = term();
          expect(Token::Arrow, "`->`");
          Term r = term();
          rules.push_back(Rule{std::move(l), std::move(r)});
        }
      } else if (head.text == "COMMENT") {
        skip_balanced();
        continue;
      } else {
        fail(head, "unknown section " + head.text);
      }
      expect(Token::RParen, "`)`");
    }
    return Trs(std::move(rules));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Token::End) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw ParseError(what, t.line, t.col);
  }
  const Token& expect(Token::Kind k, const char* what) {
    const Token& t = next();
    if (t.kind != k) {
      fail(t, std::string("expected ") + what + ", found " +
                  (t.kind == Token::End ? "end of input" : "`" + t.text + "`"));
    }
    return t;
  }

  void collect_vars() {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (toks_[i].kind == Token::LParen && toks_[i + 1].kind == Token::Ident &&
          toks_[i + 1].text == "VAR") {
        for (std::size_t j = i + 2; toks_[j].kind == Token::Ident; ++j) {
          vars_.insert(toks_[j].text);
        }
      }
    }
  }

  // Skips to and past the `)` closing an already opened section.
  void skip_balanced() {
    int depth = 1;
    while (depth > 0) {
      const Token& t = next();
      if (t.kind == Token::End) fail(t, "unterminated section");
      if (t.kind == Token::LParen) ++depth;
      if (t.kind == Token::RParen) --depth;
    }
  }

  Term term() {
    const Token& name = expect(Token::Ident, "a term");
    if (peek().kind != Token::LParen) {
      return vars_.contains(name.text) ? Term::var(name.text)
                                       : Term::fun(name.text);
    }
    if (vars_.contains(name.text)) {
      fail(name, "variable " + name.text + " applied to arguments");
    }
    next();
    std::vector<Term> args;
    if (peek().kind != Token::RParen) {
      args.push_back(term());
      while (peek().kind == Token::Comma) {
        next();
        args.push_back(term());
      }
    }
    expect(Token::RParen, "`,` or `)`");
    return Term::fun(name.text, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> vars_;
};

}  // namespace

Trs parse_trs(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace ddc
