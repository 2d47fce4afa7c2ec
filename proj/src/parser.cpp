#include <cctype>
#include <vector>

#include "lameps/syntax.hpp"

namespace lameps {

namespace {

enum class Tok { Ident, Zero, LParen, RParen, Lambda, Dot, Colon, Plus, Star, Arrow, Eps, D, End };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  int line = 1, col = 1;

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    pos++;
  }

  Token next() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) advance();
    int l = line, c = col;
    if (pos >= src.size()) return {Tok::End, "", l, c};
    char ch = src[pos];
    auto single = [&](Tok k) {
      advance();
      return Token{k, std::string(1, ch), l, c};
    };
    switch (ch) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '\\': return single(Tok::Lambda);
      case '.': return single(Tok::Dot);
      case ':': return single(Tok::Colon);
      case '+': return single(Tok::Plus);
      case '*': return single(Tok::Star);
      case '0': return single(Tok::Zero);
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') {
          advance();
          advance();
          return {Tok::Arrow, "->", l, c};
        }
        throw parse_error(l, c, "unexpected character '-'");
      default: break;
    }
    if (std::isalpha((unsigned char)ch) || ch == '_') {
      size_t start = pos;
      while (pos < src.size()) {
        char d = src[pos];
        if (std::isalnum((unsigned char)d) || d == '_' || d == '\'')
          advance();
        else
          break;
      }
      std::string text(src.substr(start, pos - start));
      if (text == "eps") return {Tok::Eps, text, l, c};
      if (text == "D") return {Tok::D, text, l, c};
      return {Tok::Ident, text, l, c};
    }
    throw parse_error(l, c, std::string("unexpected character '") + ch + "'");
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  std::vector<std::string> binders;  // innermost last

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& msg) {
    const Token& t = peek();
    throw parse_error(t.line, t.column, msg);
  }

  bool at(Tok k) const { return peek().kind == k; }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    pos++;
  }

  TypePtr type() {
    TypePtr lhs = btype();
    if (at(Tok::Arrow)) {
      pos++;
      return arrow_type(lhs, type());
    }
    return lhs;
  }

  TypePtr btype() {
    if (at(Tok::LParen)) {
      pos++;
      TypePtr inner = type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (!at(Tok::Ident)) fail("expected type");
    return base_type(take().text);
  }

  TermPtr variable(const std::string& name) {
    for (int i = (int)binders.size() - 1; i >= 0; i--)
      if (binders[i] == name) return bound_var((int)binders.size() - 1 - i);
    return free_var(name);
  }

  bool starts_prefix() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Zero:
      case Tok::LParen:
      case Tok::Lambda:
      case Tok::Eps:
      case Tok::D:
        return true;
      default:
        return false;
    }
  }

  TermPtr atom() {
    switch (peek().kind) {
      case Tok::Zero:
        pos++;
        return zero_term();
      case Tok::Ident:
        return variable(take().text);
      case Tok::LParen: {
        pos++;
        TermPtr inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Lambda: {
        pos++;
        if (!at(Tok::Ident)) fail("expected binder after '\\'");
        std::string binder = take().text;
        TypePtr ann;
        if (at(Tok::Colon)) {
          pos++;
          ann = type();
        }
        expect(Tok::Dot, "'.' after binder");
        binders.push_back(binder);
        TermPtr body = term();
        binders.pop_back();
        return lam(binder, ann, body);
      }
      default:
        fail("expected a term");
    }
  }

  TermPtr prefix() {
    if (at(Tok::Eps)) {
      pos++;
      return eps(prefix());
    }
    if (at(Tok::D)) {
      pos++;
      expect(Tok::LParen, "'(' after D");
      TermPtr fun = term();
      expect(Tok::RParen, "')'");
      expect(Tok::Star, "'*' after D(...)");
      return dapp(fun, prefix());
    }
    return atom();
  }

  TermPtr application() {
    TermPtr head = prefix();
    while (starts_prefix()) head = app(head, prefix());
    return head;
  }

  TermPtr term() {
    TermPtr lhs = application();
    while (at(Tok::Plus)) {
      pos++;
      lhs = sum(lhs, application());
    }
    return lhs;
  }
};

}  // namespace

TermPtr parse(std::string_view text) {
  Lexer lex{text};
  Parser p;
  for (;;) {
    Token t = lex.next();
    bool end = t.kind == Tok::End;
    p.toks.push_back(std::move(t));
    if (end) break;
  }
  TermPtr result = p.term();
  if (!p.at(Tok::End)) p.fail("trailing input");
  return result;
}

}  // namespace lameps
