#pragma once

// Concrete syntax for the core calculus and its siblings, plus the JSON
// trace format.
//
// Core:        !V    V M    \x.M  (or λx.M)    ( ... )
//              z!z,  (\x.!x)(z!z),  !(\x.x!x)
// Let:         [V]   let x = M in N   V W
// Unit/star:   unit V   M * V
// CbV:         x   \x.P   P Q   (application associates to the left)
//
// Abstractions extend as far right as possible. `!` binds tighter than
// application.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lambdacc/calculi.hpp"
#include "lambdacc/named.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/term.hpp"

namespace lambdacc {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::set<std::string> expected = {})
      : std::runtime_error(message), span_(span), expected_(std::move(expected)) {}

  SourceSpan span() const { return span_; }
  const std::set<std::string>& expected() const { return expected_; }

  // "message at 3..5 (expected one of: ...)"
  std::string describe() const {
    std::string s = std::string(what()) + " at " + std::to_string(span_.begin) + ".." + std::to_string(span_.end);
    if (!expected_.empty()) {
      s += " (expected one of:";
      for (const auto& e : expected_) s += " " + e;
      s += ")";
    }
    return s;
  }

 private:
  SourceSpan span_;
  std::set<std::string> expected_;
};

namespace parse_detail {

enum class Tok { Ident, Lambda, Dot, Bang, LParen, RParen, LBracket, RBracket, StarOp, Equals, Let, In, Unit, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

inline const char* tokName(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Lambda: return "\\";
    case Tok::Dot: return ".";
    case Tok::Bang: return "!";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::LBracket: return "[";
    case Tok::RBracket: return "]";
    case Tok::StarOp: return "*";
    case Tok::Equals: return "=";
    case Tok::Let: return "let";
    case Tok::In: return "in";
    case Tok::Unit: return "unit";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline bool identStart(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
inline bool identChar(char c) { return identStart(c) || (c >= '0' && c <= '9') || c == '\''; }

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t b = i;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), {b, b + 1}});
      ++i;
    };
    switch (c) {
      case '\\': single(Tok::Lambda); continue;
      case '.': single(Tok::Dot); continue;
      case '!': single(Tok::Bang); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '[': single(Tok::LBracket); continue;
      case ']': single(Tok::RBracket); continue;
      case '*': single(Tok::StarOp); continue;
      case '=': single(Tok::Equals); continue;
      default: break;
    }
    // UTF-8 lambda, U+03BB.
    if (static_cast<unsigned char>(c) == 0xCE && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xBB) {
      out.push_back({Tok::Lambda, "λ", {b, b + 2}});
      i += 2;
      continue;
    }
    if (identStart(c)) {
      while (i < s.size() && identChar(s[i])) ++i;
      std::string word(s.substr(b, i - b));
      Tok k = Tok::Ident;
      if (word == "let") k = Tok::Let;
      else if (word == "in") k = Tok::In;
      else if (word == "unit") k = Tok::Unit;
      out.push_back({k, std::move(word), {b, i}});
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", {b, b + 1});
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

enum class Lang { Core, Ml, Star, Cbv };

struct Node {
  named::Tree tree;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::string_view text, Lang lang) : toks_(lex(text)), lang_(lang) {}

  named::Tree parseTop() {
    Node n = expr();
    if (peek().kind != Tok::End) {
      std::set<std::string> exp = {"end of input"};
      if (lang_ == Lang::Star) exp.insert("*");
      throw ParseError("unexpected '" + peek().text + "'", peek().span, exp);
    }
    if (lang_ != Lang::Cbv && n.tree.isValue())
      throw ParseError("a bare value is not a computation", n.span);
    return n.tree;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  Token expect(Tok k) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + tokName(k), peek().span, {tokName(k)});
    return next();
  }

  bool sorted() const { return lang_ != Lang::Cbv; }

  void needComputation(const Node& n, const char* what) const {
    if (sorted() && n.tree.isValue()) throw ParseError(std::string(what) + " must be a computation", n.span);
  }
  void needValue(const Node& n, const char* what) const {
    if (sorted() && !n.tree.isValue()) throw ParseError(std::string(what) + " must be a value", n.span);
  }

  std::set<std::string> atomStarts() const {
    std::set<std::string> s = {"identifier", "(", "\\"};
    if (lang_ == Lang::Core) s.insert("!");
    if (lang_ == Lang::Ml) s.insert({"[", "let"});
    if (lang_ == Lang::Star) s.insert("unit");
    return s;
  }

  bool startsAtom(Tok k) const {
    switch (k) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::Lambda: return true;
      case Tok::Bang: return lang_ == Lang::Core;
      case Tok::LBracket:
      case Tok::Let: return lang_ == Lang::Ml;
      default: return false;
    }
  }

  Node expr() {
    if (peek().kind == Tok::Lambda) return lambda();
    if (lang_ == Lang::Ml && peek().kind == Tok::Let) return let();
    if (lang_ == Lang::Star) return star();
    return application();
  }

  Node lambda() {
    const Token lam = expect(Tok::Lambda);
    const Token x = expect(Tok::Ident);
    expect(Tok::Dot);
    Node body = expr();
    needComputation(body, "the body of an abstraction");
    return {named::Tree::lam(x.text, body.tree), {lam.span.begin, body.span.end}};
  }

  Node let() {
    const Token kw = expect(Tok::Let);
    const Token x = expect(Tok::Ident);
    expect(Tok::Equals);
    Node bound = expr();
    needComputation(bound, "a let-bound term");
    expect(Tok::In);
    Node body = expr();
    needComputation(body, "the body of a let");
    return {named::Tree::let(x.text, bound.tree, body.tree), {kw.span.begin, body.span.end}};
  }

  Node star() {
    Node left = unit();
    while (peek().kind == Tok::StarOp) {
      next();
      Node right = peek().kind == Tok::Lambda ? lambda() : atom();
      needComputation(left, "the left operand of *");
      needValue(right, "the right operand of *");
      left = {named::Tree::star(left.tree, right.tree), {left.span.begin, right.span.end}};
    }
    return left;
  }

  Node unit() {
    if (peek().kind != Tok::Unit) return atom();
    const Token kw = next();
    Node v = peek().kind == Tok::Lambda ? lambda() : atom();
    needValue(v, "the operand of unit");
    return {named::Tree::unit(v.tree), {kw.span.begin, v.span.end}};
  }

  Node application() {
    Node head = prefixed();
    while (startsAtom(peek().kind)) {
      Node arg = peek().kind == Tok::Lambda ? lambda() : prefixed();
      if (lang_ == Lang::Core) {
        if (!head.tree.isValue()) throw ParseError("a computation cannot be applied", head.span);
        needComputation(arg, "an argument");
      } else if (lang_ == Lang::Ml) {
        if (!head.tree.isValue()) throw ParseError("a computation cannot be applied", head.span);
        needValue(arg, "an argument");
      }
      head = {named::Tree::app(head.tree, arg.tree), {head.span.begin, arg.span.end}};
    }
    return head;
  }

  Node prefixed() {
    if (lang_ == Lang::Core && peek().kind == Tok::Bang) {
      const Token bang = next();
      Node v = peek().kind == Tok::Lambda ? lambda() : prefixed();
      needValue(v, "the operand of !");
      return {named::Tree::unit(v.tree), {bang.span.begin, v.span.end}};
    }
    if (lang_ == Lang::Ml && peek().kind == Tok::Let) return let();
    return atom();
  }

  Node atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Ident: next(); return {named::Tree::var(t.text), t.span};
      case Tok::LParen: {
        next();
        Node inner = expr();
        const Token close = expect(Tok::RParen);
        return {inner.tree, {t.span.begin, close.span.end}};
      }
      case Tok::LBracket:
        if (lang_ != Lang::Ml) break;
        {
          next();
          Node v = expr();
          needValue(v, "the contents of [ ]");
          const Token close = expect(Tok::RBracket);
          return {named::Tree::unit(v.tree), {t.span.begin, close.span.end}};
        }
      default: break;
    }
    throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.span,
                     atomStarts());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Lang lang_;
};

}  // namespace parse_detail

// ---------------------------------------------------------------------------
// Parsers

inline Com parseCom(std::string_view text) {
  return named::toCom(parse_detail::Parser(text, parse_detail::Lang::Core).parseTop());
}

inline MlTerm parseMl(std::string_view text) {
  return MlTerm(parse_detail::Parser(text, parse_detail::Lang::Ml).parseTop());
}

inline StarTerm parseStar(std::string_view text) {
  return StarTerm(parse_detail::Parser(text, parse_detail::Lang::Star).parseTop());
}

// Any call-by-value term; use sorts::kernelComputation to restrict.
inline CbvTerm parseCbv(std::string_view text) {
  return CbvTerm(parse_detail::Parser(text, parse_detail::Lang::Cbv).parseTop());
}

// ---------------------------------------------------------------------------
// Printers

namespace print_detail {

using named::Kind;
using named::Tree;

inline std::string core(const Tree& t);

inline std::string coreAtom(const Tree& v) { return v.is(Kind::Var) ? v.name() : "(" + core(v) + ")"; }

inline std::string core(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t.name();
    case Kind::Lam: return "\\" + t.name() + "." + core(t.child(0));
    case Kind::Unit: return "!" + coreAtom(t.child(0));
    case Kind::App: {
      const Tree& a = t.child(1);
      return coreAtom(t.child(0)) + (a.is(Kind::Unit) ? core(a) : "(" + core(a) + ")");
    }
    default: return "?";
  }
}

inline std::string ml(const Tree& t);

inline std::string mlAtom(const Tree& v) { return v.is(Kind::Var) ? v.name() : "(" + ml(v) + ")"; }

inline std::string ml(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t.name();
    case Kind::Lam: return "\\" + t.name() + "." + ml(t.child(0));
    case Kind::Unit: return "[" + ml(t.child(0)) + "]";
    case Kind::App: return mlAtom(t.child(0)) + " " + mlAtom(t.child(1));
    case Kind::Let: {
      const Tree& b = t.child(0);
      const std::string bound = b.is(Kind::Let) ? "(" + ml(b) + ")" : ml(b);
      return "let " + t.name() + " = " + bound + " in " + ml(t.child(1));
    }
    default: return "?";
  }
}

inline std::string star(const Tree& t);

inline std::string starAtom(const Tree& v) { return v.is(Kind::Var) ? v.name() : "(" + star(v) + ")"; }

inline std::string star(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t.name();
    case Kind::Lam: return "\\" + t.name() + "." + star(t.child(0));
    case Kind::Unit: return "unit " + starAtom(t.child(0));
    case Kind::Star: return star(t.child(0)) + " * " + starAtom(t.child(1));
    default: return "?";
  }
}

inline std::string cbv(const Tree& t) {
  switch (t.kind()) {
    case Kind::Var: return t.name();
    case Kind::Lam: return "\\" + t.name() + "." + cbv(t.child(0));
    case Kind::App: {
      const Tree& f = t.child(0);
      const Tree& a = t.child(1);
      const std::string fs = f.is(Kind::Lam) ? "(" + cbv(f) + ")" : cbv(f);
      const std::string as = a.is(Kind::Var) ? cbv(a) : "(" + cbv(a) + ")";
      return fs + " " + as;
    }
    default: return "?";
  }
}

}  // namespace print_detail

inline std::string printCom(const Com& t) { return print_detail::core(named::fromCom(t)); }
inline std::string printVal(const Val& v) { return print_detail::core(named::fromVal(v)); }
inline std::string printMl(const MlTerm& t) { return print_detail::ml(t.tree); }
inline std::string printStar(const StarTerm& t) { return print_detail::star(t.tree); }
inline std::string printCbv(const CbvTerm& t) { return print_detail::cbv(t.tree); }

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json pathJson(const Path& path) {
  auto arr = nlohmann::ordered_json::array();
  for (PathToken p : path) arr.push_back(pathTokenName(p));
  return arr;
}

inline nlohmann::ordered_json redexJson(const RedexOccurrence& r) {
  nlohmann::ordered_json j;
  j["rule"] = ruleName(r.rule);
  j["path"] = pathJson(r.path);
  j["closure"] = closureName(r.closure());
  return j;
}

inline nlohmann::ordered_json traceJson(const Trace& tr) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["initial"] = printCom(tr.initial());
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : tr.steps()) {
    nlohmann::ordered_json step = redexJson(s.redex);
    step["result"] = printCom(s.result);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["counts"] = {{"beta_c", tr.count(Rule::BetaC)},
                 {"sigma", tr.count(Rule::Sigma)},
                 {"id", tr.count(Rule::Id)},
                 {"iota", tr.count(Rule::Iota)}};
  if (tr.count(Rule::Eta) > 0) j["counts"]["eta"] = tr.count(Rule::Eta);
  j["status"] = statusName(tr.status());
  return j;
}

inline std::string exportTrace(const Trace& tr) { return traceJson(tr).dump(); }

}  // namespace lambdacc
