#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "czlab/topology.hpp"

namespace czlab {

// Largest coordinate magnitude accepted from textual input. Keeps every
// arithmetic combination the tools form far away from 64-bit overflow;
// larger literals are an input error, never silent wraparound.
constexpr Coord kMaxLiteral = Coord{1} << 40;

// Parse or evaluation failure, carrying the 1-based source position.
struct ExprError : std::runtime_error {
  ExprError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

using Value = std::variant<Element, Region, bool>;

enum class NodeKind {
  Elem,
  Mul,
  Inv,
  Phi,
  Psi,
  Up,
  Down,
  Sdown,
  Updown,
  Singleton,
  AllElements,
  IZ,
  Quad,
  OWedge,
  Nbhd,
  Union,
  Inter,
  DiffOp,
  Compl,
  Rshift,
  Lshift,
  ProdOp,
  Rpre,
  Lpre,
  InPred,
  SubsetPred,
  EqPred,
  IsEmptyPred,
  CellLit,
  EmptyLit,
};

struct Node {
  NodeKind kind;
  int pos = 0;  // byte offset of the node's first token
  Element elem{0, 0};
  Coord num = 0;
  Family fam = Family::Tau1;
  Cell cell;
  std::vector<std::unique_ptr<Node>> kids;
};

namespace expr_detail {

inline std::pair<int, int> line_col(const std::string& s, int pos) {
  int line = 1, col = 1;
  for (int k = 0; k < pos && k < static_cast<int>(s.size()); ++k) {
    if (s[static_cast<std::size_t>(k)] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void raise(const std::string& src, int pos,
                               const std::string& msg) {
  auto [line, col] = line_col(src, pos);
  throw ExprError(msg, line, col);
}

enum class Tok {
  LParen,
  RParen,
  Int,
  Comma,
  Star,
  InvOp,  // ^-1
  Pipe,
  Amp,
  Bang,
  Backslash,
  Ident,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Semi,
  EqEq,
  NegInf,
  PosInf,
  End,
};

struct Token {
  Tok kind;
  Coord num = 0;
  std::string text;
  int pos = 0;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t k = 0;
  auto push = [&out](Tok t, int pos, Coord num = 0, std::string text = {}) {
    out.push_back({t, num, std::move(text), pos});
  };
  while (k < src.size()) {
    char c = src[k];
    int pos = static_cast<int>(k);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (c == '(') { push(Tok::LParen, pos); ++k; continue; }
    if (c == ')') { push(Tok::RParen, pos); ++k; continue; }
    if (c == ',') { push(Tok::Comma, pos); ++k; continue; }
    if (c == '*') { push(Tok::Star, pos); ++k; continue; }
    if (c == '|') { push(Tok::Pipe, pos); ++k; continue; }
    if (c == '&') { push(Tok::Amp, pos); ++k; continue; }
    if (c == '!') { push(Tok::Bang, pos); ++k; continue; }
    if (c == '\\') { push(Tok::Backslash, pos); ++k; continue; }
    if (c == '{') { push(Tok::LBrace, pos); ++k; continue; }
    if (c == '}') { push(Tok::RBrace, pos); ++k; continue; }
    if (c == '[') { push(Tok::LBracket, pos); ++k; continue; }
    if (c == ']') { push(Tok::RBracket, pos); ++k; continue; }
    if (c == ';') { push(Tok::Semi, pos); ++k; continue; }
    if (c == '^') {
      if (src.compare(k, 3, "^-1") != 0)
        raise(src, pos, "expected '^-1'");
      push(Tok::InvOp, pos);
      k += 3;
      continue;
    }
    if (c == '=') {
      if (src.compare(k, 2, "==") != 0)
        raise(src, pos, "expected '=='");
      push(Tok::EqEq, pos);
      k += 2;
      continue;
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      if ((c == '+' || c == '-') && src.compare(k + 1, 3, "inf") == 0) {
        push(c == '-' ? Tok::NegInf : Tok::PosInf, pos);
        k += 4;
        continue;
      }
      std::size_t s = k;
      if (c == '+' || c == '-') ++k;
      if (k >= src.size() || !std::isdigit(static_cast<unsigned char>(src[k])))
        raise(src, pos, "expected a number after sign");
      std::size_t digits = 0;
      while (k < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[k]))) {
        ++k;
        ++digits;
      }
      if (digits > 13)
        raise(src, pos, "integer literal exceeds the 2^40 input bound");
      Coord v = std::stoll(src.substr(s, k - s));
      if (v > kMaxLiteral || v < -kMaxLiteral)
        raise(src, pos, "integer literal exceeds the 2^40 input bound");
      push(Tok::Int, pos, v);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t s = k;
      while (k < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[k]))))
        ++k;
      push(Tok::Ident, pos, 0, src.substr(s, k - s));
      continue;
    }
    raise(src, pos, std::string("unexpected character '") + c + "'");
  }
  push(Tok::End, static_cast<int>(src.size()));
  return out;
}

}  // namespace expr_detail

// Recursive-descent parser for the expression language. Precedence, loosest
// to tightest: predicates (in, subset, ==, isempty) < '|' < '&' and '\' <
// '!' < '*' < '^-1' < constructor application < atoms. '*' and the binary
// set operators are left-associative.
class Parser {
 public:
  explicit Parser(std::string text)
      : src_(std::move(text)), toks_(expr_detail::lex(src_)) {}

  std::unique_ptr<Node> parse() {
    auto n = parse_pred();
    expect(expr_detail::Tok::End, "unexpected trailing input");
    return n;
  }

 private:
  using Tok = expr_detail::Tok;

  const expr_detail::Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(k_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  expr_detail::Token take() { return toks_[std::min(k_++, toks_.size() - 1)]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_ident(const char* w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  void expect(Tok t, const std::string& msg) {
    if (!at(t)) expr_detail::raise(src_, peek().pos, msg);
    take();
  }
  [[noreturn]] void err(const std::string& msg) {
    expr_detail::raise(src_, peek().pos, msg);
  }

  static std::unique_ptr<Node> mk(NodeKind kind, int pos) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->pos = pos;
    return n;
  }

  std::unique_ptr<Node> parse_pred() {
    int pos = peek().pos;
    if (at_ident("isempty")) {
      take();
      auto n = mk(NodeKind::IsEmptyPred, pos);
      n->kids.push_back(parse_or());
      return n;
    }
    auto lhs = parse_or();
    if (at_ident("in") || at_ident("subset") || at(Tok::EqEq)) {
      NodeKind kind = at(Tok::EqEq) ? NodeKind::EqPred
                      : peek().text == "in" ? NodeKind::InPred
                                            : NodeKind::SubsetPred;
      take();
      auto n = mk(kind, pos);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(parse_or());
      return n;
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_or() {
    auto lhs = parse_and();
    while (at(Tok::Pipe)) {
      int pos = lhs->pos;
      take();
      auto n = mk(NodeKind::Union, pos);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(parse_and());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_and() {
    auto lhs = parse_unary();
    while (at(Tok::Amp) || at(Tok::Backslash)) {
      NodeKind kind = at(Tok::Amp) ? NodeKind::Inter : NodeKind::DiffOp;
      int pos = lhs->pos;
      take();
      auto n = mk(kind, pos);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(parse_unary());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_unary() {
    if (at(Tok::Bang)) {
      int pos = take().pos;
      auto n = mk(NodeKind::Compl, pos);
      n->kids.push_back(parse_unary());
      return n;
    }
    return parse_mul();
  }

  std::unique_ptr<Node> parse_mul() {
    auto lhs = parse_post(parse_app());
    while (at(Tok::Star)) {
      int pos = lhs->pos;
      take();
      auto n = mk(NodeKind::Mul, pos);
      n->kids.push_back(std::move(lhs));
      n->kids.push_back(parse_post(parse_app()));
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_post(std::unique_ptr<Node> base) {
    while (at(Tok::InvOp)) {
      int pos = base->pos;
      take();
      auto n = mk(NodeKind::Inv, pos);
      n->kids.push_back(std::move(base));
      base = std::move(n);
    }
    return base;
  }

  // A constructor argument: an atom with optional '^-1' postfixes. Anything
  // looser must be parenthesized.
  std::unique_ptr<Node> parse_arg() { return parse_post(parse_atom()); }

  Coord parse_int() {
    if (!at(Tok::Int)) err("expected an integer");
    return take().num;
  }

  std::unique_ptr<Node> parse_app() {
    int pos = peek().pos;
    if (at(Tok::Ident)) {
      const std::string& w = peek().text;
      auto unary_ctor = [&](NodeKind kind) {
        take();
        auto n = mk(kind, pos);
        n->kids.push_back(parse_arg());
        return n;
      };
      if (w == "up") return unary_ctor(NodeKind::Up);
      if (w == "down") return unary_ctor(NodeKind::Down);
      if (w == "sdown") return unary_ctor(NodeKind::Sdown);
      if (w == "updown") return unary_ctor(NodeKind::Updown);
      if (w == "singleton") return unary_ctor(NodeKind::Singleton);
      if (w == "O") return unary_ctor(NodeKind::OWedge);
      if (w == "phi") return unary_ctor(NodeKind::Phi);
      if (w == "psi") return unary_ctor(NodeKind::Psi);
      if (w == "quad") {
        take();
        auto n = mk(NodeKind::Quad, pos);
        n->num = parse_int();
        return n;
      }
      if (w == "nbhd") {
        take();
        if (!at(Tok::Ident)) err("expected a family name");
        auto fam = family_from_name(peek().text);
        if (!fam) expr_detail::raise(src_, peek().pos,
                                     "unknown family name '" + peek().text +
                                         "'");
        take();
        auto n = mk(NodeKind::Nbhd, pos);
        n->fam = *fam;
        n->kids.push_back(parse_arg());
        n->num = parse_int();
        return n;
      }
      auto binary_ctor = [&](NodeKind kind) {
        take();
        auto n = mk(kind, pos);
        n->kids.push_back(parse_arg());
        n->kids.push_back(parse_arg());
        return n;
      };
      if (w == "rshift") return binary_ctor(NodeKind::Rshift);
      if (w == "lshift") return binary_ctor(NodeKind::Lshift);
      if (w == "prod") return binary_ctor(NodeKind::ProdOp);
      if (w == "rpre") return binary_ctor(NodeKind::Rpre);
      if (w == "lpre") return binary_ctor(NodeKind::Lpre);
    }
    return parse_atom();
  }

  Bound parse_bound() {
    if (at(Tok::NegInf)) {
      take();
      return Bound::neg_inf();
    }
    if (at(Tok::PosInf)) {
      take();
      return Bound::pos_inf();
    }
    if (at(Tok::Int)) return Bound::of(take().num);
    err("expected an integer, -inf, or +inf");
  }

  IntervalZ parse_cell_atom(const char* axis) {
    if (!at_ident(axis))
      err(std::string("expected '") + axis + "' in cell literal");
    take();
    if (!at_ident("in")) err("expected 'in' in cell literal");
    take();
    expect(Tok::LBracket, "expected '['");
    Bound lo = parse_bound();
    expect(Tok::Comma, "expected ','");
    Bound hi = parse_bound();
    expect(Tok::RBracket, "expected ']'");
    return {lo, hi};
  }

  std::unique_ptr<Node> parse_atom() {
    int pos = peek().pos;
    if (at(Tok::LParen)) {
      // "(int ," opens an element literal; anything else is grouping.
      if (peek(1).kind == Tok::Int && peek(2).kind == Tok::Comma) {
        take();
        Coord i = parse_int();
        expect(Tok::Comma, "expected ','");
        Coord j = parse_int();
        expect(Tok::RParen, "expected ')'");
        auto n = mk(NodeKind::Elem, pos);
        n->elem = {i, j};
        return n;
      }
      take();
      auto n = parse_pred();
      expect(Tok::RParen, "expected ')'");
      return n;
    }
    if (at(Tok::LBrace)) {
      take();
      auto n = mk(NodeKind::CellLit, pos);
      n->cell.x = parse_cell_atom("x");
      expect(Tok::Semi, "expected ';'");
      n->cell.y = parse_cell_atom("y");
      expect(Tok::Semi, "expected ';'");
      n->cell.d = parse_cell_atom("d");
      expect(Tok::RBrace, "expected '}'");
      return n;
    }
    if (at_ident("E")) {
      take();
      return mk(NodeKind::AllElements, pos);
    }
    if (at_ident("IZ")) {
      take();
      return mk(NodeKind::IZ, pos);
    }
    if (at_ident("empty")) {
      take();
      return mk(NodeKind::EmptyLit, pos);
    }
    if (at(Tok::Ident))
      err("unexpected identifier '" + peek().text + "'");
    err("expected an expression");
  }

  std::string src_;
  std::vector<expr_detail::Token> toks_;
  std::size_t k_ = 0;
};

namespace expr_detail {

inline int prec(const Node& n) {
  switch (n.kind) {
    case NodeKind::InPred:
    case NodeKind::SubsetPred:
    case NodeKind::EqPred:
    case NodeKind::IsEmptyPred:
      return 0;
    case NodeKind::Union:
      return 1;
    case NodeKind::Inter:
    case NodeKind::DiffOp:
      return 2;
    case NodeKind::Compl:
      return 3;
    case NodeKind::Mul:
      return 4;
    case NodeKind::Inv:
      return 5;
    case NodeKind::Phi:
    case NodeKind::Psi:
    case NodeKind::Up:
    case NodeKind::Down:
    case NodeKind::Sdown:
    case NodeKind::Updown:
    case NodeKind::Singleton:
    case NodeKind::OWedge:
    case NodeKind::Quad:
    case NodeKind::Nbhd:
    case NodeKind::Rshift:
    case NodeKind::Lshift:
    case NodeKind::ProdOp:
    case NodeKind::Rpre:
    case NodeKind::Lpre:
      return 6;
    default:
      return 7;
  }
}

}  // namespace expr_detail

// Prints the normalized form: parse(print(parse(s))) reproduces the tree.
inline std::string print_expr(const Node& n, int need = 0) {
  using expr_detail::prec;
  auto wrap = [&](const std::string& s) {
    return prec(n) < need ? "(" + s + ")" : s;
  };
  auto kid = [&n](std::size_t k, int kneed) {
    return print_expr(*n.kids[k], kneed);
  };
  switch (n.kind) {
    case NodeKind::Elem:
      return n.elem.str();
    case NodeKind::Mul:
      return wrap(kid(0, 4) + "*" + kid(1, 5));
    case NodeKind::Inv:
      return wrap(kid(0, 6) + "^-1");
    case NodeKind::Phi:
      return wrap("phi " + kid(0, 7));
    case NodeKind::Psi:
      return wrap("psi " + kid(0, 7));
    case NodeKind::Up:
      return wrap("up " + kid(0, 7));
    case NodeKind::Down:
      return wrap("down " + kid(0, 7));
    case NodeKind::Sdown:
      return wrap("sdown " + kid(0, 7));
    case NodeKind::Updown:
      return wrap("updown " + kid(0, 7));
    case NodeKind::Singleton:
      return wrap("singleton " + kid(0, 7));
    case NodeKind::AllElements:
      return "E";
    case NodeKind::IZ:
      return "IZ";
    case NodeKind::EmptyLit:
      return "empty";
    case NodeKind::Quad:
      return wrap("quad " + std::to_string(n.num));
    case NodeKind::OWedge:
      return wrap("O " + kid(0, 7));
    case NodeKind::Nbhd:
      return wrap(std::string("nbhd ") + family_name(n.fam) + " " +
                  kid(0, 7) + " " + std::to_string(n.num));
    case NodeKind::Union:
      return wrap(kid(0, 1) + " | " + kid(1, 2));
    case NodeKind::Inter:
      return wrap(kid(0, 2) + " & " + kid(1, 3));
    case NodeKind::DiffOp:
      return wrap(kid(0, 2) + " \\ " + kid(1, 3));
    case NodeKind::Compl:
      return wrap("!" + kid(0, 3));
    case NodeKind::Rshift:
      return wrap("rshift " + kid(0, 7) + " " + kid(1, 7));
    case NodeKind::Lshift:
      return wrap("lshift " + kid(0, 7) + " " + kid(1, 7));
    case NodeKind::ProdOp:
      return wrap("prod " + kid(0, 7) + " " + kid(1, 7));
    case NodeKind::Rpre:
      return wrap("rpre " + kid(0, 7) + " " + kid(1, 7));
    case NodeKind::Lpre:
      return wrap("lpre " + kid(0, 7) + " " + kid(1, 7));
    case NodeKind::InPred:
      return wrap(kid(0, 1) + " in " + kid(1, 1));
    case NodeKind::SubsetPred:
      return wrap(kid(0, 1) + " subset " + kid(1, 1));
    case NodeKind::EqPred:
      return wrap(kid(0, 1) + " == " + kid(1, 1));
    case NodeKind::IsEmptyPred:
      return wrap("isempty " + kid(0, 1));
    case NodeKind::CellLit:
      return to_string(n.cell);
  }
  return "?";
}

namespace expr_detail {

[[noreturn]] inline void type_err(const std::string& src, const Node& n,
                                  const std::string& msg) {
  raise(src, n.pos, msg);
}

inline Element want_element(const std::string& src, const Node& n,
                            const Value& v, const char* what) {
  if (const Element* e = std::get_if<Element>(&v)) return *e;
  type_err(src, n, std::string(what) + " expects an element");
}

inline Region want_region(const std::string& src, const Node& n,
                          const Value& v, const char* what) {
  if (const Region* r = std::get_if<Region>(&v)) return *r;
  if (const Element* e = std::get_if<Element>(&v)) return Region::point(*e);
  type_err(src, n, std::string(what) + " expects a region");
}

}  // namespace expr_detail

// Evaluates a parsed expression. Total on well-typed input; type errors
// carry the source span of the offending node. Bare elements coerce to
// singleton regions where a region is required.
inline Value eval_expr(const std::string& src, const Node& n) {
  using expr_detail::want_element;
  using expr_detail::want_region;
  auto kid = [&src, &n](std::size_t k) { return eval_expr(src, *n.kids[k]); };
  auto elem_kid = [&](std::size_t k, const char* what) {
    return want_element(src, *n.kids[k], kid(k), what);
  };
  auto region_kid = [&](std::size_t k, const char* what) {
    return want_region(src, *n.kids[k], kid(k), what);
  };
  switch (n.kind) {
    case NodeKind::Elem:
      return n.elem;
    case NodeKind::Mul:
      return multiply(elem_kid(0, "'*'"), elem_kid(1, "'*'"));
    case NodeKind::Inv:
      return invert(elem_kid(0, "'^-1'"));
    case NodeKind::Phi:
      return phi(elem_kid(0, "phi"));
    case NodeKind::Psi:
      return psi(elem_kid(0, "psi"));
    case NodeKind::Up:
      return up_set(elem_kid(0, "up"));
    case NodeKind::Down:
      return down_set(elem_kid(0, "down"));
    case NodeKind::Sdown:
      return strict_down_set(elem_kid(0, "sdown"));
    case NodeKind::Updown:
      return updown_set(elem_kid(0, "updown"));
    case NodeKind::Singleton:
      return Region::point(elem_kid(0, "singleton"));
    case NodeKind::AllElements:
      return Region::all();
    case NodeKind::IZ:
      return iz_region();
    case NodeKind::EmptyLit:
      return Region::empty();
    case NodeKind::Quad:
      return quadrant(n.num);
    case NodeKind::OWedge:
      return o_wedge(elem_kid(0, "O"));
    case NodeKind::Nbhd: {
      if (n.num < min_index)
        expr_detail::type_err(src, n, "nbhd index must be >= 1");
      return basic(n.fam, elem_kid(0, "nbhd"), n.num);
    }
    case NodeKind::Union:
      return unite(region_kid(0, "'|'"), region_kid(1, "'|'"));
    case NodeKind::Inter:
      return intersect(region_kid(0, "'&'"), region_kid(1, "'&'"));
    case NodeKind::DiffOp:
      return difference(region_kid(0, "'\\'"), region_kid(1, "'\\'"));
    case NodeKind::Compl:
      return complement(region_kid(0, "'!'"));
    case NodeKind::Rshift:
      return translate_right(region_kid(0, "rshift"),
                             elem_kid(1, "rshift"));
    case NodeKind::Lshift:
      return translate_left(elem_kid(0, "lshift"), region_kid(1, "lshift"));
    case NodeKind::ProdOp:
      return product(region_kid(0, "prod"), region_kid(1, "prod"));
    case NodeKind::Rpre:
      return preimage_right(region_kid(0, "rpre"), elem_kid(1, "rpre"));
    case NodeKind::Lpre:
      return preimage_left(elem_kid(0, "lpre"), region_kid(1, "lpre"));
    case NodeKind::InPred:
      return member(region_kid(1, "'in'"), elem_kid(0, "'in'"));
    case NodeKind::SubsetPred:
      return is_subset(region_kid(0, "subset"), region_kid(1, "subset"));
    case NodeKind::EqPred: {
      Value a = kid(0), b = kid(1);
      if (std::holds_alternative<Element>(a) &&
          std::holds_alternative<Element>(b))
        return std::get<Element>(a) == std::get<Element>(b);
      return equals(want_region(src, *n.kids[0], a, "'=='"),
                    want_region(src, *n.kids[1], b, "'=='"));
    }
    case NodeKind::IsEmptyPred:
      return is_empty(region_kid(0, "isempty"));
    case NodeKind::CellLit:
      return Region::of_cell(n.cell);
  }
  expr_detail::type_err(src, n, "unhandled expression");
}

inline Value eval_text(const std::string& text) {
  Parser p(text);
  auto ast = p.parse();
  return eval_expr(text, *ast);
}

inline std::string value_str(const Value& v) {
  if (const Element* e = std::get_if<Element>(&v)) return e->str();
  if (const Region* r = std::get_if<Region>(&v)) return to_string(*r);
  return std::get<bool>(v) ? "true" : "false";
}

}  // namespace czlab
