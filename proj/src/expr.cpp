#include "charbasis/expr.hpp"

#include <cctype>

namespace charbasis {

ParseError::ParseError(const std::string& message, std::size_t position)
    : InvalidInput(message + " at position " + std::to_string(position)), position_(position) {}

std::string Expr::to_string() const {
  auto list = [&](std::string_view name) {
    std::string s(name);
    s += "(";
    for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i]->to_string();
    return s + ")";
  };
  switch (kind) {
    case Kind::kAtom: return "Atom(" + std::string(charbasis::to_string(basis)) + "," + index.to_string() + ")";
    case Kind::kInteger: return value.get_str();
    case Kind::kProduct: return list("Product");
    case Kind::kKronecker: return list("Kronecker");
    case Kind::kScale: return "Scale(" + value.get_str() + "," + children.front()->to_string() + ")";
  }
  return "?";
}

namespace {

using Node = std::shared_ptr<const Expr>;

std::shared_ptr<Expr> make(Expr::Kind kind) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node e = kronecker();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  std::pair<Basis, Partition> atom_only() {
    skip();
    auto [basis, index] = atom();
    skip();
    if (pos_ != text_.size()) fail("expected a single basis element");
    return {basis, index};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node kronecker() {
    std::vector<Node> parts{product()};
    while (accept('@')) parts.push_back(product());
    if (parts.size() == 1) return parts.front();
    auto e = make(Expr::Kind::kKronecker);
    e->children = std::move(parts);
    return e;
  }

  Node product() {
    std::vector<Node> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return factors.front();
    Integer scalar = 1;
    bool scaled = false;
    std::vector<Node> rest;
    for (auto& f : factors) {
      if (f->kind == Expr::Kind::kInteger) {
        scalar *= f->value;
        scaled = true;
      } else {
        rest.push_back(f);
      }
    }
    Node body;
    if (rest.empty()) {
      auto lit = make(Expr::Kind::kInteger);
      lit->value = scalar;
      return lit;
    }
    if (rest.size() == 1) {
      body = rest.front();
    } else {
      auto p = make(Expr::Kind::kProduct);
      p->children = std::move(rest);
      body = p;
    }
    if (!scaled) return body;
    auto s = make(Expr::Kind::kScale);
    s->value = scalar;
    s->children = {body};
    return s;
  }

  Node factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Node e = kronecker();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto e = make(Expr::Kind::kInteger);
      e->value = Integer(std::string(text_.substr(start, pos_ - start)));
      return e;
    }
    auto [basis, index] = atom();
    auto e = make(Expr::Kind::kAtom);
    e->basis = basis;
    e->index = std::move(index);
    return e;
  }

  std::pair<Basis, Partition> atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    Basis basis;
    try {
      basis = parse_basis(name);
    } catch (const InvalidInput&) {
      pos_ = start;
      fail(name.empty() ? "expected a basis element or integer" : "unknown basis '" + name + "'");
    }
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '['");
    std::size_t open = pos_;
    std::size_t close = text_.find(']', open);
    if (close == std::string_view::npos) fail("missing ']'");
    try {
      Partition index = Partition::parse(text_.substr(open, close - open + 1));
      pos_ = close + 1;
      return {basis, index};
    } catch (const InvalidInput& e) {
      pos_ = open;
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::shared_ptr<const Expr> parse_expr(std::string_view text) { return Parser(text).parse(); }

std::pair<Basis, Partition> parse_atom(std::string_view text) { return Parser(text).atom_only(); }

SymExpr evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kAtom: return SymExpr::atom(e.basis, e.index);
    case Expr::Kind::kInteger: return SymExpr::constant(Rational(e.value));
    case Expr::Kind::kScale: return evaluate(*e.children.front()) * Rational(e.value);
    case Expr::Kind::kProduct: {
      SymExpr out = evaluate(*e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) out = multiply(out, evaluate(*e.children[i]));
      return out;
    }
    case Expr::Kind::kKronecker: {
      SymExpr out = evaluate(*e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        SymExpr next = evaluate(*e.children[i]);
        const SymExpr a = change_basis(out, Basis::kH);
        const SymExpr b = change_basis(next, Basis::kH);
        if (!a.homogeneous() || !b.homogeneous())
          throw InvalidInput("Kronecker product needs homogeneous factors");
        if (a.degree() != b.degree())
          throw InvalidInput("Kronecker product of degrees " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
        out = kronecker_product(out, next);
      }
      return out;
    }
  }
  throw InvalidInput("bad expression");
}

SymExpr evaluate(std::string_view text) { return evaluate(*parse_expr(text)); }

}  // namespace charbasis
