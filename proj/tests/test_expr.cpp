#include <doctest.h>

#include "charbasis/expr.hpp"
#include "charbasis/stable_bases.hpp"

using namespace charbasis;

namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string_view::npos;
}

}  // namespace

TEST_CASE("expression structure") {
  CHECK(parse_expr("h[2,1]*st[2,2]")->to_string() == "Product(Atom(h,[2,1]),Atom(st,[2,2]))");
  CHECK(parse_expr("h[1,1]@h[1,1]")->to_string() == "Kronecker(Atom(h,[1,1]),Atom(h,[1,1]))");
  CHECK(parse_expr("st[]")->to_string() == "Atom(st,[])");
  CHECK(parse_expr(" 2 * ht [ 1 ] ")->to_string() == "Scale(2,Atom(ht,[1]))");
  CHECK(parse_expr("3*2")->to_string() == "6");
  CHECK(parse_expr("s[1]*p[2]@h[3]")->to_string() == "Kronecker(Product(Atom(s,[1]),Atom(p,[2])),Atom(h,[3]))");
  CHECK(parse_expr("s[1]*(p[2]@h[2])")->to_string() == "Product(Atom(s,[1]),Kronecker(Atom(p,[2]),Atom(h,[2])))");
  CHECK(parse_expr("s[1]*p[2]@h[3]")->kind == Expr::Kind::kKronecker);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_expr("h[1,2]"), ParseError);
  CHECK(error_position("h[1,2]") == 1);
  CHECK(error_position("h[1]*") == 5);
  CHECK(error_position("q[1]") == 0);
  CHECK(error_position("h[1] h[2]") == 5);
  CHECK(error_position("(h[1]") == 5);
  CHECK(error_position("h[1") == 1);
  CHECK(error_position("") == 0);
  CHECK_THROWS_AS(parse_expr("h[2]+h[1]"), InvalidInput);
}

TEST_CASE("single atoms") {
  auto [b, l] = parse_atom("st[4]");
  CHECK(b == Basis::kST);
  CHECK(l == Partition{4});
  CHECK_THROWS_AS(parse_atom("st[4]*h[1]"), ParseError);
  CHECK_THROWS_AS(parse_atom("3"), ParseError);
}

TEST_CASE("evaluation") {
  CHECK(change_basis(evaluate("h[2,1]*st[2,2]"), Basis::kST).coeff({4}) == 8);
  CHECK(change_basis(evaluate("ht[2]*ht[1]*st[2,2]"), Basis::kST).coeff({4}) == 7);
  CHECK(change_basis(evaluate("st[2]*st[1]*st[2,2]"), Basis::kST).coeff({4}) == 5);
  CHECK(change_basis(evaluate("ht[2,1]*st[2,2]"), Basis::kST).coeff({4}) == 6);
  CHECK(change_basis(evaluate("st[1]"), Basis::kH) == SymExpr::atom(Basis::kH, {1}) - SymExpr::constant(1));
  CHECK(evaluate("st[]") == SymExpr::atom(Basis::kST, {}));
  CHECK(evaluate("3*h[1]*2") == SymExpr::atom(Basis::kH, {1}, 6));
  CHECK(evaluate("0*h[1]").is_zero());
  CHECK(evaluate("5") == SymExpr::constant(5));
}

TEST_CASE("Kronecker products in expressions") {
  SymExpr k = evaluate("h[1,1]@h[1,1]");
  CHECK(change_basis(k, Basis::kS) == SymExpr::atom(Basis::kS, {2}, 2) + SymExpr::atom(Basis::kS, {1, 1}, 2));
  CHECK(change_basis(evaluate("s[1,1]@s[1,1]@s[2]"), Basis::kS) == SymExpr::atom(Basis::kS, {2}));
  CHECK_THROWS_AS(evaluate("h[2]@h[1]"), InvalidInput);
  // st[1] = h1 - 1 is not homogeneous.
  CHECK_THROWS_AS(evaluate("st[1]@h[1]"), InvalidInput);
}
