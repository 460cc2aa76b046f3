#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "charbasis/combinatorics.hpp"
#include "charbasis/symfunc.hpp"

namespace charbasis {

/// Malformed expression text; `position` is a zero-based offset.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Expression tree. `*` is the ordinary product and binds tighter than the
/// Kronecker product `@`. Integer factors of a product collect into Scale.
struct Expr {
  enum class Kind { kAtom, kInteger, kProduct, kKronecker, kScale };

  Kind kind = Kind::kAtom;
  Basis basis = Basis::kH;  // kAtom
  Partition index;          // kAtom
  Integer value;            // kInteger, kScale
  std::vector<std::shared_ptr<const Expr>> children;

  /// Compact structural form, e.g. Product(Atom(h,[2,1]),Atom(st,[2,2])).
  std::string to_string() const;
};

std::shared_ptr<const Expr> parse_expr(std::string_view text);
/// Kronecker factors must be homogeneous of one degree; throws InvalidInput otherwise.
SymExpr evaluate(const Expr& e);
/// parse_expr then evaluate.
SymExpr evaluate(std::string_view text);

/// A single basis element such as `st[4]`.
std::pair<Basis, Partition> parse_atom(std::string_view text);

}  // namespace charbasis
