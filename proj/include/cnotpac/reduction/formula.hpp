#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cnotpac/f2/bit_vector.hpp"

namespace cnotpac::red {

using f2::BitVector;

/// CNF with at most three literals per clause. Literal +i is x_i, -i is not x_i
/// (1-based).
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  /// Throws PreconditionViolation on an empty clause list, an empty or
  /// over-long clause or an out-of-range literal.
  void validate() const;
  /// bit i-1 of the assignment is x_i.
  bool satisfied_by(const BitVector& assignment) const;
};

/// Arithmetic formula over GF(2): constants, variables, sums and products.
class ArithFormula {
 public:
  enum class Kind : std::uint8_t { Constant, Variable, Sum, Product };

  static ArithFormula constant(bool c);
  static ArithFormula variable(std::size_t index);  // 1-based
  static ArithFormula sum(ArithFormula l, ArithFormula r);
  static ArithFormula product(ArithFormula l, ArithFormula r);

  Kind kind() const { return node_->kind; }
  bool value() const { return node_->value; }
  std::size_t index() const { return node_->index; }
  const ArithFormula& left() const { return *node_->left; }
  const ArithFormula& right() const { return *node_->right; }

  /// Largest variable index used (0 if none).
  std::size_t max_variable() const;
  /// Fully parenthesised where needed, e.g. "x1*(x2+x3)+x3*x4".
  std::string to_string() const;

  bool operator==(const ArithFormula& o) const;

 private:
  struct Node {
    Kind kind;
    bool value = false;
    std::size_t index = 0;
    std::shared_ptr<const ArithFormula> left, right;
  };
  explicit ArithFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Clause (l1 v l2 v l3) -> 1 + prod(1 + l_i) with not-x -> 1 + x; unit clauses
/// map to the literal itself; the conjunction is the product of clauses.
ArithFormula arithmetize_cnf(const CnfFormula& f);

/// Throws PreconditionViolation if the assignment misses a variable.
bool eval_formula(const ArithFormula& f, const BitVector& assignment);

/// Grammar: sum := prod ('+' prod)*; prod := atom ('*'? atom)*;
/// atom := 'x' digits | '0' | '1' | '(' sum ')'. Whitespace is ignored.
ArithFormula parse_formula(const std::string& text);

}  // namespace cnotpac::red
