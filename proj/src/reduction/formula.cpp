#include "cnotpac/reduction/formula.hpp"

#include <cctype>
#include <cstdlib>

#include "cnotpac/error.hpp"

namespace cnotpac::red {

void CnfFormula::validate() const {
  if (clauses.empty()) throw PreconditionViolation("CNF has no clauses");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    if (cl.empty()) throw PreconditionViolation("clause " + std::to_string(c + 1) + " is empty");
    if (cl.size() > 3) throw PreconditionViolation("clause " + std::to_string(c + 1) + " has more than 3 literals");
    for (int lit : cl)
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars)
        throw PreconditionViolation("literal " + std::to_string(lit) + " out of range");
  }
}

bool CnfFormula::satisfied_by(const BitVector& a) const {
  for (const auto& cl : clauses) {
    bool sat = false;
    for (int lit : cl) sat |= a.get(static_cast<std::size_t>(std::abs(lit)) - 1) == (lit > 0);
    if (!sat) return false;
  }
  return true;
}

ArithFormula ArithFormula::constant(bool c) {
  return ArithFormula(std::make_shared<const Node>(Node{Kind::Constant, c, 0, nullptr, nullptr}));
}

ArithFormula ArithFormula::variable(std::size_t index) {
  if (index == 0) throw PreconditionViolation("variables are numbered from 1");
  return ArithFormula(std::make_shared<const Node>(Node{Kind::Variable, false, index, nullptr, nullptr}));
}

ArithFormula ArithFormula::sum(ArithFormula l, ArithFormula r) {
  return ArithFormula(std::make_shared<const Node>(Node{Kind::Sum, false, 0, std::make_shared<const ArithFormula>(std::move(l)),
                                                        std::make_shared<const ArithFormula>(std::move(r))}));
}

ArithFormula ArithFormula::product(ArithFormula l, ArithFormula r) {
  return ArithFormula(std::make_shared<const Node>(Node{Kind::Product, false, 0,
                                                        std::make_shared<const ArithFormula>(std::move(l)),
                                                        std::make_shared<const ArithFormula>(std::move(r))}));
}

std::size_t ArithFormula::max_variable() const {
  switch (kind()) {
    case Kind::Constant: return 0;
    case Kind::Variable: return index();
    default: return std::max(left().max_variable(), right().max_variable());
  }
}

std::string ArithFormula::to_string() const {
  switch (kind()) {
    case Kind::Constant: return value() ? "1" : "0";
    case Kind::Variable: return "x" + std::to_string(index());
    case Kind::Sum: return left().to_string() + "+" + right().to_string();
    case Kind::Product: {
      auto wrap = [](const ArithFormula& f) {
        return f.kind() == Kind::Sum ? "(" + f.to_string() + ")" : f.to_string();
      };
      return wrap(left()) + "*" + wrap(right());
    }
  }
  return "";
}

bool ArithFormula::operator==(const ArithFormula& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Constant: return value() == o.value();
    case Kind::Variable: return index() == o.index();
    default: return left() == o.left() && right() == o.right();
  }
}

ArithFormula arithmetize_cnf(const CnfFormula& f) {
  f.validate();
  auto var = [](int lit) { return ArithFormula::variable(static_cast<std::size_t>(std::abs(lit))); };
  auto one = [] { return ArithFormula::constant(true); };
  std::vector<ArithFormula> clauses;
  for (const auto& cl : f.clauses) {
    if (cl.size() == 1) {
      clauses.push_back(cl[0] > 0 ? var(cl[0]) : ArithFormula::sum(one(), var(cl[0])));
      continue;
    }
    // 1 + prod over literals of (1 + lit); for a negated literal 1 + (1 + x) = x.
    std::vector<ArithFormula> factors;
    for (int lit : cl) factors.push_back(lit > 0 ? ArithFormula::sum(one(), var(lit)) : var(lit));
    ArithFormula prod = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) prod = ArithFormula::product(prod, factors[i]);
    clauses.push_back(ArithFormula::sum(one(), prod));
  }
  ArithFormula out = clauses[0];
  for (std::size_t i = 1; i < clauses.size(); ++i) out = ArithFormula::product(out, clauses[i]);
  return out;
}

bool eval_formula(const ArithFormula& f, const BitVector& a) {
  switch (f.kind()) {
    case ArithFormula::Kind::Constant: return f.value();
    case ArithFormula::Kind::Variable:
      if (f.index() > a.size())
        throw PreconditionViolation("assignment has no value for x" + std::to_string(f.index()));
      return a.get(f.index() - 1);
    case ArithFormula::Kind::Sum: return eval_formula(f.left(), a) ^ eval_formula(f.right(), a);
    case ArithFormula::Kind::Product: return eval_formula(f.left(), a) && eval_formula(f.right(), a);
  }
  return false;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "formula column " + std::to_string(pos + 1) + ": " + what);
  }
  bool starts_atom() {
    skip();
    return pos < s.size() && (s[pos] == 'x' || s[pos] == '0' || s[pos] == '1' || s[pos] == '(');
  }

  ArithFormula sum() {
    ArithFormula f = prod();
    for (skip(); pos < s.size() && s[pos] == '+'; skip()) {
      ++pos;
      f = ArithFormula::sum(f, prod());
    }
    return f;
  }

  ArithFormula prod() {
    ArithFormula f = atom();
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        f = ArithFormula::product(f, atom());
      } else if (starts_atom()) {
        f = ArithFormula::product(f, atom());
      } else {
        return f;
      }
    }
  }

  ArithFormula atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of formula");
    const char c = s[pos];
    if (c == '0' || c == '1') {
      ++pos;
      return ArithFormula::constant(c == '1');
    }
    if (c == 'x') {
      ++pos;
      const std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected a variable number after 'x'");
      const auto idx = std::stoul(s.substr(start, pos - start));
      if (idx == 0) fail("variables are numbered from 1");
      return ArithFormula::variable(idx);
    }
    if (c == '(') {
      ++pos;
      ArithFormula f = sum();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      return f;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

ArithFormula parse_formula(const std::string& text) {
  Parser p{text};
  ArithFormula f = p.sum();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

}  // namespace cnotpac::red
