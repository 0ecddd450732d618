#pragma once

#include <string_view>

#include "cnotpac/reduction/formula.hpp"

namespace cnotpac::io {

/// DIMACS CNF: 'c' comment lines, a `p cnf V C` header, clauses terminated
/// by 0 (possibly spanning lines; the terminator may be left off the last
/// one), and an optional '%' end marker. Clauses longer than three literals,
/// empty clauses, out-of-range literals and a clause count that differs from
/// the header are errors. ParseError carries the 1-based line.
red::CnfFormula parse_dimacs(std::string_view text);

}  // namespace cnotpac::io
