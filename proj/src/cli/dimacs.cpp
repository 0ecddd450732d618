#include "cnotpac/cli/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "cnotpac/error.hpp"

namespace cnotpac::io {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool to_long(std::string_view s, long& v) {
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  return r.ec == std::errc() && r.ptr == end;
}

}  // namespace

red::CnfFormula parse_dimacs(std::string_view text) {
  red::CnfFormula f;
  bool header = false;
  long declared = 0;
  std::size_t header_line = 0, line_no = 0, clause_line = 0;
  std::vector<int> clause;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == 'c') continue;
    if (tok[0] == "%") break;
    if (tok[0] == "p") {
      long v = 0;
      if (header) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf" || !to_long(tok[2], v) || !to_long(tok[3], declared) || v < 0 ||
          declared < 0)
        throw ParseError(line_no, "malformed problem line, expected \"p cnf <vars> <clauses>\"");
      f.num_vars = static_cast<std::size_t>(v);
      header = true;
      header_line = line_no;
      continue;
    }
    if (!header) throw ParseError(line_no, "expected \"p cnf <vars> <clauses>\" before the clauses");
    for (auto t : tok) {
      long lit = 0;
      if (!to_long(t, lit)) throw ParseError(line_no, "invalid literal \"" + std::string(t) + "\"");
      if (clause.empty()) clause_line = line_no;
      if (lit == 0) {
        if (clause.empty()) throw ParseError(line_no, "empty clause");
        f.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > f.num_vars)
        throw ParseError(line_no, "literal " + std::to_string(lit) + " exceeds the declared " +
                                      std::to_string(f.num_vars) + " variables");
      clause.push_back(static_cast<int>(lit));
      if (clause.size() > 3) throw ParseError(clause_line, "clause has more than 3 literals");
    }
  }
  if (!header) throw ParseError(1, "missing \"p cnf <vars> <clauses>\" line");
  if (!clause.empty()) f.clauses.push_back(clause);
  if (f.clauses.size() != static_cast<std::size_t>(declared))
    throw ParseError(header_line, "header declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(f.clauses.size()));
  try {
    f.validate();
  } catch (const PreconditionViolation& e) {
    throw ParseError(header_line, e.what());
  }
  return f;
}

}  // namespace cnotpac::io
