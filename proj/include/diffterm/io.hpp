// Text formats: algebra files, ternary table files, term and certificate
// rendering, and the report records the command line prints.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "diffterm/algebra.hpp"
#include "diffterm/decision.hpp"
#include "diffterm/ternary_table.hpp"

namespace diffterm {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line;
};

// Algebra file form:
//   algebra <name>
//   size <n>
//   op <name> <arity>
//   <n^arity integers, row-major, any whitespace layout>
//   ...
//   end
// `#` starts a comment line. Wrong entry counts, out-of-range entries and
// duplicate operation names are positioned parse errors.
FiniteAlgebra parse_algebra(std::string_view text);
FiniteAlgebra load_algebra_file(const std::string& path);
std::string print_algebra(const FiniteAlgebra& A);

// Ternary table file form: header `dtable <name> <n>` then n^3 integers in
// index order.
struct NamedTernaryTable {
  std::string name;
  TernaryTable table;
};
NamedTernaryTable parse_ternary_table(std::string_view text);
NamedTernaryTable load_ternary_table_file(const std::string& path);
std::string print_ternary_table(std::string_view name, const TernaryTable& t);

// Nested term text for a witness, e.g. "mul(x, mul(y, z))"; generator i is
// printed as names[i].
std::string render_term(const FiniteAlgebra& A, const TermDag& dag, int root,
                        std::span<const std::string> names);

std::string render_certificate(const Certificate& certificate);

// One self-delimiting record per invocation, terminated by a lone `.`. All
// fields except elapsed-ms are deterministic given the inputs.
struct ReportRecord {
  std::string command;
  std::string input;  // source label plus content digest
  std::string verdict;
  std::string certificate;  // empty when absent; required for "no" verdicts
  long long elapsed_ms = 0;
};
std::string render_report(const ReportRecord& r);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace diffterm
