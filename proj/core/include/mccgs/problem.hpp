#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mccgs/mccgs.hpp"

namespace mccgs {

class ProblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemOptions {
  int max_factor_degree = 8;
  std::size_t oracle_samples = 200;
  unsigned seed = 1;
};

/// A parametric system as read from a problem file.
struct Problem {
  VarSpace space;
  OrderKind order_x = OrderKind::Lex;
  OrderKind order_a = OrderKind::Lex;
  std::vector<std::string> polys;
  std::vector<std::string> null;
  std::vector<std::string> notnull;
  ProblemOptions options;
};

/// Parses and validates the JSON problem schema. Errors name the field.
Problem parse_problem(std::string_view json_text);
Problem read_problem(std::istream& in);

/// Problem polynomials parsed in their rings.
struct Instance {
  ParametricRings rings;
  std::vector<Poly> F;
  std::vector<Poly> null0;
  std::vector<Poly> notnull0;
};

Instance instantiate(const Problem& p);
MccgsOptions mccgs_options(const ProblemOptions& o);

OrderKind parse_order(std::string_view name);
std::string order_name(OrderKind k);

}  // namespace mccgs
