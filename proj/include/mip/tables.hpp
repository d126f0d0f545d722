#pragma once

// Named table suites: each recomputes a set of quantities and sets them
// beside the values in reference_values.hpp, one cell at a time.

#include <string>
#include <vector>

#include "mip/caps.hpp"
#include "mip/iso.hpp"
#include "mip/modalg.hpp"

namespace mip {

struct TableCell {
  std::string row, column;
  std::string computed, expected;
  bool pass = false;
};

struct TableReport {
  std::string name, title;
  std::vector<TableCell> cells;

  bool all_pass() const;
  std::size_t failures() const;
  /// Aligned columns: row, column, computed, expected, PASS/FAIL.
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

/// table2, table3, table4, hh1, example-d8q8, broche, jennings.
const std::vector<std::string>& table_names();
/// Throws InvalidArgument for an unknown name.
TableReport run_table(const std::string& name, const Caps& caps = {});

/// Lambda = Delta/Delta^3 of F D8 and Gamma = Delta/Delta^3 of F Q8, with
/// the ambient group algebras kept for coordinates.
struct LambdaGamma {
  GroupAlgebra fd8, fq8;
  QuotientAlgebra lambda, gamma;
};
LambdaGamma lambda_gamma(const FiniteField& F);

/// Gamma -> Lambda sending x = i-1 to a = r-1 and y = j-1 to omega*a + b,
/// b = s-1. Verifies over F_4 with omega a root of t^2 + t + 1.
IsoWitness explicit_lambda_gamma_witness(const LambdaGamma& lg, Scalar omega);

}  // namespace mip
