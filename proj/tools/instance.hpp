#pragma once

// Instance files for the command line tool: a free O-algebra on labelled
// generators, an optional MC element g, optional gauge coefficients and a
// module choice for the Atiyah command.

#include <string>
#include <vector>

#include "opalg/curvature.hpp"

namespace cli {

using namespace opalg;

struct RunConfig {
  int arity_cap = 4;
  int weight_cap = 4;
  int deg_lo = -2, deg_hi = 3;
  int order = 2;
  bool strict = false;
};

struct Instance {
  std::string name;
  OperadPtr operad;
  FreeAlgebra F;
  MCElement g;                 // zero when the file has no "differential"
  bool has_g = false;
  std::vector<GradedMap> xi;   // ξ(t) coefficients, degree 0
  std::string module = "free"; // free | kahler | universal
  Complex module_generators;   // W for the free module
};

// Operad files have schema "opalg.operad/1"; everything else goes through
// read_instance.
std::string schema_of(const std::string& text);
OperadPtr operad_by_name(const std::string& name, int arity_cap, bool strict);
Instance read_instance(const std::string& text, const RunConfig& cfg);
std::string read_file(const std::string& path);

}  // namespace cli
