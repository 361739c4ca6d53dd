#include "opalg/report.hpp"

namespace opalg {

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string AxiomReport::summary() const {
  if (failures.empty())
    return "ok (" + std::to_string(checked) + " instances" +
           (skipped ? ", " + std::to_string(skipped) + " beyond caps" : std::string()) + ")";
  std::string s = std::to_string(failures.size()) + " failure(s); first: " + failures[0].diagram + " at " +
                  failures[0].tuple;
  if (!failures[0].detail.empty()) s += " (" + failures[0].detail + ")";
  return s;
}

}  // namespace opalg
