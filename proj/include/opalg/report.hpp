#pragma once

#include <string>
#include <vector>

namespace opalg {

struct AxiomFailure {
  std::string diagram;  // stable identifier, e.g. "operad.assoc"
  std::string tuple;    // arity tuple and basis indices that failed
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  long long checked = 0;  // number of diagram instances evaluated
  long long skipped = 0;  // instances that needed data beyond the caps
  bool ok() const { return failures.empty(); }
  void fail(std::string diagram, std::string tuple, std::string detail = "") {
    failures.push_back({std::move(diagram), std::move(tuple), std::move(detail)});
  }
  void merge(const AxiomReport& o) {
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    checked += o.checked;
    skipped += o.skipped;
  }
  std::string summary() const;
};

std::string join_ints(const std::vector<int>& v, const std::string& sep = ",");

}  // namespace opalg
