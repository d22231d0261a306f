#pragma once

#include "agt/corpus.hpp"
#include "agt/io.hpp"

// Schema-stable JSON classification reports. Field order is fixed so that
// identical inputs and seeds produce byte-identical output.

namespace agt {

struct ReportOptions {
  uint32_t prime = 101;
  uint64_t seed = 1;
  uint64_t cap = 2000000;
  int samples = 200;
  int dimCap = FiniteAlgebra::kDefaultDimCap;
};

json buildReport(const MonomialIdeal& I, const ReportOptions& opt);
json batchReport(const std::vector<MonomialIdeal>& ideals, const ReportOptions& opt);
json huntReport(const std::vector<HuntResult>& results);

}  // namespace agt
