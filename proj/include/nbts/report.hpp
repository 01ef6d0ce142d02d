#pragma once

#include <string>
#include <vector>

#include "nbts/catalog.hpp"

namespace nbts {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct ReproductionReport {
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
};

/// Reconstructs every polytope of the catalog from first principles and
/// checks each reproduction claim exactly: vertex counts, dimensions,
/// family partitions, GYNI exclusion with certificates, facet inclusion
/// and saturation, the set-q family, and the randomized geometry
/// cross-check suite. Deterministic: two runs yield identical output.
ReproductionReport run_reproduction_suite();

/// One "ok"/"FAIL" line per criterion plus its detail.
std::string render_report(const ReproductionReport& report);

}  // namespace nbts
