#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "affgr/checked.hpp"

namespace affgr {

struct SelftestOptions {
  Int box = 4;            // coweight box for criteria 1, 2, 4, 5, 6, 9
  Int braid_box = 8;      // braid table verification
  Int g2_braid_box = 6;   // exploratory G2 scan
  Int component_box = 3;  // component bijection
  int eta_samples = 1000;
  std::uint32_t seed = 20240611;
  std::string report_path;  // exploratory report; empty disables the file
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool exploratory = false;
  double seconds = 0;
  std::string detail;
  std::vector<std::string> findings;
};

using CriterionFn = CriterionResult (*)(const SelftestOptions&);

/// Criterion functions, indexed 1..10.
CriterionResult criterion_oracle_equivalence(const SelftestOptions& opt);
CriterionResult criterion_boundary_examples(const SelftestOptions& opt);
CriterionResult criterion_braid_tables(const SelftestOptions& opt);
CriterionResult criterion_same_chamber(const SelftestOptions& opt);
CriterionResult criterion_dimension(const SelftestOptions& opt);
CriterionResult criterion_covers(const SelftestOptions& opt);
CriterionResult criterion_component_bijection(const SelftestOptions& opt);
CriterionResult criterion_dual_weights(const SelftestOptions& opt);
CriterionResult criterion_moment_polytope(const SelftestOptions& opt);
CriterionResult criterion_exploratory(const SelftestOptions& opt);

const std::vector<CriterionFn>& acceptance_criteria();

/// Runs every criterion in order, calling on_result after each.
std::vector<CriterionResult> run_selftest(const SelftestOptions& opt,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 braid tables (1.2 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace affgr
