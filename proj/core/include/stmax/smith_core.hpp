#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stmax/surface_profile.hpp"

namespace stmax {

struct SmithReport {
  long long beta_star_x = 0;
  long long beta_star_r = 0;
  long long defect = 0;  // non-negative and even on accepted inputs
  bool maximal = false;
  std::optional<bool> comessatti_ok;
  std::optional<long long> hodge_component_bound;
};

// Total Betti comparison of X and its real locus. Rejects profiles whose
// defect is negative or odd: no involution on any space produces them.
SmithReport smith_defect(const SurfaceProfile& p);

// 2 - (2r - beta1_R) <= h11. Needs Hodge data.
bool comessatti_check(const SurfaceProfile& p);

// Smallest admissible component count of the real locus of ANY maximal real
// structure on X: ceil(1 + h20/2 + h10). Absent when h20 + h10 = 0 (no
// obstruction). Needs Hodge data and 2-torsion-free H1.
std::optional<long long> hodge_obstruction_bound(const SurfaceProfile& p);

// Cross-checks a maximal profile against the component-count bound above.
// Empty result means no contradiction was found.
std::vector<std::string> maximality_consistency_violations(const SurfaceProfile& p);

}  // namespace stmax
