#pragma once

#include <string>
#include <vector>

#include "stmax/hilb_square.hpp"
#include "stmax/surface_profile.hpp"

namespace stmax {

// A named surface profile with externally established facts and the verdict
// its Hilbert square is known to satisfy. Shipped entries never expect
// Unknown; descriptive notes carry context the engine does not compute.
struct CatalogEntry {
  std::string name;
  SurfaceProfile profile;
  Hilb2Facts facts;
  Decision expected_decision = Decision::Unknown;
  std::string expected_rule;
  std::vector<std::string> notes;
};

struct CatalogResult {
  CatalogEntry entry;
  Hilb2Report computed;
  bool agree = false;
};

const std::vector<CatalogEntry>& builtin_catalog();

// Runs the verdict engine over every entry; agree compares decision and rule.
std::vector<CatalogResult> run_catalog();

}  // namespace stmax
