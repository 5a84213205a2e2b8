#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "stmax/catalog.hpp"
#include "stmax/hilb_square.hpp"
#include "stmax/smith_core.hpp"
#include "stmax/surface_profile.hpp"

using namespace stmax;

TEST_CASE("catalog entries are well-formed") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() >= 12);

  std::set<std::string> names;
  for (const auto& e : cat) {
    CAPTURE(e.name);
    CHECK(!e.name.empty());
    CHECK(names.insert(e.name).second);  // unique names
    CHECK(validate(e.profile).empty());
    CHECK(e.expected_decision != Decision::Unknown);
    CHECK(!e.expected_rule.empty());
    // Every shipped profile describes a realizable surface.
    CHECK_NOTHROW(smith_defect(e.profile));
    CHECK(maximality_consistency_violations(e.profile).empty());
  }
}

TEST_CASE("the verdict engine reproduces every catalog entry") {
  for (const auto& r : run_catalog()) {
    CAPTURE(r.entry.name);
    CHECK(r.agree);
    CHECK(r.computed.verdict.decision == r.entry.expected_decision);
    CHECK(r.computed.verdict.rule == r.entry.expected_rule);
  }
}

TEST_CASE("the catalog spans both verdicts and several rules") {
  std::set<std::string> rules;
  bool has_maximal = false;
  bool has_not_maximal = false;
  for (const auto& e : builtin_catalog()) {
    rules.insert(e.expected_rule);
    has_maximal |= e.expected_decision == Decision::Maximal;
    has_not_maximal |= e.expected_decision == Decision::NotMaximal;
  }
  CHECK(has_maximal);
  CHECK(has_not_maximal);
  CHECK(rules.size() >= 4);
}
