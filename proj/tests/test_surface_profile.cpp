#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "stmax/errors.hpp"
#include "stmax/profile_io.hpp"
#include "stmax/surface_profile.hpp"

using namespace stmax;

namespace {

SurfaceProfile k3_two_components() {
  SurfaceProfile p;
  p.name = "k3";
  p.betti_f2 = {1, 0, 22, 0, 1};
  p.hodge = HodgeNumbers{0, 1, 20};
  p.real_components = {RealComponent::orientable_genus(10), RealComponent::sphere()};
  return p;
}

}  // namespace

TEST_CASE("component invariants") {
  CHECK(RealComponent::sphere().beta1() == 0);
  CHECK(RealComponent::sphere().beta_star() == 2);
  CHECK(RealComponent::sphere().euler() == 2);
  CHECK(RealComponent::orientable_genus(3).beta1() == 6);
  CHECK(RealComponent::orientable_genus(3).euler() == -4);
  CHECK(RealComponent::nonorientable_crosscaps(1).beta1() == 1);
  CHECK(RealComponent::nonorientable_crosscaps(1).beta_star() == 3);
  CHECK(RealComponent::nonorientable_crosscaps(2).euler() == 0);
  CHECK(RealComponent::nonorientable_crosscaps(10).beta_star() == 12);
}

TEST_CASE("profile aggregates") {
  SurfaceProfile p = k3_two_components();
  CHECK(p.beta_star() == 24);
  CHECK(p.beta1() == 0);
  CHECK(p.euler() == 24);

  RealInvariants ri = derive_real_invariants(p);
  CHECK(ri.components == 2);
  CHECK(ri.beta_star == 24);
  CHECK(ri.beta1 == 20);
  CHECK(ri.euler == -16);
}

TEST_CASE("validation accepts the good and names the bad") {
  CHECK(validate(k3_two_components()).empty());

  SurfaceProfile p = k3_two_components();
  p.betti_f2[0] = 2;
  auto v = validate(p);
  REQUIRE(!v.empty());
  CHECK(v[0].find("betti_f2") != std::string::npos);

  p = k3_two_components();
  p.betti_f2[3] = 1;  // breaks b1 = b3 duality
  CHECK(!validate(p).empty());

  p = k3_two_components();
  p.real_components[0].genus_or_crosscaps = -1;
  CHECK(!validate(p).empty());

  p = k3_two_components();
  p.real_components[1] = RealComponent::nonorientable_crosscaps(0);
  CHECK(!validate(p).empty());

  p = k3_two_components();
  p.hodge = HodgeNumbers{0, 1, -3};
  CHECK(!validate(p).empty());

  p = k3_two_components();
  p.hodge = HodgeNumbers{1, 2, 20};  // b1 = 0 forces h10 = 0
  CHECK(!validate(p).empty());

  p = k3_two_components();
  p.rank_mu_hint = RankMuHint{-2, "negative"};
  CHECK(!validate(p).empty());

  CHECK_THROWS_AS(require_valid(p), ValidationError);
}

TEST_CASE("empty real locus is legal input") {
  SurfaceProfile p;
  p.name = "imaginary-quadric";
  p.betti_f2 = {1, 0, 2, 0, 1};
  CHECK(validate(p).empty());
  RealInvariants ri = derive_real_invariants(p);
  CHECK(ri.components == 0);
  CHECK(ri.beta_star == 0);
}

TEST_CASE("profile files round-trip") {
  SurfaceProfile p = k3_two_components();
  p.tors2_h1 = false;
  p.tors2_hstar = false;
  p.rank_mu_hint = RankMuHint{5, "a note with spaces"};

  std::string text = render_profile(p);
  std::istringstream in(text);
  SurfaceProfile q = parse_profile(in);
  CHECK(p == q);
}

TEST_CASE("document round-trip carries facts") {
  ProfileDocument doc;
  doc.profile = k3_two_components();
  doc.facts.beta_star_hilb2 = 154;
  doc.facts.rank_mu_lower_bound = 6;

  std::string text = render_profile_document(doc);
  std::istringstream in(text);
  ProfileDocument back = parse_profile_document(in);
  CHECK(doc == back);
}

TEST_CASE("parser diagnostics carry the line and the field") {
  std::istringstream bad("name = x\nbetti_f2 = 1, 2, 3\n");
  try {
    parse_profile(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("betti_f2") != std::string::npos);
  }

  std::istringstream unknown("name = x\nbogus_key = 1\n");
  CHECK_THROWS_AS(parse_profile(unknown), ParseError);

  std::istringstream stray("orientable = true\n");
  CHECK_THROWS_AS(parse_profile(stray), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# a real quadric\n"
      "name = quadric\n"
      "\n"
      "betti_f2 = 1, 0, 2, 0, 1\n"
      "[component]\n"
      "# the sphere\n"
      "orientable = true\n"
      "genus_or_crosscaps = 0\n");
  SurfaceProfile p = parse_profile(in);
  CHECK(p.name == "quadric");
  CHECK(p.real_components.size() == 1);
  CHECK(p.real_components[0] == RealComponent::sphere());
}
