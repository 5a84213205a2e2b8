#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stmax/errors.hpp"
#include "stmax/smith_core.hpp"
#include "stmax/surface_profile.hpp"

using namespace stmax;

namespace {

SurfaceProfile profile(std::array<long long, 5> b, std::vector<RealComponent> comps) {
  SurfaceProfile p;
  p.name = "t";
  p.betti_f2 = b;
  p.real_components = std::move(comps);
  return p;
}

}  // namespace

TEST_CASE("defect compares total Betti numbers") {
  auto p = profile({1, 0, 22, 0, 1},
                   {RealComponent::orientable_genus(10), RealComponent::sphere()});
  SmithReport rep = smith_defect(p);
  CHECK(rep.beta_star_x == 24);
  CHECK(rep.beta_star_r == 24);
  CHECK(rep.defect == 0);
  CHECK(rep.maximal);

  p.real_components.pop_back();
  rep = smith_defect(p);
  CHECK(rep.defect == 2);
  CHECK(!rep.maximal);
}

TEST_CASE("unrealizable profiles are rejected, not reported") {
  auto over = profile({1, 0, 2, 0, 1}, {RealComponent::orientable_genus(2)});
  CHECK_THROWS_AS(smith_defect(over), ValidationError);  // defect -2

  auto odd = profile({1, 0, 2, 0, 1}, {RealComponent::nonorientable_crosscaps(1)});
  CHECK_THROWS_AS(smith_defect(odd), ValidationError);  // defect 1
}

TEST_CASE("empty real locus has defect beta_star") {
  auto p = profile({1, 0, 2, 0, 1}, {});
  SmithReport rep = smith_defect(p);
  CHECK(rep.defect == 4);
  CHECK(!rep.maximal);
}

TEST_CASE("comessatti inequality") {
  // Maximal K3: r = 2, beta1_R = 20, h11 = 20: 2 - (4 - 20) = 18 <= 20.
  auto p = profile({1, 0, 22, 0, 1},
                   {RealComponent::orientable_genus(10), RealComponent::sphere()});
  p.hodge = HodgeNumbers{0, 1, 20};
  CHECK(comessatti_check(p));

  // 11 spheres: 2 - (22 - 0) <= 20 holds as well.
  std::vector<RealComponent> spheres(11, RealComponent::sphere());
  auto q = profile({1, 0, 22, 0, 1}, spheres);
  q.hodge = HodgeNumbers{0, 1, 20};
  CHECK(comessatti_check(q));

  auto no_hodge = profile({1, 0, 2, 0, 1}, {});
  CHECK_THROWS_AS(comessatti_check(no_hodge), HypothesisError);
}

TEST_CASE("component bound from holomorphic forms") {
  // K3: h20 = 1, h10 = 0 so any maximal real locus needs >= 2 components.
  auto p = profile({1, 0, 22, 0, 1},
                   {RealComponent::orientable_genus(10), RealComponent::sphere()});
  p.hodge = HodgeNumbers{0, 1, 20};
  auto bound = hodge_obstruction_bound(p);
  REQUIRE(bound.has_value());
  CHECK(*bound == 2);

  // Abelian surface: h10 = 2, h20 = 1 forces >= 4 components.
  auto ab = profile({1, 4, 6, 4, 1}, std::vector<RealComponent>(
                                         4, RealComponent::orientable_genus(1)));
  ab.hodge = HodgeNumbers{2, 1, 4};
  bound = hodge_obstruction_bound(ab);
  REQUIRE(bound.has_value());
  CHECK(*bound == 4);

  // Rational surface: no forms, no obstruction.
  auto rat = profile({1, 0, 1, 0, 1}, {RealComponent::nonorientable_crosscaps(1)});
  rat.hodge = HodgeNumbers{0, 0, 1};
  CHECK(!hodge_obstruction_bound(rat).has_value());

  auto torsion = profile({1, 1, 12, 1, 1}, {});
  torsion.tors2_h1 = torsion.tors2_hstar = true;
  torsion.hodge = HodgeNumbers{0, 0, 10};
  CHECK_THROWS_AS(hodge_obstruction_bound(torsion), HypothesisError);
}

TEST_CASE("consistency cross-check flags impossible maximal profiles") {
  // Maximal K3 with one genus-11 component: right Betti count, but the
  // component bound says a maximal K3 needs two.
  auto p = profile({1, 0, 22, 0, 1}, {RealComponent::orientable_genus(11)});
  p.hodge = HodgeNumbers{0, 1, 20};
  CHECK(smith_defect(p).maximal);
  auto v = maximality_consistency_violations(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("at least 2 components") != std::string::npos);

  // The two-component K3 passes.
  auto good = profile({1, 0, 22, 0, 1},
                      {RealComponent::orientable_genus(10), RealComponent::sphere()});
  good.hodge = HodgeNumbers{0, 1, 20};
  CHECK(maximality_consistency_violations(good).empty());

  // Non-maximal profiles are not screened.
  auto nm = profile({1, 0, 22, 0, 1}, {RealComponent::sphere()});
  nm.hodge = HodgeNumbers{0, 1, 20};
  CHECK(maximality_consistency_violations(nm).empty());
}

TEST_CASE("report carries the optional checks only with hodge data") {
  auto bare = profile({1, 0, 2, 0, 1}, {RealComponent::orientable_genus(1)});
  SmithReport rep = smith_defect(bare);
  CHECK(!rep.comessatti_ok.has_value());
  CHECK(!rep.hodge_component_bound.has_value());

  bare.hodge = HodgeNumbers{0, 0, 2};
  rep = smith_defect(bare);
  REQUIRE(rep.comessatti_ok.has_value());
  CHECK(*rep.comessatti_ok);
  CHECK(!rep.hodge_component_bound.has_value());  // no forms, no obstruction
}
