#include "stmax/catalog.hpp"

#include <vector>

namespace stmax {

namespace {

SurfaceProfile make_profile(std::string name, std::array<long long, 5> betti,
                            HodgeNumbers hodge, std::vector<RealComponent> components) {
  SurfaceProfile p;
  p.name = std::move(name);
  p.betti_f2 = betti;
  p.hodge = hodge;
  p.real_components = std::move(components);
  return p;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "p2";
    e.profile = make_profile("p2", {1, 0, 1, 0, 1}, {0, 0, 1},
                             {RealComponent::nonorientable_crosscaps(1)});
    e.expected_decision = Decision::Maximal;
    e.expected_rule = rules::kBeta1Zero;
    e.notes = {"the projective plane: connected real locus, no odd homology"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "elliptic-k1";
    e.profile = make_profile("elliptic-k1", {1, 0, 10, 0, 1}, {0, 0, 10},
                             {RealComponent::nonorientable_crosscaps(10)});
    e.expected_decision = Decision::Maximal;
    e.expected_rule = rules::kBeta1Zero;
    e.notes = {"rational elliptic surface with 9 real base points; the real locus is "
               "one nonorientable component with 10 crosscaps"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "elliptic-k2";
    e.profile = make_profile("elliptic-k2", {1, 0, 22, 0, 1}, {0, 1, 20},
                             {RealComponent::orientable_genus(10), RealComponent::sphere()});
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kBeta1Zero;
    e.notes = {"elliptic surface with holomorphic 2-forms (K3 case k = 2); a maximal "
               "real locus is forced to be disconnected, here a genus-10 surface "
               "plus a sphere"};
    out.push_back(std::move(e));
  }

  for (long long g = 1; g <= 3; ++g) {
    CatalogEntry e;
    e.name = "ruled-g" + std::to_string(g);
    std::vector<RealComponent> comps(g + 1, RealComponent::orientable_genus(1));
    e.profile = make_profile(e.name, {1, 2 * g, 2, 2 * g, 1},
                             {g, 0, 2}, std::move(comps));
    e.profile.rank_mu_hint =
        RankMuHint{2 * g + 1,
                   "ruling geometry: the g + 1 torus components glue along the fiber "
                   "class to full rank 1 + beta1"};
    e.expected_decision = Decision::Maximal;
    e.expected_rule = rules::kRankEquals;
    e.notes = {"ruled surface over a maximal genus-" + std::to_string(g) +
               " curve; real locus is " + std::to_string(g + 1) + " tori"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "abelian-max";
    e.profile = make_profile("abelian-max", {1, 4, 6, 4, 1}, {2, 1, 4},
                             std::vector<RealComponent>(4, RealComponent::orientable_genus(1)));
    e.facts.rank_mu_lower_bound = 6;
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kRankBoundExceeds;
    e.notes = {"maximal abelian surface, real locus 4 tori; the pairing induced on "
               "the component classes has rank at least 6, above 1 + beta1 = 5"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "delpezzo-deg1";
    std::vector<RealComponent> comps{RealComponent::nonorientable_crosscaps(1)};
    for (int i = 0; i < 4; ++i) comps.push_back(RealComponent::sphere());
    e.profile = make_profile("delpezzo-deg1", {1, 0, 9, 0, 1}, {0, 0, 9}, std::move(comps));
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kBeta1Zero;
    e.notes = {"del Pezzo surface of degree 1 with real locus a projective plane "
               "plus 4 spheres: 5 components but beta1 = 0"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "curve-product-g3g3";
    e.profile = make_profile("curve-product-g3g3", {1, 12, 38, 12, 1}, {6, 9, 20},
                             std::vector<RealComponent>(16, RealComponent::orientable_genus(1)));
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kOverflow;
    e.notes = {"product of two maximal genus-3 curves: 4 x 4 = 16 torus components "
               "exceed 1 + beta1 = 13"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "enriques-max";
    e.profile = make_profile("enriques-max", {1, 1, 12, 1, 1}, {0, 0, 10},
                             {RealComponent::nonorientable_crosscaps(10),
                              RealComponent::nonorientable_crosscaps(2)});
    e.profile.tors2_h1 = true;
    e.profile.tors2_hstar = true;
    e.facts.beta_star_hilb2 = 154;
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kTorsionShortfall;
    e.notes = {"maximal Enriques surface; the component layout shown is one "
               "representative of a maximal distribution (total F2 homology 16)",
               "total F2 homology of the Hilbert square is 154, four above the "
               "torsion-free formula value 150"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "cubic4fold-regular";
    e.profile = make_profile("cubic4fold-regular", {1, 0, 22, 0, 1}, {0, 1, 20},
                             {RealComponent::orientable_genus(10), RealComponent::sphere()});
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kBeta1Zero;
    e.notes = {"regular-class cubic 4-fold: its Fano variety is equivariantly "
               "diffeomorphic to the Hilbert square of the associated K3 (here "
               "maximal with a genus-10 component plus a sphere)",
               "maximal cubic 4-folds exist, with real locus P4(R) # 10(S2xS2) # (S1xS3), "
               "P4(R) # 6(S2xS2) # 5(S1xS3), or P4(R) # 2(S2xS2) # 9(S1xS3); their Fano "
               "varieties are nevertheless not maximal"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "cubic4fold-irregular";
    e.profile = make_profile("cubic4fold-irregular", {1, 0, 22, 0, 1}, {0, 1, 20},
                             std::vector<RealComponent>(3, RealComponent::sphere()));
    e.expected_decision = Decision::NotMaximal;
    e.expected_rule = rules::kXNotMaximal;
    e.notes = {"irregular-class cubic 4-fold: the Fano real locus is six copies of "
               "S2 x S2 plus the main Hilbert-square component of a K3 with three "
               "real spheres; that K3 is far from maximal (defect 18)"};
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<CatalogResult> run_catalog() {
  std::vector<CatalogResult> results;
  for (const CatalogEntry& e : builtin_catalog()) {
    CatalogResult r;
    r.entry = e;
    r.computed = hilb2_verdict(e.profile, e.facts);
    r.agree = r.computed.verdict.decision == e.expected_decision &&
              r.computed.verdict.rule == e.expected_rule;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace stmax
