#include "stmax/smith_core.hpp"

#include "stmax/errors.hpp"

namespace stmax {

SmithReport smith_defect(const SurfaceProfile& p) {
  auto real = derive_real_invariants(p);
  SmithReport rep;
  rep.beta_star_x = p.beta_star();
  rep.beta_star_r = real.beta_star;
  rep.defect = rep.beta_star_x - rep.beta_star_r;
  if (rep.defect < 0 || rep.defect % 2 != 0)
    throw ValidationError("profile '" + p.name + "' violates Smith theory; not realizable");
  rep.maximal = rep.defect == 0;
  if (p.hodge) {
    rep.comessatti_ok = comessatti_check(p);
    if (!p.tors2_h1) rep.hodge_component_bound = hodge_obstruction_bound(p);
  }
  return rep;
}

bool comessatti_check(const SurfaceProfile& p) {
  if (!p.hodge) throw HypothesisError("comessatti_check: profile carries no Hodge data");
  auto real = derive_real_invariants(p);
  return 2 - (2 * real.components - real.beta1) <= p.hodge->h11;
}

std::optional<long long> hodge_obstruction_bound(const SurfaceProfile& p) {
  if (!p.hodge) throw HypothesisError("hodge_obstruction_bound: profile carries no Hodge data");
  if (p.tors2_h1) throw HypothesisError("hodge_obstruction_bound: lemma hypotheses not met (H1 has 2-torsion)");
  require_valid(p);
  long long h10 = p.hodge->h10, h20 = p.hodge->h20;
  if (h10 + h20 == 0) return std::nullopt;
  return 1 + h10 + (h20 + 1) / 2;
}

std::vector<std::string> maximality_consistency_violations(const SurfaceProfile& p) {
  std::vector<std::string> out;
  auto rep = smith_defect(p);
  if (!rep.maximal || !rep.hodge_component_bound) return out;
  long long r = static_cast<long long>(p.real_components.size());
  if (r < *rep.hodge_component_bound)
    out.push_back("real locus of a maximal structure on this surface needs at least " +
                  std::to_string(*rep.hodge_component_bound) + " components, profile has " +
                  std::to_string(r));
  return out;
}

}  // namespace stmax
