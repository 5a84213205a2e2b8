#include "stmax/surface_profile.hpp"

#include "stmax/errors.hpp"

namespace stmax {

std::vector<std::string> validate(const SurfaceProfile& p) {
  std::vector<std::string> out;
  const auto& b = p.betti_f2;
  for (int i = 0; i < 5; ++i)
    if (b[i] < 0) out.push_back("betti_f2: entries must be non-negative");
  if (b[0] != 1) out.push_back("betti_f2: beta0 must equal 1 (connected surface)");
  if (b[4] != 1) out.push_back("betti_f2: beta4 must equal 1 (closed surface)");
  if (b[1] != b[3]) out.push_back("betti_f2: beta1 must equal beta3 (Poincare duality over GF(2))");
  if (p.tors2_h1 && !p.tors2_hstar)
    out.push_back("tors2_h1: 2-torsion in H1 implies 2-torsion in H*, so tors2_hstar must be set");
  if (p.hodge) {
    const auto& h = *p.hodge;
    if (h.h10 < 0 || h.h20 < 0 || h.h11 < 0)
      out.push_back("hodge: entries must be non-negative");
    if (!p.tors2_h1) {
      if (b[1] != 2 * h.h10)
        out.push_back("hodge: beta1 must equal 2*h10 when H1 has no 2-torsion");
      if (b[2] != 2 * h.h20 + h.h11)
        out.push_back("hodge: beta2 must equal 2*h20 + h11 when H1 has no 2-torsion");
    }
  }
  for (const auto& c : p.real_components) {
    if (c.orientable && c.genus_or_crosscaps < 0)
      out.push_back("real_components: orientable component needs genus >= 0");
    if (!c.orientable && c.genus_or_crosscaps < 1)
      out.push_back("real_components: non-orientable component needs crosscaps >= 1");
  }
  if (p.rank_mu_hint) {
    if (p.rank_mu_hint->value < 0)
      out.push_back("rank_mu_hint: value must be non-negative");
    if (p.rank_mu_hint->note.empty())
      out.push_back("rank_mu_hint: requires a justification note");
  }
  return out;
}

void require_valid(const SurfaceProfile& p) {
  auto v = validate(p);
  if (!v.empty()) throw ValidationError("profile '" + p.name + "': " + v.front());
}

RealInvariants derive_real_invariants(const SurfaceProfile& p) {
  require_valid(p);
  RealInvariants inv;
  inv.components = static_cast<long long>(p.real_components.size());
  for (const auto& c : p.real_components) {
    inv.beta_star += c.beta_star();
    inv.beta1 += c.beta1();
    inv.euler += c.euler();
  }
  return inv;
}

}  // namespace stmax
