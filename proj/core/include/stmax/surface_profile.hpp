#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stmax {

// One closed connected component of the real locus, described intrinsically.
// All Betti numbers here are over GF(2): a non-orientable surface with k
// crosscaps has beta1 = k and beta2 = 1.
struct RealComponent {
  bool orientable = true;
  long long genus_or_crosscaps = 0;

  static RealComponent sphere() { return {true, 0}; }
  static RealComponent orientable_genus(long long g) { return {true, g}; }
  static RealComponent nonorientable_crosscaps(long long k) { return {false, k}; }

  long long beta1() const { return orientable ? 2 * genus_or_crosscaps : genus_or_crosscaps; }
  long long beta_star() const { return 2 + beta1(); }
  long long euler() const {
    return orientable ? 2 - 2 * genus_or_crosscaps : 2 - genus_or_crosscaps;
  }

  friend bool operator==(const RealComponent&, const RealComponent&) = default;
};

struct HodgeNumbers {
  long long h10 = 0;
  long long h20 = 0;
  long long h11 = 0;

  friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;
};

// Externally supplied rank of the Mayer-Vietoris gluing map, with the
// geometric justification that makes the assertion auditable.
struct RankMuHint {
  long long value = 0;
  std::string note;

  friend bool operator==(const RankMuHint&, const RankMuHint&) = default;
};

// Topological input datum for a real nonsingular projective surface X:
// GF(2) Betti numbers of the complex points, 2-torsion flags for integral
// homology, optional Hodge numbers, and the real locus as a component list.
struct SurfaceProfile {
  std::string name;
  std::array<long long, 5> betti_f2 = {1, 0, 0, 0, 1};
  bool tors2_h1 = false;
  bool tors2_hstar = false;
  std::optional<HodgeNumbers> hodge;
  std::vector<RealComponent> real_components;
  std::optional<RankMuHint> rank_mu_hint;

  long long beta1() const { return betti_f2[1]; }
  long long beta2() const { return betti_f2[2]; }
  long long beta_star() const {
    return betti_f2[0] + betti_f2[1] + betti_f2[2] + betti_f2[3] + betti_f2[4];
  }
  long long euler() const { return beta_star() - 4 * betti_f2[1]; }

  friend bool operator==(const SurfaceProfile&, const SurfaceProfile&) = default;
};

// Aggregated invariants of the real locus.
struct RealInvariants {
  long long components = 0;
  long long beta_star = 0;
  long long beta1 = 0;
  long long euler = 0;
};

// Structural checks; empty result iff the profile is admissible input.
// Each violation names the offending field and the rule it breaks.
std::vector<std::string> validate(const SurfaceProfile& p);

// Throws ValidationError with the first violation if validate() is nonempty.
void require_valid(const SurfaceProfile& p);

// Sums per-component invariants; requires a valid profile.
RealInvariants derive_real_invariants(const SurfaceProfile& p);

}  // namespace stmax
