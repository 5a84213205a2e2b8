#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stmax/surface_profile.hpp"

namespace stmax {

enum class Decision { Maximal, NotMaximal, Unknown };

const char* to_string(Decision d);

struct Verdict {
  Decision decision = Decision::Unknown;
  std::string rule;  // nonempty whenever decision != Unknown
  std::string notes;
};

enum class RankMuSource { TheoremBeta1Zero, ConnectedCase, OverflowCase, Hint, Unknown };

const char* to_string(RankMuSource s);

// First Betti numbers of the pieces H_0..H_r of the main real component of
// the Hilbert square, plus the extra components and the gluing rank.
struct PieceBetti {
  long long beta1_h0 = 0;
  std::vector<long long> beta1_hi;
  long long beta1_extra = 0;
  std::optional<long long> rank_mu;
  RankMuSource rank_mu_source = RankMuSource::Unknown;
};

// Externally established quantities the profile alone cannot determine:
// an exact total Betti number of the Hilbert square (2-torsion cases) and a
// lower bound on the Mayer-Vietoris gluing rank.
struct Hilb2Facts {
  std::optional<long long> beta_star_hilb2;
  std::optional<long long> rank_mu_lower_bound;

  friend bool operator==(const Hilb2Facts&, const Hilb2Facts&) = default;
};

struct Hilb2Report {
  long long beta_star_hilb2_c = 0;  // formula value; a lower bound when tors2_hstar
  bool beta_star_exact = true;
  std::optional<long long> beta_star_hilb2_fact;
  long long chi_hilb2_r = 0;
  std::optional<std::array<long long, 5>> beta_hilb2_r;
  long long required_beta1 = 0;  // value beta1 of the real Hilbert square must attain
  std::optional<long long> actual_beta1;
  std::optional<long long> defect;
  Verdict verdict;
};

// Rule strings carried by verdicts; tests and callers match against these.
namespace rules {
inline constexpr const char* kXNotMaximal = "X itself is not maximal";
inline constexpr const char* kEmptyRealLocus = "maximal Hilbert square needs a nonempty real locus";
inline constexpr const char* kBeta1Zero =
    "maximal X, H1(X;F2) = 0: Hilbert square maximal iff real locus connected";
inline constexpr const char* kConnectedLocus = "maximal X with connected real locus";
inline constexpr const char* kOverflow = "component count exceeds 1 + beta1(X)";
inline constexpr const char* kRankEquals = "gluing rank equals 1 + beta1(X)";
inline constexpr const char* kRankExceeds = "gluing rank exceeds 1 + beta1(X)";
inline constexpr const char* kRankBelowBound =
    "gluing rank below the structural bound 1 + beta1(X)";
inline constexpr const char* kRankBoundExceeds =
    "gluing rank lower bound exceeds 1 + beta1(X)";
inline constexpr const char* kTorsionShortfall =
    "2-torsion case: attainable beta1 falls short of the required value";
}  // namespace rules

// Total Betti number of the complex Hilbert square:
// b_star(b_star+1)/2 + b_star - 2*beta1. Exact iff H*(X;Z) has no 2-torsion;
// otherwise the same number is only a lower bound (flag false).
std::pair<long long, bool> beta_star_hilb2_complex(const SurfaceProfile& p);

// Euler characteristic of the real Hilbert square:
// b_star/2 - 2*beta1 + chi_R^2/2 - chi_R. Integrality needs b_star and chi_R
// of equal parity, which holds exactly on Smith-realizable profiles.
long long chi_hilb2_real(const SurfaceProfile& p);

// beta1 of the off-diagonal components union_{i<j} F_i x F_j.
long long beta1_extra(const SurfaceProfile& p);

// Piece data of the main component; needs maximal X, 2-torsion-free H1, r >= 1.
PieceBetti beta1_pieces(const SurfaceProfile& p);

// Gluing rank when theorems or the hint determine it; needs maximal X and
// 2-torsion-free H1. Order: beta1 = 0 gives rank r; connected real locus
// gives 1 + beta1; r > 1 + beta1 leaves only the bound >= 2 + beta1 (value
// absent); otherwise the hint if present.
std::pair<std::optional<long long>, RankMuSource> rank_mu_rule(const SurfaceProfile& p);

// r*b_star - 2r^2 + r: the beta1 the real Hilbert square must attain for
// maximality. Needs maximal X (the question is moot otherwise).
long long required_beta1(const SurfaceProfile& p);

// beta1_extra + (sum of piece beta1) - rank mu, when the rank is determined.
std::optional<long long> actual_beta1_hilb2_real(const SurfaceProfile& p);

// Full Betti vector of the real Hilbert square; needs maximal X, beta1 = 0,
// 2-torsion-free H1.
std::array<long long, 5> real_betti_table(const SurfaceProfile& p);

// Three-valued maximality decision for the Hilbert square, total on valid
// Smith-realizable profiles.
Hilb2Report hilb2_verdict(const SurfaceProfile& p, const Hilb2Facts& facts = {});

}  // namespace stmax
