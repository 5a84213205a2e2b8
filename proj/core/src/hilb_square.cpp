#include "stmax/hilb_square.hpp"

#include <algorithm>

#include "stmax/errors.hpp"
#include "stmax/smith_core.hpp"

namespace stmax {

namespace {

void append_note(std::string& notes, const std::string& n) {
  if (!notes.empty()) notes += "; ";
  notes += n;
}

constexpr const char* kThirdPowerNote =
    "a maximal Hilbert square forces the third Hilbert power to be maximal as well";

}  // namespace

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Maximal: return "Maximal";
    case Decision::NotMaximal: return "NotMaximal";
    default: return "Unknown";
  }
}

const char* to_string(RankMuSource s) {
  switch (s) {
    case RankMuSource::TheoremBeta1Zero: return "TheoremBeta1Zero";
    case RankMuSource::ConnectedCase: return "ConnectedCase";
    case RankMuSource::OverflowCase: return "OverflowCase";
    case RankMuSource::Hint: return "Hint";
    default: return "Unknown";
  }
}

std::pair<long long, bool> beta_star_hilb2_complex(const SurfaceProfile& p) {
  require_valid(p);
  long long bs = p.beta_star();
  return {bs * (bs + 1) / 2 + bs - 2 * p.beta1(), !p.tors2_hstar};
}

long long chi_hilb2_real(const SurfaceProfile& p) {
  auto real = derive_real_invariants(p);
  long long bs = p.beta_star();
  long long chi_r = real.euler;
  if ((bs + chi_r) % 2 != 0)
    throw InternalError("chi_hilb2_real: b_star and chi_R parity mismatch on '" + p.name + "'");
  return (bs + chi_r * chi_r) / 2 - 2 * p.beta1() - chi_r;
}

long long beta1_extra(const SurfaceProfile& p) {
  auto real = derive_real_invariants(p);
  long long r = real.components;
  return r * real.beta_star - 2 * r * r - real.beta_star + 2 * r;
}

std::pair<std::optional<long long>, RankMuSource> rank_mu_rule(const SurfaceProfile& p) {
  require_valid(p);
  long long r = static_cast<long long>(p.real_components.size());
  long long b1 = p.beta1();
  if (b1 == 0) return {r, RankMuSource::TheoremBeta1Zero};
  if (r == 1) return {1 + b1, RankMuSource::ConnectedCase};
  if (r > 1 + b1) return {std::nullopt, RankMuSource::OverflowCase};
  if (p.rank_mu_hint) return {p.rank_mu_hint->value, RankMuSource::Hint};
  return {std::nullopt, RankMuSource::Unknown};
}

PieceBetti beta1_pieces(const SurfaceProfile& p) {
  auto smith = smith_defect(p);
  if (!smith.maximal)
    throw HypothesisError("beta1_pieces: X is not maximal; use hilb2_verdict for the decision");
  if (p.tors2_h1)
    throw HypothesisError("beta1_pieces: H1(X;Z) has 2-torsion; per-piece formulas unavailable");
  if (p.real_components.empty())
    throw HypothesisError("beta1_pieces: empty real locus; use hilb2_verdict for the decision");
  PieceBetti out;
  out.beta1_h0 = 1 + p.beta1();
  long long sum = 0;
  for (const auto& c : p.real_components) {
    out.beta1_hi.push_back(c.beta_star() - 1);
    sum += c.beta_star() - 1;
  }
  long long r = static_cast<long long>(p.real_components.size());
  if (sum != p.beta_star() - r)
    throw InternalError("beta1_pieces: piece sum disagrees with b_star - r on '" + p.name + "'");
  out.beta1_extra = beta1_extra(p);
  auto [mu, src] = rank_mu_rule(p);
  out.rank_mu = mu;
  out.rank_mu_source = src;
  return out;
}

long long required_beta1(const SurfaceProfile& p) {
  auto smith = smith_defect(p);
  if (!smith.maximal)
    throw HypothesisError("required_beta1: X is not maximal, so the question is moot");
  long long r = static_cast<long long>(p.real_components.size());
  long long bs = p.beta_star();
  long long req = r * bs - 2 * r * r + r;
  if (!p.tors2_hstar) {
    // Cross-check against the defining form (beta_star_hilb2 - chi_hilb2)/4,
    // available exactly in the torsion-free case.
    auto [total, exact] = beta_star_hilb2_complex(p);
    long long chi2 = chi_hilb2_real(p);
    if (exact && (total - chi2) != 4 * req)
      throw InternalError("required_beta1: closed form disagrees with Betti total on '" + p.name + "'");
  }
  return req;
}

std::optional<long long> actual_beta1_hilb2_real(const SurfaceProfile& p) {
  auto smith = smith_defect(p);
  if (!smith.maximal)
    throw HypothesisError("actual_beta1_hilb2_real: X is not maximal");
  if (p.tors2_h1)
    throw HypothesisError("actual_beta1_hilb2_real: H1(X;Z) has 2-torsion");
  auto [mu, src] = rank_mu_rule(p);
  if (!mu) return std::nullopt;
  long long r = static_cast<long long>(p.real_components.size());
  long long pieces_sum = (1 + p.beta1()) + (p.beta_star() - r);
  return beta1_extra(p) + pieces_sum - *mu;
}

std::array<long long, 5> real_betti_table(const SurfaceProfile& p) {
  auto smith = smith_defect(p);
  if (!smith.maximal || p.beta1() != 0 || p.tors2_h1)
    throw HypothesisError(
        "real_betti_table: needs maximal X with beta1 = 0 and 2-torsion-free H1");
  long long r = static_cast<long long>(p.real_components.size());
  long long bs = p.beta_star();
  long long b0 = r * (r - 1) / 2 + 1;
  long long b1 = r * bs + 1 - 2 * r * r;
  long long b2 = bs * (bs - 1) / 2 - 2 * (r - 1) * bs + 3 * r * (r - 1);
  return {b0, b1, b2, b1, b0};
}

Hilb2Report hilb2_verdict(const SurfaceProfile& p, const Hilb2Facts& facts) {
  auto smith = smith_defect(p);
  long long r = static_cast<long long>(p.real_components.size());
  long long b1 = p.beta1();
  long long bs = p.beta_star();

  Hilb2Report rep;
  auto [total, exact] = beta_star_hilb2_complex(p);
  rep.beta_star_hilb2_c = total;
  rep.beta_star_exact = exact;
  rep.beta_star_hilb2_fact = facts.beta_star_hilb2;
  rep.chi_hilb2_r = chi_hilb2_real(p);
  rep.required_beta1 = r * bs - 2 * r * r + r;

  std::string notes;
  if (p.tors2_hstar && !p.tors2_h1)
    append_note(notes,
                "2-torsion in H* with 2-torsion-free H1 occurs on no closed surface; "
                "formulas evaluated formally");
  if (facts.beta_star_hilb2 && *facts.beta_star_hilb2 < total)
    throw ValidationError("hilb2_verdict: beta_star_hilb2 fact lies below the formula lower bound");

  auto finish = [&](Decision d, const char* rule) {
    if (d == Decision::Maximal) append_note(notes, kThirdPowerNote);
    rep.verdict = Verdict{d, d == Decision::Unknown ? std::string() : std::string(rule), notes};
  };

  if (!smith.maximal) {
    if (r == 0) append_note(notes, "real locus is empty");
    finish(Decision::NotMaximal, rules::kXNotMaximal);
    return rep;
  }
  if (r == 0) {
    // Unreachable for valid maximal profiles (b_star >= 2 forces a defect),
    // kept to mirror the decision order.
    finish(Decision::NotMaximal, rules::kEmptyRealLocus);
    return rep;
  }

  if (b1 == 0 && !p.tors2_h1) rep.beta_hilb2_r = real_betti_table(p);

  if (!p.tors2_h1) {
    long long extra = beta1_extra(p);
    long long pieces_sum = (1 + b1) + (bs - r);
    auto [mu, src] = rank_mu_rule(p);
    if (p.rank_mu_hint &&
        (src == RankMuSource::TheoremBeta1Zero || src == RankMuSource::ConnectedCase) &&
        p.rank_mu_hint->value != *mu)
      append_note(notes, "rank_mu_hint conflicts with the theorem-determined gluing rank; hint ignored");
    if (mu) {
      long long actual = extra + pieces_sum - *mu;
      rep.actual_beta1 = actual;
      if (*mu == 1 + b1) {
        rep.defect = 0;
        finish(Decision::Maximal, src == RankMuSource::TheoremBeta1Zero ? rules::kBeta1Zero
                                  : src == RankMuSource::ConnectedCase  ? rules::kConnectedLocus
                                                                        : rules::kRankEquals);
      } else if (*mu > 1 + b1) {
        rep.defect = 4 * (*mu - b1 - 1);
        finish(Decision::NotMaximal, src == RankMuSource::TheoremBeta1Zero ? rules::kBeta1Zero
                                                                           : rules::kRankExceeds);
      } else {
        append_note(notes,
                    "hinted gluing rank lies below 1 + beta1(X), which no real structure attains; "
                    "granting it still denies maximality");
        finish(Decision::NotMaximal, rules::kRankBelowBound);
      }
    } else {
      long long lb = std::max(r, facts.rank_mu_lower_bound.value_or(0));
      if (src == RankMuSource::OverflowCase) lb = std::max(lb, 2 + b1);
      if (lb > 1 + b1) {
        append_note(notes, "beta1 attains at most " + std::to_string(extra + pieces_sum - lb) +
                               ", required " + std::to_string(rep.required_beta1));
        finish(Decision::NotMaximal, src == RankMuSource::OverflowCase ? rules::kOverflow
                                                                       : rules::kRankBoundExceeds);
      } else {
        append_note(notes,
                    "gluing rank unresolved for 1 < r <= 1 + beta1(X); supply rank_mu_hint "
                    "with a justification to decide");
        finish(Decision::Unknown, "");
      }
    }
  } else {
    if (p.rank_mu_hint)
      append_note(notes, "rank_mu_hint is not used in the 2-torsion case");
    if (facts.beta_star_hilb2) {
      long long fact = *facts.beta_star_hilb2;
      if ((fact - rep.chi_hilb2_r) % 4 != 0) {
        append_note(notes, "beta_star_hilb2 and chi of the real Hilbert square differ by a "
                           "non-multiple of 4; no closed real locus attains equality");
        finish(Decision::NotMaximal, rules::kTorsionShortfall);
        return rep;
      }
      long long required = (fact - rep.chi_hilb2_r) / 4;
      rep.required_beta1 = required;
      long long extra = beta1_extra(p);
      long long pieces_sum = (1 + b1) + (bs - r);
      long long lb = std::max(r, facts.rank_mu_lower_bound.value_or(0));
      long long actual_ub = extra + pieces_sum - lb;
      if (actual_ub < required) {
        append_note(notes, "beta1 attains at most " + std::to_string(actual_ub) + ", required " +
                               std::to_string(required));
        finish(Decision::NotMaximal, rules::kTorsionShortfall);
      } else {
        append_note(notes, "2-torsion case undecided: attainable beta1 bound does not fall "
                           "short and the exact gluing rank is unknown");
        finish(Decision::Unknown, "");
      }
    } else {
      append_note(notes, "2-torsion in H1: supply an exact beta_star_hilb2 fact to decide");
      finish(Decision::Unknown, "");
    }
  }

  if (rep.beta_hilb2_r) {
    const auto& t = *rep.beta_hilb2_r;
    long long alt = t[0] - t[1] + t[2] - t[3] + t[4];
    long long sum = t[0] + t[1] + t[2] + t[3] + t[4];
    if (alt != rep.chi_hilb2_r)
      throw InternalError("hilb2_verdict: Betti table alternating sum disagrees with chi");
    if (!rep.defect || sum != rep.beta_star_hilb2_c - *rep.defect || sum > rep.beta_star_hilb2_c)
      throw InternalError("hilb2_verdict: Betti table total disagrees with defect");
  }
  return rep;
}

}  // namespace stmax
