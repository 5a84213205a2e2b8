#include "stmax/smith_sequence.hpp"

#include <algorithm>
#include <numeric>

#include "stmax/errors.hpp"
#include "stmax/gf2.hpp"

namespace stmax {

long long SmithData::beta_star_x() const {
  return std::accumulate(betti_x.begin(), betti_x.end(), 0LL);
}

long long SmithData::beta_star_f() const {
  return std::accumulate(betti_f.begin(), betti_f.end(), 0LL);
}

namespace {

// Chain-level data of a regular involution. The invariant subcomplex splits
// as C(F) + Im(1+c); both are preserved by the boundary, so each degree of
// the middle node is the direct sum H_k(Im) + H_k(F).
struct Nodes {
  int D;
  std::vector<HomologySpace> hx, hf, hi;
  std::vector<BitMatrix> t;      // H_k(Im) + H_k(F) -> H_k(X), per degree k
  std::vector<BitMatrix> p;      // H_k(X) -> H_k(Im)
  std::vector<BitMatrix> delta;  // H_k(Im) -> H_{k-1}(Im) + H_{k-1}(F)
};

BitVec mapped(const BitMatrix& chain_map, const BitVec& v) { return chain_map.apply(v); }

Nodes build_nodes(const SimplicialInvolution& inv) {
  const SimplicialComplex& K = inv.complex();
  const int D = K.dim();

  // Basis bookkeeping per degree: fixed simplices and free orbits.
  std::vector<std::vector<std::int32_t>> fixed(D + 1), orb_rep(D + 1);
  std::vector<std::vector<std::int32_t>> pos_fixed(D + 1), pos_orb(D + 1);
  for (int d = 0; d <= D; ++d) {
    const auto& cells = K.simplices(d);
    pos_fixed[d].assign(cells.size(), -1);
    pos_orb[d].assign(cells.size(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::int32_t img = inv.image_index(d, static_cast<std::int32_t>(i));
      if (img == static_cast<std::int32_t>(i)) {
        pos_fixed[d][i] = static_cast<std::int32_t>(fixed[d].size());
        fixed[d].push_back(static_cast<std::int32_t>(i));
      } else if (img > static_cast<std::int32_t>(i)) {
        pos_orb[d][i] = static_cast<std::int32_t>(orb_rep[d].size());
        pos_orb[d][img] = pos_orb[d][i];
        orb_rep[d].push_back(static_cast<std::int32_t>(i));
      }
    }
  }

  // Boundary matrices. X: the full simplicial boundary. F: restriction to
  // fixed simplices. Im: basis (1+c)s per free orbit; fixed faces cancel.
  ChainComplexF2 CX = K.chain_complex();
  auto nx = [&](int d) { return d < 0 || d > D ? std::size_t{0} : CX.ranks[d]; };
  auto nf = [&](int d) { return d < 0 || d > D ? std::size_t{0} : fixed[d].size(); };
  auto ni = [&](int d) { return d < 0 || d > D ? std::size_t{0} : orb_rep[d].size(); };

  std::vector<BitMatrix> bx(D + 2), bf(D + 2), bi(D + 2);
  for (int d = 0; d <= D + 1; ++d) {
    bx[d] = BitMatrix(nx(d - 1), nx(d));
    bf[d] = BitMatrix(nf(d - 1), nf(d));
    bi[d] = BitMatrix(ni(d - 1), ni(d));
    if (d < 1 || d > D) continue;
    for (std::size_t j = 0; j < nx(d); ++j)
      for (std::int32_t r : CX.boundaries[d][j]) bx[d].set(r, j);
    for (std::size_t j = 0; j < nf(d); ++j) {
      for (std::int32_t r : CX.boundaries[d][fixed[d][j]]) {
        std::int32_t fr = pos_fixed[d - 1][r];
        if (fr < 0) throw InternalError("face of a fixed simplex is not fixed");
        bf[d].set(fr, j);
      }
    }
    for (std::size_t j = 0; j < ni(d); ++j) {
      for (std::int32_t r : CX.boundaries[d][orb_rep[d][j]]) {
        std::int32_t orow = pos_orb[d - 1][r];
        if (orow >= 0) bi[d].flip(orow, j);
      }
    }
  }

  Nodes n;
  n.D = D;
  for (int d = 0; d <= D; ++d) {
    n.hx.emplace_back(bx[d], bx[d + 1]);
    n.hf.emplace_back(bf[d], bf[d + 1]);
    n.hi.emplace_back(bi[d], bi[d + 1]);
  }

  // Chain maps into and out of C(X).
  std::vector<BitMatrix> mi(D + 1), mf(D + 1), mp(D + 1), ml(D + 1);
  for (int d = 0; d <= D; ++d) {
    mi[d] = BitMatrix(nx(d), ni(d));
    ml[d] = BitMatrix(nx(d), ni(d));
    for (std::size_t j = 0; j < ni(d); ++j) {
      std::int32_t rep = orb_rep[d][j];
      mi[d].set(rep, j);
      mi[d].set(inv.image_index(d, rep), j);
      ml[d].set(rep, j);
    }
    mf[d] = BitMatrix(nx(d), nf(d));
    for (std::size_t j = 0; j < nf(d); ++j) mf[d].set(fixed[d][j], j);
    mp[d] = BitMatrix(ni(d), nx(d));
    for (std::size_t i = 0; i < nx(d); ++i)
      if (std::int32_t o = pos_orb[d][i]; o >= 0) mp[d].flip(o, i);
  }

  for (int d = 0; d <= D; ++d) {
    const std::size_t di = n.hi[d].dim(), df = n.hf[d].dim(), dx = n.hx[d].dim();
    BitMatrix T(dx, di + df);
    for (std::size_t j = 0; j < di; ++j) {
      BitVec x = n.hx[d].coords(mapped(mi[d], n.hi[d].representatives()[j]));
      for (std::size_t r = 0; r < dx; ++r)
        if (x.get(r)) T.set(r, j);
    }
    for (std::size_t j = 0; j < df; ++j) {
      BitVec x = n.hx[d].coords(mapped(mf[d], n.hf[d].representatives()[j]));
      for (std::size_t r = 0; r < dx; ++r)
        if (x.get(r)) T.set(r, di + j);
    }
    n.t.push_back(std::move(T));

    BitMatrix P(di, dx);
    for (std::size_t j = 0; j < dx; ++j) {
      BitVec y = n.hi[d].coords(mapped(mp[d], n.hx[d].representatives()[j]));
      for (std::size_t r = 0; r < di; ++r)
        if (y.get(r)) P.set(r, j);
    }
    n.p.push_back(std::move(P));

    // Connecting map: lift a cycle of Im through L, take its boundary in X,
    // split the result (which lies in C(F) + Im with equal orbit weights)
    // back into the two components one degree down.
    const std::size_t lo_i = d > 0 ? n.hi[d - 1].dim() : 0;
    const std::size_t lo_f = d > 0 ? n.hf[d - 1].dim() : 0;
    BitMatrix Dl(lo_i + lo_f, di);
    for (std::size_t j = 0; j < di; ++j) {
      BitVec w = d > 0 ? bx[d].apply(mapped(ml[d], n.hi[d].representatives()[j]))
                       : BitVec(0);
      if (d > 0) {
        BitVec wi(ni(d - 1)), wf(nf(d - 1));
        for (std::size_t r = 0; r < nx(d - 1); ++r) {
          if (!w.get(r)) continue;
          if (std::int32_t fp = pos_fixed[d - 1][r]; fp >= 0) {
            wf.set(fp);
            continue;
          }
          std::int32_t img = inv.image_index(d - 1, static_cast<std::int32_t>(r));
          if (!w.get(img))
            throw InternalError("boundary of a lifted cycle is not invariant");
          if (img > static_cast<std::int32_t>(r)) wi.set(pos_orb[d - 1][r]);
        }
        BitVec ci = n.hi[d - 1].coords(wi);
        BitVec cf = n.hf[d - 1].coords(wf);
        for (std::size_t r = 0; r < lo_i; ++r)
          if (ci.get(r)) Dl.set(r, j);
        for (std::size_t r = 0; r < lo_f; ++r)
          if (cf.get(r)) Dl.set(lo_i + r, j);
      }
    }
    n.delta.push_back(std::move(Dl));
  }
  return n;
}

bool composite_zero(const BitMatrix& outer, const BitMatrix& inner) {
  if (outer.cols() != inner.rows())
    throw InternalError("exactness check: map dimensions disagree");
  for (std::size_t c = 0; c < inner.cols(); ++c)
    if (outer.apply(inner.column(c)).any()) return false;
  return true;
}

}  // namespace

SmithData smith_sequence(const SimplicialInvolution& inv, std::size_t budget) {
  int subdiv = 0;
  SimplicialInvolution reg = smith_regularized(inv, &subdiv, budget);
  Nodes n = build_nodes(reg);
  const int D = n.D;

  SmithData data;
  data.subdivisions = subdiv;
  for (int d = 0; d <= D; ++d) {
    data.betti_x.push_back(static_cast<long long>(n.hx[d].dim()));
    data.betti_f.push_back(static_cast<long long>(n.hf[d].dim()));
    data.betti_xbar_f.push_back(static_cast<long long>(n.hi[d].dim()));
    data.delta_rank.push_back(static_cast<long long>(n.delta[d].rank()));
    data.transfer_inc_rank.push_back(static_cast<long long>(n.t[d].rank()));
    data.proj_rank.push_back(static_cast<long long>(n.p[d].rank()));
    data.coker_dim.push_back(static_cast<long long>(n.hx[d].dim()) -
                             data.transfer_inc_rank.back());
  }

  // Exactness at each node: the incoming image lies in the outgoing kernel
  // and the ranks fill the node. Degrees above D carry zero spaces.
  auto drank = [&](int d) { return d >= 0 && d <= D ? data.delta_rank[d] : 0; };
  auto irank = [&](int d) { return d >= 0 && d <= D ? static_cast<long long>(n.hi[d].dim()) : 0; };
  for (int d = 0; d <= D; ++d) {
    long long mid = static_cast<long long>(n.hi[d].dim() + n.hf[d].dim());
    bool ok = true;
    if (d + 1 <= D) ok = ok && composite_zero(n.t[d], n.delta[d + 1]);
    ok = ok && drank(d + 1) + data.transfer_inc_rank[d] == mid;
    ok = ok && composite_zero(n.p[d], n.t[d]);
    ok = ok && data.transfer_inc_rank[d] + data.proj_rank[d] ==
                   static_cast<long long>(n.hx[d].dim());
    ok = ok && composite_zero(n.delta[d], n.p[d]);
    ok = ok && data.proj_rank[d] + drank(d) == irank(d);
    if (!ok) throw InternalError("long sequence failed exactness at degree " + std::to_string(d));
  }
  data.long_sequence_exact = true;

  long long coker_sum = std::accumulate(data.coker_dim.begin(), data.coker_dim.end(), 0LL);
  if (data.beta_star_f() + 2 * coker_sum != data.beta_star_x())
    throw InternalError("rank identity beta*(F) + 2*coker = beta*(X) failed");
  return data;
}

bool maximality_exactness(const SimplicialInvolution& inv, std::size_t budget) {
  SmithData data = smith_sequence(inv, budget);
  const int D = static_cast<int>(data.betti_x.size()) - 1;
  bool exact = true;
  for (int d = 0; d <= D; ++d) {
    bool inj = d + 1 > D || data.delta_rank[d + 1] == data.betti_xbar_f[d + 1];
    bool surj = data.transfer_inc_rank[d] == data.betti_x[d];
    exact = exact && inj && surj;
  }
  if (exact != (data.beta_star_f() == data.beta_star_x()))
    throw InternalError("exactness disagrees with the rank criterion");
  return exact;
}

}  // namespace stmax
