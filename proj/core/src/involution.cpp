#include "stmax/involution.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "stmax/errors.hpp"

namespace stmax {

SimplicialInvolution::SimplicialInvolution(SimplicialComplex complex,
                                           std::vector<std::int32_t> vertex_map)
    : complex_(std::move(complex)), vertex_map_(std::move(vertex_map)) {
  const std::int32_t n = complex_.num_vertices();
  if (static_cast<std::int32_t>(vertex_map_.size()) != n)
    throw ValidationError("vertex map lists " + std::to_string(vertex_map_.size()) +
                          " entries for " + std::to_string(n) + " vertices");
  for (std::int32_t v = 0; v < n; ++v) {
    std::int32_t w = vertex_map_[v];
    if (w < 0 || w >= n) throw ValidationError("vertex map entry out of range");
    if (vertex_map_[w] != v) throw ValidationError("vertex map is not an involution");
  }
  image_.resize(complex_.dim() + 1);
  for (int d = 0; d <= complex_.dim(); ++d) {
    const auto& cells = complex_.simplices(d);
    image_[d].resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::vector<std::int32_t> mapped;
      for (int j = 0; j <= d; ++j) mapped.push_back(vertex_map_[cells[i][j]]);
      Simplex img;
      try {
        img = make_simplex(mapped);
      } catch (const ValidationError&) {
        throw ValidationError("vertex map is not simplicial: it collapses a simplex");
      }
      std::int32_t idx = complex_.index_of(d, img);
      if (idx < 0)
        throw ValidationError("vertex map is not simplicial: a simplex image is missing");
      image_[d][i] = idx;
    }
  }
}

bool SimplicialInvolution::smith_regular() const {
  for (int d = 0; d <= complex_.dim(); ++d) {
    const auto& cells = complex_.simplices(d);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (image_[d][i] != static_cast<std::int32_t>(i)) continue;
      for (int j = 0; j <= d; ++j)
        if (vertex_map_[cells[i][j]] != cells[i][j]) return false;
    }
  }
  return true;
}

bool SimplicialInvolution::free_action() const {
  for (int d = 0; d <= complex_.dim(); ++d)
    for (std::size_t i = 0; i < image_[d].size(); ++i)
      if (image_[d][i] == static_cast<std::int32_t>(i)) return false;
  return true;
}

SimplicialComplex SimplicialInvolution::fixed_subcomplex() const {
  SimplicialComplex F;
  F.num_vertices_ = complex_.num_vertices();
  F.by_dim_.clear();
  for (int d = 0; d <= complex_.dim(); ++d) {
    std::vector<Simplex> keep;
    for (const Simplex& s : complex_.simplices(d)) {
      bool fixed = true;
      for (int j = 0; j <= d && fixed; ++j) fixed = vertex_map_[s[j]] == s[j];
      if (fixed) keep.push_back(s);
    }
    F.by_dim_.push_back(std::move(keep));
  }
  while (!F.by_dim_.empty() && F.by_dim_.back().empty()) F.by_dim_.pop_back();
  return F;
}

std::size_t SimplicialInvolution::num_orbits(int d) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < image_[d].size(); ++i)
    if (image_[d][i] >= static_cast<std::int32_t>(i)) ++n;
  return n;
}

std::int32_t SimplicialInvolution::orbit_index(int d, std::int32_t simplex_index) const {
  std::int32_t rep = std::min(simplex_index, image_[d][simplex_index]);
  // Orbit index = number of representatives strictly below rep.
  std::int32_t idx = 0;
  for (std::int32_t i = 0; i < rep; ++i)
    if (image_[d][i] >= i) ++idx;
  return idx;
}

std::int32_t SimplicialInvolution::orbit_representative(int d, std::int32_t orbit) const {
  std::int32_t seen = -1;
  for (std::size_t i = 0; i < image_[d].size(); ++i) {
    if (image_[d][i] >= static_cast<std::int32_t>(i) && ++seen == orbit)
      return static_cast<std::int32_t>(i);
  }
  throw InternalError("orbit index out of range");
}

std::int32_t SimplicialInvolution::quotient_vertex_orbit(std::int32_t v) const {
  std::int32_t idx = complex_.index_of(0, make_simplex({v}));
  if (idx < 0) throw ValidationError("vertex carries no 0-simplex");
  return orbit_index(0, idx);
}

std::int32_t SimplicialInvolution::quotient_edge_orbit(std::int32_t u, std::int32_t v) const {
  std::int32_t idx = complex_.index_of(1, make_simplex({u, v}));
  if (idx < 0) throw ValidationError("no such edge in the complex");
  return orbit_index(1, idx);
}

void SimplicialInvolution::require_regular(const char* op) const {
  if (!smith_regular())
    throw HypothesisError(std::string(op) +
                          ": an invariant simplex is not pointwise fixed; "
                          "subdivide first (smith_regularized)");
}

ChainComplexF2 SimplicialInvolution::quotient_chain_complex() const {
  require_regular("quotient_chain_complex");
  const int D = complex_.dim();
  ChainComplexF2 C;
  C.ranks.resize(D + 1);
  C.boundaries.resize(D + 1);
  // Precompute orbit index per simplex: representatives in increasing order.
  std::vector<std::vector<std::int32_t>> orbit_of(D + 1);
  std::vector<std::vector<std::int32_t>> reps(D + 1);
  for (int d = 0; d <= D; ++d) {
    orbit_of[d].assign(image_[d].size(), -1);
    for (std::size_t i = 0; i < image_[d].size(); ++i) {
      if (image_[d][i] >= static_cast<std::int32_t>(i)) {
        orbit_of[d][i] = static_cast<std::int32_t>(reps[d].size());
        reps[d].push_back(static_cast<std::int32_t>(i));
      } else {
        orbit_of[d][i] = orbit_of[d][image_[d][i]];
      }
    }
    C.ranks[d] = reps[d].size();
  }
  for (int d = 0; d <= D; ++d) {
    C.boundaries[d].resize(reps[d].size());
    if (d == 0) continue;
    for (std::size_t o = 0; o < reps[d].size(); ++o) {
      const Simplex& s = complex_.simplices(d)[reps[d][o]];
      auto& col = C.boundaries[d][o];
      for (int drop = 0; drop <= d; ++drop) {
        Simplex f{-1, -1, -1, -1, -1};
        int k = 0;
        for (int j = 0; j <= d; ++j)
          if (j != drop) f[k++] = s[j];
        std::int32_t idx = complex_.index_of(d - 1, f);
        if (idx < 0) throw InternalError("complex is not closed under faces");
        col.push_back(orbit_of[d - 1][idx]);
      }
      std::sort(col.begin(), col.end());
      for (std::size_t j = 0; j + 1 < col.size(); ++j)
        if (col[j] == col[j + 1])
          throw InternalError("two faces of one simplex share an orbit");
    }
  }
  C.verify_dd_zero();
  return C;
}

SimplicialInvolution smith_regularized(const SimplicialInvolution& inv,
                                       int* subdivisions, std::size_t budget) {
  SimplicialInvolution cur = inv;
  for (int round = 0; round <= 2; ++round) {
    if (cur.smith_regular()) {
      if (subdivisions) *subdivisions = round;
      return cur;
    }
    if (round == 2) break;
    const SimplicialComplex& K = cur.complex();
    SimplicialComplex sd = K.barycentric_subdivision(budget);
    // Subdivision vertex ids follow the dimension-first cell order of K.
    std::vector<std::size_t> offset(K.dim() + 2, 0);
    for (int d = 0; d <= K.dim(); ++d)
      offset[d + 1] = offset[d] + K.simplices(d).size();
    std::vector<std::int32_t> vm(sd.num_vertices());
    for (int d = 0; d <= K.dim(); ++d)
      for (std::size_t i = 0; i < K.simplices(d).size(); ++i)
        vm[offset[d] + i] = static_cast<std::int32_t>(offset[d] + cur.image_index(d, static_cast<std::int32_t>(i)));
    cur = SimplicialInvolution(std::move(sd), std::move(vm));
  }
  throw InternalError("involution still irregular after two subdivisions");
}

int double_cover_class_eval(const SimplicialInvolution& inv,
                            const std::vector<std::int32_t>& cycle_edge_orbits) {
  // Reduce the edge list mod 2: a repeated orbit cancels.
  std::vector<std::int32_t> edges = cycle_edge_orbits;
  std::sort(edges.begin(), edges.end());
  std::vector<std::int32_t> reduced;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if ((j - i) % 2) reduced.push_back(edges[i]);
    i = j;
  }

  const auto& vm = inv.vertex_map();
  std::map<std::int32_t, int> degree;
  int klass = 0;
  for (std::int32_t orbit : reduced) {
    std::int32_t rep = inv.orbit_representative(1, orbit);
    if (inv.simplex_invariant(1, rep))
      throw ValidationError("cycle uses an invariant edge; the action is not free there");
    const Simplex& s = inv.complex().simplices(1)[rep];
    std::int32_t u = s[0], v = s[1];
    if (vm[u] == u || vm[v] == v)
      throw ValidationError("cycle touches a fixed vertex; the action is not free there");
    degree[inv.quotient_vertex_orbit(u)] ^= 1;
    degree[inv.quotient_vertex_orbit(v)] ^= 1;
    // Sheet indicator: 0 on the canonical representative of a vertex orbit.
    int su = u != std::min(u, vm[u]);
    int sv = v != std::min(v, vm[v]);
    klass ^= su ^ sv;
  }
  for (const auto& [vert, deg] : degree)
    if (deg) throw ValidationError("edge set is not a cycle: odd degree at a vertex");
  return klass;
}

}  // namespace stmax
