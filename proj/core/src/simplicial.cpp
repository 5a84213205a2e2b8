#include "stmax/simplicial.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stmax/errors.hpp"
#include "stmax/gf2.hpp"

namespace stmax {

Simplex make_simplex(const std::vector<std::int32_t>& vertices) {
  if (vertices.empty() || vertices.size() > 5)
    throw ValidationError("simplex needs 1 to 5 vertices");
  Simplex s{-1, -1, -1, -1, -1};
  std::copy(vertices.begin(), vertices.end(), s.begin());
  std::sort(s.begin(), s.begin() + vertices.size());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (s[i] == s[i + 1]) throw ValidationError("simplex has a repeated vertex");
  if (s[0] < 0) throw ValidationError("simplex has a negative vertex id");
  return s;
}

int simplex_dim(const Simplex& s) {
  int d = -1;
  while (d + 1 < 5 && s[d + 1] >= 0) ++d;
  return d;
}

void ChainComplexF2::verify_dd_zero() const {
  for (int d = 2; d <= top_dim(); ++d) {
    std::vector<std::uint8_t> parity(d >= 2 ? ranks[d - 2] : 0, 0);
    for (const auto& col : boundaries[d]) {
      for (std::int32_t r : col)
        for (std::int32_t rr : boundaries[d - 1][r]) parity[rr] ^= 1;
      for (std::int32_t r : col)
        for (std::int32_t rr : boundaries[d - 1][r])
          if (parity[rr]) throw InternalError("chain complex: dd != 0");
      for (std::int32_t r : col)
        for (std::int32_t rr : boundaries[d - 1][r]) parity[rr] = 0;
    }
  }
}

std::vector<long long> ChainComplexF2::betti() const {
  std::vector<long long> b(ranks.size(), 0);
  std::vector<std::size_t> brank(ranks.size() + 1, 0);
  for (int d = 1; d <= top_dim(); ++d)
    brank[d] = boundary_rank(boundaries[d], ranks[d - 1]);
  for (int d = 0; d <= top_dim(); ++d)
    b[d] = static_cast<long long>(ranks[d]) - static_cast<long long>(brank[d]) -
           static_cast<long long>(brank[d + 1]);
  return b;
}

long long ChainComplexF2::euler() const {
  long long e = 0;
  for (int d = 0; d <= top_dim(); ++d)
    e += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(ranks[d]);
  return e;
}

SimplicialComplex SimplicialComplex::from_maximal(
    std::int32_t num_vertices, const std::vector<std::vector<std::int32_t>>& maximal,
    std::size_t budget) {
  SimplicialComplex K;
  K.num_vertices_ = num_vertices;
  std::vector<std::vector<Simplex>> acc(5);
  for (const auto& vs : maximal) {
    Simplex top = make_simplex(vs);
    int d = simplex_dim(top);
    if (top[d] >= num_vertices)
      throw ValidationError("simplex vertex id out of range");
    // All nonempty subsets of the vertex set.
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
      std::vector<std::int32_t> face;
      for (int i = 0; i <= d; ++i)
        if (mask & (1u << i)) face.push_back(top[i]);
      acc[face.size() - 1].push_back(make_simplex(face));
    }
  }
  std::size_t total = 0;
  int top_d = -1;
  for (int d = 0; d < 5; ++d) {
    std::sort(acc[d].begin(), acc[d].end());
    acc[d].erase(std::unique(acc[d].begin(), acc[d].end()), acc[d].end());
    total += acc[d].size();
    if (!acc[d].empty()) top_d = d;
  }
  if (total == 0) throw ValidationError("empty complex");
  if (total > budget)
    throw ResourceError("complex needs " + std::to_string(total) +
                        " simplices, budget is " + std::to_string(budget));
  acc.resize(top_d + 1);
  K.by_dim_ = std::move(acc);
  return K;
}

SimplicialComplex SimplicialComplex::disjoint_union(const SimplicialComplex& a,
                                                    const SimplicialComplex& b) {
  SimplicialComplex K;
  K.num_vertices_ = a.num_vertices_ + b.num_vertices_;
  K.by_dim_.resize(std::max(a.by_dim_.size(), b.by_dim_.size()));
  for (std::size_t d = 0; d < K.by_dim_.size(); ++d) {
    if (d < a.by_dim_.size()) K.by_dim_[d] = a.by_dim_[d];
    if (d < b.by_dim_.size()) {
      for (Simplex s : b.by_dim_[d]) {
        for (int i = 0; i <= static_cast<int>(d); ++i) s[i] += a.num_vertices_;
        K.by_dim_[d].push_back(s);
      }
    }
    std::sort(K.by_dim_[d].begin(), K.by_dim_[d].end());
  }
  return K;
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& v : by_dim_) n += v.size();
  return n;
}

std::int32_t SimplicialComplex::index_of(int d, const Simplex& s) const {
  if (d < 0 || d > dim()) return -1;
  const auto& v = by_dim_[d];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) return -1;
  return static_cast<std::int32_t>(it - v.begin());
}

ChainComplexF2 SimplicialComplex::chain_complex() const {
  ChainComplexF2 C;
  C.ranks.resize(dim() + 1);
  C.boundaries.resize(dim() + 1);
  for (int d = 0; d <= dim(); ++d) {
    C.ranks[d] = by_dim_[d].size();
    C.boundaries[d].resize(by_dim_[d].size());
    if (d == 0) continue;
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i) {
      const Simplex& s = by_dim_[d][i];
      auto& col = C.boundaries[d][i];
      for (int drop = 0; drop <= d; ++drop) {
        Simplex f{-1, -1, -1, -1, -1};
        int k = 0;
        for (int j = 0; j <= d; ++j)
          if (j != drop) f[k++] = s[j];
        std::int32_t idx = index_of(d - 1, f);
        if (idx < 0) throw InternalError("complex is not closed under faces");
        col.push_back(idx);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return C;
}

std::vector<std::vector<std::int32_t>> SimplicialComplex::maximal_simplices() const {
  std::vector<std::vector<std::int32_t>> out;
  for (int d = 0; d <= dim(); ++d) {
    std::vector<std::uint8_t> is_face(by_dim_[d].size(), 0);
    if (d + 1 <= dim()) {
      for (const Simplex& s : by_dim_[d + 1]) {
        for (int drop = 0; drop <= d + 1; ++drop) {
          Simplex f{-1, -1, -1, -1, -1};
          int k = 0;
          for (int j = 0; j <= d + 1; ++j)
            if (j != drop) f[k++] = s[j];
          std::int32_t idx = index_of(d, f);
          if (idx >= 0) is_face[idx] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i) {
      if (is_face[i]) continue;
      std::vector<std::int32_t> vs;
      for (int j = 0; j <= d; ++j) vs.push_back(by_dim_[d][i][j]);
      out.push_back(std::move(vs));
    }
  }
  return out;
}

std::vector<long long> homology_ranks(const SimplicialComplex& K) {
  ChainComplexF2 C = K.chain_complex();
  C.verify_dd_zero();
  return C.betti();
}

int CellPoset::top_dim() const {
  int t = -1;
  for (int d : dim) t = std::max(t, d);
  return t;
}

CellPoset CellPoset::from_simplicial(const SimplicialComplex& K) {
  CellPoset p;
  std::vector<std::size_t> offset(K.dim() + 2, 0);
  for (int d = 0; d <= K.dim(); ++d)
    offset[d + 1] = offset[d] + K.simplices(d).size();
  p.dim.resize(offset[K.dim() + 1]);
  p.closure.resize(p.dim.size());
  for (int d = 0; d <= K.dim(); ++d) {
    for (std::size_t i = 0; i < K.simplices(d).size(); ++i) {
      std::size_t id = offset[d] + i;
      p.dim[id] = d;
      const Simplex& s = K.simplices(d)[i];
      auto& cl = p.closure[id];
      for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
        std::vector<std::int32_t> face;
        for (int j = 0; j <= d; ++j)
          if (mask & (1u << j)) face.push_back(s[j]);
        int fd = static_cast<int>(face.size()) - 1;
        std::int32_t idx = K.index_of(fd, make_simplex(face));
        if (idx < 0) throw InternalError("complex is not closed under faces");
        cl.push_back(static_cast<std::int32_t>(offset[fd] + idx));
      }
      std::sort(cl.begin(), cl.end());
    }
  }
  return p;
}

CellPoset CellPoset::product(const CellPoset& a, const CellPoset& b) {
  CellPoset p;
  const std::size_t nb = b.size();
  p.dim.resize(a.size() * nb);
  p.closure.resize(p.dim.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::size_t id = i * nb + j;
      p.dim[id] = a.dim[i] + b.dim[j];
      auto& cl = p.closure[id];
      cl.reserve(a.closure[i].size() * b.closure[j].size());
      for (std::int32_t x : a.closure[i])
        for (std::int32_t y : b.closure[j])
          cl.push_back(static_cast<std::int32_t>(x * nb + y));
      std::sort(cl.begin(), cl.end());
    }
  }
  return p;
}

void validate_poset(const CellPoset& p) {
  if (p.dim.size() != p.closure.size())
    throw InternalError("poset: dim/closure size mismatch");
  for (std::size_t c = 0; c < p.size(); ++c) {
    const auto& cl = p.closure[c];
    if (!std::is_sorted(cl.begin(), cl.end()))
      throw InternalError("poset: closure list not sorted");
    if (!std::binary_search(cl.begin(), cl.end(), static_cast<std::int32_t>(c)))
      throw InternalError("poset: cell missing from its own closure");
    for (std::int32_t x : cl) {
      if (x < 0 || static_cast<std::size_t>(x) >= p.size())
        throw InternalError("poset: closure id out of range");
      if (static_cast<std::size_t>(x) != c && p.dim[x] >= p.dim[c])
        throw InternalError("poset: face dimension does not drop");
      for (std::int32_t y : p.closure[x])
        if (!std::binary_search(cl.begin(), cl.end(), y))
          throw InternalError("poset: closure is not transitive");
    }
  }
}

std::vector<std::int32_t> product_swap(const CellPoset& factor) {
  const std::size_t n = factor.size();
  std::vector<std::int32_t> perm(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      perm[a * n + b] = static_cast<std::int32_t>(b * n + a);
  return perm;
}

SimplicialComplex order_complex_impl(const CellPoset& p, std::size_t budget) {
  // Chains are enumerated descending from their top cell, so each chain is
  // produced exactly once; subchains of chains are chains, so the result is
  // face-closed by construction.
  std::vector<std::vector<std::int32_t>> below(p.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    for (std::int32_t x : p.closure[c])
      if (static_cast<std::size_t>(x) != c) below[c].push_back(x);

  SimplicialComplex K;
  K.num_vertices_ = static_cast<std::int32_t>(p.size());
  std::vector<std::vector<Simplex>> acc(5);
  std::size_t total = 0;
  std::vector<std::int32_t> chain;
  auto emit = [&](const std::vector<std::int32_t>& ch) {
    if (++total > budget)
      throw ResourceError("order complex exceeds budget of " + std::to_string(budget) +
                          " simplices");
    acc[ch.size() - 1].push_back(make_simplex(ch));
  };
  // Iterative DFS: extend the current chain by cells strictly below its last.
  struct Frame {
    std::int32_t cell;
    std::size_t next;
  };
  for (std::size_t start = 0; start < p.size(); ++start) {
    std::vector<Frame> stack;
    stack.push_back({static_cast<std::int32_t>(start), 0});
    chain.assign(1, static_cast<std::int32_t>(start));
    emit(chain);
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& ext = below[f.cell];
      if (f.next < ext.size()) {
        std::int32_t nxt = ext[f.next++];
        chain.push_back(nxt);
        emit(chain);
        stack.push_back({nxt, 0});
      } else {
        stack.pop_back();
        chain.pop_back();
      }
    }
  }
  int top_d = -1;
  for (int d = 0; d < 5; ++d) {
    std::sort(acc[d].begin(), acc[d].end());
    if (!acc[d].empty()) top_d = d;
  }
  acc.resize(top_d + 1);
  K.by_dim_ = std::move(acc);
  return K;
}

SimplicialComplex order_complex(const CellPoset& p, std::size_t budget) {
  if (p.top_dim() > 4)
    throw ValidationError("order complex would exceed dimension 4");
  return order_complex_impl(p, budget);
}

SimplicialComplex SimplicialComplex::barycentric_subdivision(std::size_t budget) const {
  return order_complex(CellPoset::from_simplicial(*this), budget);
}

SimplicialComplex torus_7() {
  std::vector<std::vector<std::int32_t>> faces;
  for (std::int32_t i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_maximal(7, faces);
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_maximal(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex sphere_boundary(int n) {
  if (n < 1 || n > 5)
    throw ValidationError("sphere_boundary supports 1 <= n <= 5");
  std::vector<std::vector<std::int32_t>> maximal;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<std::int32_t> s;
    for (int j = 0; j <= n; ++j)
      if (j != drop) s.push_back(j);
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(n + 1, maximal);
}

SimplicialComplex octahedron() {
  // Vertices 0/1, 2/3, 4/5 are opposite pairs; faces pick one from each pair.
  std::vector<std::vector<std::int32_t>> faces;
  for (std::int32_t x = 0; x < 2; ++x)
    for (std::int32_t y = 2; y < 4; ++y)
      for (std::int32_t z = 4; z < 6; ++z) faces.push_back({x, y, z});
  return SimplicialComplex::from_maximal(6, faces);
}

SimplicialComplex cycle_complex(std::int32_t n) {
  if (n < 3) throw ValidationError("cycle_complex needs n >= 3");
  std::vector<std::vector<std::int32_t>> edges;
  for (std::int32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_maximal(n, edges);
}

CellPoset pillow_sphere() {
  // Two vertices 0, 1; two edges 2, 3 joining them; two faces 4, 5 glued
  // along the digon 2 u 3.
  CellPoset p;
  p.dim = {0, 0, 1, 1, 2, 2};
  p.closure = {{0}, {1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}};
  return p;
}

namespace {

// Shared layout for the grid surfaces: cols x rows cells, vertices first,
// then horizontal edges, vertical edges, faces.
struct Grid {
  std::int32_t cols, rows;
  std::int32_t v(std::int32_t i, std::int32_t j) const {
    return ((j % rows + rows) % rows) * cols + ((i % cols + cols) % cols);
  }
  std::int32_t h(std::int32_t i, std::int32_t j) const {
    return cols * rows + ((j % rows + rows) % rows) * cols + ((i % cols + cols) % cols);
  }
  std::int32_t w(std::int32_t i, std::int32_t j) const {
    return 2 * cols * rows + ((j % rows + rows) % rows) * cols + ((i % cols + cols) % cols);
  }
  std::int32_t q(std::int32_t i, std::int32_t j) const {
    return 3 * cols * rows + ((j % rows + rows) % rows) * cols + ((i % cols + cols) % cols);
  }
};

}  // namespace

CellPoset torus_grid() {
  // 2x2 grid on the torus: h(i,j) joins v(i,j) and v(i+1,j); w(i,j) joins
  // v(i,j) and v(i,j+1); q(i,j) spans [i,i+1] x [j,j+1].
  Grid g{2, 2};
  CellPoset p;
  p.dim.resize(16);
  p.closure.resize(16);
  for (std::int32_t j = 0; j < 2; ++j) {
    for (std::int32_t i = 0; i < 2; ++i) {
      p.dim[g.v(i, j)] = 0;
      p.closure[g.v(i, j)] = {g.v(i, j)};
      p.dim[g.h(i, j)] = 1;
      p.closure[g.h(i, j)] = {g.v(i, j), g.v(i + 1, j), g.h(i, j)};
      p.dim[g.w(i, j)] = 1;
      p.closure[g.w(i, j)] = {g.v(i, j), g.v(i, j + 1), g.w(i, j)};
      p.dim[g.q(i, j)] = 2;
      p.closure[g.q(i, j)] = {g.v(i, j),     g.v(i + 1, j), g.v(i, j + 1),
                              g.v(i + 1, j + 1), g.h(i, j),  g.h(i, j + 1),
                              g.w(i, j),     g.w(i + 1, j), g.q(i, j)};
    }
  }
  for (auto& cl : p.closure) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  }
  return p;
}

CellPoset klein_grid() {
  // Klein bottle as a 3-column, 2-row grid on S^1 x [0,2] with the top glued
  // to the bottom through the reflection flip(i) = (3 - i) % 3. Row-1 faces
  // therefore pick up the reflected bottom edge h((2 - i) % 3, 0) and the
  // flipped corner vertices.
  Grid g{3, 2};
  auto flip = [](std::int32_t i) { return (3 - (i % 3 + 3) % 3) % 3; };
  CellPoset p;
  p.dim.resize(24);
  p.closure.resize(24);
  for (std::int32_t j = 0; j < 2; ++j) {
    for (std::int32_t i = 0; i < 3; ++i) {
      p.dim[g.v(i, j)] = 0;
      p.closure[g.v(i, j)] = {g.v(i, j)};
      p.dim[g.h(i, j)] = 1;
      p.closure[g.h(i, j)] = {g.v(i, j), g.v(i + 1, j), g.h(i, j)};
      p.dim[g.w(i, j)] = 1;
      p.dim[g.q(i, j)] = 2;
    }
  }
  for (std::int32_t i = 0; i < 3; ++i) {
    p.closure[g.w(i, 0)] = {g.v(i, 0), g.v(i, 1), g.w(i, 0)};
    p.closure[g.w(i, 1)] = {g.v(i, 1), g.v(flip(i), 0), g.w(i, 1)};
    p.closure[g.q(i, 0)] = {g.v(i, 0),     g.v(i + 1, 0), g.v(i, 1), g.v(i + 1, 1),
                            g.h(i, 0),     g.h(i, 1),     g.w(i, 0), g.w(i + 1, 0),
                            g.q(i, 0)};
    p.closure[g.q(i, 1)] = {g.v(i, 1),        g.v(i + 1, 1),  g.v(flip(i), 0),
                            g.v(flip(i + 1), 0), g.h(i, 1),   g.h((2 - i % 3 + 3) % 3, 0),
                            g.w(i, 1),        g.w(i + 1, 1),  g.q(i, 1)};
  }
  for (auto& cl : p.closure) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
  }
  return p;
}

CellPoset rp2_cells() {
  // Antipodal quotient of the octahedron: vertices x=0, y=1, z=2; edges
  // xy0=3, xy1=4, xz0=5, xz1=6, yz0=7, yz1=8; faces 9..12.
  CellPoset p;
  p.dim = {0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2};
  p.closure.resize(13);
  for (std::int32_t v = 0; v < 3; ++v) p.closure[v] = {v};
  p.closure[3] = {0, 1, 3};  // xy0
  p.closure[4] = {0, 1, 4};  // xy1
  p.closure[5] = {0, 2, 5};  // xz0
  p.closure[6] = {0, 2, 6};  // xz1
  p.closure[7] = {1, 2, 7};  // yz0
  p.closure[8] = {1, 2, 8};  // yz1
  p.closure[9] = {0, 1, 2, 3, 5, 7, 9};    // (xy0, xz0, yz0)
  p.closure[10] = {0, 1, 2, 3, 6, 8, 10};  // (xy0, xz1, yz1)
  p.closure[11] = {0, 1, 2, 4, 5, 8, 11};  // (xy1, xz0, yz1)
  p.closure[12] = {0, 1, 2, 4, 6, 7, 12};  // (xy1, xz1, yz0)
  return p;
}

CellPoset cycle_poset(std::int32_t n) {
  if (n < 3) throw ValidationError("cycle_poset needs n >= 3");
  CellPoset p;
  p.dim.resize(2 * n);
  p.closure.resize(2 * n);
  for (std::int32_t i = 0; i < n; ++i) {
    p.dim[i] = 0;
    p.closure[i] = {i};
    p.dim[n + i] = 1;
    p.closure[n + i] = {i, (i + 1) % n, n + i};
    std::sort(p.closure[n + i].begin(), p.closure[n + i].end());
  }
  return p;
}

namespace {

std::vector<std::int32_t> parse_int_line(const std::string& text, int lineno) {
  std::vector<std::int32_t> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::int32_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p)
      throw ParseError("line " + std::to_string(lineno) + ": expected an integer");
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

ComplexFile read_complex(std::istream& in) {
  std::vector<std::vector<std::int32_t>> maximal;
  std::optional<std::vector<std::int32_t>> involution;
  std::string line;
  int lineno = 0;
  std::int32_t max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t fin = line.find_last_not_of(" \t\r");
    std::string body = line.substr(begin, fin - begin + 1);
    if (body.rfind("involution:", 0) == 0) {
      if (involution)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate involution line");
      involution = parse_int_line(body.substr(11), lineno);
      continue;
    }
    auto vs = parse_int_line(body, lineno);
    if (vs.empty()) continue;
    if (vs.size() > 5)
      throw ParseError("line " + std::to_string(lineno) + ": simplex has more than 5 vertices");
    for (std::int32_t v : vs) {
      if (v < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
      max_id = std::max(max_id, v);
    }
    maximal.push_back(std::move(vs));
  }
  if (maximal.empty()) throw ParseError("complex file lists no simplices");
  std::int32_t n = max_id + 1;
  if (involution) {
    if (static_cast<std::int32_t>(involution->size()) != n)
      throw ParseError("involution line lists " + std::to_string(involution->size()) +
                       " entries for " + std::to_string(n) + " vertices");
    for (std::int32_t v : *involution)
      if (v < 0 || v >= n) throw ParseError("involution entry out of range");
  }
  ComplexFile f;
  f.complex = SimplicialComplex::from_maximal(n, maximal);
  f.involution = std::move(involution);
  return f;
}

ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file: " + path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& K,
                   const std::optional<std::vector<std::int32_t>>& involution) {
  for (const auto& s : K.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i)
      out << (i ? " " : "") << s[i];
    out << "\n";
  }
  if (involution) {
    out << "involution:";
    for (std::int32_t v : *involution) out << " " << v;
    out << "\n";
  }
}

}  // namespace stmax
