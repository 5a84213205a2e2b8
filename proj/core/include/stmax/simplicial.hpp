#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stmax {

// Simplex of dimension <= 4: sorted vertex ids, padded with -1.
using Simplex = std::array<std::int32_t, 5>;

Simplex make_simplex(const std::vector<std::int32_t>& vertices);
int simplex_dim(const Simplex& s);

inline constexpr std::size_t kDefaultSimplexBudget = 5'000'000;

// Chain complex over GF(2): boundaries[d] maps degree d to degree d-1, one
// sorted row-index column per d-cell. boundaries[0] is a list of empty columns.
struct ChainComplexF2 {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::vector<std::int32_t>>> boundaries;

  int top_dim() const { return static_cast<int>(ranks.size()) - 1; }
  void verify_dd_zero() const;
  std::vector<long long> betti() const;
  long long euler() const;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds the face closure of the given maximal simplices (each a distinct
  // sorted vertex list of size <= 5). Every vertex id below num_vertices that
  // appears gets its 0-simplex; unused ids are allowed but carry no cell.
  static SimplicialComplex from_maximal(std::int32_t num_vertices,
                                        const std::vector<std::vector<std::int32_t>>& maximal,
                                        std::size_t budget = kDefaultSimplexBudget);

  static SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                          const SimplicialComplex& b);

  std::int32_t num_vertices() const { return num_vertices_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const;
  const std::vector<Simplex>& simplices(int d) const { return by_dim_[d]; }
  std::int32_t index_of(int d, const Simplex& s) const;  // -1 when absent

  ChainComplexF2 chain_complex() const;
  SimplicialComplex barycentric_subdivision(std::size_t budget = kDefaultSimplexBudget) const;
  std::vector<std::vector<std::int32_t>> maximal_simplices() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::int32_t num_vertices_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  friend class SimplicialInvolution;
  friend SimplicialComplex order_complex_impl(const struct CellPoset&, std::size_t);
};

// beta_d = dim C_d - rank d_d - rank d_{d+1}; verifies dd = 0 first.
std::vector<long long> homology_ranks(const SimplicialComplex& K);

// Face poset of a regular CW complex. closure[c] lists every cell in the
// closed cell c, itself included, sorted by id. Cells of from_simplicial are
// ordered dimension-first, matching the simplex indexing of the complex.
struct CellPoset {
  std::vector<int> dim;
  std::vector<std::vector<std::int32_t>> closure;

  std::size_t size() const { return dim.size(); }
  int top_dim() const;

  static CellPoset from_simplicial(const SimplicialComplex& K);
  // Cell (a, b) gets id a * B.size() + b; closures multiply.
  static CellPoset product(const CellPoset& a, const CellPoset& b);
};

// Checks reflexivity, strict dimension drop and transitivity of closures.
// Throws InternalError naming the first violation.
void validate_poset(const CellPoset& p);

// The swap (a, b) -> (b, a) as a cell permutation of product(factor, factor).
std::vector<std::int32_t> product_swap(const CellPoset& factor);

// Order complex: one vertex per cell, one d-simplex per chain of d+1 cells
// strictly ordered by the closure relation. For the face poset of a regular
// CW complex this is its barycentric subdivision.
SimplicialComplex order_complex(const CellPoset& p, std::size_t budget = kDefaultSimplexBudget);

// Built-in simplicial complexes.
SimplicialComplex torus_7();           // 7-vertex torus
SimplicialComplex rp2_6();             // 6-vertex projective plane
SimplicialComplex sphere_boundary(int n);  // boundary of the n-simplex, n <= 5
SimplicialComplex octahedron();        // vertex pairs (0,1), (2,3), (4,5) opposite
SimplicialComplex cycle_complex(std::int32_t n);

// Built-in regular CW structures (small face posets).
CellPoset pillow_sphere();  // S^2: 2 vertices, 2 edges, 2 faces
CellPoset torus_grid();     // T^2: 2x2 grid, 16 cells
CellPoset klein_grid();     // Klein bottle: 3x2 grid with a flipped seam
CellPoset rp2_cells();      // RP^2: antipodal quotient of the octahedron, 13 cells
CellPoset cycle_poset(std::int32_t n);  // S^1: vertices 0..n-1, edge n+i = {i, i+1}

// Plain-text exchange format: one maximal simplex per line (space-separated
// vertex ids), optionally one `involution: p0 p1 ...` vertex permutation line.
struct ComplexFile {
  SimplicialComplex complex;
  std::optional<std::vector<std::int32_t>> involution;
};

ComplexFile read_complex(std::istream& in);
ComplexFile read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& K,
                   const std::optional<std::vector<std::int32_t>>& involution = std::nullopt);

}  // namespace stmax
