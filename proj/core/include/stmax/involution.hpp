#pragma once

#include <cstdint>
#include <vector>

#include "stmax/simplicial.hpp"

namespace stmax {

// A simplicial involution given by a vertex permutation of order <= 2 that
// maps every simplex of the complex to a simplex of the complex.
class SimplicialInvolution {
 public:
  SimplicialInvolution(SimplicialComplex complex, std::vector<std::int32_t> vertex_map);

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<std::int32_t>& vertex_map() const { return vertex_map_; }

  std::int32_t image_index(int d, std::int32_t i) const { return image_[d][i]; }
  bool simplex_invariant(int d, std::int32_t i) const { return image_[d][i] == i; }

  // Every invariant simplex is pointwise fixed. Under this condition orbits
  // of simplices are the cells of a CW structure on the quotient.
  bool smith_regular() const;
  // No simplex is invariant, so the quotient map is a double cover.
  bool free_action() const;

  // Subcomplex of pointwise fixed simplices (vertex ids of the parent).
  SimplicialComplex fixed_subcomplex() const;

  // Quotient cells in dimension d are simplex orbits, indexed by sorted
  // minimal representative. Requires smith_regular().
  std::size_t num_orbits(int d) const;
  std::int32_t orbit_index(int d, std::int32_t simplex_index) const;
  std::int32_t orbit_representative(int d, std::int32_t orbit) const;

  std::int32_t quotient_vertex_orbit(std::int32_t v) const;
  std::int32_t quotient_edge_orbit(std::int32_t u, std::int32_t v) const;

  // Boundary of an orbit is the orbit set of the boundary of a representative.
  // Requires smith_regular(); verifies dd = 0.
  ChainComplexF2 quotient_chain_complex() const;

 private:
  void require_regular(const char* op) const;

  SimplicialComplex complex_;
  std::vector<std::int32_t> vertex_map_;
  std::vector<std::vector<std::int32_t>> image_;  // per dim: simplex -> image index
};

// Subdivides barycentrically until the involution is Smith regular; one
// subdivision always suffices. *subdivisions (optional) receives the count.
SimplicialInvolution smith_regularized(const SimplicialInvolution& inv,
                                       int* subdivisions = nullptr,
                                       std::size_t budget = kDefaultSimplexBudget);

// Pairing of the double-cover class of a free involution with a 1-cycle of
// the quotient, given as a list of quotient edge orbits. Returns 1 when the
// preimage of the cycle is connected and 0 when it splits into two copies.
// The involution must act freely on the support; the edge set must have even
// degree at every quotient vertex.
int double_cover_class_eval(const SimplicialInvolution& inv,
                            const std::vector<std::int32_t>& cycle_edge_orbits);

}  // namespace stmax
