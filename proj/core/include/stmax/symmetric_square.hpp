#pragma once

#include <vector>

#include "stmax/simplicial.hpp"
#include "stmax/surface_profile.hpp"

namespace stmax {

// Betti numbers of a product from the factors, degree-wise convolution.
std::vector<long long> kunneth_convolve(const std::vector<long long>& a,
                                        const std::vector<long long>& b);

// Betti numbers of K x L predicted from the factor homologies.
std::vector<long long> kunneth_product(const SimplicialComplex& K,
                                       const SimplicialComplex& L);

// Betti numbers of |A| x |B| computed directly: order complex of the product
// face poset, then simplicial homology. Independent of kunneth_product.
std::vector<long long> product_betti(const CellPoset& A, const CellPoset& B,
                                     std::size_t budget = kDefaultSimplexBudget);

// Betti numbers of the symmetric square of a closed surface, computed from a
// built-in regular cell structure: product with itself, barycentric
// subdivision via the order complex, factor-swap involution, orbit complex.
// Built-ins: sphere, torus, projective plane, Klein bottle; anything larger
// raises ResourceError with an estimate of the required size.
std::vector<long long> symmetric_square_oracle(const RealComponent& surface,
                                               std::size_t budget = kDefaultSimplexBudget);

// Same pipeline for the circle; the result is the Moebius band.
std::vector<long long> symmetric_square_circle(std::int32_t n = 3,
                                               std::size_t budget = kDefaultSimplexBudget);

}  // namespace stmax
