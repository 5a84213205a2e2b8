#pragma once

#include <vector>

#include "stmax/involution.hpp"
#include "stmax/simplicial.hpp"

namespace stmax {

// Homology data of the exact sequence tying a complex X with involution to
// the fixed locus F and the image complex Im(1+c):
//
//   ... -> H_{k+1}(Im) -D-> H_k(Im) + H_k(F) -t-> H_k(X) -p-> H_k(Im) -> ...
//
// Index k runs over the degrees of X; maps out of degree k are stored at k.
struct SmithData {
  int subdivisions = 0;
  std::vector<long long> betti_x;
  std::vector<long long> betti_f;
  std::vector<long long> betti_xbar_f;      // dims of H_k(Im)
  std::vector<long long> delta_rank;        // rank of D out of H_k(Im)
  std::vector<long long> transfer_inc_rank; // rank of t into H_k(X)
  std::vector<long long> proj_rank;         // rank of p out of H_k(X)
  std::vector<long long> coker_dim;         // dim H_k(X) - transfer_inc_rank[k]
  bool long_sequence_exact = false;

  long long beta_star_x() const;
  long long beta_star_f() const;
};

// Builds the sequence (subdividing to a regular action if needed), verifies
// exactness at every node and the rank identity
//   beta*(F) + 2 * sum_k coker_dim[k] = beta*(X),
// throwing InternalError when either fails.
SmithData smith_sequence(const SimplicialInvolution& inv,
                         std::size_t budget = kDefaultSimplexBudget);

// True when every truncation 0 -> H_{k+1}(Im) -> H_k(Im) + H_k(F) -> H_k(X) -> 0
// is exact; equivalent to beta*(F) = beta*(X), and cross-checked against it.
bool maximality_exactness(const SimplicialInvolution& inv,
                          std::size_t budget = kDefaultSimplexBudget);

}  // namespace stmax
