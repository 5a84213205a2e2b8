#include "stmax/symmetric_square.hpp"

#include <string>

#include "stmax/errors.hpp"
#include "stmax/involution.hpp"

namespace stmax {

std::vector<long long> kunneth_convolve(const std::vector<long long>& a,
                                        const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<long long> kunneth_product(const SimplicialComplex& K,
                                       const SimplicialComplex& L) {
  return kunneth_convolve(homology_ranks(K), homology_ranks(L));
}

std::vector<long long> product_betti(const CellPoset& A, const CellPoset& B,
                                     std::size_t budget) {
  SimplicialComplex D = order_complex(CellPoset::product(A, B), budget);
  return homology_ranks(D);
}

namespace {

std::vector<long long> quotient_of_square(const CellPoset& base, std::size_t budget) {
  CellPoset square = CellPoset::product(base, base);
  SimplicialComplex D = order_complex(square, budget);
  SimplicialInvolution swap(std::move(D), product_swap(base));
  // Chains have strictly increasing cell dimension, which the swap preserves,
  // so an invariant chain is fixed elementwise: regular, no subdivision.
  if (!swap.smith_regular())
    throw InternalError("factor swap is not regular on the order complex");
  ChainComplexF2 Q = swap.quotient_chain_complex();
  return Q.betti();
}

}  // namespace

std::vector<long long> symmetric_square_oracle(const RealComponent& surface,
                                               std::size_t budget) {
  CellPoset base;
  if (surface.orientable && surface.genus_or_crosscaps == 0) {
    base = pillow_sphere();
  } else if (surface.orientable && surface.genus_or_crosscaps == 1) {
    base = torus_grid();
  } else if (!surface.orientable && surface.genus_or_crosscaps == 1) {
    base = rp2_cells();
  } else if (!surface.orientable && surface.genus_or_crosscaps == 2) {
    base = klein_grid();
  } else {
    // A cell structure for higher genus needs about 8g (or 4k) faces; the
    // subdivided symmetric square grows with the square of that count.
    long long handles = surface.genus_or_crosscaps;
    long long faces = surface.orientable ? 8 * handles : 4 * handles;
    long long estimate = 2400 * faces * faces;
    throw ResourceError("no built-in cell structure for this surface; its symmetric "
                        "square needs about " + std::to_string(estimate) +
                        " simplices (budget " + std::to_string(budget) + ")");
  }
  std::vector<long long> b = quotient_of_square(base, budget);
  if (b.size() != 5)
    throw InternalError("symmetric square is not four-dimensional");
  if (b[3] != surface.beta1())
    throw InternalError("symmetric square: beta3 = " + std::to_string(b[3]) +
                        " does not match beta1 = " + std::to_string(surface.beta1()));
  return b;
}

std::vector<long long> symmetric_square_circle(std::int32_t n, std::size_t budget) {
  return quotient_of_square(cycle_poset(n), budget);
}

}  // namespace stmax
