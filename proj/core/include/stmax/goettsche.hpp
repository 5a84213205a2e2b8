#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stmax {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient table of the two-variable Betti generating function for Hilbert
// schemes of points: rows[n][i] = b_i of the n-th Hilbert power, 0 <= i <= 4n.
struct BettiSeries {
  std::array<long long, 5> b_input{};
  int n_max = 0;
  std::vector<std::vector<BigInt>> rows;

  const BigInt& at(int n, int i) const;
  BigInt row_sum(int n) const;
};

inline constexpr std::size_t kDefaultSeriesBudget = 8'000'000;  // table cells

// Expands prod_{m>=1} (1+z^{2m-1}q^m)^{b1} (1+z^{2m+1}q^m)^{b3} /
// [(1-z^{2m-2}q^m)^{b0} (1-z^{2m}q^m)^{b2} (1-z^{2m+2}q^m)^{b4}]
// truncated at q^n_max, with exact integer arithmetic throughout.
// Requires b0 = 1 and n_max >= 1; factors with m > n_max cannot contribute.
BettiSeries hilb_betti_series(const std::array<long long, 5>& b, int n_max,
                              std::size_t cell_budget = kDefaultSeriesBudget);

// True iff the n=2 row total equals b_star(b_star+1)/2 + b_star - 2*b1.
bool check_cx_relation(const std::array<long long, 5>& b);

}  // namespace stmax
