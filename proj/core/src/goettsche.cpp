#include "stmax/goettsche.hpp"

#include <string>

#include "stmax/errors.hpp"

namespace stmax {

namespace {

const BigInt kZero = 0;

// C(n, k) for n >= 0.
BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// Multiplies the table in place by (1 + s*z^a q^m)^(s*e) truncated at q^n_max,
// where s = +1 gives a binomial numerator factor and s = -1 the geometric
// denominator factor (1 - z^a q^m)^(-e). Both expansions have non-negative
// coefficients: C(e, k) and C(e+k-1, k) respectively.
void apply_factor(std::vector<std::vector<BigInt>>& rows, int n_max, long long m, long long a,
                  long long e, bool numerator) {
  if (e == 0) return;
  long long kmax = n_max / m;
  std::vector<BigInt> c(kmax + 1);
  for (long long k = 0; k <= kmax; ++k)
    c[k] = numerator ? binomial(e, k) : binomial(e + k - 1, k);
  for (int n = n_max; n >= static_cast<int>(m); --n) {
    for (long long k = 1; k <= n / m; ++k) {
      if (c[k] == 0) continue;
      const auto& src = rows[n - k * m];
      long long shift = a * k;
      long long hi = static_cast<long long>(src.size()) - 1;
      for (long long i = 0; i <= hi; ++i) {
        if (src[i] == 0) continue;
        rows[n][i + shift] += c[k] * src[i];
      }
    }
  }
}

}  // namespace

const BigInt& BettiSeries::at(int n, int i) const {
  if (n < 0 || n > n_max || i < 0 || i > 4 * n) return kZero;
  return rows[n][i];
}

BigInt BettiSeries::row_sum(int n) const {
  BigInt s = 0;
  for (const auto& v : rows[n]) s += v;
  return s;
}

BettiSeries hilb_betti_series(const std::array<long long, 5>& b, int n_max,
                              std::size_t cell_budget) {
  if (b[0] != 1) throw ValidationError("hilb_betti_series: b0 must equal 1 (connected surface)");
  for (auto v : b)
    if (v < 0) throw ValidationError("hilb_betti_series: Betti numbers must be non-negative");
  if (n_max < 1) throw ValidationError("hilb_betti_series: n_max must be at least 1");
  std::size_t cells = 0;
  for (int n = 0; n <= n_max; ++n) cells += static_cast<std::size_t>(4 * n + 1);
  if (cells > cell_budget)
    throw ResourceError("hilb_betti_series: table needs " + std::to_string(cells) +
                        " cells, budget is " + std::to_string(cell_budget));

  BettiSeries s;
  s.b_input = b;
  s.n_max = n_max;
  s.rows.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) s.rows[n].assign(4 * n + 1, 0);
  s.rows[0][0] = 1;

  for (long long m = 1; m <= n_max; ++m) {
    apply_factor(s.rows, n_max, m, 2 * m - 1, b[1], true);
    apply_factor(s.rows, n_max, m, 2 * m + 1, b[3], true);
    apply_factor(s.rows, n_max, m, 2 * m - 2, b[0], false);
    apply_factor(s.rows, n_max, m, 2 * m, b[2], false);
    apply_factor(s.rows, n_max, m, 2 * m + 2, b[4], false);
  }
  return s;
}

bool check_cx_relation(const std::array<long long, 5>& b) {
  auto s = hilb_betti_series(b, 2);
  BigInt bstar = b[0] + b[1] + b[2] + b[3] + b[4];
  BigInt expected = bstar * (bstar + 1) / 2 + bstar - 2 * b[1];
  return s.row_sum(2) == expected;
}

}  // namespace stmax
