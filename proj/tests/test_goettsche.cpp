#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "stmax/errors.hpp"
#include "stmax/goettsche.hpp"

using namespace stmax;

namespace {

// Coefficients of prod_{m=1..n_max} (1 - q^m)^(-chi) up to q^n_max, derived
// from scratch: an independent check of the z = -1 specialization.
std::vector<BigInt> euler_product(long long chi, int n_max) {
  std::vector<BigInt> f(n_max + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    long long e = -chi;
    // Multiply by (1 - q^m) e times (e >= 0), or divide e times (e < 0).
    for (long long t = 0; t < (e > 0 ? e : -e); ++t) {
      if (e > 0) {
        for (int n = n_max; n >= m; --n) f[n] -= f[n - m];
      } else {
        for (int n = m; n <= n_max; ++n) f[n] += f[n - m];
      }
    }
  }
  return f;
}

// Coefficients of prod_{m=1..n_max} (1 + q^m)^plus * (1 - q^m)^(-minus).
std::vector<BigInt> mixed_product(long long plus, long long minus, int n_max) {
  std::vector<BigInt> f(n_max + 1, 0);
  f[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    for (long long t = 0; t < plus; ++t)
      for (int n = n_max; n >= m; --n) f[n] += f[n - m];
    for (long long t = 0; t < minus; ++t)
      for (int n = m; n <= n_max; ++n) f[n] += f[n - m];
  }
  return f;
}

BigInt alternating_sum(const BettiSeries& s, int n) {
  BigInt a = 0;
  for (int i = 0; i <= 4 * n; ++i) a += (i % 2 == 0) ? s.at(n, i) : -s.at(n, i);
  return a;
}

}  // namespace

TEST_CASE("first rows reproduce known Hilbert scheme Betti numbers") {
  BettiSeries k3 = hilb_betti_series({1, 0, 22, 0, 1}, 3);
  CHECK(k3.rows[1] == std::vector<BigInt>({1, 0, 22, 0, 1}));
  CHECK(k3.rows[2] == std::vector<BigInt>({1, 0, 23, 0, 276, 0, 23, 0, 1}));
  CHECK(k3.row_sum(2) == 324);
  // n = 3 row, expanded by hand from the product: (1,0,23,0,299,0,2554,...).
  CHECK(k3.at(3, 0) == 1);
  CHECK(k3.at(3, 2) == 23);
  CHECK(k3.at(3, 4) == 299);
  CHECK(k3.at(3, 6) == 2554);
  CHECK(k3.at(3, 12) == 1);
  CHECK(k3.row_sum(3) == 3200);

  BettiSeries p2 = hilb_betti_series({1, 0, 1, 0, 1}, 2);
  CHECK(p2.rows[2] == std::vector<BigInt>({1, 0, 2, 0, 3, 0, 2, 0, 1}));
  CHECK(p2.row_sum(2) == 9);

  BettiSeries ab = hilb_betti_series({1, 4, 6, 4, 1}, 2);
  CHECK(ab.row_sum(1) == 16);
  CHECK(ab.row_sum(2) == 144);  // 16*17/2 + 16 - 8
}

TEST_CASE("odd Betti numbers land on odd z powers") {
  // Abelian surface: b1 = 4 puts mass on odd columns.
  BettiSeries s = hilb_betti_series({1, 4, 6, 4, 1}, 2);
  CHECK(s.at(1, 1) == 4);
  CHECK(s.at(2, 1) == 4);
  CHECK(s.at(2, 2) == 13);  // 6 + wedge of b1 (6) + 1 from the diagonal shift
  CHECK(s.at(2, 3) == 32);  // 4 + 24 from the square part + 4 shifted
}

TEST_CASE("rows are palindromic") {
  for (long long b1 = 0; b1 <= 8; b1 += 2) {
    for (long long b2 = 0; b2 <= 30; ++b2) {
      BettiSeries s = hilb_betti_series({1, b1, b2, b1, 1}, 3);
      for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= 4 * n; ++i)
          CHECK(s.at(n, i) == s.at(n, 4 * n - i));
    }
  }
}

TEST_CASE("z = -1 specialization matches the Euler product") {
  const int n_max = 6;
  for (std::array<long long, 5> b :
       {std::array<long long, 5>{1, 0, 22, 0, 1}, std::array<long long, 5>{1, 4, 6, 4, 1},
        std::array<long long, 5>{1, 0, 1, 0, 1}, std::array<long long, 5>{1, 2, 2, 2, 1},
        std::array<long long, 5>{1, 6, 0, 6, 1}}) {
    long long chi = b[0] - b[1] + b[2] - b[3] + b[4];
    BettiSeries s = hilb_betti_series(b, n_max);
    auto f = euler_product(chi, n_max);
    for (int n = 0; n <= n_max; ++n) CHECK(alternating_sum(s, n) == f[n]);
  }
}

TEST_CASE("closed-form total at n = 2") {
  for (long long b1 = 0; b1 <= 4; ++b1)
    for (long long b2 = 0; b2 <= 12; ++b2) CHECK(check_cx_relation({1, b1, b2, b1, 1}));
}

TEST_CASE("out-of-range reads are zero") {
  BettiSeries s = hilb_betti_series({1, 0, 1, 0, 1}, 2);
  CHECK(s.at(2, 9) == 0);
  CHECK(s.at(3, 0) == 0);
  CHECK(s.at(-1, 0) == 0);
  CHECK(s.at(1, -1) == 0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(hilb_betti_series({2, 0, 1, 0, 1}, 2), ValidationError);
  CHECK_THROWS_AS(hilb_betti_series({1, -1, 1, 0, 1}, 2), ValidationError);
  CHECK_THROWS_AS(hilb_betti_series({1, 0, 1, 0, 1}, 0), ValidationError);
  CHECK_THROWS_AS(hilb_betti_series({1, 0, 1, 0, 1}, 2000, 100), ResourceError);
}

TEST_CASE("z = 1 specialization: row totals from the one-variable product") {
  // Setting z = 1 sends weight-m factors to (1+q^m)^(b1+b3) / (1-q^m)^(b0+b2+b4).
  for (std::array<long long, 5> b :
       {std::array<long long, 5>{1, 0, 22, 0, 1}, std::array<long long, 5>{1, 4, 6, 4, 1},
        std::array<long long, 5>{1, 2, 5, 2, 1}}) {
    BettiSeries s = hilb_betti_series(b, 8);
    auto f = mixed_product(b[1] + b[3], b[0] + b[2] + b[4], 8);
    for (int n = 0; n <= 8; ++n) CHECK(s.row_sum(n) == f[n]);
  }
  // With no odd classes the total collapses to the Euler product at b_star.
  CHECK(mixed_product(0, 24, 8) == euler_product(24, 8));
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  BettiSeries s = hilb_betti_series({1, 0, 200, 0, 1}, 12);
  BigInt total = s.row_sum(12);
  CHECK(total > BigInt("9223372036854775807"));
  CHECK(total == euler_product(202, 12)[12]);
}
