#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "stmax/errors.hpp"
#include "stmax/simplicial.hpp"
#include "stmax/symmetric_square.hpp"

using namespace stmax;

using VL = std::vector<long long>;

TEST_CASE("kunneth convolution") {
  CHECK(kunneth_convolve({1, 1}, {1, 1}) == VL{1, 2, 1});
  CHECK(kunneth_convolve({1}, {1, 2, 1}) == VL{1, 2, 1});
  CHECK(kunneth_convolve({2}, {1, 0, 1}) == VL{2, 0, 2});
  CHECK(kunneth_convolve({1, 2, 1}, {1, 2, 1}) == VL{1, 4, 6, 4, 1});
}

TEST_CASE("kunneth prediction matches computed homology of products") {
  CHECK(kunneth_product(cycle_complex(3), cycle_complex(4)) == VL{1, 2, 1});
  CHECK(kunneth_product(torus_7(), cycle_complex(3)) == VL{1, 3, 3, 1});

  CHECK(product_betti(cycle_poset(4), cycle_poset(5)) == VL{1, 2, 1});
  CHECK(product_betti(pillow_sphere(), cycle_poset(3)) == VL{1, 1, 1, 1});
  CHECK(product_betti(pillow_sphere(), cycle_poset(3)) ==
        kunneth_product(octahedron(), cycle_complex(3)));
  CHECK_THROWS_AS(product_betti(torus_grid(), torus_grid(), 100), ResourceError);
}

TEST_CASE("symmetric squares of the built-in surfaces") {
  CHECK(symmetric_square_oracle(RealComponent::sphere()) == VL{1, 0, 1, 0, 1});
  CHECK(symmetric_square_oracle(RealComponent::orientable_genus(1)) == VL{1, 2, 2, 2, 1});
  CHECK(symmetric_square_oracle(RealComponent::nonorientable_crosscaps(1)) ==
        VL{1, 1, 1, 1, 1});
  CHECK(symmetric_square_oracle(RealComponent::nonorientable_crosscaps(2)) ==
        VL{1, 2, 2, 2, 1});
}

TEST_CASE("symmetric square of the circle is the moebius band") {
  CHECK(symmetric_square_circle() == VL{1, 1, 0});
  CHECK(symmetric_square_circle(6) == VL{1, 1, 0});
}

TEST_CASE("surfaces without a built-in cell structure are refused with an estimate") {
  try {
    symmetric_square_oracle(RealComponent::orientable_genus(2));
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("symmetric") != std::string::npos);
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
  CHECK_THROWS_AS(symmetric_square_oracle(RealComponent::nonorientable_crosscaps(3)),
                  ResourceError);
}
