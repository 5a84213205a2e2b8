#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <sstream>
#include <vector>

#include "stmax/errors.hpp"
#include "stmax/involution.hpp"
#include "stmax/simplicial.hpp"
#include "stmax/smith_sequence.hpp"

using namespace stmax;

using VL = std::vector<long long>;

TEST_CASE("simplex construction") {
  Simplex s = make_simplex({5, 2});
  CHECK(s == Simplex{2, 5, -1, -1, -1});
  CHECK(simplex_dim(s) == 1);
  CHECK(simplex_dim(make_simplex({7})) == 0);
  CHECK(simplex_dim(make_simplex({0, 1, 2, 3, 4})) == 4);

  CHECK_THROWS_AS(make_simplex({}), ValidationError);
  CHECK_THROWS_AS(make_simplex({0, 1, 2, 3, 4, 5}), ValidationError);
  CHECK_THROWS_AS(make_simplex({3, 3}), ValidationError);
  CHECK_THROWS_AS(make_simplex({-1}), ValidationError);
}

TEST_CASE("face closure and lookups") {
  SimplicialComplex K = SimplicialComplex::from_maximal(5, {{0, 1, 2}, {3, 4}});
  CHECK(K.size() == 5 + 4 + 1);  // triangle closure + edge closure
  CHECK(K.dim() == 2);
  CHECK(K.num_vertices() == 5);
  CHECK(K.index_of(1, make_simplex({0, 1})) >= 0);
  CHECK(K.index_of(1, make_simplex({0, 3})) == -1);
  CHECK(K.index_of(3, make_simplex({0, 1, 2, 3})) == -1);

  auto maximal = K.maximal_simplices();
  REQUIRE(maximal.size() == 2);
  CHECK(maximal[0] == std::vector<std::int32_t>({3, 4}));
  CHECK(maximal[1] == std::vector<std::int32_t>({0, 1, 2}));
  CHECK(SimplicialComplex::from_maximal(5, maximal) == K);

  CHECK_THROWS_AS(SimplicialComplex::from_maximal(3, {}), ValidationError);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal(2, {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal(3, {{0, 1, 2}}, 3), ResourceError);
}

TEST_CASE("homology of the built-in complexes") {
  CHECK(homology_ranks(torus_7()) == VL{1, 2, 1});
  CHECK(torus_7().size() == 7 + 21 + 14);
  CHECK(homology_ranks(rp2_6()) == VL{1, 1, 1});
  CHECK(homology_ranks(octahedron()) == VL{1, 0, 1});
  CHECK(homology_ranks(cycle_complex(5)) == VL{1, 1});
  CHECK(homology_ranks(sphere_boundary(1)) == VL{2});
  CHECK(homology_ranks(sphere_boundary(2)) == VL{1, 1});
  CHECK(homology_ranks(sphere_boundary(3)) == VL{1, 0, 1});
  CHECK(homology_ranks(sphere_boundary(4)) == VL{1, 0, 0, 1});
  CHECK(homology_ranks(sphere_boundary(5)) == VL{1, 0, 0, 0, 1});
  CHECK_THROWS_AS(sphere_boundary(6), ValidationError);
  CHECK_THROWS_AS(cycle_complex(2), ValidationError);

  CHECK(torus_7().chain_complex().euler() == 0);
  CHECK(rp2_6().chain_complex().euler() == 1);
}

TEST_CASE("disjoint unions add homology") {
  SimplicialComplex K = SimplicialComplex::disjoint_union(torus_7(), rp2_6());
  CHECK(K.num_vertices() == 13);
  CHECK(homology_ranks(K) == VL{2, 3, 2});
}

TEST_CASE("barycentric subdivision preserves homology") {
  SimplicialComplex sd = torus_7().barycentric_subdivision();
  CHECK(sd.num_vertices() == 42);
  CHECK(sd.size() == 42 + 126 + 84);
  CHECK(homology_ranks(sd) == VL{1, 2, 1});
}

TEST_CASE("poset validation catches structural defects") {
  for (const CellPoset& p : {pillow_sphere(), torus_grid(), klein_grid(), rp2_cells(),
                             cycle_poset(4), CellPoset::from_simplicial(torus_7()),
                             CellPoset::product(cycle_poset(3), cycle_poset(3))})
    validate_poset(p);

  CellPoset missing_self;
  missing_self.dim = {0};
  missing_self.closure = {{}};
  CHECK_THROWS_AS(validate_poset(missing_self), InternalError);

  CellPoset no_drop;
  no_drop.dim = {0, 0};
  no_drop.closure = {{0}, {0, 1}};
  CHECK_THROWS_AS(validate_poset(no_drop), InternalError);

  CellPoset not_transitive;
  not_transitive.dim = {0, 1, 2};
  not_transitive.closure = {{0}, {0, 1}, {1, 2}};
  CHECK_THROWS_AS(validate_poset(not_transitive), InternalError);

  CellPoset unsorted;
  unsorted.dim = {0, 1};
  unsorted.closure = {{0}, {1, 0}};
  CHECK_THROWS_AS(validate_poset(unsorted), InternalError);
}

TEST_CASE("order complexes of the built-in cell structures") {
  // The pillow subdivides to the octahedron, cell for cell.
  CHECK(order_complex(pillow_sphere()) == octahedron());

  CHECK(homology_ranks(order_complex(torus_grid())) == VL{1, 2, 1});
  CHECK(homology_ranks(order_complex(klein_grid())) == VL{1, 2, 1});
  CHECK(homology_ranks(order_complex(rp2_cells())) == VL{1, 1, 1});
  CHECK(homology_ranks(order_complex(cycle_poset(3))) == VL{1, 1});
  CHECK(order_complex(cycle_poset(3)).size() == 6 + 6);
}

TEST_CASE("the klein grid is glued with a flip, not a torus") {
  // Over GF(2) the homology above cannot tell the Klein bottle from the
  // torus; the seam structure can. Grid layout (3 columns, 2 rows):
  // v(i,j) = 3j + i, h(i,j) = 6 + 3j + i, q(i,j) = 18 + 3j + i.
  CellPoset k = klein_grid();
  const auto& top_face = k.closure[21];  // q(0,1), crossing the glued seam
  auto has = [&](std::int32_t c) {
    return std::binary_search(top_face.begin(), top_face.end(), c);
  };
  CHECK(has(8));   // reflected bottom edge h(2,0)
  CHECK(!has(6));  // a torus would glue to h(0,0) instead
  CHECK(has(2));   // flipped corner v(2,0)
  CHECK(!has(1));  // a torus would have v(1,0)

  // Total spaces still match numerically: chi = 0 like the torus.
  long long chi = 0;
  for (int d : k.dim) chi += d % 2 == 0 ? 1 : -1;
  CHECK(chi == 0);
}

TEST_CASE("product posets multiply cells and add dimensions") {
  CellPoset c3 = cycle_poset(3);
  CellPoset p = CellPoset::product(c3, c3);
  CHECK(p.size() == 36);
  CHECK(p.top_dim() == 2);
  CHECK(p.dim[3 * 6 + 4] == 2);  // edge x edge
  CHECK(homology_ranks(order_complex(p)) == VL{1, 2, 1});

  auto swap = product_swap(c3);
  REQUIRE(swap.size() == 36);
  for (std::size_t i = 0; i < swap.size(); ++i) {
    CHECK(swap[swap[i]] == static_cast<std::int32_t>(i));
    CHECK(p.dim[swap[i]] == p.dim[i]);
  }
}

TEST_CASE("involution constructor validates its input") {
  CHECK_THROWS_AS(SimplicialInvolution(octahedron(), {0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(SimplicialInvolution(octahedron(), {0, 1, 2, 3, 4, 9}), ValidationError);
  // A 3-cycle is not an involution.
  CHECK_THROWS_AS(SimplicialInvolution(octahedron(), {1, 2, 0, 3, 4, 5}), ValidationError);
  // Swapping 2 and 3 maps the triangle {0,1,2} to the missing {0,1,3}.
  SimplicialComplex K = SimplicialComplex::from_maximal(4, {{0, 1, 2}, {3}});
  CHECK_THROWS_AS(SimplicialInvolution(K, {0, 1, 3, 2}), ValidationError);
}

TEST_CASE("fixed subcomplexes and orbit bookkeeping") {
  SimplicialInvolution eq(octahedron(), {0, 1, 2, 3, 5, 4});
  CHECK(eq.smith_regular());
  CHECK(!eq.free_action());
  SimplicialComplex F = eq.fixed_subcomplex();
  CHECK(F.size() == 4 + 4);  // the equator square
  CHECK(homology_ranks(F) == VL{1, 1});

  SimplicialInvolution anti(octahedron(), {1, 0, 3, 2, 5, 4});
  CHECK(anti.smith_regular());
  CHECK(anti.free_action());
  CHECK(anti.fixed_subcomplex().size() == 0);
  CHECK(anti.num_orbits(0) == 3);
  CHECK(anti.num_orbits(1) == 6);
  CHECK(anti.num_orbits(2) == 4);
  CHECK(anti.orbit_index(0, 1) == 0);  // image of vertex 1 is vertex 0
  CHECK(anti.orbit_representative(0, 1) == 2);
  for (int d = 0; d <= 2; ++d) {
    auto n = static_cast<std::int32_t>(octahedron().simplices(d).size());
    for (std::int32_t i = 0; i < n; ++i) {
      CHECK(anti.image_index(d, anti.image_index(d, i)) == i);
      CHECK(anti.orbit_index(d, i) == anti.orbit_index(d, anti.image_index(d, i)));
    }
  }

  // Not Smith-regular: the square's edge {0,1} is invariant but its
  // endpoints swap.
  SimplicialInvolution sq(cycle_complex(4), {1, 0, 3, 2});
  CHECK(!sq.smith_regular());
  CHECK_THROWS_AS(sq.quotient_chain_complex(), HypothesisError);
}

TEST_CASE("quotient chain complex of a free action") {
  SimplicialInvolution anti(octahedron(), {1, 0, 3, 2, 5, 4});
  ChainComplexF2 C = anti.quotient_chain_complex();
  CHECK(C.ranks == std::vector<std::size_t>({3, 6, 4}));
  CHECK(C.euler() == 1);
  CHECK(C.betti() == VL{1, 1, 1});
}

TEST_CASE("regularization subdivides exactly when needed") {
  int n = -1;
  SimplicialInvolution eq(octahedron(), {0, 1, 2, 3, 5, 4});
  SimplicialInvolution reg = smith_regularized(eq, &n);
  CHECK(n == 0);
  CHECK(reg.complex() == eq.complex());

  SimplicialInvolution sq(cycle_complex(4), {1, 0, 3, 2});
  reg = smith_regularized(sq, &n);
  CHECK(n == 1);
  CHECK(reg.smith_regular());
  CHECK(reg.complex().size() == 8 + 8);
  CHECK(reg.fixed_subcomplex().size() == 2);  // midpoints of the two swapped edges
}

TEST_CASE("smith sequence of the equatorial reflection") {
  SimplicialInvolution eq(octahedron(), {0, 1, 2, 3, 5, 4});
  SmithData d = smith_sequence(eq);
  CHECK(d.subdivisions == 0);
  CHECK(d.long_sequence_exact);
  CHECK(d.betti_x == VL{1, 0, 1});
  CHECK(d.betti_f == VL{1, 1, 0});
  // Im(1+c) is the cellular pair (disk, equator): one relative class on top.
  CHECK(d.betti_xbar_f == VL{0, 0, 1});
  CHECK(d.transfer_inc_rank == VL{1, 0, 1});
  CHECK(d.proj_rank == VL{0, 0, 0});
  CHECK(d.delta_rank == VL{0, 0, 1});
  CHECK(d.coker_dim == VL{0, 0, 0});
  CHECK(d.beta_star_f() == d.beta_star_x());
  CHECK(maximality_exactness(eq));
}

TEST_CASE("smith sequence of the antipodal map") {
  SimplicialInvolution anti(octahedron(), {1, 0, 3, 2, 5, 4});
  SmithData d = smith_sequence(anti);
  CHECK(d.long_sequence_exact);
  CHECK(d.betti_f == VL{0, 0, 0});
  CHECK(d.betti_xbar_f == VL{1, 1, 1});
  // The transfer kills H0 (two sheets cancel mod 2) and hits the
  // fundamental class; the (1+c) map picks up exactly the cokernel.
  CHECK(d.transfer_inc_rank == VL{0, 0, 1});
  CHECK(d.proj_rank == VL{1, 0, 0});
  CHECK(d.delta_rank == VL{0, 1, 1});
  CHECK(d.coker_dim == VL{1, 0, 0});
  CHECK(d.beta_star_x() - d.beta_star_f() == 2);
  CHECK(!maximality_exactness(anti));
}

TEST_CASE("smith sequence of the identity") {
  std::vector<std::int32_t> id(7);
  std::iota(id.begin(), id.end(), 0);
  SimplicialInvolution inv(torus_7(), id);
  SmithData d = smith_sequence(inv);
  CHECK(d.betti_f == d.betti_x);
  CHECK(d.betti_xbar_f == VL{0, 0, 0});
  CHECK(maximality_exactness(inv));
}

TEST_CASE("smith sequence on a free circle action") {
  SimplicialInvolution anti(cycle_complex(6), {3, 4, 5, 0, 1, 2});
  SmithData d = smith_sequence(anti);
  CHECK(d.betti_xbar_f == VL{1, 1});
  CHECK(d.beta_star_f() == 0);
  CHECK(std::accumulate(d.coker_dim.begin(), d.coker_dim.end(), 0LL) == 1);
  CHECK(!maximality_exactness(anti));
}

TEST_CASE("double cover pairing") {
  SimplicialInvolution anti(cycle_complex(6), {3, 4, 5, 0, 1, 2});
  std::vector<std::int32_t> half{anti.quotient_edge_orbit(0, 1), anti.quotient_edge_orbit(1, 2),
                                 anti.quotient_edge_orbit(2, 3)};
  CHECK(double_cover_class_eval(anti, half) == 1);

  // Repeated orbits cancel mod 2: traversing the quotient loop twice gives 0.
  std::vector<std::int32_t> twice = half;
  twice.insert(twice.end(), half.begin(), half.end());
  CHECK(double_cover_class_eval(anti, twice) == 0);
  CHECK(double_cover_class_eval(anti, {}) == 0);

  // The split cover: two triangles swapped.
  SimplicialComplex two =
      SimplicialComplex::disjoint_union(cycle_complex(3), cycle_complex(3));
  SimplicialInvolution split(two, {3, 4, 5, 0, 1, 2});
  std::vector<std::int32_t> tri{split.quotient_edge_orbit(0, 1), split.quotient_edge_orbit(1, 2),
                                split.quotient_edge_orbit(0, 2)};
  CHECK(double_cover_class_eval(split, tri) == 0);

  // Non-cycles and non-free supports are rejected.
  CHECK_THROWS_AS(double_cover_class_eval(anti, {anti.quotient_edge_orbit(0, 1)}),
                  ValidationError);
  SimplicialInvolution eq(octahedron(), {0, 1, 2, 3, 5, 4});
  CHECK_THROWS_AS(double_cover_class_eval(eq, {eq.quotient_edge_orbit(0, 2)}),
                  ValidationError);  // pointwise fixed edge
  CHECK_THROWS_AS(double_cover_class_eval(eq, {eq.quotient_edge_orbit(0, 4)}),
                  ValidationError);  // fixed endpoint
  CHECK_THROWS_AS(anti.quotient_edge_orbit(0, 2), ValidationError);  // no such edge
}

TEST_CASE("complex files round-trip with involutions") {
  std::ostringstream out;
  std::vector<std::int32_t> anti{1, 0, 3, 2, 5, 4};
  write_complex(out, octahedron(), anti);
  std::istringstream in(out.str());
  ComplexFile f = read_complex(in);
  CHECK(f.complex == octahedron());
  REQUIRE(f.involution.has_value());
  CHECK(*f.involution == anti);

  std::istringstream plain("0 1\n1 2\n0 2 # a comment\n");
  ComplexFile g = read_complex(plain);
  CHECK(g.complex == cycle_complex(3));
  CHECK(!g.involution.has_value());

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_complex(empty), ParseError);
  std::istringstream bad_token("0 x\n");
  CHECK_THROWS_AS(read_complex(bad_token), ParseError);
  std::istringstream bad_perm("0 1\ninvolution: 1\n");
  CHECK_THROWS_AS(read_complex(bad_perm), ParseError);
  std::istringstream twice_inv("0 1\ninvolution: 0 1\ninvolution: 1 0\n");
  CHECK_THROWS_AS(read_complex(twice_inv), ParseError);
  std::istringstream too_big("0 1 2 3 4 5\n");
  CHECK_THROWS_AS(read_complex(too_big), ParseError);
}

TEST_CASE("order complex budget and dimension guards") {
  CHECK_THROWS_AS(order_complex(torus_grid(), 10), ResourceError);
  CellPoset p5 = CellPoset::product(torus_grid(), CellPoset::product(torus_grid(), torus_grid()));
  CHECK_THROWS_AS(order_complex(p5), ValidationError);  // dimension 6
}
