#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "nilorbit/catalog.hpp"
#include "nilorbit/liealg.hpp"
#include "nilorbit/rng.hpp"

using namespace nilorbit;

namespace {

BracketEntry entry(std::size_t i, std::size_t j,
                   std::map<std::size_t, Rational> coeffs) {
  BracketEntry e;
  e.i = i;
  e.j = j;
  e.coeffs = std::move(coeffs);
  return e;
}

// Independent Jacobi checker straight off the bracket table; shares no
// code with validate_algebra's internal pass.
bool jacobi_holds(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RatVec ek(n), ei(n), ej(n);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        RatVec total = bracket_coords(a, bracket_coords(a, ei, ej), ek);
        RatVec t2 = bracket_coords(a, bracket_coords(a, ej, ek), ei);
        RatVec t3 = bracket_coords(a, bracket_coords(a, ek, ei), ej);
        for (std::size_t c = 0; c < n; ++c) {
          if (total[c] + t2[c] + t3[c] != 0) return false;
        }
      }
  return true;
}

Subspace span_of(AlgebraPtr a, const std::vector<std::vector<long>>& rows) {
  std::vector<RatVec> vs;
  for (const auto& r : rows) {
    RatVec v;
    for (long x : r) v.push_back(rat(x));
    vs.push_back(v);
  }
  return Subspace::from_spanning(std::move(a), vs);
}

RatVec vec(const std::vector<long>& entries) {
  RatVec v;
  for (long x : entries) v.push_back(rat(x));
  return v;
}

} // namespace

TEST_CASE("heisenberg3 validates with class 2 and abelian with class 1") {
  auto h3 = catalog_algebra("heisenberg3");
  CHECK(h3->dim() == 3);
  CHECK(h3->nilpotency_class() == 2);
  CHECK(h3->bracket_basis(0, 1) == vec({0, 0, 1}));
  CHECK(h3->bracket_basis(1, 0) == vec({0, 0, -1}));
  CHECK(h3->bracket_basis(0, 2) == vec({0, 0, 0}));

  auto a3 = catalog_algebra("abelian3");
  CHECK(a3->dim() == 3);
  CHECK(a3->nilpotency_class() == 1);
}

TEST_CASE("the solvable non-nilpotent line algebra is rejected") {
  CHECK_THROWS_AS(
      validate_algebra("aff", 2, {}, {entry(0, 1, {{0, rat(1)}})}),
      NotNilpotent);
}

TEST_CASE("Jacobi violations are caught at validation") {
  // [e1,e2] = e3, [e1,e3] = e1 breaks Jacobi on (e1,e2,e3).
  CHECK_THROWS_AS(
      validate_algebra("bad", 3, {},
                       {entry(0, 1, {{2, rat(1)}}), entry(0, 2, {{0, rat(1)}})}),
      JacobiViolation);
}

TEST_CASE("malformed bracket tables are rejected") {
  CHECK_THROWS_AS(validate_algebra("x", 2, {}, {entry(1, 0, {{0, rat(1)}})}),
                  ParseError); // needs i < j
  CHECK_THROWS_AS(validate_algebra("x", 2, {}, {entry(0, 5, {{0, rat(1)}})}),
                  ParseError); // index out of range
  CHECK_THROWS_AS(validate_algebra("x", 3, {},
                                   {entry(0, 1, {{2, rat(1)}}),
                                    entry(0, 1, {{2, rat(2)}})}),
                  ParseError); // duplicate pair
}

TEST_CASE("every catalog algebra satisfies Jacobi under the independent checker") {
  for (const auto& name : catalog_entries()) {
    auto a = catalog_algebra(name);
    CAPTURE(name);
    CHECK(jacobi_holds(*a));
  }
}

TEST_CASE("bracket arithmetic on pinned examples") {
  auto h3 = catalog_algebra("heisenberg3");
  Vector e1 = make_vector(h3, vec({1, 0, 0}));
  Vector e2 = make_vector(h3, vec({0, 1, 0}));
  CHECK(bracket(e1, e2).coords == vec({0, 0, 1}));
  CHECK(bracket(e1, e1).coords == vec({0, 0, 0}));

  auto f4 = catalog_algebra("filiform4");
  Vector x = make_vector(f4, vec({1, 0, 0, 0}));
  Vector y = make_vector(f4, vec({0, 1, 1, 0}));
  CHECK(bracket(x, y).coords == vec({0, 0, 1, 1}));

  Vector wrong = make_vector(catalog_algebra("abelian3"), vec({1, 0, 0}));
  CHECK_THROWS_AS(bracket(e1, wrong), AlgebraMismatch);
}

TEST_CASE("vectors and functionals reject wrong lengths") {
  auto h3 = catalog_algebra("heisenberg3");
  CHECK_THROWS_AS(make_vector(h3, vec({1, 0})), DimensionMismatch);
  CHECK_THROWS_AS(make_functional(h3, vec({1, 0, 0, 0})), DimensionMismatch);
  CHECK(pair(vec({1, 2, 3}), vec({1, 1, 1})) == rat(6));
}

TEST_CASE("lower central series of the pinned algebras") {
  auto a2 = catalog_algebra("abelian2");
  auto s = lower_central_series(a2);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Subspace::whole(a2));
  CHECK(s[1].dim() == 0);

  auto h3 = catalog_algebra("heisenberg3");
  s = lower_central_series(h3);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Subspace::whole(h3));
  CHECK(s[1] == span_of(h3, {{0, 0, 1}}));
  CHECK(s[2].dim() == 0);

  auto f4 = catalog_algebra("filiform4");
  s = lower_central_series(f4);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Subspace::whole(f4));
  CHECK(s[1] == span_of(f4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(s[2] == span_of(f4, {{0, 0, 0, 1}}));
  CHECK(s[3].dim() == 0);
}

TEST_CASE("centers of heisenberg3 and filiform4") {
  auto h3 = catalog_algebra("heisenberg3");
  CHECK(center(h3) == span_of(h3, {{0, 0, 1}}));
  auto f4 = catalog_algebra("filiform4");
  CHECK(center(f4) == span_of(f4, {{0, 0, 0, 1}}));
  auto a3 = catalog_algebra("abelian3");
  CHECK(center(a3) == Subspace::whole(a3));
}

TEST_CASE("subspace reduction, containment and lattice operations") {
  auto f4 = catalog_algebra("filiform4");
  Subspace s = span_of(f4, {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
  CHECK(s.dim() == 2); // dependent spanning set collapses
  CHECK(s.contains(vec({0, 0, 5, -3})));
  CHECK_FALSE(s.contains(vec({0, 1, 0, 0})));
  CHECK(s.is_subalgebra());
  CHECK(s.is_ideal());
  CHECK(s.contains_subspace(span_of(f4, {{0, 0, 0, 2}})));
  CHECK_FALSE(span_of(f4, {{0, 0, 0, 2}}).contains_subspace(s));

  Subspace nonideal = span_of(f4, {{1, 0, 0, 0}});
  CHECK(nonideal.is_subalgebra());
  CHECK_FALSE(nonideal.is_ideal());

  auto a4 = catalog_algebra("abelian4");
  Subspace u = span_of(a4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  Subspace v = span_of(a4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(subspace_sum(u, v).dim() == 3);
  CHECK(subspace_intersect(u, v) == span_of(a4, {{0, 1, 0, 0}}));
}

TEST_CASE("quotients of the pinned algebras") {
  auto f4 = catalog_algebra("filiform4");
  auto q = quotient_by_ideal(f4, span_of(f4, {{0, 0, 0, 1}}));
  CHECK(q.algebra->same_structure(*catalog_algebra("heisenberg3")));
  CHECK(q.projection.surjective);
  // The projection drops the last coordinate.
  RatMatrix expected(3, 4);
  expected.at(0, 0) = 1;
  expected.at(1, 1) = 1;
  expected.at(2, 2) = 1;
  CHECK(q.projection.matrix == expected);

  auto h3 = catalog_algebra("heisenberg3");
  auto q2 = quotient_by_ideal(h3, span_of(h3, {{0, 0, 1}}));
  CHECK(q2.algebra->same_structure(*catalog_algebra("abelian2")));

  auto a2 = catalog_algebra("abelian2");
  auto q3 = quotient_by_ideal(a2, Subspace::zero(a2));
  CHECK(q3.algebra->dim() == 2);
  CHECK(q3.projection.matrix == RatMatrix::identity(2));

  // Non-ideals are rejected.
  CHECK_THROWS_AS(quotient_by_ideal(f4, span_of(f4, {{1, 0, 0, 0}})),
                  NotAnIdeal);
}

TEST_CASE("quotient projections are bracket homomorphisms on random pairs") {
  for (const auto& name : {"heisenberg3", "filiform4", "filiform5",
                           "uppertriangular3", "uppertriangular4"}) {
    auto a = catalog_algebra(name);
    auto q = quotient_by_ideal(a, center(a));
    SplitMix64 rng(606);
    for (int trial = 0; trial < 100; ++trial) {
      Vector x = make_vector(a, random_small_vector(rng, a->dim()));
      Vector y = make_vector(a, random_small_vector(rng, a->dim()));
      Vector lhs = apply_morphism(q.projection, bracket(x, y));
      Vector rhs = bracket(apply_morphism(q.projection, x),
                           apply_morphism(q.projection, y));
      CAPTURE(name);
      CHECK(lhs.coords == rhs.coords);
    }
  }
}

TEST_CASE("jordan_holder_flag matches the pinned chains") {
  auto h3 = catalog_algebra("heisenberg3");
  Flag fh = jordan_holder_flag(h3);
  REQUIRE(fh.size() == 3);
  CHECK(fh.layer(0) == span_of(h3, {{0, 0, 1}}));
  CHECK(fh.layer(1) == span_of(h3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(fh.layer(2) == Subspace::whole(h3));
  CHECK(fh.direction(0) == vec({0, 0, 1}));
  CHECK(fh.direction(1) == vec({0, 1, 0}));
  CHECK(fh.direction(2) == vec({1, 0, 0}));

  auto f4 = catalog_algebra("filiform4");
  Flag ff = jordan_holder_flag(f4);
  REQUIRE(ff.size() == 4);
  CHECK(ff.layer(0) == span_of(f4, {{0, 0, 0, 1}}));
  CHECK(ff.layer(1) == span_of(f4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(ff.layer(2) == span_of(f4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(ff.layer(3) == Subspace::whole(f4));

  auto a2 = catalog_algebra("abelian2");
  Flag fa = jordan_holder_flag(a2);
  REQUIRE(fa.size() == 2);
  CHECK(fa.layer(0).dim() == 1);
  CHECK(fa.layer(1) == Subspace::whole(a2));
}

TEST_CASE("every jordan_holder_flag layer is an ideal of increasing dimension") {
  for (const auto& name : catalog_entries()) {
    auto a = catalog_algebra(name);
    Flag f = jordan_holder_flag(a);
    CAPTURE(name);
    REQUIRE(f.size() == a->dim());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f.layer(i).dim() == i + 1);
      CHECK(f.layer(i).is_ideal());
      if (i > 0) CHECK(f.layer(i).contains_subspace(f.layer(i - 1)));
      CHECK(f.layer(i).contains(f.direction(i)));
      if (i > 0) CHECK_FALSE(f.layer(i - 1).contains(f.direction(i)));
    }
  }
}

TEST_CASE("Flag::from_layers rejects chains with a non-ideal layer") {
  auto h3 = catalog_algebra("heisenberg3");
  // span{e1} is not an ideal: [e1,e2] = e3 escapes it.
  std::vector<Subspace> layers = {span_of(h3, {{1, 0, 0}}),
                                  span_of(h3, {{1, 0, 0}, {0, 1, 0}}),
                                  Subspace::whole(h3)};
  CHECK_THROWS_AS(Flag::from_layers(h3, layers), FlagMismatch);
  // Wrong length chains are also rejected.
  std::vector<Subspace> short_chain = {Subspace::whole(h3)};
  CHECK_THROWS_AS(Flag::from_layers(h3, short_chain), FlagMismatch);
}

TEST_CASE("morphism construction validates the bracket identity") {
  auto f4 = catalog_algebra("filiform4");
  auto h3 = catalog_algebra("heisenberg3");
  RatMatrix drop(3, 4);
  drop.at(0, 0) = 1;
  drop.at(1, 1) = 1;
  drop.at(2, 2) = 1;
  Morphism p = make_morphism(f4, h3, drop);
  CHECK(p.surjective);

  // Scaling only the center breaks [e1,e2] = e3.
  RatMatrix badmat = RatMatrix::identity(3);
  badmat.at(2, 2) = 2;
  CHECK_THROWS_AS(make_morphism(h3, h3, badmat), CertificateFailure);

  RatMatrix wrong_shape(2, 2);
  CHECK_THROWS_AS(make_morphism(h3, h3, wrong_shape), DimensionMismatch);
}

TEST_CASE("kernel, preimage and restriction on the filiform4 cover") {
  auto f4 = catalog_algebra("filiform4");
  auto h3 = catalog_algebra("heisenberg3");
  RatMatrix drop(3, 4);
  drop.at(0, 0) = 1;
  drop.at(1, 1) = 1;
  drop.at(2, 2) = 1;
  Morphism p = make_morphism(f4, h3, drop);

  CHECK(morphism_kernel(p) == span_of(f4, {{0, 0, 0, 1}}));
  CHECK(p.source->dim() == p.target->dim() + morphism_kernel(p).dim());

  Subspace target_plane = span_of(h3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(preimage(p, target_plane) ==
        span_of(f4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

  Functional xi = make_functional(h3, vec({0, 0, 1}));
  CHECK(restrict_functional(xi, target_plane) == vec({0, 1}));

  Morphism id = identity_morphism(h3);
  CHECK(morphism_kernel(id).dim() == 0);
  SplitMix64 rng(707);
  Vector x = make_vector(h3, random_small_vector(rng, 3));
  CHECK(apply_morphism(id, x).coords == x.coords);
}

TEST_CASE("central lattices accept central generators and nothing else") {
  auto h3 = catalog_algebra("heisenberg3");
  Lattice g = make_lattice(h3, {vec({0, 0, 1})});
  CHECK(lattice_contains(g, vec({0, 0, 2})));
  CHECK(lattice_contains(g, vec({0, 0, -7})));
  CHECK(lattice_contains(g, vec({0, 0, 0})));
  CHECK_FALSE(lattice_contains(g, RatVec{rat(0), rat(0), rat(1, 2)}));
  CHECK_FALSE(lattice_contains(g, vec({0, 1, 0})));

  // e1 is not central in h3.
  CHECK_THROWS_AS(make_lattice(h3, {vec({1, 0, 0})}), CertificateFailure);
  // Dependent generators are rejected.
  CHECK_THROWS_AS(make_lattice(h3, {vec({0, 0, 1}), vec({0, 0, 2})}),
                  CertificateFailure);

  // The trivial lattice contains only zero.
  Lattice trivial = make_lattice(h3, {});
  CHECK(lattice_contains(trivial, vec({0, 0, 0})));
  CHECK_FALSE(lattice_contains(trivial, vec({0, 0, 1})));
}

TEST_CASE("same_algebra accepts structural twins") {
  auto a = catalog_algebra("heisenberg3");
  auto b = catalog_algebra("heisenberg3");
  CHECK(same_algebra(a, a));
  CHECK(same_algebra(a, b));
  CHECK_FALSE(same_algebra(a, catalog_algebra("abelian3")));
  CHECK_THROWS_AS(require_same_algebra(a, catalog_algebra("abelian3"), "test"),
                  AlgebraMismatch);
}

TEST_CASE("catalog families have the documented dimensions and classes") {
  struct Row {
    const char* name;
    std::size_t dim, cls;
  };
  const Row rows[] = {
      {"abelian1", 1, 1},          {"abelian6", 6, 1},
      {"heisenberg3", 3, 2},       {"heisenberg5", 5, 2},
      {"filiform4", 4, 3},         {"filiform5", 5, 4},
      {"uppertriangular3", 3, 2},  {"uppertriangular4", 6, 3},
  };
  for (const auto& r : rows) {
    auto a = catalog_algebra(r.name);
    CAPTURE(r.name);
    CHECK(a->dim() == r.dim);
    CHECK(a->nilpotency_class() == r.cls);
  }
  CHECK(catalog_entries().size() == 12);
  CHECK_THROWS_AS(catalog_algebra("nosuch"), ParseError);
  CHECK_THROWS_AS(catalog_algebra("abelian0"), ParseError);
  CHECK_THROWS_AS(catalog_algebra("heisenberg4"), ParseError);

  // uppertriangular3 is heisenberg3 in matrix clothing.
  CHECK(catalog_algebra("uppertriangular3")->basis_names() ==
        std::vector<std::string>{"E12", "E13", "E23"});
}
