#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <thread>
#include <vector>

#include "nilorbit/catalog.hpp"
#include "nilorbit/orbits.hpp"
#include "nilorbit/rng.hpp"

using namespace nilorbit;

namespace {

RatVec vec(const std::vector<long>& entries) {
  RatVec v;
  for (long x : entries) v.push_back(rat(x));
  return v;
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

// Five-dimensional class-2 algebra whose generic orbits defeat the greedy
// one-parameter-per-layer walk: [e1,e2] = e5, [e3,e4] = e5, [e1,e3] = e4.
AlgebraPtr jam_algebra() {
  BracketEntry b1, b2, b3;
  b1.i = 0, b1.j = 1, b1.coeffs = {{4, rat(1)}};
  b2.i = 2, b2.j = 3, b2.coeffs = {{4, rat(1)}};
  b3.i = 0, b3.j = 2, b3.coeffs = {{3, rat(1)}};
  return validate_algebra("jam5", 5, {}, {b1, b2, b3});
}

} // namespace

TEST_CASE("stabilizer of the pinned functionals") {
  auto h3 = catalog_algebra("heisenberg3");
  Subspace s = stabilizer(make_functional(h3, vec({0, 0, 1})));
  CHECK(s == span_of(h3, {{0, 0, 1}}));
  CHECK(s.is_subalgebra());

  auto a3 = catalog_algebra("abelian3");
  CHECK(stabilizer(make_functional(a3, vec({1, 2, 3}))) == Subspace::whole(a3));

  auto f4 = catalog_algebra("filiform4");
  CHECK(stabilizer(make_functional(f4, vec({0, 0, 0, 1}))) ==
        span_of(f4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));

  CHECK(stabilizer(make_functional(jam_algebra(), vec({0, 0, 0, 0, 1}))).dim() ==
        1);
}

TEST_CASE("orbit descriptor pins dimension and jump indices") {
  auto h3 = catalog_algebra("heisenberg3");
  OrbitDescriptor d =
      orbit_descriptor(make_functional(h3, vec({0, 0, 1})), jordan_holder_flag(h3));
  CHECK(d.dimension() == 2);
  CHECK(d.stab() == span_of(h3, {{0, 0, 1}}));
  CHECK(d.jump_indices() == std::vector<std::size_t>{1, 2});

  auto f4 = catalog_algebra("filiform4");
  OrbitDescriptor df =
      orbit_descriptor(make_functional(f4, vec({0, 0, 0, 1})), jordan_holder_flag(f4));
  CHECK(df.dimension() == 2);
  CHECK(df.jump_indices() == std::vector<std::size_t>{1, 3});

  auto jam = jam_algebra();
  OrbitDescriptor dj =
      orbit_descriptor(make_functional(jam, vec({0, 0, 0, 0, 1})),
                       jordan_holder_flag(jam));
  CHECK(dj.dimension() == 4);
  CHECK(dj.jump_indices() == std::vector<std::size_t>{1, 2, 3, 4});

  // Points with trivial coadjoint action sit on zero-dimensional orbits.
  OrbitDescriptor d0 =
      orbit_descriptor(make_functional(h3, vec({2, 5, 0})), jordan_holder_flag(h3));
  CHECK(d0.dimension() == 0);
  CHECK(d0.jump_indices().empty());

  // The flag must belong to the same algebra.
  CHECK_THROWS_AS(orbit_descriptor(make_functional(h3, vec({0, 0, 1})),
                                   jordan_holder_flag(catalog_algebra("abelian3"))),
                  FlagMismatch);
}

TEST_CASE("heisenberg membership accepts (5,7,1) with the pinned witness") {
  auto h3 = catalog_algebra("heisenberg3");
  OrbitDescriptor d =
      orbit_descriptor(make_functional(h3, vec({0, 0, 1})), jordan_holder_flag(h3));

  MembershipResult r = orbit_contains(d, make_functional(h3, vec({5, 7, 1})));
  REQUIRE(r.status == MembershipStatus::yes);
  REQUIRE(r.witness.has_value());
  // exp(-7 e1) · exp(5 e2) in exp coordinates.
  CHECK(r.witness->coords == RatVec{rat(-7), rat(5), rat(-35, 2)});
  CHECK(coadjoint_apply(*r.witness, d.base()).coords == vec({5, 7, 1}));

  // A successful query leaves its witness in the shared cache.
  auto cached = d.cached_witness(vec({5, 7, 1}));
  REQUIRE(cached.has_value());
  CHECK(*cached == r.witness->coords);

  // Second query reuses the cache and returns the identical witness.
  MembershipResult again = orbit_contains(d, make_functional(h3, vec({5, 7, 1})));
  REQUIRE(again.status == MembershipStatus::yes);
  CHECK(again.witness->coords == r.witness->coords);
}

TEST_CASE("heisenberg membership rejects points off the hyperplane") {
  auto h3 = catalog_algebra("heisenberg3");
  OrbitDescriptor d =
      orbit_descriptor(make_functional(h3, vec({0, 0, 1})), jordan_holder_flag(h3));

  CHECK(orbit_contains(d, make_functional(h3, vec({0, 0, 2}))).status ==
        MembershipStatus::no);
  CHECK(orbit_contains(d, make_functional(h3, vec({1, 2, 0}))).status ==
        MembershipStatus::no);

  MembershipResult self = orbit_contains(d, d.base());
  REQUIRE(self.status == MembershipStatus::yes);
  CHECK(self.witness->coords == vec({0, 0, 0}));
}

TEST_CASE("membership classifies random points of the dual exactly") {
  auto h3 = catalog_algebra("heisenberg3");
  OrbitDescriptor d =
      orbit_descriptor(make_functional(h3, vec({0, 0, 1})), jordan_holder_flag(h3));
  SplitMix64 rng(21);
  std::size_t on = 0, off = 0;
  for (int trial = 0; trial < 500; ++trial) {
    RatVec eta = random_small_vector(rng, 3);
    if (trial % 5 == 0) eta[2] = 1; // force both branches to occur often
    MembershipResult r = orbit_contains(d, make_functional(h3, eta));
    // The orbit of (0,0,1) is exactly the plane ζ = 1.
    if (eta[2] == 1) {
      REQUIRE(r.status == MembershipStatus::yes);
      CHECK(coadjoint_apply(*r.witness, d.base()).coords == eta);
      ++on;
    } else {
      REQUIRE(r.status == MembershipStatus::no);
      ++off;
    }
  }
  CHECK(on >= 100);
  CHECK(off >= 100);
}

TEST_CASE("sampled orbit points keep the central coordinate and stay members") {
  auto h3 = catalog_algebra("heisenberg3");
  OrbitDescriptor d =
      orbit_descriptor(make_functional(h3, vec({0, 0, 1})), jordan_holder_flag(h3));
  auto samples = orbit_sample(d, 9001, 1000);
  REQUIRE(samples.size() == 1000);
  for (const auto& s : samples) CHECK(s.coords[2] == rat(1));
  for (std::size_t i = 0; i < 200; ++i)
    CHECK(orbit_contains(d, samples[i]).status == MembershipStatus::yes);
}

TEST_CASE("orbit sampling is scheduling independent") {
  for (const auto& name : {"heisenberg3", "uppertriangular4"}) {
    auto a = catalog_algebra(name);
    RatVec base(a->dim(), Rational(1)); // all-ones functional: orbit dim > 0
    OrbitDescriptor d =
        orbit_descriptor(make_functional(a, base), jordan_holder_flag(a));
    auto par = orbit_sample(d, 77, 300, true);
    auto ser = orbit_sample(d, 77, 300, false);
    REQUIRE(par.size() == ser.size());
    CAPTURE(name);
    for (std::size_t i = 0; i < par.size(); ++i)
      CHECK(par[i].coords == ser[i].coords);
    // A different seed genuinely changes the draw.
    auto other = orbit_sample(d, 78, 300, true);
    bool all_equal = true;
    for (std::size_t i = 0; i < par.size(); ++i)
      if (other[i].coords != par[i].coords) all_equal = false;
    CHECK_FALSE(all_equal);
  }
}

TEST_CASE("random orbits have even dimension matching the jump count") {
  for (const auto& name : catalog_entries()) {
    auto a = catalog_algebra(name);
    Flag flag = jordan_holder_flag(a);
    SplitMix64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
      Functional xi = make_functional(a, random_small_vector(rng, a->dim()));
      OrbitDescriptor d = orbit_descriptor(xi, flag);
      CAPTURE(name);
      CHECK(d.dimension() % 2 == 0);
      CHECK(d.jump_indices().size() == d.dimension());
      CHECK(d.dimension() + d.stab().dim() == a->dim());
      CHECK(d.stab().is_subalgebra());
    }
  }
}

TEST_CASE("the jam point is honestly indeterminate with a blocking report") {
  auto jam = jam_algebra();
  OrbitDescriptor d = orbit_descriptor(make_functional(jam, vec({0, 0, 0, 0, 1})),
                                       jordan_holder_flag(jam));
  MembershipResult r =
      orbit_contains(d, make_functional(jam, vec({0, 0, 0, -1, 1})));
  REQUIRE(r.status == MembershipStatus::indeterminate);
  CHECK_FALSE(r.witness.has_value());
  REQUIRE(r.blocking.has_value());
  CHECK(r.blocking->layer == 2);
  CHECK(r.blocking->reason ==
        "layer coordinate involves several undetermined parameters");
  CHECK(r.blocking->polynomial.find("t2") != std::string::npos);
  CHECK(r.blocking->polynomial.find("t5") != std::string::npos);
}

TEST_CASE("concurrent membership queries share one witness cache safely") {
  auto h3 = catalog_algebra("heisenberg3");
  OrbitDescriptor d =
      orbit_descriptor(make_functional(h3, vec({0, 0, 1})), jordan_holder_flag(h3));
  auto samples = orbit_sample(d, 31337, 64);
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      int good = 0;
      for (int round = 0; round < 4; ++round)
        for (const auto& s : samples)
          if (orbit_contains(d, s).status == MembershipStatus::yes) ++good;
      ok[w] = good;
    });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 8; ++w) CHECK(ok[w] == 4 * 64);
  for (const auto& s : samples) CHECK(d.cached_witness(s.coords).has_value());
}
