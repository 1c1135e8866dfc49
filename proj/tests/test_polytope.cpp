#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace toricq;
using namespace toricq::testing;

TEST_CASE("unit square vertices") {
  const HRep h = make_square();
  const auto vs = enumerate_vertices(h);
  REQUIRE(vs.size() == 4);
  // Canonical lexicographic order.
  CHECK(vs[0].coords == Vec{Scalar(0), Scalar(0)});
  CHECK(vs[1].coords == Vec{Scalar(0), Scalar(1)});
  CHECK(vs[2].coords == Vec{Scalar(1), Scalar(0)});
  CHECK(vs[3].coords == Vec{Scalar(1), Scalar(1)});
  for (const Vertex& v : vs) CHECK(v.active.size() == 2);
  CHECK(check_simple(vs, h));
}

TEST_CASE("2-simplex has 3 vertices") {
  const HRep h = make_simplex(2);
  CHECK(enumerate_vertices(h).size() == 3);
}

TEST_CASE("pentagon over Q(sqrt(5))") {
  const HRep h = load_corpus("pentagon.json");
  const auto vs = enumerate_vertices(h);
  CHECK(vs.size() == 5);
  CHECK(check_simple(vs, h));
  // One vertex coordinate is genuinely irrational.
  bool irrational = false;
  for (const Vertex& v : vs)
    for (const Scalar& c : v.coords)
      if (!c.is_rational()) irrational = true;
  CHECK(irrational);
}

TEST_CASE("degenerate failures") {
  HRep h = make_square();
  SUBCASE("duplicated facet makes a vertex over-determined") {
    h.halfspaces.push_back(h.halfspaces[0]);
    CHECK_THROWS_AS(enumerate_vertices(h), Error);
    const auto vs = enumerate_vertices(h, /*strict=*/false);
    CHECK_FALSE(check_simple(vs, h));
  }
  SUBCASE("missing ceiling is unbounded") {
    h.halfspaces.pop_back();
    try {
      enumerate_vertices(h);
      FAIL("expected Unbounded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unbounded);
    }
  }
  SUBCASE("contradictory strips are empty") {
    h.halfspaces[2].offset = Scalar(2);  // -x >= 2 against x >= 0
    try {
      enumerate_vertices(h);
      FAIL("expected Empty");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Empty);
    }
  }
  SUBCASE("redundant facet is rejected with a diagnostic") {
    HalfSpace far;
    far.normal = {Scalar(1), Scalar(0)};
    far.offset = Scalar(-10);  // x >= -10 never active
    h.halfspaces.push_back(far);
    try {
      enumerate_vertices(h);
      FAIL("expected RedundantFacet");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RedundantFacet);
    }
  }
}

TEST_CASE("octahedron is not simple") {
  HRep h;
  h.m = 3;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        HalfSpace hs;
        hs.normal = {Scalar(s0), Scalar(s1), Scalar(s2)};
        hs.offset = Scalar(-1);
        h.halfspaces.push_back(hs);
      }
  try {
    enumerate_vertices(h);
    FAIL("expected NonSimple");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSimple);
  }
  const auto vs = enumerate_vertices(h, /*strict=*/false);
  CHECK(vs.size() == 6);
  CHECK_FALSE(check_simple(vs, h));
}

TEST_CASE("face lattice f-vectors") {
  CHECK(build_face_lattice(enumerate_vertices(make_square()), make_square())
            .f_vector() == std::vector<long long>{4, 4, 1});
  const HRep cube = make_cube(3);
  CHECK(build_face_lattice(enumerate_vertices(cube), cube).f_vector() ==
        std::vector<long long>{8, 12, 6, 1});
  const HRep point = load_corpus("point.json");
  CHECK(build_face_lattice(enumerate_vertices(point), point).f_vector() ==
        std::vector<long long>{1});
}

TEST_CASE("Euler relation and edge structure on the corpus") {
  for (const char* name :
       {"segment.json", "simplex2.json", "square.json", "pentagon.json",
        "cube.json", "simplex3.json", "prism.json", "truncated-cube.json",
        "dodecahedron.json"}) {
    CAPTURE(name);
    const HRep h = load_corpus(name);
    const auto vs = enumerate_vertices(h);
    const FaceLattice lattice = build_face_lattice(vs, h);
    const auto f = lattice.f_vector();
    long long alt = 0;
    for (size_t j = 0; j < f.size(); ++j) alt += (j % 2 == 0) ? f[j] : -f[j];
    CHECK(alt == 1);
    CHECK(f.back() == 1);
    // Every edge has two endpoints, every vertex m edges.
    for (int eid : lattice.edges())
      CHECK(lattice.face(eid).vertex_ids.size() == 2);
    for (int vid = 0; vid < static_cast<int>(vs.size()); ++vid) {
      const auto gens = edge_generators(vid, vs, lattice);
      CHECK(static_cast<int>(gens.size()) == h.m);
      Mat dirs;
      for (const auto& g : gens) dirs.push_back(g.dir);
      CHECK(rank(dirs) == h.m);
    }
  }
}

TEST_CASE("vertex set invariant under half-space permutation") {
  std::mt19937_64 rng(5);
  HRep h = load_corpus("prism.json");
  const auto reference = enumerate_vertices(h);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(h.halfspaces.begin(), h.halfspaces.end(), rng);
    const auto vs = enumerate_vertices(h);
    REQUIRE(vs.size() == reference.size());
    for (size_t i = 0; i < vs.size(); ++i)
      CHECK(vs[i].coords == reference[i].coords);
  }
}

TEST_CASE("edge generators point into the polytope") {
  const HRep h = make_square();
  const auto vs = enumerate_vertices(h);
  const FaceLattice lattice = build_face_lattice(vs, h);
  // vs[0] = (0,0): directions (0,1) and (1,0) up to positive scale.
  // vs[3] = (1,1): directions (-1,0), (0,-1).
  for (int vid : {0, 3}) {
    for (const auto& g : edge_generators(vid, vs, lattice)) {
      for (int j : vs[vid].active) {
        const int s = dot(g.dir, h.halfspaces[j].normal).sign();
        if (j == g.dropped_facet)
          CHECK(s > 0);
        else
          CHECK(s == 0);
      }
    }
  }
  // 2-simplex at (1,0): directions proportional to (-1,0) and (-1,1).
  const HRep tri = make_simplex(2);
  const auto tvs = enumerate_vertices(tri);
  const FaceLattice tlat = build_face_lattice(tvs, tri);
  int vid = -1;
  for (int i = 0; i < 3; ++i)
    if (tvs[i].coords == Vec{Scalar(1), Scalar(0)}) vid = i;
  REQUIRE(vid >= 0);
  bool saw_left = false, saw_diag = false;
  for (const auto& g : edge_generators(vid, tvs, tlat)) {
    if (g.dir[1].is_zero()) {
      CHECK(g.dir[0].sign() < 0);
      saw_left = true;
    } else {
      CHECK(g.dir[0] == -g.dir[1]);
      CHECK(g.dir[1].sign() > 0);
      saw_diag = true;
    }
  }
  CHECK(saw_left);
  CHECK(saw_diag);
}
