#include <doctest.h>

#include "core/invariants.hpp"
#include "support.hpp"

using namespace toricq;
using namespace toricq::testing;

using LL = std::vector<long long>;

TEST_CASE("h-vector from f-vector") {
  CHECK(h_vector({4, 4, 1}) == LL{1, 2, 1});
  CHECK(h_vector({5, 5, 1}) == LL{1, 3, 1});
  CHECK(h_vector({20, 30, 12, 1}) == LL{1, 9, 9, 1});
  CHECK(h_vector({1}) == LL{1});
  // f-vector of a non-simple polytope (octahedron) goes negative.
  CHECK_THROWS_AS(h_vector({6, 12, 8, 1}), Error);
}

TEST_CASE("betti via h route") {
  CHECK(betti_h({1, 3, 3, 1}) == LL{1, 0, 3, 0, 3, 0, 1});
  CHECK(betti_h({1}) == LL{1});
  CHECK(betti_h({1, 3, 1}) == LL{1, 0, 3, 0, 1});
}

TEST_CASE("betti via morse route on the square") {
  const HRep h = make_square();
  const auto vs = enumerate_vertices(h);
  const FaceLattice lattice = build_face_lattice(vs, h);
  const MorseData md =
      build_morse({Scalar(1), Scalar(2)}, vs, lattice);
  CHECK(betti_morse(md, 2) == LL{1, 0, 2, 0, 1});
  CHECK(euler(betti_morse(md, 2), lattice.f_vector()) == 4);
}

TEST_CASE("euler mismatch is detected") {
  CHECK_THROWS_AS(euler({1, 0, 2, 0, 1}, {5, 5, 1}), Error);
  CHECK(euler({1}, {1}) == 1);
}

TEST_CASE("hodge diamond is diagonal") {
  const auto hpq = hodge_diamond({1, 0, 3, 0, 1}, 2);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      CHECK(hpq[p][q] == (p == q ? LL{1, 3, 1}[p] : 0));
}

TEST_CASE("route agreement across the corpus, many directions") {
  for (const char* name :
       {"point.json", "segment.json", "simplex2.json", "square.json",
        "pentagon.json", "cube.json", "simplex3.json", "prism.json",
        "truncated-cube.json", "dodecahedron.json"}) {
    CAPTURE(name);
    const HRep h = load_corpus(name);
    const auto vs = enumerate_vertices(h);
    const FaceLattice lattice = build_face_lattice(vs, h);
    const auto f = lattice.f_vector();
    const auto hv = h_vector(f);
    for (long seed = 1; seed <= 10; ++seed) {
      const Vec xi = choose_generic(vs, lattice, h.m, seed);
      const MorseData md = build_morse(xi, vs, lattice);
      CHECK(betti_morse(md, h.m) == betti_h(hv));
    }
  }
}

TEST_CASE("morse inequality audit") {
  const HRep h = load_corpus("dodecahedron.json");
  const auto vs = enumerate_vertices(h);
  const FaceLattice lattice = build_face_lattice(vs, h);
  const Vec xi = choose_generic(vs, lattice, h.m, 1);
  const MorseData md = build_morse(xi, vs, lattice);
  const auto b = betti_morse(md, h.m);
  CHECK(b == LL{1, 0, 9, 0, 9, 0, 1});
  CHECK(audit_morse_inequalities(b, md, h.m).pass);
  // Negative control: a corrupted Betti table fails.
  LL bad = b;
  bad[0] = 2;
  CHECK_FALSE(audit_morse_inequalities(bad, md, h.m).pass);
}

TEST_CASE("inclusion-exclusion audit on the square") {
  const HRep h = make_square();
  const auto vs = enumerate_vertices(h);
  const FaceLattice lattice = build_face_lattice(vs, h);
  const MorseData md = build_morse({Scalar(1), Scalar(2)}, vs, lattice);
  const auto f = lattice.f_vector();
  // k=1: |B_1| = 2 directly, formula C(2,1) f_2 = 2.
  auto rec1 = audit_inclusion_exclusion(partition_faces(1, md, lattice), f);
  CHECK(rec1.pass);
  // k=2: |B_2| = 3 directly, formula C(1,0) f_1 - C(2,0) f_2 = 3.
  auto rec2 = audit_inclusion_exclusion(partition_faces(2, md, lattice), f);
  CHECK(rec2.pass);
  // k=0: empty sum.
  auto rec0 = audit_inclusion_exclusion(partition_faces(0, md, lattice), f);
  CHECK(rec0.pass);
}

TEST_CASE("dehn-sommerville symmetry on the corpus") {
  for (const char* name : {"square.json", "pentagon.json", "cube.json",
                           "prism.json", "truncated-cube.json",
                           "dodecahedron.json"}) {
    CAPTURE(name);
    const HRep h = load_corpus(name);
    const auto lattice = build_face_lattice(enumerate_vertices(h), h);
    const auto hv = h_vector(lattice.f_vector());
    CHECK(audit_dehn_sommerville(hv).pass);
    long long sum = 0;
    for (long long x : hv) sum += x;
    CHECK(sum == lattice.f_vector()[0]);
  }
}

TEST_CASE("vertex truncation shifts h by (0,1,...,1,0)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const HRep h = random_truncation(rng);
    const auto vs = enumerate_vertices(h);
    const auto hv = h_vector(build_face_lattice(vs, h).f_vector());
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vs.size()) - 1);
    const HRep cut = truncate_vertex(h, vs, pick(rng), Rational(1, 3));
    const auto cut_vs = enumerate_vertices(cut);
    const auto cut_hv = h_vector(build_face_lattice(cut_vs, cut).f_vector());
    for (int k = 0; k <= h.m; ++k) {
      const long long bump = (k == 0 || k == h.m) ? 0 : 1;
      CHECK(cut_hv[k] == hv[k] + bump);
    }
  }
}
