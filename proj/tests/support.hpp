#ifndef TORICQ_TESTS_SUPPORT_HPP
#define TORICQ_TESTS_SUPPORT_HPP

#include <random>
#include <string>

#include "core/io.hpp"
#include "core/polytope.hpp"

namespace toricq::testing {

inline HRep load_corpus(const std::string& name) {
  return load_polytope_file(std::string(TORICQ_CORPUS_DIR) + "/" + name);
}

inline HRep make_square() { return load_corpus("square.json"); }

inline HRep make_simplex(int m) {
  HRep h;
  h.m = m;
  for (int i = 0; i < m; ++i) {
    HalfSpace hs;
    hs.normal.assign(m, Scalar(0));
    hs.normal[i] = Scalar(1);
    hs.offset = Scalar(0);
    h.halfspaces.push_back(hs);
  }
  HalfSpace top;
  top.normal.assign(m, Scalar(-1));
  top.offset = Scalar(-1);
  h.halfspaces.push_back(top);
  return h;
}

inline HRep make_cube(int m) {
  HRep h;
  h.m = m;
  for (int sgn : {1, -1}) {
    for (int i = 0; i < m; ++i) {
      HalfSpace hs;
      hs.normal.assign(m, Scalar(0));
      hs.normal[i] = Scalar(sgn);
      hs.offset = Scalar(sgn == 1 ? 0 : -1);
      h.halfspaces.push_back(hs);
    }
  }
  return h;
}

/// Cuts off one vertex with a rational hyperplane strictly between the
/// vertex and all others. Keeps the polytope simple.
inline HRep truncate_vertex(const HRep& h, const std::vector<Vertex>& vs,
                            int vid, const Rational& depth) {
  const Vertex& v = vs[vid];
  Vec n(h.m, Scalar(0));
  for (int j : v.active)
    for (int i = 0; i < h.m; ++i) n[i] += h.halfspaces[j].normal[i];
  const Scalar at_v = dot(v.coords, n);
  // Smallest value of <., n> over the other vertices; the cut sits a
  // rational fraction of the way up from v.
  bool first = true;
  Scalar next;
  for (int w = 0; w < static_cast<int>(vs.size()); ++w) {
    if (w == vid) continue;
    const Scalar val = dot(vs[w].coords, n);
    if (first || val < next) {
      next = val;
      first = false;
    }
  }
  HRep out = h;
  HalfSpace cut;
  cut.normal = n;
  cut.offset = at_v + Scalar(depth) * (next - at_v);
  out.halfspaces.push_back(std::move(cut));
  return out;
}

/// Random simple polytope: start from a simplex or cube and truncate
/// vertices repeatedly with exact rational cut depths.
inline HRep random_truncation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(2, 3);
  std::uniform_int_distribution<int> base(0, 1);
  const int m = dim(rng);
  HRep h = base(rng) == 0 ? make_simplex(m) : make_cube(m);
  std::uniform_int_distribution<int> cuts(0, 3);
  const int ncuts = cuts(rng);
  for (int c = 0; c < ncuts; ++c) {
    const std::vector<Vertex> vs = enumerate_vertices(h);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vs.size()) - 1);
    std::uniform_int_distribution<int> num(1, 5);
    const Rational depth(num(rng), 7);  // in (0, 1)
    h = truncate_vertex(h, vs, pick(rng), depth);
  }
  return h;
}

}  // namespace toricq::testing

#endif
