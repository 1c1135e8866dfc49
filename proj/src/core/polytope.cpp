#include "core/polytope.hpp"

#include <algorithm>
#include <map>

namespace toricq {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    const int s = (a[i] - b[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

// Iterates over all m-subsets of {0..d-1}.
bool next_combination(std::vector<int>& idx, int d) {
  const int m = static_cast<int>(idx.size());
  for (int i = m - 1; i >= 0; --i) {
    if (idx[i] < d - (m - i)) {
      ++idx[i];
      for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const HRep& h, bool strict) {
  const int m = h.m;
  const int d = h.facet_count();

  if (m == 0) {
    // Degenerate point: a single vertex with no coordinates.
    return {Vertex{{}, {}}};
  }
  if (d < m) {
    if (strict) throw Error(ErrorKind::Unbounded, "fewer than m half-spaces");
    return {};
  }

  std::vector<Vertex> out;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  do {
    Mat a(m);
    Vec b(m);
    for (int i = 0; i < m; ++i) {
      a[i] = h.halfspaces[idx[i]].normal;
      b[i] = h.halfspaces[idx[i]].offset;
    }
    auto sol = solve_square(std::move(a), std::move(b));
    if (!sol) continue;

    Vertex v;
    v.coords = std::move(*sol);
    bool feasible = true;
    for (int j = 0; j < d; ++j) {
      const int s = (dot(v.coords, h.halfspaces[j].normal) - h.halfspaces[j].offset).sign();
      if (s < 0) {
        feasible = false;
        break;
      }
      if (s == 0) v.active.insert(j);
    }
    if (!feasible) continue;
    if (strict && static_cast<int>(v.active.size()) > m)
      throw Error(ErrorKind::NonSimple,
                  "vertex lies on " + std::to_string(v.active.size()) +
                      " facets, expected " + std::to_string(m));
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Vertex& w) {
      return w.coords == v.coords;
    });
    if (!dup) out.push_back(std::move(v));
  } while (next_combination(idx, d));

  if (out.empty()) {
    if (strict) throw Error(ErrorKind::Empty, "no feasible vertex");
    return out;
  }

  std::sort(out.begin(), out.end(),
            [](const Vertex& a, const Vertex& b) { return lex_less(a.coords, b.coords); });

  if (strict) {
    if (static_cast<int>(out.size()) < m + 1)
      throw Error(ErrorKind::Unbounded, "fewer than m+1 vertices");
    std::vector<bool> used(d, false);
    for (const Vertex& v : out)
      for (int j : v.active) used[j] = true;
    for (int j = 0; j < d; ++j) {
      if (!used[j])
        throw Error(ErrorKind::RedundantFacet,
                    "half-space " + std::to_string(j) +
                        " supports no vertex; drop it or fix the input (it "
                        "changes the construction's facet count d)");
    }
    // Bounded iff every edge at every vertex has a second endpoint.
    for (size_t vi = 0; vi < out.size(); ++vi) {
      for (int dropped : out[vi].active) {
        bool closed = false;
        for (size_t wi = 0; wi < out.size() && !closed; ++wi) {
          if (wi == vi) continue;
          closed = std::all_of(out[vi].active.begin(), out[vi].active.end(),
                               [&](int j) {
                                 return j == dropped || out[wi].active.count(j) > 0;
                               });
        }
        if (!closed)
          throw Error(ErrorKind::Unbounded,
                      "unbounded edge at vertex " + std::to_string(vi));
      }
    }
  }
  return out;
}

bool check_simple(const std::vector<Vertex>& vs, const HRep& h) {
  for (const Vertex& v : vs) {
    if (static_cast<int>(v.active.size()) != h.m) return false;
    Mat a;
    for (int j : v.active) a.push_back(h.halfspaces[j].normal);
    if (rank(std::move(a)) != h.m) return false;
  }
  return true;
}

FaceLattice::FaceLattice(std::vector<Face> faces, int m)
    : faces_(std::move(faces)), by_dim_(m + 1) {
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
    by_dim_[faces_[i].dim].push_back(i);
}

const std::vector<int>& FaceLattice::edges() const {
  static const std::vector<int> empty;
  return by_dim_.size() > 1 ? by_dim_[1] : empty;
}

std::vector<long long> FaceLattice::f_vector() const {
  std::vector<long long> f(by_dim_.size());
  for (size_t j = 0; j < by_dim_.size(); ++j)
    f[j] = static_cast<long long>(by_dim_[j].size());
  return f;
}

FaceLattice build_face_lattice(const std::vector<Vertex>& vs, const HRep& h) {
  const int m = h.m;
  // Faces are the closures of vertex active sets under intersection; the
  // canonical key of a face is the intersection over all of its vertices.
  std::set<std::set<int>> pool;
  for (const Vertex& v : vs) pool.insert(v.active);
  pool.insert(std::set<int>{});  // the polytope itself
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::set<int>> next = pool;
    for (const auto& s : pool) {
      for (const auto& t : pool) {
        std::set<int> meet;
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                              std::inserter(meet, meet.begin()));
        if (next.insert(std::move(meet)).second) grew = true;
      }
    }
    pool = std::move(next);
  }

  std::map<std::vector<int>, Face> by_key;
  for (const auto& s : pool) {
    std::vector<int> members;
    for (int vid = 0; vid < static_cast<int>(vs.size()); ++vid) {
      const auto& act = vs[vid].active;
      if (std::includes(act.begin(), act.end(), s.begin(), s.end()))
        members.push_back(vid);
    }
    if (members.empty()) continue;
    // Canonical maximal facet set for this vertex set.
    std::set<int> key = vs[members[0]].active;
    for (size_t i = 1; i < members.size(); ++i) {
      std::set<int> meet;
      const auto& act = vs[members[i]].active;
      std::set_intersection(key.begin(), key.end(), act.begin(), act.end(),
                            std::inserter(meet, meet.begin()));
      key = std::move(meet);
    }
    Face f;
    f.facets.assign(key.begin(), key.end());
    f.dim = m - static_cast<int>(key.size());
    f.vertex_ids = std::move(members);
    if (f.dim < 0)
      throw Error(ErrorKind::NonSimple, "face with more than m facets");
    by_key.emplace(f.facets, std::move(f));
  }

  std::vector<Face> faces;
  faces.reserve(by_key.size());
  for (auto& [key, f] : by_key) faces.push_back(std::move(f));
  return FaceLattice(std::move(faces), m);
}

std::vector<EdgeGen> edge_generators(int vid, const std::vector<Vertex>& vs,
                                     const FaceLattice& lattice) {
  const Vertex& v = vs[vid];
  std::vector<EdgeGen> out;
  for (int dropped : v.active) {
    std::vector<int> rest;
    for (int j : v.active)
      if (j != dropped) rest.push_back(j);
    // In a simple polytope the edge's canonical facet set is exactly the
    // m-1 retained facets.
    int other = -1;
    for (int eid : lattice.edges()) {
      const Face& e = lattice.face(eid);
      if (e.facets != rest) continue;
      for (int w : e.vertex_ids)
        if (w != vid) other = w;
      break;
    }
    if (other < 0)
      throw Error(ErrorKind::Internal,
                  "edge without a second endpoint at vertex " +
                      std::to_string(vid));
    Vec dir(v.coords.size());
    for (size_t i = 0; i < dir.size(); ++i)
      dir[i] = vs[other].coords[i] - v.coords[i];
    out.push_back(EdgeGen{dropped, other, std::move(dir)});
  }
  return out;
}

}  // namespace toricq
