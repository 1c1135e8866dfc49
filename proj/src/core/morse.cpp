#include "core/morse.hpp"

namespace toricq {

bool is_generic(const Vec& xi, const std::vector<Vertex>& vs,
                const FaceLattice& lattice) {
  for (int eid : lattice.edges()) {
    const Face& e = lattice.face(eid);
    const Vec& a = vs[e.vertex_ids[0]].coords;
    const Vec& b = vs[e.vertex_ids[1]].coords;
    Vec dir(a.size());
    for (size_t i = 0; i < a.size(); ++i) dir[i] = b[i] - a[i];
    if (dot(xi, dir).sign() == 0) return false;
  }
  return true;
}

Vec choose_generic(const std::vector<Vertex>& vs, const FaceLattice& lattice,
                   int m, long seed) {
  if (m == 0) return {};
  for (long t = seed;; ++t) {
    Vec xi(m);
    Scalar p(1);
    for (int i = 0; i < m; ++i) {
      xi[i] = p;
      p *= Scalar(t);
    }
    if (is_generic(xi, vs, lattice)) return xi;
  }
}

int vertex_index(const Vec& xi, const std::vector<EdgeGen>& gens) {
  int descending = 0;
  for (const EdgeGen& g : gens) {
    const int s = dot(xi, g.dir).sign();
    if (s == 0)
      throw Error(ErrorKind::NonGeneric, "xi is constant on an edge");
    if (s < 0) ++descending;
  }
  return 2 * descending;
}

int min_vertex(const Face& f, const Vec& xi, const std::vector<Vertex>& vs) {
  int best = f.vertex_ids[0];
  Scalar best_val = dot(xi, vs[best].coords);
  for (size_t i = 1; i < f.vertex_ids.size(); ++i) {
    const int vid = f.vertex_ids[i];
    const Scalar val = dot(xi, vs[vid].coords);
    const int s = (val - best_val).sign();
    if (s == 0)
      throw Error(ErrorKind::NonGeneric,
                  "two vertices of a face are level under xi");
    if (s < 0) {
      best = vid;
      best_val = val;
    }
  }
  return best;
}

MorseData build_morse(const Vec& xi, const std::vector<Vertex>& vs,
                      const FaceLattice& lattice) {
  MorseData md;
  md.xi = xi;
  md.index.resize(vs.size());
  for (int vid = 0; vid < static_cast<int>(vs.size()); ++vid) {
    if (vs[vid].active.empty()) {
      md.index[vid] = 0;  // m = 0 point
      continue;
    }
    md.index[vid] = vertex_index(xi, edge_generators(vid, vs, lattice));
  }
  md.min_vertex.resize(lattice.count());
  for (int fid = 0; fid < lattice.count(); ++fid)
    md.min_vertex[fid] = xi.empty() ? lattice.face(fid).vertex_ids[0]
                                    : min_vertex(lattice.face(fid), xi, vs);
  return md;
}

IndexPartition partition_faces(int k, const MorseData& md,
                               const FaceLattice& lattice) {
  const int m = lattice.dim();
  IndexPartition part;
  part.k = k;
  for (int fid : lattice.faces_of_dim(m - k)) {
    const int ind = md.index[md.min_vertex[fid]];
    if (ind == 2 * k) {
      part.a_faces.push_back(fid);
    } else if (ind < 2 * k) {
      part.b_faces.push_back(fid);
    } else {
      throw Error(ErrorKind::IndexBoundViolation,
                  "face of codim " + std::to_string(k) +
                      " with minimal-vertex index " + std::to_string(ind));
    }
  }
  return part;
}

std::vector<long long> index_histogram(const MorseData& md, int m) {
  std::vector<long long> nu(2 * m + 1, 0);
  for (int ind : md.index) ++nu[ind];
  return nu;
}

}  // namespace toricq
