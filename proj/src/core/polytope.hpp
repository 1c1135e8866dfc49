#ifndef TORICQ_POLYTOPE_HPP
#define TORICQ_POLYTOPE_HPP

#include <set>
#include <vector>

#include "core/linalg.hpp"

namespace toricq {

/// Half-space { mu : <mu, normal> >= offset }, normal pointing inward.
struct HalfSpace {
  Vec normal;
  Scalar offset;
};

struct HRep {
  int m = 0;  // ambient dimension
  FieldSpec field;
  std::vector<HalfSpace> halfspaces;

  int facet_count() const { return static_cast<int>(halfspaces.size()); }
};

struct Vertex {
  Vec coords;
  std::set<int> active;  // facet indices held with equality
};

/// Face keyed by the maximal facet set defining it (empty set = the whole
/// polytope). For a simple polytope dim = m - |facets|.
struct Face {
  std::vector<int> facets;  // sorted
  int dim = 0;
  std::vector<int> vertex_ids;  // sorted
};

class FaceLattice {
 public:
  FaceLattice(std::vector<Face> faces, int m);

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  int count() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& faces_of_dim(int d) const { return by_dim_[d]; }

  /// Ids of the 1-dimensional faces (empty when the polytope is a point).
  const std::vector<int>& edges() const;

  /// f_j = number of j-dimensional faces, j = 0..m (f_m = 1).
  std::vector<long long> f_vector() const;

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

 private:
  std::vector<Face> faces_;
  std::vector<std::vector<int>> by_dim_;
};

/// Exhaustive m-subset vertex enumeration over the exact field. In strict
/// mode rejects empty, non-simple, unbounded, and redundant-facet inputs.
/// Output sorted lexicographically by coordinates.
std::vector<Vertex> enumerate_vertices(const HRep& h, bool strict = true);

/// True iff every vertex lies on exactly m facets with independent normals.
bool check_simple(const std::vector<Vertex>& vs, const HRep& h);

FaceLattice build_face_lattice(const std::vector<Vertex>& vs, const HRep& h);

/// Inward edge direction at vertex vid obtained by dropping one active facet;
/// points toward the opposite endpoint of that edge.
struct EdgeGen {
  int dropped_facet;
  int other_vertex;
  Vec dir;
};

std::vector<EdgeGen> edge_generators(int vid, const std::vector<Vertex>& vs,
                                     const FaceLattice& lattice);

}  // namespace toricq

#endif
