#ifndef TORICQ_MORSE_HPP
#define TORICQ_MORSE_HPP

#include "core/polytope.hpp"

namespace toricq {

/// Morse data of a generic linear functional <., xi> on the polytope:
/// per-vertex even index and, per face, the unique index-minimizing vertex.
struct MorseData {
  Vec xi;
  std::vector<int> index;       // vertex id -> even index in [0, 2m]
  std::vector<int> min_vertex;  // face id -> vertex id
};

/// xi is generic iff it is non-constant on every edge.
bool is_generic(const Vec& xi, const std::vector<Vertex>& vs,
                const FaceLattice& lattice);

/// First generic direction among (1, t, t^2, ...) for t = seed, seed+1, ...
Vec choose_generic(const std::vector<Vertex>& vs, const FaceLattice& lattice,
                   int m, long seed);

/// Twice the number of inward edges at the vertex along which <., xi>
/// strictly decreases. The global minimizer of <., xi> gets index 0.
int vertex_index(const Vec& xi, const std::vector<EdgeGen>& gens);

/// The unique <., xi>-minimizing vertex of the face; ties mean xi is not
/// generic and are an error.
int min_vertex(const Face& f, const Vec& xi, const std::vector<Vertex>& vs);

MorseData build_morse(const Vec& xi, const std::vector<Vertex>& vs,
                      const FaceLattice& lattice);

/// The (m-k)-faces split by the index of their minimal vertex: A_k where
/// ind = 2k, B_k where ind < 2k. An index above 2k violates the cone bound.
struct IndexPartition {
  int k = 0;
  std::vector<int> a_faces;
  std::vector<int> b_faces;
};

IndexPartition partition_faces(int k, const MorseData& md,
                               const FaceLattice& lattice);

/// nu[j] = number of vertices with index j, j = 0..2m.
std::vector<long long> index_histogram(const MorseData& md, int m);

}  // namespace toricq

#endif
