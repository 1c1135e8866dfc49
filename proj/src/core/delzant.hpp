#ifndef TORICQ_DELZANT_HPP
#define TORICQ_DELZANT_HPP

#include "core/polytope.hpp"

namespace toricq {

/// Data of the quasifold construction: projection e_j -> X_j, its kernel n,
/// dimension bookkeeping, and whether the null subgroup N is closed in T^d.
struct ConstructionData {
  int d = 0;
  int m = 0;
  FieldSpec field;
  Mat normals;  // d rows of length m (the X_j)
  Vec offsets;  // the lambda_j
  Mat n_basis;  // d-m vectors in R^d spanning ker(pi)
  int dim_M = 0;    // d + m
  int dim_F = 0;    // d - m
  int codim = 0;    // 2m
  bool rational_closed = false;
};

/// Throws NotSurjective when the X_j do not span.
ConstructionData build_construction(const HRep& h);

/// True iff ker(pi) admits an all-rational basis, i.e. the null subgroup is
/// a closed subtorus; false means N winds densely and the leaf space is a
/// genuine quasifold.
bool null_subgroup_rational_closed(const ConstructionData& cd);

/// Level-set sample over a point mu of the polytope: r2_j = |z_j|^2 and the
/// moment-map residuals against every kernel basis vector, which must all be
/// exactly zero (plus-sign convention for Phi).
struct FiberPoint {
  Vec mu;
  Vec r2;            // 2(<mu, X_j> - lambda_j), one per facet
  Vec residuals;     // one per kernel basis vector, all exactly zero
};

FiberPoint fiber_point(const Vec& mu, const ConstructionData& cd);

struct Dimensions {
  int dim_M, dim_F, codim, quasifold_dim;
};

Dimensions dimensions(const ConstructionData& cd);

}  // namespace toricq

#endif
