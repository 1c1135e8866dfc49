#include "core/delzant.hpp"

namespace toricq {

ConstructionData build_construction(const HRep& h) {
  ConstructionData cd;
  cd.d = h.facet_count();
  cd.m = h.m;
  cd.field = h.field;
  for (const HalfSpace& hs : h.halfspaces) {
    cd.normals.push_back(hs.normal);
    cd.offsets.push_back(hs.offset);
  }

  // Matrix of pi: m x d with columns X_j. Its kernel is n.
  Mat pi(cd.m, Vec(cd.d));
  for (int i = 0; i < cd.m; ++i)
    for (int j = 0; j < cd.d; ++j) pi[i][j] = cd.normals[j][i];
  if (rank(pi) != cd.m)
    throw Error(ErrorKind::NotSurjective,
                "the facet normals do not span R^m");
  cd.n_basis = nullspace(std::move(pi), cd.d);
  if (static_cast<int>(cd.n_basis.size()) != cd.d - cd.m)
    throw Error(ErrorKind::Internal, "kernel dimension mismatch");

  cd.dim_M = cd.d + cd.m;
  cd.dim_F = cd.d - cd.m;
  cd.codim = 2 * cd.m;
  cd.rational_closed = null_subgroup_rational_closed(cd);
  return cd;
}

bool null_subgroup_rational_closed(const ConstructionData& cd) {
  if (cd.field.is_rational()) return true;
  // Split pi = P + Q*sqrt(k) into rational matrices. A rational vector lies
  // in ker(pi) iff it lies in ker(P) and ker(Q); N is closed iff that
  // rational kernel has full dimension d - m.
  Mat stacked(2 * cd.m, Vec(cd.d));
  for (int i = 0; i < cd.m; ++i) {
    for (int j = 0; j < cd.d; ++j) {
      stacked[i][j] = Scalar(cd.normals[j][i].rat_part());
      stacked[cd.m + i][j] = Scalar(cd.normals[j][i].rad_part());
    }
  }
  const int rational_kernel_dim = cd.d - rank(std::move(stacked));
  return rational_kernel_dim == cd.d - cd.m;
}

FiberPoint fiber_point(const Vec& mu, const ConstructionData& cd) {
  FiberPoint fp;
  fp.mu = mu;
  fp.r2.resize(cd.d);
  for (int j = 0; j < cd.d; ++j) {
    fp.r2[j] = Scalar(2) * (dot(mu, cd.normals[j]) - cd.offsets[j]);
    if (fp.r2[j].sign() < 0)
      throw Error(ErrorKind::OutsideDelta,
                  "point violates half-space " + std::to_string(j));
  }
  // Residual of Phi_N at the sample: sum_j (r2_j/2 + lambda_j) eta_j, which
  // equals <mu, pi(eta)> = 0 for eta in the kernel.
  const Scalar half = Scalar(1) / Scalar(2);
  for (const Vec& eta : cd.n_basis) {
    Scalar res;
    for (int j = 0; j < cd.d; ++j)
      res += (half * fp.r2[j] + cd.offsets[j]) * eta[j];
    if (!res.is_zero())
      throw Error(ErrorKind::Internal,
                  "nonzero level-set residual " + res.str());
    fp.residuals.push_back(res);
  }
  return fp;
}

Dimensions dimensions(const ConstructionData& cd) {
  Dimensions dims{cd.dim_M, cd.dim_F, cd.codim, 2 * cd.m};
  if (dims.dim_M != dims.dim_F + dims.codim)
    throw Error(ErrorKind::Internal, "dimension bookkeeping mismatch");
  return dims;
}

}  // namespace toricq
