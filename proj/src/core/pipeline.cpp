#include "core/pipeline.hpp"

#include <sstream>

namespace toricq {

bool Analysis::all_audits_pass() const {
  for (const AuditRecord& a : audits)
    if (!a.pass) return false;
  return true;
}

namespace {

AuditRecord audit_xi_independence(const std::vector<Vertex>& vs,
                                  const FaceLattice& lattice, int m,
                                  long seed, int nseeds,
                                  const std::vector<long long>& reference) {
  for (int s = 0; s < nseeds; ++s) {
    const Vec xi = choose_generic(vs, lattice, m, seed + s);
    const MorseData md = build_morse(xi, vs, lattice);
    if (index_histogram(md, m) != reference)
      return {"xi-independence", false,
              "index counts differ for seed " + std::to_string(seed + s)};
  }
  return {"xi-independence", true,
          std::to_string(nseeds) + " generic directions agree"};
}

}  // namespace

Analysis analyze(const HRep& h, const RunConfig& cfg) {
  Analysis a;
  a.hrep = h;
  a.vertices = enumerate_vertices(h);
  const FaceLattice lattice = build_face_lattice(a.vertices, h);

  if (cfg.xi) {
    if (static_cast<int>(cfg.xi->size()) != h.m)
      throw Error(ErrorKind::InvalidArgument,
                  "xi has dimension " + std::to_string(cfg.xi->size()) +
                      ", expected " + std::to_string(h.m));
    if (!is_generic(*cfg.xi, a.vertices, lattice))
      throw Error(ErrorKind::NonGeneric,
                  "the given xi is constant on some edge");
    a.xi = *cfg.xi;
  } else {
    a.xi = choose_generic(a.vertices, lattice, h.m, cfg.seed);
  }

  const MorseData md = build_morse(a.xi, a.vertices, lattice);
  a.f = lattice.f_vector();
  a.h = h_vector(a.f);
  a.betti = betti_morse(md, h.m);
  a.betti_hroute = betti_h(a.h);
  a.audits.push_back(audit_route_agreement(a.betti, a.betti_hroute));
  a.euler_char = euler(a.betti, a.f);
  a.hodge = hodge_diamond(a.betti, h.m);
  a.construction = build_construction(h);

  if (cfg.run_audits) {
    a.audits.push_back(audit_morse_inequalities(a.betti, md, h.m));
    for (int k = 0; k <= h.m; ++k)
      a.audits.push_back(
          audit_inclusion_exclusion(partition_faces(k, md, lattice), a.f));
    a.audits.push_back(audit_dehn_sommerville(a.h));
    a.audits.push_back(audit_xi_independence(a.vertices, lattice, h.m,
                                             cfg.seed, cfg.audit_seeds,
                                             index_histogram(md, h.m)));
  }
  return a;
}

Json report_json(const Analysis& a) {
  Json j;
  j["m"] = a.hrep.m;
  j["d"] = a.hrep.facet_count();
  j["field"] = {{"radicand", a.hrep.field.radicand}};
  Json xi = Json::array();
  for (const Scalar& c : a.xi) xi.push_back(render_scalar(c));
  j["xi"] = xi;
  j["f"] = a.f;
  j["h"] = a.h;
  j["betti"] = a.betti;
  j["betti_h_route"] = a.betti_hroute;
  j["euler"] = a.euler_char;
  j["hodge"] = a.hodge;

  Json cons;
  cons["d"] = a.construction.d;
  cons["m"] = a.construction.m;
  Json basis = Json::array();
  for (const Vec& eta : a.construction.n_basis) {
    Json row = Json::array();
    for (const Scalar& c : eta) row.push_back(render_scalar(c));
    basis.push_back(row);
  }
  cons["n_basis"] = basis;
  cons["null_closed"] =
      a.construction.rational_closed ? "rational-closed" : "dense-winding";
  const Dimensions dims = dimensions(a.construction);
  cons["dimensions"] = {{"dim_M", dims.dim_M},
                        {"dim_F", dims.dim_F},
                        {"codim", dims.codim},
                        {"quasifold_dim", dims.quasifold_dim}};
  cons["moment_map_sign"] = "plus";
  j["construction"] = cons;

  Json audits = Json::array();
  for (const AuditRecord& rec : a.audits)
    audits.push_back(
        {{"name", rec.name}, {"pass", rec.pass}, {"detail", rec.detail}});
  j["audits"] = audits;
  return j;
}

namespace {

std::string row(const std::vector<long long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

std::string report_text(const Analysis& a) {
  std::ostringstream os;
  os << "polytope: m=" << a.hrep.m << " d=" << a.hrep.facet_count()
     << " field=Q";
  if (!a.hrep.field.is_rational())
    os << "(sqrt(" << a.hrep.field.radicand << "))";
  os << "\n";
  os << "vertices: " << a.vertices.size() << "\n";
  os << "xi:       ";
  for (size_t i = 0; i < a.xi.size(); ++i)
    os << (i ? ", " : "") << a.xi[i].str();
  os << "\n";
  os << "f-vector: " << row(a.f) << "\n";
  os << "h-vector: " << row(a.h) << "\n";
  os << "betti:    " << row(a.betti) << "\n";
  os << "euler:    " << a.euler_char << "\n";
  os << "hodge diamond (diagonal):";
  for (int k = 0; k <= a.hrep.m; ++k) os << " " << a.hodge[k][k];
  os << "\n";
  const Dimensions dims = dimensions(a.construction);
  os << "construction: dim_M=" << dims.dim_M << " dim_F=" << dims.dim_F
     << " codim=" << dims.codim << " quasifold_dim=" << dims.quasifold_dim
     << " null subgroup "
     << (a.construction.rational_closed ? "rational-closed" : "dense-winding")
     << " (moment map sign: plus)\n";
  os << "n_basis:\n";
  for (const Vec& eta : a.construction.n_basis) {
    os << "  [";
    for (size_t i = 0; i < eta.size(); ++i)
      os << (i ? ", " : "") << eta[i].str();
    os << "]\n";
  }
  os << "audits:\n";
  for (const AuditRecord& rec : a.audits)
    os << "  " << (rec.pass ? "PASS" : "FAIL") << " " << rec.name
       << (rec.detail.empty() ? "" : ": " + rec.detail) << "\n";
  return os.str();
}

}  // namespace toricq
