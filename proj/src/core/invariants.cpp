#include "core/invariants.hpp"

#include <sstream>

namespace toricq {

namespace {

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

std::vector<long long> h_vector(const std::vector<long long>& f) {
  const int m = static_cast<int>(f.size()) - 1;
  std::vector<long long> h(m + 1);
  for (int k = 0; k <= m; ++k) {
    long long acc = 0;
    for (int i = 0; i <= k; ++i) {
      const long long term = binomial(m - i, m - k) * f[m - i];
      acc += ((k - i) % 2 == 0) ? term : -term;
    }
    if (acc < 0)
      throw Error(ErrorKind::NegativeEntry,
                  "h_" + std::to_string(k) + " = " + std::to_string(acc) +
                      " < 0; f-vector is not that of a simple polytope");
    h[k] = acc;
  }
  return h;
}

std::vector<long long> betti_morse(const MorseData& md, int m) {
  return index_histogram(md, m);
}

std::vector<long long> betti_h(const std::vector<long long>& h) {
  const int m = static_cast<int>(h.size()) - 1;
  std::vector<long long> b(2 * m + 1, 0);
  for (int k = 0; k <= m; ++k) b[2 * k] = h[k];
  return b;
}

long long euler(const std::vector<long long>& betti,
                const std::vector<long long>& f) {
  long long chi = 0;
  for (size_t j = 0; j < betti.size(); ++j)
    chi += (j % 2 == 0) ? betti[j] : -betti[j];
  if (chi != f[0])
    throw Error(ErrorKind::EulerMismatch,
                "chi = " + std::to_string(chi) + " but f_0 = " +
                    std::to_string(f[0]));
  return chi;
}

std::vector<std::vector<long long>> hodge_diamond(
    const std::vector<long long>& betti, int m) {
  std::vector<std::vector<long long>> hpq(m + 1,
                                          std::vector<long long>(m + 1, 0));
  for (int k = 0; k <= m; ++k) hpq[k][k] = betti[2 * k];
  // Row sums along anti-diagonals must reproduce the Betti table.
  for (int j = 0; j <= 2 * m; ++j) {
    long long sum = 0;
    for (int p = 0; p <= m; ++p) {
      const int q = j - p;
      if (q >= 0 && q <= m) sum += hpq[p][q];
    }
    if (sum != betti[j])
      throw Error(ErrorKind::Internal, "hodge anti-diagonal mismatch");
  }
  return hpq;
}

AuditRecord audit_morse_inequalities(const std::vector<long long>& betti,
                                     const MorseData& md, int m) {
  const std::vector<long long> nu = index_histogram(md, m);
  AuditRecord rec{"morse-inequalities", true, ""};
  long long bsum = 0, nsum = 0;
  for (int j = 0; j <= 2 * m; ++j) {
    // Alternating partial sums b_j - b_{j-1} + ... <= nu_j - nu_{j-1} + ...
    bsum = betti[j] - bsum;
    nsum = nu[j] - nsum;
    if (bsum > nsum) {
      rec.pass = false;
      rec.detail = "partial sum violated at degree " + std::to_string(j);
      return rec;
    }
    // Perfection: degree-wise equality.
    if (betti[j] != nu[j]) {
      rec.pass = false;
      rec.detail = "not perfect at degree " + std::to_string(j) + ": b=" +
                   std::to_string(betti[j]) + " nu=" + std::to_string(nu[j]);
      return rec;
    }
  }
  if (bsum != nsum) {
    rec.pass = false;
    rec.detail = "top alternating sums differ";
    return rec;
  }
  rec.detail = "nu = " + join(nu) + " matches b degree-wise";
  return rec;
}

AuditRecord audit_inclusion_exclusion(const IndexPartition& part,
                                      const std::vector<long long>& f) {
  const int m = static_cast<int>(f.size()) - 1;
  const int k = part.k;
  const long long na = static_cast<long long>(part.a_faces.size());
  const long long nb = static_cast<long long>(part.b_faces.size());
  AuditRecord rec{"inclusion-exclusion k=" + std::to_string(k), true, ""};
  if (na + nb != f[m - k]) {
    rec.pass = false;
    rec.detail = "|A|+|B| = " + std::to_string(na + nb) + " != f_" +
                 std::to_string(m - k) + " = " + std::to_string(f[m - k]);
    return rec;
  }
  // Alternating-sum formula for |B_k|, sign (-1)^{s-1} fixed by the direct
  // count (the first term is a plain union bound and must be positive).
  long long formula = 0;
  for (int s = 1; s <= k; ++s) {
    const long long term = binomial(m - k + s, m - k) * f[m - k + s];
    formula += (s % 2 == 1) ? term : -term;
  }
  if (formula != nb) {
    rec.pass = false;
    rec.detail = "formula " + std::to_string(formula) + " != |B_k| = " +
                 std::to_string(nb);
    return rec;
  }
  rec.detail = "|A|=" + std::to_string(na) + " |B|=" + std::to_string(nb) +
               " formula=" + std::to_string(formula);
  return rec;
}

AuditRecord audit_dehn_sommerville(const std::vector<long long>& h) {
  const int m = static_cast<int>(h.size()) - 1;
  for (int k = 0; k <= m; ++k) {
    if (h[k] != h[m - k])
      return {"dehn-sommerville", false,
              "h_" + std::to_string(k) + " != h_" + std::to_string(m - k)};
  }
  return {"dehn-sommerville", true, "h = " + join(h) + " is symmetric"};
}

AuditRecord audit_route_agreement(const std::vector<long long>& bm,
                                  const std::vector<long long>& bh) {
  if (bm != bh)
    return {"route-agreement", false,
            "morse " + join(bm) + " != h-vector " + join(bh)};
  return {"route-agreement", true, "b = " + join(bm) + " by both routes"};
}

}  // namespace toricq
