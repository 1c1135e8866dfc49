#ifndef TORICQ_INVARIANTS_HPP
#define TORICQ_INVARIANTS_HPP

#include <string>

#include "core/morse.hpp"

namespace toricq {

struct AuditRecord {
  std::string name;
  bool pass = false;
  std::string detail;
};

long long binomial(int n, int r);

/// h_k = sum_{i=0}^k (-1)^{k-i} C(m-i, m-k) f_{m-i}.
std::vector<long long> h_vector(const std::vector<long long>& f);

/// b_{2k} = number of vertices of index 2k; odd degrees vanish.
std::vector<long long> betti_morse(const MorseData& md, int m);

/// b_{2k} = h_k; odd degrees vanish.
std::vector<long long> betti_h(const std::vector<long long>& h);

/// Alternating sum of the Betti table; must equal the vertex count f_0.
long long euler(const std::vector<long long>& betti,
                const std::vector<long long>& f);

/// Diagonal Hodge diamond with h^{k,k} = b_{2k}.
std::vector<std::vector<long long>> hodge_diamond(
    const std::vector<long long>& betti, int m);

AuditRecord audit_morse_inequalities(const std::vector<long long>& betti,
                                     const MorseData& md, int m);

AuditRecord audit_inclusion_exclusion(const IndexPartition& part,
                                      const std::vector<long long>& f);

AuditRecord audit_dehn_sommerville(const std::vector<long long>& h);

AuditRecord audit_route_agreement(const std::vector<long long>& bm,
                                  const std::vector<long long>& bh);

}  // namespace toricq

#endif
