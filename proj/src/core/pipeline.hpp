#ifndef TORICQ_PIPELINE_HPP
#define TORICQ_PIPELINE_HPP

#include <optional>

#include "core/delzant.hpp"
#include "core/invariants.hpp"
#include "core/io.hpp"
#include "core/morse.hpp"

namespace toricq {

struct RunConfig {
  std::optional<Vec> xi;  // explicit direction; must be generic
  long seed = 1;          // deterministic direction search otherwise
  bool run_audits = false;
  int audit_seeds = 10;   // seeds for the xi-independence audit
};

struct Analysis {
  HRep hrep;
  std::vector<Vertex> vertices;
  Vec xi;
  std::vector<long long> f;
  std::vector<long long> h;
  std::vector<long long> betti;        // Morse route, the primary table
  std::vector<long long> betti_hroute;
  long long euler_char = 0;
  std::vector<std::vector<long long>> hodge;
  ConstructionData construction;
  std::vector<AuditRecord> audits;

  bool all_audits_pass() const;
};

Analysis analyze(const HRep& h, const RunConfig& cfg);

Json report_json(const Analysis& a);
std::string report_text(const Analysis& a);

}  // namespace toricq

#endif
