#include "toricq.h"

#include <string>

#include "core/pipeline.hpp"

using namespace toricq;

struct tq_polytope {
  HRep hrep;
};

struct tq_report {
  std::string json;
  std::string text;
  bool audits_pass = true;
};

namespace {

thread_local std::string g_last_error;

tq_status map_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return TQ_ERR_PARSE;
    case ErrorKind::Io: return TQ_ERR_IO;
    case ErrorKind::FieldMismatch: return TQ_ERR_FIELD_MISMATCH;
    case ErrorKind::DivisionByZero: return TQ_ERR_DIVISION_BY_ZERO;
    case ErrorKind::Empty: return TQ_ERR_EMPTY;
    case ErrorKind::Unbounded: return TQ_ERR_UNBOUNDED;
    case ErrorKind::NonSimple: return TQ_ERR_NONSIMPLE;
    case ErrorKind::RedundantFacet: return TQ_ERR_REDUNDANT_FACET;
    case ErrorKind::NotSurjective: return TQ_ERR_NOT_SURJECTIVE;
    case ErrorKind::NonGeneric: return TQ_ERR_NONGENERIC;
    case ErrorKind::OutsideDelta: return TQ_ERR_OUTSIDE_DELTA;
    case ErrorKind::InvalidArgument: return TQ_ERR_INVALID_ARGUMENT;
    default: return TQ_ERR_INTERNAL;
  }
}

template <typename Fn>
tq_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TQ_OK;
  } catch (const Error& e) {
    g_last_error = std::string(error_kind_name(e.kind())) + ": " + e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TQ_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

tq_status tq_polytope_load_file(const char* path, tq_polytope** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return TQ_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = new tq_polytope{load_polytope_file(path)}; });
}

tq_status tq_polytope_load_json(const char* json, tq_polytope** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return TQ_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = new tq_polytope{parse_polytope_string(json)}; });
}

void tq_polytope_free(tq_polytope* p) { delete p; }

tq_status tq_analyze(const tq_polytope* p, const char* xi, long seed,
                     int run_audits, tq_report** out) {
  if (!p || !out) {
    g_last_error = "null argument";
    return TQ_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.run_audits = run_audits != 0;
    if (xi) cfg.xi = parse_direction(xi, p->hrep.field);
    const Analysis a = analyze(p->hrep, cfg);
    auto* r = new tq_report;
    r->json = report_json(a).dump(2);
    r->text = report_text(a);
    r->audits_pass = a.all_audits_pass();
    *out = r;
  });
}

const char* tq_report_json(const tq_report* r) { return r->json.c_str(); }
const char* tq_report_text(const tq_report* r) { return r->text.c_str(); }
int tq_report_audits_passed(const tq_report* r) { return r->audits_pass ? 1 : 0; }
void tq_report_free(tq_report* r) { delete r; }

const char* tq_last_error(void) { return g_last_error.c_str(); }

const char* tq_status_name(tq_status s) {
  switch (s) {
    case TQ_OK: return "ok";
    case TQ_ERR_IO: return "io";
    case TQ_ERR_PARSE: return "parse";
    case TQ_ERR_EMPTY: return "empty";
    case TQ_ERR_UNBOUNDED: return "unbounded";
    case TQ_ERR_NONSIMPLE: return "non-simple";
    case TQ_ERR_REDUNDANT_FACET: return "redundant-facet";
    case TQ_ERR_NOT_SURJECTIVE: return "not-surjective";
    case TQ_ERR_NONGENERIC: return "non-generic";
    case TQ_ERR_OUTSIDE_DELTA: return "outside-delta";
    case TQ_ERR_FIELD_MISMATCH: return "field-mismatch";
    case TQ_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case TQ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case TQ_ERR_AUDIT_FAILED: return "audit-failed";
    case TQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

}  // extern "C"
