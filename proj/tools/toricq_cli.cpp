// Batch front-end over the toricq C API.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "toricq.h"

namespace {

struct Options {
  std::string input;
  std::string xi;
  long seed = 1;
  std::string format = "text";
  std::string out;
};

int fail_input(tq_status st) {
  std::cerr << "error (" << tq_status_name(st) << "): " << tq_last_error()
            << "\n";
  return 1;
}

int emit(const tq_report* rep, const Options& opt) {
  const char* body =
      opt.format == "json" ? tq_report_json(rep) : tq_report_text(rep);
  if (opt.out.empty()) {
    std::cout << body;
    if (opt.format == "json") std::cout << "\n";
  } else {
    std::ofstream os(opt.out);
    if (!os) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 1;
    }
    os << body;
    if (opt.format == "json") os << "\n";
  }
  return 0;
}

int run_one(const Options& opt, bool audit) {
  tq_polytope* poly = nullptr;
  tq_status st = tq_polytope_load_file(opt.input.c_str(), &poly);
  if (st != TQ_OK) return fail_input(st);

  tq_report* rep = nullptr;
  st = tq_analyze(poly, opt.xi.empty() ? nullptr : opt.xi.c_str(), opt.seed,
                  audit ? 1 : 0, &rep);
  tq_polytope_free(poly);
  if (st != TQ_OK) return fail_input(st);

  int rc = emit(rep, opt);
  if (rc == 0 && !tq_report_audits_passed(rep)) rc = 2;
  tq_report_free(rep);
  return rc;
}

int run_corpus(const Options& opt) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(opt.input, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << opt.input << "\n";
    return 1;
  }
  if (files.empty()) {
    std::cerr << "error: no .json files in " << opt.input << "\n";
    return 1;
  }
  std::sort(files.begin(), files.end());

  int failures = 0;
  for (const auto& path : files) {
    tq_polytope* poly = nullptr;
    tq_status st = tq_polytope_load_file(path.c_str(), &poly);
    if (st != TQ_OK) {
      std::cout << "FAIL " << path.filename().string() << " ("
                << tq_status_name(st) << ": " << tq_last_error() << ")\n";
      ++failures;
      continue;
    }
    tq_report* rep = nullptr;
    st = tq_analyze(poly, nullptr, opt.seed, 1, &rep);
    tq_polytope_free(poly);
    if (st != TQ_OK) {
      std::cout << "FAIL " << path.filename().string() << " ("
                << tq_status_name(st) << ": " << tq_last_error() << ")\n";
      ++failures;
      continue;
    }
    const bool ok = tq_report_audits_passed(rep) != 0;
    std::cout << (ok ? "PASS " : "FAIL ") << path.filename().string() << "\n";
    if (!ok) ++failures;
    tq_report_free(rep);
  }
  std::cout << (failures == 0 ? "all passed" : std::to_string(failures) + " failed")
            << " (" << files.size() << " files)\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of symplectic toric quasifolds"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool dir_input) {
    sub->add_option("input", opt.input,
                    dir_input ? "directory of polytope JSON files"
                              : "polytope JSON file")
        ->required();
    sub->add_option("--seed", opt.seed, "seed for the generic-direction search");
    if (!dir_input) {
      sub->add_option("--xi", opt.xi,
                      "explicit direction, e.g. \"1,2\" or a JSON array");
      sub->add_option("--format", opt.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
      sub->add_option("--out", opt.out, "write the report to a file");
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one polytope");
  add_common(analyze, false);
  CLI::App* audit = app.add_subcommand("audit", "report plus all counting audits");
  add_common(audit, false);
  CLI::App* corpus = app.add_subcommand("corpus", "audit every polytope in a directory");
  add_common(corpus, true);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return run_one(opt, false);
  if (audit->parsed()) return run_one(opt, true);
  return run_corpus(opt);
}
