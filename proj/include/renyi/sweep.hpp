#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "renyi/relations.hpp"

namespace renyi {

struct SweepConfig {
  std::string suite = "sanity";  // thm1|cor1|chain|gbur|exclusion|sanity|all
  std::vector<Shape> dims = {Shape{2, 2}};
  int trials = 10;
  std::uint64_t seed = 1;
  int order_samples = 0;                           // 0 = suite default rotation
  std::vector<std::array<double, 3>> orders;       // explicit triples, override sampling
  double tolerance_bits = 1e-6;
  std::string output_path;
  std::string output_format = "csv";  // csv|json
  unsigned workers = 0;               // 0 = hardware concurrency

  void validate() const;
};

struct SuiteSummary {
  std::string suite;
  long records = 0;
  long passes = 0;
  long failures = 0;
  long counterexamples = 0;
  double min_margin = kInf;
  double mean_margin = 0.0;
};

struct SweepReport {
  std::vector<InequalityRecord> records;
  std::vector<SuiteSummary> summary;
  SweepConfig config;
  std::string version = kVersion;
  std::string rng_name = Rng::kName;
  double wall_time_s = 0.0;
};

// Deterministic given the config (excluding wall time): every record is
// recomputable from (suite, seed, trial). Trials run on a worker pool and are
// collected in trial order.
SweepReport run_sweep(const SweepConfig& cfg);

std::vector<SuiteSummary> summarize(const std::vector<InequalityRecord>& records,
                                    double tolerance_bits);

// CSV columns: suite,name,alpha,beta,gamma,delta,dimA,dimB,seed,trial,
// lhs_bits,rhs_bits,margin_bits,soundness,converged. Numbers carry 12
// significant digits; absent orders are empty fields. No timing field, so
// equal configs produce byte-identical CSV.
std::string emit_csv(const SweepReport& report);

std::string emit_json(const SweepReport& report);
SweepReport parse_report_json(const std::string& text);

// key=value lines, '#' comments; same field names as the CLI flags
// (suite, dims, trials, seed, orders, order-samples, tol-bits, out, format,
// workers). Flags override file values.
SweepConfig parse_config_file(const std::string& text);

std::vector<Shape> parse_dims(const std::string& spec);  // e.g. "2x2,2x3"
std::string dims_to_string(const std::vector<Shape>& dims);
// e.g. "1.333,2,2;0.667,0.5,0.5" ("inf" allowed)
std::vector<std::array<double, 3>> parse_orders(const std::string& spec);
std::string orders_to_string(const std::vector<std::array<double, 3>>& orders);

// 12 significant digits, "inf"/"-inf"/"nan" for non-finite
std::string format_number(double v);

void parallel_for(long n, unsigned workers, const std::function<void(long)>& body);

}  // namespace renyi
