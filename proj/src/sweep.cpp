#include "renyi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace renyi {

using json = nlohmann::ordered_json;

void SweepConfig::validate() const {
  static const char* kSuites[] = {"thm1", "cor1", "chain", "gbur", "exclusion", "sanity", "all"};
  if (std::find_if(std::begin(kSuites), std::end(kSuites),
                   [&](const char* s) { return suite == s; }) == std::end(kSuites))
    throw std::invalid_argument("config: unknown suite '" + suite + "'");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (tolerance_bits < 0) throw std::invalid_argument("config: tolerance must be >= 0");
  if (dims.empty()) throw std::invalid_argument("config: no dims given");
  for (const Shape& s : dims) s.validate();
  if (output_format != "csv" && output_format != "json")
    throw std::invalid_argument("config: format must be csv or json");
  for (const auto& o : orders)
    for (double v : o)
      if (std::isnan(v) || v <= 0.0)
        throw std::invalid_argument("config: orders must be positive");
}

void parallel_for(long n, unsigned workers, const std::function<void(long)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<long>(n, 1)));
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// order samplers
// ---------------------------------------------------------------------------

namespace {

struct Triple {
  double a, b, g;
};

// exact-relation triple in the requested range case; beta/gamma roles are
// swapped at random since the relation is symmetric in them
Triple sample_case_triple(TripleCase c, Rng& rng) {
  double a = 1.0, b_ip = 0.0, g_ip = 0.0;
  switch (c) {
    case TripleCase::all_above_one: {
      a = rng.uniform(1.05, 1.88);
      double s = a / (a - 1.0);
      b_ip = rng.uniform(1.05, s - 1.05);
      g_ip = s - b_ip;
      break;
    }
    case TripleCase::all_below_one: {
      a = rng.uniform(2.0 / 3.0 + 0.01, 0.95);
      double s = a / (a - 1.0);
      b_ip = rng.uniform(s + 1.02, -1.02);
      g_ip = s - b_ip;
      break;
    }
    case TripleCase::gamma_below_one: {
      a = rng.uniform(1.05, 6.0);
      double s = a / (a - 1.0);
      double g = rng.uniform(0.52, 0.95);
      g_ip = g / (g - 1.0);
      b_ip = s - g_ip;
      break;
    }
    case TripleCase::alpha_gamma_below_one: {
      a = rng.uniform(0.05, 0.95);
      double s = a / (a - 1.0);
      g_ip = rng.uniform(s - 8.0, s - 1.05);
      b_ip = s - g_ip;
      break;
    }
    default:
      throw std::invalid_argument("sample_case_triple: bad case");
  }
  double b = order_from_inv_prime(b_ip);
  double g = order_from_inv_prime(g_ip);
  if (rng.uniform() < 0.5) std::swap(b, g);
  return {a, b, g};
}

// flipped-relation triple for the measured uncertainty bound:
// a in (1,2), b in [1/2,1), g in (1,inf), negative sign
Triple sample_flipped_triple(Rng& rng) {
  double b = rng.uniform(0.5, 0.93);
  double g = rng.uniform(1.08, 5.0);
  double s = b / (1.0 - b) + g / (g - 1.0);
  return {order_from_inv_prime(s), b, g};
}

// feasible orders for the exclusion bound
Triple sample_exclusion_triple(Rng& rng) {
  for (;;) {
    if (rng.uniform() < 0.5) {
      double b = rng.uniform(0.5, 0.9);
      double g = rng.uniform(1.05, 1.30);
      double r = 1.0 / (b - 1.0) + 1.0 / (g - 1.0);
      if (r <= 1.05) continue;
      double a_min = r / (r - 1.0);
      double a = a_min + rng.uniform(0.0, 2.0);
      if (rng.uniform() < 0.5) std::swap(b, g);
      return {a, b, g};
    }
    double a = rng.uniform(0.70, 0.95);
    double b = rng.uniform(1.05, 1.30);
    double g = rng.uniform(1.05, 1.30);
    return {a, b, g};
  }
}

std::array<double, 4> sample_quad(JointDirection dir, Rng& rng) {
  double a, b, g;
  if (dir == JointDirection::lower) {
    a = rng.uniform(1.1, 3.0);
    b = rng.uniform(1.1, 3.0);
    g = rng.uniform(1.1, 3.0);
  } else {
    a = rng.uniform(0.55, 0.92);
    b = rng.uniform(0.55, 0.92);
    g = rng.uniform(0.55, 0.92);
  }
  double s = a / (a - 1.0) + b / (b - 1.0) + g / (g - 1.0);
  return {a, b, g, order_from_inv_prime(s)};
}

// ---------------------------------------------------------------------------
// per-suite trials
// ---------------------------------------------------------------------------

VerifyOptions options_from(const SweepConfig& cfg, std::uint64_t trial_seed) {
  VerifyOptions opt;
  opt.tolerance_bits = cfg.tolerance_bits;
  opt.budget.seed = Rng::derive(trial_seed, 0x0f);
  return opt;
}

std::vector<InequalityRecord> thm1_trial(const SweepConfig& cfg, long t) {
  std::uint64_t trial_seed = Rng::derive(cfg.seed, 0x7100 + static_cast<std::uint64_t>(t));
  const Shape& shape = cfg.dims[static_cast<size_t>(t) % cfg.dims.size()];
  DensityMatrix rho = random_state(StateKind::hs_mixed, shape, trial_seed);
  VerifyOptions opt = options_from(cfg, trial_seed);
  bool swap = (t % 2 == 1) && shape[0] == shape[1] ? false : (t % 2 == 1);
  swap = (t % 2 == 1);

  std::vector<InequalityRecord> out;
  auto run = [&](const Triple& tr) {
    OrderTriple ot = classify_triple(RenyiOrder(tr.a), RenyiOrder(tr.b), RenyiOrder(tr.g));
    bool positive = ot.sign == SignProduct::positive || ot.order_one_limit;
    DecompForm up_form = positive ? DecompForm::up_lower : DecompForm::up_upper;
    DecompForm down_form = positive ? DecompForm::down_lower : DecompForm::down_upper;
    out.push_back(verify_decomposition(rho, RenyiOrder(tr.a), RenyiOrder(tr.b),
                                       RenyiOrder(tr.g), up_form, false, opt));
    out.push_back(verify_decomposition(rho, RenyiOrder(tr.a), RenyiOrder(tr.b),
                                       RenyiOrder(tr.g), down_form, swap, opt));
  };

  if (!cfg.orders.empty()) {
    const auto& o = cfg.orders[static_cast<size_t>(t) % cfg.orders.size()];
    run({o[0], o[1], o[2]});
    const auto& o2 = cfg.orders[static_cast<size_t>(t + 1) % cfg.orders.size()];
    run({o2[0], o2[1], o2[2]});
  } else {
    // 100 consecutive trials share a triple block; fresh state every trial
    long block = t / 100;
    Rng trng(Rng::derive(cfg.seed, 0x7200 + static_cast<std::uint64_t>(block)));
    TripleCase pos = (block % 2 == 0) ? TripleCase::all_above_one
                                      : TripleCase::alpha_gamma_below_one;
    TripleCase neg = (block % 2 == 0) ? TripleCase::all_below_one
                                      : TripleCase::gamma_below_one;
    run(sample_case_triple(pos, trng));
    run(sample_case_triple(neg, trng));
  }
  for (auto& rec : out) rec.state_seed = trial_seed;
  return out;
}

std::vector<InequalityRecord> cor1_trial(const SweepConfig& cfg, long t) {
  std::uint64_t trial_seed = Rng::derive(cfg.seed, 0xc100 + static_cast<std::uint64_t>(t));
  const Shape& shape = cfg.dims[static_cast<size_t>(t) % cfg.dims.size()];
  DensityMatrix rho = random_state(StateKind::hs_mixed, shape, trial_seed);
  VerifyOptions opt = options_from(cfg, trial_seed);
  Rng trng(Rng::derive(cfg.seed, 0xc200 + static_cast<std::uint64_t>(t)));

  std::vector<InequalityRecord> out;
  for (JointDirection dir : {JointDirection::lower, JointDirection::upper}) {
    auto q = sample_quad(dir, trng);
    OrderQuad quad = make_quad(RenyiOrder(q[0]), RenyiOrder(q[1]), RenyiOrder(q[2]),
                               RenyiOrder(q[3]));
    out.push_back(verify_joint_decomposition(rho, quad, dir, opt));
  }
  for (auto& rec : out) rec.state_seed = trial_seed;
  return out;
}

std::vector<InequalityRecord> chain_trial(const SweepConfig& cfg, long t) {
  std::uint64_t trial_seed = Rng::derive(cfg.seed, 0x3100 + static_cast<std::uint64_t>(t));
  const Shape& shape = cfg.dims[static_cast<size_t>(t) % cfg.dims.size()];
  DensityMatrix rho = random_state(StateKind::hs_mixed, shape, trial_seed);
  VerifyOptions opt = options_from(cfg, trial_seed);
  Rng trng(Rng::derive(cfg.seed, 0x3200 + static_cast<std::uint64_t>(t)));

  std::vector<InequalityRecord> out;
  {
    Triple tr = sample_case_triple((t % 2 == 0) ? TripleCase::all_above_one
                                                : TripleCase::alpha_gamma_below_one,
                                   trng);
    out.push_back(verify_chain_rule(rho, ChainKind::up, RenyiOrder(tr.a), RenyiOrder(tr.b),
                                    RenyiOrder(tr.g), nullptr, opt));
  }
  {
    Triple tr = sample_case_triple((t % 2 == 0) ? TripleCase::all_below_one
                                                : TripleCase::gamma_below_one,
                                   trng);
    out.push_back(verify_chain_rule(rho, ChainKind::down, RenyiOrder(tr.a), RenyiOrder(tr.b),
                                    RenyiOrder(tr.g), nullptr, opt));
  }
  {
    Shape tri{2, 2, 2};
    DensityMatrix rho3 =
        random_state(StateKind::haar_pure, tri, Rng::derive(trial_seed, 0x31));
    DensityMatrix sigma3 =
        random_state(StateKind::haar_pure, tri, Rng::derive(trial_seed, 0x32));
    Triple tr = sample_flipped_triple(trng);
    out.push_back(verify_chain_rule(rho3, ChainKind::generalized, RenyiOrder(tr.a),
                                    RenyiOrder(tr.b), RenyiOrder(tr.g), &sigma3, opt));
  }
  for (auto& rec : out) rec.state_seed = trial_seed;
  return out;
}

std::vector<InequalityRecord> gbur_trial(const SweepConfig& cfg, long t) {
  std::uint64_t trial_seed = Rng::derive(cfg.seed, 0x6100 + static_cast<std::uint64_t>(t));
  const Shape& shape = cfg.dims[static_cast<size_t>(t) % cfg.dims.size()];
  DensityMatrix rho = random_state(StateKind::hs_mixed, shape, trial_seed);
  VerifyOptions opt = options_from(cfg, trial_seed);
  Rng trng(Rng::derive(cfg.seed, 0x6200 + static_cast<std::uint64_t>(t)));

  MeasurementPair pair = (t % 4 == 0) ? mub_pair(shape[0])
                                      : random_pair(shape[0], Rng::derive(trial_seed, 0x61));
  Triple tr = (t % 5 == 4) ? Triple{1.0, 1.0, 1.0} : sample_flipped_triple(trng);
  InequalityRecord rec =
      verify_measured_uncertainty(rho, pair, RenyiOrder(tr.a), RenyiOrder(tr.b),
                                  RenyiOrder(tr.g), nullptr, opt);
  rec.state_seed = trial_seed;
  return {rec};
}

std::vector<InequalityRecord> exclusion_trial(const SweepConfig& cfg, long t) {
  std::uint64_t trial_seed = Rng::derive(cfg.seed, 0xe100 + static_cast<std::uint64_t>(t));
  const Shape& shape = cfg.dims[static_cast<size_t>(t) % cfg.dims.size()];
  VerifyOptions opt = options_from(cfg, trial_seed);
  Rng trng(Rng::derive(cfg.seed, 0xe200 + static_cast<std::uint64_t>(t)));
  MeasurementPair pair = (t % 2 == 0) ? mub_pair(shape[0])
                                      : random_pair(shape[0], Rng::derive(trial_seed, 0xe1));

  std::vector<InequalityRecord> out;
  if (t % 3 == 2) {
    DensityMatrix cq = random_state(StateKind::classical_quantum, shape, trial_seed);
    out.push_back(verify_exclusion(cq, pair, RenyiOrder(1), RenyiOrder(1), RenyiOrder(1),
                                   ExclusionMode::hall_limit, opt));
  } else {
    DensityMatrix rho = random_state(StateKind::hs_mixed, shape, trial_seed);
    Triple tr = (t % 6 == 0) ? Triple{2.0, 0.5, 1.25} : sample_exclusion_triple(trng);
    out.push_back(verify_exclusion(rho, pair, RenyiOrder(tr.a), RenyiOrder(tr.b),
                                   RenyiOrder(tr.g), ExclusionMode::general, opt));
    double b = (t % 4 == 1) ? 0.5 : trng.uniform(0.5, 4.0 / 3.0);
    out.push_back(verify_exclusion(rho, pair, RenyiOrder(1), RenyiOrder(b), RenyiOrder(1),
                                   ExclusionMode::min_entropy, opt));
  }
  for (auto& rec : out) rec.state_seed = trial_seed;
  return out;
}

std::vector<InequalityRecord> sanity_trial(const SweepConfig& cfg, long t) {
  std::uint64_t trial_seed = Rng::derive(cfg.seed, 0x5a00);
  VerifyOptions opt;
  opt.tolerance_bits = cfg.tolerance_bits;
  // sanity_suite derives per-trial seeds itself; run exactly one trial here
  std::vector<Shape> dims = {cfg.dims[static_cast<size_t>(t) % cfg.dims.size()]};
  std::uint64_t base = Rng::derive(trial_seed, static_cast<std::uint64_t>(t));
  auto recs = sanity_suite(base, dims, 1, SanityBatteries{}, opt);
  for (auto& rec : recs) rec.trial = t;
  return recs;
}

std::vector<InequalityRecord> run_trial(const std::string& suite, const SweepConfig& cfg,
                                        long t) {
  if (suite == "thm1") return thm1_trial(cfg, t);
  if (suite == "cor1") return cor1_trial(cfg, t);
  if (suite == "chain") return chain_trial(cfg, t);
  if (suite == "gbur") return gbur_trial(cfg, t);
  if (suite == "exclusion") return exclusion_trial(cfg, t);
  if (suite == "sanity") return sanity_trial(cfg, t);
  throw std::invalid_argument("run_trial: unknown suite " + suite);
}

}  // namespace

std::vector<SuiteSummary> summarize(const std::vector<InequalityRecord>& records,
                                    double tolerance_bits) {
  std::vector<SuiteSummary> out;
  for (const auto& rec : records) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const SuiteSummary& s) { return s.suite == rec.suite; });
    if (it == out.end()) {
      out.push_back(SuiteSummary{rec.suite});
      it = out.end() - 1;
    }
    it->records += 1;
    bool pass = std::isfinite(rec.margin_bits) ? rec.margin_bits >= -tolerance_bits
                                               : rec.margin_bits > 0;  // +inf margins pass
    if (pass)
      it->passes += 1;
    else
      it->failures += 1;
    if (rec.counterexample_candidate) it->counterexamples += 1;
    if (rec.margin_bits < it->min_margin) it->min_margin = rec.margin_bits;
    it->mean_margin += rec.margin_bits;
  }
  for (auto& s : out)
    if (s.records > 0) s.mean_margin /= double(s.records);
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  auto start = std::chrono::steady_clock::now();

  std::vector<std::string> suites;
  if (cfg.suite == "all")
    suites = {"thm1", "cor1", "chain", "gbur", "exclusion", "sanity"};
  else
    suites = {cfg.suite};

  SweepReport report;
  report.config = cfg;

  for (const std::string& suite : suites) {
    std::vector<std::vector<InequalityRecord>> results(static_cast<size_t>(cfg.trials));
    parallel_for(cfg.trials, cfg.workers, [&](long t) {
      auto recs = run_trial(suite, cfg, t);
      for (auto& rec : recs) {
        rec.suite = suite;
        if (rec.trial < 0) rec.trial = t;
      }
      results[static_cast<size_t>(t)] = std::move(recs);
    });
    for (auto& recs : results)
      for (auto& rec : recs) report.records.push_back(std::move(rec));
  }

  report.summary = summarize(report.records, cfg.tolerance_bits);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

json number_to_json(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return std::strtod(format_number(v).c_str(), nullptr);  // rounded to 12 digits
}

double number_from_json(const json& j) {
  if (j.is_null()) return kNaN;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    return std::strtod(s.c_str(), nullptr);
  }
  return j.get<double>();
}

}  // namespace

std::string emit_csv(const SweepReport& report) {
  std::string out =
      "suite,name,alpha,beta,gamma,delta,dimA,dimB,seed,trial,lhs_bits,rhs_bits,"
      "margin_bits,soundness,converged\n";
  auto field = [](double v) { return std::isnan(v) ? std::string() : format_number(v); };
  for (const auto& rec : report.records) {
    out += rec.suite + ',' + rec.name + ',';
    out += field(rec.alpha) + ',' + field(rec.beta) + ',' + field(rec.gamma) + ',' +
           field(rec.delta) + ',';
    out += std::to_string(rec.dim_a) + ',' + std::to_string(rec.dim_b) + ',';
    out += std::to_string(rec.state_seed) + ',' + std::to_string(rec.trial) + ',';
    out += field(rec.lhs_bits) + ',' + field(rec.rhs_bits) + ',' + field(rec.margin_bits) + ',';
    out += (rec.soundness == InequalityRecord::Side::certified ? "certified" : "heuristic");
    out += ',';
    out += (rec.converged ? "1" : "0");
    out += '\n';
  }
  return out;
}

std::string emit_json(const SweepReport& report) {
  json j;
  j["provenance"] = {
      {"version", report.version},
      {"rng", report.rng_name},
      {"wall_time_s", number_to_json(report.wall_time_s)},
      {"config",
       {{"suite", report.config.suite},
        {"dims", dims_to_string(report.config.dims)},
        {"trials", report.config.trials},
        {"seed", report.config.seed},
        {"order_samples", report.config.order_samples},
        {"orders", orders_to_string(report.config.orders)},
        {"tol_bits", number_to_json(report.config.tolerance_bits)},
        {"out", report.config.output_path},
        {"format", report.config.output_format},
        {"workers", report.config.workers}}}};
  j["summary"] = json::array();
  for (const auto& s : report.summary) {
    j["summary"].push_back({{"suite", s.suite},
                            {"records", s.records},
                            {"passes", s.passes},
                            {"failures", s.failures},
                            {"counterexamples", s.counterexamples},
                            {"min_margin", number_to_json(s.min_margin)},
                            {"mean_margin", number_to_json(s.mean_margin)}});
  }
  j["records"] = json::array();
  for (const auto& rec : report.records) {
    j["records"].push_back(
        {{"suite", rec.suite},
         {"name", rec.name},
         {"alpha", number_to_json(rec.alpha)},
         {"beta", number_to_json(rec.beta)},
         {"gamma", number_to_json(rec.gamma)},
         {"delta", number_to_json(rec.delta)},
         {"dimA", rec.dim_a},
         {"dimB", rec.dim_b},
         {"seed", rec.state_seed},
         {"trial", rec.trial},
         {"lhs_bits", number_to_json(rec.lhs_bits)},
         {"rhs_bits", number_to_json(rec.rhs_bits)},
         {"margin_bits", number_to_json(rec.margin_bits)},
         {"soundness",
          rec.soundness == InequalityRecord::Side::certified ? "certified" : "heuristic"},
         {"converged", rec.converged},
         {"counterexample_candidate", rec.counterexample_candidate}});
  }
  return j.dump(2) + "\n";
}

SweepReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  SweepReport report;
  const json& prov = j.at("provenance");
  report.version = prov.at("version").get<std::string>();
  report.rng_name = prov.at("rng").get<std::string>();
  report.wall_time_s = number_from_json(prov.at("wall_time_s"));
  const json& c = prov.at("config");
  report.config.suite = c.at("suite").get<std::string>();
  report.config.dims = parse_dims(c.at("dims").get<std::string>());
  report.config.trials = c.at("trials").get<int>();
  report.config.seed = c.at("seed").get<std::uint64_t>();
  report.config.order_samples = c.at("order_samples").get<int>();
  report.config.orders = parse_orders(c.at("orders").get<std::string>());
  report.config.tolerance_bits = number_from_json(c.at("tol_bits"));
  report.config.output_path = c.at("out").get<std::string>();
  report.config.output_format = c.at("format").get<std::string>();
  report.config.workers = c.at("workers").get<unsigned>();

  for (const json& r : j.at("records")) {
    InequalityRecord rec;
    rec.suite = r.at("suite").get<std::string>();
    rec.name = r.at("name").get<std::string>();
    rec.alpha = number_from_json(r.at("alpha"));
    rec.beta = number_from_json(r.at("beta"));
    rec.gamma = number_from_json(r.at("gamma"));
    rec.delta = number_from_json(r.at("delta"));
    rec.dim_a = r.at("dimA").get<int>();
    rec.dim_b = r.at("dimB").get<int>();
    rec.state_seed = r.at("seed").get<std::uint64_t>();
    rec.trial = r.at("trial").get<long>();
    rec.lhs_bits = number_from_json(r.at("lhs_bits"));
    rec.rhs_bits = number_from_json(r.at("rhs_bits"));
    rec.margin_bits = number_from_json(r.at("margin_bits"));
    rec.soundness = r.at("soundness").get<std::string>() == "certified"
                        ? InequalityRecord::Side::certified
                        : InequalityRecord::Side::heuristic;
    rec.converged = r.at("converged").get<bool>();
    rec.counterexample_candidate = r.at("counterexample_candidate").get<bool>();
    report.records.push_back(std::move(rec));
  }
  for (const json& s : j.at("summary")) {
    SuiteSummary sum;
    sum.suite = s.at("suite").get<std::string>();
    sum.records = s.at("records").get<long>();
    sum.passes = s.at("passes").get<long>();
    sum.failures = s.at("failures").get<long>();
    sum.counterexamples = s.at("counterexamples").get<long>();
    sum.min_margin = number_from_json(s.at("min_margin"));
    sum.mean_margin = number_from_json(s.at("mean_margin"));
    report.summary.push_back(std::move(sum));
  }
  return report;
}

// ---------------------------------------------------------------------------
// config parsing
// ---------------------------------------------------------------------------

std::vector<Shape> parse_dims(const std::string& spec) {
  std::vector<Shape> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::vector<Eigen::Index> dims;
    std::stringstream ds(item);
    std::string piece;
    while (std::getline(ds, piece, 'x')) dims.push_back(std::stol(piece));
    out.push_back(Shape{dims});
  }
  if (out.empty()) throw std::invalid_argument("parse_dims: empty spec");
  return out;
}

std::string dims_to_string(const std::vector<Shape>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    for (int k = 0; k < dims[i].rank(); ++k) {
      if (k) out += 'x';
      out += std::to_string(dims[i][k]);
    }
  }
  return out;
}

namespace {

double parse_order_value(const std::string& s) {
  if (s == "inf") return kInf;
  return std::strtod(s.c_str(), nullptr);
}

}  // namespace

std::vector<std::array<double, 3>> parse_orders(const std::string& spec) {
  std::vector<std::array<double, 3>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::array<double, 3> triple{};
    std::stringstream ts(item);
    std::string piece;
    int k = 0;
    while (std::getline(ts, piece, ',') && k < 3) triple[static_cast<size_t>(k++)] = parse_order_value(piece);
    if (k != 3) throw std::invalid_argument("parse_orders: each entry needs three orders");
    out.push_back(triple);
  }
  return out;
}

std::string orders_to_string(const std::vector<std::array<double, 3>>& orders) {
  std::string out;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ';';
    for (int k = 0; k < 3; ++k) {
      if (k) out += ',';
      out += format_number(orders[i][static_cast<size_t>(k)]);
    }
  }
  return out;
}

SweepConfig parse_config_file(const std::string& text) {
  SweepConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "suite")
      cfg.suite = value;
    else if (key == "dims")
      cfg.dims = parse_dims(value);
    else if (key == "trials")
      cfg.trials = std::stoi(value);
    else if (key == "seed")
      cfg.seed = std::stoull(value);
    else if (key == "orders")
      cfg.orders = parse_orders(value);
    else if (key == "order-samples" || key == "order_samples")
      cfg.order_samples = std::stoi(value);
    else if (key == "tol-bits" || key == "tolerance_bits")
      cfg.tolerance_bits = std::stod(value);
    else if (key == "out" || key == "output_path")
      cfg.output_path = value;
    else if (key == "format" || key == "output_format")
      cfg.output_format = value;
    else if (key == "workers")
      cfg.workers = static_cast<unsigned>(std::stoul(value));
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
  }
  return cfg;
}

}  // namespace renyi
