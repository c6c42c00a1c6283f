#include "liouville/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liouville/cofolner.hpp"
#include "liouville/error.hpp"
#include "liouville/json_io.hpp"
#include "liouville/parallel.hpp"
#include "liouville/search.hpp"
#include "liouville/walks.hpp"

namespace liouville::cli {

namespace {

struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FlagSpec {
  const char* name;
  const char* help;
  bool is_switch = false;
};

const std::map<std::string, std::vector<FlagSpec>>& subcommands() {
  static const std::map<std::string, std::vector<FlagSpec>> table = {
      {"build-cofolner",
       {{"support", "comma-separated dyadic points, e.g. 0,1,2 or 1/2^1,3/2^2"},
        {"n", "subset size: 1 or 2"},
        {"epsilon", "target ratio p/q > 0"},
        {"L", "box side (pairs only), >= 1"},
        {"N", "number of unit translates, >= 1"},
        {"r", "multipliers r1,r2,... (one per gap, each >= 1)"},
        {"max-steps", "escalation steps, >= 1"},
        {"max-elements", "largest |E| escalation may build, >= 1"},
        {"no-escalate", "verify once at the given parameters", true},
        {"into-F", "conjugate the result into Thompson's group F (support in (0,1))", true},
        {"set-semantics", "count images as a set instead of a multiset", true}}},
      {"verify-cofolner", {{"certificate", "path to a certificate JSON"}}},
      {"search",
       {{"objective", "pair3 | general | chain | sequence"},
        {"d", "dimension for general (n >= 2) or chain (d >= 1)"},
        {"B", "largest coordinate (csv format: comma list)"},
        {"k", "most rows / longest sequence (csv format: comma list)"},
        {"method", "exhaustive | anneal"},
        {"steps", "annealing steps, >= 0"},
        {"t-start", "initial annealing temperature, > 0"},
        {"t-end", "final annealing temperature, > 0"},
        {"chains", "independent annealing chains, >= 1"},
        {"budget", "largest exhaustive enumeration, >= 1"},
        {"format", "json | csv"},
        {"diagonal", "restrict rows to (a, ..., a)", true},
        {"matched-rows", "count only rows whose keys agree across all terms", true}}},
      {"simulate-walk",
       {{"measure", "lazy | F | FR | path to a measure JSON"},
        {"start", "comma-separated dyadic start set"},
        {"k", "step count(s), comma list allowed"},
        {"trials", "number of walks, >= 1"}}},
      {"eval-objective",
       {{"objective", "pair3 | general | chain | sequence"},
        {"d", "dimension for general or chain"},
        {"set", "rows separated by ';', entries by ',' (sequence: one row)"}}},
  };
  return table;
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> table = {
      {"build-cofolner", "construct and verify a co-Følner set for the subsets of a support"},
      {"verify-cofolner", "recompute the ratio claimed by a certificate"},
      {"search", "exhaustive or annealed search for high-ratio candidate sets"},
      {"simulate-walk", "endpoint distribution of random walks on point sets"},
      {"eval-objective", "evaluate one objective on one candidate set"},
  };
  return table;
}

std::uint64_t parse_u64(const RunConfig& c, const std::string& flag, std::uint64_t lo,
                        std::uint64_t hi, std::uint64_t fallback) {
  const auto it = c.params.find(flag);
  if (it == c.params.end()) return fallback;
  const auto& text = it->second;
  const bool digits = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
  std::uint64_t v = 0;
  bool ok = digits && text.size() <= 19;
  if (ok) {
    v = std::stoull(text);
    ok = v >= lo && v <= hi;
  }
  if (!ok) {
    throw UsageError("--" + flag + " must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got '" + text + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_u64_list(const RunConfig& c, const std::string& flag,
                                          std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(c.params.at(flag));
  std::string item;
  while (std::getline(ss, item, ',')) {
    RunConfig one;
    one.params[flag] = item;
    out.push_back(parse_u64(one, flag, lo, hi, 0));
  }
  if (out.empty()) throw UsageError("--" + flag + " needs at least one value");
  return out;
}

double parse_positive_double(const RunConfig& c, const std::string& flag, double fallback) {
  const auto it = c.params.find(flag);
  if (it == c.params.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used == it->second.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + flag + " must be a number > 0, got '" + it->second + "'");
}

const std::string& require(const RunConfig& c, const std::string& flag) {
  const auto it = c.params.find(flag);
  if (it == c.params.end()) throw UsageError("--" + flag + " is required for " + c.subcommand);
  return it->second;
}

bool has(const RunConfig& c, const std::string& flag) { return c.params.count(flag) > 0; }

template <typename F>
auto as_usage(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

void emit(const RunConfig& c, const std::string& ext, const std::string& text, std::ostream& out,
          std::ostream& log) {
  std::optional<std::filesystem::path> path;
  if (c.out) {
    path = *c.out;
  } else if (const char* dir = std::getenv("LIOUVILLE_OUT_DIR"); dir != nullptr && *dir != '\0') {
    path = std::filesystem::path(dir) / (c.subcommand + "." + ext);
  }
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path->string());
  file << text;
  log << "wrote " << path->string() << "\n";
}

Objective objective_from(const RunConfig& c) {
  const auto& name = require(c, "objective");
  if (name == "pair3" || name == "sequence") return Objective::parse(name, 0);
  if (name == "general") return Objective::general(parse_u64(c, "d", 2, 64, 3));
  if (name == "chain") return Objective::chain(parse_u64(c, "d", 1, 64, 2));
  throw UsageError("--objective must be one of pair3|general|chain|sequence, got '" + name + "'");
}

int build_cofolner_cmd(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto support = as_usage("support", [&] { return PointSet::parse(require(c, "support")); });
  if (support.empty()) throw UsageError("--support needs at least one point");
  const int n = static_cast<int>(parse_u64(c, "n", 1, 2, 0));
  if (!has(c, "n")) throw UsageError("--n is required for build-cofolner (1 or 2)");
  const auto epsilon = as_usage("epsilon", [&] { return parse_rational(require(c, "epsilon")); });
  if (sgn(epsilon) <= 0) throw UsageError("--epsilon must be a fraction p/q > 0");
  BuildParams params;
  if (has(c, "L")) params.L = parse_u64(c, "L", 1, 62, 2);
  if (has(c, "N")) params.N = parse_u64(c, "N", 1, 100'000'000, 1);
  if (has(c, "r")) {
    std::vector<std::int64_t> r;
    for (auto v : parse_u64_list(c, "r", 1, 1'000'000)) r.push_back(static_cast<std::int64_t>(v));
    if (r.size() + 1 != support.size()) {
      throw UsageError("--r needs exactly " + std::to_string(support.size() - 1) +
                       " values (one per gap of --support)");
    }
    params.r = std::move(r);
  }
  params.max_steps = static_cast<int>(parse_u64(c, "max-steps", 1, 64, 6));
  params.max_elements = parse_u64(c, "max-elements", 1, 1'000'000'000, params.max_elements);
  params.auto_escalate = !has(c, "no-escalate");
  params.into_f = has(c, "into-F");
  params.semantics = has(c, "set-semantics") ? Semantics::Set : Semantics::Multiset;
  params.workers = c.workers;
  if (params.into_f) {
    for (const auto& p : support) {
      if (p.sign() <= 0 || !(p < Dyadic(1))) throw UsageError("--into-F needs every --support point in (0,1)");
    }
  }
  const auto cert = build_cofolner(support, n, epsilon, params);
  emit(c, "json", dump(to_json(cert)), out, log);
  log << "achieved " << to_string(cert.achieved) << " (target " << to_string(cert.epsilon) << "), |E| = "
      << cert.E.size() << ", status " << cert.pipeline->status << "\n";
  return cert.verified ? kSuccess : kVerificationFailed;
}

int verify_cofolner_cmd(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto& path = require(c, "certificate");
  std::ifstream in(path);
  if (!in) throw UsageError("--certificate: cannot open '" + path + "'");
  CoFolnerCertificate claimed;
  try {
    claimed = certificate_from_json(Json::parse(in));
  } catch (const std::exception& e) {
    log << "invalid certificate: " << e.what() << "\n";
    return kVerificationFailed;
  }
  if (claimed.E.empty()) {
    log << "invalid certificate: E is empty\n";
    return kVerificationFailed;
  }
  auto recomputed = verify_cofolner(claimed.E, claimed.F, claimed.epsilon, claimed.semantics, c.workers);
  recomputed.pipeline = claimed.pipeline;
  const bool consistent = recomputed.achieved == claimed.achieved && recomputed.verified == claimed.verified;
  if (c.out) emit(c, "json", dump(to_json(recomputed)), out, log);
  log << "recomputed achieved " << to_string(recomputed.achieved) << " vs claimed "
      << to_string(claimed.achieved) << "; epsilon " << to_string(recomputed.epsilon) << "\n";
  if (!consistent) log << "certificate claims do not match recomputation\n";
  return consistent && recomputed.verified ? kSuccess : kVerificationFailed;
}

int search_cmd(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto objective = objective_from(c);
  const auto method = c.params.count("method") ? c.params.at("method") : std::string("exhaustive");
  if (method != "exhaustive" && method != "anneal") {
    throw UsageError("--method must be exhaustive or anneal, got '" + method + "'");
  }
  const auto format = c.params.count("format") ? c.params.at("format") : std::string("json");
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
  require(c, "B");
  require(c, "k");
  const auto Bs = parse_u64_list(c, "B", 1, 1'000'000);
  const std::uint64_t k_lo = objective.kind() == ObjectiveKind::Sequence ? 3 : 1;
  const auto ks = parse_u64_list(c, "k", k_lo, 1'000);
  if (format == "json" && (Bs.size() != 1 || ks.size() != 1)) {
    throw UsageError("--B and --k take a single value with --format json (lists need --format csv)");
  }
  ExhaustiveOptions ex;
  ex.rows = has(c, "diagonal") ? RowSpace::Diagonal : RowSpace::Full;
  ex.mode = has(c, "matched-rows") ? IntersectionMode::MatchedRows : IntersectionMode::Weak;
  ex.budget = parse_u64(c, "budget", 1, UINT64_MAX / 2, ex.budget);
  ex.workers = c.workers;
  AnnealOptions an;
  an.steps = parse_u64(c, "steps", 0, 1'000'000'000, an.steps);
  an.t_start = parse_positive_double(c, "t-start", an.t_start);
  an.t_end = parse_positive_double(c, "t-end", an.t_end);
  an.chains = static_cast<unsigned>(parse_u64(c, "chains", 1, 4096, 1));
  an.seed = c.seed;
  an.rows = ex.rows;
  an.mode = ex.mode;
  an.workers = c.workers;

  auto one = [&](std::uint64_t B, std::uint64_t k) {
    try {
      return method == "exhaustive" ? exhaustive_search(objective, B, k, ex)
                                    : anneal_search(objective, B, k, an);
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) {
        throw UsageError(std::string(e.what()) + "; lower --B/--k or raise --budget");
      }
      throw;
    }
  };
  if (format == "json") {
    const auto r = one(Bs.front(), ks.front());
    emit(c, "json", dump(to_json(r)), out, log);
    log << r.objective << " " << method << " B=" << r.bounds.B << " k=" << r.bounds.k
        << ": best ratio " << to_string(r.best_ratio) << " (bounded result)\n";
    return kSuccess;
  }
  std::string csv = "objective,method,B,k,d,best_ratio,best_set\n";
  for (auto B : Bs) {
    for (auto k : ks) {
      const auto r = one(B, k);
      csv += r.objective + "," + method + "," + std::to_string(B) + "," + std::to_string(k) + "," +
             std::to_string(r.bounds.d) + "," + to_string(r.best_ratio) + ",\"" + r.best_set.to_string() + "\"\n";
    }
  }
  emit(c, "csv", csv, out, log);
  return kSuccess;
}

ProbMeasure measure_from(const std::string& name) {
  if (name == "lazy") return lazy_translation_measure();
  if (name == "F") return default_f_measure();
  if (name == "FR") return default_fr_measure();
  std::ifstream in(name);
  if (!in) throw UsageError("--measure must be lazy, F, FR or a readable JSON file, got '" + name + "'");
  try {
    const auto j = Json::parse(in);
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      atoms.push_back({plmap_from_json(a.at("element")), parse_rational(a.at("weight").get<std::string>())});
    }
    return ProbMeasure(std::move(atoms), j.value("symmetric", false), j.value("description", name));
  } catch (const std::exception& e) {
    throw UsageError("--measure: " + std::string(e.what()));
  }
}

int simulate_cmd(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto mu = measure_from(c.params.count("measure") ? c.params.at("measure") : std::string("lazy"));
  const auto start = as_usage("start", [&] { return PointSet::parse(require(c, "start")); });
  if (start.empty()) throw UsageError("--start needs at least one point");
  require(c, "k");
  const auto ks = parse_u64_list(c, "k", 0, 1'000'000);
  const auto trials = parse_u64(c, "trials", 1, 100'000'000, 10'000);
  const auto dists = simulate_checkpoints(mu, start, ks, trials, c.seed, c.workers);
  Json j;
  if (dists.size() == 1) {
    j = to_json(dists.front(), mu.description());
  } else {
    j = Json::array();
    for (const auto& d : dists) j.push_back(to_json(d, mu.description()));
  }
  emit(c, "json", dump(j), out, log);
  log << "simulated " << trials << " walks from {" << start.to_string() << "}\n";
  return kSuccess;
}

int eval_objective_cmd(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto objective = objective_from(c);
  const auto set = as_usage("set", [&] { return CandidateSet::parse(require(c, "set")); });
  const auto mode = has(c, "matched-rows") ? IntersectionMode::MatchedRows : IntersectionMode::Weak;
  const auto q = as_usage("set", [&] { return evaluate_any(objective, set, mode); });
  Json j = {{"objective", objective.id()}, {"set", set.to_string()}, {"ratio", to_string(q)}};
  emit(c, "json", dump(j), out, log);
  return kSuccess;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Co-Følner certificates and additive-combinatorics search for Thompson's groups"};
  app.name("liouville");
  app.require_subcommand(1);
  std::string out;
  std::uint64_t seed = 1;
  unsigned workers = default_workers();
  app.add_option("--out", out, "artifact path");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--workers", workers, "worker threads (>= 1)")->check(CLI::Range(1U, 4096U));

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> switches;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, flags] : subcommands()) {
    auto* sub = app.add_subcommand(name, descriptions().at(name));
    subs[name] = sub;
    sub->add_option("--out", out, "artifact path");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--workers", workers, "worker threads (>= 1)")->check(CLI::Range(1U, 4096U));
    for (const auto& f : flags) {
      const std::string flag = std::string("--") + f.name;
      if (f.is_switch) {
        sub->add_flag(flag, switches[name][f.name], f.help);
      } else {
        sub->add_option(flag, values[name][f.name], f.help);
      }
    }
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) throw HelpRequested(sub->help());
    }
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    config.subcommand = name;
    for (const auto& f : subcommands().at(name)) {
      if (sub->count(std::string("--") + f.name) == 0) continue;
      config.params[f.name] = f.is_switch ? "true" : values[name][f.name];
    }
  }
  if (!out.empty()) config.out = out;
  config.seed = seed;
  config.workers = workers;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  if (config.subcommand == "build-cofolner") return build_cofolner_cmd(config, out, log);
  if (config.subcommand == "verify-cofolner") return verify_cofolner_cmd(config, out, log);
  if (config.subcommand == "search") return search_cmd(config, out, log);
  if (config.subcommand == "simulate-walk") return simulate_cmd(config, out, log);
  if (config.subcommand == "eval-objective") return eval_objective_cmd(config, out, log);
  throw UsageError("unknown subcommand '" + config.subcommand + "'");
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
  try {
    return run(parse_args(args), out, log);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kSuccess;
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace liouville::cli
