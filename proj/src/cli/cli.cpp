#include "cnotpac/cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cnotpac/cli/dimacs.hpp"
#include "cnotpac/consistency/pac.hpp"
#include "cnotpac/error.hpp"
#include "cnotpac/learners/special.hpp"
#include "cnotpac/reduction/gadgets.hpp"

namespace cnotpac::cli {

using io::json;

json RunReport::to_json() const {
  json counts_j = json::object();
  for (const auto& [k, v] : counts) counts_j[k] = v;
  json j{{"command", command}, {"input_digest", input_digest}};
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["outcome"] = outcome;
  j["counts"] = counts_j;
  j["version"] = kVersion;
  j["digest"] = digest();
  j["wall_seconds"] = wall_seconds;
  return j;
}

std::string RunReport::digest() const {
  json counts_j = json::object();
  for (const auto& [k, v] : counts) counts_j[k] = v;
  json j{{"command", command}, {"input_digest", input_digest}};
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["outcome"] = outcome;
  j["counts"] = counts_j;
  j["version"] = kVersion;
  return io::fnv1a_hex(j.dump());
}

namespace {

using Clock = std::chrono::steady_clock;

// Exit codes.
constexpr int kOk = 0, kNegative = 1, kError = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

// A sample set file, or any object holding one under "samples" (such as the
// output of `reduce`).
const json& sample_set_node(const json& j) {
  if (j.is_object() && j.contains("samples") && j["samples"].is_object()) return j["samples"];
  return j;
}

const json& instance_node(const json& j) {
  if (j.is_object() && j.contains("instance")) return j["instance"];
  return j;
}

struct Common {
  std::string report_path;
  std::string out_path;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  RunReport report;
  Clock::time_point start = Clock::now();
  std::string report_path;

  void finish() {
    report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!report_path.empty()) write_text(report_path, pretty(report.to_json()), out);
  }
};

std::string join_digest(const std::vector<std::string>& parts) {
  std::string all;
  for (const auto& p : parts) {
    all += p;
    all.push_back('\0');
  }
  return io::fnv1a_hex(all);
}

// ---- reduce ----

struct ReduceArgs {
  std::string cnf, formula, out;
  std::uint64_t seed = 0;
  bool fig2 = false;
};

int cmd_reduce(const ReduceArgs& a, Context& ctx) {
  red::ArithFormula f = red::ArithFormula::constant(false);
  std::size_t declared_vars = 0;
  std::string source;
  if (!a.cnf.empty()) {
    source = read_file(a.cnf);
    const auto cnf = io::parse_dimacs(source);
    declared_vars = cnf.num_vars;
    f = red::arithmetize_cnf(cnf);
  } else {
    source = a.formula;
    f = red::parse_formula(a.formula);
  }
  Rng rng(a.seed);
  const auto order = a.fig2 ? red::VertexOrder::WorkedExample : red::VertexOrder::Creation;
  auto r = red::reduce_formula_to_samples(f, rng, order);
  while (r.instance.ms.size() < declared_vars) r.instance.ms.emplace_back(r.instance.size, r.instance.size);

  json doc{{"formula", f.to_string()},
           {"seed", a.seed},
           {"vertex_order", a.fig2 ? "worked-example" : "creation"},
           {"instance", io::to_json(r.instance)},
           {"samples", io::to_json(r.samples)}};
  write_text(a.out, pretty(doc), ctx.out);
  if (!a.out.empty() && a.out != "-")
    ctx.out << "instance size " << r.instance.size << ", " << r.instance.num_vars() << " variables, "
            << r.samples.size() << " samples\n";
  ctx.report.input_digest = join_digest({source});
  ctx.report.outcome = "reduced";
  ctx.report.counts = {{"instance_size", r.instance.size}, {"variables", r.instance.num_vars()}, {"samples", r.samples.size()}};
  return kOk;
}

// ---- solve ----

struct SolveArgs {
  std::string samples, instance, strategy = "brute", out;
  std::size_t workers = 1, max_n = 5;
};

void add_stats(RunReport& rep, const cons::SearchStats& s) {
  rep.counts.push_back({"nodes", s.nodes});
  rep.counts.push_back({"full_rank", s.full_rank});
  rep.counts.push_back({"examined", s.examined});
  rep.counts.push_back({"pruned", s.pruned});
  rep.counts.push_back({"oracle_calls", s.oracle_calls});
}

int cmd_solve(const SolveArgs& a, Context& ctx) {
  if (a.strategy == "affine") {
    const std::string path = a.instance.empty() ? a.samples : a.instance;
    if (path.empty()) throw PreconditionViolation("--instance is required for the affine strategy");
    const std::string text = read_file(path);
    const auto inst = io::instance_from_json(instance_node(io::parse_json_text(text)));
    ctx.report.input_digest = join_digest({text});
    ctx.report.counts = {{"variables", inst.num_vars()}, {"instance_size", inst.size}};
    const auto a_opt = cons::affine_family_search(inst);
    if (!a_opt) {
      ctx.report.outcome = "none";
      ctx.out << "no assignment makes M(a) invertible\n";
      return kNegative;
    }
    const auto m = inst.evaluate(*a_opt);
    if (!f2::determinant(m)) throw std::logic_error("affine witness failed re-verification");
    const auto circuit = cliff::CnotCircuit::from_pullback(m, f2::BitVector(inst.size));
    json doc{{"assignment", a_opt->to_string()}, {"circuit", io::to_json(circuit)}};
    write_text(a.out, pretty(doc), ctx.out);
    ctx.report.outcome = "found";
    return kOk;
  }
  if (a.samples.empty()) throw PreconditionViolation("--samples is required");
  const std::string text = read_file(a.samples);
  const SampleSet s = io::sample_set_from_json(sample_set_node(io::parse_json_text(text)));
  ctx.report.input_digest = join_digest({text});
  ctx.report.counts = {{"samples", s.size()}};
  const cons::SearchOptions opt{a.workers, a.max_n};
  cons::SearchResult r;
  if (a.strategy == "brute")
    r = cons::brute_force_search(s, opt);
  else if (a.strategy == "decision")
    r = cons::search_from_decision(cons::brute_force_decider(opt), s);
  else
    throw PreconditionViolation("unknown strategy " + a.strategy);
  add_stats(ctx.report, r.stats);
  ctx.report.outcome = cons::outcome_name(r.outcome);
  switch (r.outcome) {
    case cons::SearchOutcome::Found:
      if (!cons::check_consistent(*r.circuit, s)) throw std::logic_error("witness failed re-verification");
      write_text(a.out, pretty(io::to_json(*r.circuit)), ctx.out);
      return kOk;
    case cons::SearchOutcome::NoneExists:
      ctx.out << "no consistent CNOT circuit exists\n";
      return kNegative;
    case cons::SearchOutcome::OracleFault:
      ctx.err << "error: decision oracle answered inconsistently\n";
      return kError;
  }
  return kError;
}

// ---- verify ----

struct VerifyArgs {
  std::string circuit, samples;
};

int cmd_verify(const VerifyArgs& a, Context& ctx) {
  const std::string ctext = read_file(a.circuit), stext = read_file(a.samples);
  json cj = io::parse_json_text(ctext);
  if (cj.is_object() && cj.contains("circuit")) cj = cj["circuit"];
  const auto doc = io::circuit_from_json(cj);
  const SampleSet s = io::sample_set_from_json(sample_set_node(io::parse_json_text(stext)));
  ctx.report.input_digest = join_digest({ctext, stext});
  ctx.report.counts = {{"samples", s.size()}};
  const auto bad = cons::first_violation(doc.hypothesis(), s);
  if (bad) {
    ctx.report.outcome = "inconsistent";
    ctx.out << "first violated sample: " << *bad << "\n";
    return kNegative;
  }
  ctx.report.outcome = "consistent";
  ctx.out << "consistent with all " << s.size() << " samples\n";
  return kOk;
}

// ---- learn ----

struct LearnArgs {
  std::string mode, samples, out;
  std::uint64_t seed = 0;
  std::size_t n = 0, workers = 1, max_n = 5;
  double draw_constant = 3.0;
  bool decide = false;
};

int cmd_learn(const LearnArgs& a, Context& ctx) {
  Rng rng(a.seed);
  if (a.mode == "trivial") {
    if (a.n == 0) throw PreconditionViolation("--n must be positive");
    const auto t = learn::trivial_uniform_learner(a.n, rng);
    write_text(a.out, pretty(json{{"n", a.n}, {"tableau", io::to_json(t)}}), ctx.out);
    ctx.report.input_digest = join_digest({std::to_string(a.n)});
    ctx.report.outcome = "learned";
    return kOk;
  }
  if (a.samples.empty()) throw PreconditionViolation("--samples is required for mode " + a.mode);
  const std::string text = read_file(a.samples);
  const json parsed = io::parse_json_text(text);
  const json& node = sample_set_node(parsed);
  const SampleSet s = io::sample_set_from_json(node);
  ctx.report.input_digest = join_digest({text});

  if (a.mode == "single-measurement") {
    const auto batch = learn::SingleMeasurementBatch::from_sample_set(s);
    try {
      const auto r = learn::learn_single_measurement(batch, rng);
      if (!cons::check_consistent(r.circuit, s)) throw std::logic_error("learned circuit failed re-verification");
      write_text(a.out, pretty(io::to_json(r.circuit)), ctx.out);
      ctx.report.outcome = "learned";
      ctx.report.counts = {{"samples", s.size()}, {"completion_draws", r.completion_draws}};
      return kOk;
    } catch (const EmptyIntersection& e) {
      ctx.report.outcome = "empty-intersection";
      ctx.out << "no CNOT circuit fits the batch: " << e.what() << "\n";
      return kNegative;
    }
  }
  if (a.mode != "pac") throw PreconditionViolation("unknown learning mode " + a.mode);

  const cons::SearchOptions opt{a.workers, a.max_n};
  const cons::SearchFn search = [opt](const SampleSet& t) { return cons::brute_force_search(t, opt); };
  const auto src = cons::weighted_source(s, io::sample_weights(node));
  auto r = cons::pac_learner(s.n, src, s.size(), search, rng, a.draw_constant);
  if (a.decide) r.accepted = r.hypothesis && cons::check_consistent(*r.hypothesis, s);
  ctx.report.counts = {{"support", s.size()}, {"draws", r.draws}, {"observed", r.observed}};
  add_stats(ctx.report, r.stats);
  if (!r.hypothesis) {
    ctx.report.outcome = cons::outcome_name(r.outcome);
    ctx.out << "no consistent CNOT circuit for the drawn samples\n";
    return r.outcome == cons::SearchOutcome::NoneExists ? kNegative : kError;
  }
  json doc{{"circuit", io::to_json(*r.hypothesis)}, {"draws", r.draws}, {"observed", r.observed}};
  if (r.accepted) doc["accepted"] = *r.accepted;
  write_text(a.out, pretty(doc), ctx.out);
  ctx.report.outcome = r.accepted ? (*r.accepted ? "accepted" : "rejected") : "learned";
  return r.accepted && !*r.accepted ? kNegative : kOk;
}

// ---- complexity ----

struct ComplexityArgs {
  std::size_t n = 8;
  cons::LearningParameters p;
  std::optional<double> d, depth, gates;
};

int cmd_complexity(ComplexityArgs a, Context& ctx) {
  cons::LearningParameters p = cons::LearningParameters::cnot_defaults(a.n);
  p.epsilon = a.p.epsilon;
  p.delta = a.p.delta;
  p.alpha = a.p.alpha;
  p.beta = a.p.beta;
  if (a.d) p.d = *a.d;
  if (a.depth) p.depth = *a.depth;
  if (a.gates) p.gates = *a.gates;
  const double m = cons::sample_complexity(p);
  std::ostringstream line;
  line << std::setprecision(17) << m;
  ctx.out << "epsilon=" << p.epsilon << " delta=" << p.delta << " alpha=" << p.alpha << " beta=" << p.beta
          << " d=" << p.d << " depth=" << p.depth << " gates=" << p.gates << "\n";
  ctx.out << "m = " << line.str() << " (samples: " << std::fixed << std::setprecision(0) << std::ceil(m) << ")\n";
  ctx.out << "note: every constant hidden in the O(.) bound is set to 1\n";
  ctx.report.input_digest = join_digest({line.str()});
  ctx.report.outcome = "computed";
  ctx.report.counts = {{"samples", static_cast<std::uint64_t>(std::ceil(m))}};
  return kOk;
}

// ---- bench ----

struct BenchArgs {
  std::size_t n = 3, samples = 12, trials = 5, workers = 1, max_n = 5;
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchArgs& a, Context& ctx) {
  Rng rng(a.seed);
  cons::SearchStats total;
  for (std::size_t t = 0; t < a.trials; ++t) {
    const auto hidden = cliff::random_cnot_circuit(a.n, rng);
    const auto tab = hidden.tableau();
    SampleSet s{a.n, {}};
    while (s.size() < a.samples) {
      const auto p = stab::PauliOperator::random(a.n, rng);
      if (p.is_identity_up_to_sign()) continue;
      s.add(cliff::make_sample(tab, cliff::random_stabilizer_state(a.n, rng), p));
    }
    const auto r = cons::brute_force_search(s, {a.workers, a.max_n});
    json rec{{"trial", t},         {"n", a.n},
             {"samples", s.size()}, {"outcome", cons::outcome_name(r.outcome)},
             {"nodes", r.stats.nodes}, {"full_rank", r.stats.full_rank},
             {"examined", r.stats.examined}, {"pruned", r.stats.pruned},
             {"wall_seconds", r.stats.wall_seconds}};
    ctx.out << rec.dump() << "\n";
    total.nodes += r.stats.nodes;
    total.full_rank += r.stats.full_rank;
    total.examined += r.stats.examined;
    total.pruned += r.stats.pruned;
  }
  ctx.report.input_digest = join_digest({std::to_string(a.n), std::to_string(a.samples), std::to_string(a.trials)});
  ctx.report.outcome = "done";
  ctx.report.counts = {{"trials", a.trials}};
  add_stats(ctx.report, total);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consistency and learning experiments for CNOT and Clifford circuits", "cnotpac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string report_path;
  app.add_option("--report", report_path, "Write a run report JSON to this path");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "3SAT (DIMACS) or GF(2) formula to a labelled sample set");
  auto* cnf_opt = reduce->add_option("--cnf", ra.cnf, "DIMACS CNF input");
  auto* formula_opt = reduce->add_option("--formula", ra.formula, "Arithmetic formula such as x1*(x2+x3)+x3*x4");
  cnf_opt->excludes(formula_opt);
  reduce->add_option("--out", ra.out, "Output JSON path (default stdout)");
  reduce->add_option("--seed", ra.seed, "Seed for the gadget basis completions")->required();
  reduce->add_flag("--fig2-compat", ra.fig2, "Order vertices as in the printed worked example");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Search for a consistent CNOT circuit");
  solve->add_option("--samples", sa.samples, "Sample set JSON (or reduce output)");
  solve->add_option("--instance", sa.instance, "NonSingularity instance JSON (or reduce output)");
  solve->add_option("--strategy", sa.strategy, "brute, affine or decision")
      ->check(CLI::IsMember({"brute", "affine", "decision"}));
  solve->add_option("--workers", sa.workers, "Brute-force worker threads")->check(CLI::Range(1, 256));
  solve->add_option("--max-n", sa.max_n, "Largest qubit count brute force accepts")->check(CLI::Range(1, 8));
  solve->add_option("--out", sa.out, "Output JSON path (default stdout)");
  std::uint64_t unused_seed = 0;
  solve->add_option("--seed", unused_seed, "Accepted for uniformity; the search is deterministic");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a circuit against a sample set");
  verify->add_option("--circuit", va.circuit, "Circuit JSON")->required();
  verify->add_option("--samples", va.samples, "Sample set JSON")->required();

  LearnArgs la;
  auto* learn_cmd = app.add_subcommand("learn", "Run one of the learners");
  learn_cmd->add_option("mode", la.mode, "pac, single-measurement or trivial")
      ->required()
      ->check(CLI::IsMember({"pac", "single-measurement", "trivial"}));
  learn_cmd->add_option("--samples", la.samples, "Sample set JSON; pac reads optional per-sample weights");
  learn_cmd->add_option("--n", la.n, "Qubit count for trivial mode");
  learn_cmd->add_option("--seed", la.seed, "Seed")->required();
  learn_cmd->add_option("--draw-constant", la.draw_constant, "c in ceil(c s ln s)")->check(CLI::PositiveNumber);
  learn_cmd->add_option("--workers", la.workers, "Brute-force worker threads")->check(CLI::Range(1, 256));
  learn_cmd->add_option("--max-n", la.max_n, "Largest qubit count brute force accepts")->check(CLI::Range(1, 8));
  learn_cmd->add_flag("--decide", la.decide, "Accept iff the hypothesis fits the whole input set");
  learn_cmd->add_option("--out", la.out, "Output JSON path (default stdout)");

  ComplexityArgs ca;
  auto* complexity = app.add_subcommand("complexity", "Evaluate the sample-complexity bound");
  complexity->add_option("--n", ca.n, "Qubit count for the CNOT defaults")->check(CLI::Range(2, 1 << 20));
  complexity->add_option("--epsilon", ca.p.epsilon, "Error");
  complexity->add_option("--delta", ca.p.delta, "Failure probability");
  complexity->add_option("--alpha", ca.p.alpha, "Lower label threshold");
  complexity->add_option("--beta", ca.p.beta, "Upper label threshold");
  complexity->add_option("--d", ca.d, "Locality (default 2)");
  complexity->add_option("--depth", ca.depth, "Depth (default ceil(log2 n))");
  complexity->add_option("--gates", ca.gates, "Gate count (default n^2)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time brute-force search on random realizable sample sets");
  bench->add_option("--n", ba.n, "Qubits")->check(CLI::Range(1, 8));
  bench->add_option("--samples", ba.samples, "Samples per trial");
  bench->add_option("--trials", ba.trials, "Number of trials");
  bench->add_option("--workers", ba.workers, "Worker threads")->check(CLI::Range(1, 256));
  bench->add_option("--max-n", ba.max_n, "Largest qubit count brute force accepts")->check(CLI::Range(1, 8));
  bench->add_option("--seed", ba.seed, "Seed")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    if (reduce->parsed() && ra.cnf.empty() && ra.formula.empty())
      throw CLI::RequiredError("reduce needs --cnf or --formula");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  Context ctx{out, err, {}, Clock::now(), report_path};
  try {
    int code = kError;
    if (reduce->parsed()) {
      ctx.report.command = "reduce";
      ctx.report.seed = ra.seed;
      code = cmd_reduce(ra, ctx);
    } else if (solve->parsed()) {
      ctx.report.command = "solve " + sa.strategy;
      code = cmd_solve(sa, ctx);
    } else if (verify->parsed()) {
      ctx.report.command = "verify";
      code = cmd_verify(va, ctx);
    } else if (learn_cmd->parsed()) {
      ctx.report.command = "learn " + la.mode;
      ctx.report.seed = la.seed;
      code = cmd_learn(la, ctx);
    } else if (complexity->parsed()) {
      ctx.report.command = "complexity";
      code = cmd_complexity(ca, ctx);
    } else if (bench->parsed()) {
      ctx.report.command = "bench";
      ctx.report.seed = ba.seed;
      code = cmd_bench(ba, ctx);
    }
    ctx.finish();
    return code;
  } catch (const EnumerationLimit& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace cnotpac::cli
