// Command-line driver.
//
// Subcommands:
//   validate           well-formedness report for a diagram file
//   check-recollement  axiom suite for a chosen closed subposet
//   decompose          recursive strata decomposition with provenance log
//   k0-report          K_0 splitting verification
//   gen                seeded random diagram on a given shape
//   ingest             stratified simplicial complex -> shape skeleton
//
// Exit codes: 0 all checks pass; 1 a mathematical check failed (the report
// names witnesses); 2 input, parse or precondition error.
//
// One JSON in, one JSON out per command.  A fixed seed makes output bytes
// reproducible.  STRATA_WORKERS bounds the sample fan-out (default 1).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

#include "strata/checks.hpp"
#include "strata/json_io.hpp"

namespace {

using namespace strata;

struct RunConfig {
  std::string input;
  std::string output;
  std::string field = "rationals";  // "rationals" or a prime
  std::uint64_t seed = 1;
  int samples = 100;
  std::string closed = "minimal";
  int verbosity = 0;
};

std::uint64_t parse_prime_or_zero(const std::string& field) {
  if (field == "rationals" || field == "Q" || field == "q") return 0;
  char* end = nullptr;
  unsigned long long p = std::strtoull(field.c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || p < 2)
    throw invalid_input("--field expects 'rationals' or a prime number");
  return p;
}

Subposet parse_closed(const FinPoset& p, const std::string& text) {
  std::vector<std::string> ids;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  Subposet s = Subposet::of_ids(p, ids);
  if (!is_closed(p, s))
    throw invalid_input("--closed set is not downward-closed in the stratifying poset");
  return s;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (!cfg.output.empty())
    write_file(cfg.output, text + "\n");
  else
    std::cout << text << "\n";
  if (cfg.verbosity > 0)
    std::cerr << "wrote " << (cfg.output.empty() ? "stdout" : cfg.output) << " ("
              << text.size() << " bytes)\n";
}

int worker_count() {
  const char* env = std::getenv("STRATA_WORKERS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

// ---------------------------------------------------------------------------

template <class K>
int run_validate(const RunConfig& cfg) {
  json j = load_json_file(cfg.input);
  RawDiagram<K> raw = raw_diagram_from_json<K>(j);
  ValidationReport rep = validate_diagram(raw);
  emit(cfg, to_json_string(rep));
  return rep.ok() ? 0 : 1;
}

template <class K>
int run_check_recollement(const RunConfig& cfg, std::uint64_t prime) {
  json j = load_json_file(cfg.input);
  StratDiagram<K> f = diagram_from_json<K>(j);
  const FinPoset& p = f.strat().target();
  Subposet z = (cfg.closed == "minimal") ? minimal_elements(p) : parse_closed(p, cfg.closed);
  RecollementCtx<K> ctx(f.shape(), f.strat(), z);

  int workers = worker_count();
  SuiteReport rep;
  rep.suite = "recollement-axioms";
  Rng root(cfg.seed);
  if (workers <= 1) {
    rep = check_recollement_axioms(ctx, cfg.samples, cfg.seed);
  } else {
    // one single-sample report per index, merged in order
    std::vector<SuiteReport> shards(cfg.samples);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, prime] {
        std::optional<FpScope> scope;
        if (prime) scope.emplace(prime);
        for (int i = next.fetch_add(1); i < cfg.samples; i = next.fetch_add(1)) {
          Rng rng = root.fork(i);
          StratDiagram<K> g = random_diagram<K>(rng, ctx.shape(), ctx.strat(), {});
          shards[i].suite = rep.suite;
          check_axioms_on_sample(ctx, g, rng, shards[i], i);
          check_triangles_on_sample(ctx, g, shards[i], i);
          check_lan_formula_on_sample(ctx, g, shards[i], i);
        }
      });
    for (auto& t : pool) t.join();
    for (const auto& shard : shards)
      for (const auto& c : shard.checks) {
        CheckResult& into = rep.check(c.name);
        into.samples += c.samples;
        into.failures.insert(into.failures.end(), c.failures.begin(), c.failures.end());
      }
  }
  // the input diagram itself also goes through the triangle suite
  check_triangles_on_sample(ctx, f, rep, -1);
  emit(cfg, to_json_string(rep));
  return rep.pass() ? 0 : 1;
}

template <class K>
ZChooser chooser_for(const RunConfig& cfg, const StratDiagram<K>& f) {
  if (cfg.closed == "minimal") return choose_minimal;
  Subposet z0 = parse_closed(f.strat().target(), cfg.closed);
  std::vector<std::string> ids;
  for (int m : z0.members) ids.push_back(f.strat().target().id(m));
  bool first = true;
  return [ids, first](const FinPoset& q) mutable -> Subposet {
    if (first) {
      first = false;
      std::vector<std::string> present;
      for (const auto& id : ids)
        if (q.contains(id)) present.push_back(id);
      return Subposet::of_ids(q, present);
    }
    return minimal_elements(q);
  };
}

template <class K>
int run_decompose(const RunConfig& cfg) {
  json j = load_json_file(cfg.input);
  StratDiagram<K> f = diagram_from_json<K>(j);
  Decomposition<K> dec = split_decompose(f, chooser_for(cfg, f));
  json out;
  out["depth"] = dec.depth;
  json log = json::array();
  bool tri_ok = true;
  for (const auto& step : dec.log) {
    json js;
    js["closed"] = step.z_ids;
    js["open"] = step.u_ids;
    js["t3"] = triangle_report_to_json(step.t3);
    tri_ok = tri_ok && step.t3.pass();
    log.push_back(std::move(js));
  }
  out["log"] = std::move(log);
  json pieces;
  const FinPoset& p = f.strat().target();
  for (int q = 0; q < p.size(); ++q) pieces[p.id(q)] = diagram_to_json(dec.pieces[q]);
  out["pieces"] = std::move(pieces);
  out["pass"] = tri_ok;
  emit(cfg, out.dump(2));
  return tri_ok ? 0 : 1;
}

template <class K>
int run_k0_report(const RunConfig& cfg) {
  json j = load_json_file(cfg.input);
  StratDiagram<K> f = diagram_from_json<K>(j);
  bool default_order = cfg.closed == "minimal";
  SplitReport rep =
      verify_splitting(f, chooser_for(cfg, f), /*expect_dim_depth=*/default_order);
  emit(cfg, split_report_to_json(rep).dump(2));
  return rep.pass() ? 0 : 1;
}

template <class K>
int run_gen(const RunConfig& cfg) {
  json j = load_json_file(cfg.input);
  RawDiagram<K> raw = raw_diagram_from_json<K>(j);  // complexes/maps optional
  Rng rng(cfg.seed);
  StratDiagram<K> f = random_diagram<K>(rng, raw.shape, raw.strat, {});
  emit(cfg, diagram_to_json(f).dump(2));
  return 0;
}

int run_ingest(const RunConfig& cfg) {
  json j = load_json_file(cfg.input);
  StratSimplicialComplex k = simplicial_from_json(j);
  FacePosetModel m = face_poset(k);
  json out;
  out["poset"] = poset_to_json(m.shape);
  json strat;
  strat["poset"] = poset_to_json(m.strat.target());
  json vals;
  for (int c = 0; c < m.shape.size(); ++c)
    vals[m.shape.id(c)] = m.strat.target().id(m.strat.apply(c));
  strat["values"] = std::move(vals);
  out["strat"] = std::move(strat);
  json fibers;
  for (int p = 0; p < m.strat.target().size(); ++p) {
    FiberDiagnostics d = stratum_fiber(m, p);
    json fj;
    fj["size"] = d.fiber.size();
    fj["nerve_euler"] = d.nerve_euler;
    fj["components"] = d.components;
    json members = json::array();
    for (int c : d.fiber.members) members.push_back(m.shape.id(c));
    fj["members"] = std::move(members);
    fibers[m.strat.target().id(p)] = std::move(fj);
  }
  out["fibers"] = std::move(fibers);
  emit(cfg, out.dump(2));
  return 0;
}

template <class K>
int dispatch(const std::string& cmd, const RunConfig& cfg, std::uint64_t prime) {
  if (cmd == "validate") return run_validate<K>(cfg);
  if (cmd == "check-recollement") return run_check_recollement<K>(cfg, prime);
  if (cmd == "decompose") return run_decompose<K>(cfg);
  if (cmd == "k0-report") return run_k0_report<K>(cfg);
  if (cmd == "gen") return run_gen<K>(cfg);
  throw invalid_input("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact recollement engine for constructible complexes on finite posets"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<CLI::App*> subs;
  for (const char* name : {"validate", "check-recollement", "decompose", "k0-report",
                           "gen", "ingest"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", cfg.input, "input JSON file")->required();
    sub->add_option("--output", cfg.output, "output JSON file (default: stdout)");
    sub->add_option("--field", cfg.field, "coefficients: 'rationals' or a prime p");
    sub->add_option("--seed", cfg.seed, "seed for all randomness");
    sub->add_option("--samples", cfg.samples, "number of random samples");
    sub->add_option("--closed", cfg.closed,
                    "closed subposet of P: comma-separated ids or 'minimal'");
    sub->add_flag("-v,--verbose", cfg.verbosity, "more logging");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  try {
    if (cmd == "ingest") return run_ingest(cfg);
    std::uint64_t prime = parse_prime_or_zero(cfg.field);
    if (prime == 0) return dispatch<strata::Rat>(cmd, cfg, 0);
    strata::FpScope scope(prime);
    return dispatch<strata::Fp>(cmd, cfg, prime);
  } catch (const strata::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
