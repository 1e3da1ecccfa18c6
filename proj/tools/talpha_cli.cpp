#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "talpha/balsep.hpp"
#include "talpha/gen.hpp"
#include "talpha/io.hpp"
#include "talpha/mwis.hpp"
#include "talpha/structures.hpp"
#include "talpha/treedec.hpp"

using namespace talpha;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int budget_ms = 0;
  int guard_n = 0;
};

struct Usage : Error {
  using Error::Error;
};

// Collapses repeated checks of one claim into a single entry.
Json summarize(const Transcript& t) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, const ClaimCheck*>> seen;
  for (const auto& c : t) {
    auto [it, fresh] = seen.try_emplace(c.id, 0, nullptr);
    if (fresh) order.push_back(c.id);
    ++it->second.first;
    if (!c.ok && !it->second.second) it->second.second = &c;
  }
  Json out = Json::array();
  for (const auto& id : order) {
    const auto& [count, failed] = seen[id];
    out.push_back({{"claim", id}, {"ok", failed == nullptr}, {"checks", count}, {"detail", failed ? failed->detail : ""}});
  }
  return out;
}

class Report {
 public:
  Report(std::string command, const Globals& g) : j_{{"command", std::move(command)}} {
    j_["inputs"] = Json::object();
    j_["seed"] = g.seed;
    j_["budgets"] = {{"budget_ms", g.budget_ms > 0 ? Json(g.budget_ms) : Json(nullptr)},
                     {"guard_n", g.guard_n > 0 ? Json(g.guard_n) : Json(nullptr)}};
  }
  void input(const std::string& key, const std::string& value) { j_["inputs"][key] = value; }
  void output(const std::string& key, const std::string& value) { j_["outputs"][key] = value; }
  // Claims are reported once, in the summary, not inside the result.
  void result(Json r) {
    if (r.is_object()) r.erase("assertions");
    j_["result"] = std::move(r);
  }
  void assertions(const Transcript& t) { t_.insert(t_.end(), t.begin(), t.end()); }

  int emit(std::ostream& out) {
    const Json s = summarize(t_);
    bool ok = true;
    for (const auto& c : s) ok = ok && c["ok"].get<bool>();
    j_["assertions"] = s;
    j_["ok"] = ok;
    out << j_.dump(2) << '\n';
    return ok ? 0 : 1;
  }

 private:
  Json j_;
  Transcript t_;
};

Budget budget_of(const Globals& g) {
  Budget b;
  if (g.budget_ms > 0) b.time = std::chrono::milliseconds(g.budget_ms);
  return b;
}

// Guard for exact oracles; raising it is allowed but flagged.
int oracle_guard(const Globals& g, int fallback) {
  if (g.guard_n <= 0) return fallback;
  if (g.guard_n > fallback)
    std::cerr << "warning: --guard-n " << g.guard_n << " raises the oracle guard above " << fallback
              << " (unsound-if-raised: runtime may explode)\n";
  return g.guard_n;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  body(f);
}

std::optional<Graph> generate(const std::string& kind, int n, double density, std::uint64_t seed) {
  if (kind == "random") return gen_random_class_c(n, density, seed);
  if (kind == "mixed") return gen_class_c_mixed(n, seed);
  if (kind == "nc") return grow_class_c_nc(n, seed);
  if (kind == "wheel-free") return gen_wheel_free(n, seed);
  throw Usage("unknown generator " + kind + " (random, mixed, nc, wheel-free)");
}

double edge_density(const Graph& g) {
  const double pairs = g.n() * (g.n() - 1) / 2.0;
  return pairs > 0 ? g.m() / pairs : 0.0;
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

StructureKind parse_kind(const std::string& name) {
  auto k = parse_structure_kind(name);
  if (!k) throw Usage("unknown structure " + name);
  return *k;
}

Json detection_json(const Graph& g, const Detection& d) {
  return {{"status", to_string(d.status)}, {"witness", d.witness ? to_json(g, *d.witness) : Json(nullptr)}};
}

struct BenchRow {
  std::uint64_t seed = 0;
  int n = 0, m = 0, atoms = 0, separator_atoms = 0;
  int independence = 0, cover = 0;
  bool cover_exact = true;
  int ta_exact = -1;
  double decompose_ms = 0, mwis_ms = 0;
  std::string error;
};

BenchRow bench_one(std::uint64_t seed, int n, int ta_guard) {
  BenchRow row;
  row.seed = seed;
  row.n = n;
  const auto g = gen_class_c_mixed(n, seed);
  if (!g) {
    row.error = "generation failed";
    return row;
  }
  row.m = g->m();
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const PipelineResult r = ta_pipeline(*g);
    const auto t1 = std::chrono::steady_clock::now();
    mwis_td(*g, std::vector<Rational>(static_cast<std::size_t>(n), 1), r.td);
    const auto t2 = std::chrono::steady_clock::now();
    row.atoms = static_cast<int>(r.atoms.size());
    for (const auto& a : r.atoms) row.separator_atoms += a.route == "separators";
    row.independence = r.stats.independence;
    row.cover = r.stats.cover;
    row.cover_exact = r.stats.cover_exact;
    row.decompose_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.mwis_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    if (n <= ta_guard) row.ta_exact = ta_exact_small(*g, ta_guard);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-independence decompositions, balanced separators and MWIS for graphs in class C"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("TALPHA_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "TALPHA_SEED must be a nonnegative integer\n";
      return 2;
    }
  }
  app.add_option("--seed", g.seed, "Seed for generators (default: TALPHA_SEED or 0)");
  app.add_option("--budget-ms", g.budget_ms, "Time budget per detector call in milliseconds")->check(CLI::NonNegativeNumber);
  app.add_option("--guard-n", g.guard_n, "Size guard for exact oracles")->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph: a named family or a seeded class-C instance");
  std::string family, gen_out, corpus_dir;
  std::vector<int> params;
  int gen_n = 10, count = 10, n_min = 6, n_max = 20;
  double density = 0.3;
  gen->add_option("family", family,
                  "hole, clique, theta, pyramid, prism, wheel, mycielski, ta_tc_gap, random, mixed, nc, wheel-free, corpus")
      ->required();
  gen->add_option("params", params, "Family parameters (wheel: n then spokes, 1-based)");
  gen->add_option("-o,--out", gen_out, "Write the .gr file here instead of stdout");
  gen->add_option("--n", gen_n, "Vertex count for seeded generators")->check(CLI::NonNegativeNumber);
  gen->add_option("--density", density, "Edge density for the random generator")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--count", count, "Corpus size")->check(CLI::PositiveNumber);
  gen->add_option("--n-min", n_min, "Corpus minimum n")->check(CLI::PositiveNumber);
  gen->add_option("--n-max", n_max, "Corpus maximum n")->check(CLI::PositiveNumber);
  gen->add_option("--out-dir", corpus_dir, "Corpus directory (.gr files and manifest.jsonl)");
  std::string corpus_kind = "mixed";
  gen->add_option("--kind", corpus_kind, "Corpus generator: random, mixed, nc, wheel-free");

  // check
  auto* check = app.add_subcommand("check", "Class membership with a verified witness");
  std::string graph_path;
  check->add_option("graph", graph_path, ".gr file")->required();

  // structure
  auto* structure = app.add_subcommand("structure", "Search for one forbidden structure");
  std::string kind;
  structure->add_option("kind", kind, "c4, diamond, theta, pyramid, prism, wheel, even-wheel, proper-wheel, 3pc-or-wheel")
      ->required();
  structure->add_option("graph", graph_path, ".gr file")->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Tree decomposition with small bag independence");
  std::string td_out;
  bool trace = false;
  decompose->add_option("graph", graph_path, ".gr file")->required();
  decompose->add_option("--td-out", td_out, "Write the decomposition (.td)");
  decompose->add_flag("--trace", trace, "Dump hub divisions and central-bag separators of non-trivial atoms");

  // validate
  auto* validate = app.add_subcommand("validate", "Check a decomposition and report its statistics");
  std::string td_path;
  validate->add_option("graph", graph_path, ".gr file")->required();
  validate->add_option("td", td_path, ".td file")->required();

  // mwis
  auto* mwis = app.add_subcommand("mwis", "Maximum weight independent set");
  std::string weights_path;
  bool with_oracle = false;
  mwis->add_option("graph", graph_path, ".gr file")->required();
  mwis->add_option("weights", weights_path, ".w file")->required();
  mwis->add_option("--td", td_path, "Use this decomposition instead of computing one");
  mwis->add_flag("--oracle", with_oracle, "Also solve by brute force and compare");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Balanced separator for a weight function");
  oracle->add_option("graph", graph_path, ".gr file")->required();
  oracle->add_option("weights", weights_path, ".w file (normalized to total 1)")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Corpus sweep, CSV on stdout");
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string bench_out;
  bench->add_option("--count", count, "Instances")->check(CLI::PositiveNumber);
  bench->add_option("--n-min", n_min, "Minimum n")->check(CLI::PositiveNumber);
  bench->add_option("--n-max", n_max, "Maximum n")->check(CLI::PositiveNumber);
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("-o,--out", bench_out, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      Graph out;
      if (family == "corpus") {
        if (corpus_dir.empty()) throw Usage("gen corpus needs --out-dir");
        if (n_min > n_max) throw Usage("--n-min exceeds --n-max");
        std::filesystem::create_directories(corpus_dir);
        std::ofstream manifest(std::filesystem::path(corpus_dir) / "manifest.jsonl");
        for (int i = 0; i < count; ++i) {
          const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(i);
          const int n = n_min + static_cast<int>(seed % static_cast<std::uint64_t>(n_max - n_min + 1));
          const auto graph = generate(corpus_kind, n, density, seed);
          Json line{{"seed", seed}, {"n", n}};
          line["density"] = corpus_kind == "random" ? fixed(density, 4) : (graph ? fixed(edge_density(*graph), 4) : "");
          if (!graph) {
            line["verdict"] = "none";
            line["path"] = nullptr;
          } else {
            const std::string name = corpus_kind + "-" + std::to_string(seed) + ".gr";
            write_file((std::filesystem::path(corpus_dir) / name).string(), [&](std::ostream& f) { write_graph(f, *graph); });
            line["verdict"] = to_string(check_class(*graph, budget_of(g)).c);
            line["path"] = name;
          }
          manifest << line.dump() << '\n';
        }
        return 0;
      }
      if (family == "random" || family == "mixed" || family == "nc" || family == "wheel-free") {
        const auto graph = generate(family, gen_n, density, g.seed);
        if (!graph) {
          std::cerr << "no " << family << " graph on " << gen_n << " vertices for seed " << g.seed << '\n';
          return 3;
        }
        out = *graph;
      } else {
        try {
          out = gen_family(family, params);
        } catch (const BadParams& e) {
          throw Usage(e.what());
        }
      }
      if (gen_out.empty())
        write_graph(std::cout, out);
      else
        write_file(gen_out, [&](std::ostream& f) { write_graph(f, out); });
      return 0;
    }

    if (bench->parsed()) {
      if (n_min > n_max) throw Usage("--n-min exceeds --n-max");
      const int ta_guard = oracle_guard(g, 10);
      std::vector<BenchRow> rows(static_cast<std::size_t>(count));
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < std::min(threads, count); ++t)
        pool.emplace_back([&] {
          for (int i = next++; i < count; i = next++) {
            const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(i);
            const int n = n_min + static_cast<int>(seed % static_cast<std::uint64_t>(n_max - n_min + 1));
            rows[i] = bench_one(seed, n, ta_guard);
          }
        });
      for (auto& t : pool) t.join();
      std::ostringstream csv;
      csv << "seed,n,m,atoms,separator_atoms,independence,cover,cover_exact,ta_exact,decompose_ms,mwis_ms,error\n";
      for (const auto& r : rows)
        csv << r.seed << ',' << r.n << ',' << r.m << ',' << r.atoms << ',' << r.separator_atoms << ','
            << r.independence << ',' << r.cover << ',' << (r.cover_exact ? 1 : 0) << ','
            << (r.ta_exact >= 0 ? std::to_string(r.ta_exact) : "") << ',' << fixed(r.decompose_ms, 3) << ','
            << fixed(r.mwis_ms, 3) << ',' << '"' << r.error << '"' << '\n';
      if (bench_out.empty())
        std::cout << csv.str();
      else
        write_file(bench_out, [&](std::ostream& f) { f << csv.str(); });
      return 0;
    }

    const Graph graph = load_graph(graph_path);

    if (check->parsed()) {
      Report r("check", g);
      r.input("graph", graph_path);
      const ClassReport c = check_class(graph, budget_of(g));
      r.result(to_json(c, graph));
      return r.emit(std::cout);
    }

    if (structure->parsed()) {
      Report r("structure", g);
      r.input("graph", graph_path);
      r.input("kind", kind);
      const Budget b = budget_of(g);
      Detection d;
      if (kind == "wheel")
        d = find_wheel(graph, WheelFilter::any, b);
      else if (kind == "even-wheel")
        d = find_wheel(graph, WheelFilter::even, b);
      else if (kind == "proper-wheel")
        d = find_wheel(graph, WheelFilter::proper, b);
      else if (kind == "3pc-or-wheel")
        d = find_3pc_or_wheel(graph, b);
      else
        d = find_structure(graph, parse_kind(kind), b);
      r.result(detection_json(graph, d));
      return r.emit(std::cout);
    }

    if (decompose->parsed()) {
      Report r("decompose", g);
      r.input("graph", graph_path);
      try {
        const PipelineResult p = ta_pipeline(graph);
        Json result = to_json(p);
        if (trace) {
          Json dumps = Json::array();
          for (const auto& a : p.atoms) {
            if (a.route != "separators") continue;
            const InducedSubgraph sub = graph.induced(a.vertices);
            const WeightFunction w = WeightFunction::uniform(sub.graph.n());
            Json entry{{"atom", to_json(a.vertices)}, {"ids", "local: vertex i is the i-th atom vertex"}};
            try {
              const HubDivision hd = hub_division(sub.graph, w);
              entry["hub_division"] = to_json(hd);
              entry["central_bag_separator"] = to_json(balanced_separator_central_bag(sub.graph, w, hd));
            } catch (const AssertionFailed&) {
              throw;
            } catch (const Error& e) {
              entry["skipped"] = e.what();
            }
            dumps.push_back(entry);
          }
          result["trace"] = dumps;
        }
        if (!td_out.empty()) {
          write_file(td_out, [&](std::ostream& f) { write_td(f, p.td); });
          r.output("td", td_out);
        }
        r.result(result);
        r.assertions(p.assertions);
      } catch (const AssertionFailed& e) {
        r.result({{"error", e.what()}});
        r.assertions(e.transcript());
      }
      return r.emit(std::cout);
    }

    if (validate->parsed()) {
      Report r("validate", g);
      r.input("graph", graph_path);
      r.input("td", td_path);
      const TreeDecomposition td = load_td(td_path);
      if (td.n != graph.n()) throw InvalidInput("decomposition is for " + std::to_string(td.n) + " vertices");
      const TdValidation v = validate_td(graph, td);
      Json violations = Json::array();
      for (const auto& x : v.violations) violations.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
      Json result{{"valid", v.ok}, {"violations", violations}};
      if (v.ok) result["stats"] = to_json(td_stats(graph, td));
      r.result(result);
      Transcript t;
      t.push_back({"decomposition-valid", v.ok, v.ok ? "" : v.violations.front().detail});
      r.assertions(t);
      return r.emit(std::cout);
    }

    if (mwis->parsed()) {
      Report r("mwis", g);
      r.input("graph", graph_path);
      r.input("weights", weights_path);
      const std::vector<Rational> w = load_weights(weights_path, graph.n());
      TreeDecomposition td;
      if (!td_path.empty()) {
        r.input("td", td_path);
        td = load_td(td_path);
        if (td.n != graph.n()) throw InvalidInput("decomposition is for " + std::to_string(td.n) + " vertices");
      } else {
        const PipelineResult p = ta_pipeline(graph);
        r.assertions(p.assertions);
        td = p.td;
      }
      const MwisResult dp = mwis_td(graph, w, td);
      Json result{{"td_dp", to_json(dp)}};
      if (with_oracle) {
        const MwisResult bf = mwis_bruteforce(graph, w, oracle_guard(g, 24));
        result["brute_force"] = to_json(bf);
        Transcript t;
        t.push_back({"mwis-oracle-agreement", bf.value == dp.value,
                     bf.value == dp.value ? "" : "brute force " + bf.value.str() + ", decomposition " + dp.value.str()});
        r.assertions(t);
      }
      r.result(result);
      return r.emit(std::cout);
    }

    if (oracle->parsed()) {
      Report r("oracle", g);
      r.input("graph", graph_path);
      r.input("weights", weights_path);
      std::vector<Rational> w = load_weights(weights_path, graph.n());
      Rational total = 0;
      for (const auto& x : w) total += x;
      if (total == 0) throw InvalidInput("weights sum to 0");
      for (auto& x : w) x /= total;
      OracleLog log;
      try {
        const BalancedSeparator s = weighted_separator_oracle(graph, WeightFunction(w), &log);
        Json result = to_json(s);
        result["normalized_by"] = to_json(total);
        result["findings"] = log.findings;
        r.result(result);
        r.assertions(s.assertions);
      } catch (const AssertionFailed& e) {
        r.result({{"error", e.what()}});
        r.assertions(e.transcript());
      }
      return r.emit(std::cout);
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const AssertionFailed& e) {
    Report r("error", g);
    r.result({{"error", e.what()}});
    r.assertions(e.transcript());
    r.emit(std::cout);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
