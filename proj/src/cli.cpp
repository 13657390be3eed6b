#include "hypersimp/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "hypersimp/ingest.hpp"
#include "hypersimp/io.hpp"
#include "hypersimp/layout.hpp"
#include "hypersimp/planarity.hpp"
#include "hypersimp/report.hpp"
#include "hypersimp/simplify.hpp"

namespace hypersimp {

namespace {

struct InputOptions {
  std::string path;
  std::string format = "json";
  std::int64_t min_contact_seconds = 40;
  unsigned jobs = 1;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.path, "Input file, or - for stdin")->required();
  cmd->add_option("-f,--format", in.format, "json, edgelist, contacts-csv or friendship-csv")
      ->check(CLI::IsMember({"json", "edgelist", "contacts-csv", "friendship-csv"}))
      ->capture_default_str();
  cmd->add_option("--min-contact-seconds", in.min_contact_seconds,
                  "Contact ingestion: pairs need strictly more accumulated seconds than this")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--jobs", in.jobs, "Worker threads for per-block work")->check(CLI::PositiveNumber)->capture_default_str();
}

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
  } else {
    write_file(path, bytes);
    spdlog::info("wrote {}", path);
  }
}

void configure_logging() {
  static bool done = false;
  if (done) return;
  done = true;
  auto logger = std::make_shared<spdlog::logger>("hypersimp", std::make_shared<spdlog::sinks::stderr_sink_mt>());
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("HYPERSIMP_LOG");
  spdlog::set_level(env != nullptr ? spdlog::level::from_str(env) : spdlog::level::warn);
}

SimplifyTarget parse_targets(const std::vector<std::string>& names) {
  SimplifyTarget t{false, false, std::nullopt};
  for (const auto& n : names) {
    if (n == "planar") {
      t.planar = true;
    } else if (n == "eta") {
      t.eta = true;
    } else if (n.rfind("ops:", 0) == 0) {
      std::size_t used = 0;
      const std::string digits = n.substr(4);
      unsigned long long v = 0;
      try {
        v = std::stoull(digits, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (digits.empty() || used != digits.size()) throw CLI::ValidationError("--target", "bad op budget '" + n + "'");
      t.op_budget = static_cast<std::size_t>(v);
    } else {
      throw CLI::ValidationError("--target", "unknown target '" + n + "' (planar, eta or ops:N)");
    }
  }
  return t;
}

}  // namespace

Hypergraph load_input(const std::string& path, const std::string& format, std::int64_t min_contact_seconds) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    text = read_file(path);
  }
  if (format == "contacts-csv") return ingest_contacts(parse_contacts(text), min_contact_seconds);
  if (format == "friendship-csv") return ingest_friendship(parse_friendships(text));
  return parse_hypergraph(text, parse_format(format));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"Hypergraph decomposition, forbidden-pattern detection and simplification"};
  app.name("hypersimp");
  app.require_subcommand(1);

  InputOptions in;
  std::string out_path;
  std::string out_format = "json";
  std::uint64_t seed = 42;

  auto* decompose = app.add_subcommand("decompose", "Blocks, bridges, branches and cycle bases");
  add_input(decompose, in);
  decompose->add_option("-o,--out", out_path, "Report path (default stdout)");

  auto* forbidden = app.add_subcommand("forbidden", "Forbidden clusters and sub-hypergraphs");
  add_input(forbidden, in);
  forbidden->add_option("-o,--out", out_path, "Report path (default stdout)");

  auto* planarity = app.add_subcommand("planarity", "Zykov and convex-polygon planarity");
  add_input(planarity, in);
  planarity->add_option("-o,--out", out_path, "Report path (default stdout)");
  planarity->add_option("--seed", seed, "Seed for crossing search permutations")->capture_default_str();

  PriorityParams params;
  std::vector<std::string> targets{"planar"};
  std::string log_path, svg_path;
  bool full_recompute = false;
  std::size_t iterations = 300;
  auto* simp = app.add_subcommand("simplify", "Simplify toward a target");
  add_input(simp, in);
  simp->add_option("--alpha", params.alpha, "Weight of the degree-percentile term")->check(CLI::NonNegativeNumber)->capture_default_str();
  simp->add_option("--beta", params.beta, "Weight of the adjacency term")->check(CLI::NonNegativeNumber)->capture_default_str();
  simp->add_option("--gamma", params.gamma, "Weight of the betweenness term")->check(CLI::NonNegativeNumber)->capture_default_str();
  simp->add_option("--delta", params.delta, "Weight of the topology term")->check(CLI::NonNegativeNumber)->capture_default_str();
  simp->add_option("--eta-threshold", params.eta_threshold, "Block is done once its entanglement is <= this")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  simp->add_option("--prune-threshold", params.prune_threshold, "Stop pruning below this priority (default: no pruning)");
  simp->add_option("--target", targets, "planar, eta or ops:N; repeat to combine")->capture_default_str();
  simp->add_option("--seed", seed, "Seed for crossing search and layout")->capture_default_str();
  simp->add_flag("--full-recompute", full_recompute, "Recompute the cycle basis after every op");
  simp->add_option("-o,--out", out_path, "Simplified hypergraph path (default stdout)");
  simp->add_option("--out-format", out_format, "json or edgelist")->check(CLI::IsMember({"json", "edgelist"}))->capture_default_str();
  simp->add_option("--log", log_path, "Op log path");
  simp->add_option("--svg", svg_path, "Also render the result here");
  simp->add_option("--iterations", iterations, "Layout iterations for --svg")->capture_default_str();

  std::string positions_path, layout_out;
  double width = 800, height = 800;
  auto* render = app.add_subcommand("render", "Polygon rendering as SVG");
  add_input(render, in);
  render->add_option("--positions", positions_path, "Layout JSON {id: [x, y]}; force layout when absent");
  render->add_option("--log", log_path, "Op log whose cut annotations are drawn as dashed lines");
  render->add_option("--svg,-o,--out", svg_path, "SVG path (default stdout)");
  render->add_option("--layout-out", layout_out, "Write the layout used here");
  render->add_option("--seed", seed, "Layout seed")->capture_default_str();
  render->add_option("--iterations", iterations, "Layout iterations")->capture_default_str();
  render->add_option("--width", width, "Canvas width")->check(CLI::PositiveNumber)->capture_default_str();
  render->add_option("--height", height, "Canvas height")->check(CLI::PositiveNumber)->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Contact or friendship CSV to a clique hypergraph");
  add_input(ingest, in);
  ingest->add_option("-o,--out", out_path, "Hypergraph path (default stdout)");
  ingest->add_option("--out-format", out_format, "json or edgelist")->check(CLI::IsMember({"json", "edgelist"}))->capture_default_str();

  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Sizes, Betti numbers and entanglement");
  add_input(stats, in);
  stats->add_flag("--json", stats_json, "Print the JSON report instead of the table");
  stats->add_option("-o,--out", out_path, "Output path (default stdout)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (ingest->parsed() && in.format != "contacts-csv" && in.format != "friendship-csv") {
      throw CLI::ValidationError("--format", "ingest reads contacts-csv or friendship-csv");
    }
    const Hypergraph h = load_input(in.path, in.format, in.min_contact_seconds);
    spdlog::info("loaded {} vertices, {} hyperedges", h.vertex_count(), h.hyperedge_count());
    DecompositionOptions dopts;
    dopts.jobs = in.jobs;

    if (decompose->parsed()) {
      auto g = build_bipartite(h);
      emit(out_path, decomposition_report(g, topological_decomposition(g, dopts)).dump(2) + "\n", out);
    } else if (forbidden->parsed()) {
      auto g = build_bipartite(h);
      auto d = topological_decomposition(g, dopts);
      emit(out_path, forbidden_report(g, d, analyze_forbidden(g, d)).dump(2) + "\n", out);
    } else if (planarity->parsed()) {
      emit(out_path, planarity_report(h, seed).dump(2) + "\n", out);
    } else if (simp->parsed()) {
      params.target = parse_targets(targets);
      params.seed = seed;
      params.jobs = in.jobs;
      params.full_recompute = full_recompute;
      params.validate();
      auto result = simplify(h, params);
      spdlog::info("applied {} ops", result.log.ops.size());
      emit(out_path, serialize_hypergraph(result.hypergraph, parse_format(out_format)), out);
      if (!log_path.empty()) emit(log_path, oplog_to_json(result.log).dump(2) + "\n", out);
      if (!svg_path.empty()) {
        auto layout = force_layout(result.hypergraph, seed, iterations);
        auto ann = live_annotations(result.hypergraph, result.log);
        emit(svg_path, render_svg(result.hypergraph, layout, {}, ann), out);
      }
    } else if (render->parsed()) {
      Layout layout = positions_path.empty() ? force_layout(h, seed, iterations)
                                             : layout_from_json(read_file(positions_path));
      std::vector<CutAnnotation> ann;
      if (!log_path.empty()) ann = live_annotations(h, oplog_from_json(Json::parse(read_file(log_path))));
      RenderSpec spec;
      spec.width = width;
      spec.height = height;
      if (!layout_out.empty()) emit(layout_out, layout_to_json(layout), out);
      emit(svg_path, render_svg(h, layout, spec, ann), out);
    } else if (ingest->parsed()) {
      emit(out_path, serialize_hypergraph(h, parse_format(out_format)), out);
    } else if (stats->parsed()) {
      auto g = build_bipartite(h);
      auto d = topological_decomposition(g, dopts);
      emit(out_path, stats_json ? stats_report(h, d).dump(2) + "\n" : stats_text(h, d), out);
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: invalid hypergraph: " << e.what() << "\n";
    return 1;
  } catch (const RenderError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace hypersimp
