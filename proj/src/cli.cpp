#include "semimono/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semimono/families.hpp"
#include "semimono/lab.hpp"
#include "semimono/monotonicity.hpp"
#include "semimono/report.hpp"
#include "semimono/version.hpp"

namespace semimono {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Format parse_format(const std::string& name) {
  auto format = format_from_name(name);
  if (!format) throw Error("unknown format '" + name + "' (expected json, csv or text)");
  return *format;
}

Kind parse_kind(const std::string& name) {
  auto kind = kind_from_name(name);
  if (!kind) throw Error("unknown centrality kind '" + name + "'");
  return *kind;
}

Vertex resolve_label(const Graph& g, const std::string& label) {
  auto v = g.find_label(label);
  if (!v) throw Error("unknown vertex label '" + label + "'");
  return *v;
}

// Emits through --output when given, else to the session stream.
void emit(const ReportEnvelope& env, Format format, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    write_report(env, format, out);
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + output_path + "'");
  write_report(env, format, file);
}

std::vector<std::string> echo_args(int argc, const char* const* argv) {
  std::vector<std::string> echo;
  echo.reserve(static_cast<std::size_t>(argc));
  for (int i = 0; i < argc; ++i) echo.emplace_back(argv[i]);
  return echo;
}

struct CommonFlags {
  std::string format;
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
  flags.format = default_format;
  cmd->add_option("-f,--format", flags.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("-o,--output", flags.output, "Write the report to this path (default stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact centrality monotonicity checks under edge addition"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // centrality
  auto* centrality_cmd = app.add_subcommand("centrality", "Exact centrality scores");
  std::string centrality_kind;
  std::string centrality_path;
  CommonFlags centrality_flags;
  centrality_cmd->add_option("--kind", centrality_kind, "closeness, harmonic or betweenness")
      ->required();
  centrality_cmd->add_option("edgelist", centrality_path, "Edge list file")->required();
  add_common(centrality_cmd, centrality_flags, "json");

  // basins
  auto* basins_cmd = app.add_subcommand("basins", "Basin partition for a non-adjacent pair");
  std::string basins_x, basins_y, basins_path;
  CommonFlags basins_flags;
  basins_cmd->add_option("--x", basins_x, "Label of x")->required();
  basins_cmd->add_option("--y", basins_y, "Label of y")->required();
  basins_cmd->add_option("edgelist", basins_path, "Edge list file")->required();
  add_common(basins_cmd, basins_flags, "json");

  // check
  auto* check_cmd = app.add_subcommand("check", "Run one monotonicity check on a scenario");
  std::string check_x, check_y, check_kind, check_definition, check_path;
  bool check_strict_exit = false;
  CommonFlags check_flags;
  check_cmd->add_option("--x", check_x, "Label of x")->required();
  check_cmd->add_option("--y", check_y, "Label of y")->required();
  check_cmd->add_option("--kind", check_kind, "Centrality kind (required except for lemma3)");
  check_cmd
      ->add_option("--definition", check_definition,
                   "score, rank, strict-rank, dominance, strict-dominance, pointwise or lemma3")
      ->required()
      ->check(CLI::IsMember({"score", "rank", "strict-rank", "dominance", "strict-dominance",
                             "pointwise", "lemma3"}));
  check_cmd->add_flag("--strict-exit", check_strict_exit,
                      "Exit 1 when the check reports failures");
  check_cmd->add_option("edgelist", check_path, "Edge list file")->required();
  add_common(check_cmd, check_flags, "json");

  // family
  auto* family_cmd = app.add_subcommand("family", "Build a counterexample family member");
  long family_k = 0, family_m = 0;
  bool family_validate = false, family_strict_exit = false;
  CommonFlags family_flags;
  auto* k_opt = family_cmd->add_option("--closeness-k", family_k,
                                       "Star parameter of the closeness family (k >= 1)");
  auto* m_opt = family_cmd->add_option("--betweenness-m", family_m,
                                       "Clique size of the betweenness family (m >= 1)");
  k_opt->excludes(m_opt);
  family_cmd->add_flag("--validate", family_validate, "Check every published family claim");
  family_cmd->add_flag("--strict-exit", family_strict_exit, "Exit 1 when any claim fails");
  add_common(family_cmd, family_flags, "text");

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count connected labeled graphs");
  int enumerate_n = 0;
  CommonFlags enumerate_flags;
  enumerate_cmd->add_option("--n", enumerate_n, "Vertex count (1..7)")->required();
  add_common(enumerate_cmd, enumerate_flags, "text");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a verification sweep");
  std::string sweep_config_arg;
  CommonFlags sweep_flags;
  sweep_cmd->add_option("--config", sweep_config_arg, "Config JSON (file path or inline)")
      ->required();
  add_common(sweep_cmd, sweep_flags, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    ReportEnvelope env;
    env.command = echo_args(argc, argv);
    int exit_code = 0;

    if (app.got_subcommand(centrality_cmd)) {
      Graph g = Graph::from_edge_list(read_file(centrality_path));
      ScoreVector scores = centrality(g, parse_kind(centrality_kind));
      env.payload = score_vector_json(g, scores);
      env.text = score_vector_text(g, scores);
      emit(env, parse_format(centrality_flags.format), centrality_flags.output, out);

    } else if (app.got_subcommand(basins_cmd)) {
      Graph g = Graph::from_edge_list(read_file(basins_path));
      Scenario scenario(g, resolve_label(g, basins_x), resolve_label(g, basins_y));
      env.payload = basins_json(scenario);
      env.text = basins_text(scenario);
      emit(env, parse_format(basins_flags.format), basins_flags.output, out);

    } else if (app.got_subcommand(check_cmd)) {
      Graph g = Graph::from_edge_list(read_file(check_path));
      Scenario scenario(g, resolve_label(g, check_x), resolve_label(g, check_y));

      std::optional<Kind> kind;
      if (!check_kind.empty()) kind = parse_kind(check_kind);
      bool needs_kind = check_definition != "lemma3" && check_definition != "pointwise";
      if (needs_kind && !kind) {
        throw Error("--kind is required for definition '" + check_definition + "'");
      }

      bool failed = false;
      if (check_definition == "score" || check_definition == "rank" ||
          check_definition == "strict-rank") {
        MonotonicityVerdict verdict;
        if (check_definition == "score") {
          verdict = score_semi_monotone(scenario, *kind);
        } else if (check_definition == "rank") {
          verdict = rank_semi_monotone(scenario, *kind);
        } else {
          verdict = strict_rank_semi_monotone(scenario, *kind);
        }
        failed = !verdict.semi_monotone();
        env.payload = verdict_json(g, check_definition, verdict);
        env.text = verdict_text(g, check_definition, verdict);
      } else if (check_definition == "dominance" || check_definition == "strict-dominance") {
        DominanceReport report = basin_dominance(scenario, *kind);
        failed = check_definition == "dominance" ? !report.nonstrict_holds : !report.strict_holds;
        env.payload = dominance_json(g, check_definition, report);
        env.text = dominance_text(g, check_definition, report);
      } else if (check_definition == "pointwise") {
        auto violations = verify_pointwise_inequalities(scenario);
        if (kind) {
          // Keep only the inequality family belonging to the requested kind.
          std::erase_if(violations, [&](const PointwiseViolation& violation) {
            switch (*kind) {
              case Kind::Closeness: return violation.inequality != "distance-delta";
              case Kind::Harmonic:
                return violation.inequality.rfind("reciprocal-delta", 0) != 0;
              case Kind::Betweenness: return violation.inequality != "dependency-delta";
            }
            return true;
          });
        }
        failed = !violations.empty();
        env.payload = pointwise_json(g, violations);
        env.text = pointwise_text(g, violations);
      } else {  // lemma3
        auto [lhs, rhs] = peripherality_identity(scenario);
        failed = lhs != rhs;
        env.payload = identity_json(lhs, rhs);
        env.text = identity_text(lhs, rhs);
      }
      emit(env, parse_format(check_flags.format), check_flags.output, out);
      if (check_strict_exit && failed) exit_code = 1;

    } else if (app.got_subcommand(family_cmd)) {
      if (k_opt->count() == 0 && m_opt->count() == 0) {
        throw Error("family requires --closeness-k or --betweenness-m");
      }
      std::optional<Graph> built;
      nlohmann::json vertices;
      std::string family_name;
      long parameter = 0;
      if (k_opt->count() > 0) {
        auto family = build_closeness_counterexample(family_k);
        family_name = "closeness";
        parameter = family_k;
        vertices = {{"x", family.graph.label(family.x)},
                    {"y", family.graph.label(family.y)},
                    {"u", family.graph.label(family.u)},
                    {"w", family.graph.label(family.w)}};
        built = std::move(family.graph);
      } else {
        auto family = build_betweenness_counterexample(family_m);
        family_name = "betweenness";
        parameter = family_m;
        vertices = {{"x", family.graph.label(family.x)},
                    {"y", family.graph.label(family.y)},
                    {"u", family.graph.label(family.u)}};
        built = std::move(family.graph);
      }
      const Graph& graph = *built;

      std::optional<ClaimReport> claims;
      if (family_validate) {
        claims = family_name == "closeness" ? validate_closeness_counterexample(parameter)
                                            : validate_betweenness_counterexample(parameter);
      }

      env.payload = {{"family", family_name},
                     {"parameter", parameter},
                     {"vertices", vertices},
                     {"edge_list", graph.to_edge_list()}};
      if (claims) {
        nlohmann::json claim_json = claim_report_json(*claims);
        env.payload["claims"] = claim_json["claims"];
        env.payload["all_pass"] = claim_json["all_pass"];
      }
      // Text output stays ingestible: claims render as '#' comment lines.
      env.text = graph.to_edge_list();
      if (claims) env.text += claim_report_text(*claims);
      emit(env, parse_format(family_flags.format), family_flags.output, out);
      if (family_strict_exit && claims && !claims->all_pass()) exit_code = 1;

    } else if (app.got_subcommand(enumerate_cmd)) {
      std::uint64_t count = count_connected_graphs(enumerate_n);
      env.payload = {{"n", enumerate_n}, {"count", count}};
      env.text = std::to_string(count) + " connected labeled graphs\n";
      emit(env, parse_format(enumerate_flags.format), enumerate_flags.output, out);

    } else if (app.got_subcommand(sweep_cmd)) {
      nlohmann::json config_json;
      std::ifstream file(sweep_config_arg);
      try {
        if (file) {
          config_json = nlohmann::json::parse(file);
        } else {
          config_json = nlohmann::json::parse(sweep_config_arg);
        }
      } catch (const nlohmann::json::parse_error& e) {
        throw Error("cannot parse sweep config: " + std::string(e.what()));
      }
      SweepConfig cfg = sweep_config_from_json(config_json);
      SweepReport report = run_sweep(cfg);
      if (const auto* random = std::get_if<RandomSource>(&report.config.source)) {
        env.prng = std::string(kPrngName) + "(seed=" + std::to_string(random->seed) + ")";
      }
      env.payload = sweep_report_json(report);
      env.text = sweep_report_text(report);
      env.csv = sweep_report_csv(report);
      env.wall_seconds = report.wall_seconds;
      emit(env, parse_format(sweep_flags.format), sweep_flags.output, out);
    }

    return exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace semimono
