#include "semimono/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "semimono/version.hpp"

namespace semimono {

namespace {

const char* side_name(Side side) { return side == Side::X ? "x" : "y"; }

nlohmann::json labels_json(const Graph& g, const std::vector<Vertex>& vertices) {
  nlohmann::json array = nlohmann::json::array();
  for (Vertex v : vertices) array.push_back(g.label(v));
  return array;
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

nlohmann::json score_vector_json(const Graph& g, const ScoreVector& scores) {
  nlohmann::json entries = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    entries.push_back({{"vertex", g.label(v)}, {"value", fraction_str(scores.scores[v])}});
  }
  return {{"kind", std::string(kind_name(scores.kind))}, {"scores", std::move(entries)}};
}

nlohmann::json basins_json(const Scenario& s) {
  const Graph& g = s.before_graph();
  const BasinPartition& partition = s.basins();
  return {{"x", g.label(s.x())},
          {"y", g.label(s.y())},
          {"k_xy", labels_json(g, partition.k_xy)},
          {"k_yx", labels_json(g, partition.k_yx)},
          {"overlap", labels_json(g, partition.overlap())}};
}

nlohmann::json verdict_json(const Graph& g, std::string_view definition,
                            const MonotonicityVerdict& verdict) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& witness : verdict.witnesses) {
    witnesses.push_back({{"z", g.label(witness.z)},
                         {"side", side_name(witness.side)},
                         {"before", fraction_str(witness.before)},
                         {"after", fraction_str(witness.after)}});
  }
  return {{"definition", std::string(definition)},
          {"holds_at_x", verdict.holds_at_x},
          {"holds_at_y", verdict.holds_at_y},
          {"witnesses", std::move(witnesses)}};
}

nlohmann::json dominance_json(const Graph& g, std::string_view definition,
                              const DominanceReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const DominanceViolation& violation : report.violations) {
    violations.push_back({{"u", g.label(violation.u)},
                          {"side", side_name(violation.side)},
                          {"delta_u", fraction_str(violation.delta_u)},
                          {"delta_endpoint", fraction_str(violation.delta_endpoint)}});
  }
  return {{"definition", std::string(definition)},
          {"strict_holds", report.strict_holds},
          {"nonstrict_holds", report.nonstrict_holds},
          {"violations", std::move(violations)}};
}

nlohmann::json pointwise_json(const Graph& g,
                              const std::vector<PointwiseViolation>& violations) {
  nlohmann::json entries = nlohmann::json::array();
  for (const PointwiseViolation& violation : violations) {
    nlohmann::json entry = {{"inequality", violation.inequality},
                            {"side", side_name(violation.side)},
                            {"u", g.label(violation.u)},
                            {"z", g.label(violation.z)},
                            {"lhs", fraction_str(violation.lhs)},
                            {"rhs", fraction_str(violation.rhs)}};
    if (violation.j >= 0) entry["j"] = g.label(violation.j);
    entries.push_back(std::move(entry));
  }
  return {{"definition", "pointwise"},
          {"holds", violations.empty()},
          {"violations", std::move(entries)}};
}

nlohmann::json identity_json(const BigInt& lhs, const BigInt& rhs) {
  return {{"definition", "lemma3"},
          {"lhs", lhs.get_str()},
          {"rhs", rhs.get_str()},
          {"holds", lhs == rhs}};
}

nlohmann::json claim_report_json(const ClaimReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const Claim& claim : report.claims) {
    claims.push_back({{"name", claim.name}, {"pass", claim.pass}, {"detail", claim.detail}});
  }
  return {{"family", report.family},
          {"parameter", report.parameter},
          {"all_pass", report.all_pass()},
          {"claims", std::move(claims)}};
}

nlohmann::json sweep_config_json(const SweepConfig& cfg) {
  nlohmann::json source;
  if (const auto* enumerate = std::get_if<EnumerateSource>(&cfg.source)) {
    source = {{"enumerate", {{"n_max", enumerate->n_max}}}};
  } else {
    const auto& random = std::get<RandomSource>(cfg.source);
    source = {{"random",
               {{"n", random.n}, {"p", random.p}, {"count", random.count}, {"seed", random.seed}}}};
  }
  nlohmann::json kinds = nlohmann::json::array();
  for (Kind kind : cfg.centralities) kinds.push_back(std::string(kind_name(kind)));
  nlohmann::json checks = nlohmann::json::array();
  for (CheckId check : cfg.checks) checks.push_back(std::string(check_name(check)));
  return {{"source", std::move(source)},
          {"centralities", std::move(kinds)},
          {"checks", std::move(checks)}};
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("sweep config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "source" && key != "centralities" && key != "checks") {
      throw Error("sweep config: unknown key '" + key + "'");
    }
  }
  if (!j.contains("source") || !j.at("source").is_object()) {
    throw Error("sweep config: missing 'source' object");
  }

  SweepConfig cfg;
  const auto& source = j.at("source");
  if (source.contains("enumerate") == source.contains("random")) {
    throw Error("sweep config: source must hold exactly one of 'enumerate' or 'random'");
  }
  if (source.contains("enumerate")) {
    const auto& e = source.at("enumerate");
    if (!e.is_object() || !e.contains("n_max") || !e.at("n_max").is_number_integer()) {
      throw Error("sweep config: enumerate source needs integer 'n_max'");
    }
    EnumerateSource es;
    es.n_max = e.at("n_max").get<int>();
    if (es.n_max < 1 || es.n_max > kMaxEnumerationN) {
      throw Error("sweep config: n_max must be within 1.." + std::to_string(kMaxEnumerationN));
    }
    cfg.source = es;
  } else {
    const auto& r = source.at("random");
    if (!r.is_object() || !r.contains("n") || !r.contains("p") || !r.contains("count") ||
        !r.contains("seed")) {
      throw Error("sweep config: random source needs 'n', 'p', 'count' and a mandatory 'seed'");
    }
    RandomSource rs;
    rs.n = r.at("n").get<int>();
    rs.p = r.at("p").get<double>();
    rs.count = r.at("count").get<int>();
    rs.seed = r.at("seed").get<std::uint64_t>();
    if (rs.n < 1) throw Error("sweep config: random n must be >= 1");
    if (!(rs.p > 0.0) || rs.p > 1.0) throw Error("sweep config: random p must be in (0,1]");
    if (rs.count < 1) throw Error("sweep config: random count must be >= 1");
    cfg.source = rs;
  }

  if (j.contains("centralities")) {
    for (const auto& name : j.at("centralities")) {
      auto kind = kind_from_name(name.get<std::string>());
      if (!kind) throw Error("sweep config: unknown centrality '" + name.get<std::string>() + "'");
      cfg.centralities.push_back(*kind);
    }
  }
  if (j.contains("checks")) {
    for (const auto& name : j.at("checks")) {
      auto check = check_from_name(name.get<std::string>());
      if (!check) throw Error("sweep config: unknown check '" + name.get<std::string>() + "'");
      cfg.checks.push_back(*check);
    }
  }
  return cfg;
}

nlohmann::json sweep_report_json(const SweepReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const CheckTally& row : report.rows) {
    nlohmann::json entry = {{"check", std::string(check_name(row.check))},
                            {"centrality", std::string(kind_name(row.centrality))},
                            {"scenarios", row.scenarios},
                            {"holds", row.holds},
                            {"fails", row.fails}};
    if (row.exemplar) {
      nlohmann::json exemplar = {{"edge_list", row.exemplar->edge_list},
                                 {"detail", row.exemplar->detail}};
      if (!row.exemplar->x_label.empty()) exemplar["x"] = row.exemplar->x_label;
      if (!row.exemplar->y_label.empty()) exemplar["y"] = row.exemplar->y_label;
      entry["exemplar"] = std::move(exemplar);
    }
    results.push_back(std::move(entry));
  }
  return {{"config", sweep_config_json(report.config)},
          {"graphs", report.graphs_generated},
          {"scenarios", report.scenarios_built},
          {"results", std::move(results)}};
}

std::string score_vector_text(const Graph& g, const ScoreVector& scores) {
  std::ostringstream out;
  out << kind_name(scores.kind) << " centrality\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << g.label(v) << ": " << fraction_str(scores.scores[v]);
    if (scores.kind == Kind::Closeness) {
      out << "  (peripherality " << scores.peripheralities[v].get_str() << ")";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void append_labels(std::ostringstream& out, const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out << ' ';
    out << g.label(vs[i]);
  }
}

}  // namespace

std::string basins_text(const Scenario& s) {
  const Graph& g = s.before_graph();
  const BasinPartition& partition = s.basins();
  std::ostringstream out;
  out << "basins for x=" << g.label(s.x()) << ", y=" << g.label(s.y()) << '\n';
  out << "  K_xy (" << partition.k_xy.size() << "): ";
  append_labels(out, g, partition.k_xy);
  out << "\n  K_yx (" << partition.k_yx.size() << "): ";
  append_labels(out, g, partition.k_yx);
  out << "\n  overlap: ";
  append_labels(out, g, partition.overlap());
  out << '\n';
  return out.str();
}

std::string verdict_text(const Graph& g, std::string_view definition,
                         const MonotonicityVerdict& verdict) {
  std::ostringstream out;
  out << definition << ": holds_at_x=" << (verdict.holds_at_x ? "true" : "false")
      << " holds_at_y=" << (verdict.holds_at_y ? "true" : "false")
      << " semi-monotone=" << (verdict.semi_monotone() ? "true" : "false") << '\n';
  for (const Witness& witness : verdict.witnesses) {
    Rational delta = witness.after - witness.before;
    out << "  witness z=" << g.label(witness.z) << " side=" << side_name(witness.side)
        << " before=" << fraction_str(witness.before) << " after=" << fraction_str(witness.after)
        << " delta=" << fraction_str(delta) << '\n';
  }
  return out.str();
}

std::string dominance_text(const Graph& g, std::string_view definition,
                           const DominanceReport& report) {
  std::ostringstream out;
  out << definition << ": strict_holds=" << (report.strict_holds ? "true" : "false")
      << " nonstrict_holds=" << (report.nonstrict_holds ? "true" : "false") << '\n';
  for (const DominanceViolation& violation : report.violations) {
    out << "  u=" << g.label(violation.u) << " side=" << side_name(violation.side)
        << " delta_u=" << fraction_str(violation.delta_u)
        << " delta_endpoint=" << fraction_str(violation.delta_endpoint) << '\n';
  }
  return out.str();
}

std::string pointwise_text(const Graph& g,
                           const std::vector<PointwiseViolation>& violations) {
  std::ostringstream out;
  out << "pointwise inequalities: " << (violations.empty() ? "all hold" : "violations found")
      << '\n';
  for (const PointwiseViolation& violation : violations) {
    out << "  " << violation.inequality << " side=" << side_name(violation.side)
        << " u=" << g.label(violation.u) << " z=" << g.label(violation.z);
    if (violation.j >= 0) out << " j=" << g.label(violation.j);
    out << " lhs=" << fraction_str(violation.lhs) << " rhs=" << fraction_str(violation.rhs)
        << '\n';
  }
  return out.str();
}

std::string identity_text(const BigInt& lhs, const BigInt& rhs) {
  std::ostringstream out;
  out << "peripherality identity: p'(x)-p'(y)=" << lhs.get_str()
      << " |K_yx|-|K_xy|=" << rhs.get_str() << " -> " << (lhs == rhs ? "holds" : "VIOLATED")
      << '\n';
  return out.str();
}

std::string claim_report_text(const ClaimReport& report) {
  std::ostringstream out;
  for (const Claim& claim : report.claims) {
    out << "# claim " << claim.name << ": " << (claim.pass ? "pass" : "FAIL");
    if (!claim.detail.empty()) out << " (" << claim.detail << ")";
    out << '\n';
  }
  out << "# " << report.family << " family, parameter " << report.parameter << ": "
      << (report.all_pass() ? "all claims pass" : "CLAIMS FAILED") << '\n';
  return out.str();
}

std::string sweep_report_text(const SweepReport& report) {
  std::ostringstream out;
  out << "sweep: " << report.graphs_generated << " graphs, " << report.scenarios_built
      << " scenarios\n";
  out << std::left << std::setw(24) << "check" << std::setw(13) << "centrality"
      << std::right << std::setw(10) << "scenarios" << std::setw(9) << "holds" << std::setw(8)
      << "fails" << '\n';
  for (const CheckTally& row : report.rows) {
    out << std::left << std::setw(24) << check_name(row.check) << std::setw(13)
        << kind_name(row.centrality) << std::right << std::setw(10) << row.scenarios
        << std::setw(9) << row.holds << std::setw(8) << row.fails << '\n';
  }
  for (const CheckTally& row : report.rows) {
    if (!row.exemplar) continue;
    out << "exemplar [" << check_name(row.check) << "/" << kind_name(row.centrality) << "]";
    if (!row.exemplar->x_label.empty()) {
      out << " x=" << row.exemplar->x_label << " y=" << row.exemplar->y_label;
    }
    out << ": " << row.exemplar->detail << '\n';
    std::istringstream edges(row.exemplar->edge_list);
    std::string line;
    while (std::getline(edges, line)) out << "    " << line << '\n';
  }
  return out.str();
}

std::string sweep_report_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "check,centrality,scenarios,holds,fails\n";
  for (const CheckTally& row : report.rows) {
    out << check_name(row.check) << ',' << kind_name(row.centrality) << ',' << row.scenarios
        << ',' << row.holds << ',' << row.fails << '\n';
  }
  return out.str();
}

void write_report(const ReportEnvelope& env, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      nlohmann::json envelope = {{"tool", std::string(kToolName)},
                                 {"version", std::string(kToolVersion)},
                                 {"command", env.command},
                                 {"payload", env.payload}};
      if (env.prng) envelope["prng"] = *env.prng;
      out << envelope.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      if (!env.csv) throw Error("csv output is only defined for sweep reports");
      out << *env.csv;
      break;
    }
    case Format::Text: {
      out << env.text;
      if (env.wall_seconds) {
        out << "wall time: " << std::fixed << std::setprecision(3) << *env.wall_seconds
            << " s\n";
      }
      break;
    }
  }
  if (!out) throw Error("failed to write report to sink");
}

}  // namespace semimono
