#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semimono/families.hpp"
#include "semimono/lab.hpp"
#include "semimono/monotonicity.hpp"

namespace semimono {

enum class Format { Json, Csv, Text };

std::optional<Format> format_from_name(std::string_view name);

// JSON payload builders. Rationals render as exact "num/den" strings and
// vertices by their ingested label; keys serialize sorted.
nlohmann::json score_vector_json(const Graph& g, const ScoreVector& scores);
nlohmann::json basins_json(const Scenario& s);
nlohmann::json verdict_json(const Graph& g, std::string_view definition,
                            const MonotonicityVerdict& verdict);
nlohmann::json dominance_json(const Graph& g, std::string_view definition,
                              const DominanceReport& report);
nlohmann::json pointwise_json(const Graph& g,
                              const std::vector<PointwiseViolation>& violations);
nlohmann::json identity_json(const BigInt& lhs, const BigInt& rhs);
nlohmann::json claim_report_json(const ClaimReport& report);
nlohmann::json sweep_config_json(const SweepConfig& cfg);
nlohmann::json sweep_report_json(const SweepReport& report);

SweepConfig sweep_config_from_json(const nlohmann::json& j);

// Text renderers (human-oriented, unstable format).
std::string score_vector_text(const Graph& g, const ScoreVector& scores);
std::string basins_text(const Scenario& s);
std::string verdict_text(const Graph& g, std::string_view definition,
                         const MonotonicityVerdict& verdict);
std::string dominance_text(const Graph& g, std::string_view definition,
                           const DominanceReport& report);
std::string pointwise_text(const Graph& g,
                           const std::vector<PointwiseViolation>& violations);
std::string identity_text(const BigInt& lhs, const BigInt& rhs);
std::string claim_report_text(const ClaimReport& report);
std::string sweep_report_text(const SweepReport& report);

// CSV summary of a sweep: header check,centrality,scenarios,holds,fails.
std::string sweep_report_csv(const SweepReport& report);

struct ReportEnvelope {
  std::vector<std::string> command;    // argv echo
  std::optional<std::string> prng;     // e.g. "splitmix64(seed=7)" when randomized
  nlohmann::json payload;              // json payload
  std::string text;                    // text rendering of the payload
  std::optional<std::string> csv;      // csv rendering, where defined
  std::optional<double> wall_seconds;  // text footer only
};

// Bit-stable for identical inputs: sorted keys, no timestamps in json/csv.
void write_report(const ReportEnvelope& env, Format format, std::ostream& out);

}  // namespace semimono
