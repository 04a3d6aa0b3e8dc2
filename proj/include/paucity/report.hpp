#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "paucity/asymptotics.hpp"
#include "paucity/depress.hpp"
#include "paucity/enumerate.hpp"
#include "paucity/surface.hpp"

namespace paucity {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "paucity-lab/1";

Json counts_json(const CountSummary& summary, std::optional<double> elapsed_ms = std::nullopt);

/// Inverse of counts_json; throws nlohmann::json exceptions or Error{ParseError} on malformed input.
CountSummary counts_from_json(const Json& j);

Json depressed_json(const IntPolynomial& f, const DepressedForm& df);

Json census_json(const CensusReport& report);

Json curve_json(const ParametricCurve& curve);

Json ladder_json(const LadderReport& report, const std::optional<BoundProfile>& profile = std::nullopt,
                 const std::optional<Verdict>& verdict = std::nullopt);

/// "B\ttotal\ttrivial\tshared\tdisjoint" followed by one row per successful rung.
void write_ladder_tsv(std::ostream& out, const LadderReport& report);

/// "x1,...,x{2s},class" header.
void write_solutions_csv_header(std::ostream& out, int s);
void write_solution_csv_row(std::ostream& out, const SolutionRecord& record);

/// Serialized text of a JSON document as emitted by the CLI (two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace paucity
