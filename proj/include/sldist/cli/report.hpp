#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sldist/distinction/distinction.hpp"

namespace sldist::cli {

enum class Format : std::uint8_t { Json, Csv, Markdown };

/// "json", "csv", "md".  Throws std::invalid_argument.
Format parse_format(const std::string& name);

/// Full record: every GL_n(E) row with its sets and constituents, every
/// SL_n(E) row, and the profile grouping.
nlohmann::ordered_json distinction_json(const distinction::DistinctionContext& ctx,
                                        const std::vector<distinction::DistinctionData>& data);
/// One line per (GL_n(E) row, constituent).
std::string distinction_csv(const distinction::DistinctionContext& ctx,
                            const std::vector<distinction::DistinctionData>& data);
std::string distinction_markdown(const distinction::DistinctionContext& ctx,
                                 const std::vector<distinction::DistinctionData>& data);
std::string render_distinction(const distinction::DistinctionContext& ctx,
                               const std::vector<distinction::DistinctionData>& data, Format format);

nlohmann::ordered_json verification_json(const distinction::VerificationReport& report);
/// Verdict lines as printed by the verify command.
std::string verification_text(const distinction::VerificationReport& report);

/// Canonical text of a JSON document: two-space indent, trailing newline.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace sldist::cli
