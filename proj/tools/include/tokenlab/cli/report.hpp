#pragma once

#include <string>
#include <vector>

#include "tokenlab/cli/config.hpp"
#include "tokenlab/cli/sweep.hpp"

namespace tokenlab::cli {

/// Column order: family,operator,m,vertices,formula,alpha,witness,status,ms.
inline constexpr const char* kCsvHeader = "family,operator,m,vertices,formula,alpha,witness,status,ms";

std::string render_csv(const std::vector<VerificationRow>& rows);

/// JSON array of row objects keyed by the CSV column names; an absent
/// witness is null.
std::string render_json(const std::vector<VerificationRow>& rows);

std::string render_table(const std::vector<VerificationRow>& rows);

/// Throws ConfigError for Format::dot.
std::string render(const std::vector<VerificationRow>& rows, Format format);

} // namespace tokenlab::cli
