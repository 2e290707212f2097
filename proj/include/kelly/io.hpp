#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kelly/backtest.hpp"
#include "kelly/estimation.hpp"
#include "kelly/types.hpp"

namespace kelly {

inline constexpr int kSchemaVersion = 1;

/// Writes content to a sibling temporary file, then renames it into place,
/// so a killed process never leaves a truncated artifact at the final path.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

/// Panel plus ingestion bookkeeping: per source file, how many of its rows
/// were dropped because the date was missing from some other source.
struct PanelIngest {
    InstrumentPanel panel;
    std::vector<std::string> sources;
    std::vector<std::size_t> dropped_rows;
};

/// Wide format: header `date,<id1>,<id2>,...`, ISO-8601 dates, one decimal
/// price per instrument per row. Every cell must be present; errors name
/// the file, line, and offending column.
PanelIngest read_wide_panel_csv(const std::filesystem::path& path);

/// Per-instrument format: each file has header `date,adj_close`; series are
/// joined on the intersection of their dates. Instrument ids default to the
/// file stems unless `ids` is given.
PanelIngest read_instrument_csvs(const std::vector<std::filesystem::path>& paths,
                                 std::vector<std::string> ids = {});

/// Single-column CSV of per-period returns; an optional non-numeric first
/// line is treated as a header.
std::vector<double> read_returns_csv(const std::filesystem::path& path);

/// Wide-format serialization; prices carry 17 significant digits so a
/// written panel re-ingests bit-exactly.
std::string panel_to_csv(const InstrumentPanel& panel);

std::string capital_path_to_csv(const CapitalPath& path);

/// GbmParams <-> JSON. The document stores mu, sigma, corr, and the derived
/// cov; on read, either (sigma, corr) or cov alone is accepted, and if both
/// are present they must agree to 1e-12 relative error.
nlohmann::ordered_json params_to_json(const GbmParams& params,
                                      const std::vector<std::string>& ids = {});
GbmParams params_from_json(const nlohmann::json& doc);
std::vector<std::string> instrument_ids_from_json(const nlohmann::json& doc);

/// Serializes with every floating-point number at 17 significant digits,
/// which round-trips doubles exactly and keeps artifacts byte-stable.
std::string dump_json_17(const nlohmann::ordered_json& doc, int indent = 2);

/// %.17g formatting used across CSV/JSON artifact output.
std::string format_double_17(double value);

}  // namespace kelly
