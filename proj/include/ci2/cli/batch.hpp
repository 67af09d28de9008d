#pragma once

#include "ci2/cli/commands.hpp"

#include <json.hpp>

#include <filesystem>

namespace ci2::cli {

/// Manifest: a JSON array of {"pair": path, "point": "1,0,...", "condition":
/// "auto", "samples": 20}. Paths are relative to the manifest. Each entry's
/// report is written to out_dir/entry_NNN.json; malformed entries become error
/// records and the batch continues.
nlohmann::json run_batch(const std::filesystem::path& manifest, const std::filesystem::path& out_dir, unsigned jobs,
                         const GlobalOptions& g);

}  // namespace ci2::cli
