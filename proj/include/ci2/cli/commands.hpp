#pragma once

#include "ci2/regularity/conditions.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ci2::cli {

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> prime;
    std::uint64_t budget = GroebnerOptions{}.max_reductions;
};

/// Runs one invocation (without the program name). The JSON report goes to
/// `out`, a one-line summary and diagnostics to `err`. Returns 0 when the
/// computation finished, 1 on input errors and 2 when a budget ran out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct RegularityRequest {
    std::filesystem::path pair;
    std::string point;
    /// auto, R1, R2 or R2^2.
    std::string condition = "auto";
    unsigned samples = 20;
    std::optional<std::filesystem::path> subspace;
    bool advisory = true;
};

struct RegularityOutcome {
    nlohmann::json result;
    Verdict verdict = Verdict::PassSampled;
};

/// Shared by check-regularity and batch. Throws InputError on bad input.
RegularityOutcome run_regularity(const RegularityRequest& req, const GlobalOptions& g);

nlohmann::json to_json(const RegularityReport& r);

}  // namespace ci2::cli
