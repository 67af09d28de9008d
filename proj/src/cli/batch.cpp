#include "ci2/cli/batch.hpp"

#include "ci2/cli/io.hpp"
#include "ci2/error.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

namespace ci2::cli {

namespace {

std::string entry_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "entry_%03zu.json", i);
    return buf;
}

json run_entry(const json& entry, const std::filesystem::path& base, const GlobalOptions& g, std::string& status) {
    json record = {{"entry", entry}};
    try {
        if (!entry.is_object() || !entry.contains("pair") || !entry.contains("point"))
            throw InputError("entry needs \"pair\" and \"point\"");
        RegularityRequest req;
        req.pair = base / entry.at("pair").get<std::string>();
        req.point = entry.at("point").get<std::string>();
        req.condition = entry.value("condition", std::string("auto"));
        req.samples = entry.value("samples", 20u);
        if (entry.contains("subspace")) req.subspace = base / entry.at("subspace").get<std::string>();
        req.advisory = entry.value("advisory", false);
        auto outcome = run_regularity(req, g);
        status = to_string(outcome.verdict);
        record["result"] = std::move(outcome.result);
    } catch (const InputError& e) {
        status = "error";
        record["error"] = e.what();
    } catch (const BudgetExceeded& e) {
        status = "budget";
        record["error"] = e.what();
    } catch (const json::exception& e) {
        status = "error";
        record["error"] = e.what();
    } catch (const std::invalid_argument& e) {
        status = "error";
        record["error"] = e.what();
    }
    record["status"] = status;
    return record;
}

}  // namespace

json run_batch(const std::filesystem::path& manifest, const std::filesystem::path& out_dir, unsigned jobs,
               const GlobalOptions& g) {
    const json doc = read_json(manifest);
    if (!doc.is_array()) throw InputError("manifest must be a JSON array");
    std::filesystem::create_directories(out_dir);
    const auto base = manifest.parent_path();
    const std::size_t n = doc.size();
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));

    std::vector<std::string> status(n);
    std::atomic<std::size_t> next{0};
    std::mutex io_mutex;
    std::string io_error;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            const json record = run_entry(doc[i], base, g, status[i]);
            std::ofstream f(out_dir / entry_name(i));
            f << record.dump(2) << "\n";
            if (!f) {
                std::lock_guard lock(io_mutex);
                io_error = "cannot write " + (out_dir / entry_name(i)).string();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (!io_error.empty()) throw InputError(io_error);

    json counts = {{"pass-sampled", 0}, {"fail", 0}, {"vacuous", 0}, {"budget", 0}, {"error", 0}};
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        counts[status[i]] = counts.value(status[i], 0) + 1;
        entries.push_back({{"index", i}, {"file", entry_name(i)}, {"status", status[i]}});
    }
    return {{"entries", entries}, {"summary", counts}, {"total", n}};
}

}  // namespace ci2::cli
