#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqseq/lincomp.hpp"
#include "eqseq/structverify.hpp"

namespace eqseq {

inline constexpr const char* kScanCsvHeader =
    "p,q,q_mod_4,wieferich_ok,divisibility_ok,period,lc_empirical,lc_predicted,match,sigma,millis";

struct ScanRow {
    u64 p = 0;
    u64 q = 0;
    u64 q_mod_4 = 0;
    bool wieferich_ok = false;
    bool divisibility_ok = false;
    std::size_t period = 0;
    std::size_t lc_empirical = 0;
    std::optional<u64> lc_predicted;
    bool match = false;
    std::optional<u64> sigma;
    std::int64_t millis = 0;
    /// Set when the row's pair failed or disagreed; not part of the CSV.
    std::string diagnostic;
};

struct ScanOptions {
    u64 max_period = 0;
    unsigned jobs = 1;
    /// Write millis as 0 so repeated runs are byte-identical.
    bool record_timing = true;
};

/// Odd prime pairs (p, q) with p | q-1 and p*q^2 <= max_period, sorted by (p, q).
std::vector<std::pair<u64, u64>> qualifying_pairs(u64 max_period);

ScanRow to_scan_row(const AnalysisReport& report);

/// verify_theorem over every qualifying pair on `jobs` worker threads.
/// Rows come back sorted by (p, q) whatever the completion order.
std::vector<ScanRow> run_scan(const ScanOptions& options);

std::string to_csv(const std::vector<ScanRow>& rows, bool record_timing = true);

nlohmann::ordered_json to_json(const AnalysisReport& report);
nlohmann::ordered_json to_json(const StructureReport& report);

/// Fixed-width table of the lemma checks for terminal output.
std::string to_table(const StructureReport& report);

}  // namespace eqseq
