#include "eqseq/report.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace eqseq {

std::vector<std::pair<u64, u64>> qualifying_pairs(u64 max_period) {
    std::vector<std::pair<u64, u64>> pairs;
    // p >= 3 forces q^2 <= max_period / 3.
    for (u64 q = 5; q * q <= max_period / 3; q += 2) {
        if (!is_prime(q)) continue;
        for (u64 p = 3; p < q; p += 2) {
            if (!is_prime(p) || (q - 1) % p != 0) continue;
            if (p * q * q > max_period) break;
            pairs.emplace_back(p, q);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

ScanRow to_scan_row(const AnalysisReport& report) {
    ScanRow row;
    row.p = report.p;
    row.q = report.q;
    row.q_mod_4 = report.q_mod_4;
    row.wieferich_ok = report.wieferich_ok;
    row.divisibility_ok = report.divisibility_ok;
    row.period = report.period_found;
    row.lc_empirical = report.lc_empirical;
    row.lc_predicted = report.lc_predicted;
    row.match = report.match;
    row.sigma = report.sigma;
    row.millis = report.elapsed.count();
    row.diagnostic = report.diagnostic;
    if (!report.match && row.diagnostic.empty()) {
        row.diagnostic = report.theorem_applicable() ? "minimal polynomial differs from closed form"
                                                     : "theorem hypotheses not satisfied";
    }
    return row;
}

std::vector<ScanRow> run_scan(const ScanOptions& options) {
    const auto pairs = qualifying_pairs(options.max_period);
    std::vector<ScanRow> rows(pairs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            const auto [p, q] = pairs[i];
            try {
                rows[i] = to_scan_row(verify_theorem(PrimePair::checked(p, q)));
            } catch (const std::exception& ex) {
                ScanRow failed;
                failed.p = p;
                failed.q = q;
                failed.q_mod_4 = q % 4;
                failed.divisibility_ok = (q - 1) % p == 0;
                failed.diagnostic = ex.what();
                rows[i] = failed;
            }
            if (!options.record_timing) rows[i].millis = 0;
        }
    };
    const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(pairs.size())));
    std::vector<std::jthread> threads;
    for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
    worker();
    threads.clear();

    std::sort(rows.begin(), rows.end(),
              [](const ScanRow& a, const ScanRow& b) { return std::pair{a.p, a.q} < std::pair{b.p, b.q}; });
    return rows;
}

std::string to_csv(const std::vector<ScanRow>& rows, bool record_timing) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    auto opt = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    out << kScanCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.p << ',' << r.q << ',' << r.q_mod_4 << ',' << flag(r.wieferich_ok) << ',' << flag(r.divisibility_ok)
            << ',' << r.period << ',' << r.lc_empirical << ',' << opt(r.lc_predicted) << ',' << flag(r.match) << ','
            << opt(r.sigma) << ',' << (record_timing ? r.millis : 0) << '\n';
    }
    return out.str();
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
    nlohmann::ordered_json j;
    j["p"] = report.p;
    j["q"] = report.q;
    j["q_mod_4"] = report.q_mod_4;
    j["divisibility_ok"] = report.divisibility_ok;
    j["wieferich_ok"] = report.wieferich_ok;
    j["period_found"] = report.period_found;
    j["lc_empirical"] = report.lc_empirical;
    j["lc_berlekamp_massey"] = report.lc_berlekamp_massey;
    j["lc_predicted"] = report.lc_predicted ? nlohmann::ordered_json(*report.lc_predicted) : nlohmann::ordered_json("n/a");
    j["minpoly_empirical"] = report.minpoly_empirical.to_string();
    j["minpoly_predicted"] =
        report.minpoly_predicted ? nlohmann::ordered_json(report.minpoly_predicted->to_string()) : "n/a";
    j["match"] = report.match;
    j["sigma"] = report.sigma ? nlohmann::ordered_json(*report.sigma) : nlohmann::ordered_json("n/a");
    j["elapsed"] = report.elapsed.count();
    j["diagnostic"] = report.diagnostic;
    return j;
}

nlohmann::ordered_json to_json(const StructureReport& report) {
    nlohmann::ordered_json j;
    j["p"] = report.p;
    j["q"] = report.q;
    j["lemma2_ok"] = report.lemma2_ok;
    j["lemma3_ok"] = report.lemma3_ok;
    j["lemma4_ok"] = report.lemma4_ok;
    j["lemma5_ok"] = report.lemma5_ok;
    j["lemma6_ok"] = report.lemma6_ok;
    j["lemma7_ok"] = report.lemma7_ok;
    j["lemma8_ok"] = report.lemma8_ok;
    j["lemma9_ok"] = report.lemma9_ok;
    j["sigma"] = report.sigma;
    j["details"] = nlohmann::ordered_json::object();
    for (const auto& [key, text] : report.details) j["details"][key] = text;
    return j;
}

std::string to_table(const StructureReport& report) {
    const std::pair<const char*, bool> rows[] = {
        {"lemma2  kernel <g^q,h>, image pZ_pq, homomorphism", report.lemma2_ok},
        {"lemma3  coset partition, D_l = ghat^l D_0", report.lemma3_ok},
        {"lemma4  translation u D_i = D_(i+j)", report.lemma4_ok},
        {"lemma5  multisets mod p and mod q", report.lemma5_ok},
        {"lemma6  bijection mod pq", report.lemma6_ok},
        {"lemma7  multiset mod q^2", report.lemma7_ok},
        {"lemma8  D_l(x) congruences", report.lemma8_ok},
        {"lemma9  unit-sum congruences", report.lemma9_ok},
    };
    std::ostringstream out;
    out << "structure audit p=" << report.p << " q=" << report.q << " sigma=" << report.sigma << '\n';
    for (const auto& [label, ok] : rows) {
        out << "  " << label;
        for (std::size_t pad = std::char_traits<char>::length(label); pad < 52; ++pad) out << ' ';
        out << (ok ? "ok" : "FAIL") << '\n';
    }
    for (const auto& [key, text] : report.details) out << "  " << key << ": " << text << '\n';
    return out.str();
}

}  // namespace eqseq
