#include "eqseq/cli.hpp"

#include <iostream>
#include <memory>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqseq/errors.hpp"
#include "eqseq/eulerq.hpp"
#include "eqseq/lincomp.hpp"
#include "eqseq/report.hpp"
#include "eqseq/seqio.hpp"
#include "eqseq/structverify.hpp"

namespace eqseq::cli {

namespace {

struct PairArgs {
    u64 p = 0;
    u64 q = 0;
};

void add_pair_options(CLI::App& cmd, PairArgs& args, bool required) {
    auto* p = cmd.add_option("--p", args.p, "odd prime p (p | q-1)");
    auto* q = cmd.add_option("--q", args.q, "odd prime q");
    if (required) {
        p->required();
        q->required();
    }
}

void write_output(const std::string& path, std::span<const std::uint8_t> bytes, std::ostream& out) {
    if (path.empty() || path == "-") {
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    } else {
        write_file(path, bytes);
    }
}

std::span<const std::uint8_t> as_bytes(const std::string& text) {
    return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

int cmd_generate(const PairArgs& args, const std::string& format, const std::string& out_path, std::ostream& out) {
    const auto pair = PrimePair::checked(args.p, args.q);
    const BitSequence seq = generate_threshold(pair);
    if (format == "packed") {
        write_output(out_path, write_packed(seq), out);
    } else {
        write_output(out_path, as_bytes(write_ascii(seq)), out);
    }
    return kSuccess;
}

int cmd_analyze(const PairArgs& args, const std::string& in_path, std::size_t period, std::ostream& out) {
    BitSequence seq = [&] {
        if (!in_path.empty()) return read_sequence(read_file(in_path)).bits;
        if (args.p == 0 || args.q == 0) throw CLI::ValidationError("analyze needs --in or both --p and --q");
        return generate_threshold(PrimePair::relaxed(args.p, args.q));
    }();
    if (period != 0) {
        if (seq.length() % period != 0) {
            throw DomainError("sequence length " + std::to_string(seq.length()) + " is not a multiple of --period " +
                              std::to_string(period));
        }
        for (std::size_t t = period; t < seq.length(); ++t) {
            if (seq[t] != seq[t - period]) {
                throw DomainError("sequence is not " + std::to_string(period) + "-periodic (index " +
                                  std::to_string(t) + ")");
            }
        }
        seq = seq.prefix(period);
    }
    const Gf2Poly minpoly = minimal_polynomial_gcd(seq);
    const LfsrSynthesis lfsr = berlekamp_massey(seq.repeated(2));

    nlohmann::ordered_json j;
    j["n"] = seq.length();
    j["period"] = least_period(seq);
    j["lc"] = minpoly.degree().value_or(0);
    j["lc_berlekamp_massey"] = lfsr.length;
    j["ones"] = seq.count_ones();
    j["minimal_polynomial"] = minpoly.to_string();
    out << j.dump(2) << '\n';
    return lfsr.length == minpoly.degree().value_or(0) ? kSuccess : kMismatch;
}

int cmd_verify(const PairArgs& args, std::ostream& out) {
    const auto report = verify_theorem(PrimePair::relaxed(args.p, args.q));
    out << to_json(report).dump(2) << '\n';
    if (!report.theorem_applicable()) return kInapplicable;
    return report.match ? kSuccess : kMismatch;
}

int cmd_structure(const PairArgs& args, bool table, const AuditOptions& options, std::ostream& out,
                  std::ostream& err) {
    const auto pair = PrimePair::relaxed(args.p, args.q);
    if (!pair.divisibility_ok()) {
        err << "eqseq: p must divide q-1 for the structure audit\n";
        return kInapplicable;
    }
    const auto report = audit_structure(pair, options);
    if (table) {
        out << to_table(report);
    } else {
        out << to_json(report).dump(2) << '\n';
    }
    return report.all_ok() ? kSuccess : kMismatch;
}

int cmd_scan(u64 max_period, unsigned jobs, const std::string& csv_path, bool timing, std::ostream& out,
             std::ostream& err) {
    const u64 cap = period_budget_from_env();
    if (max_period > cap) {
        throw CLI::ValidationError("--max-period " + std::to_string(max_period) + " exceeds EQSEQ_MAX_PERIOD=" +
                                   std::to_string(cap));
    }
    ScanOptions options{max_period, jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs, timing};
    const auto rows = run_scan(options);
    write_output(csv_path, as_bytes(to_csv(rows, timing)), out);
    bool all_match = true;
    for (const auto& row : rows) {
        if (!row.diagnostic.empty()) err << "# p=" << row.p << " q=" << row.q << ": " << row.diagnostic << '\n';
        all_match = all_match && row.match;
    }
    return all_match ? kSuccess : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euler-quotient threshold sequences: generation and linear-complexity analysis", "eqseq"};
    app.require_subcommand(1);

    PairArgs gen_pair;
    std::string gen_format = "ascii";
    std::string gen_out = "-";
    auto* generate = app.add_subcommand("generate", "write one period of the sequence for (p, q)");
    add_pair_options(*generate, gen_pair, true);
    generate->add_option("--format", gen_format, "ascii or packed")->check(CLI::IsMember({"ascii", "packed"}));
    generate->add_option("--out", gen_out, "output path, '-' for stdout");

    PairArgs an_pair;
    std::string an_in;
    std::size_t an_period = 0;
    auto* analyze = app.add_subcommand("analyze", "linear complexity report for a sequence file or pair");
    add_pair_options(*analyze, an_pair, false);
    analyze->add_option("--in", an_in, "sequence file (ascii or packed)");
    analyze->add_option("--period", an_period, "treat the input as repetitions of this period");

    PairArgs ver_pair;
    auto* verify = app.add_subcommand("verify", "compare the minimal polynomial with the closed form");
    add_pair_options(*verify, ver_pair, true);

    PairArgs st_pair;
    bool st_table = false;
    AuditOptions st_options;
    auto* structure = app.add_subcommand("structure", "audit the coset structure behind the closed form");
    add_pair_options(*structure, st_pair, true);
    structure->add_flag("--table", st_table, "human-readable table instead of JSON");
    structure->add_option("--seed", st_options.seed, "seed for sampled checks above the exhaustive limit");
    structure->add_option("--samples", st_options.samples, "number of sampled checks");

    u64 scan_max = 0;
    unsigned scan_jobs = 0;
    std::string scan_csv = "-";
    bool scan_no_timing = false;
    auto* scan = app.add_subcommand("scan", "verify every qualifying pair up to a period bound");
    scan->add_option("--max-period", scan_max, "largest p*q^2 to include")->required();
    scan->add_option("--jobs", scan_jobs, "worker threads (0 = hardware concurrency)");
    scan->add_option("--csv", scan_csv, "CSV output path, '-' for stdout");
    scan->add_flag("--no-timing", scan_no_timing, "write millis as 0 for byte-reproducible output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*generate) return cmd_generate(gen_pair, gen_format, gen_out, out);
        if (*analyze) return cmd_analyze(an_pair, an_in, an_period, out);
        if (*verify) return cmd_verify(ver_pair, out);
        if (*structure) return cmd_structure(st_pair, st_table, st_options, out, err);
        if (*scan) return cmd_scan(scan_max, scan_jobs, scan_csv, !scan_no_timing, out, err);
    } catch (const IoError& e) {
        err << "eqseq: " << e.what() << '\n';
        return kIo;
    } catch (const DomainError& e) {
        err << "eqseq: " << e.what() << '\n';
        const std::string what = e.what();
        return what.find("p must divide q-1") != std::string::npos ? kInapplicable : kUsage;
    } catch (const ParseError& e) {
        err << "eqseq: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        err << "eqseq: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "eqseq: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace eqseq::cli
