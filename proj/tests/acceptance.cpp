// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"

#include "eqseq/cli.hpp"
#include "eqseq/lincomp.hpp"
#include "eqseq/report.hpp"
#include "eqseq/seqio.hpp"
#include "eqseq/structverify.hpp"
#include "oracles.hpp"

using namespace eqseq;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

// Odd prime pairs with p | q-1 and p*q^2 <= bound, by trial division.
std::vector<std::pair<u64, u64>> sweep_pairs(u64 bound) {
    std::vector<std::pair<u64, u64>> pairs;
    for (u64 q = 5; 3 * q * q <= bound; q += 2) {
        if (!oracle::is_prime(q)) continue;
        for (u64 p = 3; p < q && p * q * q <= bound; p += 2) {
            if (oracle::is_prime(p) && (q - 1) % p == 0 && oracle::power_by_repetition(2, q - 1, q * q) != 1) {
                pairs.emplace_back(p, q);
            }
        }
    }
    return pairs;
}

std::string pair_str(u64 p, u64 q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

struct CliResult {
    int code;
    std::string out;
};

CliResult cli_run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

Outcome golden_reference() {
    Outcome o;
    const auto seq = generate_threshold(PrimePair::checked(3, 7));
    o.require(seq.to_string() == oracle::kReference37Bits, "bits differ from the reference listing");
    o.require(least_period(seq) == 147, "least period != 147");
    const auto bm = berlekamp_massey(seq.repeated(2));
    o.require(bm.length == 96, "Berlekamp-Massey LC = " + std::to_string(bm.length));
    const auto minpoly = minimal_polynomial_gcd(seq);
    o.require(minpoly.degree() == std::size_t{96}, "gcd-method LC != 96");
    o.require(minpoly == cyclotomic_f2(147) * cyclotomic_f2(21), "minimal polynomial != Phi_147 * Phi_21");
    o.require(minpoly == Gf2Poly::from_exponents(oracle::kReference37MinpolyExponents),
              "minimal polynomial differs from the printed one");
    return o;
}

Outcome theorem_sweep() {
    Outcome o;
    const auto pairs = sweep_pairs(100000);
    o.require(pairs.size() == 36, "expected 36 sweep pairs, found " + std::to_string(pairs.size()));
    for (auto [p, q] : pairs) {
        const auto r = verify_theorem(PrimePair::checked(p, q));
        const u64 expected_lc = q % 4 == 1 ? (p - 1) * (q * q - q) : (p - 1) * (q * q - 1);
        o.require(r.match, pair_str(p, q) + " match=false " + r.diagnostic);
        o.require(r.lc_empirical == expected_lc, pair_str(p, q) + " LC " + std::to_string(r.lc_empirical));
        o.require(r.lc_berlekamp_massey == expected_lc, pair_str(p, q) + " BM LC mismatch");
        o.require(r.period_found == p * q * q, pair_str(p, q) + " least period mismatch");
    }
    if (o.ok) o.detail = std::to_string(pairs.size()) + " pairs";
    return o;
}

Outcome structure_audit() {
    Outcome o;
    for (auto [p, q] : {std::pair<u64, u64>{3, 7}, {3, 13}, {5, 11}}) {
        const auto r = cli_run({"structure", "--p", std::to_string(p), "--q", std::to_string(q)});
        o.require(r.code == 0, pair_str(p, q) + " structure exit " + std::to_string(r.code));
        const auto j = nlohmann::json::parse(r.out);
        for (int k = 2; k <= 9; ++k) {
            const auto key = "lemma" + std::to_string(k) + "_ok";
            o.require(j.value(key, false), pair_str(p, q) + " " + key + " false");
        }
        // Shape and congruences recomputed here without the audit code.
        const auto pair = PrimePair::checked(p, q);
        const auto partition = build_partition(pair);
        const auto phi_pq = cyclotomic_f2(p * q);
        const auto zero_mod = cyclotomic_f2(p) * cyclotomic_f2(q) * cyclotomic_f2(q * q);
        for (u64 l = 0; l < q; ++l) {
            const auto coset = partition.coset(l);
            o.require(coset.size() == (p - 1) * (q - 1), pair_str(p, q) + " |D_l| wrong");
            std::vector<u64> by_p(p, 0);
            std::vector<u64> by_q(q, 0);
            Gf2Poly dl;
            for (u64 u : coset) {
                ++by_p[u % p];
                ++by_q[u % q];
                dl.set_coeff(u, true);
            }
            for (u64 r = 1; r < p; ++r) o.require(by_p[r] == q - 1, pair_str(p, q) + " mod p multiplicity");
            for (u64 r = 1; r < q; ++r) o.require(by_q[r] == p - 1, pair_str(p, q) + " mod q multiplicity");
            o.require(mod(dl, phi_pq) == Gf2Poly::one(), pair_str(p, q) + " D_l mod Phi_pq != 1");
            o.require(mod(dl, zero_mod).is_zero(), pair_str(p, q) + " D_l mod Phi_p Phi_q Phi_q^2 != 0");
        }
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 512;
        BitSequence s(n);
        for (std::size_t t = 0; t < n; ++t) s.set(t, rng() & 1U);
        const auto lfsr = berlekamp_massey(s.repeated(2));
        o.require(lfsr.length == linear_complexity(s), "LC disagreement at sample " + std::to_string(i));
        o.require(lfsr_generate(lfsr, s, n) == s, "LFSR does not regenerate sample " + std::to_string(i));
    }
    return o;
}

Outcome balance_formula() {
    Outcome o;
    for (auto [p, q] : sweep_pairs(100000)) {
        const auto seq = generate_threshold(PrimePair::checked(p, q));
        const u64 expected = (q - 1) / 2 * (p - 1) * (q - 1);
        const auto b = balance(seq);
        o.require(b.ones == expected, pair_str(p, q) + " ones " + std::to_string(b.ones));
        o.require(b.zeros + b.ones == p * q * q, pair_str(p, q) + " length");
    }
    o.require(balance(generate_threshold(PrimePair::checked(3, 7))).ones == 36, "(3,7) ones != 36");
    return o;
}

Outcome cyclotomic_identities() {
    Outcome o;
    for (u64 n = 1; n <= 1000; n += 2) {
        Gf2Poly product = Gf2Poly::one();
        for (u64 d : divisors(n)) product = product * cyclotomic_f2(d);
        o.require(product == Gf2Poly::x_pow_plus_one(n), "x^n + 1 factorization fails at n=" + std::to_string(n));
    }
    for (auto [p, q] : sweep_pairs(100000)) {
        const auto phi_pq = cyclotomic_f2(p * q);
        o.require(cyclotomic_f2(p * q * q) == compose_power(phi_pq, q), pair_str(p, q) + " Phi_pq^2 != Phi_pq(x^q)");
        const auto phi_q = cyclotomic_f2(q);
        o.require(phi_pq == exact_div(compose_power(phi_q, p), phi_q), pair_str(p, q) + " Phi_pq identity");
    }
    return o;
}

Outcome cli_round_trip() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("eqseq-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    for (const std::string format : {"ascii", "packed"}) {
        const auto path = (dir / ("example." + format)).string();
        o.require(cli_run({"generate", "--p", "3", "--q", "7", "--format", format, "--out", path}).code == 0,
                  format + " generate failed");
        const auto bits = read_sequence(read_file(path)).bits;
        o.require(bits.to_string() == oracle::kReference37Bits, format + " file bits differ");
        const auto r = cli_run({"analyze", "--in", path});
        o.require(r.code == 0, format + " analyze exit " + std::to_string(r.code));
        const auto j = nlohmann::json::parse(r.out);
        o.require(j["period"] == 147 && j["lc"] == 96 && j["lc_berlekamp_massey"] == 96, format + " analyze numbers");
        o.require(j["minimal_polynomial"] == (cyclotomic_f2(147) * cyclotomic_f2(21)).to_string(),
                  format + " analyze minimal polynomial");
    }
    std::filesystem::remove_all(dir);

    // p*q^2 <= 1000 admits (3,7) = 147, (3,13) = 507 and (5,11) = 605.
    const auto scan = cli_run({"scan", "--max-period", "1000", "--no-timing"});
    o.require(scan.code == 0, "scan exit " + std::to_string(scan.code));
    std::istringstream lines(scan.out);
    std::string line;
    std::getline(lines, line);
    o.require(line == kScanCsvHeader, "scan header");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    const std::vector<std::string> expected = {
        "3,7,3,true,true,147,96,96,true,2,0",
        "3,13,1,true,true,507,312,312,true,5,0",
        "5,11,3,true,true,605,480,480,true,3,0",
    };
    o.require(rows == expected, "scan rows differ from the enumeration (3,7), (3,13), (5,11)");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string name;
        std::function<Outcome()> run;
        double limit_seconds;  // 0 for no time limit
    };
    const std::vector<Criterion> criteria = {
        {1, "golden (3,7) sequence (bits, period 147, LC 96, minimal polynomial)", golden_reference, 1.0},
        {2, "closed-form LC and minimal polynomial for every pair with pq^2 <= 100000", theorem_sweep, 60.0},
        {3, "structure audit for (3,7), (3,13), (5,11)", structure_audit, 10.0},
        {4, "gcd and Berlekamp-Massey agree on 200 random sequences", oracle_equivalence, 0.0},
        {5, "ones count ((q-1)/2)(p-1)(q-1) for every sweep pair", balance_formula, 0.0},
        {6, "cyclotomic identities over GF(2)", cyclotomic_identities, 10.0},
        {7, "CLI generate/analyze round trip and scan to 1000", cli_round_trip, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds && outcome.ok) {
            outcome.ok = false;
            outcome.detail = "took " + std::to_string(seconds) + " s";
        }
        failures += outcome.ok ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                    seconds, outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
