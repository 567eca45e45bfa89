#include "eqseq/structverify.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "eqseq/errors.hpp"
#include "eqseq/lincomp.hpp"
#include "eqseq/sequence.hpp"

namespace eqseq {

namespace {

std::string str(u64 v) { return std::to_string(v); }

void merge(CheckResult& into, const CheckResult& from) {
    for (const auto& f : from.failures) into.fail(f);
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += "; ";
        out += part;
    }
    return out;
}

// Units of Z_{pq^2} in ascending order.
std::vector<u64> units_of(const CosetPartition& partition) {
    std::vector<u64> units;
    const auto index = partition.index_array();
    for (u64 t = 0; t < index.size(); ++t) {
        if (index[t] != CosetPartition::kNonUnit) units.push_back(t);
    }
    return units;
}

// Sorted set {factor * v mod n : v in values}.
std::vector<u64> scaled_set(std::span<const u64> values, u64 factor, u64 n) {
    std::vector<u64> out;
    out.reserve(values.size());
    for (u64 v : values) out.push_back(mul_mod(factor, v, n));
    std::sort(out.begin(), out.end());
    return out;
}

bool same_set(std::vector<u64> sorted_candidate, std::span<const u64> sorted_target) {
    return std::equal(sorted_candidate.begin(), sorted_candidate.end(), sorted_target.begin(), sorted_target.end());
}

}  // namespace

Gf2Poly coset_polynomial(const CosetPartition& partition, u64 l) {
    const auto members = partition.coset(l);
    std::vector<std::size_t> exponents(members.begin(), members.end());
    return Gf2Poly::from_exponents(exponents);
}

CheckResult check_kernel_image(const PrimePair& pair, const GroupGenerators& gens, const EulerQuotientTable& table,
                               const CosetPartition& partition, const AuditOptions& options) {
    CheckResult result;
    const u64 n = pair.period();
    const u64 pq = pair.pq();

    // Every unit factors uniquely as g^i h^j, 0 <= i < qe, 0 <= j < d.
    {
        std::vector<char> hit(n, 0);
        u64 distinct = 0;
        u64 gi = 1;
        for (u64 i = 0; i < pair.q() * pair.e(); ++i) {
            u64 value = gi;
            for (u64 j = 0; j < pair.d(); ++j) {
                if (!hit[value]) {
                    hit[value] = 1;
                    ++distinct;
                }
                value = mul_mod(value, gens.h, n);
            }
            gi = mul_mod(gi, gens.g, n);
        }
        if (distinct != table.unit_count()) {
            result.fail("g^i h^j yields " + str(distinct) + " elements, expected " + str(table.unit_count()));
        }
        for (u64 t = 0; t < n; ++t) {
            if (static_cast<bool>(hit[t]) != table.is_unit(t)) {
                result.fail("g^i h^j does not cover exactly the units (first difference at " + str(t) + ")");
                break;
            }
        }
    }

    // Kernel equals <g^q, h>.
    {
        std::vector<u64> generated;
        const u64 gq = pow_wide_mod(gens.g, pair.q(), n);
        u64 gqi = 1;
        for (u64 i = 0; i < pair.e(); ++i) {
            u64 value = gqi;
            for (u64 j = 0; j < pair.d(); ++j) {
                generated.push_back(value);
                value = mul_mod(value, gens.h, n);
            }
            gqi = mul_mod(gqi, gq, n);
        }
        std::sort(generated.begin(), generated.end());
        const bool distinct = std::adjacent_find(generated.begin(), generated.end()) == generated.end();
        if (!distinct || generated.size() != pair.phi_pq()) {
            result.fail("<g^q, h> does not have (p-1)(q-1) distinct elements");
        }
        if (!same_set(generated, partition.coset(0))) result.fail("kernel of psi differs from <g^q, h>");
        if (table[gq] != 0) result.fail("psi(g^q) = " + str(table[gq]) + ", expected 0");
        if (table[gens.h] != 0) result.fail("psi(h) = " + str(table[gens.h]) + ", expected 0");
    }

    // Image is exactly p*Z_pq.
    {
        std::vector<char> seen(pq, 0);
        for (u64 t = 0; t < n; ++t) {
            if (table.is_unit(t)) seen[table[t]] = 1;
        }
        for (u64 v = 0; v < pq; ++v) {
            const bool expected = v % pair.p() == 0;
            if (static_cast<bool>(seen[v]) != expected) {
                result.fail("image of psi " + std::string(expected ? "misses " : "contains ") + str(v));
                break;
            }
        }
    }

    // Homomorphism on units.
    {
        const auto units = units_of(partition);
        auto check = [&](u64 u, u64 v) {
            const u64 lhs = table[mul_mod(u, v, n)];
            const u64 rhs = (table[u] + table[v]) % pq;
            if (lhs != rhs) {
                result.fail("psi(" + str(u) + "*" + str(v) + ") = " + str(lhs) + ", expected " + str(rhs));
                return false;
            }
            return true;
        };
        if (n <= options.exhaustive_limit) {
            for (u64 u : units) {
                bool ok = true;
                for (u64 v : units) {
                    if (!(ok = check(u, v))) break;
                }
                if (!ok) break;
            }
        } else {
            std::mt19937_64 rng(options.seed);
            std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
            for (std::size_t s = 0; s < options.samples; ++s) {
                if (!check(units[pick(rng)], units[pick(rng)])) break;
            }
        }
    }
    return result;
}

CheckResult check_partition(const PrimePair& pair, const GroupGenerators& gens, const EulerQuotientTable& table,
                            const CosetPartition& partition) {
    CheckResult result;
    const u64 n = pair.period();
    const u64 q = pair.q();
    const u64 expected_size = pair.phi_pq();

    if (partition.coset_count() != q) result.fail("expected q cosets, found " + str(partition.coset_count()));

    std::vector<char> covered(n, 0);
    auto cover = [&](std::span<const u64> members, const std::string& name) {
        for (u64 t : members) {
            if (t >= n || covered[t]) {
                result.fail(name + " overlaps another part at " + str(t));
                return;
            }
            covered[t] = 1;
        }
    };
    for (u64 l = 0; l < partition.coset_count(); ++l) {
        const auto members = partition.coset(l);
        if (members.size() != expected_size) {
            result.fail("|D_" + str(l) + "| = " + str(members.size()) + ", expected " + str(expected_size));
        }
        for (u64 t : members) {
            if (table[t] != pair.p() * l) result.fail(str(t) + " placed in D_" + str(l) + " but psi = " + str(table[t]));
        }
        cover(members, "D_" + str(l));
    }
    cover(partition.non_units(), "P");
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) result.fail("partition does not cover Z_pq^2");
    const u64 expected_p = n - q * expected_size;
    if (partition.non_units().size() != expected_p) {
        result.fail("|P| = " + str(partition.non_units().size()) + ", expected " + str(expected_p));
    }
    for (u64 t : partition.non_units()) {
        if (gcd_u64(t, pair.pq()) == 1) {
            result.fail("unit " + str(t) + " placed in P");
            break;
        }
    }

    // D_l = ghat^l D_0
    u64 ghat_l = 1;
    for (u64 l = 0; l < q; ++l) {
        if (!same_set(scaled_set(partition.coset(0), ghat_l, n), partition.coset(l))) {
            result.fail("ghat^" + str(l) + " * D_0 differs from D_" + str(l));
        }
        ghat_l = mul_mod(ghat_l, gens.ghat, n);
    }

    // The upper cosets sum to the generating polynomial of the sequence.
    Gf2Poly upper;
    for (u64 l = (q + 1) / 2; l < q; ++l) upper += coset_polynomial(partition, l);
    if (!(upper == generating_polynomial(generate_threshold(table)))) {
        result.fail("sum of D_(q+1)/2 .. D_(q-1) is not the generating polynomial of the sequence");
    }
    return result;
}

CheckResult check_translation(const PrimePair& pair, const CosetPartition& partition, const AuditOptions& options) {
    CheckResult result;
    const u64 n = pair.period();
    const u64 q = pair.q();
    const auto index = partition.index_array();
    const auto units = units_of(partition);

    if (n <= options.exhaustive_limit) {
        // For each unit u in D_j, v -> uv is injective and lands in D_{i+j}
        // for every v in D_i, so u*D_i = D_{i+j} by cardinality.
        std::vector<u64> stamp(n, 0);
        for (u64 u : units) {
            const u64 j = static_cast<u64>(index[u]);
            for (u64 v : units) {
                const u64 uv = mul_mod(u, v, n);
                const auto target = index[uv];
                if (stamp[uv] == u + 1) {
                    result.fail("multiplication by " + str(u) + " is not injective");
                    return result;
                }
                stamp[uv] = u + 1;
                if (target == CosetPartition::kNonUnit ||
                    static_cast<u64>(target) != (static_cast<u64>(index[v]) + j) % q) {
                    result.fail(str(u) + "*" + str(v) + " not in D_(i+j)");
                    return result;
                }
            }
        }
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::size_t> pick_unit(0, units.size() - 1);
        std::uniform_int_distribution<u64> pick_coset(0, q - 1);
        for (std::size_t s = 0; s < options.samples; ++s) {
            const u64 u = units[pick_unit(rng)];
            const u64 i = pick_coset(rng);
            const u64 j = static_cast<u64>(index[u]);
            if (!same_set(scaled_set(partition.coset(i), u, n), partition.coset((i + j) % q))) {
                result.fail(str(u) + "*D_" + str(i) + " differs from D_" + str((i + j) % q));
                break;
            }
        }
    }

    // Doubling shifts coset indices by sigma, the coset of 2.
    const auto sigma = partition.index_of(2);
    if (!sigma) {
        result.fail("2 is not a unit");
        return result;
    }
    for (u64 l = 0; l < q; ++l) {
        if (!same_set(scaled_set(partition.coset(l), 2, n), partition.coset((l + *sigma) % q))) {
            result.fail("2*D_" + str(l) + " differs from D_" + str((l + *sigma) % q));
        }
    }
    return result;
}

namespace {

// Checks that members mod m hit each residue r with multiplicity expected(r).
template <typename Expected>
void check_multiset(CheckResult& result, std::span<const u64> members, u64 m, Expected expected,
                    const std::string& label) {
    std::vector<u64> counts(m, 0);
    for (u64 t : members) ++counts[t % m];
    for (u64 r = 0; r < m; ++r) {
        const auto want = static_cast<u64>(expected(r));
        if (counts[r] != want) {
            result.fail(label + ": residue " + str(r) + " mod " + str(m) + " appears " + str(counts[r]) +
                        " times, expected " + str(want));
            return;
        }
    }
}

}  // namespace

CheckResult check_residues_mod_p_q(const PrimePair& pair, const CosetPartition& partition) {
    CheckResult result;
    const u64 p = pair.p();
    const u64 q = pair.q();
    for (u64 l = 0; l < q; ++l) {
        const auto members = partition.coset(l);
        const std::string label = "D_" + str(l);
        check_multiset(result, members, p, [&](u64 r) { return r == 0 ? 0 : q - 1; }, label);
        check_multiset(result, members, q, [&](u64 r) { return r == 0 ? 0 : p - 1; }, label);
    }
    return result;
}

CheckResult check_residues_mod_pq(const PrimePair& pair, const CosetPartition& partition) {
    CheckResult result;
    const u64 pq = pair.pq();
    for (u64 l = 0; l < pair.q(); ++l) {
        check_multiset(result, partition.coset(l), pq, [&](u64 r) { return gcd_u64(r, pq) == 1 ? 1 : 0; },
                       "D_" + str(l));
    }
    return result;
}

CheckResult check_residues_mod_q2(const PrimePair& pair, const GroupGenerators& gens,
                                  const CosetPartition& partition) {
    CheckResult result;
    const u64 q2 = pair.q2();
    const u64 gq = pow_wide_mod(gens.g % q2, pair.q(), q2);
    std::vector<u64> subgroup;
    for (u64 x = 1;;) {
        subgroup.push_back(x);
        x = mul_mod(x, gq, q2);
        if (x == 1) break;
    }
    const u64 ghat = gens.ghat % q2;
    u64 ghat_l = 1;
    for (u64 l = 0; l < pair.q(); ++l) {
        std::vector<char> in_coset(q2, 0);
        for (u64 x : subgroup) in_coset[mul_mod(ghat_l, x, q2)] = 1;
        const auto members = partition.coset(l);
        if (subgroup.size() * (pair.p() - 1) != members.size()) {
            result.fail("|ghat^" + str(l) + "<g^q>| * (p-1) = " + str(subgroup.size() * (pair.p() - 1)) +
                        " differs from |D_" + str(l) + "| = " + str(members.size()));
        }
        check_multiset(result, members, q2, [&](u64 r) { return in_coset[r] ? pair.p() - 1 : 0; }, "D_" + str(l));
        ghat_l = mul_mod(ghat_l, ghat, q2);
    }
    return result;
}

CheckResult check_residue_multisets(const PrimePair& pair, const GroupGenerators& gens,
                                    const CosetPartition& partition) {
    CheckResult result;
    merge(result, check_residues_mod_p_q(pair, partition));
    merge(result, check_residues_mod_pq(pair, partition));
    merge(result, check_residues_mod_q2(pair, gens, partition));
    return result;
}

CheckResult check_coset_congruences(const PrimePair& pair, const CosetPartition& partition) {
    CheckResult result;
    const Gf2Poly phi_pq = cyclotomic_f2(pair.pq());
    const std::pair<std::string, Gf2Poly> zero_moduli[] = {
        {"Phi_p", cyclotomic_f2(pair.p())},
        {"Phi_q", cyclotomic_f2(pair.q())},
        {"Phi_q^2", cyclotomic_f2(pair.q2())},
    };
    for (u64 l = 0; l < pair.q(); ++l) {
        const Gf2Poly dl = coset_polynomial(partition, l);
        if (!(mod(dl, phi_pq) == Gf2Poly::one())) result.fail("D_" + str(l) + "(x) is not 1 mod Phi_pq");
        for (const auto& [name, modulus] : zero_moduli) {
            if (!mod(dl, modulus).is_zero()) result.fail("D_" + str(l) + "(x) is not 0 mod " + name);
        }
    }
    return result;
}

CheckResult check_unit_sum_congruences(const PrimePair& pair, const CosetPartition& partition) {
    CheckResult result;
    Gf2Poly sum;
    for (u64 l = 0; l < pair.q(); ++l) sum += coset_polynomial(partition, l);
    if (!(mod(sum, cyclotomic_f2(pair.pq())) == Gf2Poly::one())) result.fail("sum of D_l(x) is not 1 mod Phi_pq");
    const Gf2Poly product = cyclotomic_f2(pair.p()) * cyclotomic_f2(pair.q()) * cyclotomic_f2(pair.q2()) *
                            cyclotomic_f2(pair.period());
    if (!mod(sum, product).is_zero()) result.fail("sum of D_l(x) is not 0 mod Phi_p Phi_q Phi_q^2 Phi_pq^2");
    return result;
}

CheckResult check_congruences(const PrimePair& pair, const CosetPartition& partition) {
    CheckResult result;
    merge(result, check_coset_congruences(pair, partition));
    merge(result, check_unit_sum_congruences(pair, partition));
    return result;
}

u64 two_coset_index(const PrimePair& pair) {
    if (!pair.divisibility_ok() || !wieferich_condition_ok(pair.q())) {
        throw ContractError("two_coset_index requires p | q-1 and 2^(q-1) != 1 mod q^2");
    }
    const u64 sigma = *coset_index(2, pair);
    if (sigma == 0) throw InternalError("2 lies in D_0 although 2^(q-1) != 1 mod q^2");
    return sigma;
}

StructureReport audit_structure(const PrimePair& pair, const AuditOptions& options) {
    if (!pair.divisibility_ok()) throw ContractError("structure audit requires p | q-1");
    const auto table = EulerQuotientTable::build(pair);
    const auto partition = build_partition(table);
    const auto gens = make_generators(pair);

    StructureReport report;
    report.p = pair.p();
    report.q = pair.q();
    report.sigma = *partition.index_of(2);

    auto record = [&report](bool& flag, const std::string& key, const CheckResult& check) {
        flag = check.ok;
        if (!check.ok) report.details[key] = join(check.failures);
    };
    record(report.lemma2_ok, "lemma2", check_kernel_image(pair, gens, table, partition, options));
    record(report.lemma3_ok, "lemma3", check_partition(pair, gens, table, partition));
    record(report.lemma4_ok, "lemma4", check_translation(pair, partition, options));
    record(report.lemma5_ok, "lemma5", check_residues_mod_p_q(pair, partition));
    record(report.lemma6_ok, "lemma6", check_residues_mod_pq(pair, partition));
    record(report.lemma7_ok, "lemma7", check_residues_mod_q2(pair, gens, partition));
    record(report.lemma8_ok, "lemma8", check_coset_congruences(pair, partition));
    record(report.lemma9_ok, "lemma9", check_unit_sum_congruences(pair, partition));
    return report;
}

}  // namespace eqseq
