#include "eqseq/sequence.hpp"

#include <bit>
#include <string>

#include "eqseq/errors.hpp"
#include "eqseq/eulerq.hpp"
#include "eqseq/partition.hpp"

namespace eqseq {

BitSequence::BitSequence(std::size_t length, std::optional<PrimePair> origin)
    : length_(length), words_((length + kWordBits - 1) / kWordBits, 0), origin_(origin) {
    if (length == 0) throw DomainError("sequence length must be positive");
}

BitSequence BitSequence::from_string(std::string_view bits) {
    BitSequence seq(bits.size());
    for (std::size_t t = 0; t < bits.size(); ++t) {
        if (bits[t] == '1') {
            seq.set(t, true);
        } else if (bits[t] != '0') {
            throw DomainError("invalid bit character at index " + std::to_string(t));
        }
    }
    return seq;
}

void BitSequence::set(std::size_t t, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (t % kWordBits);
    if (value) {
        words_[t / kWordBits] |= mask;
    } else {
        words_[t / kWordBits] &= ~mask;
    }
}

std::size_t BitSequence::count_ones() const noexcept {
    std::size_t ones = 0;
    for (auto w : words_) ones += static_cast<std::size_t>(std::popcount(w));
    return ones;
}

std::string BitSequence::to_string() const {
    std::string out(length_, '0');
    for (std::size_t t = 0; t < length_; ++t) {
        if ((*this)[t]) out[t] = '1';
    }
    return out;
}

BitSequence BitSequence::repeated(std::size_t times) const {
    BitSequence out(length_ * times);
    for (std::size_t t = 0; t < out.length(); ++t) {
        if (at(t)) out.set(t, true);
    }
    return out;
}

BitSequence BitSequence::prefix(std::size_t count) const {
    BitSequence out(count);
    for (std::size_t t = 0; t < count; ++t) {
        if (at(t)) out.set(t, true);
    }
    return out;
}

BitSequence generate_threshold(const EulerQuotientTable& table) {
    const PrimePair& pair = table.pair();
    const u64 pq = pair.pq();
    BitSequence seq(table.size(), pair);
    for (u64 t = 0; t < table.size(); ++t) {
        if (2 * table[t] >= pq) seq.set(t, true);
    }
    return seq;
}

BitSequence generate_threshold(const PrimePair& pair) {
    return generate_threshold(EulerQuotientTable::build(pair));
}

BitSequence generate_by_cosets(const PrimePair& pair, const CosetPartition& partition) {
    if (!(partition.pair() == pair)) throw DomainError("partition was built for a different pair");
    BitSequence seq(pair.period(), pair);
    for (u64 l = (pair.q() + 1) / 2; l < pair.q(); ++l) {
        for (u64 t : partition.coset(l)) seq.set(t, true);
    }
    return seq;
}

std::size_t least_period(const BitSequence& seq) {
    const std::size_t n = seq.length();
    for (u64 candidate : divisors(n)) {
        const std::size_t shift = candidate;
        bool periodic = true;
        for (std::size_t t = 0; t < n && periodic; ++t) {
            periodic = seq[t] == seq[(t + shift) % n];
        }
        if (periodic) return shift;
    }
    return n;
}

Balance balance(const BitSequence& seq) noexcept {
    const std::size_t ones = seq.count_ones();
    return {seq.length() - ones, ones};
}

}  // namespace eqseq
