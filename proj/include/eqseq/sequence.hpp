#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eqseq/ntcore.hpp"

namespace eqseq {

class EulerQuotientTable;
class CosetPartition;

/// One period of a binary sequence. Bit t lives in bit (t % 64) of word t / 64;
/// bits past `length` in the final word are always zero.
class BitSequence {
public:
    static constexpr std::size_t kWordBits = 64;

    /// All-zero sequence. Throws DomainError if length == 0.
    explicit BitSequence(std::size_t length, std::optional<PrimePair> origin = std::nullopt);

    /// From a string of '0'/'1' characters. Throws DomainError on anything else.
    static BitSequence from_string(std::string_view bits);

    std::size_t length() const noexcept { return length_; }
    const std::optional<PrimePair>& origin() const noexcept { return origin_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator[](std::size_t t) const noexcept { return (words_[t / kWordBits] >> (t % kWordBits)) & 1U; }
    void set(std::size_t t, bool value) noexcept;

    /// Bit at index t of the periodic extension.
    bool at(std::size_t t) const noexcept { return (*this)[t % length_]; }

    std::size_t count_ones() const noexcept;
    std::string to_string() const;

    /// Concatenation of `times` copies of this period (origin dropped).
    BitSequence repeated(std::size_t times) const;

    /// Bits [0, count) as a new sequence (origin dropped).
    BitSequence prefix(std::size_t count) const;

    friend bool operator==(const BitSequence& a, const BitSequence& b) noexcept {
        return a.length_ == b.length_ && a.words_ == b.words_;
    }

private:
    std::size_t length_;
    std::vector<std::uint64_t> words_;
    std::optional<PrimePair> origin_;
};

struct Balance {
    std::size_t zeros = 0;
    std::size_t ones = 0;
    friend bool operator==(const Balance&, const Balance&) = default;
};

/// Bit t is 1 iff 2*psi(t) >= pq.
BitSequence generate_threshold(const EulerQuotientTable& table);
BitSequence generate_threshold(const PrimePair& pair);

/// Bit t is 1 iff t lies in D_l for some l in [(q+1)/2, q). Throws DomainError
/// if the partition was built for a different pair.
BitSequence generate_by_cosets(const PrimePair& pair, const CosetPartition& partition);

/// Smallest divisor T of N with s[t+T] == s[t] for all t (indices mod N).
std::size_t least_period(const BitSequence& seq);

Balance balance(const BitSequence& seq) noexcept;

}  // namespace eqseq
