#pragma once

// Sequence file formats.
//
// ASCII: lines beginning with '#' are comments; every other non-whitespace
// character must be '0' or '1'. Generated files start with the header
//   # eqseq p=<p> q=<q> N=<N>
//
// Packed (little-endian throughout):
//   bytes 0..7    magic "EQSEQ\0\1\0"
//   bytes 8..11   p (u32, 0 for sequences without a pair)
//   bytes 12..15  q (u32)
//   bytes 16..23  N (u64)
//   then ceil(N/8) bytes, bit t = bit (t % 8) of byte t / 8, trailing bits zero.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqseq/sequence.hpp"

namespace eqseq {

enum class SequenceFormat { Ascii, Packed };

inline constexpr std::array<char, 8> kPackedMagic = {'E', 'Q', 'S', 'E', 'Q', '\0', '\x01', '\0'};
inline constexpr std::size_t kPackedHeaderSize = 24;

struct SequenceFile {
    BitSequence bits;
    /// (p, q) declared by the file header, when present.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> declared_pair;
};

std::string write_ascii(const BitSequence& seq);
std::vector<std::uint8_t> write_packed(const BitSequence& seq);

/// Throws ParseError with line and byte position on malformed input.
SequenceFile read_ascii(std::string_view text);
/// Throws ParseError with the byte offset on malformed input.
SequenceFile read_packed(std::span<const std::uint8_t> bytes);
/// Packed if the content starts with the magic, ASCII otherwise.
SequenceFile read_sequence(std::span<const std::uint8_t> bytes);

/// Filesystem failure while reading or writing a sequence file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace eqseq
