#include "eqseq/seqio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>

#include "eqseq/errors.hpp"

namespace eqseq {

namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[offset + i]) << (8 * i);
    return value;
}

// Value of "key=<digits>" inside a header line, if present.
std::optional<std::uint64_t> header_field(std::string_view line, std::string_view key) {
    const std::string needle = std::string(key) + "=";
    std::size_t pos = line.find(needle);
    while (pos != std::string_view::npos && pos != 0 && !std::isspace(static_cast<unsigned char>(line[pos - 1]))) {
        pos = line.find(needle, pos + 1);
    }
    if (pos == std::string_view::npos) return std::nullopt;
    const char* begin = line.data() + pos + needle.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), value);
    if (ec != std::errc{}) return std::nullopt;
    return value;
}

}  // namespace

std::string write_ascii(const BitSequence& seq) {
    std::string out;
    if (seq.origin()) {
        out += "# eqseq p=" + std::to_string(seq.origin()->p()) + " q=" + std::to_string(seq.origin()->q()) +
               " N=" + std::to_string(seq.length()) + "\n";
    }
    out += seq.to_string();
    out += "\n";
    return out;
}

std::vector<std::uint8_t> write_packed(const BitSequence& seq) {
    std::vector<std::uint8_t> out(kPackedMagic.begin(), kPackedMagic.end());
    const auto p = seq.origin() ? static_cast<std::uint32_t>(seq.origin()->p()) : 0U;
    const auto q = seq.origin() ? static_cast<std::uint32_t>(seq.origin()->q()) : 0U;
    put_le<std::uint32_t>(out, p);
    put_le<std::uint32_t>(out, q);
    put_le<std::uint64_t>(out, seq.length());
    const std::size_t payload = (seq.length() + 7) / 8;
    const auto words = seq.words();
    for (std::size_t b = 0; b < payload; ++b) {
        out.push_back(static_cast<std::uint8_t>(words[b / 8] >> (8 * (b % 8))));
    }
    return out;
}

SequenceFile read_ascii(std::string_view text) {
    std::string bits;
    std::optional<std::uint64_t> declared_n;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> declared_pair;
    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view row = text.substr(pos, end - pos);
        const auto first = row.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && row[first] == '#') {
            if (row.find("eqseq") != std::string_view::npos) {
                declared_n = header_field(row, "N");
                const auto p = header_field(row, "p");
                const auto q = header_field(row, "q");
                if (p && q) declared_pair = std::pair{static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*q)};
            }
        } else {
            for (std::size_t i = 0; i < row.size(); ++i) {
                const char c = row[i];
                if (c == '0' || c == '1') {
                    bits.push_back(c);
                } else if (!std::isspace(static_cast<unsigned char>(c))) {
                    throw ParseError(std::string("unexpected character '") + c + "'", line, pos + i);
                }
            }
        }
        pos = end + 1;
        ++line;
    }
    if (bits.empty()) throw ParseError("no sequence bits found", line, text.size());
    if (declared_n && *declared_n != bits.size()) {
        throw ParseError("header declares N=" + std::to_string(*declared_n) + " but file holds " +
                             std::to_string(bits.size()) + " bits",
                         1, 0);
    }
    return {BitSequence::from_string(bits), declared_pair};
}

SequenceFile read_packed(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kPackedHeaderSize) throw ParseError("truncated packed header", 1, bytes.size());
    if (!std::equal(kPackedMagic.begin(), kPackedMagic.end(), bytes.begin())) {
        throw ParseError("bad packed magic", 1, 0);
    }
    const auto p = get_le<std::uint32_t>(bytes, 8);
    const auto q = get_le<std::uint32_t>(bytes, 12);
    const auto n = get_le<std::uint64_t>(bytes, 16);
    if (n == 0) throw ParseError("packed file declares N=0", 1, 16);
    const std::uint64_t payload = (n + 7) / 8;
    if (bytes.size() - kPackedHeaderSize != payload) {
        throw ParseError("payload holds " + std::to_string(bytes.size() - kPackedHeaderSize) + " bytes, expected " +
                             std::to_string(payload),
                         1, std::min<std::size_t>(bytes.size(), kPackedHeaderSize + payload));
    }
    if (n % 8 != 0) {
        const std::uint8_t last = bytes[bytes.size() - 1];
        if ((last >> (n % 8)) != 0) throw ParseError("nonzero trailing bits", 1, bytes.size() - 1);
    }
    BitSequence seq(n);
    for (std::uint64_t t = 0; t < n; ++t) {
        if ((bytes[kPackedHeaderSize + t / 8] >> (t % 8)) & 1U) seq.set(t, true);
    }
    SequenceFile file{std::move(seq), std::nullopt};
    if (p != 0 || q != 0) file.declared_pair = std::pair{p, q};
    return file;
}

SequenceFile read_sequence(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= kPackedMagic.size() && std::equal(kPackedMagic.begin(), kPackedMagic.end(), bytes.begin())) {
        return read_packed(bytes);
    }
    return read_ascii(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace eqseq
