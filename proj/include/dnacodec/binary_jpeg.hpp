#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dnacodec/bytesio.hpp"
#include "dnacodec/jpeg_pipeline.hpp"
#include "dnacodec/trit_coder.hpp" // FrequencyTable

namespace dnacodec {
namespace binjpeg {

/// MSB-first bit packing; the final partial byte is padded with 1 bits.
class BitWriter {
public:
    void put(std::uint32_t bits, int count);
    std::vector<std::uint8_t> finish();
    std::size_t bit_count() const noexcept { return total_bits_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint32_t acc_ = 0;
    int acc_bits_ = 0;
    std::size_t total_bits_ = 0;
};

class BitReader {
public:
    explicit BitReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}
    int bit(); // throws CorruptStreamError (bit position) past the end
    std::uint32_t bits(int count);
    std::size_t position() const noexcept { return pos_; }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

/// Canonical binary Huffman code; same tie-breaking and canonicalization
/// conventions as the ternary code (merge two lightest, ties by smallest
/// contained id, codes by ascending (length, id)). A lone symbol gets "0".
class BinaryCode {
public:
    static BinaryCode build(const trit::FrequencyTable& freqs);

    int length_of(int symbol) const;
    std::uint32_t bits_of(int symbol) const;
    bool contains(int symbol) const { return lengths_.count(symbol) != 0; }
    int max_length() const noexcept { return max_length_; }

    std::uint64_t weighted_length(const trit::FrequencyTable& freqs) const;

    /// [n u8][L u8][count of symbols per length 1..L][ids in canonical order]
    std::vector<std::uint8_t> serialize() const;
    static BinaryCode deserialize(ByteReader& reader);

    class Walker {
    public:
        explicit Walker(const BinaryCode& code);
        int step(int bit); // symbol id, -1 mid-code, throws on dead branch
        void reset() { node_ = 0; }

    private:
        const BinaryCode& code_;
        std::int32_t node_ = 0;
    };

private:
    friend class Walker;
    struct Node {
        std::int32_t child[2] = {-1, -1};
        int symbol = -1;
    };
    void assign_canonical(std::vector<std::pair<int, int>>& length_id);
    void build_tree();

    std::map<int, std::pair<int, std::uint32_t>> lengths_; // id -> (len, bits)
    std::vector<Node> nodes_;
    int max_length_ = 0;
};

/// Standard JPEG magnitude category: bit length of |v| (0 for v = 0).
int bit_category(std::int32_t v);

struct Header {
    int width = 0;
    int height = 0;
    int quality = 0;
    BinaryCode dc_table;
    BinaryCode ac_table;

    int blocks_x() const noexcept { return (width + 7) / 8; }
    int blocks_y() const noexcept { return (height + 7) / 8; }
};

/// Classical binary JPEG-style stream over the shared block index stream:
/// frequency-derived canonical Huffman for DC categories and AC (run,
/// category) symbols, standard magnitude bits for values. Packaged as
/// [len u16][header bytes][payload], an internal format rather than JFIF.
struct BinaryJpegStream {
    Header header;
    std::vector<std::uint8_t> payload;
    std::size_t payload_bits = 0;

    std::vector<std::uint8_t> to_bytes() const;
    static BinaryJpegStream parse(const std::vector<std::uint8_t>& bytes);
};

BinaryJpegStream entropy_encode(const BlockIndexStream& indices, int width, int height,
                                int quality);

struct DecodeResult {
    BlockIndexStream indices;
    bool corrupted = false;
    std::size_t failure_bit = 0;
    std::string failure_reason;
    std::size_t blocks_decoded = 0;
};

/// Truncate-and-zero-fill on structural violations, mirroring the quaternary
/// codec's corruption policy.
DecodeResult entropy_decode(const BinaryJpegStream& stream);

} // namespace binjpeg
} // namespace dnacodec
