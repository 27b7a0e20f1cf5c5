#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnacodec/jpeg_pipeline.hpp"
#include "dnacodec/nucleotide.hpp"
#include "dnacodec/trit_coder.hpp"

namespace dnacodec {
namespace jpegdna {

// Symbol id conventions shared by the quaternary and binary entropy layers:
// DC symbols are the category itself; AC symbols pack (run << 4) | category,
// with EOB = 0x00 and the 16-zero extension ZRL = 0xF0.
inline constexpr int kEob = 0x00;
inline constexpr int kZrl = 0xF0;

struct Header {
    int width = 0;
    int height = 0;
    int quality = 0;
    trit::TernaryCode dc_table;
    trit::TernaryCode ac_table;

    int blocks_x() const noexcept { return (width + 7) / 8; }
    int blocks_y() const noexcept { return (height + 7) / 8; }

    std::vector<std::uint8_t> to_bytes() const;
    static Header from_bytes(const std::vector<std::uint8_t>& bytes);
};

/// A coded image: self-describing header plus the quaternary entropy payload.
/// On the wire the header bytes travel in front of the payload, transcoded at
/// 5 nt/byte behind a 2-byte length prefix, so the whole object is one strand.
struct JpegDnaStream {
    Header header;
    NucleotideSequence payload;

    NucleotideSequence to_sequence() const;
    static JpegDnaStream parse(const NucleotideSequence& seq); // FormatError if header bad
};

/// Two-pass quaternary entropy coder: Huffman-coded symbol categories as
/// rotation nucleotides, each nonzero value followed by its PAIRCODE word.
JpegDnaStream entropy_encode(const BlockIndexStream& indices, int width, int height,
                             int quality);

struct EntropyDecodeResult {
    BlockIndexStream indices;
    bool corrupted = false;
    std::size_t failure_position = 0; // payload nt offset of the first violation
    std::string failure_reason;
    std::vector<std::size_t> block_start_nt; // payload offset where each block began
    std::size_t blocks_decoded = 0;          // complete blocks before any failure
};

/// Inverse of entropy_encode on clean input. A structural violation stops the
/// walk; the remaining blocks are zero-filled and the failure recorded.
EntropyDecodeResult entropy_decode(const JpegDnaStream& stream);

JpegDnaStream encode_image(const ImageGray8& img, int quality);

struct ImageDecodeResult {
    ImageGray8 image;
    bool corrupted = false;
    std::size_t failure_position = 0;
    std::string failure_reason;
};

ImageDecodeResult decode_image(const JpegDnaStream& stream);

} // namespace jpegdna
} // namespace dnacodec
