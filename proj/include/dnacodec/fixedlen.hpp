#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnacodec/image.hpp"
#include "dnacodec/nucleotide.hpp"

namespace dnacodec {
namespace fixedlen {

/// Row-major coefficient plane over the padded image dimensions.
using Plane = std::vector<double>;

struct Subband {
    int x0 = 0, y0 = 0;      // placement in the Mallat layout
    int w = 0, h = 0;
    double step = 1.0;       // uniform quantizer step
    std::int32_t min_index = 0;
    int codeword_len = 2;    // PAIRCODE length for this subband

    std::size_t coefficient_count() const noexcept {
        return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    }
};

/// Everything needed to locate and decode any coefficient without looking at
/// any other part of the stream: the fixed-length robustness property.
struct Layout {
    int width = 0, height = 0;           // original dimensions
    int padded_width = 0, padded_height = 0;
    int levels = 0;
    std::vector<Subband> subbands;       // LL first, then HL/LH/HH coarse to fine

    std::size_t payload_nt() const;      // sum of count * codeword_len
    std::size_t payload_offset_of(std::size_t subband_index) const;

    std::vector<std::uint8_t> to_bytes() const;
    static Layout from_bytes(const std::vector<std::uint8_t>& bytes);
};

/// Separable orthonormal Haar analysis, `levels` iterations on the LL band.
/// The plane dimensions must be divisible by 2^levels.
void dwt_forward(Plane& plane, int width, int height, int levels);
void dwt_inverse(Plane& plane, int width, int height, int levels);

Plane image_to_plane(const ImageGray8& img);

/// Pre-scan layout derivation: detail steps double per finer decomposition
/// level starting from base_step on LL and the coarsest details; per-subband
/// index ranges are measured and each codeword length is the smallest with
/// capacity covering the range.
Layout make_layout(const ImageGray8& img, int levels, double base_step);

struct EncodeResult {
    NucleotideSequence seq; // transcoded header + fixed-length codewords
    Layout layout;
    std::size_t clamped = 0; // indices clamped into the layout's range
};

EncodeResult encode_fixed(const ImageGray8& img, int levels, double base_step);
EncodeResult encode_with_layout(const ImageGray8& img, const Layout& layout);

struct CoefficientDecodeResult {
    Layout layout;
    Plane plane;                          // dequantized coefficients
    std::vector<std::size_t> malformed;   // global coefficient ordinals zeroed
    std::size_t header_nt = 0;            // payload starts here in the stream
};

/// Fixed-length parse: every coefficient's stream position follows from the
/// layout alone, so one bad codeword costs exactly one coefficient.
CoefficientDecodeResult decode_fixed_coefficients(const NucleotideSequence& seq);

struct DecodeResult {
    ImageGray8 image;
    std::size_t malformed = 0;
};

DecodeResult decode_fixed(const NucleotideSequence& seq);

} // namespace fixedlen
} // namespace dnacodec
