#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dnacodec/image.hpp"

namespace dnacodec {

/// One 8x8 block after quantization, zigzag scan and run-length coding:
/// the DC difference against the previous block plus (zero run, value) pairs
/// for the nonzero AC coefficients in zigzag order. A run of 16+ zeros is
/// split into (15, 0) zero-run-extension entries; trailing zeros are implied
/// by the end of the list (the entropy coders emit the end-of-block symbol).
struct Block {
    std::int32_t dc_diff = 0;
    std::vector<std::pair<std::uint8_t, std::int32_t>> ac; // (run 0..15, value)

    bool operator==(const Block&) const = default;
};

/// Quantized index stream for a whole image, blocks in raster order over the
/// padded dimensions.
struct BlockIndexStream {
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<Block> blocks;

    bool operator==(const BlockIndexStream&) const = default;
};

/// Standard luminance base matrix scaled by the usual quality law:
/// scale = 5000/q for q < 50 else 200 - 2q; entry = clamp((base*scale+50)/100, 1, 255).
std::array<std::uint16_t, 64> quant_matrix(int quality);

/// Zigzag position -> row-major block index.
const std::array<int, 64>& zigzag_order();

/// Level shift, 2-D DCT, quantization, zigzag, DC differencing and AC
/// run-length coding over the edge-padded image.
BlockIndexStream forward_pipeline(const ImageGray8& img, int quality);

/// Exact inverse of the lossy-domain part: dequantize, inverse DCT, level
/// shift back, clamp, crop to width x height.
ImageGray8 inverse_pipeline(const BlockIndexStream& indices, int quality,
                            int width, int height);

} // namespace dnacodec
