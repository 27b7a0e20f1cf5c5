#include "dnacodec/jpeg_pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dnacodec/kernels/kernels.hpp"

namespace dnacodec {

namespace {

// Annex K luminance table, row-major.
constexpr std::array<int, 64> kBaseLuminance = {
    16, 11, 10, 16, 24,  40,  51,  61,
    12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,
    14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,
    24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99,
};

} // namespace

std::array<std::uint16_t, 64> quant_matrix(int quality) {
    if (quality < 1 || quality > 100)
        throw std::invalid_argument("quality must be in 1..100, got " + std::to_string(quality));
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    std::array<std::uint16_t, 64> q{};
    for (int i = 0; i < 64; ++i) {
        int v = (kBaseLuminance[i] * scale + 50) / 100;
        if (v < 1) v = 1;
        if (v > 255) v = 255;
        q[i] = static_cast<std::uint16_t>(v);
    }
    return q;
}

const std::array<int, 64>& zigzag_order() {
    static const std::array<int, 64> order = [] {
        std::array<int, 64> z{};
        int idx = 0;
        for (int d = 0; d < 15; ++d) {
            // Diagonal d runs over cells with row+col = d, direction alternating.
            if (d % 2 == 0) {
                for (int r = std::min(d, 7); r >= std::max(0, d - 7); --r)
                    z[idx++] = r * 8 + (d - r);
            } else {
                for (int r = std::max(0, d - 7); r <= std::min(d, 7); ++r)
                    z[idx++] = r * 8 + (d - r);
            }
        }
        return z;
    }();
    return order;
}

BlockIndexStream forward_pipeline(const ImageGray8& img, int quality) {
    const auto q = quant_matrix(quality);
    const ImageGray8 padded = pad_to_multiple(img, 8);
    const auto& k = kernels::ops();
    const auto& zz = zigzag_order();

    BlockIndexStream stream;
    stream.blocks_x = padded.width / 8;
    stream.blocks_y = padded.height / 8;
    stream.blocks.reserve(static_cast<std::size_t>(stream.blocks_x) * stream.blocks_y);

    double block[64], coef[64];
    std::int32_t idx[64];
    std::uint8_t rowbuf[8];
    std::int32_t prev_dc = 0;

    for (int by = 0; by < stream.blocks_y; ++by) {
        for (int bx = 0; bx < stream.blocks_x; ++bx) {
            for (int r = 0; r < 8; ++r) {
                for (int c = 0; c < 8; ++c)
                    rowbuf[c] = padded.at(bx * 8 + c, by * 8 + r);
                k.u8_to_centered(rowbuf, block + r * 8, 8);
            }
            k.fdct8x8(block, coef);
            k.quantize8x8(coef, q.data(), idx);

            Block b;
            b.dc_diff = idx[0] - prev_dc;
            prev_dc = idx[0];
            int run = 0;
            for (int zi = 1; zi < 64; ++zi) {
                const std::int32_t v = idx[zz[static_cast<std::size_t>(zi)]];
                if (v == 0) {
                    ++run;
                } else {
                    while (run >= 16) { // zero-run extension
                        b.ac.emplace_back(static_cast<std::uint8_t>(15), 0);
                        run -= 16;
                    }
                    b.ac.emplace_back(static_cast<std::uint8_t>(run), v);
                    run = 0;
                }
            }
            // Trailing zeros are implied by the end of the block.
            stream.blocks.push_back(std::move(b));
        }
    }
    return stream;
}

ImageGray8 inverse_pipeline(const BlockIndexStream& indices, int quality,
                            int width, int height) {
    const auto q = quant_matrix(quality);
    const auto& k = kernels::ops();
    const auto& zz = zigzag_order();

    ImageGray8 padded(indices.blocks_x * 8, indices.blocks_y * 8);
    double coef[64], block[64];
    std::int32_t idx[64];
    std::uint8_t rowbuf[8];
    std::int32_t prev_dc = 0;

    std::size_t bi = 0;
    for (int by = 0; by < indices.blocks_y; ++by) {
        for (int bx = 0; bx < indices.blocks_x; ++bx, ++bi) {
            const Block& b = indices.blocks[bi];
            for (int i = 0; i < 64; ++i) idx[i] = 0;
            prev_dc += b.dc_diff;
            idx[0] = prev_dc;
            int zi = 1;
            for (const auto& [run, value] : b.ac) {
                zi += run;
                if (zi > 63)
                    throw std::invalid_argument("AC entries overrun the 8x8 block");
                idx[zz[static_cast<std::size_t>(zi)]] = value;
                ++zi;
            }
            k.dequantize8x8(idx, q.data(), coef);
            k.idct8x8(coef, block);
            for (int r = 0; r < 8; ++r) {
                k.centered_to_u8(block + r * 8, rowbuf, 8);
                for (int c = 0; c < 8; ++c)
                    padded.at(bx * 8 + c, by * 8 + r) = rowbuf[c];
            }
        }
    }
    return crop(padded, width, height);
}

} // namespace dnacodec
