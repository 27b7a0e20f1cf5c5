#include "dnacodec/fixedlen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dnacodec/bytesio.hpp"
#include "dnacodec/kernels/kernels.hpp"
#include "dnacodec/paircode.hpp"
#include "dnacodec/transcode.hpp"

namespace dnacodec {
namespace fixedlen {

std::size_t Layout::payload_nt() const {
    std::size_t total = 0;
    for (const Subband& s : subbands)
        total += s.coefficient_count() * static_cast<std::size_t>(s.codeword_len);
    return total;
}

std::size_t Layout::payload_offset_of(std::size_t subband_index) const {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < subband_index; ++i)
        offset += subbands[i].coefficient_count() *
                  static_cast<std::size_t>(subbands[i].codeword_len);
    return offset;
}

std::vector<std::uint8_t> Layout::to_bytes() const {
    ByteWriter w;
    w.raw("FL1");
    w.u16(static_cast<std::uint16_t>(width));
    w.u16(static_cast<std::uint16_t>(height));
    w.u8(static_cast<std::uint8_t>(levels));
    for (const Subband& s : subbands) {
        w.f64(s.step);
        w.i32(s.min_index);
        w.u8(static_cast<std::uint8_t>(s.codeword_len));
    }
    return w.take();
}

namespace {

// Subband geometry in encoding order: LL, then HL/LH/HH from the coarsest
// decomposition level down to the finest.
std::vector<Subband> subband_geometry(int padded_w, int padded_h, int levels) {
    std::vector<Subband> bands;
    const int llw = padded_w >> levels;
    const int llh = padded_h >> levels;
    bands.push_back({0, 0, llw, llh, 1.0, 0, 2});
    for (int d = levels; d >= 1; --d) {
        const int w = padded_w >> d;
        const int h = padded_h >> d;
        bands.push_back({w, 0, w, h, 1.0, 0, 2}); // HL
        bands.push_back({0, h, w, h, 1.0, 0, 2}); // LH
        bands.push_back({w, h, w, h, 1.0, 0, 2}); // HH
    }
    return bands;
}

int pad_dim(int v, int levels) {
    const int m = 1 << levels;
    return (v + m - 1) / m * m;
}

} // namespace

Layout Layout::from_bytes(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    r.expect("FL1");
    Layout layout;
    layout.width = r.u16();
    layout.height = r.u16();
    layout.levels = r.u8();
    if (layout.width == 0 || layout.height == 0 || layout.levels < 1 || layout.levels > 8)
        throw FormatError("invalid fixed-length layout header");
    layout.padded_width = pad_dim(layout.width, layout.levels);
    layout.padded_height = pad_dim(layout.height, layout.levels);
    layout.subbands =
        subband_geometry(layout.padded_width, layout.padded_height, layout.levels);
    for (Subband& s : layout.subbands) {
        s.step = r.f64();
        s.min_index = r.i32();
        s.codeword_len = r.u8();
        if (!(s.step > 0.0) || !std::isfinite(s.step))
            throw FormatError("invalid quantizer step in layout");
        if (s.codeword_len < 2 || s.codeword_len > 18)
            throw FormatError("invalid codeword length in layout");
    }
    if (r.remaining() != 0)
        throw FormatError("trailing bytes after layout header");
    return layout;
}

void dwt_forward(Plane& plane, int width, int height, int levels) {
    if (width % (1 << levels) != 0 || height % (1 << levels) != 0)
        throw std::invalid_argument("plane dimensions must divide by 2^levels");
    const auto& k = kernels::ops();
    std::vector<double> evens(static_cast<std::size_t>(std::max(width, height)));
    std::vector<double> odds(evens.size());
    std::vector<double> lo(evens.size());
    std::vector<double> hi(evens.size());
    std::vector<double> colbuf(static_cast<std::size_t>(width) *
                               static_cast<std::size_t>(height));

    int rw = width, rh = height;
    for (int level = 0; level < levels; ++level) {
        // Horizontal pass over each row of the current LL region.
        const std::size_t half_w = static_cast<std::size_t>(rw) / 2;
        for (int y = 0; y < rh; ++y) {
            double* row = plane.data() + static_cast<std::size_t>(y) * width;
            for (std::size_t i = 0; i < half_w; ++i) {
                evens[i] = row[2 * i];
                odds[i] = row[2 * i + 1];
            }
            k.haar_fwd(evens.data(), odds.data(), row, row + half_w, half_w);
        }
        // Vertical pass: row pairs processed whole-row at a time.
        const std::size_t half_h = static_cast<std::size_t>(rh) / 2;
        for (std::size_t j = 0; j < half_h; ++j) {
            const double* a = plane.data() + (2 * j) * static_cast<std::size_t>(width);
            const double* b = plane.data() + (2 * j + 1) * static_cast<std::size_t>(width);
            double* s = colbuf.data() + j * static_cast<std::size_t>(width);
            double* d = colbuf.data() + (j + half_h) * static_cast<std::size_t>(width);
            k.haar_fwd(a, b, s, d, static_cast<std::size_t>(rw));
        }
        for (std::size_t y = 0; y < static_cast<std::size_t>(rh); ++y) {
            const double* src = colbuf.data() + y * static_cast<std::size_t>(width);
            double* dst = plane.data() + y * static_cast<std::size_t>(width);
            for (int x = 0; x < rw; ++x) dst[x] = src[x];
        }
        rw /= 2;
        rh /= 2;
    }
}

void dwt_inverse(Plane& plane, int width, int height, int levels) {
    if (width % (1 << levels) != 0 || height % (1 << levels) != 0)
        throw std::invalid_argument("plane dimensions must divide by 2^levels");
    const auto& k = kernels::ops();
    std::vector<double> lo(static_cast<std::size_t>(std::max(width, height)));
    std::vector<double> hi(lo.size());
    std::vector<double> evens(lo.size());
    std::vector<double> odds(lo.size());
    std::vector<double> colbuf(static_cast<std::size_t>(width) *
                               static_cast<std::size_t>(height));

    for (int level = levels - 1; level >= 0; --level) {
        const int rw = width >> level;
        const int rh = height >> level;
        // Vertical inverse first (the forward ran rows then columns).
        const std::size_t half_h = static_cast<std::size_t>(rh) / 2;
        for (std::size_t j = 0; j < half_h; ++j) {
            const double* s = plane.data() + j * static_cast<std::size_t>(width);
            const double* d = plane.data() + (j + half_h) * static_cast<std::size_t>(width);
            double* a = colbuf.data() + (2 * j) * static_cast<std::size_t>(width);
            double* b = colbuf.data() + (2 * j + 1) * static_cast<std::size_t>(width);
            k.haar_inv(s, d, a, b, static_cast<std::size_t>(rw));
        }
        for (std::size_t y = 0; y < static_cast<std::size_t>(rh); ++y) {
            const double* src = colbuf.data() + y * static_cast<std::size_t>(width);
            double* dst = plane.data() + y * static_cast<std::size_t>(width);
            for (int x = 0; x < rw; ++x) dst[x] = src[x];
        }
        // Horizontal inverse.
        const std::size_t half_w = static_cast<std::size_t>(rw) / 2;
        for (int y = 0; y < rh; ++y) {
            double* row = plane.data() + static_cast<std::size_t>(y) * width;
            k.haar_inv(row, row + half_w, evens.data(), odds.data(), half_w);
            for (std::size_t i = 0; i < half_w; ++i) {
                row[2 * i] = evens[i];
                row[2 * i + 1] = odds[i];
            }
        }
    }
}

Plane image_to_plane(const ImageGray8& img) {
    Plane plane(img.pixel_count());
    for (std::size_t i = 0; i < plane.size(); ++i)
        plane[i] = static_cast<double>(img.samples[i]);
    return plane;
}

namespace {

std::int32_t quantize_one(double coef, double step) {
    return static_cast<std::int32_t>(std::nearbyint(coef / step));
}

int smallest_covering_length(std::int64_t range) {
    for (int len = 2; len <= 18; ++len)
        if (paircode::capacity(len) >= range) return len;
    throw std::invalid_argument("coefficient range exceeds the codeword space");
}

Plane padded_plane(const ImageGray8& img, int levels, int& pw, int& ph) {
    pw = pad_dim(img.width, levels);
    ph = pad_dim(img.height, levels);
    const ImageGray8 padded = pad_to_multiple(img, 1 << levels);
    return image_to_plane(padded);
}

} // namespace

Layout make_layout(const ImageGray8& img, int levels, double base_step) {
    if (levels < 1 || levels > 8)
        throw std::invalid_argument("levels must be in 1..8");
    if (!(base_step > 0.0))
        throw std::invalid_argument("base step must be positive");

    Layout layout;
    layout.width = img.width;
    layout.height = img.height;
    layout.levels = levels;
    Plane plane = padded_plane(img, levels, layout.padded_width, layout.padded_height);
    dwt_forward(plane, layout.padded_width, layout.padded_height, levels);

    layout.subbands =
        subband_geometry(layout.padded_width, layout.padded_height, levels);
    // LL and the coarsest details keep base_step; every finer level doubles it.
    layout.subbands[0].step = base_step;
    for (std::size_t s = 1; s < layout.subbands.size(); ++s) {
        const int level_rank = static_cast<int>((s - 1) / 3); // 0 = coarsest details
        layout.subbands[s].step = base_step * static_cast<double>(1 << level_rank);
    }

    for (Subband& band : layout.subbands) {
        std::int32_t lo = 0, hi = 0;
        bool first = true;
        for (int y = band.y0; y < band.y0 + band.h; ++y)
            for (int x = band.x0; x < band.x0 + band.w; ++x) {
                const std::int32_t idx = quantize_one(
                    plane[static_cast<std::size_t>(y) * layout.padded_width + x], band.step);
                if (first) {
                    lo = hi = idx;
                    first = false;
                } else {
                    lo = std::min(lo, idx);
                    hi = std::max(hi, idx);
                }
            }
        band.min_index = lo;
        const std::int64_t range = static_cast<std::int64_t>(hi) - lo + 1;
        band.codeword_len = smallest_covering_length(range);
    }
    return layout;
}

EncodeResult encode_with_layout(const ImageGray8& img, const Layout& layout) {
    if (img.width != layout.width || img.height != layout.height)
        throw std::invalid_argument("image does not match layout dimensions");

    int pw = 0, ph = 0;
    Plane plane = padded_plane(img, layout.levels, pw, ph);
    if (pw != layout.padded_width || ph != layout.padded_height)
        throw std::invalid_argument("image does not match layout padding");
    dwt_forward(plane, pw, ph, layout.levels);

    EncodeResult result;
    result.layout = layout;

    const std::vector<std::uint8_t> header = layout.to_bytes();
    if (header.size() > 0xFFFF) throw FormatError("layout header too large");
    ByteWriter lw;
    lw.u16(static_cast<std::uint16_t>(header.size()));
    result.seq = transcode_bytes(lw.bytes());
    result.seq.append(transcode_bytes(header));
    result.seq.reserve(result.seq.size() + layout.payload_nt());

    for (const Subband& band : layout.subbands) {
        const std::int64_t range = paircode::capacity(band.codeword_len);
        for (int y = band.y0; y < band.y0 + band.h; ++y)
            for (int x = band.x0; x < band.x0 + band.w; ++x) {
                std::int32_t idx = quantize_one(
                    plane[static_cast<std::size_t>(y) * pw + x], band.step);
                std::int64_t stored = static_cast<std::int64_t>(idx) - band.min_index;
                if (stored < 0) {
                    stored = 0;
                    ++result.clamped;
                } else if (stored >= range) {
                    stored = range - 1;
                    ++result.clamped;
                }
                result.seq.append(paircode::codeword(band.codeword_len, stored));
            }
    }
    return result;
}

EncodeResult encode_fixed(const ImageGray8& img, int levels, double base_step) {
    return encode_with_layout(img, make_layout(img, levels, base_step));
}

CoefficientDecodeResult decode_fixed_coefficients(const NucleotideSequence& seq) {
    if (seq.size() < 10)
        throw FormatError("stream shorter than its length prefix");
    std::vector<std::uint8_t> len_bytes;
    try {
        len_bytes = detranscode_bytes(seq.subseq(0, 10));
    } catch (const CorruptStreamError&) {
        throw FormatError("undecodable stream length prefix");
    }
    const std::size_t head_len = (static_cast<std::size_t>(len_bytes[0]) << 8) | len_bytes[1];
    if (seq.size() < 10 + head_len * 5)
        throw FormatError("stream shorter than its declared header");
    std::vector<std::uint8_t> head_bytes;
    try {
        head_bytes = detranscode_bytes(seq.subseq(10, head_len * 5));
    } catch (const CorruptStreamError&) {
        throw FormatError("undecodable layout header");
    }

    CoefficientDecodeResult result;
    result.layout = Layout::from_bytes(head_bytes);
    result.header_nt = 10 + head_len * 5;
    result.plane.assign(static_cast<std::size_t>(result.layout.padded_width) *
                            result.layout.padded_height,
                        0.0);

    std::size_t pos = result.header_nt;
    std::size_t ordinal = 0;
    for (const Subband& band : result.layout.subbands) {
        const std::int64_t cap = paircode::capacity(band.codeword_len);
        for (int y = band.y0; y < band.y0 + band.h; ++y)
            for (int x = band.x0; x < band.x0 + band.w; ++x, ++ordinal) {
                const std::size_t len = static_cast<std::size_t>(band.codeword_len);
                double coef = 0.0;
                if (pos + len <= seq.size()) {
                    try {
                        const std::int64_t stored = paircode::index_of(seq.subseq(pos, len));
                        if (stored < cap) {
                            coef = static_cast<double>(band.min_index + stored) * band.step;
                        } else {
                            result.malformed.push_back(ordinal);
                        }
                    } catch (const CorruptStreamError&) {
                        result.malformed.push_back(ordinal);
                    }
                } else {
                    result.malformed.push_back(ordinal);
                }
                result.plane[static_cast<std::size_t>(y) * result.layout.padded_width + x] =
                    coef;
                pos += len;
            }
    }
    return result;
}

DecodeResult decode_fixed(const NucleotideSequence& seq) {
    CoefficientDecodeResult coeffs = decode_fixed_coefficients(seq);
    Plane plane = std::move(coeffs.plane);
    dwt_inverse(plane, coeffs.layout.padded_width, coeffs.layout.padded_height,
                coeffs.layout.levels);

    ImageGray8 padded(coeffs.layout.padded_width, coeffs.layout.padded_height);
    for (std::size_t i = 0; i < plane.size(); ++i) {
        const double r = std::nearbyint(plane[i]);
        padded.samples[i] = r < 0.0 ? 0 : (r > 255.0 ? 255 : static_cast<std::uint8_t>(r));
    }
    DecodeResult result;
    result.image = crop(padded, coeffs.layout.width, coeffs.layout.height);
    result.malformed = coeffs.malformed.size();
    return result;
}

} // namespace fixedlen
} // namespace dnacodec
