#include <cmath>
#include <cstring>

#include "dnacodec/kernels/kernels.hpp"

// Scalar reference backend. This file defines the semantics; every other
// backend must reproduce it bit for bit.

namespace dnacodec {
namespace kernels {
namespace {

void transpose8x8(const double* in, double* out) {
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            out[c * 8 + r] = in[r * 8 + c];
}

// out = B * M: out[u][c] = sum_k B[u][k] * m[k][c], k ascending.
void dct_cols(const double* m, double* out) {
    const double* basis = dct_basis();
    for (int u = 0; u < 8; ++u)
        for (int c = 0; c < 8; ++c) {
            double acc = 0.0;
            for (int k = 0; k < 8; ++k)
                acc = acc + basis[u * 8 + k] * m[k * 8 + c];
            out[u * 8 + c] = acc;
        }
}

// out = B^T * M: out[k][c] = sum_u B[u][k] * m[u][c], u ascending.
void idct_cols(const double* m, double* out) {
    const double* basis = dct_basis();
    for (int k = 0; k < 8; ++k)
        for (int c = 0; c < 8; ++c) {
            double acc = 0.0;
            for (int u = 0; u < 8; ++u)
                acc = acc + basis[u * 8 + k] * m[u * 8 + c];
            out[k * 8 + c] = acc;
        }
}

void fdct8x8_scalar(const double* in, double* out) {
    double t0[64], t1[64];
    transpose8x8(in, t0);
    dct_cols(t0, t1); // row transform
    transpose8x8(t1, t0);
    dct_cols(t0, out); // column transform
}

void idct8x8_scalar(const double* in, double* out) {
    double t0[64], t1[64];
    transpose8x8(in, t0);
    idct_cols(t0, t1);
    transpose8x8(t1, t0);
    idct_cols(t0, out);
}

void quantize8x8_scalar(const double* coef, const std::uint16_t* q, std::int32_t* out) {
    for (int i = 0; i < 64; ++i)
        out[i] = static_cast<std::int32_t>(std::nearbyint(coef[i] / static_cast<double>(q[i])));
}

void dequantize8x8_scalar(const std::int32_t* idx, const std::uint16_t* q, double* out) {
    for (int i = 0; i < 64; ++i)
        out[i] = static_cast<double>(idx[i]) * static_cast<double>(q[i]);
}

std::uint64_t sum_sq_diff_u8_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                    std::size_t n) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

void haar_fwd_scalar(const double* a, const double* b, double* s, double* d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = (a[i] + b[i]) * kHaarScale;
        d[i] = (a[i] - b[i]) * kHaarScale;
    }
}

void haar_inv_scalar(const double* s, const double* d, double* a, double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = (s[i] + d[i]) * kHaarScale;
        b[i] = (s[i] - d[i]) * kHaarScale;
    }
}

void u8_to_centered_scalar(const std::uint8_t* in, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<double>(in[i]) - 128.0;
}

void centered_to_u8_scalar(const double* in, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::nearbyint(in[i] + 128.0);
        out[i] = r < 0.0 ? 0 : (r > 255.0 ? 255 : static_cast<std::uint8_t>(r));
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",
        fdct8x8_scalar,
        idct8x8_scalar,
        quantize8x8_scalar,
        dequantize8x8_scalar,
        sum_sq_diff_u8_scalar,
        haar_fwd_scalar,
        haar_inv_scalar,
        u8_to_centered_scalar,
        centered_to_u8_scalar,
    };
    return ops;
}

} // namespace kernels
} // namespace dnacodec
