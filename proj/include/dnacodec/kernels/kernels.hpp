#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace dnacodec {
namespace kernels {

// Data-parallel inner loops of the toolkit: the 8x8 DCT pair, quantization,
// Haar lifting steps, pixel conversion and the squared-error reduction.
//
// Every backend must produce BIT-IDENTICAL results to the scalar reference:
// the codecs' outputs may not depend on which backend happens to run. SIMD
// variants therefore vectorize across independent lanes only, never change
// summation order, never use FMA, and the whole project builds with
// -ffp-contract=off. The equivalence suite in tests/ enforces this.

enum class Backend { Scalar, Avx2 };

struct Ops {
    const char* name;

    // 2-D orthonormal DCT-II / DCT-III on a row-major 8x8 block of doubles.
    // Fixed evaluation order: rows first, then columns, each as an 8-point
    // basis-matrix product summed over k = 0..7 ascending.
    void (*fdct8x8)(const double* in, double* out);
    void (*idct8x8)(const double* in, double* out);

    // out[i] = nearbyint(coef[i] / q[i]) (round-half-even), and its inverse
    // out[i] = idx[i] * q[i]. 64 elements.
    void (*quantize8x8)(const double* coef, const std::uint16_t* q, std::int32_t* out);
    void (*dequantize8x8)(const std::int32_t* idx, const std::uint16_t* q, double* out);

    // Exact integer reduction: sum of (a[i]-b[i])^2.
    std::uint64_t (*sum_sq_diff_u8)(const std::uint8_t* a, const std::uint8_t* b,
                                    std::size_t n);

    // Orthonormal Haar butterfly over n independent pairs:
    //   s[i] = (a[i] + b[i]) * (1/sqrt 2),  d[i] = (a[i] - b[i]) * (1/sqrt 2)
    // and the inverse
    //   a[i] = (s[i] + d[i]) * (1/sqrt 2),  b[i] = (s[i] - d[i]) * (1/sqrt 2).
    void (*haar_fwd)(const double* a, const double* b, double* s, double* d, std::size_t n);
    void (*haar_inv)(const double* s, const double* d, double* a, double* b, std::size_t n);

    // Pixel <-> centered sample: out = in - 128.0 and
    // out = clamp(nearbyint(in + 128.0), 0, 255).
    void (*u8_to_centered)(const std::uint8_t* in, double* out, std::size_t n);
    void (*centered_to_u8)(const double* in, std::uint8_t* out, std::size_t n);
};

/// The active backend's function table. Selected once: the best available
/// backend, unless the DNACODEC_KERNELS environment variable ("scalar" or
/// "avx2") or set_backend() says otherwise.
const Ops& ops();

Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b); // throws std::runtime_error if unavailable
const Ops& ops_for(Backend b);

/// Shared 8-point DCT-II basis: basis[u*8+k] = c_u * 0.5 * cos((2k+1)u pi/16),
/// c_0 = 1/sqrt 2, c_u = 1 otherwise. One table for all backends.
const double* dct_basis();

inline constexpr double kHaarScale = 0.70710678118654752440; // 1/sqrt 2

} // namespace kernels
} // namespace dnacodec
