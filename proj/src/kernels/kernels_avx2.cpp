#ifdef DNACODEC_HAVE_AVX2

#include <immintrin.h>

#include <cmath>
#include <cstring>

#include "dnacodec/kernels/kernels.hpp"

// AVX2 backend. Lanes carry independent columns/elements; per-lane operation
// sequences mirror the scalar reference exactly (mul then add, no FMA), so
// results are bit-identical.

namespace dnacodec {
namespace kernels {
namespace {

void transpose8x8(const double* in, double* out) {
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            out[c * 8 + r] = in[r * 8 + c];
}

void dct_cols_avx2(const double* m, double* out) {
    const double* basis = dct_basis();
    for (int u = 0; u < 8; ++u) {
        __m256d acc_lo = _mm256_setzero_pd();
        __m256d acc_hi = _mm256_setzero_pd();
        for (int k = 0; k < 8; ++k) {
            const __m256d b = _mm256_set1_pd(basis[u * 8 + k]);
            acc_lo = _mm256_add_pd(acc_lo, _mm256_mul_pd(b, _mm256_loadu_pd(m + k * 8)));
            acc_hi = _mm256_add_pd(acc_hi, _mm256_mul_pd(b, _mm256_loadu_pd(m + k * 8 + 4)));
        }
        _mm256_storeu_pd(out + u * 8, acc_lo);
        _mm256_storeu_pd(out + u * 8 + 4, acc_hi);
    }
}

void idct_cols_avx2(const double* m, double* out) {
    const double* basis = dct_basis();
    for (int k = 0; k < 8; ++k) {
        __m256d acc_lo = _mm256_setzero_pd();
        __m256d acc_hi = _mm256_setzero_pd();
        for (int u = 0; u < 8; ++u) {
            const __m256d b = _mm256_set1_pd(basis[u * 8 + k]);
            acc_lo = _mm256_add_pd(acc_lo, _mm256_mul_pd(b, _mm256_loadu_pd(m + u * 8)));
            acc_hi = _mm256_add_pd(acc_hi, _mm256_mul_pd(b, _mm256_loadu_pd(m + u * 8 + 4)));
        }
        _mm256_storeu_pd(out + k * 8, acc_lo);
        _mm256_storeu_pd(out + k * 8 + 4, acc_hi);
    }
}

void fdct8x8_avx2(const double* in, double* out) {
    double t0[64], t1[64];
    transpose8x8(in, t0);
    dct_cols_avx2(t0, t1);
    transpose8x8(t1, t0);
    dct_cols_avx2(t0, out);
}

void idct8x8_avx2(const double* in, double* out) {
    double t0[64], t1[64];
    transpose8x8(in, t0);
    idct_cols_avx2(t0, t1);
    transpose8x8(t1, t0);
    idct_cols_avx2(t0, out);
}

void quantize8x8_avx2(const double* coef, const std::uint16_t* q, std::int32_t* out) {
    for (int i = 0; i < 64; i += 4) {
        const __m256d c = _mm256_loadu_pd(coef + i);
        const __m256d qv = _mm256_set_pd(q[i + 3], q[i + 2], q[i + 1], q[i]);
        const __m256d r = _mm256_round_pd(_mm256_div_pd(c, qv),
                                          _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm256_cvtpd_epi32(r));
    }
}

void dequantize8x8_avx2(const std::int32_t* idx, const std::uint16_t* q, double* out) {
    for (int i = 0; i < 64; i += 4) {
        const __m256d v = _mm256_cvtepi32_pd(_mm_loadu_si128(
            reinterpret_cast<const __m128i*>(idx + i)));
        const __m256d qv = _mm256_set_pd(q[i + 3], q[i + 2], q[i + 1], q[i]);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(v, qv));
    }
}

std::uint64_t sum_sq_diff_u8_avx2(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256i av = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
        const __m256i bv = _mm256_cvtepu8_epi16(
            _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
        const __m256i d = _mm256_sub_epi16(av, bv);
        const __m256i sq = _mm256_madd_epi16(d, d); // 8 x i32, each <= 2*255^2
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(sq)));
        acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(sq, 1)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

void haar_fwd_avx2(const double* a, const double* b, double* s, double* d, std::size_t n) {
    const __m256d f = _mm256_set1_pd(kHaarScale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d av = _mm256_loadu_pd(a + i);
        const __m256d bv = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(s + i, _mm256_mul_pd(_mm256_add_pd(av, bv), f));
        _mm256_storeu_pd(d + i, _mm256_mul_pd(_mm256_sub_pd(av, bv), f));
    }
    for (; i < n; ++i) {
        s[i] = (a[i] + b[i]) * kHaarScale;
        d[i] = (a[i] - b[i]) * kHaarScale;
    }
}

void haar_inv_avx2(const double* s, const double* d, double* a, double* b, std::size_t n) {
    const __m256d f = _mm256_set1_pd(kHaarScale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d sv = _mm256_loadu_pd(s + i);
        const __m256d dv = _mm256_loadu_pd(d + i);
        _mm256_storeu_pd(a + i, _mm256_mul_pd(_mm256_add_pd(sv, dv), f));
        _mm256_storeu_pd(b + i, _mm256_mul_pd(_mm256_sub_pd(sv, dv), f));
    }
    for (; i < n; ++i) {
        a[i] = (s[i] + d[i]) * kHaarScale;
        b[i] = (s[i] - d[i]) * kHaarScale;
    }
}

void u8_to_centered_avx2(const std::uint8_t* in, double* out, std::size_t n) {
    const __m256d off = _mm256_set1_pd(128.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        int packed;
        std::memcpy(&packed, in + i, 4);
        const __m256d v = _mm256_cvtepi32_pd(_mm_cvtepu8_epi32(_mm_cvtsi32_si128(packed)));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(v, off));
    }
    for (; i < n; ++i)
        out[i] = static_cast<double>(in[i]) - 128.0;
}

void centered_to_u8_avx2(const double* in, std::uint8_t* out, std::size_t n) {
    const __m256d off = _mm256_set1_pd(128.0);
    const __m256d lo = _mm256_setzero_pd();
    const __m256d hi = _mm256_set1_pd(255.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_round_pd(_mm256_add_pd(_mm256_loadu_pd(in + i), off),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        v = _mm256_min_pd(_mm256_max_pd(v, lo), hi);
        const __m128i iv = _mm256_cvtpd_epi32(v);
        alignas(16) std::int32_t vals[4];
        _mm_store_si128(reinterpret_cast<__m128i*>(vals), iv);
        out[i] = static_cast<std::uint8_t>(vals[0]);
        out[i + 1] = static_cast<std::uint8_t>(vals[1]);
        out[i + 2] = static_cast<std::uint8_t>(vals[2]);
        out[i + 3] = static_cast<std::uint8_t>(vals[3]);
    }
    for (; i < n; ++i) {
        const double r = std::nearbyint(in[i] + 128.0);
        out[i] = r < 0.0 ? 0 : (r > 255.0 ? 255 : static_cast<std::uint8_t>(r));
    }
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",
        fdct8x8_avx2,
        idct8x8_avx2,
        quantize8x8_avx2,
        dequantize8x8_avx2,
        sum_sq_diff_u8_avx2,
        haar_fwd_avx2,
        haar_inv_avx2,
        u8_to_centered_avx2,
        centered_to_u8_avx2,
    };
    return ops;
}

} // namespace kernels
} // namespace dnacodec

#endif // DNACODEC_HAVE_AVX2
