#include "doctest.h"

#include <cmath>
#include <cstring>
#include <vector>

#include "dnacodec/channel.hpp"
#include "dnacodec/kernels/kernels.hpp"

using namespace dnacodec;
namespace k = dnacodec::kernels;

namespace {

// Direct-formula 2-D DCT-II, the independent oracle for the kernel pair.
void reference_dct(const double in[64], double out[64]) {
    const double pi = std::acos(-1.0);
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            const double cu = u == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
            const double cv = v == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
            double acc = 0.0;
            for (int y = 0; y < 8; ++y)
                for (int x = 0; x < 8; ++x)
                    acc += in[y * 8 + x] * std::cos((2 * y + 1) * u * pi / 16.0) *
                           std::cos((2 * x + 1) * v * pi / 16.0);
            out[u * 8 + v] = 0.25 * cu * cv * acc;
        }
}

void fill_random_block(channel::SplitMix64& rng, double block[64]) {
    for (int i = 0; i < 64; ++i)
        block[i] = static_cast<double>(rng.below(256)) - 128.0;
}

bool avx2_present() { return k::backend_available(k::Backend::Avx2); }

} // namespace

TEST_CASE("forward DCT agrees with the direct formula") {
    channel::SplitMix64 rng(31);
    double in[64], got[64], want[64];
    for (int it = 0; it < 20; ++it) {
        fill_random_block(rng, in);
        k::ops_for(k::Backend::Scalar).fdct8x8(in, got);
        reference_dct(in, want);
        for (int i = 0; i < 64; ++i)
            CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
    }
}

TEST_CASE("inverse DCT reconstructs within tolerance") {
    channel::SplitMix64 rng(32);
    double in[64], coef[64], back[64];
    const auto& ops = k::ops_for(k::Backend::Scalar);
    for (int it = 0; it < 20; ++it) {
        fill_random_block(rng, in);
        ops.fdct8x8(in, coef);
        ops.idct8x8(coef, back);
        for (int i = 0; i < 64; ++i)
            CHECK(back[i] == doctest::Approx(in[i]).epsilon(1e-10));
    }
}

TEST_CASE("quantize rounds half to even") {
    const auto& ops = k::ops_for(k::Backend::Scalar);
    double coef[64] = {};
    std::uint16_t q[64];
    std::int32_t out[64];
    for (int i = 0; i < 64; ++i) q[i] = 2;
    coef[0] = 3.0;   // 1.5 -> 2
    coef[1] = 5.0;   // 2.5 -> 2
    coef[2] = -3.0;  // -1.5 -> -2
    coef[3] = 7.1;   // 3.55 -> 4
    ops.quantize8x8(coef, q, out);
    CHECK(out[0] == 2);
    CHECK(out[1] == 2);
    CHECK(out[2] == -2);
    CHECK(out[3] == 4);
}

TEST_CASE("scalar and AVX2 backends are bit-identical") {
    if (!avx2_present()) {
        MESSAGE("AVX2 not available; equivalence suite skipped");
        return;
    }
    const auto& s = k::ops_for(k::Backend::Scalar);
    const auto& v = k::ops_for(k::Backend::Avx2);
    channel::SplitMix64 rng(33);

    SUBCASE("dct pair") {
        double in[64], a[64], b[64];
        for (int it = 0; it < 200; ++it) {
            fill_random_block(rng, in);
            s.fdct8x8(in, a);
            v.fdct8x8(in, b);
            CHECK(std::memcmp(a, b, sizeof a) == 0);
            s.idct8x8(in, a);
            v.idct8x8(in, b);
            CHECK(std::memcmp(a, b, sizeof a) == 0);
        }
    }

    SUBCASE("quantizer pair") {
        double coef[64];
        std::uint16_t q[64];
        std::int32_t ia[64], ib[64];
        double da[64], db[64];
        for (int it = 0; it < 200; ++it) {
            for (int i = 0; i < 64; ++i) {
                coef[i] = (static_cast<double>(rng.below(1u << 20)) - (1u << 19)) / 64.0;
                q[i] = static_cast<std::uint16_t>(1 + rng.below(255));
            }
            s.quantize8x8(coef, q, ia);
            v.quantize8x8(coef, q, ib);
            CHECK(std::memcmp(ia, ib, sizeof ia) == 0);
            s.dequantize8x8(ia, q, da);
            v.dequantize8x8(ib, q, db);
            CHECK(std::memcmp(da, db, sizeof da) == 0);
        }
    }

    SUBCASE("squared error reduction") {
        for (int it = 0; it < 50; ++it) {
            const std::size_t n = rng.below(5000);
            std::vector<std::uint8_t> a(n), b(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = static_cast<std::uint8_t>(rng.below(256));
                b[i] = static_cast<std::uint8_t>(rng.below(256));
            }
            CHECK(s.sum_sq_diff_u8(a.data(), b.data(), n) ==
                  v.sum_sq_diff_u8(a.data(), b.data(), n));
        }
    }

    SUBCASE("haar butterflies") {
        for (int it = 0; it < 50; ++it) {
            const std::size_t n = 1 + rng.below(1000);
            std::vector<double> a(n), b(n), s1(n), d1(n), s2(n), d2(n);
            std::vector<double> a1(n), b1(n), a2(n), b2(n);
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = static_cast<double>(rng.below(512)) - 256.0;
                b[i] = static_cast<double>(rng.below(512)) - 256.0;
            }
            s.haar_fwd(a.data(), b.data(), s1.data(), d1.data(), n);
            v.haar_fwd(a.data(), b.data(), s2.data(), d2.data(), n);
            CHECK(std::memcmp(s1.data(), s2.data(), n * sizeof(double)) == 0);
            CHECK(std::memcmp(d1.data(), d2.data(), n * sizeof(double)) == 0);
            s.haar_inv(s1.data(), d1.data(), a1.data(), b1.data(), n);
            v.haar_inv(s2.data(), d2.data(), a2.data(), b2.data(), n);
            CHECK(std::memcmp(a1.data(), a2.data(), n * sizeof(double)) == 0);
            CHECK(std::memcmp(b1.data(), b2.data(), n * sizeof(double)) == 0);
        }
    }

    SUBCASE("pixel conversions") {
        for (int it = 0; it < 50; ++it) {
            const std::size_t n = 1 + rng.below(1000);
            std::vector<std::uint8_t> px(n), qa(n), qb(n);
            std::vector<double> ca(n), cb(n);
            for (std::size_t i = 0; i < n; ++i)
                px[i] = static_cast<std::uint8_t>(rng.below(256));
            s.u8_to_centered(px.data(), ca.data(), n);
            v.u8_to_centered(px.data(), cb.data(), n);
            CHECK(std::memcmp(ca.data(), cb.data(), n * sizeof(double)) == 0);
            for (std::size_t i = 0; i < n; ++i)
                ca[i] = ca[i] * 1.375 + 0.5; // push some values past the clamp range
            s.centered_to_u8(ca.data(), qa.data(), n);
            v.centered_to_u8(ca.data(), qb.data(), n);
            CHECK(std::memcmp(qa.data(), qb.data(), n) == 0);
        }
    }
}

TEST_CASE("backend selection") {
    CHECK(k::backend_available(k::Backend::Scalar));
    const k::Backend saved = k::active_backend();
    k::set_backend(k::Backend::Scalar);
    CHECK(k::active_backend() == k::Backend::Scalar);
    k::set_backend(saved);
}
