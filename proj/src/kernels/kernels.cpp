#include "dnacodec/kernels/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "backends.hpp"

namespace dnacodec {
namespace kernels {

const double* dct_basis() {
    static const double* table = [] {
        static double t[64];
        const double pi = std::acos(-1.0);
        for (int u = 0; u < 8; ++u) {
            const double cu = (u == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
            for (int k = 0; k < 8; ++k)
                t[u * 8 + k] = cu * 0.5 * std::cos((2 * k + 1) * u * pi / 16.0);
        }
        return t;
    }();
    return table;
}

bool backend_available(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#ifdef DNACODEC_HAVE_AVX2
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    }
    return false;
}

const Ops& ops_for(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return scalar_ops();
    case Backend::Avx2:
#ifdef DNACODEC_HAVE_AVX2
        if (backend_available(Backend::Avx2)) return avx2_ops();
#endif
        throw std::runtime_error("AVX2 kernel backend is not available on this machine");
    }
    throw std::runtime_error("unknown kernel backend");
}

namespace {

Backend initial_backend() {
    if (const char* env = std::getenv("DNACODEC_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::Avx2))
            return Backend::Avx2;
    }
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

Backend& current_backend() {
    static Backend backend = initial_backend();
    return backend;
}

} // namespace

const Ops& ops() { return ops_for(current_backend()); }

Backend active_backend() { return current_backend(); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error("requested kernel backend is not available");
    current_backend() = b;
}

} // namespace kernels
} // namespace dnacodec
