#pragma once

#include "dnacodec/kernels/kernels.hpp"

namespace dnacodec {
namespace kernels {

const Ops& scalar_ops();
#ifdef DNACODEC_HAVE_AVX2
const Ops& avx2_ops();
#endif

} // namespace kernels
} // namespace dnacodec
