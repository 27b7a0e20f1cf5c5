#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dnacodec/image.hpp"
#include "dnacodec/nucleotide.hpp"

namespace dnacodec {
namespace metrics {

/// 10*log10(255^2 / MSE); +infinity for identical images.
double psnr(const ImageGray8& a, const ImageGray8& b);

struct RateReport {
    std::size_t total_nt = 0;
    double nt_per_pixel = 0.0;
    double coding_potential_bits_per_nt = 0.0; // 8*W*H / total_nt
    double gc_fraction = 0.0;
    std::size_t max_run = 0;
};

RateReport rate_report(const NucleotideSequence& seq, int width, int height);

enum class Method { JpegDna, Transcode, Fixedlen };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// Whole-stream encode for any method; param is the JPEG quality (1..100)
/// for the variable-length methods and the base quantizer step for fixedlen.
NucleotideSequence encode_stream(const ImageGray8& img, Method method, double param);

struct StreamDecodeResult {
    ImageGray8 image;
    bool corrupted = false;
    std::string note;
};

/// Decode with each method's corruption policy. When even the header is
/// unreadable the result is a mid-gray canvas of the given fallback size and
/// the corrupted flag set: the experiment still produces an image.
StreamDecodeResult decode_stream(const NucleotideSequence& seq, Method method,
                                 int fallback_width, int fallback_height);

struct ExperimentRecord {
    Method method;
    double param = 0.0;
    double psnr_db = 0.0;
    RateReport rate;
    // Robustness fields (unset for plain sweep records):
    std::optional<double> post_corruption_psnr_db;
    std::optional<std::size_t> deletion_position;
    std::optional<double> oligo_gc_violation_fraction;
};

/// One record per parameter: payload for Fig.-3-style PSNR vs coding
/// potential curves.
std::vector<ExperimentRecord> sweep(const ImageGray8& img, Method method,
                                    const std::vector<double>& params);

void write_sweep_csv(std::ostream& os, const std::vector<ExperimentRecord>& records);

/// Atomic whole-file CSV write (temp file + rename).
void write_sweep_csv(const std::string& path, const std::vector<ExperimentRecord>& records);

/// Parameter grid point whose clean-decode PSNR is closest to the target,
/// found by monotone bisection over the method's grid.
double quality_search(const ImageGray8& img, Method method, double target_psnr);

struct RobustnessResult {
    ExperimentRecord record;
    ImageGray8 clean_decoded;
    ImageGray8 corrupt_decoded;
    std::size_t stream_nt = 0;
    std::string description;
};

/// The single-deletion experiment: parameter search to the target PSNR, one
/// seeded deletion (inside one oligo for the fixed-length method, which goes
/// through the oligo layout with the given payload length), decode with the
/// truncate-and-zero-fill policy.
RobustnessResult robustness_experiment(const ImageGray8& img, Method method,
                                       double target_psnr, std::uint64_t seed,
                                       int payload_len = 187);

} // namespace metrics
} // namespace dnacodec
