#include "dnacodec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dnacodec/binary_jpeg.hpp"
#include "dnacodec/channel.hpp"
#include "dnacodec/errors.hpp"
#include "dnacodec/fixedlen.hpp"
#include "dnacodec/jpegdna.hpp"
#include "dnacodec/kernels/kernels.hpp"
#include "dnacodec/oligo.hpp"
#include "dnacodec/transcode.hpp"

namespace dnacodec {
namespace metrics {

double psnr(const ImageGray8& a, const ImageGray8& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("PSNR requires equal image dimensions");
    const std::uint64_t ssd =
        kernels::ops().sum_sq_diff_u8(a.samples.data(), b.samples.data(), a.samples.size());
    if (ssd == 0) return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(ssd) / static_cast<double>(a.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

RateReport rate_report(const NucleotideSequence& seq, int width, int height) {
    RateReport r;
    r.total_nt = seq.size();
    const double pixels = static_cast<double>(width) * height;
    r.nt_per_pixel = seq.empty() ? 0.0 : static_cast<double>(seq.size()) / pixels;
    r.coding_potential_bits_per_nt =
        seq.empty() ? 0.0 : 8.0 * pixels / static_cast<double>(seq.size());
    const ConstraintReport cr = validate(seq, 3);
    r.gc_fraction = seq.empty()
                        ? 0.0
                        : static_cast<double>(cr.gc_count) / static_cast<double>(seq.size());
    r.max_run = cr.max_homopolymer_run;
    return r;
}

const char* method_name(Method m) {
    switch (m) {
    case Method::JpegDna:
        return "jpeg-dna";
    case Method::Transcode:
        return "transcode";
    case Method::Fixedlen:
        return "fixedlen";
    }
    return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "jpeg-dna" || name == "jpegdna") return Method::JpegDna;
    if (name == "transcode") return Method::Transcode;
    if (name == "fixedlen") return Method::Fixedlen;
    return std::nullopt;
}

namespace {

constexpr int kFixedlenLevels = 3;

int quality_from_param(double param) {
    const int q = static_cast<int>(std::lround(param));
    if (q < 1 || q > 100)
        throw std::invalid_argument("quality must be in 1..100");
    return q;
}

ImageGray8 gray_canvas(int width, int height) {
    return ImageGray8(width, height, 128);
}

} // namespace

NucleotideSequence encode_stream(const ImageGray8& img, Method method, double param) {
    switch (method) {
    case Method::JpegDna:
        return jpegdna::encode_image(img, quality_from_param(param)).to_sequence();
    case Method::Transcode: {
        const auto indices = forward_pipeline(img, quality_from_param(param));
        const auto stream =
            binjpeg::entropy_encode(indices, img.width, img.height, quality_from_param(param));
        return transcode_bytes(stream.to_bytes());
    }
    case Method::Fixedlen:
        return fixedlen::encode_fixed(img, kFixedlenLevels, param).seq;
    }
    throw std::invalid_argument("unknown method");
}

StreamDecodeResult decode_stream(const NucleotideSequence& seq, Method method,
                                 int fallback_width, int fallback_height) {
    StreamDecodeResult result;
    try {
        switch (method) {
        case Method::JpegDna: {
            const auto stream = jpegdna::JpegDnaStream::parse(seq);
            auto decoded = jpegdna::decode_image(stream);
            result.image = std::move(decoded.image);
            result.corrupted = decoded.corrupted;
            result.note = decoded.failure_reason;
            return result;
        }
        case Method::Transcode: {
            const auto lenient = detranscode_bytes_lenient(seq);
            const auto stream = binjpeg::BinaryJpegStream::parse(lenient.bytes);
            auto decoded = binjpeg::entropy_decode(stream);
            result.image = inverse_pipeline(decoded.indices, stream.header.quality,
                                            stream.header.width, stream.header.height);
            result.corrupted = decoded.corrupted || !lenient.clean();
            result.note = decoded.failure_reason;
            return result;
        }
        case Method::Fixedlen: {
            auto decoded = fixedlen::decode_fixed(seq);
            result.image = std::move(decoded.image);
            result.corrupted = decoded.malformed > 0;
            if (decoded.malformed > 0)
                result.note = std::to_string(decoded.malformed) + " malformed coefficients";
            return result;
        }
        }
    } catch (const FormatError& e) {
        result.image = gray_canvas(fallback_width, fallback_height);
        result.corrupted = true;
        result.note = std::string("header unreadable: ") + e.what();
        return result;
    }
    throw std::invalid_argument("unknown method");
}

std::vector<ExperimentRecord> sweep(const ImageGray8& img, Method method,
                                    const std::vector<double>& params) {
    std::vector<ExperimentRecord> records;
    records.reserve(params.size());
    for (double p : params) {
        ExperimentRecord rec;
        rec.method = method;
        rec.param = p;
        const NucleotideSequence stream = encode_stream(img, method, p);
        const StreamDecodeResult decoded = decode_stream(stream, method, img.width, img.height);
        rec.psnr_db = psnr(img, decoded.image);
        rec.rate = rate_report(stream, img.width, img.height);
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

std::string format_double(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream ss;
    ss.precision(6);
    ss << std::fixed << v;
    return ss.str();
}

} // namespace

void write_sweep_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << "method,param,psnr_db,total_nt,nt_per_pixel,coding_potential_bits_per_nt,"
          "gc_fraction,max_run,post_corruption_psnr_db,deletion_position,"
          "oligo_gc_violation_fraction\n";
    for (const ExperimentRecord& r : records) {
        os << method_name(r.method) << ',' << format_double(r.param) << ','
           << format_double(r.psnr_db) << ',' << r.rate.total_nt << ','
           << format_double(r.rate.nt_per_pixel) << ','
           << format_double(r.rate.coding_potential_bits_per_nt) << ','
           << format_double(r.rate.gc_fraction) << ',' << r.rate.max_run << ',';
        if (r.post_corruption_psnr_db) os << format_double(*r.post_corruption_psnr_db);
        os << ',';
        if (r.deletion_position) os << *r.deletion_position;
        os << ',';
        if (r.oligo_gc_violation_fraction)
            os << format_double(*r.oligo_gc_violation_fraction);
        os << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<ExperimentRecord>& records) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw FormatError("cannot open CSV output: " + tmp);
        write_sweep_csv(os, records);
    }
    std::filesystem::rename(tmp, path);
}

namespace {

double clean_psnr_at(const ImageGray8& img, Method method, double param) {
    const NucleotideSequence stream = encode_stream(img, method, param);
    const StreamDecodeResult decoded = decode_stream(stream, method, img.width, img.height);
    return psnr(img, decoded.image);
}

// Grids ordered so the clean PSNR is (weakly) non-decreasing along them.
std::vector<double> parameter_grid(Method method) {
    std::vector<double> grid;
    if (method == Method::Fixedlen) {
        // Quarter-octave quantizer steps from 256 down to 1/8.
        for (int k = 0; k <= 44; ++k)
            grid.push_back(256.0 / std::pow(2.0, static_cast<double>(k) / 4.0));
        return grid;
    }
    for (int q = 1; q <= 100; ++q) grid.push_back(static_cast<double>(q));
    return grid;
}

} // namespace

double quality_search(const ImageGray8& img, Method method, double target_psnr) {
    const std::vector<double> grid = parameter_grid(method);
    std::size_t lo = 0, hi = grid.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (clean_psnr_at(img, method, grid[mid]) < target_psnr)
            lo = mid;
        else
            hi = mid;
    }
    // Local scan around the bracket to ride out quantizer plateaus.
    double best_param = grid[lo];
    double best_err = std::numeric_limits<double>::infinity();
    const std::size_t from = lo >= 2 ? lo - 2 : 0;
    const std::size_t to = std::min(hi + 2, grid.size() - 1);
    for (std::size_t i = from; i <= to; ++i) {
        const double p = clean_psnr_at(img, method, grid[i]);
        const double err = std::fabs(p - target_psnr);
        if (err < best_err) {
            best_err = err;
            best_param = grid[i];
        }
    }
    return best_param;
}

RobustnessResult robustness_experiment(const ImageGray8& img, Method method,
                                       double target_psnr, std::uint64_t seed,
                                       int payload_len) {
    RobustnessResult result;
    result.record.method = method;
    result.record.param = quality_search(img, method, target_psnr);

    const NucleotideSequence stream = encode_stream(img, method, result.record.param);
    result.stream_nt = stream.size();

    if (method == Method::Fixedlen) {
        // The fixed-length strand travels as indexed oligos; the deletion
        // lands inside one of them.
        std::vector<oligo::Oligo> pool = oligo::fragment(stream, payload_len);

        const auto clean_reassembled = oligo::reassemble(pool);
        const auto clean_decode =
            decode_stream(clean_reassembled.strand, method, img.width, img.height);
        result.clean_decoded = clean_decode.image;

        std::size_t gc_violations = 0;
        for (const auto& o : pool) {
            const auto report = validate(o.to_sequence(), 3);
            if (report.gc_count > report.at_count) ++gc_violations;
        }
        result.record.oligo_gc_violation_fraction =
            static_cast<double>(gc_violations) / static_cast<double>(pool.size());

        channel::SplitMix64 rng(seed);
        const std::size_t victim = static_cast<std::size_t>(rng.below(pool.size()));
        const NucleotideSequence whole = pool[victim].to_sequence();
        const auto hit = channel::single_random_deletion(whole, rng.next());
        oligo::Oligo damaged;
        damaged.index = pool[victim].index;
        damaged.header = hit.seq.subseq(0, oligo::kHeaderLen);
        damaged.payload = hit.seq.subseq(oligo::kHeaderLen,
                                         hit.seq.size() - oligo::kHeaderLen);
        pool[victim] = damaged;
        result.record.deletion_position = hit.position;
        result.description = "deleted 1 nt at offset " + std::to_string(hit.position) +
                             " inside oligo " + std::to_string(victim);

        const auto damaged_reassembled = oligo::reassemble(pool);
        const auto corrupt_decode =
            decode_stream(damaged_reassembled.strand, method, img.width, img.height);
        result.corrupt_decoded = corrupt_decode.image;
    } else {
        const auto clean_decode = decode_stream(stream, method, img.width, img.height);
        result.clean_decoded = clean_decode.image;

        const auto hit = channel::single_random_deletion(stream, seed);
        result.record.deletion_position = hit.position;
        result.description =
            "deleted 1 nt at stream position " + std::to_string(hit.position);
        const auto corrupt_decode = decode_stream(hit.seq, method, img.width, img.height);
        result.corrupt_decoded = corrupt_decode.image;
    }

    result.record.psnr_db = psnr(img, result.clean_decoded);
    result.record.post_corruption_psnr_db = psnr(img, result.corrupt_decoded);
    result.record.rate = rate_report(stream, img.width, img.height);
    return result;
}

} // namespace metrics
} // namespace dnacodec
