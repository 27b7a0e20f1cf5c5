#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dnacodec {

/// 8-bit grayscale image, row-major samples.
struct ImageGray8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    ImageGray8() = default;
    ImageGray8(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          samples(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::uint8_t at(int x, int y) const {
        return samples[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + x];
    }
    std::uint8_t& at(int x, int y) {
        return samples[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + x];
    }
    std::size_t pixel_count() const noexcept { return samples.size(); }

    bool operator==(const ImageGray8&) const = default;
};

/// Edge-replicates to the next multiple of `multiple` in both dimensions.
ImageGray8 pad_to_multiple(const ImageGray8& img, int multiple);

ImageGray8 crop(const ImageGray8& img, int width, int height);

/// Binary PGM (P5, maxval 255). Anything else raises FormatError.
ImageGray8 read_pgm(std::istream& is);
ImageGray8 read_pgm(const std::string& path);
void write_pgm(std::ostream& os, const ImageGray8& img);
void write_pgm(const std::string& path, const ImageGray8& img);

} // namespace dnacodec
