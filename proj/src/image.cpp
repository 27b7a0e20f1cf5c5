#include "dnacodec/image.hpp"

#include <cctype>
#include <fstream>
#include <ostream>

#include "dnacodec/errors.hpp"

namespace dnacodec {

ImageGray8 pad_to_multiple(const ImageGray8& img, int multiple) {
    if (img.width <= 0 || img.height <= 0)
        throw FormatError("cannot pad an empty image");
    const int pw = (img.width + multiple - 1) / multiple * multiple;
    const int ph = (img.height + multiple - 1) / multiple * multiple;
    if (pw == img.width && ph == img.height) return img;

    ImageGray8 out(pw, ph);
    for (int y = 0; y < ph; ++y) {
        const int sy = y < img.height ? y : img.height - 1;
        for (int x = 0; x < pw; ++x) {
            const int sx = x < img.width ? x : img.width - 1;
            out.at(x, y) = img.at(sx, sy);
        }
    }
    return out;
}

ImageGray8 crop(const ImageGray8& img, int width, int height) {
    if (width > img.width || height > img.height)
        throw FormatError("crop size exceeds image size");
    if (width == img.width && height == img.height) return img;
    ImageGray8 out(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            out.at(x, y) = img.at(x, y);
    return out;
}

namespace {

int read_pnm_token(std::istream& is) {
    // Skips whitespace and '#' comments, then reads a decimal value.
    int c = is.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = is.get();
        } else if (std::isspace(c)) {
            c = is.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c))
        throw FormatError("malformed PGM header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 20) throw FormatError("PGM header value out of range");
        c = is.get();
    }
    if (c != EOF) is.unget();
    return value;
}

} // namespace

ImageGray8 read_pgm(std::istream& is) {
    char magic[2] = {0, 0};
    is.read(magic, 2);
    if (!is || magic[0] != 'P' || magic[1] != '5')
        throw FormatError("not a binary PGM (P5) file");
    const int width = read_pnm_token(is);
    const int height = read_pnm_token(is);
    const int maxval = read_pnm_token(is);
    if (maxval != 255)
        throw FormatError("only maxval 255 PGM images are supported");
    if (width <= 0 || height <= 0)
        throw FormatError("PGM has non-positive dimensions");
    const int sep = is.get();
    if (sep == EOF || !std::isspace(sep))
        throw FormatError("malformed PGM header");

    ImageGray8 img(width, height);
    is.read(reinterpret_cast<char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
    if (is.gcount() != static_cast<std::streamsize>(img.samples.size()))
        throw FormatError("PGM pixel data truncated");
    return img;
}

ImageGray8 read_pgm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open image file: " + path);
    return read_pgm(is);
}

void write_pgm(std::ostream& os, const ImageGray8& img) {
    os << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.samples.data()),
             static_cast<std::streamsize>(img.samples.size()));
}

void write_pgm(const std::string& path, const ImageGray8& img) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot open output image file: " + path);
    write_pgm(os, img);
}

} // namespace dnacodec
