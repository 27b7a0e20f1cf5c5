#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnacodec {

/// Malformed input data (bad PGM, bad nucleotide text, bad header bytes).
/// CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural violation detected while decoding a nucleotide or bit stream
/// (invalid PAIRCODE pair, adjacent repeat in a trit segment, dummy Huffman
/// symbol, block overrun, premature end). Carries the position of the first
/// bad unit in the stream being decoded.
class CorruptStreamError : public std::runtime_error {
public:
    CorruptStreamError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace dnacodec
