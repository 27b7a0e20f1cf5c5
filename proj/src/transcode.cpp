#include "dnacodec/transcode.hpp"

#include "dnacodec/paircode.hpp"

namespace dnacodec {

NucleotideSequence transcode_bytes(const std::vector<std::uint8_t>& bytes) {
    NucleotideSequence out;
    out.reserve(bytes.size() * 5);
    for (std::uint8_t b : bytes)
        out.append(paircode::codeword(5, b));
    return out;
}

std::vector<std::uint8_t> detranscode_bytes(const NucleotideSequence& seq) {
    if (seq.size() % 5 != 0)
        throw CorruptStreamError("transcoded stream length not a multiple of 5", seq.size() / 5);
    std::vector<std::uint8_t> bytes;
    bytes.reserve(seq.size() / 5);
    for (std::size_t g = 0; g * 5 < seq.size(); ++g) {
        std::int64_t index;
        try {
            index = paircode::index_of(seq.subseq(g * 5, 5));
        } catch (const CorruptStreamError&) {
            throw CorruptStreamError("malformed transcoded group", g);
        }
        if (index >= 256)
            throw CorruptStreamError("transcoded group index exceeds byte range", g);
        bytes.push_back(static_cast<std::uint8_t>(index));
    }
    return bytes;
}

LenientDetranscodeResult detranscode_bytes_lenient(const NucleotideSequence& seq) {
    LenientDetranscodeResult result;
    const std::size_t groups = seq.size() / 5;
    result.dropped_tail_nt = seq.size() - groups * 5;
    result.bytes.reserve(groups);
    for (std::size_t g = 0; g < groups; ++g) {
        try {
            const std::int64_t index = paircode::index_of(seq.subseq(g * 5, 5));
            if (index >= 256) {
                result.bytes.push_back(0);
                result.bad_groups.push_back(g);
            } else {
                result.bytes.push_back(static_cast<std::uint8_t>(index));
            }
        } catch (const CorruptStreamError&) {
            result.bytes.push_back(0);
            result.bad_groups.push_back(g);
        }
    }
    return result;
}

} // namespace dnacodec
