#pragma once

#include <cstdint>
#include <vector>

#include "dnacodec/nucleotide.hpp"

namespace dnacodec {

/// Fixed-length byte coding: each byte becomes the length-5 PAIRCODE word of
/// its value (capacity(5) = 400 >= 256, the shortest length covering a byte),
/// so the output is exactly 5 nt per byte and homopolymer-safe.
NucleotideSequence transcode_bytes(const std::vector<std::uint8_t>& bytes);

/// Strict inverse: requires |seq| divisible by 5, every 5-nt group a valid
/// codeword with index < 256. Violations raise CorruptStreamError carrying
/// the group index.
std::vector<std::uint8_t> detranscode_bytes(const NucleotideSequence& seq);

struct LenientDetranscodeResult {
    std::vector<std::uint8_t> bytes;
    std::vector<std::size_t> bad_groups; // groups decoded as 0x00 placeholders
    std::size_t dropped_tail_nt = 0;     // trailing partial group
    bool clean() const noexcept { return bad_groups.empty() && dropped_tail_nt == 0; }
};

/// Damage-tolerant variant used by the corruption experiments: malformed
/// groups become 0x00 placeholder bytes and a trailing partial group is
/// dropped, so decoding continues past an error the way a desynchronized
/// fixed-length parse would.
LenientDetranscodeResult detranscode_bytes_lenient(const NucleotideSequence& seq);

} // namespace dnacodec
