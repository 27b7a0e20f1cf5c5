#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "dnacodec/nucleotide.hpp"

namespace dnacodec {
namespace paircode {

/// The ten-pair dictionary. Concatenations of these pairs never create a
/// homopolymer longer than 3 and keep GC count <= AT count.
inline constexpr std::array<std::array<Nucleotide, 2>, 10> kPairs = {{
    {Nucleotide::A, Nucleotide::T}, {Nucleotide::A, Nucleotide::C},
    {Nucleotide::A, Nucleotide::G}, {Nucleotide::T, Nucleotide::A},
    {Nucleotide::T, Nucleotide::C}, {Nucleotide::T, Nucleotide::G},
    {Nucleotide::C, Nucleotide::A}, {Nucleotide::C, Nucleotide::T},
    {Nucleotide::G, Nucleotide::A}, {Nucleotide::G, Nucleotide::T},
}};

/// Tail alphabet for odd-length codewords, in its enumeration order.
inline constexpr std::array<Nucleotide, 4> kTails = {
    Nucleotide::A, Nucleotide::T, Nucleotide::C, Nucleotide::G};

/// Number of codewords of the given length: 10^(l/2) for even l,
/// 4*10^((l-1)/2) for odd l. Lengths below 2 are rejected.
std::int64_t capacity(int length_nt);

/// Deterministic enumeration: the pair part spells the index (or index/4 for
/// odd lengths) as base-10 digits over kPairs, most significant digit first;
/// odd lengths append kTails[index % 4].
NucleotideSequence codeword(int length_nt, std::int64_t index);

/// Exact inverse of codeword(). Throws CorruptStreamError when the sequence
/// does not decompose into kPairs pairs (+ tail); the position names the
/// offending pair's offset within the word.
std::int64_t index_of(const NucleotideSequence& word);

/// One row of the category table: values with lo <= |v| <= hi take
/// length_nt = category nucleotides. Category 1 does not exist.
struct CategoryEntry {
    int category;
    int lo;
    int hi;
    int length_nt() const noexcept { return category; }
    std::int64_t range_size() const noexcept {
        return category == 0 ? 1 : 2 * (static_cast<std::int64_t>(hi) - lo + 1);
    }
};

/// The eight rows {0, 2..8}; hi of the last row is 7775.
const std::array<CategoryEntry, 8>& category_table();

inline constexpr int kMaxCategoryValue = 7775;

/// Row containing the value; 0 maps to category 0. |value| > 7775 throws
/// std::out_of_range.
const CategoryEntry& category_of(int value);

/// Value coding: index of v in the ordered list [-hi..-lo, lo..hi] of its
/// category, emitted as a codeword of length = category. Zero emits nothing.
std::pair<int, NucleotideSequence> encode_value(int value);

/// Inverse of encode_value. Category must be in {0, 2..8} and the word length
/// must equal the category.
int decode_value(int category, const NucleotideSequence& word);

} // namespace paircode
} // namespace dnacodec
