#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dnacodec/nucleotide.hpp"

namespace dnacodec {
namespace oligo {

inline constexpr int kHeaderWordLen = 12;      // PAIRCODE index word, 10^6 indices
inline constexpr int kHeaderLen = 13;          // word + separator nucleotide
inline constexpr int kLengthPrefixLen = 20;    // u32 strand length at 5 nt/byte
inline constexpr std::int64_t kMaxOligos = 1000000;

/// One synthesizable fragment: a 13-nt header (12-nt PAIRCODE index word plus
/// one separator nucleotide) and a payload slice. Oligo 0's payload starts
/// with the 20-nt transcoded total strand length, ahead of its data slice.
struct Oligo {
    std::int64_t index = 0;
    NucleotideSequence header;  // 13 nt
    NucleotideSequence payload; // <= payload_len (+20 for oligo 0)

    NucleotideSequence to_sequence() const { return header + payload; }
    std::size_t size() const noexcept { return header.size() + payload.size(); }
};

/// Valid data payload lengths: oligo 0 also carries the 20-nt length prefix
/// and the whole oligo must stay within 300 nt.
inline constexpr int kMinPayloadLen = 37;  // total >= 50
inline constexpr int kMaxPayloadLen = 267; // 13 + 20 + 267 = 300

/// Cuts the strand into consecutive payload_len slices, one oligo each, with
/// the slice order carried by the header index word. The true strand length
/// rides in front of oligo 0's slice so a short last oligo is distinguishable
/// from damage.
std::vector<Oligo> fragment(const NucleotideSequence& strand, int payload_len);

struct ReassembleResult {
    NucleotideSequence strand;
    std::vector<std::int64_t> missing;    // slot indices filled with AT... filler
    std::vector<std::string> warnings;    // dropped oligos, length fallbacks
    int payload_len = 0;                  // slot size used for anchoring
    std::size_t total_length = 0;
};

/// Slot-anchored reassembly: oligo i's data always lands at offset
/// i * payload_len regardless of how many nucleotides actually arrived, so
/// damage inside one oligo never shifts any other oligo's slice. Accepts
/// records in any order; undecodable headers are dropped and reported;
/// duplicate indices with differing payloads raise CorruptStreamError.
ReassembleResult reassemble(const std::vector<Oligo>& oligos);

/// FASTA with record ids "oligo_<index>".
void write_oligos_fasta(std::ostream& os, const std::vector<Oligo>& oligos);
std::vector<Oligo> read_oligos_fasta(std::istream& is);

} // namespace oligo
} // namespace dnacodec
