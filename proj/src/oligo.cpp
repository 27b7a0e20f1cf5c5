#include "dnacodec/oligo.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "dnacodec/fasta.hpp"
#include "dnacodec/paircode.hpp"
#include "dnacodec/transcode.hpp"

namespace dnacodec {
namespace oligo {

namespace {

Nucleotide pick_separator(Nucleotide header_last, Nucleotide payload_first) {
    for (Nucleotide n : paircode::kTails) // fixed order A, T, C, G
        if (n != header_last && n != payload_first) return n;
    return Nucleotide::A; // unreachable: two exclusions leave two candidates
}

NucleotideSequence filler(std::size_t len) {
    NucleotideSequence f;
    f.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        f.push_back(i % 2 == 0 ? Nucleotide::A : Nucleotide::T);
    return f;
}

} // namespace

std::vector<Oligo> fragment(const NucleotideSequence& strand, int payload_len) {
    if (strand.empty())
        throw std::invalid_argument("cannot fragment an empty strand");
    if (payload_len < kMinPayloadLen || payload_len > kMaxPayloadLen)
        throw std::invalid_argument("payload length must be in " +
                                    std::to_string(kMinPayloadLen) + ".." +
                                    std::to_string(kMaxPayloadLen));
    const std::size_t L = static_cast<std::size_t>(payload_len);
    const std::int64_t count = static_cast<std::int64_t>((strand.size() + L - 1) / L);
    if (count > kMaxOligos)
        throw std::invalid_argument("strand needs more oligos than the index space allows");

    ByteWriter lw;
    lw.u32(static_cast<std::uint32_t>(strand.size()));
    const NucleotideSequence prefix = transcode_bytes(lw.bytes());

    std::vector<Oligo> oligos;
    oligos.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        Oligo o;
        o.index = i;
        const std::size_t at = static_cast<std::size_t>(i) * L;
        const std::size_t slice_len = std::min(L, strand.size() - at);
        NucleotideSequence payload;
        if (i == 0) {
            payload = prefix;
            payload.append(strand.subseq(at, slice_len));
        } else {
            payload = strand.subseq(at, slice_len);
        }
        NucleotideSequence header = paircode::codeword(kHeaderWordLen, i);
        header.push_back(pick_separator(header.back(), payload[0]));
        o.header = std::move(header);
        o.payload = std::move(payload);
        oligos.push_back(std::move(o));
    }
    return oligos;
}

ReassembleResult reassemble(const std::vector<Oligo>& oligos) {
    ReassembleResult result;

    std::map<std::int64_t, const Oligo*> by_index;
    for (const Oligo& o : oligos) {
        std::int64_t idx;
        if (o.header.size() < kHeaderWordLen) {
            result.warnings.push_back("oligo with truncated header dropped");
            continue;
        }
        try {
            idx = paircode::index_of(o.header.subseq(0, kHeaderWordLen));
        } catch (const CorruptStreamError&) {
            result.warnings.push_back("oligo with undecodable header dropped");
            continue;
        }
        auto [it, inserted] = by_index.emplace(idx, &o);
        if (!inserted && !(it->second->payload == o.payload))
            throw CorruptStreamError("duplicate oligo index with differing payloads",
                                     static_cast<std::size_t>(idx));
    }
    if (by_index.empty())
        throw CorruptStreamError("no decodable oligos", 0);

    const std::int64_t count = by_index.rbegin()->first + 1;
    if (count > kMaxOligos)
        throw CorruptStreamError("decoded oligo index exceeds the index space",
                                 static_cast<std::size_t>(by_index.rbegin()->first));

    // Slot size: the longest received data payload. Clean oligos dominate a
    // single-error pool, so the mode and the max coincide.
    std::size_t L = 0;
    for (const auto& [idx, o] : by_index) {
        const std::size_t data_len =
            idx == 0 ? (o->payload.size() > kLengthPrefixLen
                            ? o->payload.size() - kLengthPrefixLen
                            : 0)
                     : o->payload.size();
        L = std::max(L, data_len);
    }
    if (L == 0)
        throw CorruptStreamError("no payload data in any oligo", 0);

    // True strand length from oligo 0's prefix, sanity-checked against the
    // received oligo count so a damaged prefix cannot truncate the strand.
    std::size_t total = static_cast<std::size_t>(count) * L;
    bool total_known = false;
    auto it0 = by_index.find(0);
    if (it0 != by_index.end() && it0->second->payload.size() >= kLengthPrefixLen) {
        try {
            const auto bytes =
                detranscode_bytes(it0->second->payload.subseq(0, kLengthPrefixLen));
            std::size_t decoded = 0;
            for (std::uint8_t b : bytes) decoded = (decoded << 8) | b;
            const std::size_t lo = static_cast<std::size_t>(count - 1) * L + 1;
            if (decoded >= lo && decoded <= total) {
                total = decoded;
                total_known = true;
            } else {
                result.warnings.push_back("length prefix out of range; using full slots");
            }
        } catch (const CorruptStreamError&) {
            result.warnings.push_back("length prefix undecodable; using full slots");
        }
    } else {
        result.warnings.push_back("oligo 0 missing or short; strand length unknown");
    }
    (void)total_known;

    result.payload_len = static_cast<int>(L);
    result.total_length = total;
    result.strand.reserve(total);

    for (std::int64_t i = 0; i < count; ++i) {
        const std::size_t slot_len = std::min(L, total - static_cast<std::size_t>(i) * L);
        auto it = by_index.find(i);
        if (it == by_index.end()) {
            result.missing.push_back(i);
            result.strand.append(filler(slot_len));
            continue;
        }
        const Oligo& o = *it->second;
        NucleotideSequence data =
            i == 0 ? (o.payload.size() > kLengthPrefixLen
                          ? o.payload.subseq(kLengthPrefixLen,
                                             o.payload.size() - kLengthPrefixLen)
                          : NucleotideSequence{})
                   : o.payload;
        if (data.size() > slot_len) {
            result.strand.append(data.subseq(0, slot_len));
        } else {
            result.strand.append(data);
            if (data.size() < slot_len)
                result.strand.append(filler(slot_len - data.size()));
        }
    }
    return result;
}

void write_oligos_fasta(std::ostream& os, const std::vector<Oligo>& oligos) {
    for (const Oligo& o : oligos)
        write_fasta(os, "oligo_" + std::to_string(o.index), o.to_sequence());
}

std::vector<Oligo> read_oligos_fasta(std::istream& is) {
    std::vector<Oligo> oligos;
    for (const FastaRecord& rec : read_fasta(is)) {
        Oligo o;
        if (rec.seq.size() < kHeaderLen)
            throw FormatError("oligo record '" + rec.id + "' shorter than a header");
        o.header = rec.seq.subseq(0, kHeaderLen);
        o.payload = rec.seq.subseq(kHeaderLen, rec.seq.size() - kHeaderLen);
        // The id is informational; order and identity come from the header.
        try {
            o.index = paircode::index_of(o.header.subseq(0, kHeaderWordLen));
        } catch (const CorruptStreamError&) {
            o.index = -1;
        }
        oligos.push_back(std::move(o));
    }
    return oligos;
}

} // namespace oligo
} // namespace dnacodec
