#include "doctest.h"

#include <sstream>

#include "dnacodec/channel.hpp"
#include "dnacodec/oligo.hpp"
#include "dnacodec/paircode.hpp"

using namespace dnacodec;
using namespace dnacodec::oligo;

namespace {

NucleotideSequence random_strand(channel::SplitMix64& rng, std::size_t len) {
    NucleotideSequence s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        s.push_back(static_cast<Nucleotide>(rng.below(4)));
    return s;
}

// Strands as our encoders make them: homopolymer-safe.
NucleotideSequence constrained_strand(channel::SplitMix64& rng, std::size_t len) {
    NucleotideSequence s;
    s.reserve(len);
    while (s.size() < len) {
        Nucleotide n = static_cast<Nucleotide>(rng.below(4));
        if (s.size() >= 3 && s[s.size() - 1] == n && s[s.size() - 2] == n &&
            s[s.size() - 3] == n)
            continue;
        s.push_back(n);
    }
    return s;
}

} // namespace

TEST_CASE("a strand that fits one payload makes one oligo") {
    channel::SplitMix64 rng(71);
    const auto strand = random_strand(rng, 187);
    const auto oligos = fragment(strand, 187);
    REQUIRE(oligos.size() == 1);
    CHECK(oligos[0].index == 0);
    CHECK(oligos[0].header.subseq(0, 12) == paircode::codeword(12, 0));
    CHECK(oligos[0].payload.size() == 187 + kLengthPrefixLen);
    CHECK(oligos[0].size() <= 300);
}

TEST_CASE("400 nt strand at payload 187 makes three oligos") {
    channel::SplitMix64 rng(72);
    const auto strand = random_strand(rng, 400);
    const auto oligos = fragment(strand, 187);
    REQUIRE(oligos.size() == 3);
    CHECK(oligos[0].payload.size() == 187 + kLengthPrefixLen);
    CHECK(oligos[1].payload.size() == 187);
    CHECK(oligos[2].payload.size() == 26);
    for (const auto& o : oligos) CHECK(o.size() <= 300);
}

TEST_CASE("payload length bounds are enforced") {
    channel::SplitMix64 rng(73);
    const auto strand = random_strand(rng, 100);
    CHECK_THROWS_AS(fragment(strand, kMinPayloadLen - 1), std::invalid_argument);
    CHECK_THROWS_AS(fragment(strand, kMaxPayloadLen + 1), std::invalid_argument);
    CHECK_THROWS_AS(fragment(NucleotideSequence{}, 187), std::invalid_argument);
    CHECK(fragment(strand, kMaxPayloadLen)[0].size() <= 300);
}

TEST_CASE("fragment/reassemble round-trips") {
    channel::SplitMix64 rng(74);
    for (int it = 0; it < 25; ++it) {
        const std::size_t len = 1 + rng.below(4000);
        const int payload_len = 37 + static_cast<int>(rng.below(231));
        const auto strand = random_strand(rng, len);
        const auto oligos = fragment(strand, payload_len);
        const auto result = reassemble(oligos);
        CHECK(result.strand == strand);
        CHECK(result.missing.empty());
        CHECK(result.total_length == strand.size());
    }
}

TEST_CASE("reassembly accepts shuffled oligo order") {
    channel::SplitMix64 rng(75);
    const auto strand = random_strand(rng, 2000);
    auto oligos = fragment(strand, 100);
    for (std::size_t i = oligos.size(); i > 1; --i)
        std::swap(oligos[i - 1], oligos[rng.below(i)]);
    const auto result = reassemble(oligos);
    CHECK(result.strand == strand);
}

TEST_CASE("constrained strands yield homopolymer-clean oligos") {
    channel::SplitMix64 rng(76);
    for (int it = 0; it < 20; ++it) {
        const auto strand = constrained_strand(rng, 500 + rng.below(1500));
        const auto oligos = fragment(strand, 187);
        for (const auto& o : oligos) {
            CHECK(o.size() <= 300);
            CHECK(o.size() >= 13);
            CHECK(validate(o.to_sequence(), 3).homopolymer_clean());
        }
    }
}

TEST_CASE("a missing oligo is reported and replaced by filler") {
    channel::SplitMix64 rng(77);
    const auto strand = random_strand(rng, 1000);
    auto oligos = fragment(strand, 100);
    REQUIRE(oligos.size() == 11); // 1020 total with prefix
    oligos.erase(oligos.begin() + 4);
    const auto result = reassemble(oligos);
    REQUIRE(result.missing.size() == 1);
    CHECK(result.missing[0] == 4);
    CHECK(result.strand.size() == strand.size());
    // Every slice except slot 4 survives; slot 4 spans [380, 480) of the data
    // (oligo 0 carries the prefix plus the first 100 data nt).
    for (std::size_t i = 0; i < strand.size(); ++i) {
        const bool in_lost_slot = i >= 400 && i < 500;
        if (!in_lost_slot) CHECK(result.strand[i] == strand[i]);
    }
}

TEST_CASE("duplicate indices with equal payloads dedupe, differing ones fail") {
    channel::SplitMix64 rng(78);
    const auto strand = random_strand(rng, 500);
    auto oligos = fragment(strand, 100);
    auto dup = oligos[2];
    oligos.push_back(dup);
    CHECK(reassemble(oligos).strand == strand);

    oligos.back().payload.push_back(Nucleotide::A);
    CHECK_THROWS_AS(reassemble(oligos), CorruptStreamError);
}

TEST_CASE("undecodable header drops the oligo into the missing list") {
    channel::SplitMix64 rng(79);
    const auto strand = random_strand(rng, 600);
    auto oligos = fragment(strand, 100);
    // "AA" is not a dictionary pair: poison the header word of oligo 3.
    NucleotideSequence bad;
    bad.push_back(Nucleotide::A);
    bad.push_back(Nucleotide::A);
    bad.append(oligos[3].header.subseq(2, oligos[3].header.size() - 2));
    oligos[3].header = bad;
    const auto result = reassemble(oligos);
    CHECK(result.missing.size() == 1);
    CHECK(!result.warnings.empty());
    CHECK(result.strand.size() == strand.size());
}

TEST_CASE("deleting one nucleotide inside an oligo stays local") {
    channel::SplitMix64 rng(80);
    const auto strand = random_strand(rng, 2000);
    auto oligos = fragment(strand, 100);
    const std::size_t victim = 7;
    // Delete inside the payload (past the 13-nt header).
    const auto whole = oligos[victim].to_sequence();
    NucleotideSequence cut;
    for (std::size_t i = 0; i < whole.size(); ++i)
        if (i != 40) cut.push_back(whole[i]);
    oligos[victim].header = cut.subseq(0, kHeaderLen);
    oligos[victim].payload = cut.subseq(kHeaderLen, cut.size() - kHeaderLen);

    const auto result = reassemble(oligos);
    CHECK(result.strand.size() == strand.size());
    // Slot 7 covers data [600, 700) (prefix shifts oligo 0's data). Everything
    // outside is untouched.
    for (std::size_t i = 0; i < strand.size(); ++i) {
        const bool in_slot = i >= 700 && i < 800;
        if (!in_slot) CHECK(result.strand[i] == strand[i]);
    }
}

TEST_CASE("oligo FASTA round-trips with ids") {
    channel::SplitMix64 rng(81);
    const auto strand = random_strand(rng, 777);
    const auto oligos = fragment(strand, 150);
    std::stringstream ss;
    write_oligos_fasta(ss, oligos);
    const std::string text = ss.str();
    CHECK(text.find(">oligo_0") != std::string::npos);

    std::istringstream in(text);
    const auto back = read_oligos_fasta(in);
    REQUIRE(back.size() == oligos.size());
    const auto result = reassemble(back);
    CHECK(result.strand == strand);
}
