#include "doctest.h"

#include <algorithm>
#include <vector>

#include "dnacodec/channel.hpp"
#include "dnacodec/trit_coder.hpp"

using namespace dnacodec;
using namespace dnacodec::trit;

namespace {

// Oracle: minimum weighted length over every feasible prefix-free ternary
// length assignment (a length vector is feasible iff its Kraft sum is <= 1).
// Optimal assignments pair larger counts with shorter lengths, so searching
// non-decreasing length vectors against descending counts is exhaustive.
void search_lengths(const std::vector<std::uint64_t>& counts_desc, std::vector<int>& lengths,
                    std::size_t at, int min_len, int max_len, std::uint64_t& best) {
    if (at == lengths.size()) {
        std::uint64_t kraft_num = 0; // scaled by 3^max_len
        std::uint64_t pow3_max = 1;
        for (int i = 0; i < max_len; ++i) pow3_max *= 3;
        for (int len : lengths) {
            std::uint64_t term = pow3_max;
            for (int i = 0; i < len; ++i) term /= 3;
            kraft_num += term;
        }
        if (kraft_num > pow3_max) return;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < lengths.size(); ++i)
            total += counts_desc[i] * static_cast<std::uint64_t>(lengths[i]);
        best = std::min(best, total);
        return;
    }
    for (int len = min_len; len <= max_len; ++len) {
        lengths[at] = len;
        search_lengths(counts_desc, lengths, at + 1, len, max_len, best);
    }
}

std::uint64_t optimal_weighted_length(std::vector<std::uint64_t> counts, int max_len = 7) {
    std::sort(counts.begin(), counts.end(), std::greater<>());
    std::vector<int> lengths(counts.size(), 1);
    std::uint64_t best = ~0ull;
    search_lengths(counts, lengths, 0, 1, max_len, best);
    return best;
}

FrequencyTable table_from(const std::vector<std::uint64_t>& counts) {
    FrequencyTable t;
    for (std::size_t i = 0; i < counts.size(); ++i)
        t.counts[static_cast<int>(i)] = counts[i];
    return t;
}

} // namespace

TEST_CASE("single symbol still gets a one-trit code") {
    const auto code = TernaryCode::build(table_from({1}));
    CHECK(code.length_of(0) == 1);
    CHECK(code.dummy_ids().size() == 2);
}

TEST_CASE("three equal symbols fill the first level") {
    const auto code = TernaryCode::build(table_from({1, 1, 1}));
    CHECK(code.code_for(0) == TritStream{0});
    CHECK(code.code_for(1) == TritStream{1});
    CHECK(code.code_for(2) == TritStream{2});
    CHECK(code.dummy_ids().empty());
}

TEST_CASE("five-symbol example splits 1-trit and 2-trit codes") {
    const auto code = TernaryCode::build(table_from({5, 5, 5, 1, 1}));
    CHECK(code.length_of(0) == 1);
    CHECK(code.length_of(1) == 1);
    CHECK(code.length_of(2) == 1);
    CHECK(code.length_of(3) == 2);
    CHECK(code.length_of(4) == 2);
    // DERIVED oracle agreement for the same table.
    CHECK(code.weighted_length(table_from({5, 5, 5, 1, 1})) ==
          optimal_weighted_length({5, 5, 5, 1, 1}));
}

TEST_CASE("Kraft equality holds including dummies") {
    channel::SplitMix64 rng(21);
    for (int it = 0; it < 60; ++it) {
        std::vector<std::uint64_t> counts(1 + rng.below(9));
        for (auto& c : counts) c = 1 + rng.below(50);
        const auto code = TernaryCode::build(table_from(counts));
        const auto [num, denom] = code.kraft_sum();
        CHECK(num == denom);
    }
}

TEST_CASE("build_code is optimal for small alphabets") {
    // Spot-check here; the acceptance suite runs the full <=6 symbol sweep.
    channel::SplitMix64 rng(22);
    for (int it = 0; it < 150; ++it) {
        std::vector<std::uint64_t> counts(1 + rng.below(6));
        for (auto& c : counts) c = 1 + rng.below(8);
        const auto code = TernaryCode::build(table_from(counts));
        CHECK(code.weighted_length(table_from(counts)) == optimal_weighted_length(counts));
    }
}

TEST_CASE("encode/decode round-trips random symbol streams") {
    channel::SplitMix64 rng(23);
    for (int it = 0; it < 60; ++it) {
        std::vector<std::uint64_t> counts(2 + rng.below(8));
        for (auto& c : counts) c = 1 + rng.below(30);
        const auto code = TernaryCode::build(table_from(counts));

        std::vector<int> stream(rng.below(200));
        for (auto& s : stream) s = static_cast<int>(rng.below(counts.size()));
        const TritStream trits = encode_symbols(stream, code);
        const auto decoded = decode_symbols(trits, code, stream.size());
        CHECK(decoded.symbols == stream);
        CHECK(decoded.trits_consumed == trits.size());
    }
}

TEST_CASE("decode detects exhaustion and unknown symbols") {
    const auto code = TernaryCode::build(table_from({3, 2, 1, 1}));
    CHECK_THROWS_AS(decode_symbols({}, code, 1), CorruptStreamError);
    CHECK_THROWS_AS(encode_symbols({99}, code), std::invalid_argument);
}

TEST_CASE("empty stream encodes to nothing") {
    const auto code = TernaryCode::build(table_from({1, 1}));
    CHECK(encode_symbols({}, code).empty());
    CHECK(encode_symbols({0}, code) == code.code_for(0));
}

TEST_CASE("canonical serialization round-trips") {
    channel::SplitMix64 rng(24);
    for (int it = 0; it < 40; ++it) {
        std::vector<std::uint64_t> counts(1 + rng.below(12));
        for (auto& c : counts) c = 1 + rng.below(100);
        const auto code = TernaryCode::build(table_from(counts));
        const auto bytes = code.serialize();
        ByteReader r(bytes);
        const auto back = TernaryCode::deserialize(r);
        CHECK(r.remaining() == 0);
        for (std::size_t s = 0; s < counts.size(); ++s)
            CHECK(back.code_for(static_cast<int>(s)) == code.code_for(static_cast<int>(s)));
        CHECK(back.dummy_ids() == code.dummy_ids());
    }
}

TEST_CASE("rotation coder emits the fixed table") {
    CHECK(trits_to_nt({0, 0, 0}, Nucleotide::A).to_string() == "CGT");
    CHECK(trits_to_nt({2}, Nucleotide::T).to_string() == "G");
    CHECK(trits_to_nt({}, Nucleotide::A).empty());
}

TEST_CASE("rotation output never repeats adjacent nucleotides") {
    channel::SplitMix64 rng(25);
    for (int it = 0; it < 50; ++it) {
        TritStream trits(rng.below(500));
        for (auto& t : trits) t = static_cast<std::uint8_t>(rng.below(3));
        const Nucleotide prev = static_cast<Nucleotide>(rng.below(4));
        const auto seq = trits_to_nt(trits, prev);
        if (!seq.empty()) CHECK(seq[0] != prev);
        for (std::size_t i = 1; i < seq.size(); ++i)
            CHECK(seq[i] != seq[i - 1]);
        CHECK(nt_to_trits(seq, prev) == trits);
    }
}

TEST_CASE("nt_to_trits rejects adjacent repeats") {
    CHECK_THROWS_AS(nt_to_trits(parse_text("AA"), Nucleotide::T), CorruptStreamError);
    CHECK_THROWS_AS(nt_to_trits(parse_text("T"), Nucleotide::T), CorruptStreamError);
}
