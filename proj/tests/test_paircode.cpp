#include "doctest.h"

#include <set>

#include "dnacodec/channel.hpp"
#include "dnacodec/paircode.hpp"

using namespace dnacodec;
namespace pc = dnacodec::paircode;

namespace {

// Independent oracle: enumerate every word of the given length directly from
// the dictionary definition, without going through codeword().
std::vector<std::string> brute_force_words(int len) {
    std::vector<std::string> words = {""};
    for (int p = 0; p < len / 2; ++p) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (const auto& pair : pc::kPairs)
                next.push_back(w + to_char(pair[0]) + to_char(pair[1]));
        words = std::move(next);
    }
    if (len % 2 != 0) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (Nucleotide t : pc::kTails)
                next.push_back(w + to_char(t));
        words = std::move(next);
    }
    return words;
}

} // namespace

TEST_CASE("capacity closed form") {
    CHECK(pc::capacity(2) == 10);
    CHECK(pc::capacity(3) == 40);
    CHECK(pc::capacity(4) == 100);
    CHECK(pc::capacity(5) == 400);
    CHECK(pc::capacity(8) == 10000);
    CHECK(pc::capacity(12) == 1000000);
    CHECK_THROWS_AS(pc::capacity(1), std::invalid_argument);
    CHECK_THROWS_AS(pc::capacity(0), std::invalid_argument);
}

TEST_CASE("capacity equals brute-force enumeration for short lengths") {
    for (int len = 2; len <= 5; ++len)
        CHECK(pc::capacity(len) == static_cast<std::int64_t>(brute_force_words(len).size()));
}

TEST_CASE("codeword enumeration matches the dictionary order") {
    CHECK(pc::codeword(2, 0).to_string() == "AT");
    CHECK(pc::codeword(2, 9).to_string() == "GT");
    CHECK(pc::codeword(3, 1).to_string() == "ATT");
    CHECK_THROWS_AS(pc::codeword(2, 10), std::out_of_range);
    CHECK_THROWS_AS(pc::codeword(3, -1), std::out_of_range);
}

TEST_CASE("codeword enumeration equals brute force for length 3") {
    const auto words = brute_force_words(3);
    // The enumeration is pairs-digit-major with the 4-symbol tail minor, which
    // is exactly the nested loop order of the oracle.
    for (std::size_t i = 0; i < words.size(); ++i)
        CHECK(pc::codeword(3, static_cast<std::int64_t>(i)).to_string() == words[i]);
}

TEST_CASE("index_of inverts codeword exhaustively for short lengths") {
    for (int len = 2; len <= 5; ++len)
        for (std::int64_t i = 0; i < pc::capacity(len); ++i)
            CHECK(pc::index_of(pc::codeword(len, i)) == i);
}

TEST_CASE("index_of inverts codeword on sampled long words") {
    channel::SplitMix64 rng(11);
    for (int len = 6; len <= 8; ++len)
        for (int it = 0; it < 200; ++it) {
            const std::int64_t i =
                static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(pc::capacity(len))));
            CHECK(pc::index_of(pc::codeword(len, i)) == i);
        }
}

TEST_CASE("index_of rejects non-dictionary pairs") {
    CHECK(pc::index_of(parse_text("GT")) == 9);
    CHECK(pc::index_of(parse_text("AT")) == 0);
    CHECK_THROWS_AS(pc::index_of(parse_text("AA")), CorruptStreamError);
    CHECK_THROWS_AS(pc::index_of(parse_text("CG")), CorruptStreamError);
}

TEST_CASE("category table matches the published ranges") {
    CHECK(pc::category_of(0).category == 0);
    CHECK(pc::category_of(-17).category == 3);
    CHECK(pc::category_of(300).category == 6);
    CHECK(pc::category_of(5).category == 2);
    CHECK(pc::category_of(-7775).category == 8);
    CHECK_THROWS_AS(pc::category_of(7776), std::out_of_range);
    CHECK_THROWS_AS(pc::category_of(-7776), std::out_of_range);
}

TEST_CASE("category capacities equal the range sizes exactly") {
    for (const auto& entry : pc::category_table()) {
        if (entry.category == 0) continue;
        CHECK(pc::capacity(entry.category) == entry.range_size());
    }
}

TEST_CASE("encode_value maps the ordered value list") {
    const auto [c1, w1] = pc::encode_value(-5);
    CHECK(c1 == 2);
    CHECK(w1.to_string() == "AT");
    const auto [c2, w2] = pc::encode_value(1);
    CHECK(c2 == 2);
    CHECK(w2.to_string() == "TC");
    const auto [c0, w0] = pc::encode_value(0);
    CHECK(c0 == 0);
    CHECK(w0.empty());
}

TEST_CASE("encode_value order oracle for category 2") {
    // The ordered list [-5..-1, 1..5] enumerated directly.
    std::vector<int> ordered;
    for (int v = -5; v <= -1; ++v) ordered.push_back(v);
    for (int v = 1; v <= 5; ++v) ordered.push_back(v);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        const auto [cat, word] = pc::encode_value(ordered[i]);
        CHECK(cat == 2);
        CHECK(pc::index_of(word) == static_cast<std::int64_t>(i));
    }
}

TEST_CASE("decode_value inverts encode_value over the whole table") {
    for (int v = -pc::kMaxCategoryValue; v <= pc::kMaxCategoryValue; ++v) {
        const auto [cat, word] = pc::encode_value(v);
        CHECK(pc::decode_value(cat, word) == v);
    }
}

TEST_CASE("decode_value error paths") {
    CHECK(pc::decode_value(0, NucleotideSequence{}) == 0);
    CHECK(pc::decode_value(2, parse_text("AT")) == -5);
    CHECK_THROWS_AS(pc::decode_value(2, parse_text("AA")), CorruptStreamError);
    CHECK_THROWS_AS(pc::decode_value(1, parse_text("A")), CorruptStreamError);
    CHECK_THROWS_AS(pc::decode_value(2, parse_text("ATA")), CorruptStreamError);
}

TEST_CASE("codewords satisfy the biological constraints") {
    for (int len = 2; len <= 5; ++len)
        for (std::int64_t i = 0; i < pc::capacity(len); ++i) {
            const auto word = pc::codeword(len, i);
            const auto report = validate(word, 3);
            CHECK(report.homopolymer_clean());
            if (len % 2 == 0) CHECK(report.gc_count <= report.at_count);
        }
}

TEST_CASE("all pairwise codeword concatenations stay homopolymer-safe") {
    // Brute force over every ordered pair with lengths in 2..5.
    std::vector<NucleotideSequence> words;
    for (int len = 2; len <= 5; ++len)
        for (std::int64_t i = 0; i < pc::capacity(len); ++i)
            words.push_back(pc::codeword(len, i));

    std::size_t worst = 0;
    for (const auto& a : words)
        for (const auto& b : words) {
            const auto report = validate(a + b, 3);
            worst = std::max(worst, report.max_homopolymer_run);
        }
    CHECK(worst <= 3);
}
