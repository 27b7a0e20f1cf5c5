#include "doctest.h"

#include "dnacodec/channel.hpp"
#include "dnacodec/jpegdna.hpp"
#include "dnacodec/paircode.hpp"

using namespace dnacodec;
using jpegdna::JpegDnaStream;

namespace {

ImageGray8 random_image(channel::SplitMix64& rng, int w, int h) {
    ImageGray8 img(w, h);
    // Blocky low-frequency content with noise, so AC symbols vary.
    const int bx = 4 + static_cast<int>(rng.below(12));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::uint64_t base = 32 + 24 * ((x / bx + y / bx) % 8);
            img.at(x, y) = static_cast<std::uint8_t>(
                std::min<std::uint64_t>(255, base + rng.below(24)));
        }
    return img;
}

BlockIndexStream synthetic_stream(int blocks, std::int32_t dc_step) {
    BlockIndexStream s;
    s.blocks_x = blocks;
    s.blocks_y = 1;
    std::int32_t dc = 0;
    for (int i = 0; i < blocks; ++i) {
        Block b;
        b.dc_diff = (i % 2 == 0) ? dc_step : -dc_step / 2;
        dc += b.dc_diff;
        if (i % 3 == 1) b.ac.emplace_back(static_cast<std::uint8_t>(i % 7), 5 - i % 11);
        if (i % 5 == 2) {
            b.ac.emplace_back(static_cast<std::uint8_t>(15), 0); // ZRL
            b.ac.emplace_back(static_cast<std::uint8_t>(3), 100 + i);
        }
        for (auto& [run, value] : b.ac)
            if (value == 0 && run != 15) value = 1;
        s.blocks.push_back(std::move(b));
    }
    return s;
}

} // namespace

TEST_CASE("all-zero index stream encodes to DC symbols and EOBs only") {
    BlockIndexStream s;
    s.blocks_x = 3;
    s.blocks_y = 1;
    s.blocks.assign(3, Block{});
    const auto stream = jpegdna::entropy_encode(s, 24, 8, 50);
    // One DC category-0 symbol and one EOB per block, no PAIRCODE words:
    // with a single-symbol table each codeword is 1 trit -> 1 nt.
    CHECK(stream.payload.size() == 6);
    const auto decoded = jpegdna::entropy_decode(stream);
    CHECK(!decoded.corrupted);
    CHECK(decoded.indices == s);
}

TEST_CASE("single block with dc_diff -5 emits category 2 then AT") {
    BlockIndexStream s;
    s.blocks_x = 1;
    s.blocks_y = 1;
    Block b;
    b.dc_diff = -5;
    s.blocks.push_back(b);
    const auto stream = jpegdna::entropy_encode(s, 8, 8, 50);
    // Payload = DC symbol (1 nt) + "AT" + EOB symbol (1 nt).
    REQUIRE(stream.payload.size() == 4);
    CHECK(stream.payload.subseq(1, 2).to_string() == "AT");
    const auto decoded = jpegdna::entropy_decode(stream);
    CHECK(!decoded.corrupted);
    CHECK(decoded.indices.blocks[0].dc_diff == -5);
}

TEST_CASE("entropy round-trip on synthetic streams") {
    for (int blocks = 1; blocks <= 12; ++blocks) {
        const auto s = synthetic_stream(blocks, 40);
        const auto stream = jpegdna::entropy_encode(s, blocks * 8, 8, 50);
        const auto decoded = jpegdna::entropy_decode(stream);
        CHECK(!decoded.corrupted);
        CHECK(decoded.indices == s);
        CHECK(decoded.block_start_nt.size() == static_cast<std::size_t>(blocks));
    }
}

TEST_CASE("full image round-trip through the wire format") {
    channel::SplitMix64 rng(51);
    for (int it = 0; it < 8; ++it) {
        const ImageGray8 img = random_image(rng, 8 * (1 + static_cast<int>(rng.below(5))),
                                            8 * (1 + static_cast<int>(rng.below(5))));
        const int quality = static_cast<int>(25 + rng.below(70));
        const auto stream = jpegdna::encode_image(img, quality);
        const auto wire = stream.to_sequence();

        const auto parsed = JpegDnaStream::parse(wire);
        CHECK(parsed.header.width == img.width);
        CHECK(parsed.header.height == img.height);
        CHECK(parsed.header.quality == quality);
        CHECK(parsed.payload == stream.payload);

        const auto indices = forward_pipeline(img, quality);
        const auto decoded = jpegdna::entropy_decode(parsed);
        CHECK(!decoded.corrupted);
        CHECK(decoded.indices == indices);
    }
}

TEST_CASE("payload streams satisfy the homopolymer rule") {
    channel::SplitMix64 rng(52);
    for (int it = 0; it < 10; ++it) {
        const ImageGray8 img = random_image(rng, 40, 32);
        const auto stream = jpegdna::encode_image(img, static_cast<int>(10 + rng.below(90)));
        const auto report = validate(stream.to_sequence(), 3);
        CHECK(report.homopolymer_clean());
    }
}

TEST_CASE("values in 1..5 always cost exactly 2 payload nucleotides") {
    for (int v = 1; v <= 5; ++v) {
        CHECK(paircode::encode_value(v).first == 2);
        CHECK(paircode::encode_value(-v).first == 2);
    }
}

TEST_CASE("a deletion truncates decoding but keeps the prefix intact") {
    channel::SplitMix64 rng(53);
    const ImageGray8 img = random_image(rng, 64, 64);
    const auto stream = jpegdna::encode_image(img, 75);
    const auto clean = jpegdna::entropy_decode(stream);
    REQUIRE(!clean.corrupted);

    // Delete mid-payload and decode.
    const std::size_t cut = stream.payload.size() / 2;
    JpegDnaStream damaged = stream;
    NucleotideSequence payload;
    for (std::size_t i = 0; i < stream.payload.size(); ++i)
        if (i != cut) payload.push_back(stream.payload[i]);
    damaged.payload = std::move(payload);

    const auto decoded = jpegdna::entropy_decode(damaged);
    CHECK(decoded.corrupted);
    CHECK(decoded.failure_position >= cut);
    CHECK(decoded.indices.blocks.size() == clean.indices.blocks.size());

    // Blocks fully coded before the deletion point decode identically.
    std::size_t safe_blocks = 0;
    for (std::size_t b = 0; b + 1 < clean.block_start_nt.size(); ++b)
        if (clean.block_start_nt[b + 1] <= cut) safe_blocks = b + 1;
    for (std::size_t b = 0; b < safe_blocks; ++b)
        CHECK(decoded.indices.blocks[b] == clean.indices.blocks[b]);
}

TEST_CASE("header damage is fatal") {
    channel::SplitMix64 rng(54);
    const ImageGray8 img = random_image(rng, 16, 16);
    auto wire = jpegdna::encode_image(img, 50).to_sequence();
    NucleotideSequence damaged;
    for (std::size_t i = 1; i < wire.size(); ++i) damaged.push_back(wire[i]);
    CHECK_THROWS_AS(JpegDnaStream::parse(damaged), FormatError);
}
