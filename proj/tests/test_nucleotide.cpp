#include "doctest.h"

#include <sstream>

#include "dnacodec/channel.hpp"
#include "dnacodec/fasta.hpp"
#include "dnacodec/nucleotide.hpp"

using namespace dnacodec;

namespace {

NucleotideSequence random_sequence(channel::SplitMix64& rng, std::size_t len) {
    NucleotideSequence s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        s.push_back(static_cast<Nucleotide>(rng.below(4)));
    return s;
}

} // namespace

TEST_CASE("validate reports runs at the boundary") {
    auto report = validate(parse_text("AAAT"), 3);
    CHECK(report.violations.empty());
    CHECK(report.max_homopolymer_run == 3);
}

TEST_CASE("validate flags a run of four") {
    auto report = validate(parse_text("AAAAT"), 3);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::Homopolymer);
    CHECK(report.violations[0].position == 0);
    CHECK(report.max_homopolymer_run == 4);
}

TEST_CASE("validate flags GC imbalance") {
    auto report = validate(parse_text("GGC"), 3);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::GcImbalance);
    CHECK(report.gc_count == 3);
    CHECK(report.at_count == 0);
}

TEST_CASE("validate on the empty sequence") {
    auto report = validate(NucleotideSequence{}, 3);
    CHECK(report.max_homopolymer_run == 0);
    CHECK(report.violations.empty());
}

TEST_CASE("parse_text basics") {
    CHECK(parse_text("ACGT").size() == 4);
    CHECK(parse_text("ac gt") == parse_text("ACGT"));
    CHECK_THROWS_WITH_AS(parse_text("ACGX"), doctest::Contains("index 3"), FormatError);
}

TEST_CASE("parse/emit round-trip on random sequences") {
    channel::SplitMix64 rng(7);
    for (int it = 0; it < 50; ++it) {
        const auto s = random_sequence(rng, rng.below(200));
        CHECK(parse_text(emit_text(s)) == s);
    }
}

TEST_CASE("gc + at counts partition the length") {
    channel::SplitMix64 rng(8);
    for (int it = 0; it < 50; ++it) {
        const auto s = random_sequence(rng, rng.below(300));
        const auto report = validate(s, 3);
        CHECK(report.gc_count + report.at_count == s.size());
    }
}

TEST_CASE("concatenation max run dominates the parts") {
    channel::SplitMix64 rng(9);
    for (int it = 0; it < 100; ++it) {
        const auto a = random_sequence(rng, 1 + rng.below(40));
        const auto b = random_sequence(rng, 1 + rng.below(40));
        const auto ra = validate(a, 3).max_homopolymer_run;
        const auto rb = validate(b, 3).max_homopolymer_run;
        const auto rc = validate(a + b, 3).max_homopolymer_run;
        CHECK(rc >= ra);
        CHECK(rc >= rb);
    }
}

TEST_CASE("FASTA emission wraps at 80 columns and round-trips") {
    channel::SplitMix64 rng(10);
    const auto s = random_sequence(rng, 200);
    std::stringstream ss;
    write_fasta(ss, "strand", s);
    std::string line;
    std::getline(ss, line);
    CHECK(line == ">strand");
    std::getline(ss, line);
    CHECK(line.size() == 80);

    ss.clear();
    ss.seekg(0);
    const auto records = read_fasta(ss);
    REQUIRE(records.size() == 1);
    CHECK(records[0].id == "strand");
    CHECK(records[0].seq == s);
}

TEST_CASE("plain text format round-trips") {
    const auto s = parse_text("ACGTACGT");
    std::stringstream ss;
    write_plain(ss, s);
    const auto back = read_plain(ss);
    REQUIRE(back.size() == 1);
    CHECK(back[0] == s);
}
