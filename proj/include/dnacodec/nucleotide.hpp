#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnacodec/errors.hpp"

namespace dnacodec {

/// The four DNA symbols. The numeric order A < C < G < T is the one global
/// ordering convention; every enumeration and tie-break in the toolkit uses it.
enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

inline char to_char(Nucleotide n) {
    constexpr char table[4] = {'A', 'C', 'G', 'T'};
    return table[static_cast<std::uint8_t>(n)];
}

/// Cyclic successor A -> C -> G -> T -> A, used by the trit rotation coder.
inline Nucleotide cyclic_next(Nucleotide n) {
    return static_cast<Nucleotide>((static_cast<std::uint8_t>(n) + 1) & 3u);
}

/// An ordered sequence over {A,C,G,T}. Immutable value semantics by
/// convention: functions return new sequences rather than mutating shared ones.
class NucleotideSequence {
public:
    NucleotideSequence() = default;
    explicit NucleotideSequence(std::vector<Nucleotide> symbols)
        : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Nucleotide operator[](std::size_t i) const { return symbols_[i]; }
    Nucleotide back() const { return symbols_.back(); }

    void push_back(Nucleotide n) { symbols_.push_back(n); }
    void append(const NucleotideSequence& other) {
        symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    }
    void reserve(std::size_t n) { symbols_.reserve(n); }

    NucleotideSequence subseq(std::size_t pos, std::size_t len) const;

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    bool operator==(const NucleotideSequence&) const = default;

    std::string to_string() const;

private:
    std::vector<Nucleotide> symbols_;
};

inline NucleotideSequence operator+(const NucleotideSequence& a, const NucleotideSequence& b) {
    NucleotideSequence r = a;
    r.append(b);
    return r;
}

enum class ViolationKind { Homopolymer, GcImbalance };

struct Violation {
    std::size_t position;
    ViolationKind kind;
    bool operator==(const Violation&) const = default;
};

/// Result of checking a sequence against the synthesis/sequencing rules.
/// max_homopolymer_run is 0 for the empty sequence.
struct ConstraintReport {
    std::size_t max_homopolymer_run = 0;
    std::size_t gc_count = 0;
    std::size_t at_count = 0;
    std::vector<Violation> violations;

    bool clean() const noexcept { return violations.empty(); }
    bool homopolymer_clean() const noexcept;
};

/// Scans for homopolymer runs longer than max_run (one violation per maximal
/// run, at the run's start) and flags a GC imbalance iff gc_count > at_count
/// (reported at position 0). Requires max_run >= 1.
ConstraintReport validate(const NucleotideSequence& seq, std::size_t max_run);

/// Parses A/C/G/T text, case-insensitive, skipping whitespace. Any other
/// character raises FormatError naming its index in the original text.
NucleotideSequence parse_text(std::string_view text);

std::string emit_text(const NucleotideSequence& seq);

} // namespace dnacodec
