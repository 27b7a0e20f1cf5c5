#include "dnacodec/nucleotide.hpp"

#include <array>
#include <cctype>

namespace dnacodec {

NucleotideSequence NucleotideSequence::subseq(std::size_t pos, std::size_t len) const {
    std::vector<Nucleotide> out;
    const std::size_t end = (pos + len < symbols_.size()) ? pos + len : symbols_.size();
    if (pos < end) out.assign(symbols_.begin() + pos, symbols_.begin() + end);
    return NucleotideSequence(std::move(out));
}

std::string NucleotideSequence::to_string() const {
    std::string s;
    s.reserve(symbols_.size());
    for (Nucleotide n : symbols_) s.push_back(to_char(n));
    return s;
}

bool ConstraintReport::homopolymer_clean() const noexcept {
    for (const Violation& v : violations)
        if (v.kind == ViolationKind::Homopolymer) return false;
    return true;
}

ConstraintReport validate(const NucleotideSequence& seq, std::size_t max_run) {
    ConstraintReport report;
    if (seq.empty()) return report;

    std::size_t run_start = 0;
    std::size_t run_len = 1;
    auto close_run = [&](std::size_t) {
        if (run_len > report.max_homopolymer_run) report.max_homopolymer_run = run_len;
        if (run_len > max_run)
            report.violations.push_back({run_start, ViolationKind::Homopolymer});
    };

    for (std::size_t i = 0; i < seq.size(); ++i) {
        Nucleotide n = seq[i];
        if (n == Nucleotide::C || n == Nucleotide::G)
            ++report.gc_count;
        else
            ++report.at_count;
        if (i > 0) {
            if (n == seq[i - 1]) {
                ++run_len;
            } else {
                close_run(i);
                run_start = i;
                run_len = 1;
            }
        }
    }
    close_run(seq.size());

    if (report.gc_count > report.at_count)
        report.violations.push_back({0, ViolationKind::GcImbalance});
    return report;
}

NucleotideSequence parse_text(std::string_view text) {
    static constexpr std::array<int, 256> lut = [] {
        std::array<int, 256> t{};
        t.fill(-1);
        t['A'] = t['a'] = 0;
        t['C'] = t['c'] = 1;
        t['G'] = t['g'] = 2;
        t['T'] = t['t'] = 3;
        return t;
    }();

    NucleotideSequence seq;
    seq.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        const int v = lut[c];
        if (v < 0)
            throw FormatError("invalid nucleotide character '" + std::string(1, text[i]) +
                              "' at index " + std::to_string(i));
        seq.push_back(static_cast<Nucleotide>(v));
    }
    return seq;
}

std::string emit_text(const NucleotideSequence& seq) {
    return seq.to_string();
}

} // namespace dnacodec
