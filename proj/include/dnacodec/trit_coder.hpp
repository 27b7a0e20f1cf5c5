#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dnacodec/bytesio.hpp"
#include "dnacodec/nucleotide.hpp"

namespace dnacodec {
namespace trit {

/// A base-3 digit stream; each element is 0, 1 or 2.
using TritStream = std::vector<std::uint8_t>;

/// Symbol id -> occurrence count. Ids are opaque non-negative integers.
struct FrequencyTable {
    std::map<int, std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [id, c] : counts) t += c;
        return t;
    }
};

/// Prefix-free ternary code from a Huffman construction over the table,
/// canonicalized so equal length profiles always produce identical codes.
///
/// Construction: pad with zero-weight dummy symbols until (n - 1) is even
/// (a lone real symbol gets two dummies), then repeatedly merge the three
/// lightest nodes, ties broken by smallest contained symbol id. Codes are
/// reassigned canonically by ascending (length, id). Dummy symbols take the
/// ids just above the largest real id; decoding one signals corruption.
class TernaryCode {
public:
    static TernaryCode build(const FrequencyTable& freqs);

    const TritStream& code_for(int symbol) const;
    std::size_t length_of(int symbol) const { return code_for(symbol).size(); }
    bool contains(int symbol) const { return codes_.count(symbol) != 0; }
    bool is_dummy(int symbol) const;

    int max_length() const noexcept { return max_length_; }
    std::size_t real_symbol_count() const noexcept { return n_real_; }
    const std::vector<int>& dummy_ids() const noexcept { return dummy_ids_; }

    /// Sum of freq * codeword length over the table (dummies have zero weight).
    std::uint64_t weighted_length(const FrequencyTable& freqs) const;

    /// Sum of 3^-len over all symbols including dummies; exactly 1 by
    /// construction. Returned as a pair (numerator, 3^max_length) to stay exact.
    std::pair<std::uint64_t, std::uint64_t> kraft_sum() const;

    /// Header form: [n_real u8][n_dummy u8][L u8][count of symbols per length
    /// 1..L][symbol ids in canonical order]. Ids must fit in a byte.
    std::vector<std::uint8_t> serialize() const;
    static TernaryCode deserialize(ByteReader& reader);

    /// Incremental prefix decoder over the code tree.
    class Walker {
    public:
        explicit Walker(const TernaryCode& code);
        /// Feeds one trit; returns the decoded symbol id when a codeword
        /// completes (resetting to the root), or -1 while mid-codeword.
        /// Dummy symbols are returned like real ones; callers check is_dummy.
        int step(std::uint8_t t);
        void reset() { node_ = 0; }

    private:
        const TernaryCode& code_;
        std::int32_t node_ = 0;
    };

private:
    friend class Walker;
    struct Node {
        std::array<std::int32_t, 3> child = {-1, -1, -1};
        int symbol = -1; // leaf payload; -1 for interior nodes
    };

    void assign_canonical(std::vector<std::pair<int, int>>& length_id); // (len, id)
    void build_walker_tree();

    std::map<int, TritStream> codes_;
    std::vector<int> dummy_ids_;
    std::vector<Node> nodes_;
    int max_length_ = 0;
    std::size_t n_real_ = 0;
};

/// Encodes a symbol stream as the concatenation of per-symbol codewords.
TritStream encode_symbols(const std::vector<int>& symbols, const TernaryCode& code);

struct DecodeSymbolsResult {
    std::vector<int> symbols;
    std::size_t trits_consumed;
};

/// Decodes exactly `count` symbols by prefix walking. Exhausting the trits
/// mid-codeword or landing on a dummy symbol throws CorruptStreamError.
DecodeSymbolsResult decode_symbols(const TritStream& trits, const TernaryCode& code,
                                   std::size_t count);

/// Maps each trit to one of the three nucleotides that differ from the
/// previously emitted one, in cyclic order A->C->G->T->A starting just after
/// `previous`. The output never repeats a nucleotide in adjacent positions.
/// Streams start from the virtual previous nucleotide A.
NucleotideSequence trits_to_nt(const TritStream& trits, Nucleotide previous);

/// Exact inverse; an adjacent repeat (including a first symbol equal to
/// `previous`) throws CorruptStreamError at the repeat position.
TritStream nt_to_trits(const NucleotideSequence& seq, Nucleotide previous);

/// Streaming form used by the image codec, where Huffman trit segments and
/// raw PAIRCODE words interleave in one nucleotide stream. The rotation state
/// follows every emitted nucleotide, including the raw words.
class RotationEncoder {
public:
    explicit RotationEncoder(Nucleotide prev = Nucleotide::A) : prev_(prev) {}
    Nucleotide previous() const noexcept { return prev_; }

    void push_trits(const TritStream& trits, NucleotideSequence& out) {
        for (std::uint8_t t : trits) {
            Nucleotide n = prev_;
            for (int k = 0; k <= t; ++k) n = cyclic_next(n);
            out.push_back(n);
            prev_ = n;
        }
    }

    void push_word(const NucleotideSequence& word, NucleotideSequence& out) {
        out.append(word);
        if (!word.empty()) prev_ = word.back();
    }

private:
    Nucleotide prev_ = Nucleotide::A;
};

class RotationDecoder {
public:
    explicit RotationDecoder(Nucleotide prev = Nucleotide::A) : prev_(prev) {}
    Nucleotide previous() const noexcept { return prev_; }

    /// Converts one rotation-coded nucleotide back to its trit.
    std::uint8_t next_trit(Nucleotide n, std::size_t position) {
        if (n == prev_)
            throw CorruptStreamError("adjacent nucleotide repeat in trit segment", position);
        std::uint8_t trit = static_cast<std::uint8_t>(
            (static_cast<int>(n) - static_cast<int>(prev_) + 4) % 4 - 1);
        prev_ = n;
        return trit;
    }

    /// Skips over a raw (non-rotation) word, keeping the state in sync.
    void consume_word(const NucleotideSequence& word) {
        if (!word.empty()) prev_ = word.back();
    }

private:
    Nucleotide prev_ = Nucleotide::A;
};

} // namespace trit
} // namespace dnacodec
