#include "dnacodec/paircode.hpp"

#include <stdexcept>
#include <string>

#include "dnacodec/errors.hpp"

namespace dnacodec {
namespace paircode {

namespace {

// pair_digit[a][b] = digit of pair (a,b) in kPairs, or -1.
constexpr std::array<std::array<int, 4>, 4> make_pair_lut() {
    std::array<std::array<int, 4>, 4> lut{};
    for (auto& row : lut) row.fill(-1);
    for (int d = 0; d < 10; ++d) {
        const auto& p = kPairs[static_cast<std::size_t>(d)];
        lut[static_cast<int>(p[0])][static_cast<int>(p[1])] = d;
    }
    return lut;
}
constexpr auto kPairDigit = make_pair_lut();

constexpr std::array<int, 4> make_tail_lut() {
    std::array<int, 4> lut{};
    for (int t = 0; t < 4; ++t) lut[static_cast<int>(kTails[t])] = t;
    return lut;
}
constexpr auto kTailIndex = make_tail_lut();

std::int64_t pow10(int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= 10;
    return r;
}

} // namespace

std::int64_t capacity(int length_nt) {
    if (length_nt < 2)
        throw std::invalid_argument("paircode words must be at least 2 nt long, got " +
                                    std::to_string(length_nt));
    if (length_nt > 18)
        throw std::invalid_argument("paircode length too large: " + std::to_string(length_nt));
    if (length_nt % 2 == 0) return pow10(length_nt / 2);
    return 4 * pow10((length_nt - 1) / 2);
}

NucleotideSequence codeword(int length_nt, std::int64_t index) {
    const std::int64_t cap = capacity(length_nt);
    if (index < 0 || index >= cap)
        throw std::out_of_range("paircode index " + std::to_string(index) +
                                " out of range for length " + std::to_string(length_nt));
    const bool odd = length_nt % 2 != 0;
    const int npairs = length_nt / 2;
    std::int64_t pair_index = odd ? index / 4 : index;

    std::vector<Nucleotide> symbols(static_cast<std::size_t>(length_nt), Nucleotide::A);
    for (int p = npairs - 1; p >= 0; --p) {
        const int digit = static_cast<int>(pair_index % 10);
        pair_index /= 10;
        symbols[static_cast<std::size_t>(2 * p)] = kPairs[digit][0];
        symbols[static_cast<std::size_t>(2 * p) + 1] = kPairs[digit][1];
    }
    if (odd) symbols.back() = kTails[static_cast<std::size_t>(index % 4)];
    return NucleotideSequence(std::move(symbols));
}

std::int64_t index_of(const NucleotideSequence& word) {
    if (word.size() < 2)
        throw CorruptStreamError("paircode word shorter than 2 nt", 0);
    const bool odd = word.size() % 2 != 0;
    const std::size_t npairs = word.size() / 2;

    std::int64_t pair_index = 0;
    for (std::size_t p = 0; p < npairs; ++p) {
        const int digit = kPairDigit[static_cast<int>(word[2 * p])][static_cast<int>(word[2 * p + 1])];
        if (digit < 0)
            throw CorruptStreamError("invalid paircode pair", 2 * p);
        pair_index = pair_index * 10 + digit;
    }
    if (!odd) return pair_index;
    return pair_index * 4 + kTailIndex[static_cast<int>(word.back())];
}

const std::array<CategoryEntry, 8>& category_table() {
    static const std::array<CategoryEntry, 8> table = {{
        {0, 0, 0},
        {2, 1, 5},
        {3, 6, 25},
        {4, 26, 75},
        {5, 76, 275},
        {6, 276, 775},
        {7, 776, 2775},
        {8, 2776, 7775},
    }};
    return table;
}

const CategoryEntry& category_of(int value) {
    const int mag = value < 0 ? -value : value;
    if (mag > kMaxCategoryValue)
        throw std::out_of_range("value " + std::to_string(value) +
                                " outside the category table range");
    for (const CategoryEntry& e : category_table())
        if (mag >= e.lo && mag <= e.hi) return e;
    throw std::out_of_range("no category for value " + std::to_string(value)); // unreachable
}

std::pair<int, NucleotideSequence> encode_value(int value) {
    const CategoryEntry& e = category_of(value);
    if (e.category == 0) return {0, NucleotideSequence{}};
    const std::int64_t half = e.hi - e.lo + 1;
    // Ordered value list: [-hi .. -lo, lo .. hi].
    const std::int64_t index = value < 0 ? value + e.hi : half + (value - e.lo);
    return {e.category, codeword(e.category, index)};
}

int decode_value(int category, const NucleotideSequence& word) {
    if (category == 0) {
        if (!word.empty())
            throw CorruptStreamError("category 0 carries no codeword", 0);
        return 0;
    }
    if (category == 1)
        throw CorruptStreamError("category 1 is not a valid category", 0);
    if (category < 0 || category > 8)
        throw CorruptStreamError("category out of range", 0);
    if (static_cast<int>(word.size()) != category)
        throw CorruptStreamError("codeword length does not match category", 0);

    const CategoryEntry& e = category_table()[static_cast<std::size_t>(category - 1)];
    const std::int64_t index = index_of(word);
    const std::int64_t half = e.hi - e.lo + 1;
    if (index >= 2 * half)
        throw CorruptStreamError("codeword index outside category value range", 0);
    if (index < half) return static_cast<int>(index - e.hi);
    return static_cast<int>(e.lo + (index - half));
}

} // namespace paircode
} // namespace dnacodec
