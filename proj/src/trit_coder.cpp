#include "dnacodec/trit_coder.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace dnacodec {
namespace trit {

namespace {

struct HuffNode {
    std::uint64_t weight;
    int min_id;    // smallest symbol id in the subtree, for deterministic ties
    int index;     // into the node pool
};

struct HuffNodeGreater {
    bool operator()(const HuffNode& a, const HuffNode& b) const {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.min_id > b.min_id;
    }
};

struct PoolNode {
    std::array<int, 3> child = {-1, -1, -1};
    int symbol = -1;
};

void collect_depths(const std::vector<PoolNode>& pool, int node, int depth,
                    std::map<int, int>& depths) {
    const PoolNode& n = pool[static_cast<std::size_t>(node)];
    if (n.symbol >= 0) {
        depths[n.symbol] = depth;
        return;
    }
    for (int c : n.child)
        if (c >= 0) collect_depths(pool, c, depth + 1, depths);
}

} // namespace

TernaryCode TernaryCode::build(const FrequencyTable& freqs) {
    if (freqs.counts.empty())
        throw std::invalid_argument("cannot build a ternary code from an empty table");
    bool any_positive = false;
    int max_id = 0;
    for (const auto& [id, count] : freqs.counts) {
        if (id < 0) throw std::invalid_argument("symbol ids must be non-negative");
        if (count > 0) any_positive = true;
        max_id = std::max(max_id, id);
    }
    if (!any_positive)
        throw std::invalid_argument("frequency table has no positive count");

    TernaryCode code;
    code.n_real_ = freqs.counts.size();

    const std::size_t n = freqs.counts.size();
    const std::size_t n_dummy = (n == 1) ? 2 : (n - 1) % 2;
    for (std::size_t k = 0; k < n_dummy; ++k)
        code.dummy_ids_.push_back(max_id + 1 + static_cast<int>(k));

    std::vector<PoolNode> pool;
    std::priority_queue<HuffNode, std::vector<HuffNode>, HuffNodeGreater> heap;
    auto add_leaf = [&](int id, std::uint64_t weight) {
        pool.push_back(PoolNode{});
        pool.back().symbol = id;
        heap.push({weight, id, static_cast<int>(pool.size()) - 1});
    };
    for (const auto& [id, count] : freqs.counts) add_leaf(id, count);
    for (int id : code.dummy_ids_) add_leaf(id, 0);

    while (heap.size() > 1) {
        PoolNode parent;
        std::uint64_t weight = 0;
        int min_id = -1;
        for (int k = 0; k < 3; ++k) {
            HuffNode low = heap.top();
            heap.pop();
            parent.child[static_cast<std::size_t>(k)] = low.index;
            weight += low.weight;
            if (min_id < 0 || low.min_id < min_id) min_id = low.min_id;
        }
        pool.push_back(parent);
        heap.push({weight, min_id, static_cast<int>(pool.size()) - 1});
    }

    std::map<int, int> depths;
    collect_depths(pool, heap.top().index, 0, depths);

    std::vector<std::pair<int, int>> length_id;
    length_id.reserve(depths.size());
    for (const auto& [id, depth] : depths) length_id.emplace_back(depth, id);
    code.assign_canonical(length_id);
    code.build_walker_tree();
    return code;
}

void TernaryCode::assign_canonical(std::vector<std::pair<int, int>>& length_id) {
    std::sort(length_id.begin(), length_id.end());
    std::uint64_t next = 0;
    int prev_len = length_id.empty() ? 0 : length_id.front().first;
    for (const auto& [len, id] : length_id) {
        for (int k = prev_len; k < len; ++k) next *= 3;
        prev_len = len;
        TritStream trits(static_cast<std::size_t>(len), 0);
        std::uint64_t v = next;
        for (int k = len - 1; k >= 0; --k) {
            trits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v % 3);
            v /= 3;
        }
        codes_.emplace(id, std::move(trits));
        max_length_ = std::max(max_length_, len);
        ++next;
    }
}

void TernaryCode::build_walker_tree() {
    nodes_.clear();
    nodes_.push_back(Node{});
    for (const auto& [id, trits] : codes_) {
        std::int32_t at = 0;
        for (std::uint8_t t : trits) {
            std::int32_t& slot = nodes_[static_cast<std::size_t>(at)].child[t];
            if (slot < 0) {
                slot = static_cast<std::int32_t>(nodes_.size());
                nodes_.push_back(Node{});
            }
            at = nodes_[static_cast<std::size_t>(at)].child[t];
        }
        nodes_[static_cast<std::size_t>(at)].symbol = id;
    }
}

const TritStream& TernaryCode::code_for(int symbol) const {
    auto it = codes_.find(symbol);
    if (it == codes_.end())
        throw std::invalid_argument("symbol " + std::to_string(symbol) + " not in code");
    return it->second;
}

bool TernaryCode::is_dummy(int symbol) const {
    return std::find(dummy_ids_.begin(), dummy_ids_.end(), symbol) != dummy_ids_.end();
}

std::uint64_t TernaryCode::weighted_length(const FrequencyTable& freqs) const {
    std::uint64_t total = 0;
    for (const auto& [id, count] : freqs.counts)
        total += count * length_of(id);
    return total;
}

std::pair<std::uint64_t, std::uint64_t> TernaryCode::kraft_sum() const {
    std::uint64_t denom = 1;
    for (int k = 0; k < max_length_; ++k) denom *= 3;
    std::uint64_t num = 0;
    for (const auto& [id, trits] : codes_) {
        std::uint64_t term = denom;
        for (std::size_t k = 0; k < trits.size(); ++k) term /= 3;
        num += term;
    }
    return {num, denom};
}

std::vector<std::uint8_t> TernaryCode::serialize() const {
    ByteWriter w;
    if (codes_.size() > 255)
        throw FormatError("ternary code too large to serialize");
    w.u8(static_cast<std::uint8_t>(n_real_));
    w.u8(static_cast<std::uint8_t>(dummy_ids_.size()));
    w.u8(static_cast<std::uint8_t>(max_length_));

    std::vector<std::pair<int, int>> order; // (len, id), canonical order
    for (const auto& [id, trits] : codes_)
        order.emplace_back(static_cast<int>(trits.size()), id);
    std::sort(order.begin(), order.end());

    std::vector<std::uint8_t> per_length(static_cast<std::size_t>(max_length_), 0);
    for (const auto& [len, id] : order)
        ++per_length[static_cast<std::size_t>(len - 1)];
    for (std::uint8_t c : per_length) w.u8(c);
    for (const auto& [len, id] : order) {
        if (id > 255) throw FormatError("symbol id does not fit the table format");
        w.u8(static_cast<std::uint8_t>(id));
    }
    return w.take();
}

TernaryCode TernaryCode::deserialize(ByteReader& r) {
    const std::size_t n_real = r.u8();
    const std::size_t n_dummy = r.u8();
    const int max_len = r.u8();
    if (n_real == 0 || n_dummy > 2 || max_len == 0)
        throw FormatError("invalid ternary code table header");

    std::vector<std::uint8_t> per_length(static_cast<std::size_t>(max_len));
    std::size_t total = 0;
    for (int k = 0; k < max_len; ++k) {
        per_length[static_cast<std::size_t>(k)] = r.u8();
        total += per_length[static_cast<std::size_t>(k)];
    }
    if (total != n_real + n_dummy)
        throw FormatError("ternary code table length counts do not match symbol count");

    std::vector<std::pair<int, int>> length_id;
    std::vector<int> ids;
    for (int len = 1; len <= max_len; ++len)
        for (std::uint8_t k = 0; k < per_length[static_cast<std::size_t>(len - 1)]; ++k) {
            int id = r.u8();
            length_id.emplace_back(len, id);
            ids.push_back(id);
        }

    // Dummies are the n_dummy largest ids present.
    std::vector<int> sorted_ids = ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
        throw FormatError("duplicate symbol id in ternary code table");

    TernaryCode code;
    code.n_real_ = n_real;
    code.dummy_ids_.assign(sorted_ids.end() - static_cast<std::ptrdiff_t>(n_dummy),
                           sorted_ids.end());
    code.assign_canonical(length_id);

    auto [num, denom] = code.kraft_sum();
    if (num != denom)
        throw FormatError("ternary code table violates Kraft equality");
    code.build_walker_tree();
    return code;
}

TernaryCode::Walker::Walker(const TernaryCode& code) : code_(code) {}

int TernaryCode::Walker::step(std::uint8_t t) {
    const std::int32_t next = code_.nodes_[static_cast<std::size_t>(node_)].child[t];
    if (next < 0)
        return -2; // unreachable for Kraft-complete codes; guarded anyway
    const Node& n = code_.nodes_[static_cast<std::size_t>(next)];
    if (n.symbol >= 0) {
        node_ = 0;
        return n.symbol;
    }
    node_ = next;
    return -1;
}

TritStream encode_symbols(const std::vector<int>& symbols, const TernaryCode& code) {
    TritStream out;
    for (int s : symbols) {
        const TritStream& c = code.code_for(s);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

DecodeSymbolsResult decode_symbols(const TritStream& trits, const TernaryCode& code,
                                   std::size_t count) {
    DecodeSymbolsResult result;
    result.symbols.reserve(count);
    TernaryCode::Walker walker(code);
    std::size_t pos = 0;
    while (result.symbols.size() < count) {
        if (pos >= trits.size())
            throw CorruptStreamError("trit stream exhausted mid-codeword", pos);
        int sym = walker.step(trits[pos]);
        ++pos;
        if (sym == -2)
            throw CorruptStreamError("trit sequence is not a valid codeword prefix", pos - 1);
        if (sym >= 0) {
            if (code.is_dummy(sym))
                throw CorruptStreamError("decoded a dummy padding symbol", pos - 1);
            result.symbols.push_back(sym);
        }
    }
    result.trits_consumed = pos;
    return result;
}

NucleotideSequence trits_to_nt(const TritStream& trits, Nucleotide previous) {
    NucleotideSequence seq;
    seq.reserve(trits.size());
    Nucleotide prev = previous;
    for (std::uint8_t t : trits) {
        if (t > 2) throw std::invalid_argument("trit out of range");
        Nucleotide n = prev;
        for (int k = 0; k <= t; ++k) n = cyclic_next(n);
        seq.push_back(n);
        prev = n;
    }
    return seq;
}

TritStream nt_to_trits(const NucleotideSequence& seq, Nucleotide previous) {
    TritStream out;
    out.reserve(seq.size());
    Nucleotide prev = previous;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Nucleotide n = seq[i];
        if (n == prev)
            throw CorruptStreamError("adjacent nucleotide repeat in trit segment", i);
        out.push_back(static_cast<std::uint8_t>(
            (static_cast<int>(n) - static_cast<int>(prev) + 4) % 4 - 1));
        prev = n;
    }
    return out;
}

} // namespace trit
} // namespace dnacodec
