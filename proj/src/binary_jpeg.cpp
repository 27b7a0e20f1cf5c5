#include "dnacodec/binary_jpeg.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "dnacodec/errors.hpp"

namespace dnacodec {
namespace binjpeg {

void BitWriter::put(std::uint32_t bits, int count) {
    for (int k = count - 1; k >= 0; --k) {
        acc_ = (acc_ << 1) | ((bits >> k) & 1u);
        if (++acc_bits_ == 8) {
            bytes_.push_back(static_cast<std::uint8_t>(acc_));
            acc_ = 0;
            acc_bits_ = 0;
        }
    }
    total_bits_ += static_cast<std::size_t>(count);
}

std::vector<std::uint8_t> BitWriter::finish() {
    while (acc_bits_ != 0) put(1, 1); // pad with 1s to the byte boundary
    return std::move(bytes_);
}

int BitReader::bit() {
    if (pos_ >= bytes_.size() * 8)
        throw CorruptStreamError("bit stream exhausted", pos_);
    const int b = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1;
    ++pos_;
    return b;
}

std::uint32_t BitReader::bits(int count) {
    std::uint32_t v = 0;
    for (int k = 0; k < count; ++k) v = (v << 1) | static_cast<std::uint32_t>(bit());
    return v;
}

namespace {

struct HuffNode {
    std::uint64_t weight;
    int min_id;
    int index;
};
struct HuffNodeGreater {
    bool operator()(const HuffNode& a, const HuffNode& b) const {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.min_id > b.min_id;
    }
};
struct PoolNode {
    int child[2] = {-1, -1};
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

BinaryCode BinaryCode::build(const trit::FrequencyTable& freqs) {
    if (freqs.counts.empty())
        throw std::invalid_argument("cannot build a binary code from an empty table");

    BinaryCode code;
    if (freqs.counts.size() == 1) {
        std::vector<std::pair<int, int>> single = {{1, freqs.counts.begin()->first}};
        code.assign_canonical(single);
        code.build_tree();
        return code;
    }

    std::vector<PoolNode> pool;
    std::priority_queue<HuffNode, std::vector<HuffNode>, HuffNodeGreater> heap;
    for (const auto& [id, count] : freqs.counts) {
        if (id < 0) throw std::invalid_argument("symbol ids must be non-negative");
        pool.push_back(PoolNode{});
        pool.back().symbol = id;
        heap.push({count, id, static_cast<int>(pool.size()) - 1});
    }
    while (heap.size() > 1) {
        PoolNode parent;
        std::uint64_t weight = 0;
        int min_id = -1;
        for (int k = 0; k < 2; ++k) {
            HuffNode low = heap.top();
            heap.pop();
            parent.child[k] = low.index;
            weight += low.weight;
            if (min_id < 0 || low.min_id < min_id) min_id = low.min_id;
        }
        pool.push_back(parent);
        heap.push({weight, min_id, static_cast<int>(pool.size()) - 1});
    }

    std::map<int, int> depths;
    collect_depths(pool, heap.top().index, 0, depths);
    std::vector<std::pair<int, int>> length_id;
    for (const auto& [id, depth] : depths) length_id.emplace_back(depth, id);
    code.assign_canonical(length_id);
    code.build_tree();
    return code;
}

void BinaryCode::assign_canonical(std::vector<std::pair<int, int>>& length_id) {
    std::sort(length_id.begin(), length_id.end());
    std::uint32_t next = 0;
    int prev_len = length_id.empty() ? 0 : length_id.front().first;
    for (const auto& [len, id] : length_id) {
        next <<= (len - prev_len);
        prev_len = len;
        lengths_[id] = {len, next};
        max_length_ = std::max(max_length_, len);
        ++next;
    }
}

void BinaryCode::build_tree() {
    nodes_.clear();
    nodes_.push_back(Node{});
    for (const auto& [id, len_bits] : lengths_) {
        const auto& [len, bits] = len_bits;
        std::int32_t at = 0;
        for (int k = len - 1; k >= 0; --k) {
            const int b = (bits >> k) & 1;
            std::int32_t& slot = nodes_[static_cast<std::size_t>(at)].child[b];
            if (slot < 0) {
                slot = static_cast<std::int32_t>(nodes_.size());
                nodes_.push_back(Node{});
            }
            at = nodes_[static_cast<std::size_t>(at)].child[b];
        }
        nodes_[static_cast<std::size_t>(at)].symbol = id;
    }
}

int BinaryCode::length_of(int symbol) const {
    auto it = lengths_.find(symbol);
    if (it == lengths_.end())
        throw std::invalid_argument("symbol " + std::to_string(symbol) + " not in code");
    return it->second.first;
}

std::uint32_t BinaryCode::bits_of(int symbol) const {
    auto it = lengths_.find(symbol);
    if (it == lengths_.end())
        throw std::invalid_argument("symbol " + std::to_string(symbol) + " not in code");
    return it->second.second;
}

std::uint64_t BinaryCode::weighted_length(const trit::FrequencyTable& freqs) const {
    std::uint64_t total = 0;
    for (const auto& [id, count] : freqs.counts)
        total += count * static_cast<std::uint64_t>(length_of(id));
    return total;
}

std::vector<std::uint8_t> BinaryCode::serialize() const {
    if (lengths_.size() > 255)
        throw FormatError("binary code too large to serialize");
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(lengths_.size()));
    w.u8(static_cast<std::uint8_t>(max_length_));
    std::vector<std::pair<int, int>> order; // (len, id)
    for (const auto& [id, len_bits] : lengths_)
        order.emplace_back(len_bits.first, id);
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

BinaryCode BinaryCode::deserialize(ByteReader& r) {
    const std::size_t n = r.u8();
    const int max_len = r.u8();
    if (n == 0 || max_len == 0 || max_len > 32)
        throw FormatError("invalid binary code table header");
    std::vector<std::uint8_t> per_length(static_cast<std::size_t>(max_len));
    std::size_t total = 0;
    for (int k = 0; k < max_len; ++k) {
        per_length[static_cast<std::size_t>(k)] = r.u8();
        total += per_length[static_cast<std::size_t>(k)];
    }
    if (total != n)
        throw FormatError("binary code table length counts do not match symbol count");
    std::vector<std::pair<int, int>> length_id;
    for (int len = 1; len <= max_len; ++len)
        for (std::uint8_t k = 0; k < per_length[static_cast<std::size_t>(len - 1)]; ++k)
            length_id.emplace_back(len, r.u8());

    // Kraft feasibility so canonical assignment cannot overflow a level.
    std::uint64_t kraft = 0; // scaled by 2^max_len
    for (const auto& [len, id] : length_id)
        kraft += 1ull << (max_len - len);
    if (kraft > (1ull << max_len))
        throw FormatError("binary code table violates the Kraft inequality");

    BinaryCode code;
    code.assign_canonical(length_id);
    code.build_tree();
    if (code.lengths_.size() != n)
        throw FormatError("duplicate symbol id in binary code table");
    return code;
}

BinaryCode::Walker::Walker(const BinaryCode& code) : code_(code) {}

int BinaryCode::Walker::step(int bit) {
    const std::int32_t next = code_.nodes_[static_cast<std::size_t>(node_)].child[bit];
    if (next < 0)
        throw CorruptStreamError("bit sequence is not a codeword", 0);
    const Node& n = code_.nodes_[static_cast<std::size_t>(next)];
    if (n.symbol >= 0) {
        node_ = 0;
        return n.symbol;
    }
    node_ = next;
    return -1;
}

int bit_category(std::int32_t v) {
    std::uint32_t mag = static_cast<std::uint32_t>(v < 0 ? -v : v);
    int k = 0;
    while (mag != 0) {
        ++k;
        mag >>= 1;
    }
    return k;
}

namespace {

constexpr int kEob = 0x00;
constexpr int kZrl = 0xF0;

int ac_symbol(int run, int category) { return (run << 4) | category; }

std::uint32_t value_bits(std::int32_t v, int category) {
    if (v > 0) return static_cast<std::uint32_t>(v);
    return static_cast<std::uint32_t>(v + (1 << category) - 1);
}

std::int32_t value_from_bits(std::uint32_t bits, int category) {
    if (bits < (1u << (category - 1)))
        return static_cast<std::int32_t>(bits) - (1 << category) + 1;
    return static_cast<std::int32_t>(bits);
}

} // namespace

std::vector<std::uint8_t> BinaryJpegStream::to_bytes() const {
    ByteWriter w;
    w.raw("JB1");
    w.u16(static_cast<std::uint16_t>(header.width));
    w.u16(static_cast<std::uint16_t>(header.height));
    w.u8(static_cast<std::uint8_t>(header.quality));
    for (std::uint8_t b : header.dc_table.serialize()) w.u8(b);
    for (std::uint8_t b : header.ac_table.serialize()) w.u8(b);
    std::vector<std::uint8_t> head = w.take();
    if (head.size() > 0xFFFF) throw FormatError("header too large");

    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(head.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(head.size() & 0xFF));
    out.insert(out.end(), head.begin(), head.end());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

BinaryJpegStream BinaryJpegStream::parse(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 2) throw FormatError("binary stream shorter than its length prefix");
    const std::size_t head_len = (static_cast<std::size_t>(bytes[0]) << 8) | bytes[1];
    if (bytes.size() < 2 + head_len) throw FormatError("binary stream shorter than header");
    std::vector<std::uint8_t> head(bytes.begin() + 2, bytes.begin() + 2 + head_len);

    ByteReader r(head);
    r.expect("JB1");
    BinaryJpegStream s;
    s.header.width = r.u16();
    s.header.height = r.u16();
    s.header.quality = r.u8();
    if (s.header.width == 0 || s.header.height == 0 || s.header.quality < 1 ||
        s.header.quality > 100)
        throw FormatError("invalid image geometry or quality in header");
    s.header.dc_table = BinaryCode::deserialize(r);
    s.header.ac_table = BinaryCode::deserialize(r);
    if (r.remaining() != 0) throw FormatError("trailing bytes after header");
    s.payload.assign(bytes.begin() + 2 + head_len, bytes.end());
    s.payload_bits = s.payload.size() * 8;
    return s;
}

BinaryJpegStream entropy_encode(const BlockIndexStream& indices, int width, int height,
                                int quality) {
    trit::FrequencyTable dc_freq, ac_freq;
    for (const Block& b : indices.blocks) {
        ++dc_freq.counts[bit_category(b.dc_diff)];
        int positions = 0;
        for (const auto& [run, value] : b.ac) {
            if (value == 0) {
                ++ac_freq.counts[kZrl];
                positions += 16;
            } else {
                ++ac_freq.counts[ac_symbol(run, bit_category(value))];
                positions += run + 1;
            }
        }
        if (positions < 63) ++ac_freq.counts[kEob];
    }

    BinaryJpegStream stream;
    stream.header.width = width;
    stream.header.height = height;
    stream.header.quality = quality;
    stream.header.dc_table = BinaryCode::build(dc_freq);
    stream.header.ac_table = BinaryCode::build(ac_freq);

    BitWriter bw;
    for (const Block& b : indices.blocks) {
        const int dc_cat = bit_category(b.dc_diff);
        bw.put(stream.header.dc_table.bits_of(dc_cat), stream.header.dc_table.length_of(dc_cat));
        if (dc_cat > 0) bw.put(value_bits(b.dc_diff, dc_cat), dc_cat);
        int positions = 0;
        for (const auto& [run, value] : b.ac) {
            if (value == 0) {
                bw.put(stream.header.ac_table.bits_of(kZrl),
                       stream.header.ac_table.length_of(kZrl));
                positions += 16;
            } else {
                const int cat = bit_category(value);
                const int sym = ac_symbol(run, cat);
                bw.put(stream.header.ac_table.bits_of(sym),
                       stream.header.ac_table.length_of(sym));
                bw.put(value_bits(value, cat), cat);
                positions += run + 1;
            }
        }
        if (positions < 63)
            bw.put(stream.header.ac_table.bits_of(kEob), stream.header.ac_table.length_of(kEob));
    }
    stream.payload_bits = bw.bit_count();
    stream.payload = bw.finish();
    return stream;
}

DecodeResult entropy_decode(const BinaryJpegStream& stream) {
    DecodeResult result;
    const std::size_t total_blocks =
        static_cast<std::size_t>(stream.header.blocks_x()) * stream.header.blocks_y();
    result.indices.blocks_x = stream.header.blocks_x();
    result.indices.blocks_y = stream.header.blocks_y();
    result.indices.blocks.reserve(total_blocks);

    BitReader br(stream.payload);
    auto read_symbol = [&](const BinaryCode& code) {
        BinaryCode::Walker walker(code);
        while (true) {
            const std::size_t at = br.position();
            const int b = br.bit();
            int sym;
            try {
                sym = walker.step(b);
            } catch (const CorruptStreamError&) {
                throw CorruptStreamError("bit sequence is not a codeword", at);
            }
            if (sym >= 0) return sym;
        }
    };

    try {
        for (std::size_t bi = 0; bi < total_blocks; ++bi) {
            Block b;
            const int dc_cat = read_symbol(stream.header.dc_table);
            if (dc_cat > 15)
                throw CorruptStreamError("invalid DC category", br.position());
            b.dc_diff = dc_cat == 0
                            ? 0
                            : value_from_bits(br.bits(dc_cat), dc_cat);
            int positions = 0;
            while (positions < 63) {
                const int sym = read_symbol(stream.header.ac_table);
                if (sym == kEob) break;
                if (sym == kZrl) {
                    positions += 16;
                    if (positions > 63)
                        throw CorruptStreamError("zero-run extension overruns block",
                                                 br.position());
                    b.ac.emplace_back(static_cast<std::uint8_t>(15), 0);
                    continue;
                }
                const int run = sym >> 4;
                const int cat = sym & 0xF;
                if (cat == 0)
                    throw CorruptStreamError("invalid AC symbol", br.position());
                positions += run + 1;
                if (positions > 63)
                    throw CorruptStreamError("AC entries overrun block", br.position());
                b.ac.emplace_back(static_cast<std::uint8_t>(run),
                                  value_from_bits(br.bits(cat), cat));
            }
            result.indices.blocks.push_back(std::move(b));
            ++result.blocks_decoded;
        }
    } catch (const CorruptStreamError& e) {
        result.corrupted = true;
        result.failure_bit = e.position();
        result.failure_reason = e.what();
    }
    result.indices.blocks.resize(total_blocks);
    return result;
}

} // namespace binjpeg
} // namespace dnacodec
