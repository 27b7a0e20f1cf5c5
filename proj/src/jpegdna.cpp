#include "dnacodec/jpegdna.hpp"

#include <stdexcept>

#include "dnacodec/bytesio.hpp"
#include "dnacodec/paircode.hpp"
#include "dnacodec/transcode.hpp"

namespace dnacodec {
namespace jpegdna {

namespace {

int ac_symbol(int run, int category) { return (run << 4) | category; }

} // namespace

std::vector<std::uint8_t> Header::to_bytes() const {
    ByteWriter w;
    w.raw("JD1");
    w.u16(static_cast<std::uint16_t>(width));
    w.u16(static_cast<std::uint16_t>(height));
    w.u8(static_cast<std::uint8_t>(quality));
    for (std::uint8_t b : dc_table.serialize()) w.u8(b);
    for (std::uint8_t b : ac_table.serialize()) w.u8(b);
    return w.take();
}

Header Header::from_bytes(const std::vector<std::uint8_t>& bytes) {
    ByteReader r(bytes);
    r.expect("JD1");
    Header h;
    h.width = r.u16();
    h.height = r.u16();
    h.quality = r.u8();
    if (h.width == 0 || h.height == 0 || h.quality < 1 || h.quality > 100)
        throw FormatError("invalid image geometry or quality in header");
    h.dc_table = trit::TernaryCode::deserialize(r);
    h.ac_table = trit::TernaryCode::deserialize(r);
    if (r.remaining() != 0)
        throw FormatError("trailing bytes after header");
    return h;
}

NucleotideSequence JpegDnaStream::to_sequence() const {
    const std::vector<std::uint8_t> head = header.to_bytes();
    if (head.size() > 0xFFFF)
        throw FormatError("header too large");
    ByteWriter lw;
    lw.u16(static_cast<std::uint16_t>(head.size()));
    NucleotideSequence seq = transcode_bytes(lw.bytes());
    seq.append(transcode_bytes(head));
    seq.append(payload);
    return seq;
}

JpegDnaStream JpegDnaStream::parse(const NucleotideSequence& seq) {
    if (seq.size() < 10)
        throw FormatError("stream shorter than its length prefix");
    std::vector<std::uint8_t> len_bytes;
    try {
        len_bytes = detranscode_bytes(seq.subseq(0, 10));
    } catch (const CorruptStreamError&) {
        throw FormatError("undecodable stream length prefix");
    }
    const std::size_t head_len = (static_cast<std::size_t>(len_bytes[0]) << 8) | len_bytes[1];
    if (seq.size() < 10 + head_len * 5)
        throw FormatError("stream shorter than its declared header");
    std::vector<std::uint8_t> head_bytes;
    try {
        head_bytes = detranscode_bytes(seq.subseq(10, head_len * 5));
    } catch (const CorruptStreamError&) {
        throw FormatError("undecodable stream header");
    }
    JpegDnaStream s;
    s.header = Header::from_bytes(head_bytes);
    s.payload = seq.subseq(10 + head_len * 5, seq.size() - 10 - head_len * 5);
    return s;
}

JpegDnaStream entropy_encode(const BlockIndexStream& indices, int width, int height,
                             int quality) {
    // Pass 1: symbol statistics over the whole image.
    trit::FrequencyTable dc_freq, ac_freq;
    for (const Block& b : indices.blocks) {
        const auto [dc_cat, dc_word] = paircode::encode_value(b.dc_diff);
        ++dc_freq.counts[dc_cat];
        int positions = 0;
        for (const auto& [run, value] : b.ac) {
            if (value == 0) {
                ++ac_freq.counts[kZrl];
                positions += 16;
            } else {
                ++ac_freq.counts[ac_symbol(run, paircode::category_of(value).category)];
                positions += run + 1;
            }
        }
        if (positions < 63)
            ++ac_freq.counts[kEob];
    }

    JpegDnaStream stream;
    stream.header.width = width;
    stream.header.height = height;
    stream.header.quality = quality;
    stream.header.dc_table = trit::TernaryCode::build(dc_freq);
    stream.header.ac_table = trit::TernaryCode::build(ac_freq);

    // Pass 2: emit. The rotation state tracks every nucleotide, PAIRCODE
    // words included, so no junction can repeat a nucleotide.
    trit::RotationEncoder rot;
    for (const Block& b : indices.blocks) {
        const auto [dc_cat, dc_word] = paircode::encode_value(b.dc_diff);
        rot.push_trits(stream.header.dc_table.code_for(dc_cat), stream.payload);
        rot.push_word(dc_word, stream.payload);
        int positions = 0;
        for (const auto& [run, value] : b.ac) {
            if (value == 0) {
                rot.push_trits(stream.header.ac_table.code_for(kZrl), stream.payload);
                positions += 16;
            } else {
                const auto [cat, word] = paircode::encode_value(value);
                rot.push_trits(stream.header.ac_table.code_for(ac_symbol(run, cat)),
                               stream.payload);
                rot.push_word(word, stream.payload);
                positions += run + 1;
            }
        }
        if (positions < 63)
            rot.push_trits(stream.header.ac_table.code_for(kEob), stream.payload);
    }
    return stream;
}

namespace {

class PayloadWalker {
public:
    PayloadWalker(const NucleotideSequence& payload, const trit::TernaryCode& dc,
                  const trit::TernaryCode& ac)
        : payload_(payload), dc_(dc), ac_(ac), dc_walk_(dc), ac_walk_(ac) {}

    std::size_t pos() const noexcept { return pos_; }

    int read_symbol(bool use_dc) {
        trit::TernaryCode::Walker& walker = use_dc ? dc_walk_ : ac_walk_;
        const trit::TernaryCode& code = use_dc ? dc_ : ac_;
        walker.reset();
        while (true) {
            if (pos_ >= payload_.size())
                throw CorruptStreamError("payload exhausted mid-symbol", pos_);
            const std::uint8_t t = rot_.next_trit(payload_[pos_], pos_);
            ++pos_;
            const int sym = walker.step(t);
            if (sym == -1) continue;
            if (sym == -2)
                throw CorruptStreamError("trit sequence is not a codeword", pos_ - 1);
            if (code.is_dummy(sym))
                throw CorruptStreamError("decoded a dummy padding symbol", pos_ - 1);
            return sym;
        }
    }

    int read_value(int category) {
        const std::size_t word_start = pos_;
        if (category < 2 || category > 8)
            throw CorruptStreamError("invalid value category", pos_);
        if (pos_ + static_cast<std::size_t>(category) > payload_.size())
            throw CorruptStreamError("payload exhausted mid-codeword", pos_);
        const NucleotideSequence word = payload_.subseq(pos_, static_cast<std::size_t>(category));
        pos_ += static_cast<std::size_t>(category);
        rot_.consume_word(word);
        try {
            return paircode::decode_value(category, word);
        } catch (const CorruptStreamError& e) {
            throw CorruptStreamError("malformed PAIRCODE word", word_start + e.position());
        }
    }

private:
    const NucleotideSequence& payload_;
    const trit::TernaryCode& dc_;
    const trit::TernaryCode& ac_;
    trit::TernaryCode::Walker dc_walk_;
    trit::TernaryCode::Walker ac_walk_;
    trit::RotationDecoder rot_;
    std::size_t pos_ = 0;
};

} // namespace

EntropyDecodeResult entropy_decode(const JpegDnaStream& stream) {
    EntropyDecodeResult result;
    const std::size_t total_blocks =
        static_cast<std::size_t>(stream.header.blocks_x()) * stream.header.blocks_y();
    result.indices.blocks_x = stream.header.blocks_x();
    result.indices.blocks_y = stream.header.blocks_y();
    result.indices.blocks.reserve(total_blocks);

    PayloadWalker walker(stream.payload, stream.header.dc_table, stream.header.ac_table);
    try {
        for (std::size_t bi = 0; bi < total_blocks; ++bi) {
            result.block_start_nt.push_back(walker.pos());
            Block b;
            const int dc_cat = walker.read_symbol(true);
            if (dc_cat == 1 || dc_cat > 8)
                throw CorruptStreamError("invalid DC category", walker.pos());
            b.dc_diff = dc_cat == 0 ? 0 : walker.read_value(dc_cat);

            int positions = 0;
            while (positions < 63) {
                const int sym = walker.read_symbol(false);
                if (sym == kEob) break;
                if (sym == kZrl) {
                    positions += 16;
                    if (positions > 63)
                        throw CorruptStreamError("zero-run extension overruns block",
                                                 walker.pos());
                    b.ac.emplace_back(static_cast<std::uint8_t>(15), 0);
                    continue;
                }
                const int run = sym >> 4;
                const int cat = sym & 0xF;
                if (cat < 2 || cat > 8)
                    throw CorruptStreamError("invalid AC symbol category", walker.pos());
                positions += run + 1;
                if (positions > 63)
                    throw CorruptStreamError("AC entries overrun block", walker.pos());
                const int value = walker.read_value(cat);
                b.ac.emplace_back(static_cast<std::uint8_t>(run), value);
            }
            result.indices.blocks.push_back(std::move(b));
            ++result.blocks_decoded;
        }
    } catch (const CorruptStreamError& e) {
        result.corrupted = true;
        result.failure_position = e.position();
        result.failure_reason = e.what();
    }
    result.indices.blocks.resize(total_blocks); // zero-fill whatever is missing
    return result;
}

JpegDnaStream encode_image(const ImageGray8& img, int quality) {
    return entropy_encode(forward_pipeline(img, quality), img.width, img.height, quality);
}

ImageDecodeResult decode_image(const JpegDnaStream& stream) {
    EntropyDecodeResult decoded = entropy_decode(stream);
    ImageDecodeResult result;
    result.image = inverse_pipeline(decoded.indices, stream.header.quality,
                                    stream.header.width, stream.header.height);
    result.corrupted = decoded.corrupted;
    result.failure_position = decoded.failure_position;
    result.failure_reason = decoded.failure_reason;
    return result;
}

} // namespace jpegdna
} // namespace dnacodec
