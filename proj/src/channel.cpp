#include "dnacodec/channel.hpp"

#include <ostream>
#include <stdexcept>

namespace dnacodec {
namespace channel {

namespace {

Nucleotide different_nucleotide(Nucleotide original, std::uint64_t pick) {
    // pick in [0,3): the pick-th nucleotide in A<C<G<T order, skipping original.
    int seen = 0;
    for (int v = 0; v < 4; ++v) {
        if (v == static_cast<int>(original)) continue;
        if (seen == static_cast<int>(pick)) return static_cast<Nucleotide>(v);
        ++seen;
    }
    return original; // unreachable
}

void apply_event(const NucleotideSequence& seq, const Event& e, NucleotideSequence& out) {
    switch (e.kind) {
    case EventKind::Deletion:
        break; // emit nothing
    case EventKind::Substitution:
        out.push_back(*e.after);
        break;
    case EventKind::Insertion:
        out.push_back(*e.after);
        if (e.position < seq.size()) out.push_back(seq[e.position]);
        break;
    }
}

} // namespace

CorruptResult corrupt(const NucleotideSequence& seq, const ChannelSpec& spec) {
    CorruptResult result;

    if (spec.explicit_events) {
        for (const Event& e : *spec.explicit_events)
            if (e.position > seq.size() ||
                (e.position == seq.size() && e.kind != EventKind::Insertion))
                throw std::invalid_argument("explicit event position out of bounds");
        EventLog log;
        log.events = *spec.explicit_events;
        result.seq = replay(seq, log);
        result.log = std::move(log);
        return result;
    }

    if (spec.sub_rate < 0 || spec.ins_rate < 0 || spec.del_rate < 0 ||
        spec.sub_rate + spec.ins_rate + spec.del_rate > 1.0)
        throw std::invalid_argument("channel rates must be in [0,1] and sum to at most 1");

    SplitMix64 rng(spec.seed);
    result.seq.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Nucleotide n = seq[i];
        const double u = rng.uniform();
        if (u < spec.del_rate) {
            result.log.events.push_back({i, EventKind::Deletion, n, std::nullopt});
        } else if (u < spec.del_rate + spec.sub_rate) {
            const Nucleotide repl = different_nucleotide(n, rng.below(3));
            result.log.events.push_back({i, EventKind::Substitution, n, repl});
            result.seq.push_back(repl);
        } else if (u < spec.del_rate + spec.sub_rate + spec.ins_rate) {
            const Nucleotide ins = static_cast<Nucleotide>(rng.below(4));
            result.log.events.push_back({i, EventKind::Insertion, std::nullopt, ins});
            result.seq.push_back(ins);
            result.seq.push_back(n);
        } else {
            result.seq.push_back(n);
        }
    }
    return result;
}

NucleotideSequence replay(const NucleotideSequence& seq, const EventLog& log) {
    NucleotideSequence out;
    out.reserve(seq.size());
    std::size_t next_event = 0;
    for (std::size_t i = 0; i <= seq.size(); ++i) {
        bool position_consumed = false;
        // Per-position single-event model: at most one event per position.
        while (next_event < log.events.size() && log.events[next_event].position == i) {
            apply_event(seq, log.events[next_event], out);
            position_consumed = true;
            ++next_event;
        }
        if (!position_consumed && i < seq.size()) out.push_back(seq[i]);
    }
    return out;
}

SingleDeletion single_random_deletion(const NucleotideSequence& seq, std::uint64_t seed) {
    if (seq.empty())
        throw std::invalid_argument("cannot delete from an empty sequence");
    SplitMix64 rng(seed);
    const std::size_t pos = static_cast<std::size_t>(rng.below(seq.size()));

    NucleotideSequence out;
    out.reserve(seq.size() - 1);
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (i != pos) out.push_back(seq[i]);
    return {std::move(out), pos};
}

void write_event_log_csv(std::ostream& os, const EventLog& log) {
    os << "position,kind,before,after\n";
    for (const Event& e : log.events) {
        const char* kind = e.kind == EventKind::Deletion
                               ? "deletion"
                               : (e.kind == EventKind::Substitution ? "substitution"
                                                                    : "insertion");
        os << e.position << ',' << kind << ',';
        if (e.before) os << to_char(*e.before);
        os << ',';
        if (e.after) os << to_char(*e.after);
        os << '\n';
    }
}

} // namespace channel
} // namespace dnacodec
