#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dnacodec/nucleotide.hpp"

namespace dnacodec {
namespace channel {

/// splitmix64: the fixed, portable generator behind every corruption draw.
/// Update equations (all arithmetic mod 2^64):
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27;            z *= 0x94D049BB133111EB
///   z ^= z >> 31;            output z
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): next() scaled by 2^-64.
    double uniform() { return static_cast<double>(next()) * 0x1p-64; }

    /// Unbiased uniform integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

/// Derives a per-oligo seed so fragments can be corrupted independently.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return g.next();
}

enum class EventKind { Substitution, Insertion, Deletion };

struct Event {
    std::size_t position; // index into the original sequence
    EventKind kind;
    std::optional<Nucleotide> before; // absent for insertions
    std::optional<Nucleotide> after;  // absent for deletions
};

/// Replayable record of everything the channel did.
struct EventLog {
    std::vector<Event> events;
};

struct ChannelSpec {
    double sub_rate = 0.0;
    double ins_rate = 0.0;
    double del_rate = 0.0;
    std::uint64_t seed = 0;
    // When set, the rates are ignored and exactly these events apply.
    std::optional<std::vector<Event>> explicit_events;
};

struct CorruptResult {
    NucleotideSequence seq;
    EventLog log;
};

/// One left-to-right pass; per position one draw picks deletion,
/// substitution, insertion-before or none. Substitutions replace with a
/// uniformly chosen different nucleotide. Deterministic in (seq, spec).
CorruptResult corrupt(const NucleotideSequence& seq, const ChannelSpec& spec);

/// Applies a log to the clean sequence, reproducing the corrupt one exactly.
NucleotideSequence replay(const NucleotideSequence& seq, const EventLog& log);

/// The single-deletion experiment: removes the nucleotide at a uniformly
/// drawn position.
struct SingleDeletion {
    NucleotideSequence seq;
    std::size_t position;
};
SingleDeletion single_random_deletion(const NucleotideSequence& seq, std::uint64_t seed);

/// CSV with columns position,kind,before,after.
void write_event_log_csv(std::ostream& os, const EventLog& log);

} // namespace channel
} // namespace dnacodec
