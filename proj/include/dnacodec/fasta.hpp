#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dnacodec/nucleotide.hpp"

namespace dnacodec {

struct FastaRecord {
    std::string id;
    NucleotideSequence seq;
};

/// Writes ">id" then the sequence wrapped at 80 columns.
void write_fasta(std::ostream& os, const std::string& id, const NucleotideSequence& seq);

/// Reads all records; sequence lines are parsed case-insensitively.
std::vector<FastaRecord> read_fasta(std::istream& is);

/// Plain-text format: one sequence per line, no headers.
void write_plain(std::ostream& os, const NucleotideSequence& seq);
std::vector<NucleotideSequence> read_plain(std::istream& is);

enum class SequenceFormat { Fasta, Plain };

/// Convenience wrappers used by the CLI: one sequence per file.
void save_sequence(const std::string& path, const NucleotideSequence& seq,
                   SequenceFormat format, const std::string& id = "seq");
NucleotideSequence load_sequence(const std::string& path);

} // namespace dnacodec
