#include "dnacodec/fasta.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace dnacodec {

namespace {
constexpr std::size_t kFastaWidth = 80;
}

void write_fasta(std::ostream& os, const std::string& id, const NucleotideSequence& seq) {
    os << '>' << id << '\n';
    const std::string text = seq.to_string();
    for (std::size_t i = 0; i < text.size(); i += kFastaWidth)
        os << text.substr(i, kFastaWidth) << '\n';
    if (text.empty()) os << '\n';
}

std::vector<FastaRecord> read_fasta(std::istream& is) {
    std::vector<FastaRecord> records;
    std::string line;
    std::string pending_text;
    bool in_record = false;
    auto flush = [&] {
        if (in_record) records.back().seq = parse_text(pending_text);
        pending_text.clear();
    };
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '>') {
            flush();
            FastaRecord rec;
            rec.id = line.substr(1);
            // trim trailing/leading spaces of the id
            while (!rec.id.empty() && rec.id.back() == ' ') rec.id.pop_back();
            while (!rec.id.empty() && rec.id.front() == ' ') rec.id.erase(rec.id.begin());
            records.push_back(std::move(rec));
            in_record = true;
        } else {
            if (!in_record && !line.empty())
                throw FormatError("FASTA input has sequence data before any '>' header");
            pending_text += line;
        }
    }
    flush();
    return records;
}

void write_plain(std::ostream& os, const NucleotideSequence& seq) {
    os << seq.to_string() << '\n';
}

std::vector<NucleotideSequence> read_plain(std::istream& is) {
    std::vector<NucleotideSequence> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;
        out.push_back(parse_text(line));
    }
    return out;
}

void save_sequence(const std::string& path, const NucleotideSequence& seq,
                   SequenceFormat format, const std::string& id) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot open output file: " + path);
    if (format == SequenceFormat::Fasta)
        write_fasta(os, id, seq);
    else
        write_plain(os, seq);
}

NucleotideSequence load_sequence(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open input file: " + path);
    // Peek: FASTA if the first non-blank character is '>'.
    std::stringstream buf;
    buf << is.rdbuf();
    std::string content = buf.str();
    std::size_t i = 0;
    while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
    if (i < content.size() && content[i] == '>') {
        std::istringstream ss(content);
        auto records = read_fasta(ss);
        if (records.empty()) throw FormatError("FASTA file has no records: " + path);
        NucleotideSequence all = records[0].seq;
        for (std::size_t k = 1; k < records.size(); ++k) all.append(records[k].seq);
        return all;
    }
    return parse_text(content);
}

} // namespace dnacodec
