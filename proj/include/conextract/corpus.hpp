#ifndef CONEXTRACT_CORPUS_HPP
#define CONEXTRACT_CORPUS_HPP

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace conextract::corpus {

struct Document {
    std::string id;
    std::string text;
    int token_count = 0;
};

struct GroundTruth {
    std::string doc_id;
    // Stored in file order, deduplicated under whitespace/case normalization.
    std::vector<std::string> keyphrases;
};

struct Entry {
    Document doc;
    GroundTruth gold;
};

struct DatasetSplit {
    std::string name;
    std::vector<Entry> entries;

    std::size_t size() const { return entries.size(); }
};

struct DatasetStats {
    std::size_t n_doc = 0;
    double avg_doc_len = 0.0;
    int max_doc_len = 0;
    int max_con = 0;
    int min_con = 0;
    double avg_con = 0.0;
    // Percentage of gold phrases with 1, 2, 3, 4 and >=5 words.
    std::array<double, 5> length_dist{};
};

// Maps source field names onto the canonical id/document/keyphrases schema,
// e.g. {"extractive_keyphrases": "keyphrases"} for the HuggingFace-style files.
using FieldMap = std::map<std::string, std::string>;

struct LoadOptions {
    bool join_tokens = true;
    FieldMap field_map;
    std::string split_name; // defaults to the file stem
};

/// Loads a JSONL dataset file, dropping entries without gold keyphrases.
DatasetSplit load_split(const std::filesystem::path& path, const LoadOptions& opts = {});

DatasetStats compute_stats(const DatasetSplit& split);

} // namespace conextract::corpus

#endif // CONEXTRACT_CORPUS_HPP
