#include "conextract/corpus.hpp"

#include "conextract/util.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <unordered_set>

namespace conextract::corpus {

namespace {

using nlohmann::json;

[[noreturn]] void line_error(const std::filesystem::path& path, std::size_t line_no,
                             const std::string& what) {
    throw Error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

std::string id_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    return v.dump();
}

} // namespace

DatasetSplit load_split(const std::filesystem::path& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset file: " + path.string());

    DatasetSplit split;
    split.name = opts.split_name.empty() ? path.stem().string() : opts.split_name;

    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (text::trim(line).empty()) continue;

        json row;
        try {
            row = json::parse(line);
        } catch (const json::parse_error& e) {
            line_error(path, line_no, std::string("malformed JSON: ") + e.what());
        }
        if (!row.is_object()) line_error(path, line_no, "line is not a JSON object");

        // Remap source field names onto the canonical schema; unmapped unknown
        // fields are ignored.
        json mapped = json::object();
        for (auto& [key, value] : row.items()) {
            auto it = opts.field_map.find(key);
            mapped[it != opts.field_map.end() ? it->second : key] = value;
        }

        for (const char* field : {"id", "document", "keyphrases"}) {
            if (!mapped.contains(field))
                line_error(path, line_no,
                           std::string("missing required field '") + field + "'");
        }

        Entry entry;
        entry.doc.id = id_to_string(mapped["id"]);

        const json& doc = mapped["document"];
        if (doc.is_string()) {
            entry.doc.text = doc.get<std::string>();
        } else if (doc.is_array()) {
            if (!opts.join_tokens)
                line_error(path, line_no,
                           "field 'document' is a token array (enable join_tokens)");
            std::string joined;
            for (const json& tok : doc) {
                if (!tok.is_string())
                    line_error(path, line_no, "field 'document' has a non-string token");
                if (!joined.empty()) joined.push_back(' ');
                joined += tok.get<std::string>();
            }
            entry.doc.text = std::move(joined);
        } else {
            line_error(path, line_no, "field 'document' must be a string or token array");
        }
        if (text::trim(entry.doc.text).empty())
            line_error(path, line_no, "field 'document' is empty");
        entry.doc.token_count = text::count_words(entry.doc.text);

        const json& gold = mapped["keyphrases"];
        if (!gold.is_array())
            line_error(path, line_no, "field 'keyphrases' must be a string array");
        std::unordered_set<std::string> seen_phrases;
        for (const json& kp : gold) {
            if (!kp.is_string())
                line_error(path, line_no, "field 'keyphrases' has a non-string entry");
            std::string phrase = text::trim(kp.get<std::string>());
            if (phrase.empty()) continue;
            std::string norm = text::normalize(phrase);
            if (seen_phrases.insert(norm).second)
                entry.gold.keyphrases.push_back(std::move(phrase));
        }
        if (entry.gold.keyphrases.empty()) continue; // gold-less docs are dropped
        entry.gold.doc_id = entry.doc.id;

        if (!seen_ids.insert(entry.doc.id).second)
            line_error(path, line_no, "duplicate document id '" + entry.doc.id + "'");
        split.entries.push_back(std::move(entry));
    }
    return split;
}

DatasetStats compute_stats(const DatasetSplit& split) {
    if (split.entries.empty()) throw Error("compute_stats: split is empty");

    DatasetStats stats;
    stats.n_doc = split.entries.size();
    stats.min_con = static_cast<int>(split.entries.front().gold.keyphrases.size());

    long long total_words = 0;
    long long total_con = 0;
    std::array<long long, 5> bucket{};
    long long total_phrases = 0;

    for (const Entry& e : split.entries) {
        total_words += e.doc.token_count;
        stats.max_doc_len = std::max(stats.max_doc_len, e.doc.token_count);

        int ncon = static_cast<int>(e.gold.keyphrases.size());
        total_con += ncon;
        stats.max_con = std::max(stats.max_con, ncon);
        stats.min_con = std::min(stats.min_con, ncon);

        for (const std::string& kp : e.gold.keyphrases) {
            int words = text::count_words(kp);
            ++bucket[static_cast<std::size_t>(std::min(words, 5) - 1)];
            ++total_phrases;
        }
    }

    stats.avg_doc_len = static_cast<double>(total_words) / static_cast<double>(stats.n_doc);
    stats.avg_con = static_cast<double>(total_con) / static_cast<double>(stats.n_doc);
    for (std::size_t i = 0; i < bucket.size(); ++i)
        stats.length_dist[i] = 100.0 * static_cast<double>(bucket[i]) /
                               static_cast<double>(total_phrases);
    return stats;
}

} // namespace conextract::corpus
