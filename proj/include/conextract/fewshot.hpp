#ifndef CONEXTRACT_FEWSHOT_HPP
#define CONEXTRACT_FEWSHOT_HPP

#include "conextract/corpus.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace conextract::fewshot {

struct EmbeddingVector {
    std::vector<double> values;
    std::string model_id;
};

enum class Strategy { fixed, random, closest };

struct SelectorConfig {
    Strategy strategy = Strategy::fixed;
    int n = 1;
    std::uint64_t seed = 0;                             // random strategy
    std::string embedding_model_id = "all-mpnet-base-v2"; // closest strategy
};

/// First n training entries, the same for every test document.
std::vector<corpus::Entry> select_fixed(const corpus::DatasetSplit& train, int n);

/// n entries sampled without replacement, deterministic in (seed, doc_id).
std::vector<corpus::Entry> select_random(const corpus::DatasetSplit& train, int n,
                                         std::uint64_t seed, const std::string& doc_id);

double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v);

/// Training entries ranked by cosine similarity to the query, most similar
/// first; ties keep training order.
std::vector<corpus::Entry> select_closest(
    const std::vector<std::pair<corpus::Entry, EmbeddingVector>>& train_vectors,
    const EmbeddingVector& query, int n);

/// Similarity ranking indices used by select_closest, exposed for checking.
std::vector<std::size_t> rank_by_similarity(
    const std::vector<std::pair<corpus::Entry, EmbeddingVector>>& train_vectors,
    const EmbeddingVector& query);

} // namespace conextract::fewshot

#endif // CONEXTRACT_FEWSHOT_HPP
