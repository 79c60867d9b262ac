#include "conextract/fewshot.hpp"

#include "conextract/util.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace conextract::fewshot {

namespace {

void check_n(std::size_t train_size, int n) {
    if (n < 1) throw Error("few-shot selection requires n >= 1");
    if (static_cast<std::size_t>(n) > train_size)
        throw Error("few-shot selection: n=" + std::to_string(n) +
                    " exceeds training set size " + std::to_string(train_size));
}

} // namespace

std::vector<corpus::Entry> select_fixed(const corpus::DatasetSplit& train, int n) {
    check_n(train.size(), n);
    return {train.entries.begin(), train.entries.begin() + n};
}

std::vector<corpus::Entry> select_random(const corpus::DatasetSplit& train, int n,
                                         std::uint64_t seed, const std::string& doc_id) {
    check_n(train.size(), n);
    auto indices = hash::sample_without_replacement(
        train.size(), static_cast<std::size_t>(n), hash::derive_key(seed, doc_id));
    std::vector<corpus::Entry> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(train.entries[i]);
    return out;
}

double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.values.empty() || v.values.empty())
        throw Error("cosine_similarity: empty vector");
    if (u.values.size() != v.values.size())
        throw Error("cosine_similarity: length mismatch (" +
                    std::to_string(u.values.size()) + " vs " +
                    std::to_string(v.values.size()) + ")");
    if (u.model_id != v.model_id)
        throw Error("cosine_similarity: embedding model mismatch ('" + u.model_id +
                    "' vs '" + v.model_id + "')");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        dot += u.values[i] * v.values[i];
        nu += u.values[i] * u.values[i];
        nv += v.values[i] * v.values[i];
    }
    if (nu == 0.0 || nv == 0.0) throw Error("cosine_similarity: zero vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

std::vector<std::size_t> rank_by_similarity(
    const std::vector<std::pair<corpus::Entry, EmbeddingVector>>& train_vectors,
    const EmbeddingVector& query) {
    std::vector<double> sims;
    sims.reserve(train_vectors.size());
    for (const auto& [entry, vec] : train_vectors)
        sims.push_back(cosine_similarity(vec, query));
    std::vector<std::size_t> order(train_vectors.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sims[a] > sims[b]; });
    return order;
}

std::vector<corpus::Entry> select_closest(
    const std::vector<std::pair<corpus::Entry, EmbeddingVector>>& train_vectors,
    const EmbeddingVector& query, int n) {
    check_n(train_vectors.size(), n);
    auto order = rank_by_similarity(train_vectors, query);
    std::vector<corpus::Entry> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(train_vectors[order[i]].first);
    return out;
}

} // namespace conextract::fewshot
