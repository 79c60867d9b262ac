#ifndef CONEXTRACT_UTIL_HPP
#define CONEXTRACT_UTIL_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conextract {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad usage or bad configuration; the CLI maps this to exit code 1.
class ConfigError : public Error {
public:
    using Error::Error;
};

namespace text {

bool is_space_codepoint(char32_t cp);

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);

/// Case-folded (ASCII) with every whitespace run collapsed to one space and
/// the ends trimmed. Whitespace detection is Unicode-aware.
std::string normalize(std::string_view s);

// Normalized text plus, per normalized byte, the byte offset of its source in
// the original string (a collapsed space maps to the start of its run).
struct NormalizedView {
    std::string text;
    std::vector<std::size_t> src;
};
NormalizedView normalize_with_map(std::string_view s);

/// Number of whitespace-separated tokens.
int count_words(std::string_view s);

struct WordSpan {
    std::string_view word;
    std::size_t start = 0;
    std::size_t end = 0;
};
// Whitespace-separated pieces with byte offsets into the input.
std::vector<WordSpan> split_words(std::string_view s);

} // namespace text

namespace hash {

std::uint64_t fnv1a64(std::string_view data);

// Pinned 64-bit generator so seeded selections reproduce across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform value in [0, bound); bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Key for per-document seeded sampling: FNV-1a over the little-endian seed
/// bytes followed by the document id bytes.
std::uint64_t derive_key(std::uint64_t seed, std::string_view doc_id);

/// First n indices of a seeded partial Fisher-Yates shuffle of [0, total).
std::vector<std::size_t> sample_without_replacement(std::size_t total, std::size_t n,
                                                    std::uint64_t key);

std::string sha256_hex(std::string_view data);

} // namespace hash

namespace io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
std::string iso8601_now();

} // namespace io

/// Runs fn(0..count-1) on up to `workers` threads. fn is responsible for its
/// own error handling; an escaped exception aborts the loop and is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/// Fixed 4-decimal rendering used by every report format.
std::string format4(double v);

} // namespace conextract

#endif // CONEXTRACT_UTIL_HPP
