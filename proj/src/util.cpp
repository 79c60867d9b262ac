#include "conextract/util.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace conextract {

namespace text {

bool is_space_codepoint(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x20: case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

namespace {

// Decodes the codepoint at byte offset i; advances `len` to its byte length.
// Invalid sequences are treated as single latin-1 bytes.
char32_t decode_utf8(std::string_view s, std::size_t i, std::size_t& len) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    len = 1;
    if (b0 < 0x80) return b0;
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        len = 2;
        return static_cast<char32_t>(((b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F));
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        len = 3;
        return static_cast<char32_t>(((b0 & 0x0F) << 12) | ((byte(i + 1) & 0x3F) << 6) |
                                     (byte(i + 2) & 0x3F));
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        len = 4;
        return static_cast<char32_t>(((b0 & 0x07) << 18) | ((byte(i + 1) & 0x3F) << 12) |
                                     ((byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F));
    }
    return b0;
}

} // namespace

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e) {
        std::size_t len = 0;
        if (!is_space_codepoint(decode_utf8(s, b, len))) break;
        b += len;
    }
    // scan forward for the last non-space position
    std::size_t last_end = b;
    std::size_t i = b;
    while (i < e) {
        std::size_t len = 0;
        char32_t cp = decode_utf8(s, i, len);
        i += len;
        if (!is_space_codepoint(cp)) last_end = i;
    }
    return std::string(s.substr(b, last_end - b));
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string normalize(std::string_view s) {
    return normalize_with_map(s).text;
}

NormalizedView normalize_with_map(std::string_view s) {
    NormalizedView out;
    out.text.reserve(s.size());
    out.src.reserve(s.size());
    std::size_t i = 0;
    bool pending_space = false;
    std::size_t space_start = 0;
    while (i < s.size()) {
        std::size_t len = 0;
        char32_t cp = decode_utf8(s, i, len);
        if (is_space_codepoint(cp)) {
            if (!pending_space) {
                pending_space = true;
                space_start = i;
            }
        } else {
            if (pending_space && !out.text.empty()) {
                out.text.push_back(' ');
                out.src.push_back(space_start);
            }
            pending_space = false;
            for (std::size_t k = 0; k < len; ++k) {
                char c = s[i + k];
                if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
                out.text.push_back(c);
                out.src.push_back(i + k);
            }
        }
        i += len;
    }
    return out;
}

int count_words(std::string_view s) {
    int n = 0;
    bool in_word = false;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t len = 0;
        bool sp = is_space_codepoint(decode_utf8(s, i, len));
        if (!sp && !in_word) ++n;
        in_word = !sp;
        i += len;
    }
    return n;
}

std::vector<WordSpan> split_words(std::string_view s) {
    std::vector<WordSpan> out;
    std::size_t i = 0;
    std::size_t word_start = 0;
    bool in_word = false;
    while (i < s.size()) {
        std::size_t len = 0;
        bool sp = is_space_codepoint(decode_utf8(s, i, len));
        if (!sp && !in_word) word_start = i;
        if (sp && in_word)
            out.push_back({s.substr(word_start, i - word_start), word_start, i});
        in_word = !sp;
        i += len;
    }
    if (in_word) out.push_back({s.substr(word_start), word_start, s.size()});
    return out;
}

} // namespace text

namespace hash {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    return next() % bound;
}

std::uint64_t derive_key(std::uint64_t seed, std::string_view doc_id) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((seed >> (8 * i)) & 0xFF);
    std::string keyed(buf, 8);
    keyed.append(doc_id);
    return fnv1a64(keyed);
}

std::vector<std::size_t> sample_without_replacement(std::size_t total, std::size_t n,
                                                    std::uint64_t key) {
    if (n > total) throw Error("sample_without_replacement: n exceeds population size");
    std::vector<std::size_t> idx(total);
    for (std::size_t i = 0; i < total; ++i) idx[i] = i;
    SplitMix64 rng(key);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.next_below(total - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    return idx;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int dlen = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &dlen, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(dlen * 2);
    for (unsigned int i = 0; i < dlen; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

} // namespace hash

namespace io {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed: " + path.string());
}

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace io

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const std::size_t nthreads =
        std::min<std::size_t>(count, workers > 1 ? static_cast<std::size_t>(workers) : 1);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::string format4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace conextract
