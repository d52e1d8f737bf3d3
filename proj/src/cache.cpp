#include "gregory/cache.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gregory {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSuffix = ".json";

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Returns a null Json when the file is unreadable or the
// checksum does not match.
Json load_verified(const std::filesystem::path& path) {
    try {
        const Json doc = Json::parse(read_file(path));
        const Json& payload = doc.at("payload");
        if (sha256_hex(payload.dump()) != doc.at("sha256").get<std::string>()) {
            return nullptr;
        }
        return doc;
    } catch (const nlohmann::json::exception&) {
        return nullptr;
    }
}

}  // namespace

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

SequenceCache::SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SequenceCache::default_dir() {
    if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    const char* home = std::getenv("HOME");
    return std::filesystem::path(home != nullptr ? home : ".") / ".gregory-cache";
}

std::filesystem::path SequenceCache::entry_path(std::string_view sequence) const {
    return dir_ / (std::string(sequence) + std::string(kSuffix));
}

SequenceCache::Fetched SequenceCache::fetch(std::string_view sequence, long max_index,
                                            const std::function<Json()>& compute, std::ostream* diag) const {
    const auto path = entry_path(sequence);
    Outcome outcome = Outcome::stored;
    if (std::filesystem::exists(path)) {
        const Json doc = load_verified(path);
        if (doc.is_null() || doc.value("sequence", "") != sequence) {
            outcome = Outcome::replaced_corrupt;
            if (diag != nullptr) {
                *diag << "warning: cache entry " << path.string() << " failed verification; recomputing\n";
            }
        } else if (doc.at("max_index").get<long>() == max_index) {
            return {doc.at("payload"), Outcome::hit};
        } else {
            outcome = Outcome::replaced_bound;
        }
    }
    Json payload = compute();
    store(sequence, max_index, payload);
    return {std::move(payload), outcome};
}

void SequenceCache::store(std::string_view sequence, long max_index, const Json& payload) const {
    std::filesystem::create_directories(dir_);
    Json doc;
    doc["sequence"] = std::string(sequence);
    doc["max_index"] = max_index;
    doc["sha256"] = sha256_hex(payload.dump());
    doc["payload"] = payload;
    const auto path = entry_path(sequence);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << doc.dump() << '\n';
        if (!out) {
            throw std::runtime_error("cannot write cache entry " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::vector<SequenceCache::Entry> SequenceCache::list() const {
    std::vector<Entry> entries;
    if (!std::filesystem::is_directory(dir_)) {
        return entries;
    }
    for (const auto& item : std::filesystem::directory_iterator(dir_)) {
        if (item.path().extension() != kSuffix) {
            continue;
        }
        Entry e;
        e.path = item.path();
        e.sequence = item.path().stem().string();
        const Json doc = load_verified(item.path());
        if (!doc.is_null()) {
            e.valid = true;
            e.max_index = doc.value("max_index", -1L);
        }
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.sequence < b.sequence; });
    return entries;
}

std::size_t SequenceCache::clear() const {
    std::size_t removed = 0;
    for (const auto& e : list()) {
        removed += std::filesystem::remove(e.path) ? 1 : 0;
    }
    return removed;
}

}  // namespace gregory
