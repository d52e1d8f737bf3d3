#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gregory {

// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "GREGORY_CACHE_DIR";

std::string sha256_hex(std::string_view data);

// On-disk store of serialized tables, one file per sequence id:
//   {"sequence": id, "max_index": M, "sha256": <hex of payload dump>, "payload": <table>}
// An entry is served only when its bound matches the request and the
// checksum verifies; anything else is recomputed and overwritten.
class SequenceCache {
public:
    enum class Outcome { hit, stored, replaced_bound, replaced_corrupt };

    struct Fetched {
        nlohmann::ordered_json payload;
        Outcome outcome;
    };

    struct Entry {
        std::string sequence;
        long max_index = -1;
        bool valid = false;
        std::filesystem::path path;
    };

    explicit SequenceCache(std::filesystem::path dir);

    // $GREGORY_CACHE_DIR, else ~/.gregory-cache.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(std::string_view sequence) const;

    // Corrupt entries produce a warning on `diag` when it is non-null.
    Fetched fetch(std::string_view sequence, long max_index,
                  const std::function<nlohmann::ordered_json()>& compute, std::ostream* diag = nullptr) const;

    std::vector<Entry> list() const;
    // Removes every cache entry; returns how many were removed.
    std::size_t clear() const;

private:
    void store(std::string_view sequence, long max_index, const nlohmann::ordered_json& payload) const;

    std::filesystem::path dir_;
};

}  // namespace gregory
