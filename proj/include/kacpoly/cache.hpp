#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace kacpoly {

/// Bumped whenever any engine output could change.
inline constexpr const char* kEngineVersion = "kacpoly-1";

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

/// Content-addressed result store. Entries are written to a temporary file
/// and renamed into place, so concurrent processes never see partial
/// entries; an entry written by another engine version reads as a miss.
class ResultCache {
public:
    ResultCache(std::filesystem::path dir, bool enabled);

    /// $XDG_CACHE_HOME/kacpoly, else ~/.cache/kacpoly.
    static std::filesystem::path default_dir();

    bool enabled() const noexcept { return enabled_; }
    const std::filesystem::path& dir() const noexcept { return dir_; }

    static std::string key(const std::string& material);

    std::optional<std::string> get(const std::string& key) const;
    /// Best effort: I/O failures leave the cache unchanged and are ignored.
    void put(const std::string& key, const std::string& value) const;

private:
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
    bool enabled_;
};

} // namespace kacpoly
