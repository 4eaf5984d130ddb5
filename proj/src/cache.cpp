#include "kacpoly/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>
#include <unistd.h>

#include "kacpoly/error.hpp"

namespace kacpoly {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

ResultCache::ResultCache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

std::filesystem::path ResultCache::default_dir() {
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kacpoly";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "kacpoly";
    return std::filesystem::temp_directory_path() / "kacpoly-cache";
}

std::string ResultCache::key(const std::string& material) {
    return sha256_hex(std::string(kEngineVersion) + "\n" + material);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / key.substr(0, 2) / (key + ".entry");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header) || header != kEngineVersion) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
    if (!enabled_) return;
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    const auto target = path_for(key);
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec) return;
    std::random_device rd;
    const auto tmp = target.parent_path() / (key + ".tmp." + std::to_string(::getpid()) + "." +
                                             std::to_string(counter.fetch_add(1)) + "." + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << kEngineVersion << "\n" << value;
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace kacpoly
