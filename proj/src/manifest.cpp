#include "tailsum/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace tailsum {

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("sha256_file: cannot open " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::string hex(2 * len, '0');
    for (unsigned int i = 0; i < len; ++i)
        std::snprintf(hex.data() + 2 * i, 3, "%02x", digest[i]);
    return hex;
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void RunManifest::write(const std::string& path) const {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config;
    j["seed"] = seed;
    j["replicates"] = replicates;
    j["clamp_activations"] = clamp_activations;
    j["wall_time_seconds"] = wall_time_seconds;
    j["timestamp"] = iso8601_utc_now();
    j["outputs"] = nlohmann::json::array();
    for (const auto& f : output_files)
        j["outputs"].push_back({{"file", f}, {"sha256", sha256_file(f)}});
    std::ofstream out(path);
    if (!out) throw std::runtime_error("RunManifest::write: cannot open " + path);
    out << j.dump(2) << '\n';
}

}  // namespace tailsum
