#ifndef TAILSUM_MANIFEST_HPP
#define TAILSUM_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tailsum {

std::string sha256_file(const std::string& path);
std::string iso8601_utc_now();

// Run metadata written next to every output: config echo, seed, counters and
// SHA-256 digests of the files the run emitted.
struct RunManifest {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::int64_t replicates = 0;
    std::int64_t clamp_activations = 0;
    double wall_time_seconds = 0.0;
    std::vector<std::string> output_files;

    void write(const std::string& path) const;
};

}  // namespace tailsum

#endif
