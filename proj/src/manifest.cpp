#include "hirenet/manifest.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hirenet/errors.hpp"
#include "hirenet/version.hpp"

namespace hirenet {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("i/o error while reading: " + path);
    return buf.str();
}

std::string file_hash_hex(const std::string& path) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(read_file(path))));
    return buf;
}

void write_file_atomic(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write file: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw DataError("i/o error while writing: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw DataError("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["input_hashes"] = input_hashes;
    j["seed"] = seed;
    j["parameters"] = parameters;
    j["tool_version"] = tool_version.empty() ? std::string(kToolVersion) : tool_version;
    return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::string& output_path) {
    write_file_atomic(output_path + ".manifest.json", manifest.to_json());
}

} // namespace hirenet
