#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace hirenet {

std::uint64_t fnv1a64(std::string_view bytes);

// 16-hex-digit FNV-1a over the file content; DataError if unreadable.
std::string file_hash_hex(const std::string& path);

std::string read_file(const std::string& path);

// Writes to path + ".tmp" then renames, so readers never observe a partial
// file.
void write_file_atomic(const std::string& path, std::string_view content);

// Provenance record written next to every output file. Identical manifests
// imply byte-identical outputs.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> input_hashes; // file -> content hash
    long seed = 0;
    std::map<std::string, std::string> parameters;
    std::string tool_version;

    std::string to_json() const; // stable key order
};

// Writes `<output_path>.manifest.json` atomically.
void write_manifest(const RunManifest& manifest, const std::string& output_path);

} // namespace hirenet
