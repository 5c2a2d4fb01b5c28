#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qda::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

/// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);

struct ManifestEntry {
  std::string id;                 // "fig05", "table_A", ...
  std::vector<std::string> args;  // subcommand and flags, without --out
  std::string checksum;           // over every file the command writes
};

struct Manifest {
  std::vector<ManifestEntry> entries;
};

/// One entry per figure (20) and per case table (16), checksums empty.
Manifest default_manifest();

Manifest load_manifest(const std::filesystem::path& path);
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

/// Checksum of a directory: file names and contents in name order.
std::string directory_checksum(const std::filesystem::path& dir);

}  // namespace qda::cli
