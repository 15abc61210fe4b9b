#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ipd::io {

// FNV-1a 64 over the file bytes, as 16 hex digits.
std::string file_digest_hex(const std::string& path);

// Replay metadata written by every artifact-producing subcommand:
// {command, flags, seed, catalog_version, input_digests, outputs}.
// Returns the path written (<out_dir>/manifest_<command>.json).
std::string write_manifest(const std::string& out_dir, const std::string& command,
                           const std::vector<std::string>& flags,
                           std::uint64_t seed,
                           const std::map<std::string, std::string>& input_digests,
                           const std::vector<std::string>& outputs);

}  // namespace ipd::io
