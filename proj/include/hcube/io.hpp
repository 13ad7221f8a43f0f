#pragma once

#include "hcube/bounds.hpp"
#include "hcube/broadcast.hpp"
#include "hcube/decomposition.hpp"
#include "hcube/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace hcube::io {

// Decomposition file, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "HQDC"
//   4       4     format version (1)
//   8       1     n
//   9       1     k
//   10      1     kind (0 even, 1 odd)
//   11      1     reserved, 0
//   12      8     label count, n * 2^(n-1)
//   20      ...   one byte per edge in EdgeId order
inline constexpr std::uint32_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 20;

std::vector<std::uint8_t> serialize(const Decomposition& d);
/// Throws ParseError on any malformed input, including labels above k.
Decomposition deserialize(std::span<const std::uint8_t> bytes);

void write_file(const std::filesystem::path& path, const Decomposition& d);
Decomposition read_file(const std::filesystem::path& path);

/// Undirected DOT graph; each edge carries tree=j (0 = leftover).
std::string to_dot(const Decomposition& d);
/// "u v label" per edge, EdgeId order.
std::string to_edgelist(const Decomposition& d);
nlohmann::json to_json(const Decomposition& d);

nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const BoundsReport& b);
nlohmann::json to_json(const BroadcastMetrics& m);

} // namespace hcube::io
