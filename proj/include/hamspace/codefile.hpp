// Copyright the hamspace authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "hamspace/bitcode.hpp"

namespace hamspace {

// Shared binary code file format:
//   8-byte magic "HAMSPC01", little-endian u32 width B, little-endian u64
//   count N, then N codes of ceil(B/8) bytes each, bit 0 of byte 0 being
//   code bit 0.
inline constexpr std::string_view kCodeFileMagic = "HAMSPC01";

void write_code_file(const std::string& path, std::span<const HashCode> codes);
std::vector<HashCode> read_code_file(const std::string& path);

// In-memory encoding of one code as ceil(width/8) bytes.
std::vector<uint8_t> code_to_bytes(const HashCode& c);
HashCode code_from_bytes(std::span<const uint8_t> bytes, uint32_t width);

}  // namespace hamspace
