// Copyright the hamspace authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "hamspace/codefile.hpp"

#include <cstring>
#include <fstream>

namespace hamspace {

namespace {

void put_u32_le(std::ostream& os, uint32_t v) {
    uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                    static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64_le(std::ostream& os, uint64_t v) {
    uint8_t b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

uint32_t get_u32_le(std::istream& is) {
    uint8_t b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return uint32_t{b[0]} | uint32_t{b[1]} << 8 | uint32_t{b[2]} << 16 | uint32_t{b[3]} << 24;
}

uint64_t get_u64_le(std::istream& is) {
    uint8_t b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t{b[i]} << (8 * i);
    return v;
}

}  // namespace

std::vector<uint8_t> code_to_bytes(const HashCode& c) {
    uint32_t nbytes = (c.width + 7) / 8;
    std::vector<uint8_t> out(nbytes);
    for (uint32_t i = 0; i < nbytes; ++i) {
        out[i] = static_cast<uint8_t>(c.words[i >> 3] >> (8 * (i & 7)));
    }
    return out;
}

HashCode code_from_bytes(std::span<const uint8_t> bytes, uint32_t width) {
    HashCode c = HashCode::zeros(width);
    uint32_t nbytes = (width + 7) / 8;
    if (bytes.size() < nbytes) throw FormatError("truncated code bytes");
    for (uint32_t i = 0; i < nbytes; ++i) {
        c.words[i >> 3] |= uint64_t{bytes[i]} << (8 * (i & 7));
    }
    return c;
}

void write_code_file(const std::string& path, std::span<const HashCode> codes) {
    uint32_t width = codes.empty() ? 8 : codes[0].width;
    if (!HashCode::valid_code_width(width)) {
        throw UsageError("code file width must be one of 8/16/32/64/128, got " +
                         std::to_string(width));
    }
    for (const HashCode& c : codes) {
        if (c.width != width) throw UsageError("code file requires uniform code width");
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    os.write(kCodeFileMagic.data(), static_cast<std::streamsize>(kCodeFileMagic.size()));
    put_u32_le(os, width);
    put_u64_le(os, codes.size());
    for (const HashCode& c : codes) {
        auto bytes = code_to_bytes(c);
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(bytes.size()));
    }
    if (!os) throw FormatError("write failed: " + path);
}

std::vector<HashCode> read_code_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kCodeFileMagic.data(), 8) != 0) {
        throw FormatError("bad magic in code file: " + path);
    }
    uint32_t width = get_u32_le(is);
    uint64_t count = get_u64_le(is);
    if (!is || !HashCode::valid_code_width(width)) {
        throw FormatError("bad header in code file: " + path);
    }
    uint32_t nbytes = (width + 7) / 8;
    std::vector<HashCode> codes;
    codes.reserve(count);
    std::vector<uint8_t> buf(nbytes);
    for (uint64_t n = 0; n < count; ++n) {
        is.read(reinterpret_cast<char*>(buf.data()), nbytes);
        if (!is) throw FormatError("truncated code file: " + path);
        codes.push_back(code_from_bytes(buf, width));
    }
    return codes;
}

}  // namespace hamspace
