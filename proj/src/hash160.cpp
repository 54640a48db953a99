#include "forge/hash160.hpp"

#include "forge/errors.hpp"

#include <cstring>

namespace forge {

namespace {

constexpr char kAlphabet[] = "0123456789ABCDEFGHIJKLMNOPQRSTUV";

int decode_symbol(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'V') return c - 'A' + 10;
    if (c >= 'a' && c <= 'v') return c - 'a' + 10;
    return -1;
}

} // namespace

Hash160 Hash160::inc() const {
    Hash160 out = *this;
    for (int i = 19; i >= 0; --i) {
        if (++out.bytes[i] != 0) {
            break;
        }
    }
    return out;
}

Hash160 Hash160::dec() const {
    Hash160 out = *this;
    for (int i = 19; i >= 0; --i) {
        if (out.bytes[i]-- != 0) {
            break;
        }
    }
    return out;
}

std::string Hash160::to_base32hex() const {
    // 160 bits = 32 groups of 5, MSB first; no padding needed.
    std::string out(32, '0');
    for (std::size_t group = 0; group < 32; ++group) {
        std::size_t bit = group * 5;
        unsigned value = 0;
        for (std::size_t k = 0; k < 5; ++k) {
            std::size_t b = bit + k;
            unsigned bitval = (bytes[b / 8] >> (7 - b % 8)) & 1u;
            value = (value << 1) | bitval;
        }
        out[group] = kAlphabet[value];
    }
    return out;
}

Hash160 Hash160::from_base32hex(std::string_view text) {
    if (text.size() != 32) {
        throw EncodingError("base32hex hash must be 32 characters, got " +
                            std::to_string(text.size()));
    }
    Hash160 out;
    for (std::size_t group = 0; group < 32; ++group) {
        int value = decode_symbol(text[group]);
        if (value < 0) {
            throw EncodingError(std::string("invalid base32hex character '") + text[group] + "'");
        }
        for (std::size_t k = 0; k < 5; ++k) {
            if (value & (1 << (4 - k))) {
                std::size_t b = group * 5 + k;
                out.bytes[b / 8] |= static_cast<std::uint8_t>(1u << (7 - b % 8));
            }
        }
    }
    return out;
}

Hash160 Hash160::from_bytes(const std::uint8_t* data) {
    Hash160 out;
    std::memcpy(out.bytes.data(), data, 20);
    return out;
}

std::string Hash160::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(40);
    for (auto b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

} // namespace forge
