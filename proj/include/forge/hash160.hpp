#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace forge {

// A 160-bit NSEC3 hash value, ordered and incremented as a big-endian
// unsigned integer. This is the currency of the hash chain: owner hashes,
// next hashes and query-name hashes are all Hash160s.
struct Hash160 {
    std::array<std::uint8_t, 20> bytes{};

    auto operator<=>(const Hash160&) const = default;

    // +1 / -1 modulo 2^160.
    Hash160 inc() const;
    Hash160 dec() const;

    // Base32hex (RFC4648 Extended Hex alphabet), 32 characters, uppercase,
    // no padding. This is the NSEC3 owner-label form.
    std::string to_base32hex() const;

    // Case-insensitive decode. Throws EncodingError on bad length/characters.
    static Hash160 from_base32hex(std::string_view text);

    static Hash160 from_bytes(const std::uint8_t* data);

    std::string to_hex() const;
};

inline Hash160 hash_inc(const Hash160& h) { return h.inc(); }
inline Hash160 hash_dec(const Hash160& h) { return h.dec(); }

inline std::string base32hex_encode(const Hash160& h) { return h.to_base32hex(); }
inline Hash160 base32hex_decode(std::string_view text) { return Hash160::from_base32hex(text); }

} // namespace forge
