#pragma once

#include "forge/hash160.hpp"
#include "forge/name.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace forge {

enum class HashAlgorithm : std::uint8_t {
    Sha1 = 1, // the only algorithm assigned for NSEC3
};

// Digest length per algorithm; a future algorithm extends this table.
std::size_t digest_len(HashAlgorithm alg);

// The NSEC3PARAM payload: algorithm, flags, iterations, salt.
struct Nsec3Params {
    HashAlgorithm algorithm = HashAlgorithm::Sha1;
    std::uint8_t flags = 0; // opt-out bit modeled, never set by this toolkit
    std::uint16_t iterations = 0;
    std::vector<std::uint8_t> salt; // at most 255 bytes

    // Throws ConfigError when the salt is over 255 bytes or the algorithm
    // value is not assigned.
    void validate() const;

    bool operator==(const Nsec3Params&) const = default;
};

// Tallies of hash work. One SHA-1 "compression block" is the processing of
// a single 64-byte input block and is the unit every cost statement in this
// toolkit is expressed in.
struct CostMeter {
    std::uint64_t hash_calls = 0;         // SHA-1 digest computations
    std::uint64_t compression_blocks = 0; // 64-byte compression invocations
    std::uint64_t chain_evaluations = 0;  // full name -> hash derivations

    CostMeter& operator+=(const CostMeter& other) {
        hash_calls += other.hash_calls;
        compression_blocks += other.compression_blocks;
        chain_evaluations += other.chain_evaluations;
        return *this;
    }
};

// Number of 64-byte blocks SHA-1 processes for a message of msg_len bytes,
// including the padding block(s): one mandatory 0x80 byte plus an 8-byte
// length field.
constexpr std::uint64_t sha1_blocks(std::uint64_t msg_len) {
    return (msg_len + 8) / 64 + 1;
}

// Blocks consumed by one full NSEC3 hash chain evaluation of a name with
// the given wire length: the first application hashes wire||salt, every
// iteration re-hashes digest||salt.
std::uint64_t hash_cost_blocks(std::size_t name_wire_len, const Nsec3Params& params);

// The RFC5155 iterated hash: H(...H(H(wire(name)||salt)||salt)...||salt),
// iterations+1 digest computations in total. The meter is charged for the
// calls, the blocks (per the padding rule above) and one chain evaluation.
Hash160 nsec3_hash(const DomainName& name, const Nsec3Params& params, CostMeter& meter);

inline Hash160 nsec3_hash(const DomainName& name, const Nsec3Params& params) {
    CostMeter meter;
    return nsec3_hash(name, params, meter);
}

// True when owner == target.
inline bool matches(const Hash160& owner, const Hash160& target) { return owner == target; }

// True when target lies strictly inside the circular interval (owner, next).
// owner == next is the degenerate single-record chain and covers everything
// except the owner itself.
bool covers(const Hash160& owner, const Hash160& next, const Hash160& target);

// Memo table for candidate hashes within one validation, keyed by name.
// All entries share a single Nsec3Params; the validator decides whether to
// route hashing through one of these.
class Nsec3HashCache {
public:
    explicit Nsec3HashCache(Nsec3Params params) : params_(std::move(params)) {}

    // Returns the cached hash, or computes and charges the meter on a miss.
    Hash160 hash(const DomainName& name, CostMeter& meter);

    std::size_t size() const { return table_.size(); }

private:
    Nsec3Params params_;
    std::map<DomainName, Hash160> table_;
};

} // namespace forge
