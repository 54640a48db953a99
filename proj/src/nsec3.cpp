#include "forge/nsec3.hpp"

#include "forge/errors.hpp"

#include <openssl/evp.h>

#include <memory>

namespace forge {

namespace {

using EVP_MD_CTX_ptr = std::unique_ptr<EVP_MD_CTX, decltype([](EVP_MD_CTX* c) { EVP_MD_CTX_free(c); })>;

// One SHA-1 digest over buf; out must hold 20 bytes.
void sha1_digest(const std::uint8_t* data, std::size_t len, std::uint8_t* out) {
    unsigned int out_len = 0;
    if (EVP_Digest(data, len, out, &out_len, EVP_sha1(), nullptr) != 1 || out_len != 20) {
        throw ForgeError("SHA-1 digest computation failed");
    }
}

} // namespace

std::size_t digest_len(HashAlgorithm alg) {
    switch (alg) {
    case HashAlgorithm::Sha1:
        return 20;
    }
    throw ConfigError("unsupported NSEC3 hash algorithm value " +
                      std::to_string(static_cast<int>(alg)));
}

void Nsec3Params::validate() const {
    digest_len(algorithm);
    if (salt.size() > 255) {
        throw ConfigError("NSEC3 salt exceeds 255 bytes: " + std::to_string(salt.size()));
    }
}

std::uint64_t hash_cost_blocks(std::size_t name_wire_len, const Nsec3Params& params) {
    const std::uint64_t salt_len = params.salt.size();
    const std::uint64_t dlen = digest_len(params.algorithm);
    return sha1_blocks(name_wire_len + salt_len) +
           std::uint64_t(params.iterations) * sha1_blocks(dlen + salt_len);
}

Hash160 nsec3_hash(const DomainName& name, const Nsec3Params& params, CostMeter& meter) {
    params.validate();

    const std::vector<std::uint8_t> wire = name.to_wire();

    // First application: wire name with the salt appended.
    std::vector<std::uint8_t> buf;
    buf.reserve(wire.size() + params.salt.size());
    buf.insert(buf.end(), wire.begin(), wire.end());
    buf.insert(buf.end(), params.salt.begin(), params.salt.end());

    std::uint8_t digest[20];
    sha1_digest(buf.data(), buf.size(), digest);

    // Each iteration re-hashes the previous digest with the salt appended.
    buf.resize(20 + params.salt.size());
    for (std::uint16_t i = 0; i < params.iterations; ++i) {
        std::copy(digest, digest + 20, buf.begin());
        std::copy(params.salt.begin(), params.salt.end(), buf.begin() + 20);
        sha1_digest(buf.data(), buf.size(), digest);
    }

    meter.hash_calls += std::uint64_t(params.iterations) + 1;
    meter.compression_blocks += hash_cost_blocks(wire.size(), params);
    meter.chain_evaluations += 1;

    return Hash160::from_bytes(digest);
}

bool covers(const Hash160& owner, const Hash160& next, const Hash160& target) {
    if (owner == next) {
        return target != owner;
    }
    if (owner < next) {
        return owner < target && target < next;
    }
    // Interval wraps past the top of the hash space.
    return target > owner || target < next;
}

Hash160 Nsec3HashCache::hash(const DomainName& name, CostMeter& meter) {
    auto it = table_.find(name);
    if (it != table_.end()) {
        return it->second;
    }
    Hash160 h = nsec3_hash(name, params_, meter);
    table_.emplace(name, h);
    return h;
}

} // namespace forge
