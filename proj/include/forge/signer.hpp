#pragma once

#include "forge/name.hpp"
#include "forge/wire.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace forge {

// Produces the zone's key pair and RRset signatures. Two implementations
// ship: a deterministic test signer (default everywhere reproducibility
// matters) and a real RSA-SHA256 signer.
class SignerInterface {
public:
    virtual ~SignerInterface() = default;

    // Returns {KSK, ZSK} DNSKEY payloads for the zone.
    virtual std::pair<wire::DnskeyData, wire::DnskeyData>
    make_keys(const DomainName& origin, int key_size_bits, std::uint8_t algorithm) = 0;

    // Signs the RFC4034 canonical form of an RRset.
    virtual std::vector<std::uint8_t> sign(const std::vector<std::uint8_t>& canonical,
                                           bool with_ksk) = 0;

    // Override for the DNSKEY/RRSIG algorithm number; nullopt keeps the
    // configured value.
    virtual std::optional<std::uint8_t> algorithm_override() const { return std::nullopt; }

    virtual std::string id() const = 0;

    // False when signatures are structural placeholders.
    virtual bool cryptographic() const = 0;
};

// Deterministic placeholder signer: key and signature bytes are derived
// from a seed, so repeated runs produce byte-identical zones. Signatures
// are not verifiable.
class TestSigner : public SignerInterface {
public:
    explicit TestSigner(std::uint64_t seed = 1) : seed_(seed) {}

    std::pair<wire::DnskeyData, wire::DnskeyData>
    make_keys(const DomainName& origin, int key_size_bits, std::uint8_t algorithm) override;
    std::vector<std::uint8_t> sign(const std::vector<std::uint8_t>& canonical,
                                   bool with_ksk) override;
    std::string id() const override { return "test"; }
    bool cryptographic() const override { return false; }

private:
    std::uint64_t seed_;
    int key_bytes_ = 0;
};

// RSA-SHA256 signer backed by OpenSSL. Keys are generated per zone;
// signatures verify against the emitted DNSKEY material.
class RsaSigner : public SignerInterface {
public:
    RsaSigner();
    ~RsaSigner() override;
    RsaSigner(const RsaSigner&) = delete;
    RsaSigner& operator=(const RsaSigner&) = delete;

    std::pair<wire::DnskeyData, wire::DnskeyData>
    make_keys(const DomainName& origin, int key_size_bits, std::uint8_t algorithm) override;
    std::vector<std::uint8_t> sign(const std::vector<std::uint8_t>& canonical,
                                   bool with_ksk) override;
    std::optional<std::uint8_t> algorithm_override() const override { return 8; } // RSASHA256
    std::string id() const override { return "rsa-sha256"; }
    bool cryptographic() const override { return true; }

    // Verification hook used by tests.
    bool verify(const std::vector<std::uint8_t>& canonical,
                const std::vector<std::uint8_t>& signature, bool with_ksk) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace forge
