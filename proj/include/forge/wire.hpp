#pragma once

#include "forge/hash160.hpp"
#include "forge/name.hpp"
#include "forge/nsec3.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Minimal DNS message codec: header, question and the resource records this
// toolkit touches (A, NS, SOA, PTR, DS, RRSIG, NSEC, DNSKEY, NSEC3,
// NSEC3PARAM). Writing never compresses names; parsing follows compression
// pointers so responses from real servers are readable.

namespace forge::wire {

enum : std::uint16_t {
    TYPE_A = 1,
    TYPE_NS = 2,
    TYPE_SOA = 6,
    TYPE_PTR = 12,
    TYPE_DS = 43,
    TYPE_RRSIG = 46,
    TYPE_NSEC = 47,
    TYPE_DNSKEY = 48,
    TYPE_NSEC3 = 50,
    TYPE_NSEC3PARAM = 51,
};

enum : std::uint16_t { CLASS_IN = 1 };

// "A" <-> 1 etc.; unknown types render as "TYPE123" per RFC3597.
std::string type_to_mnemonic(std::uint16_t type);
std::uint16_t mnemonic_to_type(const std::string& mnemonic);

struct Header {
    std::uint16_t id = 0;
    bool qr = false, aa = false, tc = false, rd = false, ra = false, ad = false, cd = false;
    std::uint8_t opcode = 0;
    std::uint8_t rcode = 0;
    std::uint16_t qdcount = 0, ancount = 0, nscount = 0, arcount = 0;
};

constexpr std::uint8_t RCODE_NOERROR = 0;
constexpr std::uint8_t RCODE_NXDOMAIN = 3;

struct Question {
    DomainName qname;
    std::uint16_t qtype = 0;
    std::uint16_t qclass = CLASS_IN;
};

// A record with undecoded rdata; typed views below interpret it.
struct Record {
    DomainName name;
    std::uint16_t type = 0;
    std::uint16_t rclass = CLASS_IN;
    std::uint32_t ttl = 0;
    std::vector<std::uint8_t> rdata;
};

struct Message {
    Header header;
    std::vector<Question> questions;
    std::vector<Record> answers;
    std::vector<Record> authorities;
    std::vector<Record> additionals;
};

std::vector<std::uint8_t> build(const Message& msg);
Message parse(const std::vector<std::uint8_t>& data);

// ---- typed rdata -----------------------------------------------------------

struct SoaData {
    DomainName mname;
    DomainName rname;
    std::uint32_t serial = 0, refresh = 0, retry = 0, expire = 0, minimum = 0;
};

struct DnskeyData {
    std::uint16_t flags = 0;
    std::uint8_t protocol = 3;
    std::uint8_t algorithm = 0;
    std::vector<std::uint8_t> public_key;
};

struct DsData {
    std::uint16_t key_tag = 0;
    std::uint8_t algorithm = 0;
    std::uint8_t digest_type = 0;
    std::vector<std::uint8_t> digest;
};

struct RrsigData {
    std::uint16_t type_covered = 0;
    std::uint8_t algorithm = 0;
    std::uint8_t labels = 0;
    std::uint32_t original_ttl = 0;
    std::uint32_t expiration = 0;
    std::uint32_t inception = 0;
    std::uint16_t key_tag = 0;
    DomainName signer;
    std::vector<std::uint8_t> signature;
};

struct NsecData {
    DomainName next;
    std::vector<std::uint16_t> types;
};

struct Nsec3Data {
    Nsec3Params params;
    Hash160 next_hash;
    std::vector<std::uint16_t> types;
};

std::vector<std::uint8_t> encode_a(const std::string& dotted_quad);
std::string decode_a(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_name_rdata(const DomainName& n); // NS, PTR
DomainName decode_name_rdata(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_soa(const SoaData& soa);
SoaData decode_soa(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_dnskey(const DnskeyData& key);
DnskeyData decode_dnskey(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_ds(const DsData& ds);
DsData decode_ds(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_rrsig(const RrsigData& sig);
RrsigData decode_rrsig(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_nsec(const NsecData& nsec);
NsecData decode_nsec(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_nsec3(const Nsec3Data& nsec3);
Nsec3Data decode_nsec3(const std::vector<std::uint8_t>& rdata);

std::vector<std::uint8_t> encode_nsec3param(const Nsec3Params& params);
Nsec3Params decode_nsec3param(const std::vector<std::uint8_t>& rdata);

// RFC4034 type bitmap (window blocks).
std::vector<std::uint8_t> encode_type_bitmap(std::vector<std::uint16_t> types);
std::vector<std::uint16_t> decode_type_bitmap(const std::uint8_t* data, std::size_t len);

// RFC4034 Appendix B key tag over a DNSKEY rdata.
std::uint16_t compute_key_tag(const std::vector<std::uint8_t>& dnskey_rdata);

} // namespace forge::wire
