#include "forge/wire.hpp"

#include "forge/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace forge::wire {

namespace {

const std::map<std::uint16_t, std::string> kTypeNames = {
    {TYPE_A, "A"},           {TYPE_NS, "NS"},     {TYPE_SOA, "SOA"},
    {TYPE_PTR, "PTR"},       {TYPE_DS, "DS"},     {TYPE_RRSIG, "RRSIG"},
    {TYPE_NSEC, "NSEC"},     {TYPE_DNSKEY, "DNSKEY"},
    {TYPE_NSEC3, "NSEC3"},   {TYPE_NSEC3PARAM, "NSEC3PARAM"},
};

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8) {
            out_.push_back(static_cast<std::uint8_t>(v >> shift));
        }
    }
    void bytes(const std::vector<std::uint8_t>& v) { out_.insert(out_.end(), v.begin(), v.end()); }
    void name(const DomainName& n) { bytes(n.to_wire()); }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    Reader(const std::uint8_t* data, std::size_t len) : data_(data), len_(len) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= len_; }

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint16_t u16() {
        need(2);
        std::uint16_t v = (std::uint16_t(data_[pos_]) << 8) | data_[pos_ + 1];
        pos_ += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v = (v << 8) | data_[pos_ + i];
        }
        pos_ += 4;
        return v;
    }
    std::vector<std::uint8_t> bytes(std::size_t n) {
        need(n);
        std::vector<std::uint8_t> v(data_ + pos_, data_ + pos_ + n);
        pos_ += n;
        return v;
    }

    // Name with compression-pointer support; pointers may only move backwards.
    DomainName name() {
        std::vector<std::string> labels;
        std::size_t p = pos_;
        bool jumped = false;
        std::size_t guard = 0;
        while (true) {
            if (p >= len_) {
                throw EncodingError("truncated name");
            }
            std::uint8_t len = data_[p];
            if ((len & 0xC0) == 0xC0) {
                if (p + 1 >= len_) {
                    throw EncodingError("truncated compression pointer");
                }
                std::size_t target = (std::size_t(len & 0x3F) << 8) | data_[p + 1];
                if (!jumped) {
                    pos_ = p + 2;
                    jumped = true;
                }
                if (target >= p) {
                    throw EncodingError("forward compression pointer");
                }
                p = target;
                if (++guard > 128) {
                    throw EncodingError("compression pointer loop");
                }
                continue;
            }
            if (len > 63) {
                throw EncodingError("label length over 63 in wire name");
            }
            if (len == 0) {
                if (!jumped) {
                    pos_ = p + 1;
                }
                break;
            }
            if (p + 1 + len > len_) {
                throw EncodingError("truncated label");
            }
            labels.emplace_back(reinterpret_cast<const char*>(data_ + p + 1), len);
            p += 1 + len;
        }
        return DomainName::from_labels(std::move(labels));
    }

private:
    void need(std::size_t n) const {
        if (pos_ + n > len_) {
            throw EncodingError("truncated DNS message");
        }
    }

    const std::uint8_t* data_;
    std::size_t len_;
    std::size_t pos_ = 0;
};

Record read_record(Reader& r) {
    Record rec;
    rec.name = r.name();
    rec.type = r.u16();
    rec.rclass = r.u16();
    rec.ttl = r.u32();
    std::uint16_t rdlen = r.u16();
    rec.rdata = r.bytes(rdlen);
    return rec;
}

void write_record(Writer& w, const Record& rec) {
    w.name(rec.name);
    w.u16(rec.type);
    w.u16(rec.rclass);
    w.u32(rec.ttl);
    if (rec.rdata.size() > 0xFFFF) {
        throw EncodingError("rdata too long");
    }
    w.u16(static_cast<std::uint16_t>(rec.rdata.size()));
    w.bytes(rec.rdata);
}

} // namespace

std::string type_to_mnemonic(std::uint16_t type) {
    auto it = kTypeNames.find(type);
    if (it != kTypeNames.end()) {
        return it->second;
    }
    return "TYPE" + std::to_string(type);
}

std::uint16_t mnemonic_to_type(const std::string& mnemonic) {
    for (const auto& [code, name] : kTypeNames) {
        if (name == mnemonic) {
            return code;
        }
    }
    if (mnemonic.starts_with("TYPE")) {
        return static_cast<std::uint16_t>(std::stoul(mnemonic.substr(4)));
    }
    throw EncodingError("unknown record type mnemonic: " + mnemonic);
}

std::vector<std::uint8_t> build(const Message& msg) {
    Writer w;
    const Header& h = msg.header;
    w.u16(h.id);
    std::uint16_t flags = 0;
    flags |= std::uint16_t(h.qr) << 15;
    flags |= std::uint16_t(h.opcode & 0xF) << 11;
    flags |= std::uint16_t(h.aa) << 10;
    flags |= std::uint16_t(h.tc) << 9;
    flags |= std::uint16_t(h.rd) << 8;
    flags |= std::uint16_t(h.ra) << 7;
    flags |= std::uint16_t(h.ad) << 5;
    flags |= std::uint16_t(h.cd) << 4;
    flags |= std::uint16_t(h.rcode & 0xF);
    w.u16(flags);
    w.u16(static_cast<std::uint16_t>(msg.questions.size()));
    w.u16(static_cast<std::uint16_t>(msg.answers.size()));
    w.u16(static_cast<std::uint16_t>(msg.authorities.size()));
    w.u16(static_cast<std::uint16_t>(msg.additionals.size()));
    for (const auto& q : msg.questions) {
        w.name(q.qname);
        w.u16(q.qtype);
        w.u16(q.qclass);
    }
    for (const auto* section : {&msg.answers, &msg.authorities, &msg.additionals}) {
        for (const auto& rec : *section) {
            write_record(w, rec);
        }
    }
    return w.take();
}

Message parse(const std::vector<std::uint8_t>& data) {
    Reader r(data.data(), data.size());
    Message msg;
    Header& h = msg.header;
    h.id = r.u16();
    std::uint16_t flags = r.u16();
    h.qr = flags & 0x8000;
    h.opcode = (flags >> 11) & 0xF;
    h.aa = flags & 0x0400;
    h.tc = flags & 0x0200;
    h.rd = flags & 0x0100;
    h.ra = flags & 0x0080;
    h.ad = flags & 0x0020;
    h.cd = flags & 0x0010;
    h.rcode = flags & 0xF;
    h.qdcount = r.u16();
    h.ancount = r.u16();
    h.nscount = r.u16();
    h.arcount = r.u16();
    for (int i = 0; i < h.qdcount; ++i) {
        Question q;
        q.qname = r.name();
        q.qtype = r.u16();
        q.qclass = r.u16();
        msg.questions.push_back(std::move(q));
    }
    for (int i = 0; i < h.ancount; ++i) msg.answers.push_back(read_record(r));
    for (int i = 0; i < h.nscount; ++i) msg.authorities.push_back(read_record(r));
    for (int i = 0; i < h.arcount; ++i) msg.additionals.push_back(read_record(r));
    return msg;
}

// ---- rdata codecs ----------------------------------------------------------

std::vector<std::uint8_t> encode_a(const std::string& dotted_quad) {
    std::vector<std::uint8_t> out;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t dot = dotted_quad.find('.', start);
        std::string part = dotted_quad.substr(start, dot == std::string::npos ? dot : dot - start);
        std::size_t used = 0;
        unsigned long v = std::stoul(part, &used);
        if (used != part.size() || part.empty() || v > 255) {
            throw EncodingError("bad IPv4 address: " + dotted_quad);
        }
        out.push_back(static_cast<std::uint8_t>(v));
        if (dot == std::string::npos) {
            if (i != 3) {
                throw EncodingError("bad IPv4 address: " + dotted_quad);
            }
            break;
        }
        start = dot + 1;
    }
    if (out.size() != 4) {
        throw EncodingError("bad IPv4 address: " + dotted_quad);
    }
    return out;
}

std::string decode_a(const std::vector<std::uint8_t>& rdata) {
    if (rdata.size() != 4) {
        throw EncodingError("A rdata must be 4 bytes");
    }
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (i) out += '.';
        out += std::to_string(rdata[i]);
    }
    return out;
}

std::vector<std::uint8_t> encode_name_rdata(const DomainName& n) { return n.to_wire(); }

DomainName decode_name_rdata(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    return r.name();
}

std::vector<std::uint8_t> encode_soa(const SoaData& soa) {
    Writer w;
    w.name(soa.mname);
    w.name(soa.rname);
    w.u32(soa.serial);
    w.u32(soa.refresh);
    w.u32(soa.retry);
    w.u32(soa.expire);
    w.u32(soa.minimum);
    return w.take();
}

SoaData decode_soa(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    SoaData soa;
    soa.mname = r.name();
    soa.rname = r.name();
    soa.serial = r.u32();
    soa.refresh = r.u32();
    soa.retry = r.u32();
    soa.expire = r.u32();
    soa.minimum = r.u32();
    return soa;
}

std::vector<std::uint8_t> encode_dnskey(const DnskeyData& key) {
    Writer w;
    w.u16(key.flags);
    w.u8(key.protocol);
    w.u8(key.algorithm);
    w.bytes(key.public_key);
    return w.take();
}

DnskeyData decode_dnskey(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    DnskeyData key;
    key.flags = r.u16();
    key.protocol = r.u8();
    key.algorithm = r.u8();
    key.public_key = r.bytes(rdata.size() - 4);
    return key;
}

std::vector<std::uint8_t> encode_ds(const DsData& ds) {
    Writer w;
    w.u16(ds.key_tag);
    w.u8(ds.algorithm);
    w.u8(ds.digest_type);
    w.bytes(ds.digest);
    return w.take();
}

DsData decode_ds(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    DsData ds;
    ds.key_tag = r.u16();
    ds.algorithm = r.u8();
    ds.digest_type = r.u8();
    ds.digest = r.bytes(rdata.size() - 4);
    return ds;
}

std::vector<std::uint8_t> encode_rrsig(const RrsigData& sig) {
    Writer w;
    w.u16(sig.type_covered);
    w.u8(sig.algorithm);
    w.u8(sig.labels);
    w.u32(sig.original_ttl);
    w.u32(sig.expiration);
    w.u32(sig.inception);
    w.u16(sig.key_tag);
    w.name(sig.signer);
    w.bytes(sig.signature);
    return w.take();
}

RrsigData decode_rrsig(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    RrsigData sig;
    sig.type_covered = r.u16();
    sig.algorithm = r.u8();
    sig.labels = r.u8();
    sig.original_ttl = r.u32();
    sig.expiration = r.u32();
    sig.inception = r.u32();
    sig.key_tag = r.u16();
    sig.signer = r.name();
    sig.signature = r.bytes(rdata.size() - r.pos());
    return sig;
}

std::vector<std::uint8_t> encode_nsec(const NsecData& nsec) {
    Writer w;
    w.name(nsec.next);
    w.bytes(encode_type_bitmap(nsec.types));
    return w.take();
}

NsecData decode_nsec(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    NsecData nsec;
    nsec.next = r.name();
    nsec.types = decode_type_bitmap(rdata.data() + r.pos(), rdata.size() - r.pos());
    return nsec;
}

std::vector<std::uint8_t> encode_nsec3(const Nsec3Data& nsec3) {
    Writer w;
    w.u8(static_cast<std::uint8_t>(nsec3.params.algorithm));
    w.u8(nsec3.params.flags);
    w.u16(nsec3.params.iterations);
    if (nsec3.params.salt.size() > 255) {
        throw EncodingError("NSEC3 salt over 255 bytes");
    }
    w.u8(static_cast<std::uint8_t>(nsec3.params.salt.size()));
    w.bytes(nsec3.params.salt);
    w.u8(20);
    w.bytes(std::vector<std::uint8_t>(nsec3.next_hash.bytes.begin(), nsec3.next_hash.bytes.end()));
    w.bytes(encode_type_bitmap(nsec3.types));
    return w.take();
}

Nsec3Data decode_nsec3(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    Nsec3Data nsec3;
    nsec3.params.algorithm = static_cast<HashAlgorithm>(r.u8());
    nsec3.params.flags = r.u8();
    nsec3.params.iterations = r.u16();
    std::uint8_t salt_len = r.u8();
    nsec3.params.salt = r.bytes(salt_len);
    std::uint8_t hash_len = r.u8();
    if (hash_len != 20) {
        throw EncodingError("unexpected NSEC3 hash length " + std::to_string(hash_len));
    }
    auto hash_bytes = r.bytes(20);
    nsec3.next_hash = Hash160::from_bytes(hash_bytes.data());
    nsec3.types = decode_type_bitmap(rdata.data() + r.pos(), rdata.size() - r.pos());
    return nsec3;
}

std::vector<std::uint8_t> encode_nsec3param(const Nsec3Params& params) {
    Writer w;
    w.u8(static_cast<std::uint8_t>(params.algorithm));
    w.u8(params.flags);
    w.u16(params.iterations);
    w.u8(static_cast<std::uint8_t>(params.salt.size()));
    w.bytes(params.salt);
    return w.take();
}

Nsec3Params decode_nsec3param(const std::vector<std::uint8_t>& rdata) {
    Reader r(rdata.data(), rdata.size());
    Nsec3Params params;
    params.algorithm = static_cast<HashAlgorithm>(r.u8());
    params.flags = r.u8();
    params.iterations = r.u16();
    std::uint8_t salt_len = r.u8();
    params.salt = r.bytes(salt_len);
    return params;
}

std::vector<std::uint8_t> encode_type_bitmap(std::vector<std::uint16_t> types) {
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    std::vector<std::uint8_t> out;
    std::size_t i = 0;
    while (i < types.size()) {
        std::uint8_t window = types[i] >> 8;
        std::uint8_t bitmap[32] = {};
        std::uint8_t max_byte = 0;
        while (i < types.size() && (types[i] >> 8) == window) {
            std::uint8_t low = types[i] & 0xFF;
            bitmap[low / 8] |= std::uint8_t(0x80 >> (low % 8));
            max_byte = low / 8;
            ++i;
        }
        out.push_back(window);
        out.push_back(max_byte + 1);
        out.insert(out.end(), bitmap, bitmap + max_byte + 1);
    }
    return out;
}

std::vector<std::uint16_t> decode_type_bitmap(const std::uint8_t* data, std::size_t len) {
    std::vector<std::uint16_t> types;
    std::size_t pos = 0;
    while (pos < len) {
        if (pos + 2 > len) {
            throw EncodingError("truncated type bitmap");
        }
        std::uint8_t window = data[pos];
        std::uint8_t blen = data[pos + 1];
        if (blen == 0 || blen > 32 || pos + 2 + blen > len) {
            throw EncodingError("bad type bitmap window length");
        }
        for (std::size_t byte = 0; byte < blen; ++byte) {
            std::uint8_t b = data[pos + 2 + byte];
            for (int bit = 0; bit < 8; ++bit) {
                if (b & (0x80 >> bit)) {
                    types.push_back(std::uint16_t(window) << 8 | (byte * 8 + bit));
                }
            }
        }
        pos += 2 + blen;
    }
    return types;
}

std::uint16_t compute_key_tag(const std::vector<std::uint8_t>& dnskey_rdata) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < dnskey_rdata.size(); ++i) {
        acc += (i & 1) ? dnskey_rdata[i] : std::uint32_t(dnskey_rdata[i]) << 8;
    }
    acc += (acc >> 16) & 0xFFFF;
    return static_cast<std::uint16_t>(acc & 0xFFFF);
}

} // namespace forge::wire
