#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

// An absolute DNS name in canonical (lowercase) form.
//
// Labels are stored root-last without the empty root label. A name is
// canonicalized once at construction; every hash computed from it later is
// computed over the same bytes.
class DomainName {
public:
    // Root name.
    DomainName() = default;

    // Parses presentation format ("a.b.example.org" or "a.b.example.org.").
    // Uppercase ASCII is folded to lowercase. Throws NameError on empty
    // interior labels, labels over 63 bytes or wire length over 255.
    static DomainName parse(std::string_view text);

    // Builds a name from raw labels, leftmost first. Same validation as parse.
    static DomainName from_labels(std::vector<std::string> labels);

    bool is_root() const { return labels_.empty(); }
    std::size_t label_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Length of the RFC1035 wire encoding, including the root byte.
    std::size_t wire_len() const;

    // RFC1035 wire encoding: length-prefixed labels, zero terminator,
    // no compression.
    std::vector<std::uint8_t> to_wire() const;

    // Presentation format with trailing dot; the root name is ".".
    std::string to_text() const;

    // Name with the leftmost label removed. Throws NameError on the root.
    DomainName parent() const;

    // New name <label>.<this>. Throws NameError if limits are exceeded.
    DomainName child(std::string_view label) const;

    // True if this equals `ancestor` or sits below it.
    bool is_below_or_equal(const DomainName& ancestor) const;

    // Labels between this name and an ancestor (0 when equal).
    std::size_t depth_below(const DomainName& ancestor) const;

    bool operator==(const DomainName&) const = default;
    std::strong_ordering operator<=>(const DomainName& other) const;

private:
    void validate() const;

    std::vector<std::string> labels_;
};

// strip_leftmost_label / to_wire / parse_name are exposed as free functions
// mirroring how call sites read; they forward to the member operations.
inline DomainName parse_name(std::string_view text) { return DomainName::parse(text); }
inline std::vector<std::uint8_t> to_wire(const DomainName& n) { return n.to_wire(); }
inline std::string format_name(const DomainName& n) { return n.to_text(); }
inline DomainName strip_leftmost_label(const DomainName& n) { return n.parent(); }

} // namespace forge
