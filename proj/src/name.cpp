#include "forge/name.hpp"

#include "forge/errors.hpp"

#include <algorithm>
#include <cctype>

namespace forge {

namespace {

std::string lowercased(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

DomainName DomainName::parse(std::string_view text) {
    if (text.empty()) {
        throw NameError("empty name; absolute names are required (use \".\" for root)");
    }
    if (text == ".") {
        return DomainName{};
    }
    if (text.back() == '.') {
        text.remove_suffix(1);
    }
    DomainName name;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        std::string_view label = (dot == std::string_view::npos)
                                     ? text.substr(start)
                                     : text.substr(start, dot - start);
        name.labels_.push_back(lowercased(label));
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    name.validate();
    return name;
}

DomainName DomainName::from_labels(std::vector<std::string> labels) {
    DomainName name;
    name.labels_.reserve(labels.size());
    for (auto& l : labels) {
        name.labels_.push_back(lowercased(l));
    }
    name.validate();
    return name;
}

void DomainName::validate() const {
    for (const auto& label : labels_) {
        if (label.empty()) {
            throw NameError("empty label inside name");
        }
        if (label.size() > 63) {
            throw NameError("label exceeds 63 bytes: " + label.substr(0, 16) + "...");
        }
    }
    if (wire_len() > 255) {
        throw NameError("name wire length exceeds 255 bytes");
    }
}

std::size_t DomainName::wire_len() const {
    std::size_t len = 1; // root byte
    for (const auto& label : labels_) {
        len += 1 + label.size();
    }
    return len;
}

std::vector<std::uint8_t> DomainName::to_wire() const {
    std::vector<std::uint8_t> out;
    out.reserve(wire_len());
    for (const auto& label : labels_) {
        out.push_back(static_cast<std::uint8_t>(label.size()));
        out.insert(out.end(), label.begin(), label.end());
    }
    out.push_back(0);
    return out;
}

std::string DomainName::to_text() const {
    if (labels_.empty()) {
        return ".";
    }
    std::string out;
    for (const auto& label : labels_) {
        out += label;
        out += '.';
    }
    return out;
}

DomainName DomainName::parent() const {
    if (labels_.empty()) {
        throw NameError("cannot strip a label from the root name");
    }
    DomainName up;
    up.labels_.assign(labels_.begin() + 1, labels_.end());
    return up;
}

DomainName DomainName::child(std::string_view label) const {
    DomainName down;
    down.labels_.reserve(labels_.size() + 1);
    down.labels_.push_back(lowercased(label));
    down.labels_.insert(down.labels_.end(), labels_.begin(), labels_.end());
    down.validate();
    return down;
}

bool DomainName::is_below_or_equal(const DomainName& ancestor) const {
    if (ancestor.labels_.size() > labels_.size()) {
        return false;
    }
    return std::equal(ancestor.labels_.rbegin(), ancestor.labels_.rend(), labels_.rbegin());
}

std::size_t DomainName::depth_below(const DomainName& ancestor) const {
    if (!is_below_or_equal(ancestor)) {
        throw NameError(to_text() + " is not below " + ancestor.to_text());
    }
    return labels_.size() - ancestor.labels_.size();
}

std::strong_ordering DomainName::operator<=>(const DomainName& other) const {
    return labels_ <=> other.labels_;
}

} // namespace forge
