#include "sst/types.hpp"

namespace sst {

std::string_view to_string(MetaType m) {
    switch (m) {
        case MetaType::Event: return "event";
        case MetaType::Thing: return "thing";
        case MetaType::Concept: return "concept";
    }
    return "?";
}

std::string_view to_string(LinkFamily f) {
    switch (f) {
        case LinkFamily::N: return "N";
        case LinkFamily::L: return "L";
        case LinkFamily::C: return "C";
        case LinkFamily::E: return "E";
    }
    return "?";
}

std::optional<MetaType> parse_meta(std::string_view text) {
    if (text == "event") return MetaType::Event;
    if (text == "thing") return MetaType::Thing;
    if (text == "concept") return MetaType::Concept;
    return std::nullopt;
}

std::optional<LinkFamily> parse_family(std::string_view text) {
    if (text == "N") return LinkFamily::N;
    if (text == "L") return LinkFamily::L;
    if (text == "C") return LinkFamily::C;
    if (text == "E") return LinkFamily::E;
    return std::nullopt;
}

SignedLinkType SignedLinkType::forward(LinkFamily f) {
    return f == LinkFamily::N ? near() : SignedLinkType(f, Orientation::Forward);
}

SignedLinkType SignedLinkType::reverse(LinkFamily f) {
    return f == LinkFamily::N ? near() : SignedLinkType(f, Orientation::Reverse);
}

SignedLinkType SignedLinkType::near() {
    return SignedLinkType(LinkFamily::N, Orientation::Symmetric);
}

std::optional<SignedLinkType> SignedLinkType::parse(std::string_view token) {
    if (token == "N") return near();
    if (token.size() != 2) return std::nullopt;
    auto fam = parse_family(token.substr(1));
    if (!fam || *fam == LinkFamily::N) return std::nullopt;
    if (token[0] == '+') return forward(*fam);
    if (token[0] == '-') return reverse(*fam);
    return std::nullopt;
}

SignedLinkType SignedLinkType::negated() const {
    if (is_symmetric()) return *this;
    return SignedLinkType(family_, is_forward() ? Orientation::Reverse : Orientation::Forward);
}

std::string SignedLinkType::token() const {
    if (is_symmetric()) return "N";
    std::string out(1, is_forward() ? '+' : '-');
    out += to_string(family_);
    return out;
}

const std::array<SignedLinkType, 7>& all_signed_types() {
    static const std::array<SignedLinkType, 7> types{
        SignedLinkType::near(),
        SignedLinkType::forward(LinkFamily::L), SignedLinkType::reverse(LinkFamily::L),
        SignedLinkType::forward(LinkFamily::C), SignedLinkType::reverse(LinkFamily::C),
        SignedLinkType::forward(LinkFamily::E), SignedLinkType::reverse(LinkFamily::E),
    };
    return types;
}

}  // namespace sst
