#include "sst/alias.hpp"

#include <cctype>

namespace sst {

std::string AliasTable::normalize(std::string_view label) {
    std::string out;
    out.reserve(label.size());
    bool pending_space = false;
    for (char ch : label) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    return out;
}

void AliasTable::add(std::string_view label, SignedLinkType typ) {
    std::string key = normalize(label);
    if (key.empty()) return;
    entries_.insert_or_assign(std::move(key), typ);
}

std::optional<SignedLinkType> AliasTable::resolve(std::string_view label) const {
    auto it = entries_.find(normalize(label));
    if (it != entries_.end()) return it->second;
    // Bare type tokens are always understood; note the uppercase forms are
    // not normalized away because token parsing sees the raw label.
    std::string trimmed;
    for (char ch : label) {
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    }
    return SignedLinkType::parse(trimmed);
}

bool AliasTable::contains(std::string_view label) const {
    return entries_.count(normalize(label)) > 0;
}

AliasTable AliasTable::overlaid_with(const AliasTable& other) const {
    AliasTable out = *this;
    for (const auto& [label, typ] : other.entries_) out.entries_.insert_or_assign(label, typ);
    return out;
}

const AliasTable& AliasTable::defaults() {
    static const AliasTable table = [] {
        AliasTable t;
        const auto near = SignedLinkType::near();
        const auto fwd = [](LinkFamily f) { return SignedLinkType::forward(f); };
        const auto rev = [](LinkFamily f) { return SignedLinkType::reverse(f); };

        // proximity
        t.add("is close to", near);
        t.add("is similar to", near);
        t.add("sounds like", near);
        t.add("is correlated with", near);
        t.add("is like", near);

        // ordering / causation
        t.add("enables", fwd(LinkFamily::L));
        t.add("causes", fwd(LinkFamily::L));
        t.add("precedes", fwd(LinkFamily::L));
        t.add("leads to", fwd(LinkFamily::L));
        t.add("to the left of", fwd(LinkFamily::L));
        t.add("depends on", rev(LinkFamily::L));
        t.add("is caused by", rev(LinkFamily::L));
        t.add("follows", rev(LinkFamily::L));
        t.add("to the right of", rev(LinkFamily::L));

        // aggregation / membership
        t.add("contains", fwd(LinkFamily::C));
        t.add("surrounds", fwd(LinkFamily::C));
        t.add("generalizes", fwd(LinkFamily::C));
        t.add("involves", fwd(LinkFamily::C));
        t.add("is a part of", rev(LinkFamily::C));
        t.add("occupies", rev(LinkFamily::C));
        t.add("inside", rev(LinkFamily::C));
        t.add("is an aspect of", rev(LinkFamily::C));
        t.add("exemplifies", rev(LinkFamily::C));

        // attribute expression
        t.add("has name or value", fwd(LinkFamily::E));
        t.add("has property", fwd(LinkFamily::E));
        t.add("expresses attribute", fwd(LinkFamily::E));
        t.add("expresses", fwd(LinkFamily::E));
        t.add("promises", fwd(LinkFamily::E));
        t.add("has approximation", fwd(LinkFamily::E));
        t.add("is the value of property", rev(LinkFamily::E));
        t.add("is a property of", rev(LinkFamily::E));
        t.add("is an attribute expressed by", rev(LinkFamily::E));
        t.add("approximates", rev(LinkFamily::E));
        return t;
    }();
    return table;
}

}  // namespace sst
