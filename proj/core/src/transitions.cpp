#include "sst/transitions.hpp"

namespace sst {
namespace {

// Canonical (forward-oriented) transition table. Reverse readings follow by
// symmetry, so only +X arrows and the symmetric N diagonal are listed.
struct CanonicalEntry {
    MetaType src;
    LinkFamily family;
    MetaType dst;
};

constexpr MetaType e = MetaType::Event;
constexpr MetaType t = MetaType::Thing;
constexpr MetaType c = MetaType::Concept;

constexpr CanonicalEntry canonical_table[] = {
    // leads-to: strictly event to event
    {e, LinkFamily::L, e},
    // containment: events contain events and things; things contain things;
    // concepts take no part in containment
    {e, LinkFamily::C, e},
    {e, LinkFamily::C, t},
    {t, LinkFamily::C, t},
    // expression: concepts are the expressible attributes; a concept may in
    // turn refer to an event or to another concept
    {e, LinkFamily::E, c},
    {t, LinkFamily::E, c},
    {c, LinkFamily::E, e},
    {c, LinkFamily::E, c},
    // nearness: only between like meta-types
    {e, LinkFamily::N, e},
    {t, LinkFamily::N, t},
    {c, LinkFamily::N, c},
};

bool canonical_allowed(MetaType src, LinkFamily family, MetaType dst) {
    for (const auto& entry : canonical_table) {
        if (entry.src == src && entry.family == family && entry.dst == dst) return true;
    }
    return false;
}

}  // namespace

bool allowed_transition(MetaType src, SignedLinkType typ, MetaType dst) {
    switch (typ.orientation()) {
        case Orientation::Symmetric:
            return canonical_allowed(src, LinkFamily::N, dst) ||
                   canonical_allowed(dst, LinkFamily::N, src);
        case Orientation::Forward:
            return canonical_allowed(src, typ.family(), dst);
        case Orientation::Reverse:
            return canonical_allowed(dst, typ.family(), src);
    }
    return false;
}

std::vector<SignedLinkType> legal_types_between(MetaType src, MetaType dst) {
    std::vector<SignedLinkType> out;
    for (const auto& typ : all_signed_types()) {
        if (allowed_transition(src, typ, dst)) out.push_back(typ);
    }
    return out;
}

std::string violation_text(MetaType src, SignedLinkType typ, MetaType dst) {
    if (allowed_transition(src, typ, dst)) return {};

    // Text is phrased for the canonical reading of the arrow.
    MetaType a = typ.is_reverse() ? dst : src;
    MetaType b = typ.is_reverse() ? src : dst;

    switch (typ.family()) {
        case LinkFamily::L:
            return "only events can lead to or follow other events";
        case LinkFamily::N:
            return "near links relate nodes of the same meta-type";
        case LinkFamily::C:
            if (a == c || b == c)
                return "concepts take no part in containment; attach them with expression links";
            return "a thing can take part in an event, but an event cannot sit inside a thing";
        case LinkFamily::E:
            if (b == t) return "a thing cannot be expressed as an attribute";
            return "an event can only be referred to as an attribute by a concept";
    }
    return "forbidden transition";
}

std::set<MetaType> family_targets(LinkFamily f) {
    std::set<MetaType> out;
    for (const auto& entry : canonical_table) {
        if (entry.family == f) out.insert(entry.dst);
    }
    return out;
}

std::set<MetaType> family_sources(LinkFamily f) {
    std::set<MetaType> out;
    for (const auto& entry : canonical_table) {
        if (entry.family == f) out.insert(entry.src);
    }
    return out;
}

std::set<MetaType> join_types(LinkFamily first, LinkFamily second) {
    std::set<MetaType> out;
    for (MetaType m : family_targets(first)) {
        if (family_sources(second).count(m)) out.insert(m);
    }
    return out;
}

}  // namespace sst
