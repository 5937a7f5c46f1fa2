#include <doctest.h>

#include "sst/transitions.hpp"

using namespace sst;

namespace {

const MetaType e = MetaType::Event;
const MetaType t = MetaType::Thing;
const MetaType c = MetaType::Concept;

SignedLinkType tok(const char* text) { return *SignedLinkType::parse(text); }

}  // namespace

TEST_CASE("signed link types") {
    CHECK(SignedLinkType::near().is_symmetric());
    CHECK(SignedLinkType::forward(LinkFamily::N).is_symmetric());  // N has no sign
    CHECK(tok("+L").negated() == tok("-L"));
    CHECK(tok("-C").negated().negated() == tok("-C"));
    CHECK(tok("N").negated() == tok("N"));
    CHECK(tok("+E").token() == "+E");
    CHECK_FALSE(SignedLinkType::parse("+N").has_value());
    CHECK_FALSE(SignedLinkType::parse("L").has_value());
    CHECK(all_signed_types().size() == 7);
}

TEST_CASE("allowed transitions match the transition table") {
    // a thing can express a concept as an attribute
    CHECK(allowed_transition(t, tok("+E"), c));
    // concepts take no part in containment
    CHECK_FALSE(allowed_transition(c, tok("+C"), t));
    // a thing can be part of an event, but not the other way around
    CHECK(allowed_transition(t, tok("-C"), e));
    CHECK_FALSE(allowed_transition(t, tok("+C"), e));
    // near links need matching meta-types
    CHECK_FALSE(allowed_transition(e, tok("N"), t));
    CHECK(allowed_transition(t, tok("N"), t));
    // a concept can refer to an event either way
    CHECK(allowed_transition(c, tok("+E"), e));
    CHECK(allowed_transition(c, tok("-E"), e));
}

TEST_CASE("reversal symmetry over every combination") {
    for (MetaType a : all_meta_types) {
        for (MetaType b : all_meta_types) {
            for (LinkFamily f : {LinkFamily::L, LinkFamily::C, LinkFamily::E}) {
                CHECK(allowed_transition(a, SignedLinkType::forward(f), b) ==
                      allowed_transition(b, SignedLinkType::reverse(f), a));
            }
            CHECK(allowed_transition(a, SignedLinkType::near(), b) ==
                  allowed_transition(b, SignedLinkType::near(), a));
        }
    }
}

TEST_CASE("rule encoding") {
    // things may be contained but not expressed: nothing expresses onto t
    for (MetaType m : all_meta_types) {
        CHECK_FALSE(allowed_transition(m, tok("+E"), t));
    }
    // concepts may be expressed but not contained
    for (MetaType m : all_meta_types) {
        CHECK_FALSE(allowed_transition(c, tok("+C"), m));
        CHECK_FALSE(allowed_transition(c, tok("-C"), m));
        CHECK_FALSE(allowed_transition(m, tok("+C"), c));
        CHECK_FALSE(allowed_transition(m, tok("-C"), c));
    }
    // expressing t's properties is fine in the other direction
    CHECK(allowed_transition(t, tok("+E"), c));
}

TEST_CASE("exactly nineteen of the sixty-three combinations are legal") {
    int legal = 0;
    int total = 0;
    for (MetaType a : all_meta_types) {
        for (const auto& typ : all_signed_types()) {
            for (MetaType b : all_meta_types) {
                ++total;
                if (allowed_transition(a, typ, b)) ++legal;
            }
        }
    }
    CHECK(total == 63);
    CHECK(legal == 19);
}

TEST_CASE("violation text names the broken rule") {
    CHECK(violation_text(c, tok("+L"), c) == "only events can lead to or follow other events");
    CHECK(violation_text(e, tok("+C"), c) ==
          "concepts take no part in containment; attach them with expression links");
    CHECK(violation_text(t, tok("+C"), e) ==
          "a thing can take part in an event, but an event cannot sit inside a thing");
    CHECK(violation_text(e, tok("+E"), t) == "a thing cannot be expressed as an attribute");
    CHECK(violation_text(e, tok("N"), c) == "near links relate nodes of the same meta-type");
    // allowed combinations carry no violation
    CHECK(violation_text(t, tok("+E"), c).empty());
}

TEST_CASE("join types computed from the table") {
    CHECK(join_types(LinkFamily::L, LinkFamily::L) == std::set<MetaType>{e});
    CHECK(join_types(LinkFamily::C, LinkFamily::C) == std::set<MetaType>{e, t});
    CHECK(join_types(LinkFamily::E, LinkFamily::E) == std::set<MetaType>{e, c});
    CHECK(join_types(LinkFamily::N, LinkFamily::E) == std::set<MetaType>{e, t, c});

    // property: equals an independent enumeration over full triples
    for (LinkFamily first : all_families) {
        for (LinkFamily second : all_families) {
            std::set<MetaType> expected;
            for (MetaType m : all_meta_types) {
                bool ends_here = false, starts_here = false;
                for (MetaType s : all_meta_types) {
                    ends_here |= allowed_transition(s, SignedLinkType::forward(first), m);
                }
                for (MetaType d : all_meta_types) {
                    starts_here |= allowed_transition(m, SignedLinkType::forward(second), d);
                }
                if (ends_here && starts_here) expected.insert(m);
            }
            CHECK(join_types(first, second) == expected);
        }
    }
}
