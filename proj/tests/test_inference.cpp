#include <doctest.h>

#include <random>

#include "sst/inference.hpp"
#include "support/test_graphs.hpp"

using namespace sst;
using namespace sst::inference;

namespace {

// humans contain mark; humans are annoying; mark is tired
Graph syllogism() {
    Graph g;
    NodeId humans = g.add_node("humans", MetaType::Thing);
    NodeId mark = g.add_node("mark", MetaType::Thing);
    NodeId annoying = g.add_node("annoying", MetaType::Concept);
    NodeId tired = g.add_node("tired", MetaType::Concept);
    g.add_link(mark, "is a part of", humans);
    g.add_link(humans, "has property", annoying);
    g.add_link(mark, "has property", tired);
    return g;
}

bool has_pair(const std::vector<Hypothesis>& hs, const Graph& g, HypothesisKind kind,
              const char* a, const char* b) {
    for (const auto& h : hs) {
        if (h.kind != kind || h.subjects.size() != 2) continue;
        std::set<std::string> names{g.node(h.subjects[0]).proper_name,
                                    g.node(h.subjects[1]).proper_name};
        if (names == std::set<std::string>{a, b}) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("shared containment suggests proximity") {
    Graph g;
    NodeId box = g.add_node("box", MetaType::Thing);
    NodeId pen = g.add_node("pen", MetaType::Thing);
    NodeId ink = g.add_node("ink", MetaType::Thing);
    g.add_link(box, "contains", pen);
    g.add_link(box, "contains", ink);

    auto hs = infer_proximity(g);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].kind == HypothesisKind::MightBeNear);
    CHECK(hs[0].tier == Tier::Possible);
    CHECK(hs[0].basis.size() == 2);
    CHECK(hs[0].scope == box);
    CHECK(has_pair(hs, g, HypothesisKind::MightBeNear, "pen", "ink"));

    SUBCASE("a single member is not enough") {
        Graph g2;
        NodeId a = g2.add_node("a", MetaType::Thing);
        NodeId b = g2.add_node("b", MetaType::Thing);
        g2.add_link(a, "contains", b);
        CHECK(infer_proximity(g2).empty());
    }

    SUBCASE("an explicit N link suppresses the hypothesis") {
        g.add_link(pen, "is similar to", ink);
        CHECK(infer_proximity(g).empty());
    }
}

TEST_CASE("events bind their participants") {
    Graph g;
    NodeId murder = g.add_node("the murder", MetaType::Event);
    NodeId plumb = g.add_node("professor plumb", MetaType::Thing);
    NodeId scarlet = g.add_node("ms scarlet", MetaType::Thing);
    g.add_link(murder, "involves", plumb);
    g.add_link(murder, "involves", scarlet);

    auto hs = infer_event_copresence(g);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].kind == HypothesisKind::EventCopresence);
    CHECK(hs[0].scope == murder);
    CHECK(has_pair(hs, g, HypothesisKind::EventCopresence, "professor plumb", "ms scarlet"));

    SUBCASE("one thing per event yields nothing") {
        Graph g2;
        NodeId e = g2.add_node("e", MetaType::Event);
        g2.add_link(e, "involves", g2.add_node("t", MetaType::Thing));
        CHECK(infer_event_copresence(g2).empty());
    }

    SUBCASE("things in different events are not co-present") {
        Graph g2;
        NodeId e1 = g2.add_node("e1", MetaType::Event);
        NodeId e2 = g2.add_node("e2", MetaType::Event);
        g2.add_link(e1, "involves", g2.add_node("t1", MetaType::Thing));
        g2.add_link(e2, "involves", g2.add_node("t2", MetaType::Thing));
        CHECK(infer_event_copresence(g2).empty());
    }

    SUBCASE("a thing-container does not create event copresence") {
        Graph g2;
        NodeId bag = g2.add_node("bag", MetaType::Thing);
        g2.add_link(bag, "contains", g2.add_node("t1", MetaType::Thing));
        g2.add_link(bag, "contains", g2.add_node("t2", MetaType::Thing));
        CHECK(infer_event_copresence(g2).empty());
        CHECK(infer_proximity(g2).size() == 1);
    }
}

TEST_CASE("properties flow downward and across nearness") {
    Graph g = syllogism();
    auto hs = infer_property_inheritance(g);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].kind == HypothesisKind::MightHaveProperty);
    CHECK(g.node(hs[0].subjects[0]).proper_name == "mark");
    CHECK(g.node(hs[0].subjects[1]).proper_name == "annoying");

    // never container-ward: every basis C link points container -> member
    for (const auto& h : hs) {
        for (const Link& l : h.basis) {
            if (l.typ.family() == LinkFamily::C) {
                CHECK(l.typ.is_forward());
                CHECK(l.src == *h.scope);
            }
        }
    }

    SUBCASE("one hop across an N link") {
        Graph g2;
        NodeId x = g2.add_node("x", MetaType::Thing);
        NodeId y = g2.add_node("y", MetaType::Thing);
        NodeId z = g2.add_node("z", MetaType::Thing);
        NodeId p = g2.add_node("p", MetaType::Concept);
        g2.add_link(x, "has property", p);
        g2.add_link(x, "is similar to", y);
        g2.add_link(y, "is similar to", z);
        auto h2 = infer_property_inheritance(g2);
        REQUIRE(h2.size() == 1);  // y inherits; z is two hops away
        CHECK(g2.node(h2[0].subjects[0]).proper_name == "y");
        CHECK(g2.node(h2[0].subjects[1]).proper_name == "p");
    }

    SUBCASE("no containers with properties, no hypotheses") {
        Graph g2 = testsupport::butterfly();
        CHECK(infer_property_inheritance(g2).empty());
    }
}

TEST_CASE("upward generalization is flagged invalid") {
    Graph g = syllogism();
    NodeId humans = *g.find_node("humans", MetaType::Thing);
    NodeId tired = *g.find_node("tired", MetaType::Concept);
    NodeId annoying = *g.find_node("annoying", MetaType::Concept);

    auto flagged = flag_invalid_generalization(g, humans, tired);
    REQUIRE(flagged.has_value());
    CHECK(flagged->kind == HypothesisKind::InvalidGeneralization);
    CHECK(flagged->tier == Tier::Invalid);
    CHECK(flagged->note.find("unanimous") != std::string::npos);  // mark is the only member

    SUBCASE("an explicit link is its own basis") {
        CHECK_FALSE(flag_invalid_generalization(g, humans, annoying).has_value());
    }

    SUBCASE("no member support, nothing to flag") {
        NodeId fresh = g.add_node("fresh", MetaType::Concept);
        CHECK_FALSE(flag_invalid_generalization(g, humans, fresh).has_value());
    }

    SUBCASE("a dissenting member drops the unanimity note") {
        NodeId alice = g.add_node("alice", MetaType::Thing);
        g.add_link(alice, "is a part of", humans);
        auto partial = flag_invalid_generalization(g, humans, tired);
        REQUIRE(partial.has_value());
        CHECK(partial->note.find("unanimous") == std::string::npos);
    }
}

TEST_CASE("functional equivalence wraps supernodes") {
    Graph g;
    NodeId a = g.add_node("a", MetaType::Event);
    NodeId b1 = g.add_node("b1", MetaType::Event);
    NodeId b2 = g.add_node("b2", MetaType::Event);
    NodeId c = g.add_node("c", MetaType::Event);
    g.add_link(a, "causes", b1);
    g.add_link(a, "causes", b2);
    g.add_link(b1, "causes", c);
    g.add_link(b2, "causes", c);

    auto hs = infer_equivalence(g);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].kind == HypothesisKind::FunctionalEquivalence);
    CHECK(hs[0].subjects.size() == 2);
    CHECK(hs[0].note.find("partial") == std::string::npos);

    SUBCASE("partial groups carry the warning") {
        g.add_link(b1, "has property", g.add_node("blue", MetaType::Concept));
        auto partial = infer_equivalence(g);
        REQUIRE(partial.size() == 1);
        CHECK(partial[0].note.find("partial but not complete equivalence") != std::string::npos);
    }

    SUBCASE("no duplicate structure, no hypotheses") {
        CHECK(infer_equivalence(testsupport::butterfly()).empty());
    }
}

TEST_CASE("soundness: every hypothesis dies with its basis") {
    std::mt19937 rng(1618);
    int inspected = 0;
    for (int round = 0; round < 40; ++round) {
        Graph g = testsupport::random_legal_graph(rng, 6, 10);
        auto all = infer_all(g);
        for (const auto& h : all) {
            // basis links all exist
            for (const Link& basis : h.basis) {
                bool found = false;
                for (const Link& l : g.links()) {
                    if (canonical(l) == basis || l == basis) found = true;
                }
                CHECK(found);
            }
        }
        if (all.empty() || g.link_count() == 0) continue;
        ++inspected;

        // drop the first basis link of the first hypothesis and re-run
        const Hypothesis target = all.front();
        if (target.basis.empty()) continue;
        Graph pruned(g.aliases());
        for (const Node& n : g.nodes()) pruned.add_node(n.proper_name, n.meta, n.attributes);
        for (const Link& l : g.links()) {
            if (canonical(l) == target.basis.front() || l == target.basis.front()) continue;
            pruned.add_link(l.src, l.typ, l.dst, l.weight, l.label);
        }
        for (const auto& h : infer_all(pruned)) {
            bool same = h.kind == target.kind && h.subjects == target.subjects &&
                        h.scope == target.scope && h.basis == target.basis;
            CHECK_FALSE(same);
        }
    }
    CHECK(inspected > 5);  // the generator produced meaningful cases
}

TEST_CASE("inference is deterministic and non-mutating") {
    std::mt19937 rng(2718);
    Graph g = testsupport::random_legal_graph(rng, 8, 20);
    std::size_t nodes = g.node_count();
    std::size_t links = g.link_count();
    auto first = infer_all(g);
    auto second = infer_all(g);
    CHECK(g.node_count() == nodes);
    CHECK(g.link_count() == links);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].kind == second[i].kind);
        CHECK(first[i].subjects == second[i].subjects);
        CHECK(first[i].note == second[i].note);
    }
}
