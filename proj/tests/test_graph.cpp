#include <doctest.h>

#include <stdexcept>

#include "sst/graph.hpp"
#include "support/test_graphs.hpp"

using namespace sst;

TEST_CASE("node identity is the (name, meta) pair") {
    Graph g;
    NodeId first = g.add_node("egg", MetaType::Event);
    NodeId second = g.add_node("egg", MetaType::Event, {{"stage", "early"}});
    CHECK(first == second);
    CHECK(g.node_count() == 1);
    CHECK(g.node(first).attributes.at("stage") == "early");

    // same name under a different meta-type is a different node
    NodeId lib_thing = g.add_node("library", MetaType::Thing);
    NodeId lib_concept = g.add_node("library", MetaType::Concept);
    CHECK(lib_thing != lib_concept);
    CHECK(g.find_nodes_named("library").size() == 2);

    CHECK_THROWS_AS(g.add_node("", MetaType::Event), std::invalid_argument);
}

TEST_CASE("attribute merge keeps later values") {
    Graph g;
    g.add_node("x", MetaType::Thing, {{"a", "1"}, {"b", "2"}});
    g.add_node("x", MetaType::Thing, {{"b", "3"}, {"c", "4"}});
    const Node& n = g.node(*g.find_node("x", MetaType::Thing));
    CHECK(n.attributes == AttrMap{{"a", "1"}, {"b", "3"}, {"c", "4"}});
}

TEST_CASE("add_link resolves aliases and enforces the transition table") {
    Graph g;
    g.aliases().add("gestates into", SignedLinkType::forward(LinkFamily::L));
    NodeId egg = g.add_node("egg", MetaType::Event);
    NodeId cat = g.add_node("caterpillar", MetaType::Event);

    LinkResult accepted = g.add_link(egg, "gestates into", cat);
    REQUIRE(ok(accepted));
    const Link& l = std::get<Link>(accepted);
    CHECK(l.typ == SignedLinkType::forward(LinkFamily::L));
    CHECK(l.label == "gestates into");
    CHECK(l.weight == 1.0);

    SUBCASE("love cannot be like a butterfly") {
        NodeId love = g.add_node("love", MetaType::Concept);
        NodeId butterfly = g.add_node("butterfly", MetaType::Thing);
        LinkResult rejected = g.add_link(love, "is like", butterfly);
        REQUIRE_FALSE(ok(rejected));
        const auto& err = std::get<LinkError>(rejected);
        CHECK(err.kind == LinkErrorKind::ForbiddenTransition);
        CHECK(err.src_meta == MetaType::Concept);
        CHECK(err.dst_meta == MetaType::Thing);
        CHECK(err.message.find("near links relate nodes of the same meta-type") !=
              std::string::npos);
    }

    SUBCASE("negative weight is rejected") {
        LinkResult rejected = g.add_link(egg, "gestates into", cat, -1.0);
        REQUIRE_FALSE(ok(rejected));
        CHECK(std::get<LinkError>(rejected).kind == LinkErrorKind::NegativeWeight);
    }

    SUBCASE("unknown alias") {
        LinkResult rejected = g.add_link(egg, "frobnicates", cat);
        REQUIRE_FALSE(ok(rejected));
        CHECK(std::get<LinkError>(rejected).kind == LinkErrorKind::UnknownAlias);
    }

    SUBCASE("type tokens always resolve") {
        NodeId tree = g.add_node("tree", MetaType::Event);
        CHECK(ok(g.add_link(cat, "+L", tree)));
    }

    SUBCASE("exact quadruple duplicates bounce, extra aliases do not") {
        LinkResult dup = g.add_link(egg, "gestates into", cat);
        REQUIRE_FALSE(ok(dup));
        CHECK(std::get<LinkError>(dup).kind == LinkErrorKind::DuplicateLink);

        g.aliases().add("precedes", SignedLinkType::forward(LinkFamily::L));
        CHECK(ok(g.add_link(egg, "precedes", cat)));
        CHECK(g.link_count() == 2);
    }
}

TEST_CASE("alias lookup is case and whitespace insensitive") {
    const AliasTable& table = AliasTable::defaults();
    CHECK(table.resolve("CAUSES") == SignedLinkType::forward(LinkFamily::L));
    CHECK(table.resolve("  is  a   part of ") == SignedLinkType::reverse(LinkFamily::C));
    CHECK(table.resolve("Has Property") == SignedLinkType::forward(LinkFamily::E));
    CHECK_FALSE(table.resolve("no such alias").has_value());
    CHECK(table.resolve(" +C ") == SignedLinkType::forward(LinkFamily::C));
}

TEST_CASE("reverse swaps endpoints and negates orientation") {
    Graph g;
    NodeId a = g.add_node("a", MetaType::Event);
    NodeId b = g.add_node("b", MetaType::Thing);
    Link l = std::get<Link>(g.add_link(a, *SignedLinkType::parse("+C"), b, 2.5, "contains"));

    Link r = reverse(l);
    CHECK(r.src == b);
    CHECK(r.dst == a);
    CHECK(r.typ == *SignedLinkType::parse("-C"));
    CHECK(r.label == "contains");
    CHECK(r.weight == 2.5);
    CHECK(reverse(r) == l);

    // reversal of a legal link is legal by symmetry
    CHECK(allowed_transition(g.node(r.src).meta, r.typ, g.node(r.dst).meta));

    Link n = std::get<Link>(g.add_link(a, SignedLinkType::near(),
                                       g.add_node("a2", MetaType::Event)));
    Link rn = reverse(n);
    CHECK(rn.typ == SignedLinkType::near());
    CHECK(rn.src == n.dst);

    CHECK(canonical(r) == l);
    CHECK(canonical(n) == n);
}

TEST_CASE("graph closure holds after arbitrary construction") {
    std::mt19937 rng(20240811);
    for (int round = 0; round < 25; ++round) {
        Graph g = testsupport::random_legal_graph(rng);
        CHECK(g.revalidate());
    }
}

TEST_CASE("canonical order sorts by meta then name") {
    Graph g;
    g.add_node("zebra", MetaType::Event);
    g.add_node("apple", MetaType::Concept);
    g.add_node("apple", MetaType::Event);
    g.add_node("mango", MetaType::Thing);
    auto order = g.canonical_order();
    REQUIRE(order.size() == 4);
    CHECK(g.node(order[0]).proper_name == "apple");
    CHECK(g.node(order[0]).meta == MetaType::Event);
    CHECK(g.node(order[1]).proper_name == "zebra");
    CHECK(g.node(order[2]).proper_name == "mango");
    CHECK(g.node(order[3]).meta == MetaType::Concept);
}
