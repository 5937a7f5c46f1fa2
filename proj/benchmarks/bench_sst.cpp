#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "sst/analysis.hpp"
#include "sst/inference.hpp"
#include "sst/matrix.hpp"
#include "sst/notation.hpp"

using namespace sst;

namespace {

std::string synthetic_document(int chains, int chain_length) {
    std::string out = "alias \"feeds\" = +L\n";
    for (int c = 0; c < chains; ++c) {
        for (int i = 0; i < chain_length; ++i) {
            out += "node \"ev_" + std::to_string(c) + "_" + std::to_string(i) + "\" : event\n";
        }
        for (int i = 0; i + 1 < chain_length; ++i) {
            out += "\"ev_" + std::to_string(c) + "_" + std::to_string(i) + "\" (feeds) \"ev_" +
                   std::to_string(c) + "_" + std::to_string(i + 1) + "\"\n";
        }
    }
    return out;
}

Graph ring_graph(int n, int extra_edges) {
    std::mt19937 rng(7);
    Graph g;
    std::vector<NodeId> ids;
    for (int i = 0; i < n; ++i) {
        ids.push_back(g.add_node("n" + std::to_string(i), MetaType::Event));
    }
    for (int i = 0; i < n; ++i) g.add_link(ids[i], "causes", ids[(i + 1) % n]);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < extra_edges; ++k) {
        g.add_link(ids[pick(rng)], SignedLinkType::forward(LinkFamily::L), ids[pick(rng)], 1.0,
                   "jump" + std::to_string(k));
    }
    return g;
}

void BM_parse_and_build(benchmark::State& state) {
    std::string source = synthetic_document(static_cast<int>(state.range(0)), 10);
    for (auto _ : state) {
        auto parsed = notation::parse(source);
        auto built = notation::build(parsed.document);
        benchmark::DoNotOptimize(built.graph.link_count());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 10);
}
BENCHMARK(BM_parse_and_build)->Arg(10)->Arg(100);

void BM_adjacency(benchmark::State& state) {
    Graph g = ring_graph(static_cast<int>(state.range(0)), state.range(0) / 2);
    for (auto _ : state) {
        auto view = matrix::adjacency(g);
        benchmark::DoNotOptimize(view.entries.data());
    }
}
BENCHMARK(BM_adjacency)->Arg(64)->Arg(512);

void BM_power_iteration(benchmark::State& state) {
    Graph g = ring_graph(static_cast<int>(state.range(0)), state.range(0));
    auto view = matrix::adjacency(g);
    for (auto _ : state) {
        auto result = matrix::principal_eigenvector(view, 0.85);
        benchmark::DoNotOptimize(result.eigenvalue);
    }
}
BENCHMARK(BM_power_iteration)->Arg(32)->Arg(128);

void BM_supernodes(benchmark::State& state) {
    Graph g = ring_graph(static_cast<int>(state.range(0)), state.range(0) * 2);
    for (auto _ : state) {
        auto groups = analysis::supernodes(g, LinkFamily::L);
        benchmark::DoNotOptimize(groups.size());
    }
}
BENCHMARK(BM_supernodes)->Arg(64)->Arg(256);

void BM_inference(benchmark::State& state) {
    std::mt19937 rng(11);
    Graph g;
    std::vector<NodeId> containers, members, properties;
    for (int i = 0; i < state.range(0); ++i) {
        containers.push_back(g.add_node("box" + std::to_string(i), MetaType::Thing));
        members.push_back(g.add_node("item" + std::to_string(i), MetaType::Thing));
        properties.push_back(g.add_node("p" + std::to_string(i), MetaType::Concept));
    }
    std::uniform_int_distribution<std::size_t> pick(0, containers.size() - 1);
    for (std::size_t i = 0; i < containers.size(); ++i) {
        g.add_link(containers[i], "contains", members[i]);
        g.add_link(containers[i], "contains", members[pick(rng)]);
        g.add_link(containers[i], "has property", properties[pick(rng)]);
    }
    for (auto _ : state) {
        auto hypotheses = inference::infer_all(g);
        benchmark::DoNotOptimize(hypotheses.size());
    }
}
BENCHMARK(BM_inference)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
