#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "termnet/hvg.hpp"
#include "testutil.hpp"

using namespace termnet;
using testutil::brute_force_hvg;
using testutil::make_series;
using testutil::make_series_docs;
using testutil::sorted_edges;

namespace {

using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Edges edges_of(const std::vector<double>& weights) {
    return sorted_edges(build_hvg(make_series(weights)));
}

}  // namespace

TEST_SUITE_BEGIN("hvg");

TEST_CASE("visibility criterion on small series") {
    SUBCASE("monotone series forms a path") {
        CHECK(edges_of({1, 2, 3}) == Edges{{0, 1}, {1, 2}});
        CHECK(edges_of({3, 2, 1}) == Edges{{0, 1}, {1, 2}});
    }
    SUBCASE("a valley opens long-range visibility") {
        CHECK(edges_of({3, 1, 2}) == Edges{{0, 1}, {0, 2}, {1, 2}});
        CHECK(edges_of({3, 1, 2, 4}) == Edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    }
    SUBCASE("equal heights block each other") {
        CHECK(edges_of({2, 2, 2}) == Edges{{0, 1}, {1, 2}});
        CHECK(edges_of({2, 1, 2, 1, 2}) ==
              Edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    }
    SUBCASE("degenerate series") {
        CHECK(build_hvg(make_series({})).edges.empty());
        CHECK(build_hvg(make_series({5})).edges.empty());
        CHECK(edges_of({5, 7}) == Edges{{0, 1}});
    }
}

TEST_CASE("edges never cross document boundaries") {
    auto series = make_series_docs({{3, 1, 2}, {5, 4}});
    auto edges = sorted_edges(build_hvg(series));
    CHECK(edges == Edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
}

TEST_CASE("sweep equals the quadratic definition on random series") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<std::size_t> len(2, 300);
    for (int i = 0; i < 40; ++i) {
        auto series = make_series(testutil::random_weights(rng, len(rng), false));
        CHECK(sorted_edges(build_hvg(series)) == brute_force_hvg(series));
    }
    // tie-heavy weights exercise the equal-height rule
    for (int i = 0; i < 15; ++i) {
        auto series = make_series(testutil::random_weights(rng, len(rng), true));
        CHECK(sorted_edges(build_hvg(series)) == brute_force_hvg(series));
    }
    // multi-document series
    for (int i = 0; i < 10; ++i) {
        std::vector<std::vector<double>> docs;
        std::uniform_int_distribution<std::size_t> ndocs(1, 5);
        std::uniform_int_distribution<std::size_t> dlen(0, 60);
        std::size_t n = ndocs(rng);
        for (std::size_t d = 0; d < n; ++d)
            docs.push_back(testutil::random_weights(rng, dlen(rng), i % 2 == 0));
        auto series = make_series_docs(docs);
        CHECK(sorted_edges(build_hvg(series)) == brute_force_hvg(series));
    }
}

TEST_CASE("structural laws hold on random instances") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> len(2, 120);
    for (int i = 0; i < 200; ++i) {
        bool ties = i % 3 == 0;
        auto weights = testutil::random_weights(rng, len(rng), ties);
        auto series = make_series(weights);
        auto graph = build_hvg(series);

        // adjacent positions always see each other
        std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set(graph.edges.begin(),
                                                                   graph.edges.end());
        for (std::uint32_t p = 0; p + 1 < weights.size(); ++p)
            CHECK(edge_set.count({p, p + 1}) == 1);

        // planarity-style upper bound
        CHECK(graph.edges.size() <= 2 * weights.size() - 3);
    }

    // strictly monotone weights give exactly the path graph
    for (int i = 0; i < 20; ++i) {
        std::size_t n = len(rng);
        std::vector<double> inc(n), dec(n);
        for (std::size_t k = 0; k < n; ++k) {
            inc[k] = static_cast<double>(k);
            dec[k] = static_cast<double>(n - k);
        }
        CHECK(build_hvg(make_series(inc)).edges.size() == n - 1);
        CHECK(build_hvg(make_series(dec)).edges.size() == n - 1);
    }
}

TEST_CASE("construction is independent of the worker count") {
    std::mt19937 rng(31);
    std::vector<std::vector<double>> docs;
    for (int d = 0; d < 17; ++d) docs.push_back(testutil::random_weights(rng, 40, d % 2 == 0));
    auto series = make_series_docs(docs);
    auto ref = build_hvg(series, 1);
    for (int workers : {2, 5, 16}) {
        auto got = build_hvg(series, workers);
        CHECK(got.edges == ref.edges);
    }
}

TEST_CASE("compaction merges positions by term") {
    SUBCASE("worked example with a repeated label") {
        auto series = make_series({3, 1, 2, 4}, {"a", "b", "a", "c"});
        auto chvg = compact_hvg(build_hvg(series), series);

        CHECK(chvg.nodes == std::set<std::string>{"a", "b", "c"});
        REQUIRE(chvg.edges.size() == 2);
        CHECK(chvg.edges.at({"a", "b"}) == 2);
        CHECK(chvg.edges.at({"a", "c"}) == 2);
        CHECK(chvg.self_loops_dropped == 1);

        auto simple = chvg.node_weights(ChvgWeightMode::Simple);
        CHECK(simple.at("a") == 2);
        CHECK(simple.at("b") == 1);
        CHECK(simple.at("c") == 1);

        auto multi = chvg.node_weights(ChvgWeightMode::Multi);
        CHECK(multi.at("a") == 4);
        CHECK(multi.at("b") == 2);
        CHECK(multi.at("c") == 2);
    }

    SUBCASE("two distinct labels keep their single edge") {
        auto series = make_series({9, 4}, {"a", "b"});
        auto chvg = compact_hvg(build_hvg(series), series);
        CHECK(chvg.edges.at({"a", "b"}) == 1);
        CHECK(chvg.node_weights(ChvgWeightMode::Simple).at("a") == 1);
        CHECK(chvg.node_weights(ChvgWeightMode::Simple).at("b") == 1);
    }

    SUBCASE("all-same label collapses to an isolated node") {
        auto series = make_series({1, 2, 3}, {"a", "a", "a"});
        auto chvg = compact_hvg(build_hvg(series), series);
        CHECK(chvg.nodes == std::set<std::string>{"a"});
        CHECK(chvg.edges.empty());
        CHECK(chvg.self_loops_dropped == 2);
        CHECK(chvg.node_weights(ChvgWeightMode::Simple).at("a") == 0);
    }

    SUBCASE("merging spans documents") {
        termnet::WeightSeries series = make_series_docs({{1, 2}, {2, 1}});
        series.terms = {"x", "y", "y", "x"};
        auto chvg = compact_hvg(build_hvg(series), series);
        CHECK(chvg.nodes.size() == 2);
        CHECK(chvg.edges.at({"x", "y"}) == 2);
    }
}

TEST_CASE("compaction conserves edge mass on random labeled series") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<std::size_t> len(2, 200);
    std::uniform_int_distribution<int> alphabet(1, 6);
    for (int i = 0; i < 100; ++i) {
        auto series = testutil::random_labeled_series(rng, len(rng), alphabet(rng));
        auto hvg = build_hvg(series);
        auto chvg = compact_hvg(hvg, series);
        std::int64_t mult_sum = 0;
        for (const auto& [pair, mult] : chvg.edges) mult_sum += mult;
        CHECK(mult_sum + chvg.self_loops_dropped == static_cast<std::int64_t>(hvg.edges.size()));
    }
}

TEST_CASE("term ranking") {
    StopDictionary empty_stop;

    SUBCASE("descending weight with lexicographic ties") {
        ChvgGraph g;
        g.nodes = {"x", "y", "z"};
        g.edges[{"x", "y"}] = 4;
        g.edges[{"x", "z"}] = 1;
        g.edges[{"y", "z"}] = 1;
        auto ranked = rank_terms(g, empty_stop, 1, ChvgWeightMode::Multi);
        CHECK(ranked.entries ==
              std::vector<std::pair<std::string, int>>{{"x", 5}, {"y", 5}, {"z", 2}});
    }

    SUBCASE("stop words are removed from tier one") {
        ChvgGraph g;
        g.nodes = {"retrieval", "the"};
        g.edges[{"retrieval", "the"}] = 3;
        StopDictionary stop;
        stop.words = {"the"};
        auto ranked = rank_terms(g, stop, 1);
        CHECK(ranked.entries == std::vector<std::pair<std::string, int>>{{"retrieval", 1}});
        // the policy switch governs n-grams only; unigram filtering is unconditional
        auto off = rank_terms(g, stop, 1, ChvgWeightMode::Simple, NgramStopPolicy::Off);
        CHECK(off.entries == ranked.entries);
    }

    SUBCASE("strict policy drops n-grams containing a stop token") {
        ChvgGraph g;
        g.nodes = {"index structure", "information retrieval"};
        g.edges[{"index structure", "information retrieval"}] = 1;
        StopDictionary stop;
        stop.words = {"information"};
        auto strict = rank_terms(g, stop, 2, ChvgWeightMode::Simple, NgramStopPolicy::Strict);
        CHECK(strict.entries ==
              std::vector<std::pair<std::string, int>>{{"index structure", 1}});
        auto off = rank_terms(g, stop, 2, ChvgWeightMode::Simple, NgramStopPolicy::Off);
        CHECK(off.entries.size() == 2);
        CHECK(off.entries[0].first == "index structure");  // tie broken lexicographically
    }

    SUBCASE("ranking is a permutation of the stop-filtered node set") {
        std::mt19937 rng(9);
        auto series = testutil::random_labeled_series(rng, 80, 6);
        auto chvg = compact_hvg(build_hvg(series), series);
        StopDictionary stop;
        stop.words = {"a"};
        auto ranked = rank_terms(chvg, stop, 1);
        std::set<std::string> got;
        for (const auto& [term, weight] : ranked.entries) got.insert(term);
        std::set<std::string> expected = chvg.nodes;
        expected.erase("a");
        CHECK(got == expected);
        for (std::size_t i = 1; i < ranked.entries.size(); ++i)
            CHECK(ranked.entries[i - 1].second >= ranked.entries[i].second);
    }
}

TEST_CASE("ranked term dump is byte-stable") {
    testutil::TempDir dir;
    auto path = dir / "ranked.tsv";
    RankedTerms ranked{1, {{"retrieval", 4}, {"index", 2}}};
    write_ranked_terms_tsv(ranked, path);
    CHECK(testutil::read_file(path) == "retrieval\t4\nindex\t2\n");
}

TEST_SUITE_END();
