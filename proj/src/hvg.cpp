#include "termnet/hvg.hpp"

#include <algorithm>
#include <fstream>

#include "termnet/error.hpp"
#include "termnet/parallel.hpp"

namespace termnet {
namespace {

// Sweep over one document range [begin, end). The stack holds positions whose
// weights strictly decrease from bottom to top; every position is pushed once
// and popped at most once. A new position j links to every popped lower
// position and to the first position at or above its own weight; an equal
// weight blocks that survivor's view past j, so it is popped too.
void sweep_range(const std::vector<double>& w, std::size_t begin, std::size_t end,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                 std::vector<std::uint32_t>& stack) {
    stack.clear();
    for (std::size_t j = begin; j < end; ++j) {
        while (!stack.empty() && w[stack.back()] < w[j]) {
            edges.emplace_back(stack.back(), static_cast<std::uint32_t>(j));
            stack.pop_back();
        }
        if (!stack.empty()) {
            edges.emplace_back(stack.back(), static_cast<std::uint32_t>(j));
            if (w[stack.back()] == w[j]) stack.pop_back();
        }
        stack.push_back(static_cast<std::uint32_t>(j));
    }
}

}  // namespace

HvgGraph build_hvg(const WeightSeries& series, int workers) {
    HvgGraph graph;
    graph.node_count = series.size();
    if (series.doc_count() == 0) return graph;

    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_doc(series.doc_count());
    parallel_for(series.doc_count(), workers, [&](std::size_t d) {
        std::vector<std::uint32_t> stack;
        sweep_range(series.weights, series.doc_offsets[d], series.doc_offsets[d + 1],
                    per_doc[d], stack);
    });

    std::size_t total = 0;
    for (const auto& e : per_doc) total += e.size();
    graph.edges.reserve(total);
    for (auto& e : per_doc)
        graph.edges.insert(graph.edges.end(), e.begin(), e.end());
    return graph;
}

ChvgGraph compact_hvg(const HvgGraph& hvg, const WeightSeries& series) {
    if (hvg.node_count != series.size())
        throw Error("visibility graph does not match series length");
    ChvgGraph chvg;
    for (const auto& term : series.terms) chvg.nodes.insert(term);
    for (const auto& [i, j] : hvg.edges) {
        const std::string& a = series.terms[i];
        const std::string& b = series.terms[j];
        if (a == b) {
            ++chvg.self_loops_dropped;
            continue;
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        ++chvg.edges[key];
    }
    return chvg;
}

std::map<std::string, int> ChvgGraph::node_weights(ChvgWeightMode mode) const {
    std::map<std::string, int> weights;
    for (const auto& term : nodes) weights[term] = 0;
    for (const auto& [key, mult] : edges) {
        int inc = mode == ChvgWeightMode::Simple ? 1 : mult;
        weights[key.first] += inc;
        weights[key.second] += inc;
    }
    return weights;
}

RankedTerms rank_terms(const ChvgGraph& chvg, const StopDictionary& stop, int tier,
                       ChvgWeightMode mode, NgramStopPolicy policy) {
    auto weights = chvg.node_weights(mode);
    RankedTerms ranked;
    ranked.tier = tier;
    ranked.entries.reserve(weights.size());
    for (const auto& [term, weight] : weights) {
        bool dropped = false;
        if (tier == 1 || policy == NgramStopPolicy::Strict) {
            for (const auto& tok : ngram_tokens(term)) {
                if (stop.contains(tok)) {
                    dropped = true;
                    break;
                }
            }
        }
        if (!dropped) ranked.entries.emplace_back(term, weight);
    }
    // weights map iterates term-ascending, so a stable sort on weight keeps
    // the lexicographic tie order.
    std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return ranked;
}

void write_ranked_terms_tsv(const RankedTerms& ranked, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    for (const auto& [term, weight] : ranked.entries) out << term << '\t' << weight << '\n';
}

}  // namespace termnet
