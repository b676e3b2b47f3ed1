#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "termnet/corpus.hpp"
#include "termnet/weighting.hpp"

namespace termnet {

/// Horizontal visibility graph over a weight series. Positions i < j are
/// linked iff every weight strictly between them is below min(w[i], w[j]);
/// ties block visibility. Edges never cross document boundaries.
struct HvgGraph {
    std::size_t node_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j
};

enum class ChvgWeightMode { Simple, Multi };
enum class NgramStopPolicy { Strict, Off };

/// Visibility graph with all positions of one term merged into a single node.
/// Self-edges produced by the merge are dropped but counted, so the edge mass
/// of the underlying HVG stays accountable.
struct ChvgGraph {
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, int> edges;  // first < second, multiplicity
    std::int64_t self_loops_dropped = 0;

    /// Simple: number of distinct neighbor terms. Multi: sum of incident edge
    /// multiplicities.
    std::map<std::string, int> node_weights(ChvgWeightMode mode) const;
};

struct RankedTerms {
    int tier = 1;
    std::vector<std::pair<std::string, int>> entries;  // weight desc, term asc
};

/// Monotone-stack sweep, O(length) amortized, applied independently to each
/// document's index range.
HvgGraph build_hvg(const WeightSeries& series, int workers = 1);

/// Merges positions by term label, corpus-globally.
ChvgGraph compact_hvg(const HvgGraph& hvg, const WeightSeries& series);

/// Sorts terms by (weight desc, term asc) after stop filtering. Unigrams equal
/// to a stop word are always removed; under the Strict policy any n-gram
/// containing a stop token is removed as well.
RankedTerms rank_terms(const ChvgGraph& chvg, const StopDictionary& stop, int tier,
                       ChvgWeightMode mode = ChvgWeightMode::Simple,
                       NgramStopPolicy policy = NgramStopPolicy::Strict);

/// Debug dump: `term<TAB>chvg_weight` in ranking order, UTF-8, LF.
void write_ranked_terms_tsv(const RankedTerms& ranked, const std::filesystem::path& path);

}  // namespace termnet
