#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termnet/hvg.hpp"

namespace termnet {

/// Top-N cut of each tier's ranking. Lists shorter than N occur only when a
/// tier has fewer candidates.
struct TierSelection {
    int n_requested = 0;
    std::vector<std::pair<std::string, int>> unigrams;
    std::vector<std::pair<std::string, int>> bigrams;
    std::vector<std::pair<std::string, int>> trigrams;
};

struct NnhtNode {
    std::string term;
    int tier = 1;
    int weight = 0;
};

/// Directed three-tier containment network. Edges always point from the
/// contained term to the containing one, so a word shared by many phrases
/// accumulates out-degree.
struct Nnht {
    std::vector<NnhtNode> nodes;  // sorted by (tier, term)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // node indices

    std::vector<int> out_degrees() const;
};

/// Takes the first N entries of each ranking. Short tiers produce a warning.
TierSelection select_top(const RankedTerms& unigrams, const RankedTerms& bigrams,
                         const RankedTerms& trigrams, int n,
                         std::vector<std::string>* warnings = nullptr);

/// Containment test between canonical forms of different orders: a word is
/// contained if it equals any token of the longer term; a bigram is contained
/// in a trigram iff its token pair appears contiguously.
bool ngram_contains(std::string_view shorter, std::string_view longer);

/// Cross-tier containment scan over the selection.
Nnht build_nnht(const TierSelection& selection);

}  // namespace termnet
