#include "termnet/nnht.hpp"

#include <algorithm>

#include "termnet/error.hpp"

namespace termnet {
namespace {

const char* tier_name(int tier) {
    switch (tier) {
        case 1: return "unigram";
        case 2: return "bigram";
        default: return "trigram";
    }
}

std::vector<std::pair<std::string, int>> take_prefix(const RankedTerms& ranked, int n,
                                                     std::vector<std::string>* warnings) {
    std::size_t want = static_cast<std::size_t>(n);
    if (ranked.entries.size() < want && warnings) {
        warnings->push_back(std::string("warning: ") + tier_name(ranked.tier) +
                            " tier truncated to " + std::to_string(ranked.entries.size()));
    }
    std::size_t take = std::min(want, ranked.entries.size());
    return {ranked.entries.begin(), ranked.entries.begin() + take};
}

}  // namespace

TierSelection select_top(const RankedTerms& unigrams, const RankedTerms& bigrams,
                         const RankedTerms& trigrams, int n,
                         std::vector<std::string>* warnings) {
    if (n < 1) throw Error("selection size must be at least 1");
    TierSelection sel;
    sel.n_requested = n;
    sel.unigrams = take_prefix(unigrams, n, warnings);
    sel.bigrams = take_prefix(bigrams, n, warnings);
    sel.trigrams = take_prefix(trigrams, n, warnings);
    return sel;
}

bool ngram_contains(std::string_view shorter, std::string_view longer) {
    int ns = ngram_order(shorter);
    int nl = ngram_order(longer);
    if (ns >= nl) throw Error("containment requires a strictly shorter term");
    auto short_toks = ngram_tokens(shorter);
    auto long_toks = ngram_tokens(longer);
    if (ns == 1) {
        return std::find(long_toks.begin(), long_toks.end(), short_toks[0]) != long_toks.end();
    }
    // bigram in trigram: contiguous token pair
    for (std::size_t i = 0; i + short_toks.size() <= long_toks.size(); ++i) {
        bool match = true;
        for (std::size_t k = 0; k < short_toks.size(); ++k) {
            if (long_toks[i + k] != short_toks[k]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

Nnht build_nnht(const TierSelection& selection) {
    Nnht net;
    auto add_tier = [&](const std::vector<std::pair<std::string, int>>& entries, int tier) {
        for (const auto& [term, weight] : entries) net.nodes.push_back({term, tier, weight});
    };
    add_tier(selection.unigrams, 1);
    add_tier(selection.bigrams, 2);
    add_tier(selection.trigrams, 3);
    std::sort(net.nodes.begin(), net.nodes.end(), [](const NnhtNode& a, const NnhtNode& b) {
        return a.tier != b.tier ? a.tier < b.tier : a.term < b.term;
    });

    for (std::uint32_t s = 0; s < net.nodes.size(); ++s) {
        for (std::uint32_t t = 0; t < net.nodes.size(); ++t) {
            if (net.nodes[s].tier >= net.nodes[t].tier) continue;
            if (ngram_contains(net.nodes[s].term, net.nodes[t].term))
                net.edges.emplace_back(s, t);
        }
    }
    return net;
}

std::vector<int> Nnht::out_degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (const auto& [s, t] : edges) {
        (void)t;
        ++deg[s];
    }
    return deg;
}

}  // namespace termnet
