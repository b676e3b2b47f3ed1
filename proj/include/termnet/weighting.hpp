#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termnet/corpus.hpp"

namespace termnet {

/// Canonical n-gram form: tokens joined by single spaces.
std::string ngram_join(const std::vector<std::string>& tokens, std::size_t begin, std::size_t n);

/// Splits a canonical form back into its tokens.
std::vector<std::string> ngram_tokens(std::string_view canonical);

/// Tier of a canonical form (its token count).
int ngram_order(std::string_view canonical);

/// Sliding window of width n, stride 1, within one document. Output order is
/// text order; repeats are preserved. Empty when the document is shorter
/// than n.
std::vector<std::string> extract_ngrams(const TokenizedDocument& doc, int n);

/// Per-tier TF-IDF table. tf is the raw window count of a term inside one
/// document; idf(t) = log2(D / df(t)).
struct TermWeightTable {
    struct TermEntry {
        int doc_freq = 0;
        // (document index, raw count), ascending by document index
        std::vector<std::pair<std::uint32_t, int>> tf;
    };

    int tier = 1;
    std::size_t corpus_size = 0;
    std::vector<std::string> doc_ids;  // corpus order
    std::unordered_map<std::string, TermEntry> terms;

    double idf(const std::string& term) const;
    double tfidf(const std::string& term, std::uint32_t doc_index) const;
    double tfidf(const std::string& term, std::string_view doc_id) const;
};

/// Positional sequence of per-tier term weights, concatenated over the corpus
/// in document order. Entry index doubles as the position. doc_offsets has
/// one entry per document plus a terminator; document d occupies
/// [doc_offsets[d], doc_offsets[d+1]).
struct WeightSeries {
    int tier = 1;
    std::vector<std::string> terms;
    std::vector<double> weights;
    std::vector<std::size_t> doc_offsets;
    std::vector<std::string> doc_ids;

    std::size_t size() const { return weights.size(); }
    std::size_t doc_count() const { return doc_ids.size(); }
};

/// Builds the TF-IDF table for one tier. Throws on an empty corpus or
/// n outside {1,2,3}.
TermWeightTable compute_tfidf(const std::vector<TokenizedDocument>& corpus, int n,
                              int workers = 1);

/// Expands the table into the positional series consumed by the visibility
/// graph construction. The table must come from the same corpus and tier.
WeightSeries build_weight_series(const std::vector<TokenizedDocument>& corpus,
                                 const TermWeightTable& table, int n);

/// Debug dump: `term<TAB>df<TAB>max_tfidf`, sorted by term, UTF-8, LF.
void write_term_stats_tsv(const TermWeightTable& table, const std::filesystem::path& path);

}  // namespace termnet
