#include "termnet/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "termnet/error.hpp"
#include "termnet/parallel.hpp"

namespace termnet {
namespace {

void check_tier(int n) {
    if (n < 1 || n > 3) throw Error("n-gram order must be 1, 2 or 3, got " + std::to_string(n));
}

}  // namespace

std::string ngram_join(const std::vector<std::string>& tokens, std::size_t begin, std::size_t n) {
    std::string out = tokens[begin];
    for (std::size_t k = 1; k < n; ++k) {
        out.push_back(' ');
        out.append(tokens[begin + k]);
    }
    return out;
}

std::vector<std::string> ngram_tokens(std::string_view canonical) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= canonical.size()) {
        std::size_t sp = canonical.find(' ', start);
        if (sp == std::string_view::npos) {
            out.emplace_back(canonical.substr(start));
            break;
        }
        out.emplace_back(canonical.substr(start, sp - start));
        start = sp + 1;
    }
    return out;
}

int ngram_order(std::string_view canonical) {
    return 1 + static_cast<int>(std::count(canonical.begin(), canonical.end(), ' '));
}

std::vector<std::string> extract_ngrams(const TokenizedDocument& doc, int n) {
    check_tier(n);
    const auto& toks = doc.tokens;
    std::vector<std::string> out;
    if (toks.size() < static_cast<std::size_t>(n)) return out;
    out.reserve(toks.size() - n + 1);
    for (std::size_t i = 0; i + n <= toks.size(); ++i)
        out.push_back(ngram_join(toks, i, static_cast<std::size_t>(n)));
    return out;
}

double TermWeightTable::idf(const std::string& term) const {
    auto it = terms.find(term);
    if (it == terms.end()) throw Error("term not in weight table: " + term);
    return std::log2(static_cast<double>(corpus_size) / it->second.doc_freq);
}

double TermWeightTable::tfidf(const std::string& term, std::uint32_t doc_index) const {
    auto it = terms.find(term);
    if (it == terms.end()) throw Error("term not in weight table: " + term);
    const auto& tf = it->second.tf;
    auto pos = std::lower_bound(tf.begin(), tf.end(), doc_index,
                                [](const auto& p, std::uint32_t d) { return p.first < d; });
    int count = (pos != tf.end() && pos->first == doc_index) ? pos->second : 0;
    if (count == 0) return 0.0;
    return count * std::log2(static_cast<double>(corpus_size) / it->second.doc_freq);
}

double TermWeightTable::tfidf(const std::string& term, std::string_view doc_id) const {
    for (std::size_t i = 0; i < doc_ids.size(); ++i)
        if (doc_ids[i] == doc_id) return tfidf(term, static_cast<std::uint32_t>(i));
    throw Error("unknown document id: " + std::string(doc_id));
}

TermWeightTable compute_tfidf(const std::vector<TokenizedDocument>& corpus, int n, int workers) {
    check_tier(n);
    if (corpus.empty()) throw Error("empty corpus");

    // Per-document raw counts, computed independently per document and merged
    // in corpus order so the result does not depend on the worker count.
    std::vector<std::unordered_map<std::string, int>> per_doc(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t d) {
        for (auto& gram : extract_ngrams(corpus[d], n)) ++per_doc[d][std::move(gram)];
    });

    TermWeightTable table;
    table.tier = n;
    table.corpus_size = corpus.size();
    table.doc_ids.reserve(corpus.size());
    for (const auto& doc : corpus) table.doc_ids.push_back(doc.id);

    for (std::size_t d = 0; d < per_doc.size(); ++d) {
        for (auto& [term, count] : per_doc[d]) {
            auto& entry = table.terms[term];
            entry.doc_freq += 1;
            entry.tf.emplace_back(static_cast<std::uint32_t>(d), count);
        }
    }
    return table;
}

WeightSeries build_weight_series(const std::vector<TokenizedDocument>& corpus,
                                 const TermWeightTable& table, int n) {
    check_tier(n);
    if (table.tier != n) throw Error("weight table tier mismatch");
    if (table.corpus_size != corpus.size()) throw Error("weight table corpus mismatch");

    WeightSeries series;
    series.tier = n;
    series.doc_offsets.reserve(corpus.size() + 1);
    series.doc_ids.reserve(corpus.size());
    series.doc_offsets.push_back(0);
    for (std::size_t d = 0; d < corpus.size(); ++d) {
        auto grams = extract_ngrams(corpus[d], n);
        for (auto& gram : grams) {
            series.weights.push_back(table.tfidf(gram, static_cast<std::uint32_t>(d)));
            series.terms.push_back(std::move(gram));
        }
        series.doc_offsets.push_back(series.terms.size());
        series.doc_ids.push_back(corpus[d].id);
    }
    return series;
}

void write_term_stats_tsv(const TermWeightTable& table, const std::filesystem::path& path) {
    std::map<std::string, const TermWeightTable::TermEntry*> sorted;
    for (const auto& [term, entry] : table.terms) sorted.emplace(term, &entry);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    for (const auto& [term, entry] : sorted) {
        double idf = std::log2(static_cast<double>(table.corpus_size) / entry->doc_freq);
        int max_tf = 0;
        for (const auto& [doc, count] : entry->tf) max_tf = std::max(max_tf, count);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", max_tf * idf);
        out << term << '\t' << entry->doc_freq << '\t' << buf << '\n';
    }
}

}  // namespace termnet
