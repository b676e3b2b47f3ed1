#include "termnet/pipeline.hpp"

#include <cstdio>
#include <sstream>
#include <utility>

#include "termnet/error.hpp"

namespace termnet {
namespace {

template <class Fn>
auto run_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(stage, e.what());
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const char* tier_label(int tier) {
    switch (tier) {
        case 1: return "unigrams";
        case 2: return "bigrams";
        default: return "trigrams";
    }
}

}  // namespace

std::string BuildResult::summary_text() const {
    std::ostringstream out;
    out << "documents: " << documents << "\n";
    out << "tokens: " << tokens << "\n";
    for (int t = 0; t < 3; ++t) {
        out << "tier " << (t + 1) << " (" << tier_label(t + 1) << "): " << tiers[t].candidates
            << " candidates, " << tiers[t].selected << " selected\n";
    }
    out << "network: " << network.nodes.size() << " nodes, " << network.edges.size()
        << " edges\n";
    for (const auto& f : outputs) out << "wrote " << f << "\n";
    return out.str();
}

BuildResult run_build(const PipelineConfig& config) {
    BuildResult result;

    auto corpus = run_stage("load", [&] {
        auto docs = load_corpus(config.input_path, config.format, &result.warnings);
        if (docs.empty()) throw Error("empty corpus");
        return docs;
    });
    result.documents = corpus.size();

    StopDictionary stop = run_stage("load", [&] {
        return config.stopwords_path
                   ? load_stop_dictionary(*config.stopwords_path, config.stemming)
                   : StopDictionary{};
    });

    auto tokenized = run_stage("tokenize", [&] {
        return tokenize_corpus(corpus, config.stemming, config.workers);
    });
    for (const auto& doc : tokenized) result.tokens += doc.tokens.size();

    TierSelection selection;
    selection.n_requested = config.n;
    std::array<RankedTerms, 3> rankings;
    for (int n = 1; n <= 3; ++n) {
        auto series = run_stage("weighting", [&] {
            auto table = compute_tfidf(tokenized, n, config.workers);
            return build_weight_series(tokenized, table, n);
        });
        auto chvg = run_stage("hvg", [&] {
            auto graph = build_hvg(series, config.workers);
            return compact_hvg(graph, series);
        });
        rankings[n - 1] = run_stage("ranking", [&] {
            return rank_terms(chvg, stop, n, config.chvg_weight, config.stopword_ngrams);
        });
        result.tiers[n - 1].candidates = rankings[n - 1].entries.size();
    }

    selection = run_stage("selection", [&] {
        return select_top(rankings[0], rankings[1], rankings[2], config.n, &result.warnings);
    });
    result.tiers[0].selected = selection.unigrams.size();
    result.tiers[1].selected = selection.bigrams.size();
    result.tiers[2].selected = selection.trigrams.size();

    result.network = run_stage("network", [&] { return build_nnht(selection); });

    run_stage("export", [&] {
        std::filesystem::path prefix(config.out_prefix);
        if (prefix.has_parent_path()) std::filesystem::create_directories(prefix.parent_path());
        if (config.export_csv) {
            auto path = config.out_prefix + ".csv";
            write_edge_csv(result.network, path);
            result.outputs.push_back(path);
        }
        SpiralLayout layout;
        if (config.export_gexf || config.export_layout)
            layout = spiral_layout(result.network, config.spiral_c, config.spiral_dtheta);
        if (config.export_gexf) {
            auto path = config.out_prefix + ".gexf";
            write_gexf(result.network, config.export_layout ? &layout : nullptr, path);
            result.outputs.push_back(path);
        }
        if (config.export_layout) {
            auto path = config.out_prefix + "_layout.tsv";
            write_layout_tsv(layout, path);
            result.outputs.push_back(path);
        }
        return 0;
    });

    return result;
}

std::string AnalyzeResult::report_text() const {
    std::ostringstream out;
    out << "nodes: " << nodes << "\n";
    out << "edges: " << edges << "\n";
    out << "k\tcount\tp(k)\n";
    for (const auto& [k, count] : distribution.counts) {
        double p = distribution.total_nodes > 0
                       ? static_cast<double>(count) / distribution.total_nodes
                       : 0.0;
        out << k << '\t' << count << '\t' << fmt_double(p) << "\n";
    }
    if (fit) {
        out << "fit: alpha=" << fmt_double(fit->alpha) << " c=" << fmt_double(fit->c)
            << " method=" << fit_method_name(fit->method) << " k_min=" << fit->k_min
            << " bins=" << fit->bins_used;
        if (fit->residual) out << " residual=" << fmt_double(*fit->residual);
        out << "\n";
    } else {
        out << "fit: " << insufficient_reason << "\n";
    }
    return out.str();
}

AnalyzeResult run_analyze(const std::filesystem::path& csv_path, FitMethod method, int k_min) {
    AnalyzeResult result;
    Nnht net = run_stage("read", [&] { return read_edge_csv(csv_path); });
    result.nodes = net.nodes.size();
    result.edges = net.edges.size();
    result.distribution = run_stage("analysis", [&] { return out_degree_distribution(net); });
    try {
        result.fit = fit_power_law(result.distribution, k_min, method);
    } catch (const InsufficientDataError& e) {
        result.insufficient_reason = e.what();
    }
    return result;
}

}  // namespace termnet
