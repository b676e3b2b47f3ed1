#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "termnet/analysis.hpp"
#include "termnet/corpus.hpp"
#include "termnet/exporters.hpp"
#include "termnet/hvg.hpp"
#include "termnet/nnht.hpp"

namespace termnet {

struct PipelineConfig {
    std::string input_path;
    CorpusFormat format = CorpusFormat::Jsonl;
    std::optional<std::string> stopwords_path;
    Stemming stemming = Stemming::Porter;
    int n = 20;
    ChvgWeightMode chvg_weight = ChvgWeightMode::Simple;
    NgramStopPolicy stopword_ngrams = NgramStopPolicy::Strict;
    FitMethod fit = FitMethod::LogLogLS;
    int k_min = 1;
    bool export_csv = true;
    bool export_gexf = true;
    bool export_layout = true;
    std::string out_prefix = "nnht";
    double spiral_c = 1.0;
    double spiral_dtheta = 0.5;
    int workers = 0;  // 0 = hardware concurrency
};

struct TierCounts {
    std::size_t candidates = 0;
    std::size_t selected = 0;
};

struct BuildResult {
    std::size_t documents = 0;
    std::size_t tokens = 0;
    std::array<TierCounts, 3> tiers;
    Nnht network;
    std::vector<std::string> warnings;
    std::vector<std::string> outputs;  // files written, in write order

    /// Deterministic human-readable summary for standard output.
    std::string summary_text() const;
};

/// Runs the whole construction pipeline: load, tokenize, per-tier TF-IDF and
/// weight series, visibility graphs, compaction, ranking, selection, network
/// build and exports. Failures surface as PipelineError naming the stage.
BuildResult run_build(const PipelineConfig& config);

struct AnalyzeResult {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    DegreeDistribution distribution;
    std::optional<PowerLawFit> fit;
    std::string insufficient_reason;  // set when fit is absent

    /// Degree distribution TSV plus one fit line.
    std::string report_text() const;
};

/// Reads a network from the edge CSV format and fits its out-degree
/// distribution. An insufficient-data condition is reported in the result
/// rather than thrown; file errors surface as PipelineError.
AnalyzeResult run_analyze(const std::filesystem::path& csv_path, FitMethod method, int k_min);

}  // namespace termnet
