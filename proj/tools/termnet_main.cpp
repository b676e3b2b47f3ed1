#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "termnet/error.hpp"
#include "termnet/pipeline.hpp"

namespace {

using termnet::ChvgWeightMode;
using termnet::CorpusFormat;
using termnet::FitMethod;
using termnet::NgramStopPolicy;
using termnet::Stemming;

struct AnalyzeOptions {
    std::string input_path;
    FitMethod fit = FitMethod::LogLogLS;
    int k_min = 1;
};

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

/// `key = value` lines; blank lines and `#` comments allowed; values may be
/// quoted. Keys are long option names without the leading dashes.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(text.substr(0, eq));
        std::string value = strip_quotes(trim(text.substr(eq + 1)));
        if (key.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
        if (key == "config") continue;  // no recursive config loading
        entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

bool option_present(const std::vector<std::string>& args, const std::string& key) {
    std::vector<std::string> names{"--" + key};
    if (key.size() == 1) names.push_back("-" + key);
    for (const auto& arg : args)
        for (const auto& name : names)
            if (arg == name || arg.rfind(name + "=", 0) == 0) return true;
    return false;
}

/// Pulls `--config PATH` out of the argument list and appends `--key value`
/// pairs for every config entry whose option was not given on the command
/// line, so explicit flags always win. CLI11 2.4.2 only reads config files
/// attached to the top-level command, hence the manual merge here.
void splice_config(std::vector<std::string>& args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + i);
        } else {
            ++i;
        }
    }
    if (config_path.empty()) return;
    for (const auto& [key, value] : read_config_file(config_path)) {
        if (option_present(args, key)) continue;
        args.push_back("--" + key);
        args.push_back(value);
    }
}

void add_build_options(CLI::App* cmd, termnet::PipelineConfig& cfg,
                       std::vector<std::string>& exports) {
    static const std::map<std::string, CorpusFormat> formats{
        {"jsonl", CorpusFormat::Jsonl}, {"text-dir", CorpusFormat::TextDir}};
    static const std::map<std::string, Stemming> stemmers{{"porter", Stemming::Porter},
                                                          {"none", Stemming::None}};
    static const std::map<std::string, ChvgWeightMode> weight_modes{
        {"simple", ChvgWeightMode::Simple}, {"multi", ChvgWeightMode::Multi}};
    static const std::map<std::string, NgramStopPolicy> stop_policies{
        {"strict", NgramStopPolicy::Strict}, {"off", NgramStopPolicy::Off}};

    cmd->add_option("--input", cfg.input_path, "corpus path (jsonl file or directory)")
        ->required();
    cmd->add_option("--format", cfg.format, "corpus format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("jsonl");
    std::string stopwords;
    cmd->add_option_function<std::string>(
           "--stopwords",
           [&cfg](const std::string& path) { cfg.stopwords_path = path; },
           "stopword file, one word per line");
    cmd->add_option("--stemmer", cfg.stemming, "token stemmer")
        ->transform(CLI::CheckedTransformer(stemmers, CLI::ignore_case))
        ->default_str("porter");
    cmd->add_option("-n,--n", cfg.n, "terms selected per tier")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--chvg-weight", cfg.chvg_weight, "node weight: distinct neighbors or multiplicity sum")
        ->transform(CLI::CheckedTransformer(weight_modes, CLI::ignore_case))
        ->default_str("simple");
    cmd->add_option("--stopword-ngrams", cfg.stopword_ngrams,
                    "drop n-grams containing a stop word (strict) or keep them (off)")
        ->transform(CLI::CheckedTransformer(stop_policies, CLI::ignore_case))
        ->default_str("strict");
    cmd->add_option("--export", exports, "artifacts to write: any of csv,gexf,layout")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "gexf", "layout"}));
    cmd->add_option("--out-prefix", cfg.out_prefix, "output path prefix")
        ->capture_default_str();
    cmd->add_option("--spiral-c", cfg.spiral_c, "spiral radial constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--spiral-dtheta", cfg.spiral_dtheta, "spiral angular step (radians)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--workers", cfg.workers, "worker threads (0 = all cores)")
        ->capture_default_str();
    cmd->add_option("--config", "config file with key = value lines; explicit flags win");
}

void add_analyze_options(CLI::App* cmd, AnalyzeOptions& opts) {
    static const std::map<std::string, FitMethod> methods{{"loglog", FitMethod::LogLogLS},
                                                          {"mle", FitMethod::Mle}};
    cmd->add_option("--input", opts.input_path, "edge CSV produced by build")->required();
    cmd->add_option("--fit", opts.fit, "power-law fit method")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case))
        ->default_str("loglog");
    cmd->add_option("--k-min", opts.k_min, "smallest degree used by the fit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--config", "config file with key = value lines; explicit flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"termnet: builds and analyzes three-tier term hierarchy networks"};
    app.require_subcommand(1);

    termnet::PipelineConfig cfg;
    std::vector<std::string> exports;
    CLI::App* build_cmd = app.add_subcommand("build", "run the full construction pipeline");
    add_build_options(build_cmd, cfg, exports);

    AnalyzeOptions analyze_opts;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "fit the out-degree distribution of an exported network");
    add_analyze_options(analyze_cmd, analyze_opts);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        splice_config(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (build_cmd->parsed()) {
            if (!exports.empty()) {
                cfg.export_csv = cfg.export_gexf = cfg.export_layout = false;
                for (const auto& e : exports) {
                    if (e == "csv") cfg.export_csv = true;
                    if (e == "gexf") cfg.export_gexf = true;
                    if (e == "layout") cfg.export_layout = true;
                }
            }
            auto result = termnet::run_build(cfg);
            for (const auto& w : result.warnings) std::cerr << w << "\n";
            std::cout << result.summary_text();
            return 0;
        }
        auto result = termnet::run_analyze(analyze_opts.input_path, analyze_opts.fit,
                                           analyze_opts.k_min);
        std::cout << result.report_text();
        return result.fit ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
