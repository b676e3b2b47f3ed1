#include "termnet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "termnet/error.hpp"
#include "termnet/parallel.hpp"
#include "termnet/porter.hpp"

namespace termnet {
namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open file: " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Document> load_jsonl(const std::filesystem::path& source) {
    std::ifstream in(source);
    if (!in) throw Error("cannot open file: " + source.string());
    std::vector<Document> docs;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(source.string() + ":" + std::to_string(lineno) +
                        ": malformed jsonl line: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("text") ||
            !obj["id"].is_string() || !obj["text"].is_string()) {
            throw Error(source.string() + ":" + std::to_string(lineno) +
                        ": jsonl object must have string fields \"id\" and \"text\"");
        }
        Document doc{obj["id"].get<std::string>(), obj["text"].get<std::string>()};
        if (doc.id.empty())
            throw Error(source.string() + ":" + std::to_string(lineno) + ": empty document id");
        if (!seen.insert(doc.id).second)
            throw Error(source.string() + ":" + std::to_string(lineno) +
                        ": duplicate document id: " + doc.id);
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<Document> load_text_dir(const std::filesystem::path& source) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(source))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& f : files)
        docs.push_back(Document{f.filename().string(), read_file(f)});
    return docs;
}

}  // namespace

std::vector<Document> load_corpus(const std::filesystem::path& source, CorpusFormat format,
                                  std::vector<std::string>* warnings) {
    if (!std::filesystem::exists(source)) throw Error("no such path: " + source.string());
    std::vector<Document> docs;
    if (format == CorpusFormat::Jsonl) {
        if (!std::filesystem::is_regular_file(source))
            throw Error("not a regular file: " + source.string());
        docs = load_jsonl(source);
    } else {
        if (!std::filesystem::is_directory(source))
            throw Error("not a directory: " + source.string());
        docs = load_text_dir(source);
    }
    if (docs.empty() && warnings)
        warnings->push_back("corpus is empty: " + source.string());
    return docs;
}

namespace {

// Locale-independent ASCII classification keeps tokenization byte-deterministic.
inline bool is_token_char(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char lower_ascii(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

}  // namespace

std::vector<std::string> tokenize_text(std::string_view text, Stemming stemming) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (is_token_char(c)) {
            current.push_back(lower_ascii(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    if (stemming == Stemming::Porter)
        for (auto& t : tokens) t = porter_stem(std::move(t));
    return tokens;
}

TokenizedDocument normalize_and_tokenize(const Document& doc, Stemming stemming) {
    return TokenizedDocument{doc.id, tokenize_text(doc.raw_text, stemming)};
}

std::vector<TokenizedDocument> tokenize_corpus(const std::vector<Document>& corpus,
                                               Stemming stemming, int workers) {
    std::vector<TokenizedDocument> out(corpus.size());
    parallel_for(corpus.size(), workers,
                 [&](std::size_t i) { out[i] = normalize_and_tokenize(corpus[i], stemming); });
    return out;
}

StopDictionary load_stop_dictionary(const std::filesystem::path& path, Stemming stemming) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open stopword file: " + path.string());
    StopDictionary dict;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (auto& tok : tokenize_text(line, stemming)) dict.words.insert(std::move(tok));
    }
    return dict;
}

}  // namespace termnet
