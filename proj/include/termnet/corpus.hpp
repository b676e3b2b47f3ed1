#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace termnet {

enum class Stemming { Porter, None };
enum class CorpusFormat { Jsonl, TextDir };

struct Document {
    std::string id;
    std::string raw_text;
};

struct TokenizedDocument {
    std::string id;
    std::vector<std::string> tokens;
};

/// Fixed set of normalized words excluded from term ranking.
struct StopDictionary {
    std::unordered_set<std::string> words;

    bool contains(std::string_view w) const {
        return words.find(std::string(w)) != words.end();
    }
    bool empty() const { return words.empty(); }
};

/// Loads documents from a jsonl file (one object per line with string fields
/// "id" and "text") or from a directory (one document per regular file,
/// id = file name, lexicographic order). Duplicate ids reject the corpus.
/// An empty source yields an empty corpus and a warning.
std::vector<Document> load_corpus(const std::filesystem::path& source,
                                  CorpusFormat format,
                                  std::vector<std::string>* warnings = nullptr);

/// Lowercases, splits on maximal runs of non-alphanumeric bytes and stems the
/// surviving tokens. Only ASCII letters and digits count as token characters;
/// anything else (including multi-byte UTF-8 sequences) is a boundary.
TokenizedDocument normalize_and_tokenize(const Document& doc, Stemming stemming);

/// Tokenizes every document, optionally in parallel. Output order follows the
/// corpus order regardless of the worker count.
std::vector<TokenizedDocument> tokenize_corpus(const std::vector<Document>& corpus,
                                               Stemming stemming, int workers = 1);

/// Splits raw text with the corpus tokenizer. Exposed so stopword files and
/// documents share one normalization.
std::vector<std::string> tokenize_text(std::string_view text, Stemming stemming);

/// One word per line; lines starting with '#' and blank lines are ignored.
/// Each word is normalized exactly like corpus tokens before insertion.
StopDictionary load_stop_dictionary(const std::filesystem::path& path, Stemming stemming);

}  // namespace termnet
