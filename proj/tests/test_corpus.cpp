#include <string>
#include <vector>

#include "doctest.h"
#include "termnet/corpus.hpp"
#include "termnet/error.hpp"
#include "testutil.hpp"

using namespace termnet;
using testutil::TempDir;
using testutil::write_file;

TEST_SUITE_BEGIN("corpus");

TEST_CASE("jsonl loading") {
    TempDir dir;
    auto path = dir / "corpus.jsonl";

    SUBCASE("documents arrive in line order with unknown fields ignored") {
        write_file(path,
                   "{\"id\":\"d1\",\"text\":\"first\",\"extra\":7}\n"
                   "{\"id\":\"d2\",\"text\":\"second\"}\n");
        auto docs = load_corpus(path, CorpusFormat::Jsonl);
        REQUIRE(docs.size() == 2);
        CHECK(docs[0].id == "d1");
        CHECK(docs[0].raw_text == "first");
        CHECK(docs[1].id == "d2");
    }

    SUBCASE("blank lines and CRLF endings are tolerated") {
        write_file(path, "{\"id\":\"d1\",\"text\":\"a\"}\r\n\n{\"id\":\"d2\",\"text\":\"b\"}\n");
        auto docs = load_corpus(path, CorpusFormat::Jsonl);
        REQUIRE(docs.size() == 2);
        CHECK(docs[1].raw_text == "b");
    }

    SUBCASE("empty file yields empty corpus plus a warning") {
        write_file(path, "");
        std::vector<std::string> warnings;
        auto docs = load_corpus(path, CorpusFormat::Jsonl, &warnings);
        CHECK(docs.empty());
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("empty") != std::string::npos);
    }

    SUBCASE("a 550-line file yields 550 documents") {
        std::string content;
        for (int i = 0; i < 550; ++i)
            content += "{\"id\":\"r" + std::to_string(i) + "\",\"text\":\"term weighting\"}\n";
        write_file(path, content);
        CHECK(load_corpus(path, CorpusFormat::Jsonl).size() == 550);
    }

    SUBCASE("malformed line is reported with its line number") {
        write_file(path, "{\"id\":\"d1\",\"text\":\"ok\"}\n{broken\n");
        CHECK_THROWS_WITH_AS(load_corpus(path, CorpusFormat::Jsonl),
                             doctest::Contains(":2:"), Error);
    }

    SUBCASE("missing text field is rejected") {
        write_file(path, "{\"id\":\"d1\"}\n");
        CHECK_THROWS_AS(load_corpus(path, CorpusFormat::Jsonl), Error);
    }

    SUBCASE("non-string id is rejected") {
        write_file(path, "{\"id\":3,\"text\":\"x\"}\n");
        CHECK_THROWS_AS(load_corpus(path, CorpusFormat::Jsonl), Error);
    }

    SUBCASE("duplicate id rejects the corpus") {
        write_file(path,
                   "{\"id\":\"d1\",\"text\":\"a\"}\n"
                   "{\"id\":\"d1\",\"text\":\"b\"}\n");
        CHECK_THROWS_WITH_AS(load_corpus(path, CorpusFormat::Jsonl),
                             doctest::Contains("duplicate document id"), Error);
    }

    SUBCASE("missing path is an error") {
        CHECK_THROWS_AS(load_corpus(dir / "nope.jsonl", CorpusFormat::Jsonl), Error);
    }
}

TEST_CASE("text directory loading orders documents by file name") {
    TempDir dir;
    auto root = dir / "docs";
    std::filesystem::create_directory(root);
    write_file(root / "b.txt", "second doc");
    write_file(root / "a.txt", "first doc");
    auto docs = load_corpus(root, CorpusFormat::TextDir);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].id == "a.txt");
    CHECK(docs[0].raw_text == "first doc");
    CHECK(docs[1].id == "b.txt");
}

TEST_CASE("tokenization") {
    auto tokens = [](const std::string& text, Stemming s) {
        return normalize_and_tokenize(Document{"d", text}, s).tokens;
    };

    SUBCASE("lowercases and strips punctuation") {
        CHECK(tokens("Information Retrieval!", Stemming::None) ==
              std::vector<std::string>{"information", "retrieval"});
    }

    SUBCASE("stemming collapses inflected forms") {
        CHECK(tokens("retrieval retrieving", Stemming::Porter) ==
              std::vector<std::string>{"retriev", "retriev"});
    }

    SUBCASE("non-text runs are boundaries, digits survive") {
        CHECK(tokens("--- 42 ---", Stemming::None) == std::vector<std::string>{"42"});
        CHECK(tokens("top-k lists", Stemming::None) ==
              std::vector<std::string>{"top", "k", "lists"});
    }

    SUBCASE("multi-byte characters act as boundaries") {
        CHECK(tokens("na\xc3\xafve", Stemming::None) == std::vector<std::string>{"na", "ve"});
    }

    SUBCASE("text with no token characters yields an empty list") {
        CHECK(tokens("!!! ... ???", Stemming::None).empty());
        CHECK(tokens("", Stemming::Porter).empty());
    }

    SUBCASE("idempotence: re-tokenizing the joined tokens changes nothing") {
        for (const char* text : {"The Quick-Brown Fox; 7 jumps!", "running RUNNING ran",
                                 "a b c", "x2y2z", "Mixed CASE tokens, truly."}) {
            for (auto stemming : {Stemming::None, Stemming::Porter}) {
                auto first = tokens(text, stemming);
                std::string joined;
                for (const auto& t : first) joined += t + " ";
                CHECK(tokens(joined, stemming) == first);
            }
        }
    }
}

TEST_CASE("parallel tokenization is independent of worker count") {
    std::vector<Document> corpus;
    for (int i = 0; i < 37; ++i)
        corpus.push_back({"d" + std::to_string(i),
                          "Document number " + std::to_string(i) + " discusses retrieval."});
    auto reference = tokenize_corpus(corpus, Stemming::Porter, 1);
    for (int workers : {2, 3, 8}) {
        auto got = tokenize_corpus(corpus, Stemming::Porter, workers);
        REQUIRE(got.size() == reference.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].id == reference[i].id);
            CHECK(got[i].tokens == reference[i].tokens);
        }
    }
}

TEST_CASE("stop dictionary") {
    TempDir dir;
    auto path = dir / "stop.txt";

    SUBCASE("words are normalized on load") {
        write_file(path, "The\nof\n");
        auto dict = load_stop_dictionary(path, Stemming::None);
        CHECK(dict.contains("the"));
        CHECK(dict.contains("of"));
        CHECK_FALSE(dict.contains("The"));
    }

    SUBCASE("comments and blank lines are skipped") {
        write_file(path, "# common words\n\nthe\n");
        auto dict = load_stop_dictionary(path, Stemming::None);
        CHECK(dict.words.size() == 1);
    }

    SUBCASE("stemming applies to dictionary entries") {
        write_file(path, "running\n");
        auto dict = load_stop_dictionary(path, Stemming::Porter);
        CHECK(dict.contains("run"));
        CHECK_FALSE(dict.contains("running"));
    }

    SUBCASE("empty file gives an empty dictionary") {
        write_file(path, "");
        CHECK(load_stop_dictionary(path, Stemming::None).empty());
    }

    SUBCASE("missing file is an error") {
        CHECK_THROWS_AS(load_stop_dictionary(dir / "gone.txt", Stemming::None), Error);
    }

    SUBCASE("dictionary and corpus share one normalization") {
        write_file(path, "Stemming\nNetworks\nHierarchies\n");
        auto dict = load_stop_dictionary(path, Stemming::Porter);
        auto doc = normalize_and_tokenize(
            Document{"d", "stemming networks hierarchies"}, Stemming::Porter);
        for (const auto& tok : doc.tokens) CHECK(dict.contains(tok));
    }
}

TEST_SUITE_END();
