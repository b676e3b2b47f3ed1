#include "termnet/porter.hpp"

#include <array>
#include <cstddef>
#include <string_view>

namespace termnet {
namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// A consonant is any letter other than a, e, i, o, u and other than y
// preceded by a consonant.
bool is_consonant(std::string_view w, std::size_t i) {
    char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// Number of vowel-consonant sequences: the m of [C](VC)^m[V].
int measure(std::string_view w) {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n && is_consonant(w, i)) ++i;
    while (i < n) {
        while (i < n && !is_consonant(w, i)) ++i;
        if (i == n) break;
        ++m;
        while (i < n && is_consonant(w, i)) ++i;
    }
    return m;
}

bool contains_vowel(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(std::string_view w) {
    const std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// The *o condition: stem ends cvc where the final consonant is not w, x or y.
bool ends_cvc(std::string_view w) {
    const std::size_t n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1))
        return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Picks the longest matching suffix in the rule list, then applies it iff the
// stem's measure exceeds min_measure. Per the algorithm, a failed condition on
// the longest match ends the step; shorter suffixes are not retried.
template <std::size_t N>
void apply_step(std::string& w, const std::array<Rule, N>& rules, int min_measure) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    }
    if (!best) return;
    std::string_view stem(w.data(), w.size() - best->suffix.size());
    if (measure(stem) > min_measure) {
        w.resize(stem.size());
        w.append(best->replacement);
    }
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ss")) {
        // keep
    } else if (ends_with(w, "s")) {
        w.resize(w.size() - 1);
    }
}

void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        std::string_view stem(w.data(), w.size() - 3);
        if (measure(stem) > 0) w.resize(w.size() - 1);
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed")) {
        std::string_view stem(w.data(), w.size() - 2);
        if (contains_vowel(stem)) {
            w.resize(stem.size());
            stripped = true;
        }
    } else if (ends_with(w, "ing")) {
        std::string_view stem(w.data(), w.size() - 3);
        if (contains_vowel(stem)) {
            w.resize(stem.size());
            stripped = true;
        }
    }
    if (!stripped) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(std::string_view(w.data(), w.size() - 1)))
        w.back() = 'i';
}

void step2(std::string& w) {
    static const std::array<Rule, 20> rules = {{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_step(w, rules, 0);
}

void step3(std::string& w) {
    static const std::array<Rule, 7> rules = {{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_step(w, rules, 0);
}

void step4(std::string& w) {
    static const std::array<std::string_view, 19> suffixes = {
        "al",  "ance", "ence", "er",  "ic",    "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate",   "iti",  "ous",  "ive", "ize",
    };
    std::string_view best;
    for (std::string_view s : suffixes)
        if (ends_with(w, s) && s.size() > best.size()) best = s;
    if (best.empty()) return;
    std::string_view stem(w.data(), w.size() - best.size());
    if (measure(stem) <= 1) return;
    if (best == "ion" && !(ends_with(stem, "s") || ends_with(stem, "t"))) return;
    w.resize(stem.size());
}

void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    std::string_view stem(w.data(), w.size() - 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

void step5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();
}

}  // namespace

std::string porter_stem(std::string word) {
    if (word.size() <= 2) return word;
    step1a(word);
    step1b(word);
    step1c(word);
    step2(word);
    step3(word);
    step4(word);
    step5a(word);
    step5b(word);
    return word;
}

}  // namespace termnet
