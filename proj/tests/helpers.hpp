#pragma once

#include "ccglex/corpus.hpp"
#include "ccglex/lexicon.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace ccglex::testing {

inline Category cat(const std::string& text) {
    return Category::parse(text);
}

inline CategorySet cats(std::initializer_list<const char*> texts) {
    CategorySet out;
    for (const char* t : texts) out.insert(Category::parse(t));
    return out;
}

inline AnnotatedToken tok(std::string word, std::string stem, Pos pos) {
    AnnotatedToken t;
    t.word = std::move(word);
    t.stem = std::move(stem);
    t.pos = pos;
    return t;
}

inline AnnotatedToken tok(const std::string& word, Pos pos) {
    return tok(word, word, pos);
}

inline Sentence sentence(std::string id,
                         std::vector<AnnotatedToken> tokens) {
    Sentence s;
    s.id = std::move(id);
    s.tokens = std::move(tokens);
    return s;
}

inline AnnotatedCorpus one_doc(std::vector<Sentence> sentences,
                               std::string url = "http://example.test/doc",
                               std::string date = "2008-09-27") {
    Document d;
    d.url = std::move(url);
    d.date = std::move(date);
    d.sentences = std::move(sentences);
    AnnotatedCorpus c;
    c.documents.push_back(std::move(d));
    return c;
}

inline LexicalEntry entry(std::string surface, Pos pos,
                          std::initializer_list<const char*> categories,
                          std::string stem = "") {
    LexicalEntry e;
    e.stem = stem.empty() ? surface : std::move(stem);
    e.surface = std::move(surface);
    e.pos = pos;
    e.categories = cats(categories);
    return e;
}

/// Random category of bounded depth, uniform over shape.
inline Category random_category(std::mt19937& rng, int max_depth) {
    std::uniform_int_distribution<int> atom_pick(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    if (max_depth <= 0 || coin(rng) == 0) {
        return Category::atomic(static_cast<Atom>(atom_pick(rng)));
    }
    Category result = random_category(rng, max_depth - 1);
    Category argument = random_category(rng, max_depth - 1);
    SlashDir dir = coin(rng) == 0 ? SlashDir::Forward : SlashDir::Backward;
    return Category::complex(result, dir, argument);
}

} // namespace ccglex::testing
