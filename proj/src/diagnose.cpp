#include "ccglex/diagnose.hpp"

#include "ccglex/normalize.hpp"

#include <stdexcept>

namespace ccglex {

namespace {

std::vector<CategorySet> categorize_all(const Sentence& s,
                                        const Lexicon& lexicon,
                                        bool pos_fallback,
                                        const LexicalEntry* overlay) {
    std::vector<CategorySet> cats;
    cats.reserve(s.tokens.size());
    for (const AnnotatedToken& t : s.tokens) {
        cats.push_back(lexicon.categorize(t, pos_fallback, overlay));
    }
    return cats;
}

bool full_parse(const std::vector<CategorySet>& cats,
                const ParseOptions& opts) {
    for (const CategorySet& c : cats) {
        if (c.empty()) return false; // a hole blocks every full span
    }
    Chart chart(cats, opts, /*allow_empty_cells=*/true);
    return chart.contains(0, cats.size(), opts.root);
}

} // namespace

MissingCategoryReport diagnose_failure(const Sentence& sentence,
                                       const Lexicon& lexicon,
                                       const CategorySet& pool,
                                       const ParseOptions& opts,
                                       bool pos_fallback) {
    if (sentence.tokens.empty())
        throw std::invalid_argument("cannot diagnose an empty sentence");

    auto cats = categorize_all(sentence, lexicon, pos_fallback, nullptr);
    if (full_parse(cats, opts))
        throw std::invalid_argument("nothing to diagnose: sentence '" +
                                    sentence.id + "' parses");

    MissingCategoryReport report;
    report.sentence_id = sentence.id;
    for (std::size_t i = 0; i < cats.size(); ++i) {
        if (cats[i].empty()) report.unknown_tokens.push_back(i);
    }

    Chart chart(cats, opts, /*allow_empty_cells=*/true);
    report.maximal_spans = chart.maximal_spans();

    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const AnnotatedToken& t = sentence.tokens[i];
        std::string surface = normalize_word(t.word);
        if (surface.empty()) continue; // no entry can be keyed on it
        LexicalEntry overlay;
        overlay.surface = surface;
        std::string stem = normalize_word(t.stem);
        overlay.stem = stem.empty() ? surface : stem;
        overlay.pos = t.pos;
        for (const Category& c : pool) {
            if (cats[i].count(c)) continue; // no-op addition
            overlay.categories = {c};
            auto repaired =
                categorize_all(sentence, lexicon, pos_fallback, &overlay);
            if (full_parse(repaired, opts)) {
                report.suggestions.push_back({i, c});
            }
        }
    }
    return report;
}

} // namespace ccglex
