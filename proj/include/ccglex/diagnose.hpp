#pragma once

#include "ccglex/chart.hpp"
#include "ccglex/corpus.hpp"
#include "ccglex/lexicon.hpp"

#include <utility>
#include <vector>

namespace ccglex {

struct RepairSuggestion {
    std::size_t token = 0;
    Category category;

    friend bool operator==(const RepairSuggestion& a,
                           const RepairSuggestion& b) {
        return a.token == b.token && a.category == b.category;
    }
};

/// Why a sentence failed to parse: tokens the lexicon cannot categorize,
/// the largest chart fragments that did assemble, and every single
/// lexicon addition from the candidate pool that makes the whole
/// sentence parse (each one verified by an actual re-parse).
struct MissingCategoryReport {
    std::string sentence_id;
    std::vector<std::size_t> unknown_tokens;
    std::vector<std::pair<std::size_t, std::size_t>> maximal_spans;
    std::vector<RepairSuggestion> suggestions;
};

/// Searches pool x token positions for single-category repairs. A
/// candidate (i, c) simulates add_entry({surface_i, stem_i, pos_i, {c}})
/// on the lexicon, so every token sharing that surface is re-categorized
/// exactly as a real lexicon edit would. Throws std::invalid_argument
/// when the sentence already parses.
MissingCategoryReport diagnose_failure(const Sentence& sentence,
                                       const Lexicon& lexicon,
                                       const CategorySet& pool,
                                       const ParseOptions& opts = {},
                                       bool pos_fallback = true);

} // namespace ccglex
