#pragma once

#include "ccglex/chart.hpp"
#include "ccglex/corpus.hpp"
#include "ccglex/diagnose.hpp"
#include "ccglex/lexicon.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace ccglex {

struct EvalOptions {
    ParseOptions parse;
    bool pos_fallback = true;
    bool diagnose = true; // run the repair search on failures
};

struct SvoCounts {
    std::size_t subjects = 0;
    std::size_t objects = 0;
    std::size_t verbs = 0;

    friend bool operator==(const SvoCounts&, const SvoCounts&) = default;
};

struct SentenceOutcome {
    std::string id;
    bool parsed = false;
    std::size_t derivation_count = 0;
    DerivationPtr first;                          // canonical first, if parsed
    std::optional<MissingCategoryReport> diagnosis; // if failed and diagnosed
    std::vector<Pos> token_pos;
    std::vector<std::string> token_words;
};

struct ParseReport {
    std::size_t total_sentences = 0;
    std::size_t parsed_sentences = 0;
    std::vector<SentenceOutcome> outcomes;

    double efficiency() const; // exact ratio, 0 for an empty corpus
};

/// Parses every sentence in corpus order. Tokens are categorized through
/// the lexicon (with pos-default fallback unless disabled); sentences
/// with uncategorizable tokens or no full-span root derivation are
/// recorded as failures and, by default, diagnosed against the pool of
/// all categories present in the lexicon. Never throws per-sentence.
ParseReport parsing_ability(const AnnotatedCorpus& corpus,
                            const Lexicon& lexicon,
                            const EvalOptions& opts = {});

/// Counts over one full-span derivation:
///   verbs    - LEX leaves whose token is tagged verb;
///   subjects - backward applications consuming an atomic np into a
///              functor whose final result is s;
///   objects  - forward applications consuming an atomic np or pp into a
///              verb- or modal-headed functor.
/// token_pos is indexed by token position; its size fixes the expected
/// span. Throws std::invalid_argument for a non-full-span derivation.
SvoCounts svo_counts(const Derivation& d, const std::vector<Pos>& token_pos);

struct SvoProfile {
    std::vector<std::pair<std::string, SvoCounts>> per_sentence;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>
        histogram;
};

/// Profiles the canonical first derivation of each parsed sentence;
/// failed sentences are excluded.
SvoProfile svo_profile(const ParseReport& report);

/// Fraction of all sentences whose failure no single category addition
/// from the pool could repair, i.e. structures the grammar does not
/// support at all.
double unsupported_structure_fraction(const ParseReport& report);

} // namespace ccglex
