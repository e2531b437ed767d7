#pragma once

#include "ccglex/category.hpp"
#include "ccglex/corpus.hpp"
#include "ccglex/pos.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccglex {

/// One lexicon/morphology entry: a normalized surface form with its stem,
/// part of speech and the set of categories it may carry.
struct LexicalEntry {
    std::string surface;
    std::string stem;
    Pos pos = Pos::Noun;
    CategorySet categories;

    /// Throws std::invalid_argument unless surface and stem are
    /// non-empty, already normalized, and at least one category is given.
    void validate() const;
};

struct AugmentationReport {
    std::array<std::size_t, kPosCount> added_per_pos{};
    std::size_t entries_before = 0;
    std::size_t entries_after = 0;

    std::size_t total_added() const;
};

struct CoverageReport {
    std::size_t words_in_both = 0;
    std::size_t unique_corpus_words = 0;
    double coverage = 0.0; // exact ratio; rendering rounds to 4 decimals
};

class LexiconFormatError : public std::runtime_error {
public:
    LexiconFormatError(const std::string& what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Surface-to-category store keyed by (surface, pos), with a built-in
/// default-category table per part of speech for words never seen in the
/// lexicon. Reads are const and freely concurrent; mutation requires
/// exclusive access (no internal locking).
class Lexicon {
public:
    using Key = std::pair<std::string, Pos>;

    Lexicon();

    std::size_t size() const { return entries_.size(); }

    /// All entries whose surface matches the normalized word, across all
    /// parts of speech. Empty when unknown.
    std::vector<LexicalEntry> lookup(std::string_view surface) const;

    /// Deterministic, non-empty; the first element is the category used
    /// as most typical for unseen words of this part of speech.
    const std::vector<Category>& default_categories(Pos pos) const;

    /// True iff the (surface, pos) key was new. An existing key merges
    /// the category sets and returns false.
    bool add_entry(const LexicalEntry& entry);

    /// Adds an entry for every distinct (normalized word, pos) pair in
    /// the corpus that is absent here, with the stem from the first
    /// corpus occurrence and default categories for the pos. Running it
    /// twice over the same corpus adds nothing the second time.
    AugmentationReport augment_from_corpus(const AnnotatedCorpus& corpus);

    /// Fraction of the corpus's unique words present in the lexicon
    /// under any part of speech. Throws std::invalid_argument when the
    /// corpus has no words.
    CoverageReport vocabulary_coverage(const AnnotatedCorpus& corpus) const;

    /// Union of every category set in the store; the candidate pool for
    /// failure diagnosis.
    CategorySet all_categories() const;

    /// Category assignment for a corpus token: entries matching the
    /// token's pos win, otherwise all entries for the surface, otherwise
    /// the pos defaults (when pos_fallback). The optional overlay acts as
    /// one extra entry, used to test single-category repairs.
    CategorySet categorize(const AnnotatedToken& token,
                           bool pos_fallback = true,
                           const LexicalEntry* overlay = nullptr) const;

    /// Line format: surface<TAB>stem<TAB>pos<TAB>cat;cat;...
    /// sorted by (surface, pos name); files diff cleanly.
    static Lexicon read(std::istream& in);
    void write(std::ostream& out) const;

    const std::map<Key, LexicalEntry>& entries() const { return entries_; }

private:
    std::map<Key, LexicalEntry> entries_;
    std::map<Pos, std::vector<Category>> defaults_;
};

} // namespace ccglex
