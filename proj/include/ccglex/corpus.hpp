#pragma once

#include "ccglex/category.hpp"
#include "ccglex/pos.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ccglex {

struct AnnotatedToken {
    std::string word; // surface form as written, punctuation included
    std::string stem;
    Pos pos = Pos::Noun;
    std::optional<Category> category; // gold annotation, if any

    friend bool operator==(const AnnotatedToken& a,
                           const AnnotatedToken& b) = default;
};

enum class SentenceKind { Simple, Compound, Complex };

const char* sentence_kind_name(SentenceKind k);

struct Sentence {
    std::string id; // unique within its document
    std::vector<AnnotatedToken> tokens;
    std::optional<SentenceKind> kind; // not persisted to XML

    friend bool operator==(const Sentence& a, const Sentence& b) = default;
};

struct Document {
    std::string url;
    std::string date; // ISO-8601 calendar date or empty
    std::vector<Sentence> sentences;

    friend bool operator==(const Document& a, const Document& b) = default;
};

/// A POS- and stem-annotated corpus. Totals are always computed from the
/// content, never cached.
struct AnnotatedCorpus {
    std::vector<Document> documents;

    std::size_t sentence_count() const;
    std::size_t token_count() const;
    /// Distinct normalized word forms, punctuation-only tokens excluded.
    std::set<std::string> unique_words() const;

    template <typename Fn> void for_each_sentence(Fn&& fn) const {
        for (const Document& d : documents)
            for (const Sentence& s : d.sentences) fn(d, s);
    }
    template <typename Fn> void for_each_token(Fn&& fn) const {
        for (const Document& d : documents)
            for (const Sentence& s : d.sentences)
                for (const AnnotatedToken& t : s.tokens) fn(s, t);
    }

    friend bool operator==(const AnnotatedCorpus& a,
                           const AnnotatedCorpus& b) = default;
};

/// Checks model invariants: non-empty sentences, non-empty surfaces, no
/// control characters, per-document unique sentence ids, dates that are
/// ISO-8601 calendar dates when non-empty. Throws std::invalid_argument
/// naming the first offender.
void validate_corpus(const AnnotatedCorpus& corpus);

bool is_iso_date(std::string_view s);

/// POS-based clause heuristic. A sentence is complex when a subordinating
/// word introduces a later verb group, compound when two verb groups are
/// joined by a coordinator, and simple otherwise. Works on unparsed input.
SentenceKind classify_sentence(const Sentence& s);

struct CorpusStats {
    std::size_t documents = 0;
    std::size_t sentences = 0;
    std::size_t tokens = 0;
    std::size_t unique_words = 0;
    std::array<std::size_t, 3> kind_counts{}; // simple, compound, complex
    std::array<std::size_t, kPosCount> pos_counts{};

    double kind_percent(SentenceKind k) const;
};

CorpusStats corpus_stats(const AnnotatedCorpus& corpus);

} // namespace ccglex
