#include "ccglex/corpus.hpp"

#include "ccglex/normalize.hpp"

#include <set>
#include <stdexcept>

namespace ccglex {

const char* sentence_kind_name(SentenceKind k) {
    switch (k) {
    case SentenceKind::Simple: return "simple";
    case SentenceKind::Compound: return "compound";
    case SentenceKind::Complex: return "complex";
    }
    return "?";
}

std::size_t AnnotatedCorpus::sentence_count() const {
    std::size_t n = 0;
    for (const Document& d : documents) n += d.sentences.size();
    return n;
}

std::size_t AnnotatedCorpus::token_count() const {
    std::size_t n = 0;
    for (const Document& d : documents)
        for (const Sentence& s : d.sentences) n += s.tokens.size();
    return n;
}

std::set<std::string> AnnotatedCorpus::unique_words() const {
    std::set<std::string> words;
    for_each_token([&](const Sentence&, const AnnotatedToken& t) {
        std::string norm = normalize_word(t.word);
        if (!norm.empty()) words.insert(std::move(norm));
    });
    return words;
}

bool is_iso_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

namespace {

bool has_control_chars(std::string_view s) {
    for (char c : s) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (uc < 0x20 || uc == 0x7f) return true;
    }
    return false;
}

} // namespace

void validate_corpus(const AnnotatedCorpus& corpus) {
    for (std::size_t di = 0; di < corpus.documents.size(); ++di) {
        const Document& d = corpus.documents[di];
        std::string where = "document " + std::to_string(di);
        if (has_control_chars(d.url))
            throw std::invalid_argument(where + ": url contains control characters");
        if (!d.date.empty() && !is_iso_date(d.date))
            throw std::invalid_argument(where + ": date '" + d.date +
                                        "' is not an ISO-8601 calendar date");
        std::set<std::string> ids;
        for (const Sentence& s : d.sentences) {
            std::string swhere = where + ", sentence '" + s.id + "'";
            if (has_control_chars(s.id))
                throw std::invalid_argument(swhere + ": id contains control characters");
            if (!ids.insert(s.id).second)
                throw std::invalid_argument(swhere + ": duplicate sentence id");
            if (s.tokens.empty())
                throw std::invalid_argument(swhere + ": sentence has no tokens");
            for (std::size_t ti = 0; ti < s.tokens.size(); ++ti) {
                const AnnotatedToken& t = s.tokens[ti];
                std::string twhere = swhere + ", token " + std::to_string(ti);
                if (t.word.empty())
                    throw std::invalid_argument(twhere + ": empty word");
                if (has_control_chars(t.word) || has_control_chars(t.stem))
                    throw std::invalid_argument(
                        twhere + ": control characters in word or stem");
            }
        }
    }
}

namespace {

// Closed subordinator list for the clause heuristic.
const std::set<std::string>& subordinators() {
    static const std::set<std::string> words = {
        "when", "if", "because", "since", "although",
        "while", "that", "which", "who"};
    return words;
}

bool is_verbish(const AnnotatedToken& t) {
    return t.pos == Pos::Verb || t.pos == Pos::Modal;
}

// Maximal runs of verb/modal tokens, as [begin, end) index ranges.
std::vector<std::pair<std::size_t, std::size_t>> verb_groups(
    const Sentence& s) {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    std::size_t i = 0;
    while (i < s.tokens.size()) {
        if (!is_verbish(s.tokens[i])) {
            ++i;
            continue;
        }
        std::size_t b = i;
        while (i < s.tokens.size() && is_verbish(s.tokens[i])) ++i;
        groups.emplace_back(b, i);
    }
    return groups;
}

} // namespace

SentenceKind classify_sentence(const Sentence& s) {
    auto groups = verb_groups(s);

    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        if (!subordinators().count(normalize_word(s.tokens[i].word)))
            continue;
        for (const auto& g : groups) {
            if (g.first > i) return SentenceKind::Complex;
        }
    }

    if (groups.size() >= 2) {
        for (std::size_t i = 0; i < s.tokens.size(); ++i) {
            if (s.tokens[i].pos != Pos::Coordinator) continue;
            bool before = false, after = false;
            for (const auto& g : groups) {
                if (g.second <= i) before = true;
                if (g.first > i) after = true;
            }
            if (before && after) return SentenceKind::Compound;
        }
    }

    return SentenceKind::Simple;
}

double CorpusStats::kind_percent(SentenceKind k) const {
    if (sentences == 0) return 0.0;
    return 100.0 * static_cast<double>(
                       kind_counts[static_cast<std::size_t>(k)]) /
           static_cast<double>(sentences);
}

CorpusStats corpus_stats(const AnnotatedCorpus& corpus) {
    CorpusStats stats;
    stats.documents = corpus.documents.size();
    stats.sentences = corpus.sentence_count();
    stats.tokens = corpus.token_count();
    stats.unique_words = corpus.unique_words().size();
    corpus.for_each_sentence([&](const Document&, const Sentence& s) {
        SentenceKind k = classify_sentence(s);
        ++stats.kind_counts[static_cast<std::size_t>(k)];
    });
    corpus.for_each_token([&](const Sentence&, const AnnotatedToken& t) {
        ++stats.pos_counts[static_cast<std::size_t>(t.pos)];
    });
    return stats;
}

} // namespace ccglex
