#include "ccglex/lexicon.hpp"

#include "ccglex/normalize.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ccglex {

void LexicalEntry::validate() const {
    if (surface.empty())
        throw std::invalid_argument("lexical entry has empty surface");
    if (stem.empty())
        throw std::invalid_argument("lexical entry '" + surface +
                                    "' has empty stem");
    if (normalize_word(surface) != surface)
        throw std::invalid_argument("surface '" + surface +
                                    "' is not normalized");
    if (normalize_word(stem) != stem)
        throw std::invalid_argument("stem '" + stem + "' is not normalized");
    if (categories.empty())
        throw std::invalid_argument("lexical entry '" + surface +
                                    "' has no categories");
}

std::size_t AugmentationReport::total_added() const {
    std::size_t n = 0;
    for (std::size_t c : added_per_pos) n += c;
    return n;
}

LexiconFormatError::LexiconFormatError(const std::string& what,
                                       std::size_t line)
    : std::runtime_error("lexicon line " + std::to_string(line) + ": " +
                         what),
      line_(line) {}

namespace {

std::vector<Category> parse_defaults(
    std::initializer_list<const char*> texts) {
    std::vector<Category> out;
    for (const char* t : texts) out.push_back(Category::parse(t));
    return out;
}

} // namespace

Lexicon::Lexicon() {
    defaults_[Pos::Noun] = parse_defaults({"n"});
    defaults_[Pos::Pronoun] = parse_defaults({"np"});
    defaults_[Pos::Verb] =
        parse_defaults({"s\\np", "(s\\np)/np", "(s\\np)/pp"});
    defaults_[Pos::Modal] = parse_defaults({"(s\\np)/(s\\np)"});
    // n/n prenominal, np/np over full noun phrases, s\np predicative.
    defaults_[Pos::Adjective] = parse_defaults({"n/n", "np/np", "s\\np"});
    // Post-verbal modifier, sentence-initial, sentence-final.
    defaults_[Pos::Adverb] =
        parse_defaults({"(s\\np)\\(s\\np)", "s/s", "s\\s"});
    // Noun-phrase attachment, verb complement, sentence-initial phrase,
    // particle bound to the preceding verb.
    defaults_[Pos::Preposition] = parse_defaults(
        {"(np\\np)/np", "pp/np", "(s/s)/np", "(s\\np)\\(s\\np)"});
    defaults_[Pos::Determiner] = parse_defaults({"np/n"});
    // Phrase-level pairs, clause link, sentence-initial link.
    defaults_[Pos::Coordinator] = parse_defaults(
        {"np\\np/np", "n\\n/n", "(s\\s)/s", "(s/s)/s"});
}

std::vector<LexicalEntry> Lexicon::lookup(std::string_view surface) const {
    std::string norm = normalize_word(surface);
    std::vector<LexicalEntry> out;
    if (norm.empty()) return out;
    auto it = entries_.lower_bound(Key{norm, Pos::Noun});
    for (; it != entries_.end() && it->first.first == norm; ++it) {
        out.push_back(it->second);
    }
    return out;
}

const std::vector<Category>& Lexicon::default_categories(Pos pos) const {
    return defaults_.at(pos);
}

bool Lexicon::add_entry(const LexicalEntry& entry) {
    entry.validate();
    auto [it, inserted] =
        entries_.try_emplace(Key{entry.surface, entry.pos}, entry);
    if (!inserted) {
        it->second.categories.insert(entry.categories.begin(),
                                     entry.categories.end());
    }
    return inserted;
}

AugmentationReport Lexicon::augment_from_corpus(
    const AnnotatedCorpus& corpus) {
    AugmentationReport report;
    report.entries_before = entries_.size();
    corpus.for_each_token([&](const Sentence&, const AnnotatedToken& t) {
        std::string surface = normalize_word(t.word);
        if (surface.empty()) return; // punctuation-only token
        Key key{surface, t.pos};
        if (entries_.count(key)) return;
        LexicalEntry entry;
        entry.surface = surface;
        std::string stem = normalize_word(t.stem);
        entry.stem = stem.empty() ? surface : stem;
        entry.pos = t.pos;
        const auto& defaults = default_categories(t.pos);
        entry.categories.insert(defaults.begin(), defaults.end());
        entries_.emplace(std::move(key), std::move(entry));
        ++report.added_per_pos[static_cast<std::size_t>(t.pos)];
    });
    report.entries_after = entries_.size();
    return report;
}

CoverageReport Lexicon::vocabulary_coverage(
    const AnnotatedCorpus& corpus) const {
    std::set<std::string> words = corpus.unique_words();
    if (words.empty())
        throw std::invalid_argument(
            "coverage undefined: corpus has no words");
    CoverageReport report;
    report.unique_corpus_words = words.size();
    for (const std::string& w : words) {
        auto it = entries_.lower_bound(Key{w, Pos::Noun});
        if (it != entries_.end() && it->first.first == w)
            ++report.words_in_both;
    }
    report.coverage = static_cast<double>(report.words_in_both) /
                      static_cast<double>(report.unique_corpus_words);
    return report;
}

CategorySet Lexicon::all_categories() const {
    CategorySet out;
    for (const auto& [key, entry] : entries_) {
        (void)key;
        out.insert(entry.categories.begin(), entry.categories.end());
    }
    return out;
}

CategorySet Lexicon::categorize(const AnnotatedToken& token,
                                bool pos_fallback,
                                const LexicalEntry* overlay) const {
    std::string norm = normalize_word(token.word);
    CategorySet same_pos;
    CategorySet any_pos;
    if (!norm.empty()) {
        auto it = entries_.lower_bound(Key{norm, Pos::Noun});
        for (; it != entries_.end() && it->first.first == norm; ++it) {
            any_pos.insert(it->second.categories.begin(),
                           it->second.categories.end());
            if (it->first.second == token.pos)
                same_pos.insert(it->second.categories.begin(),
                                it->second.categories.end());
        }
        if (overlay && overlay->surface == norm) {
            any_pos.insert(overlay->categories.begin(),
                           overlay->categories.end());
            if (overlay->pos == token.pos)
                same_pos.insert(overlay->categories.begin(),
                                overlay->categories.end());
        }
    }
    if (!same_pos.empty()) return same_pos;
    if (!any_pos.empty()) return any_pos;
    if (pos_fallback) {
        const auto& defaults = default_categories(token.pos);
        return CategorySet(defaults.begin(), defaults.end());
    }
    return {};
}

Lexicon Lexicon::read(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() != 4)
            throw LexiconFormatError(
                "expected 4 tab-separated fields, found " +
                    std::to_string(fields.size()),
                line_no);
        LexicalEntry entry;
        entry.surface = fields[0];
        entry.stem = fields[1];
        std::optional<Pos> pos = pos_from_name(fields[2]);
        if (!pos)
            throw LexiconFormatError("invalid pos '" + fields[2] + "'",
                                     line_no);
        entry.pos = *pos;
        std::stringstream cats(fields[3]);
        std::string cat_text;
        while (std::getline(cats, cat_text, ';')) {
            if (cat_text.empty()) continue;
            try {
                entry.categories.insert(Category::parse(cat_text));
            } catch (const CategoryParseError& e) {
                throw LexiconFormatError(e.what(), line_no);
            }
        }
        try {
            entry.validate();
        } catch (const std::invalid_argument& e) {
            throw LexiconFormatError(e.what(), line_no);
        }
        lex.add_entry(entry);
    }
    return lex;
}

void Lexicon::write(std::ostream& out) const {
    std::vector<const LexicalEntry*> sorted;
    sorted.reserve(entries_.size());
    for (const auto& [key, entry] : entries_) {
        (void)key;
        sorted.push_back(&entry);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const LexicalEntry* a, const LexicalEntry* b) {
                  if (a->surface != b->surface) return a->surface < b->surface;
                  return std::string_view(pos_name(a->pos)) <
                         std::string_view(pos_name(b->pos));
              });
    for (const LexicalEntry* e : sorted) {
        out << e->surface << '\t' << e->stem << '\t' << pos_name(e->pos)
            << '\t';
        bool first = true;
        for (const Category& c : e->categories) {
            if (!first) out << ';';
            out << c.to_string();
            first = false;
        }
        out << '\n';
    }
}

} // namespace ccglex
