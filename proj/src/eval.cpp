#include "ccglex/eval.hpp"

#include <stdexcept>

namespace ccglex {

double ParseReport::efficiency() const {
    if (total_sentences == 0) return 0.0;
    return static_cast<double>(parsed_sentences) /
           static_cast<double>(total_sentences);
}

ParseReport parsing_ability(const AnnotatedCorpus& corpus,
                            const Lexicon& lexicon,
                            const EvalOptions& opts) {
    ParseReport report;
    CategorySet pool;
    if (opts.diagnose) pool = lexicon.all_categories();

    corpus.for_each_sentence([&](const Document&, const Sentence& s) {
        ++report.total_sentences;
        SentenceOutcome outcome;
        outcome.id = s.id;
        for (const AnnotatedToken& t : s.tokens) {
            outcome.token_pos.push_back(t.pos);
            outcome.token_words.push_back(t.word);
        }

        std::vector<CategorySet> cats;
        cats.reserve(s.tokens.size());
        bool hole = false;
        for (const AnnotatedToken& t : s.tokens) {
            cats.push_back(lexicon.categorize(t, opts.pos_fallback));
            if (cats.back().empty()) hole = true;
        }

        if (!hole) {
            auto derivs = cky_parse(cats, opts.parse);
            if (!derivs.empty()) {
                outcome.parsed = true;
                outcome.derivation_count = derivs.size();
                outcome.first = derivs.front();
                ++report.parsed_sentences;
            }
        }
        if (!outcome.parsed && opts.diagnose) {
            outcome.diagnosis = diagnose_failure(s, lexicon, pool,
                                                 opts.parse,
                                                 opts.pos_fallback);
        }
        report.outcomes.push_back(std::move(outcome));
    });
    return report;
}

namespace {

Atom final_result_atom(const Category& c) {
    Category cur = c;
    while (cur.is_complex()) cur = cur.result();
    return cur.atom();
}

// The lexical head of a derivation: follow the functor child.
Pos head_pos(const Derivation& d, const std::vector<Pos>& token_pos) {
    switch (d.rule) {
    case Rule::Lex: return token_pos[d.begin];
    case Rule::BackwardApplication:
    case Rule::BackwardComposition:
        return head_pos(*d.children[1], token_pos);
    case Rule::ConjPromotion:
        return head_pos(*d.children[0], token_pos);
    default: return head_pos(*d.children[0], token_pos);
    }
}

void walk_svo(const Derivation& d, const std::vector<Pos>& token_pos,
              SvoCounts& counts) {
    if (d.rule == Rule::Lex) {
        if (token_pos[d.begin] == Pos::Verb) ++counts.verbs;
        return;
    }
    if (d.rule == Rule::BackwardApplication) {
        const Category& functor = d.children[1]->category;
        if (functor.is_complex() && functor.argument().is_atomic() &&
            functor.argument().atom() == Atom::NP &&
            final_result_atom(functor) == Atom::S) {
            ++counts.subjects;
        }
    }
    if (d.rule == Rule::ForwardApplication) {
        const Category& functor = d.children[0]->category;
        bool np_or_pp = functor.is_complex() &&
                        functor.argument().is_atomic() &&
                        (functor.argument().atom() == Atom::NP ||
                         functor.argument().atom() == Atom::PP);
        if (np_or_pp) {
            Pos head = head_pos(*d.children[0], token_pos);
            if (head == Pos::Verb || head == Pos::Modal) ++counts.objects;
        }
    }
    for (const auto& c : d.children) walk_svo(*c, token_pos, counts);
}

} // namespace

SvoCounts svo_counts(const Derivation& d,
                     const std::vector<Pos>& token_pos) {
    if (d.begin != 0 || d.end != token_pos.size())
        throw std::invalid_argument(
            "svo counting requires a full-span derivation");
    SvoCounts counts;
    walk_svo(d, token_pos, counts);
    return counts;
}

SvoProfile svo_profile(const ParseReport& report) {
    SvoProfile profile;
    for (const SentenceOutcome& o : report.outcomes) {
        if (!o.parsed || !o.first) continue;
        SvoCounts counts = svo_counts(*o.first, o.token_pos);
        profile.per_sentence.emplace_back(o.id, counts);
        ++profile.histogram[{counts.subjects, counts.objects,
                             counts.verbs}];
    }
    return profile;
}

double unsupported_structure_fraction(const ParseReport& report) {
    if (report.total_sentences == 0) return 0.0;
    std::size_t unsupported = 0;
    for (const SentenceOutcome& o : report.outcomes) {
        if (!o.parsed && o.diagnosis && o.diagnosis->suggestions.empty())
            ++unsupported;
    }
    return static_cast<double>(unsupported) /
           static_cast<double>(report.total_sentences);
}

} // namespace ccglex
