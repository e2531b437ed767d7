#include "ccglex/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ccglex {

double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

namespace {

std::string fixed4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

} // namespace

Json stats_to_json(const CorpusStats& stats) {
    Json kinds;
    Json percents;
    for (SentenceKind k : {SentenceKind::Simple, SentenceKind::Compound,
                           SentenceKind::Complex}) {
        kinds[sentence_kind_name(k)] =
            stats.kind_counts[static_cast<std::size_t>(k)];
        percents[sentence_kind_name(k)] = round4(stats.kind_percent(k));
    }
    Json pos;
    for (Pos p : kAllPos) {
        pos[pos_name(p)] = stats.pos_counts[static_cast<std::size_t>(p)];
    }
    return Json{{"documents", stats.documents},
                {"sentences", stats.sentences},
                {"tokens", stats.tokens},
                {"unique_words", stats.unique_words},
                {"sentence_kinds", kinds},
                {"sentence_kind_percent", percents},
                {"pos_counts", pos}};
}

Json augmentation_to_json(const AugmentationReport& report) {
    Json added;
    for (Pos p : kAllPos) {
        added[pos_name(p)] =
            report.added_per_pos[static_cast<std::size_t>(p)];
    }
    return Json{{"entries_before", report.entries_before},
                {"entries_after", report.entries_after},
                {"total_added", report.total_added()},
                {"added_per_pos", added}};
}

Json coverage_to_json(const CoverageReport& report) {
    return Json{{"words_in_both", report.words_in_both},
                {"unique_corpus_words", report.unique_corpus_words},
                {"coverage", round4(report.coverage)}};
}

namespace {

Json diagnosis_to_json(const MissingCategoryReport& d) {
    Json spans = Json::array();
    for (const auto& [b, e] : d.maximal_spans) {
        spans.push_back(Json{{"begin", b}, {"end", e}});
    }
    Json suggestions = Json::array();
    for (const RepairSuggestion& s : d.suggestions) {
        suggestions.push_back(
            Json{{"token", s.token}, {"category", s.category.to_string()}});
    }
    return Json{{"unknown_tokens", d.unknown_tokens},
                {"maximal_spans", spans},
                {"suggestions", suggestions}};
}

} // namespace

Json parse_report_to_json(const ParseReport& report) {
    Json outcomes = Json::array();
    for (const SentenceOutcome& o : report.outcomes) {
        Json j{{"id", o.id},
               {"outcome", o.parsed ? "parsed" : "failed"},
               {"derivations", o.derivation_count}};
        if (o.parsed && o.first) {
            SvoCounts svo = svo_counts(*o.first, o.token_pos);
            j["subjects"] = svo.subjects;
            j["objects"] = svo.objects;
            j["verbs"] = svo.verbs;
        }
        if (o.diagnosis) j["diagnosis"] = diagnosis_to_json(*o.diagnosis);
        outcomes.push_back(std::move(j));
    }
    return Json{{"total_sentences", report.total_sentences},
                {"parsed_sentences", report.parsed_sentences},
                {"efficiency", round4(report.efficiency())},
                {"unsupported_structure_fraction",
                 round4(unsupported_structure_fraction(report))},
                {"sentences", outcomes}};
}

Json svo_profile_to_json(const SvoProfile& profile) {
    Json sentences = Json::array();
    for (const auto& [id, svo] : profile.per_sentence) {
        sentences.push_back(Json{{"id", id},
                                 {"subjects", svo.subjects},
                                 {"objects", svo.objects},
                                 {"verbs", svo.verbs}});
    }
    Json histogram = Json::array();
    for (const auto& [key, count] : profile.histogram) {
        histogram.push_back(Json{{"subjects", std::get<0>(key)},
                                 {"objects", std::get<1>(key)},
                                 {"verbs", std::get<2>(key)},
                                 {"count", count}});
    }
    return Json{{"profiled_sentences", profile.per_sentence.size()},
                {"sentences", sentences},
                {"histogram", histogram}};
}

void write_sentence_kind_csv(const CorpusStats& stats, std::ostream& out) {
    out << "kind,count,percent\n";
    for (SentenceKind k : {SentenceKind::Simple, SentenceKind::Compound,
                           SentenceKind::Complex}) {
        out << sentence_kind_name(k) << ','
            << stats.kind_counts[static_cast<std::size_t>(k)] << ','
            << fixed4(stats.kind_percent(k)) << '\n';
    }
}

void write_sentence_csv(const ParseReport& report, std::ostream& out) {
    out << "sentence_id,outcome,derivations,subjects,objects,verbs\n";
    for (const SentenceOutcome& o : report.outcomes) {
        out << o.id << ',' << (o.parsed ? "parsed" : "failed") << ','
            << o.derivation_count << ',';
        if (o.parsed && o.first) {
            SvoCounts svo = svo_counts(*o.first, o.token_pos);
            out << svo.subjects << ',' << svo.objects << ',' << svo.verbs;
        } else {
            out << ",,";
        }
        out << '\n';
    }
}

void write_failure_csv(const ParseReport& report, std::ostream& out) {
    out << "sentence_id,unknown_tokens,maximal_spans,suggestions\n";
    for (const SentenceOutcome& o : report.outcomes) {
        if (o.parsed || !o.diagnosis) continue;
        const MissingCategoryReport& d = *o.diagnosis;
        out << o.id << ',';
        for (std::size_t i = 0; i < d.unknown_tokens.size(); ++i) {
            if (i) out << ' ';
            out << d.unknown_tokens[i];
        }
        out << ',';
        for (std::size_t i = 0; i < d.maximal_spans.size(); ++i) {
            if (i) out << ' ';
            out << d.maximal_spans[i].first << '-'
                << d.maximal_spans[i].second;
        }
        out << ',';
        for (std::size_t i = 0; i < d.suggestions.size(); ++i) {
            if (i) out << ' ';
            out << d.suggestions[i].token << ':'
                << d.suggestions[i].category.to_string();
        }
        out << '\n';
    }
}

} // namespace ccglex
