#pragma once

#include "ccglex/corpus.hpp"
#include "ccglex/eval.hpp"
#include "ccglex/lexicon.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ccglex {

using Json = nlohmann::ordered_json;

/// Rounds to 4 decimal places; the reporting precision for every ratio.
double round4(double x);

Json stats_to_json(const CorpusStats& stats);
Json augmentation_to_json(const AugmentationReport& report);
Json coverage_to_json(const CoverageReport& report);
Json parse_report_to_json(const ParseReport& report);
Json svo_profile_to_json(const SvoProfile& profile);

/// `kind,count,percent` rows, percent to 4 decimals.
void write_sentence_kind_csv(const CorpusStats& stats, std::ostream& out);

/// `sentence_id,outcome,derivations,subjects,objects,verbs`; the svo
/// columns are empty for failed sentences.
void write_sentence_csv(const ParseReport& report, std::ostream& out);

/// `sentence_id,unknown_tokens,maximal_spans,suggestions` for failed
/// sentences; spans as b-e, suggestions as idx:category, both
/// space-separated within the field.
void write_failure_csv(const ParseReport& report, std::ostream& out);

} // namespace ccglex
