#pragma once

#include "ccglex/corpus.hpp"
#include "ccglex/pos.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ccglex {

inline constexpr double kDefaultSaturationEpsilon = 0.02;
inline constexpr std::size_t kDefaultSaturationWindow = 3;

/// One corpus token flattened into reading order.
struct StreamToken {
    std::string norm; // normalized word; may be empty for punctuation
    Pos pos = Pos::Noun;
};

std::vector<StreamToken> token_stream(const AnnotatedCorpus& corpus);

struct SampleRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const SampleRange&, const SampleRange&) = default;
};

/// Splits `total` tokens into k contiguous samples whose sizes differ by
/// at most one (the leading samples take the extra token). Token-exact:
/// sentence boundaries may be crossed. Throws std::invalid_argument when
/// k is zero or exceeds the token count.
std::vector<SampleRange> segment(std::size_t total, std::size_t k);
std::vector<SampleRange> segment(const AnnotatedCorpus& corpus,
                                 std::size_t k);

/// What a curve tracks across samples.
struct Selector {
    enum class Kind { AllWords, PosFilter, TermList };
    Kind kind = Kind::AllWords;
    Pos pos = Pos::Noun;
    std::set<std::string> terms;

    static Selector all_words();
    static Selector pos_filter(Pos pos);
    static Selector term_list(std::set<std::string> terms);

    bool matches(const StreamToken& t) const;
    std::string describe() const;
};

/// Per-sample counts with running totals. For new-type curves,
/// per_sample[i] is the number of tracked types first seen in sample
/// i+1; for occurrence curves it is the number of matching tokens.
struct SaturationCurve {
    std::vector<SampleRange> samples;
    std::vector<std::size_t> per_sample;
    std::vector<std::size_t> cumulative;
    std::optional<std::size_t> saturation; // 1-based sample index
    std::string descriptor;
};

/// Occurrence counts of the (normalized) term set per sample.
SaturationCurve cumulative_frequency(const std::vector<StreamToken>& stream,
                                     const std::vector<SampleRange>& samples,
                                     const std::set<std::string>& terms);

/// Distinct-type growth for the selector, with the saturation index
/// computed at the given thresholds.
SaturationCurve new_type_curve(
    const std::vector<StreamToken>& stream,
    const std::vector<SampleRange>& samples, const Selector& selector,
    double epsilon = kDefaultSaturationEpsilon,
    std::size_t window = kDefaultSaturationWindow);

/// Smallest 1-based index i such that every sample j in (i, i+window],
/// clamped to the curve end and requiring at least one such j, satisfies
/// per_sample[j] <= epsilon * cumulative[end]. None when no i qualifies.
/// Throws std::invalid_argument unless 0 < epsilon < 1 and window >= 1.
std::optional<std::size_t> saturation_index(const SaturationCurve& curve,
                                            double epsilon,
                                            std::size_t window);

/// CSV: header `sample,new,cumulative`, one row per sample, then a
/// trailing comment line `# saturation_index=<i|none>`.
void write_curve_csv(const SaturationCurve& curve, std::ostream& out);

} // namespace ccglex
