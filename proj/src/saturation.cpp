#include "ccglex/saturation.hpp"

#include "ccglex/normalize.hpp"

#include <ostream>
#include <stdexcept>

namespace ccglex {

std::vector<StreamToken> token_stream(const AnnotatedCorpus& corpus) {
    std::vector<StreamToken> stream;
    stream.reserve(corpus.token_count());
    corpus.for_each_token([&](const Sentence&, const AnnotatedToken& t) {
        stream.push_back({normalize_word(t.word), t.pos});
    });
    return stream;
}

std::vector<SampleRange> segment(std::size_t total, std::size_t k) {
    if (k == 0) throw std::invalid_argument("sample count must be positive");
    if (k > total)
        throw std::invalid_argument(
            "sample count " + std::to_string(k) + " exceeds token count " +
            std::to_string(total));
    std::vector<SampleRange> samples;
    samples.reserve(k);
    std::size_t base = total / k;
    std::size_t extra = total % k;
    std::size_t at = 0;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t size = base + (i < extra ? 1 : 0);
        samples.push_back({at, at + size});
        at += size;
    }
    return samples;
}

std::vector<SampleRange> segment(const AnnotatedCorpus& corpus,
                                 std::size_t k) {
    return segment(corpus.token_count(), k);
}

Selector Selector::all_words() { return Selector{}; }

Selector Selector::pos_filter(Pos pos) {
    Selector s;
    s.kind = Kind::PosFilter;
    s.pos = pos;
    return s;
}

Selector Selector::term_list(std::set<std::string> terms) {
    Selector s;
    s.kind = Kind::TermList;
    s.terms = std::move(terms);
    return s;
}

bool Selector::matches(const StreamToken& t) const {
    if (t.norm.empty()) return false;
    switch (kind) {
    case Kind::AllWords: return true;
    case Kind::PosFilter: return t.pos == pos;
    case Kind::TermList: return terms.count(t.norm) > 0;
    }
    return false;
}

std::string Selector::describe() const {
    switch (kind) {
    case Kind::AllWords: return "all-words";
    case Kind::PosFilter: return std::string("pos=") + pos_name(pos);
    case Kind::TermList:
        return "terms(" + std::to_string(terms.size()) + ")";
    }
    return "?";
}

SaturationCurve cumulative_frequency(
    const std::vector<StreamToken>& stream,
    const std::vector<SampleRange>& samples,
    const std::set<std::string>& terms) {
    if (terms.empty())
        throw std::invalid_argument("term set must not be empty");
    SaturationCurve curve;
    curve.samples = samples;
    curve.descriptor = "frequency:terms(" + std::to_string(terms.size()) +
                       ")";
    std::size_t running = 0;
    for (const SampleRange& r : samples) {
        std::size_t count = 0;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            if (!stream[i].norm.empty() && terms.count(stream[i].norm))
                ++count;
        }
        running += count;
        curve.per_sample.push_back(count);
        curve.cumulative.push_back(running);
    }
    return curve;
}

SaturationCurve new_type_curve(const std::vector<StreamToken>& stream,
                               const std::vector<SampleRange>& samples,
                               const Selector& selector, double epsilon,
                               std::size_t window) {
    SaturationCurve curve;
    curve.samples = samples;
    curve.descriptor = "new-types:" + selector.describe();
    std::set<std::string> seen;
    std::size_t running = 0;
    for (const SampleRange& r : samples) {
        std::size_t fresh = 0;
        for (std::size_t i = r.begin; i < r.end; ++i) {
            if (!selector.matches(stream[i])) continue;
            if (seen.insert(stream[i].norm).second) ++fresh;
        }
        running += fresh;
        curve.per_sample.push_back(fresh);
        curve.cumulative.push_back(running);
    }
    curve.saturation = saturation_index(curve, epsilon, window);
    return curve;
}

std::optional<std::size_t> saturation_index(const SaturationCurve& curve,
                                            double epsilon,
                                            std::size_t window) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("epsilon must be in (0, 1)");
    if (window == 0)
        throw std::invalid_argument("window must be at least 1");
    std::size_t k = curve.per_sample.size();
    if (k == 0) return std::nullopt;
    double threshold =
        epsilon * static_cast<double>(curve.cumulative.back());
    for (std::size_t i = 1; i <= k; ++i) {
        std::size_t last = std::min(i + window, k);
        if (last <= i) continue; // no sample after i within the curve
        bool ok = true;
        for (std::size_t j = i + 1; j <= last; ++j) {
            if (static_cast<double>(curve.per_sample[j - 1]) > threshold) {
                ok = false;
                break;
            }
        }
        if (ok) return i;
    }
    return std::nullopt;
}

void write_curve_csv(const SaturationCurve& curve, std::ostream& out) {
    out << "sample,new,cumulative\n";
    for (std::size_t i = 0; i < curve.per_sample.size(); ++i) {
        out << (i + 1) << ',' << curve.per_sample[i] << ','
            << curve.cumulative[i] << '\n';
    }
    out << "# saturation_index=";
    if (curve.saturation)
        out << *curve.saturation;
    else
        out << "none";
    out << '\n';
}

} // namespace ccglex
