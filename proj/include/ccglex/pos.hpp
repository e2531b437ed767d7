#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace ccglex {

/// The nine-tag part-of-speech set used by corpus annotation and the
/// lexicon. Closed: anything else is a validation error.
enum class Pos {
    Noun,
    Pronoun,
    Verb,
    Adverb,
    Adjective,
    Preposition,
    Coordinator,
    Determiner,
    Modal,
};

inline constexpr std::size_t kPosCount = 9;

inline constexpr std::array<Pos, kPosCount> kAllPos = {
    Pos::Noun,        Pos::Pronoun,     Pos::Verb,
    Pos::Adverb,      Pos::Adjective,   Pos::Preposition,
    Pos::Coordinator, Pos::Determiner,  Pos::Modal,
};

const char* pos_name(Pos p);
std::optional<Pos> pos_from_name(std::string_view name);

} // namespace ccglex
