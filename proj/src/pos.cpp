#include "ccglex/pos.hpp"

namespace ccglex {

namespace {

constexpr std::array<const char*, kPosCount> kPosNames = {
    "noun",        "pronoun",     "verb",       "adverb", "adjective",
    "preposition", "coordinator", "determiner", "modal",
};

} // namespace

const char* pos_name(Pos p) { return kPosNames[static_cast<std::size_t>(p)]; }

std::optional<Pos> pos_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kPosNames.size(); ++i) {
        if (name == kPosNames[i]) return static_cast<Pos>(i);
    }
    return std::nullopt;
}

} // namespace ccglex
