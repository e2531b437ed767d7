#include "ccglex/normalize.hpp"

#include <cctype>

namespace ccglex {

namespace {

bool is_punct(char c) {
    unsigned char uc = static_cast<unsigned char>(c);
    return uc < 0x80 && std::ispunct(uc);
}

} // namespace

std::string normalize_word(std::string_view word) {
    std::size_t b = 0;
    std::size_t e = word.size();
    while (b < e && is_punct(word[b])) ++b;
    while (e > b && is_punct(word[e - 1])) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
        unsigned char uc = static_cast<unsigned char>(word[i]);
        out += uc < 0x80 ? static_cast<char>(std::tolower(uc)) : word[i];
    }
    return out;
}

} // namespace ccglex
