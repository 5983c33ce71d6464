#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace funl {

/// A word over a single-character alphabet. The empty string is the
/// empty word and is distinct from "undefined" everywhere in the API.
using Word = std::string;

/// Shortest-first order, ties broken lexicographically. All witness
/// selection and counterexample reporting uses this order, which makes
/// every run of the learner reproducible.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool shortlex_less(const Word& a, const Word& b) {
    return ShortlexLess{}(a, b);
}

/// All prefixes of w, including the empty word and w itself.
inline std::vector<Word> prefixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size() + 1);
    for (std::size_t n = 0; n <= w.size(); ++n) out.emplace_back(w.substr(0, n));
    return out;
}

/// All suffixes of w, including the empty word and w itself.
inline std::vector<Word> suffixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size() + 1);
    for (std::size_t n = 0; n <= w.size(); ++n) out.emplace_back(w.substr(n));
    return out;
}

/// Human-readable form for traces and error messages.
inline std::string display_word(const Word& w) {
    return w.empty() ? std::string("ε") : w;
}

/// True if every letter of w occurs in alphabet (a sorted set of chars).
inline bool letters_in_alphabet(const Word& w, std::string_view alphabet) {
    for (char c : w)
        if (alphabet.find(c) == std::string_view::npos) return false;
    return true;
}

} // namespace funl
