#pragma once

// Finite words over a small ordered alphabet.
//
// A letter is a single printable code point stored as its UTF-8 encoding, so
// Greek letters such as "α" work alongside ASCII. Words store indices into
// their alphabet; the alphabet order is the letter order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "christoffel/arithmetic.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

using Symbol = std::uint32_t;

namespace detail {

inline std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 0;
}

}  // namespace detail

/// Splits UTF-8 text into code points, one string each.
inline std::vector<std::string> split_letters(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const std::size_t len = detail::utf8_length(static_cast<unsigned char>(text[i]));
        if (len == 0 || i + len > text.size()) {
            throw precondition_error("invalid UTF-8 at byte " + std::to_string(i));
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) >> 6) != 0x2) {
                throw precondition_error("invalid UTF-8 at byte " + std::to_string(i + k));
            }
        }
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

inline bool is_valid_letter(std::string_view letter) {
    if (letter.empty()) return false;
    const auto lead = static_cast<unsigned char>(letter[0]);
    const std::size_t len = detail::utf8_length(lead);
    if (len != letter.size()) return false;
    if (len == 1) return lead > 0x20 && lead < 0x7F;
    for (std::size_t k = 1; k < len; ++k) {
        if ((static_cast<unsigned char>(letter[k]) >> 6) != 0x2) return false;
    }
    return true;
}

class Alphabet {
  public:
    Alphabet() : letters_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Alphabet(std::vector<std::string> letters) {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (!is_valid_letter(letters[i])) {
                throw precondition_error("letter '" + letters[i] +
                                         "' is not a single printable symbol");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (letters[j] == letters[i]) {
                    throw precondition_error("duplicate letter '" + letters[i] + "' in alphabet");
                }
            }
        }
        letters_ = std::make_shared<const std::vector<std::string>>(std::move(letters));
    }

    /// Each code point of `text` becomes a letter, in order: "ax" is {a < x}.
    static Alphabet from_string(std::string_view text) { return Alphabet(split_letters(text)); }

    std::size_t size() const { return letters_->size(); }
    const std::string& letter(std::size_t i) const { return letters_->at(i); }
    const std::vector<std::string>& letters() const { return *letters_; }

    std::optional<Symbol> index_of(std::string_view letter) const {
        const auto& ls = *letters_;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i] == letter) return static_cast<Symbol>(i);
        }
        return std::nullopt;
    }

    bool contains(std::string_view letter) const { return index_of(letter).has_value(); }

    /// Index of `letter`, or precondition_error naming it.
    Symbol require(std::string_view letter) const {
        if (auto i = index_of(letter)) return *i;
        throw precondition_error("letter '" + std::string(letter) + "' is not in alphabet {" +
                                 str() + "}");
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < letters_->size(); ++i) {
            if (i) s += '<';
            s += (*letters_)[i];
        }
        return s;
    }

    friend bool operator==(const Alphabet& l, const Alphabet& r) {
        return l.letters_ == r.letters_ || *l.letters_ == *r.letters_;
    }

  private:
    std::shared_ptr<const std::vector<std::string>> letters_;
};

class Word {
  public:
    Word() = default;

    Word(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (symbols_[i] >= alphabet_.size()) {
                throw precondition_error("symbol index " + std::to_string(symbols_[i]) +
                                         " at position " + std::to_string(i) +
                                         " is outside the alphabet");
            }
        }
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const Symbol> symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::string& letter_at(std::size_t i) const { return alphabet_.letter(symbols_.at(i)); }

    std::string str() const {
        std::string s;
        for (Symbol c : symbols_) s += alphabet_.letter(c);
        return s;
    }

    friend bool operator==(const Word& l, const Word& r) {
        return l.symbols_ == r.symbols_ && l.alphabet_ == r.alphabet_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

  private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

inline Word make_word(const std::vector<std::string>& letters, const Alphabet& alphabet) {
    std::vector<Symbol> symbols;
    symbols.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        auto idx = alphabet.index_of(letters[i]);
        if (!idx) {
            throw precondition_error("symbol '" + letters[i] + "' at index " + std::to_string(i) +
                                     " is not in alphabet {" + alphabet.str() + "}");
        }
        symbols.push_back(*idx);
    }
    return Word(alphabet, std::move(symbols));
}

inline Word make_word(std::string_view text, const Alphabet& alphabet) {
    return make_word(split_letters(text), alphabet);
}

/// Alphabet made of the distinct letters of `text`, sorted by their UTF-8 bytes.
inline Alphabet infer_alphabet(std::string_view text) {
    auto letters = split_letters(text);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return Alphabet(std::move(letters));
}

inline Int count_letter(const Word& w, std::string_view letter) {
    const Symbol c = w.alphabet().require(letter);
    return static_cast<Int>(std::count(w.symbols().begin(), w.symbols().end(), c));
}

inline Word concat(const Word& l, const Word& r) {
    if (!(l.alphabet() == r.alphabet())) {
        throw precondition_error("cannot concatenate words over different alphabets");
    }
    std::vector<Symbol> s(l.symbols().begin(), l.symbols().end());
    s.insert(s.end(), r.symbols().begin(), r.symbols().end());
    return Word(l.alphabet(), std::move(s));
}

inline Word power(const Word& w, std::size_t times) {
    std::vector<Symbol> s;
    s.reserve(w.size() * times);
    for (std::size_t t = 0; t < times; ++t) s.insert(s.end(), w.symbols().begin(), w.symbols().end());
    return Word(w.alphabet(), std::move(s));
}

/// Every two factors of equal length differ by at most one occurrence of each letter.
/// For each factor length the per-letter counts of all factors are scanned.
inline bool is_balanced(const Word& w) {
    const std::size_t n = w.size();
    const std::size_t sigma = w.alphabet().size();
    // prefix[c][i] = occurrences of c in w[0, i)
    std::vector<std::vector<Int>> prefix(sigma, std::vector<Int>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < sigma; ++c) prefix[c][i + 1] = prefix[c][i];
        ++prefix[w[i]][i + 1];
    }
    for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t c = 0; c < sigma; ++c) {
            Int lo = prefix[c][len], hi = lo;
            for (std::size_t start = 1; start + len <= n; ++start) {
                const Int k = prefix[c][start + len] - prefix[c][start];
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

inline bool is_circularly_balanced(const Word& w) { return is_balanced(concat(w, w)); }

inline Word reverse(const Word& w) {
    std::vector<Symbol> s(w.symbols().rbegin(), w.symbols().rend());
    return Word(w.alphabet(), std::move(s));
}

/// gamma^k(w): moves the first k letters to the end. k is taken modulo |w|;
/// negative k rotates the other way.
inline Word conjugate(const Word& w, Int k) {
    if (w.empty()) {
        if (k != 0) throw precondition_error("cannot rotate the empty word");
        return w;
    }
    const auto n = static_cast<Int>(w.size());
    const auto shift = static_cast<std::size_t>(mod(k, n));
    std::vector<Symbol> s(w.symbols().begin(), w.symbols().end());
    std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shift), s.end());
    return Word(w.alphabet(), std::move(s));
}

inline bool is_primitive(const Word& w) {
    if (w.empty()) throw precondition_error("primitivity is undefined for the empty word");
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = (w[i] == w[i - d]);
        if (periodic) return false;
    }
    return true;
}

/// Keeps `letter` where it occurs and writes `filler` everywhere else.
/// The result is over {letter < filler}.
inline Word projection(const Word& w, std::string_view letter, std::string_view filler) {
    const Symbol keep = w.alphabet().require(letter);
    if (w.alphabet().contains(filler)) {
        throw precondition_error("filler '" + std::string(filler) +
                                 "' collides with a letter of the alphabet");
    }
    Alphabet out({std::string(letter), std::string(filler)});
    std::vector<Symbol> s;
    s.reserve(w.size());
    for (Symbol c : w.symbols()) s.push_back(c == keep ? 0 : 1);
    return Word(std::move(out), std::move(s));
}

enum class Direction { left_to_right, right_to_left };

struct DecimationSpec {
    Int p = 0;
    Int q = 1;
    Direction direction = Direction::left_to_right;
    std::string letter;
};

/// Removes p out of every q occurrences of the target letter. Blocks are counted
/// from the left (left_to_right) or from the right (right_to_left); indices that
/// fall outside the occurrence list are skipped.
inline Word decimate(const Word& w, const DecimationSpec& spec) {
    if (spec.q < 1) throw precondition_error("decimation denominator must be positive");
    if (spec.p < 0 || spec.p > spec.q) {
        throw precondition_error("decimation requires 0 <= p <= q, got p=" +
                                 std::to_string(spec.p) + " q=" + std::to_string(spec.q));
    }
    const Symbol target = w.alphabet().require(spec.letter);

    std::vector<std::size_t> occurrences;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == target) occurrences.push_back(i);
    }
    const auto total = static_cast<Int>(occurrences.size());

    std::vector<bool> removed(w.size(), false);
    for (Int block = 0; block <= total / spec.q; ++block) {
        for (Int t = 0; t < spec.p; ++t) {
            // 1-indexed occurrence number
            const Int j = spec.direction == Direction::left_to_right ? block * spec.q + 1 + t
                                                                      : total - block * spec.q - t;
            if (j >= 1 && j <= total) removed[occurrences[static_cast<std::size_t>(j - 1)]] = true;
        }
    }

    std::vector<Symbol> s;
    s.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!removed[i]) s.push_back(w[i]);
    }
    return Word(w.alphabet(), std::move(s));
}

/// Positions of `letter` in w, in increasing order.
inline std::vector<Int> occurrences_of(const Word& w, std::string_view letter) {
    const Symbol c = w.alphabet().require(letter);
    std::vector<Int> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == c) out.push_back(static_cast<Int>(i));
    }
    return out;
}

/// Letters of two words over {marked_u < filler} and {marked_v < filler}.
struct MarkedPair {
    Symbol marked_u;
    Symbol marked_v;
    Symbol filler_u;
    Symbol filler_v;
};

/// Both alphabets must have two letters: the first is the marked letter, the
/// second the filler. Fillers must coincide and marked letters must differ.
inline MarkedPair marked_pair(const Word& u, const Word& v) {
    const Alphabet& au = u.alphabet();
    const Alphabet& av = v.alphabet();
    if (au.size() != 2 || av.size() != 2) {
        throw precondition_error("superimposition needs two-letter alphabets, got {" + au.str() +
                                 "} and {" + av.str() + "}");
    }
    if (au.letter(1) != av.letter(1)) {
        throw precondition_error("alphabets {" + au.str() + "} and {" + av.str() +
                                 "} have different filler letters");
    }
    if (au.letter(0) == av.letter(0)) {
        throw precondition_error("alphabets {" + au.str() + "} and {" + av.str() +
                                 "} have the same marked letter");
    }
    return MarkedPair{0, 0, 1, 1};
}

}  // namespace christoffel
