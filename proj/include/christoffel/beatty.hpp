#pragma once

// Fraenkel words and rational Beatty sequences.

#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "christoffel/arithmetic.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/word.hpp"

namespace christoffel {

using Rational = boost::rational<Int>;

inline constexpr Int max_fraenkel_index = 20;

/// Letters used for Fraenkel words: letter i is the i-th symbol of 1..9A..K, so
/// every letter stays a single symbol up to k = 20.
inline std::string fraenkel_letter(Int i) {
    static constexpr std::string_view digits = "123456789ABCDEFGHIJK";
    if (i < 1 || i > max_fraenkel_index) {
        throw precondition_error("Fraenkel letter index out of range: " + std::to_string(i));
    }
    return std::string(1, digits[static_cast<std::size_t>(i - 1)]);
}

/// Fr_1 = 1, Fr_k = Fr_{k-1} k Fr_{k-1}.
inline Word fraenkel_word(Int k) {
    if (k < 1 || k > max_fraenkel_index) {
        throw precondition_error("Fraenkel index must lie in [1, 20], got " + std::to_string(k));
    }
    std::vector<std::string> letters;
    for (Int i = 1; i <= k; ++i) letters.push_back(fraenkel_letter(i));
    std::vector<Symbol> s{0};
    for (Symbol level = 1; level < static_cast<Symbol>(k); ++level) {
        std::vector<Symbol> next;
        next.reserve(2 * s.size() + 1);
        next.insert(next.end(), s.begin(), s.end());
        next.push_back(level);
        next.insert(next.end(), s.begin(), s.end());
        s = std::move(next);
    }
    return Word(Alphabet(std::move(letters)), std::move(s));
}

inline std::map<std::string, Int> letter_frequencies(const Word& w) {
    std::map<std::string, Int> out;
    for (const auto& letter : w.alphabet().letters()) out[letter] = 0;
    for (Symbol c : w.symbols()) ++out[w.alphabet().letter(c)];
    return out;
}

/// S(slope, offset) = { floor(slope * n + offset) : n in Z }.
struct BeattySpec {
    Rational slope{1};
    Rational offset{0};
};

inline Int floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

/// floor(slope * i + offset) for i = lo..hi, in order of i.
inline std::vector<Int> beatty_slice(const BeattySpec& spec, Int lo, Int hi) {
    if (lo > hi) {
        throw precondition_error("empty index range [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int i = lo; i <= hi; ++i) out.push_back(floor_of(spec.slope * i + spec.offset));
    return out;
}

/// Offsets exist making S(p1/q1, .) and S(p2/q2, .) disjoint iff there are
/// positive x, y with x*u1 + y*u2 = p - 2*u1*u2*(q - 1), where p = gcd(p1, p2),
/// q = gcd(q1, q2), u_i = q_i / q. The inputs are used as given, unreduced.
inline bool beatty_disjoint_exists(Int p1, Int q1, Int p2, Int q2) {
    if (p1 < 1 || q1 < 1 || p2 < 1 || q2 < 1) {
        throw precondition_error("Beatty parameters must be positive");
    }
    const Int p = gcd(p1, p2);
    const Int q = gcd(q1, q2);
    const Int u1 = q1 / q;
    const Int u2 = q2 / q;
    const Int target = p - 2 * u1 * u2 * (q - 1);
    for (Int y = 1; u2 * y < target; ++y) {
        if ((target - u2 * y) % u1 == 0) return true;
    }
    return false;
}

}  // namespace christoffel
