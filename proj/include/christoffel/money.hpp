#pragma once

// Two-coin money problem (Frobenius problem) and its Christoffel-word boundary.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "christoffel/arithmetic.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/word.hpp"

namespace christoffel {

struct CoinPair {
    Int a = 1;
    Int b = 1;
};

inline void validate(const CoinPair& c) {
    if (c.a < 1 || c.b < 1) {
        throw precondition_error("coin values must be positive, got a=" + std::to_string(c.a) +
                                 " b=" + std::to_string(c.b));
    }
    if (!coprime(c.a, c.b)) {
        throw precondition_error("coin values must be coprime, got a=" + std::to_string(c.a) +
                                 " b=" + std::to_string(c.b));
    }
}

/// Largest amount not expressible as a*x + b*y, x, y >= 0: (a-1)(b-1) - 1.
/// Returns -1 when a coin of value 1 makes every amount reachable.
inline Int frobenius_number(const CoinPair& c) {
    validate(c);
    return (c.a - 1) * (c.b - 1) - 1;
}

inline Int nonrepresentable_count(const CoinPair& c) {
    validate(c);
    return (c.a - 1) * (c.b - 1) / 2;
}

/// amount = a*x + b*y with x, y >= 0. Picks the least x with a*x == amount (mod b).
inline bool representable(const CoinPair& c, Int amount) {
    validate(c);
    if (amount < 0) return false;
    const Int x = mod(mod(amount, c.b) * mod_inverse(c.a, c.b), c.b);
    return c.a * x <= amount;
}

/// Staircase below the region {(x, -y) : x, y >= 0, x*b + y*a < a*b}.
struct QuadrantBoundary {
    Word word;                                   // a right-letters, b up-letters
    std::vector<Int> values;                     // value carried at each step of the walk
    std::map<std::pair<Int, Int>, Int> cells;    // (x, y) -> x*b + y*a, retained cells only
};

/// Walks from the lower-left corner with running value ab - a - b: a right move
/// adds b while the value stays below ab, otherwise an up move subtracts a.
inline QuadrantBoundary boundary_word(const CoinPair& c, std::string right = "α",
                                      std::string up = "β") {
    validate(c);
    QuadrantBoundary qb;
    const Int ab = c.a * c.b;
    Int value = ab - c.a - c.b;
    std::vector<Symbol> s;
    qb.values.push_back(value);
    for (Int step = 0; step < c.a + c.b; ++step) {
        if (value + c.b < ab) {
            s.push_back(0);
            value += c.b;
        } else {
            s.push_back(1);
            value -= c.a;
        }
        qb.values.push_back(value);
    }
    qb.word = Word(Alphabet({std::move(right), std::move(up)}), std::move(s));
    for (Int x = 0; x < c.a; ++x) {
        for (Int y = 0; x * c.b + y * c.a < ab; ++y) qb.cells[{x, y}] = x * c.b + y * c.a;
    }
    return qb;
}

/// Cayley walk of C(a+b, a) (0, b, 2b, ... mod a+b) lifted by ab - a - b.
inline std::vector<Int> shifted_cayley(const CoinPair& c) {
    validate(c);
    if (c.a < 2 || c.b < 2) throw precondition_error("shifted Cayley walk needs a, b >= 2");
    const auto graph = cayley_graph(ChristoffelSpec{c.a + c.b, c.a, "a", "b"});
    const Int lift = c.a * c.b - c.a - c.b;
    std::vector<Int> out;
    for (Int v : graph.vertex_order()) out.push_back(v + lift);
    return out;
}

}  // namespace christoffel
