#pragma once

// Christoffel words C(n, alpha): length n, alpha occurrences of the low letter,
// slope (n - alpha) / alpha. When r = gcd(n, alpha) > 1 the word is the r-th
// power of C(n/r, alpha/r). C(n, n) is accepted and is low^n.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "christoffel/arithmetic.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/word.hpp"

namespace christoffel {

struct ChristoffelSpec {
    Int n = 1;
    Int alpha = 1;
    std::string low = "a";
    std::string high = "x";

    Int beta() const { return n - alpha; }
};

inline void validate(const ChristoffelSpec& spec) {
    if (spec.n < 1) throw precondition_error("length n must be positive, got " + std::to_string(spec.n));
    if (spec.alpha < 1 || spec.alpha > spec.n) {
        throw precondition_error("alpha must satisfy 1 <= alpha <= n, got alpha=" +
                                 std::to_string(spec.alpha) + " n=" + std::to_string(spec.n));
    }
    if (spec.low == spec.high) throw precondition_error("low and high letters must differ");
}

/// Residues modulo `modulus`, kept sorted and distinct.
class PositionSet {
  public:
    PositionSet() = default;

    PositionSet(Int modulus, std::vector<Int> residues) : modulus_(modulus) {
        if (modulus < 1) throw precondition_error("position set modulus must be positive");
        for (Int& r : residues) r = mod(r, modulus);
        std::sort(residues.begin(), residues.end());
        residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
        residues_ = std::move(residues);
    }

    Int modulus() const { return modulus_; }
    const std::vector<Int>& residues() const { return residues_; }
    std::size_t size() const { return residues_.size(); }

    bool contains(Int v) const {
        return std::binary_search(residues_.begin(), residues_.end(), mod(v, modulus_));
    }

    bool is_subset_of(const PositionSet& other) const {
        return modulus_ == other.modulus_ &&
               std::includes(other.residues_.begin(), other.residues_.end(), residues_.begin(),
                             residues_.end());
    }

    bool is_disjoint_from(const PositionSet& other) const {
        for (Int r : residues_) {
            if (other.contains(r)) return false;
        }
        return true;
    }

    friend bool operator==(const PositionSet&, const PositionSet&) = default;

  private:
    Int modulus_ = 1;
    std::vector<Int> residues_;
};

inline PositionSet positions_of(const Word& w, std::string_view letter) {
    return PositionSet(static_cast<Int>(w.size()), occurrences_of(w, letter));
}

/// The residue alpha-bar in [0, n) with alpha * alpha-bar == -1 (mod n).
inline Int modular_complement(Int alpha, Int n) {
    if (n < 2) throw precondition_error("modular complement needs n >= 2, got " + std::to_string(n));
    if (!coprime(alpha, n)) {
        throw precondition_error("modular complement needs gcd(alpha, n) = 1, got alpha=" +
                                 std::to_string(alpha) + " n=" + std::to_string(n));
    }
    const Int result = mod(-mod_inverse(alpha, n), n);
    if (mod(alpha * result, n) != n - 1) {
        throw std::logic_error("modular complement failed verification");
    }
    return result;
}

namespace detail {

// Coprime case: letter i is low iff (i+1)*beta mod n > i*beta mod n.
inline std::vector<Symbol> primitive_christoffel(Int n, Int alpha) {
    const Int beta = n - alpha;
    std::vector<Symbol> s(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) {
        s[static_cast<std::size_t>(i)] = mod((i + 1) * beta, n) > mod(i * beta, n) ? 0 : 1;
    }
    return s;
}

}  // namespace detail

inline Word christoffel_word(const ChristoffelSpec& spec) {
    validate(spec);
    Alphabet alphabet({spec.low, spec.high});
    if (spec.alpha == spec.n) {
        return Word(std::move(alphabet), std::vector<Symbol>(static_cast<std::size_t>(spec.n), 0));
    }
    const Int r = gcd(spec.n, spec.alpha);
    const auto base = detail::primitive_christoffel(spec.n / r, spec.alpha / r);
    std::vector<Symbol> s;
    s.reserve(static_cast<std::size_t>(spec.n));
    for (Int t = 0; t < r; ++t) s.insert(s.end(), base.begin(), base.end());
    return Word(std::move(alphabet), std::move(s));
}

inline Word christoffel_word(Int n, Int alpha, std::string low = "a", std::string high = "x") {
    return christoffel_word(ChristoffelSpec{n, alpha, std::move(low), std::move(high)});
}

/// Positions of the low letter: {k * alpha-bar mod n : 0 <= k < alpha} for the
/// primitive word, translated by multiples of n/r for a power.
inline PositionSet letter_positions(const ChristoffelSpec& spec) {
    validate(spec);
    std::vector<Int> residues;
    if (spec.alpha == spec.n) {
        for (Int i = 0; i < spec.n; ++i) residues.push_back(i);
        return PositionSet(spec.n, std::move(residues));
    }
    const Int r = gcd(spec.n, spec.alpha);
    const Int len = spec.n / r;
    const Int count = spec.alpha / r;
    const Int bar = modular_complement(count, len);
    for (Int copy = 0; copy < r; ++copy) {
        for (Int k = 0; k < count; ++k) residues.push_back(mod(k * bar, len) + copy * len);
    }
    return PositionSet(spec.n, std::move(residues));
}

inline PositionSet letter_positions(Int n, Int alpha) {
    return letter_positions(ChristoffelSpec{n, alpha, "a", "x"});
}

struct CayleyEdge {
    Int source;
    Int target;
    Symbol label;  // 0 = low letter, 1 = high letter

    friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

/// Cycle on Z/nZ stepping by beta = n - alpha, traversed from 0. An edge is
/// labelled low when it goes up (source < target) and high when it wraps.
struct CayleyGraph {
    Int n = 0;
    Alphabet alphabet;
    std::vector<CayleyEdge> edges;

    /// Vertices in traversal order, closing back on the start vertex.
    std::vector<Int> vertex_order() const {
        std::vector<Int> out;
        if (edges.empty()) return out;
        out.push_back(edges.front().source);
        for (const auto& e : edges) out.push_back(e.target);
        return out;
    }

    Word labels() const {
        std::vector<Symbol> s;
        s.reserve(edges.size());
        for (const auto& e : edges) s.push_back(e.label);
        return Word(alphabet, std::move(s));
    }
};

/// For a power C(n, alpha) with r = gcd > 1 the primitive cycle of length n/r is
/// read r times, so there are always n edges.
inline CayleyGraph cayley_graph(const ChristoffelSpec& spec) {
    validate(spec);
    if (spec.alpha == spec.n) {
        throw precondition_error("the Cayley graph needs alpha < n");
    }
    CayleyGraph g;
    g.n = spec.n;
    g.alphabet = Alphabet({spec.low, spec.high});
    const Int step = spec.beta();
    Int v = 0;
    for (Int i = 0; i < spec.n; ++i) {
        const Int next = mod(v + step, spec.n);
        g.edges.push_back({v, next, v < next ? Symbol{0} : Symbol{1}});
        v = next;
    }
    return g;
}

enum class Step { right, up };

/// Monotone lattice path from (0, 0) to (a, b).
struct LatticePath {
    std::vector<Step> steps;
    Int a = 0;
    Int b = 0;

    /// Every lattice point of the path lies weakly below the segment (0,0)-(a,b).
    bool below_segment() const {
        Int x = 0, y = 0;
        for (Step s : steps) {
            (s == Step::right ? x : y) += 1;
            if (b * x - a * y < 0) return false;
        }
        return x == a && y == b;
    }

    Word encode(std::string low = "a", std::string high = "x") const {
        std::vector<Symbol> s;
        s.reserve(steps.size());
        for (Step st : steps) s.push_back(st == Step::right ? 0 : 1);
        return Word(Alphabet({std::move(low), std::move(high)}), std::move(s));
    }
};

/// Lower Christoffel path of slope b/a: step up whenever the point above stays
/// weakly below the segment, otherwise step right.
inline LatticePath christoffel_path(Int a, Int b) {
    if (a < 1 || b < 1) throw precondition_error("Christoffel path needs a, b >= 1");
    if (!coprime(a, b)) {
        throw precondition_error("Christoffel path needs gcd(a, b) = 1, got a=" + std::to_string(a) +
                                 " b=" + std::to_string(b));
    }
    LatticePath path;
    path.a = a;
    path.b = b;
    Int x = 0, y = 0;
    while (x < a || y < b) {
        if (y < b && b * x - a * (y + 1) >= 0) {
            path.steps.push_back(Step::up);
            ++y;
        } else {
            path.steps.push_back(Step::right);
            ++x;
        }
    }
    return path;
}

}  // namespace christoffel
