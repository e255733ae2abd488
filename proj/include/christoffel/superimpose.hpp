#pragma once

// Superimposition of two Christoffel words.
//
// The first word is C(n, q*alpha) over {a < x}, the second C(m, q*beta) over
// {b < x}, with gcd(alpha, beta) = 1 and p = gcd(n, m). The two words can be
// shifted so that no a and b ever share a position iff the unique solution of
//
//     x*alpha + y*beta = p - 2*alpha*beta*(q - 1),   1 <= y <= alpha
//
// has x > 0. The number of admissible shifts (counted modulo max(n, m)) is
// x*y or x*alpha + y*beta - alpha*beta (depending on x <= beta), scaled by
// max(n, m) / p, and gamma^{1 - r} applied to the reversed second word always
// works when q*r == 1 (mod p).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "christoffel/arithmetic.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/word.hpp"

namespace christoffel {

struct SuperimpositionProblem {
    Int n = 2;
    Int m = 2;
    Int q = 1;
    Int alpha = 1;
    Int beta = 1;

    Int p() const { return gcd(n, m); }
    Int first_count() const { return q * alpha; }
    Int second_count() const { return q * beta; }

    /// Splits the letter counts A = q*alpha, B = q*beta with q = gcd(A, B).
    static SuperimpositionProblem from_counts(Int n, Int first_count, Int m, Int second_count) {
        if (first_count < 1 || second_count < 1) {
            throw precondition_error("letter counts must be positive");
        }
        const Int q = gcd(first_count, second_count);
        return {n, m, q, first_count / q, second_count / q};
    }
};

inline void validate(const SuperimpositionProblem& pr) {
    auto fail = [&](const std::string& why) {
        throw precondition_error("invalid superimposition problem (n=" + std::to_string(pr.n) +
                                 ", m=" + std::to_string(pr.m) + ", q=" + std::to_string(pr.q) +
                                 ", alpha=" + std::to_string(pr.alpha) +
                                 ", beta=" + std::to_string(pr.beta) + "): " + why);
    };
    if (pr.n < 2 || pr.m < 2) fail("lengths must be at least 2");
    if (pr.q < 1 || pr.alpha < 1 || pr.beta < 1) fail("q, alpha and beta must be positive");
    if (!coprime(pr.alpha, pr.beta)) fail("alpha and beta must be coprime");
    if (pr.first_count() >= pr.n || !coprime(pr.first_count(), pr.n)) {
        fail("q*alpha must be coprime to n and smaller than n");
    }
    if (pr.second_count() >= pr.m || !coprime(pr.second_count(), pr.m)) {
        fail("q*beta must be coprime to m and smaller than m");
    }
}

inline Word first_word(const SuperimpositionProblem& pr, std::string marked = "a",
                       std::string filler = "x") {
    return christoffel_word(pr.n, pr.first_count(), std::move(marked), std::move(filler));
}

inline Word second_word(const SuperimpositionProblem& pr, std::string marked = "b",
                        std::string filler = "x") {
    return christoffel_word(pr.m, pr.second_count(), std::move(marked), std::move(filler));
}

struct BezoutSolution {
    Int x = 0;
    Int y = 1;
    Int z = 0;  // alpha - y

    friend bool operator==(const BezoutSolution&, const BezoutSolution&) = default;
};

/// Right-hand side p - 2*alpha*beta*(q - 1).
inline Int bezout_target(const SuperimpositionProblem& pr) {
    return pr.p() - 2 * pr.alpha * pr.beta * (pr.q - 1);
}

inline BezoutSolution solve_bezout(const SuperimpositionProblem& pr) {
    validate(pr);
    const Int target = bezout_target(pr);
    // y == target * beta^{-1} (mod alpha), taken in [1, alpha]
    Int y = mod(mod(target, pr.alpha) * mod_inverse(pr.beta, pr.alpha), pr.alpha);
    if (y == 0) y = pr.alpha;
    const Int rest = target - y * pr.beta;
    if (mod(rest, pr.alpha) != 0) throw std::logic_error("Bezout solution is not integral");
    const Int x = rest / pr.alpha;
    return {x, y, pr.alpha - y};
}

inline bool is_superimposable(const SuperimpositionProblem& pr) { return solve_bezout(pr).x > 0; }

/// Same-length count at length p.
inline Int count_at_gcd_length(const SuperimpositionProblem& pr, const BezoutSolution& sol) {
    if (sol.x <= 0) return 0;
    if (sol.x <= pr.beta) return sol.x * sol.y;
    return sol.x * pr.alpha + sol.y * pr.beta - pr.alpha * pr.beta;
}

/// Number of shifts k in [0, max(n, m)) of the longer word that give a perfect
/// superimposition.
inline Int count_superimpositions(const SuperimpositionProblem& pr) {
    const auto sol = solve_bezout(pr);
    return count_at_gcd_length(pr, sol) * (std::max(pr.n, pr.m) / pr.p());
}

struct CanonicalShift {
    Int shift = 0;
    bool reversed_form = true;  // the shift applies to reverse(second word)
};

/// Shift s such that C(n, q*alpha) and gamma^s(reverse C(m, q*beta)) are perfectly
/// superimposable: s = 1 - r (mod m) with q*r == 1 (mod p).
inline CanonicalShift canonical_shift(const SuperimpositionProblem& pr) {
    if (!is_superimposable(pr)) {
        throw precondition_error("canonical shift requested for a non-superimposable problem");
    }
    const Int r = mod_inverse(pr.q, pr.p());
    return {mod(1 - r, pr.m), true};
}

/// All lifts 1 - r + i*p (mod m), 0 <= i < m/p, of the canonical shift.
inline std::vector<Int> canonical_lifts(const SuperimpositionProblem& pr) {
    const Int base = canonical_shift(pr).shift;
    std::vector<Int> out;
    for (Int i = 0; i < pr.m / pr.p(); ++i) out.push_back(mod(base + i * pr.p(), pr.m));
    std::sort(out.begin(), out.end());
    return out;
}

/// Exists x, y >= 1 with alpha*x + beta*y = n; for Christoffel words of equal
/// length n this decides whether C(n, alpha) and reverse(C(n, beta)) are
/// perfectly superimposable.
inline bool reversal_superimposition_criterion(Int n, Int alpha, Int beta) {
    if (n < 2) throw precondition_error("reversal criterion needs n >= 2");
    if (alpha < 1 || alpha >= n || beta < 1 || beta >= n) {
        throw precondition_error("reversal criterion needs 1 <= alpha, beta < n");
    }
    if (!coprime(alpha, n) || !coprime(beta, n)) {
        throw precondition_error("reversal criterion needs alpha and beta coprime to n, got n=" +
                                 std::to_string(n) + " alpha=" + std::to_string(alpha) +
                                 " beta=" + std::to_string(beta));
    }
    if (!coprime(alpha, beta)) {
        throw precondition_error("reversal criterion needs gcd(alpha, beta) = 1, got alpha=" +
                                 std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
    for (Int y = 1; beta * y < n; ++y) {
        if ((n - beta * y) % alpha == 0) return true;
    }
    return false;
}

/// M(r) = r*(x + (2q - 1)*beta) - floor(z*r / alpha)*beta.
inline Int m_offset(Int r, const BezoutSolution& sol, Int q, Int alpha, Int beta) {
    if (r < 0 || r >= alpha) {
        throw precondition_error("offset index r must lie in [0, alpha), got r=" + std::to_string(r));
    }
    return r * (sol.x + (2 * q - 1) * beta) - floor_div(sol.z * r, alpha) * beta;
}

struct Interval {
    Int lo;
    Int hi;  // inclusive

    Int size() const { return hi - lo + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// I_r = [-(q-1)*beta, q*beta - 1] - M(r) for 0 <= r < alpha.
struct IntervalFamily {
    std::vector<Interval> members;
    std::vector<Int> offsets;
};

inline IntervalFamily interval_family(const SuperimpositionProblem& pr) {
    const auto sol = solve_bezout(pr);
    IntervalFamily fam;
    for (Int r = 0; r < pr.alpha; ++r) {
        const Int off = m_offset(r, sol, pr.q, pr.alpha, pr.beta);
        fam.offsets.push_back(off);
        fam.members.push_back({-(pr.q - 1) * pr.beta - off, pr.q * pr.beta - 1 - off});
    }
    return fam;
}

/// Count internals exposed for inspection.
struct ShiftDiagnostics {
    IntervalFamily intervals;
    std::vector<Int> uncovered;  // residues mod p outside every interval
    std::vector<Int> shifts;     // admissible shifts modulo max(n, m)
    bool shifts_second = true;   // false when the first word is the longer one
};

/// Derives the admissible shifts from the gaps of the interval family: a residue
/// l mod p outside every I_r gives the shift l * (q*beta)-bar of C(p, q*beta).
inline ShiftDiagnostics shift_diagnostics(const SuperimpositionProblem& pr) {
    ShiftDiagnostics d;
    d.intervals = interval_family(pr);
    const Int p = pr.p();
    std::vector<bool> covered(static_cast<std::size_t>(p), false);
    for (const auto& iv : d.intervals.members) {
        if (iv.size() >= p) {
            std::fill(covered.begin(), covered.end(), true);
            break;
        }
        for (Int v = iv.lo; v <= iv.hi; ++v) covered[static_cast<std::size_t>(mod(v, p))] = true;
    }
    for (Int l = 0; l < p; ++l) {
        if (!covered[static_cast<std::size_t>(l)]) d.uncovered.push_back(l);
    }
    if (d.uncovered.empty()) return d;

    const Int bar = modular_complement(mod(pr.second_count(), p), p);
    d.shifts_second = pr.m >= pr.n;
    const Int longest = std::max(pr.n, pr.m);
    for (Int l : d.uncovered) {
        const Int k = mod(l * bar, p);
        const Int base = d.shifts_second ? k : mod(-k, p);
        for (Int i = 0; i < longest / p; ++i) d.shifts.push_back(base + i * p);
    }
    std::sort(d.shifts.begin(), d.shifts.end());
    return d;
}

/// No position carries both marked letters, i.e. (A + nZ) and (B + mZ) are
/// disjoint. Decided by scanning residues modulo lcm(|u|, |v|).
inline bool perfectly_superimposable(const Word& u, const Word& v) {
    const MarkedPair mp = marked_pair(u, v);
    if (u.empty() || v.empty()) throw precondition_error("superimposition needs nonempty words");
    const auto n = u.size();
    const auto m = v.size();
    const auto period = static_cast<std::size_t>(lcm(static_cast<Int>(n), static_cast<Int>(m)));
    std::size_t i = 0, j = 0;
    for (std::size_t t = 0; t < period; ++t) {
        if (u[i] == mp.marked_u && v[j] == mp.marked_v) return false;
        if (++i == n) i = 0;
        if (++j == m) j = 0;
    }
    return true;
}

struct SuperimpositionReport {
    bool superimposable = false;
    std::optional<BezoutSolution> bezout;
    Int count = 0;
    std::optional<Int> canonical_shift;
    bool reversed_form = true;
    std::optional<ShiftDiagnostics> diagnostics;
};

/// Full analysis. The canonical witness is re-checked against the actual words.
inline SuperimpositionReport analyze(const SuperimpositionProblem& pr, bool with_diagnostics = false) {
    SuperimpositionReport rep;
    rep.bezout = solve_bezout(pr);
    rep.superimposable = rep.bezout->x > 0;
    rep.count = count_superimpositions(pr);
    if (rep.superimposable) {
        const auto cs = canonical_shift(pr);
        rep.canonical_shift = cs.shift;
        rep.reversed_form = cs.reversed_form;
        const Word shifted = conjugate(reverse(second_word(pr)), cs.shift);
        if (!perfectly_superimposable(first_word(pr), shifted)) {
            throw std::logic_error("canonical shift failed to superimpose the words");
        }
    }
    if (rep.superimposable != (rep.count > 0)) {
        throw std::logic_error("decision and count disagree");
    }
    if (with_diagnostics) rep.diagnostics = shift_diagnostics(pr);
    return rep;
}

/// Letterwise merge of two perfectly superimposed words of equal length. The
/// result is over {a < b < z}: u's marked letter, v's marked letter, the filler.
inline Word merge_superimposition(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        throw precondition_error("merge needs words of equal length, got " +
                                 std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    const MarkedPair mp = marked_pair(u, v);
    Alphabet out({u.alphabet().letter(mp.marked_u), v.alphabet().letter(mp.marked_v),
                  u.alphabet().letter(mp.filler_u)});
    std::vector<Symbol> s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const bool a = u[i] == mp.marked_u;
        const bool b = v[i] == mp.marked_v;
        if (a && b) {
            throw precondition_error("words conflict at position " + std::to_string(i) +
                                     "; they are not perfectly superimposable");
        }
        s[i] = a ? 0 : (b ? 1 : 2);
    }
    return Word(std::move(out), std::move(s));
}

/// Deletes every occurrence of `filler`; the filler also leaves the alphabet.
inline Word collapse_merge(const Word& w, std::string_view filler) {
    const Symbol f = w.alphabet().require(filler);
    std::vector<std::string> letters;
    std::vector<Symbol> remap(w.alphabet().size(), 0);
    for (Symbol c = 0; c < w.alphabet().size(); ++c) {
        if (c == f) continue;
        remap[c] = static_cast<Symbol>(letters.size());
        letters.push_back(w.alphabet().letter(c));
    }
    std::vector<Symbol> s;
    for (Symbol c : w.symbols()) {
        if (c != f) s.push_back(remap[c]);
    }
    return Word(Alphabet(std::move(letters)), std::move(s));
}

}  // namespace christoffel
