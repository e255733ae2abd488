#pragma once

// Brute-force reference implementations. Nothing here calls into the
// superimposition theory; the checks are plain enumeration over residues,
// amounts and offsets.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "christoffel/arithmetic.hpp"
#include "christoffel/beatty.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/money.hpp"
#include "christoffel/word.hpp"

namespace christoffel::oracle {

struct OracleResult {
    bool decision = false;
    std::vector<Int> witnesses;  // admissible shifts of the rotated operand
    Int modulus = 0;             // max(|u|, |v|)
    bool shifts_second = true;   // false when u (the longer word) is rotated
};

namespace detail {

struct Marks {
    std::vector<Int> fixed;    // marked positions of the word that stays put
    std::vector<Int> rotated;  // marked positions of the word that is rotated
    Int fixed_len = 0;
    Int rotated_len = 0;
    bool shifts_second = true;
};

inline Marks marks(const Word& u, const Word& v) {
    const MarkedPair mp = marked_pair(u, v);
    if (u.empty() || v.empty()) throw precondition_error("oracle needs nonempty words");
    std::vector<Int> a, b;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == mp.marked_u) a.push_back(static_cast<Int>(i));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == mp.marked_v) b.push_back(static_cast<Int>(i));
    }
    const auto n = static_cast<Int>(u.size());
    const auto m = static_cast<Int>(v.size());
    if (n > m) return {std::move(b), std::move(a), m, n, false};
    return {std::move(a), std::move(b), n, m, true};
}

// Rotating a word by k moves a mark at position t to t - k. Two periodic mark
// sets A + nZ and B + mZ meet iff some a == b (mod gcd(n, m)).
inline bool shift_is_free(const std::vector<bool>& fixed_mod_g, const std::vector<Int>& rotated,
                          Int k, Int g) {
    for (Int t : rotated) {
        if (fixed_mod_g[static_cast<std::size_t>(mod(t - k, g))]) return false;
    }
    return true;
}

}  // namespace detail

/// Tries every rotation k in [0, max(|u|, |v|)) of the longer word and keeps the
/// ones leaving no position with both marked letters.
inline OracleResult oracle_superimposable(const Word& u, const Word& v) {
    const auto mk = detail::marks(u, v);
    const Int g = gcd(mk.fixed_len, mk.rotated_len);
    std::vector<bool> fixed_mod_g(static_cast<std::size_t>(g), false);
    for (Int t : mk.fixed) fixed_mod_g[static_cast<std::size_t>(mod(t, g))] = true;

    OracleResult res;
    res.modulus = mk.rotated_len;
    res.shifts_second = mk.shifts_second;
    for (Int k = 0; k < mk.rotated_len; ++k) {
        if (detail::shift_is_free(fixed_mod_g, mk.rotated, k, g)) res.witnesses.push_back(k);
    }
    res.decision = !res.witnesses.empty();

    // Any admissible shift has a representative in [0, min(|u|, |v|)).
    bool in_window = false;
    const Int window = std::min(mk.fixed_len, mk.rotated_len);
    for (Int k = 0; k < window && !in_window; ++k) {
        in_window = detail::shift_is_free(fixed_mod_g, mk.rotated, k, g);
    }
    if (in_window != res.decision) {
        throw std::logic_error("oracle: shift window disagrees with the full shift scan");
    }
    return res;
}

/// Marks of u and gamma^k(v) never coincide over one common period lcm(|u|, |v|).
inline bool disjoint_by_lcm_scan(const Word& u, const Word& v, Int k) {
    const MarkedPair mp = marked_pair(u, v);
    const auto n = static_cast<Int>(u.size());
    const auto m = static_cast<Int>(v.size());
    const Int period = lcm(n, m);
    for (Int t = 0; t < period; ++t) {
        if (u[static_cast<std::size_t>(t % n)] == mp.marked_u &&
            v[static_cast<std::size_t>(mod(t + k, m))] == mp.marked_v) {
            return false;
        }
    }
    return true;
}

/// Same contract as oracle_superimposable but every shift is checked by the
/// residue scan modulo lcm(|u|, |v|). Quadratic in the period; for small words.
inline OracleResult oracle_superimposable_lcm(const Word& u, const Word& v) {
    marked_pair(u, v);
    if (u.empty() || v.empty()) throw precondition_error("oracle needs nonempty words");
    OracleResult res;
    res.shifts_second = u.size() <= v.size();
    res.modulus = static_cast<Int>(std::max(u.size(), v.size()));
    for (Int k = 0; k < res.modulus; ++k) {
        // rotating u by k is rotating v by -k
        const bool ok = res.shifts_second ? disjoint_by_lcm_scan(u, v, k)
                                          : disjoint_by_lcm_scan(u, v, -k);
        if (ok) res.witnesses.push_back(k);
    }
    res.decision = !res.witnesses.empty();
    return res;
}

/// Every witness of `res` passes the lcm scan.
inline bool revalidate(const Word& u, const Word& v, const OracleResult& res) {
    for (Int k : res.witnesses) {
        const bool ok = res.shifts_second ? disjoint_by_lcm_scan(u, v, k)
                                          : disjoint_by_lcm_scan(u, v, -k);
        if (!ok) return false;
    }
    return res.decision == !res.witnesses.empty();
}

struct FrobeniusSieve {
    Int largest = -1;  // largest non-representable amount, -1 if none
    Int count = 0;     // number of non-representable amounts
};

/// Marks every amount in [0, ab] reachable with coins a and b.
inline FrobeniusSieve oracle_frobenius(const CoinPair& coins) {
    if (coins.a < 2 || coins.b < 2 || gcd(coins.a, coins.b) != 1) {
        throw precondition_error("sieve needs coprime coins a, b >= 2");
    }
    const Int top = coins.a * coins.b;
    std::vector<bool> reach(static_cast<std::size_t>(top + 1), false);
    reach[0] = true;
    FrobeniusSieve out;
    for (Int t = 1; t <= top; ++t) {
        const auto i = static_cast<std::size_t>(t);
        reach[i] = (t >= coins.a && reach[i - static_cast<std::size_t>(coins.a)]) ||
                   (t >= coins.b && reach[i - static_cast<std::size_t>(coins.b)]);
        if (!reach[i]) {
            out.largest = t;
            ++out.count;
        }
    }
    return out;
}

/// Representable amounts in [0, limit), by the same sieve.
inline std::vector<bool> representable_table(const CoinPair& coins, Int limit) {
    std::vector<bool> reach(static_cast<std::size_t>(std::max<Int>(limit, 1)), false);
    reach[0] = true;
    for (Int t = 1; t < limit; ++t) {
        const auto i = static_cast<std::size_t>(t);
        reach[i] = (t >= coins.a && reach[i - static_cast<std::size_t>(coins.a)]) ||
                   (t >= coins.b && reach[i - static_cast<std::size_t>(coins.b)]);
    }
    return reach;
}

struct BeattyOracleResult {
    bool decision = false;
    std::optional<Rational> offset1;
    std::optional<Rational> offset2;
};

namespace detail {

// Residues modulo `period` of floor(num*n/den + t/d) over one full period.
inline std::vector<bool> beatty_residues(Int num, Int den, Int t, Int d, Int period) {
    std::vector<bool> hit(static_cast<std::size_t>(period), false);
    const Int steps = den * (period / gcd(period, num)) ;
    for (Int n = 0; n < steps; ++n) {
        const Int value = floor_div(num * n * d + den * t, den * d);
        hit[static_cast<std::size_t>(mod(value, period))] = true;
    }
    return hit;
}

}  // namespace detail

/// Searches offsets t1/d in [0, 1) and t2/d in [0, p2) for a disjoint pair of
/// sequences S(p1/q1, t1/d), S(p2/q2, t2/d). Both sequences repeat modulo
/// lcm(p1, p2), so one common period decides disjointness.
inline BeattyOracleResult oracle_beatty_disjoint(Int p1, Int q1, Int p2, Int q2, Int d) {
    if (p1 < 1 || q1 < 1 || p2 < 1 || q2 < 1 || d < 1) {
        throw precondition_error("Beatty oracle parameters must be positive");
    }
    const Int period = lcm(p1, p2);
    std::vector<std::vector<bool>> second;
    for (Int t2 = 0; t2 < d * p2; ++t2) second.push_back(detail::beatty_residues(p2, q2, t2, d, period));
    for (Int t1 = 0; t1 < d; ++t1) {
        const auto first = detail::beatty_residues(p1, q1, t1, d, period);
        for (Int t2 = 0; t2 < d * p2; ++t2) {
            const auto& other = second[static_cast<std::size_t>(t2)];
            bool disjoint = true;
            for (Int r = 0; r < period && disjoint; ++r) {
                disjoint = !(first[static_cast<std::size_t>(r)] && other[static_cast<std::size_t>(r)]);
            }
            if (disjoint) return {true, Rational(t1, d), Rational(t2, d)};
        }
    }
    return {};
}

}  // namespace christoffel::oracle
