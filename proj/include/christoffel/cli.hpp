#pragma once

// Command-line front end. Every verb builds a JSON payload with a fixed key set;
// text output is rendered from that payload, so both formats carry the same data.
//
// Exit status: 0 success (false answers included), 2 parse errors, 3 precondition
// violations, 4 disagreement with the brute-force oracle under --oracle.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "christoffel/arithmetic.hpp"
#include "christoffel/beatty.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/money.hpp"
#include "christoffel/oracle.hpp"
#include "christoffel/superimpose.hpp"
#include "christoffel/word.hpp"

namespace christoffel::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

enum ExitStatus : int { ok = 0, parse_error = 2, precondition_failed = 3, oracle_mismatch = 4 };

/// Verb name, its JSON document, and the text-only switches that select which
/// lines the text rendering shows.
struct Payload {
    std::string verb;
    Json data;
    std::vector<std::string> text_fields;

    bool shows(std::string_view field) const {
        return std::find(text_fields.begin(), text_fields.end(), field) != text_fields.end();
    }
};

struct OracleDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Verb -> library operation map, checked by the coverage test.
struct Coverage {
    std::string_view verb;
    std::string_view operation;
};

inline constexpr Coverage coverage_table[] = {
    {"gen", "christoffel_word"},
    {"gen", "reverse"},
    {"gen", "conjugate"},
    {"positions", "letter_positions"},
    {"positions", "modular_complement"},
    {"positions", "cayley_graph"},
    {"positions", "christoffel_path"},
    {"balance", "make_word"},
    {"balance", "count_letter"},
    {"balance", "is_balanced"},
    {"balance", "is_circularly_balanced"},
    {"balance", "is_primitive"},
    {"balance", "projection"},
    {"superimpose", "solve_bezout"},
    {"superimpose", "is_superimposable"},
    {"superimpose", "count_superimpositions"},
    {"superimpose", "canonical_shift"},
    {"superimpose", "reversal_superimposition_criterion"},
    {"superimpose", "m_offset"},
    {"superimpose", "shift_diagnostics"},
    {"superimpose", "oracle_superimposable"},
    {"decimate", "decimate"},
    {"merge", "perfectly_superimposable"},
    {"merge", "merge_superimposition"},
    {"merge", "collapse_merge"},
    {"frobenius", "frobenius_number"},
    {"frobenius", "nonrepresentable_count"},
    {"frobenius", "representable"},
    {"frobenius", "oracle_frobenius"},
    {"boundary", "boundary_word"},
    {"boundary", "shifted_cayley"},
    {"fraenkel", "fraenkel_word"},
    {"fraenkel", "letter_frequencies"},
    {"beatty", "beatty_slice"},
    {"beatty", "beatty_disjoint_exists"},
    {"beatty", "oracle_beatty_disjoint"},
    {"oracle-check", "oracle_superimposable"},
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    return out;
}

inline std::pair<std::string, std::string> letter_pair(const std::string& spec) {
    const auto parts = split_list(spec);
    if (parts.size() != 2) {
        throw precondition_error("--letters expects two comma-separated letters, got '" + spec + "'");
    }
    for (const auto& l : parts) {
        if (!is_valid_letter(l)) throw precondition_error("invalid letter '" + l + "'");
    }
    return {parts[0], parts[1]};
}

inline Alphabet alphabet_for(const std::string& word, const std::string& alphabet) {
    if (alphabet.empty()) return infer_alphabet(word);
    return Alphabet(split_list(alphabet));
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const Int v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(v);
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        const Int p = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(s);
        const Int q = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument(s);
        if (q == 0) throw precondition_error("zero denominator in '" + s + "'");
        return Rational(p, q);
    } catch (const precondition_error&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("rational", "cannot parse '" + s + "' as p/q");
    }
}

inline std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::string join(const Json& arr, std::string_view sep) {
    std::string out;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) out += sep;
        first = false;
        out += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return out;
}

inline std::string bool_str(const Json& v) {
    if (v.is_null()) return "n/a";
    return v.get<bool>() ? "true" : "false";
}

inline std::string counts_str(const Json& obj) {
    std::string out;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!out.empty()) out += ' ';
        out += it.key() + "=" + it.value().dump();
    }
    return out;
}

inline Json int_array(const std::vector<Int>& v) {
    Json a = Json::array();
    for (Int x : v) a.push_back(x);
    return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Text rendering

inline std::string render_text(const Payload& p) {
    const Json& d = p.data;
    std::ostringstream out;
    const std::string& v = p.verb;
    if (v == "gen") {
        out << d["word"].get<std::string>() << '\n';
    } else if (v == "positions") {
        out << "positions: {" << detail::join(d["positions"], ", ") << "}\n";
        if (!d["complement"].is_null()) out << "complement: " << d["complement"].dump() << '\n';
        if (!d["cayley"].is_null()) out << "cayley: " << detail::join(d["cayley"], " -> ") << '\n';
        if (!d["path"].is_null()) out << "path: " << d["path"].get<std::string>() << '\n';
    } else if (v == "balance") {
        out << "balanced: " << detail::bool_str(d["balanced"]) << '\n';
        out << "circularly balanced: " << detail::bool_str(d["circularly_balanced"]) << '\n';
        out << "primitive: " << detail::bool_str(d["primitive"]) << '\n';
        out << "counts: " << detail::counts_str(d["counts"]) << '\n';
        if (!d["projection"].is_null()) out << "projection: " << d["projection"].get<std::string>() << '\n';
    } else if (v == "superimpose") {
        out << "superimposable: " << detail::bool_str(d["superimposable"]) << '\n';
        out << "bezout: x=" << d["x"].dump() << " y=" << d["y"].dump() << '\n';
        if (p.shows("count")) out << "count: " << d["count"].dump() << '\n';
        if (p.shows("shift")) {
            if (d["canonical_shift"].is_null()) {
                out << "canonical shift: none\n";
            } else {
                out << "canonical shift: " << d["canonical_shift"].dump() << " (reversed second word)\n";
            }
        }
        if (!d["reversal_criterion"].is_null()) {
            out << "reversal criterion: " << detail::bool_str(d["reversal_criterion"]) << '\n';
        }
        if (!d["diagnostics"].is_null()) {
            const Json& g = d["diagnostics"];
            out << "offsets: " << detail::join(g["offsets"], " ") << '\n';
            out << "uncovered: {" << detail::join(g["uncovered"], ", ") << "}\n";
            out << "shifts: {" << detail::join(g["shifts"], ", ") << "}\n";
        }
        if (!d["oracle"].is_null()) out << "oracle: agrees\n";
    } else if (v == "decimate") {
        out << d["output"].get<std::string>() << '\n';
    } else if (v == "merge") {
        out << d["merged"].get<std::string>() << '\n';
        if (!d["collapsed"].is_null()) out << d["collapsed"].get<std::string>() << '\n';
    } else if (v == "frobenius") {
        out << "g(" << d["a"].dump() << "," << d["b"].dump() << ") = " << d["frobenius"].dump()
            << "; non-representable: " << d["nonrepresentable"].dump() << '\n';
        for (const auto& r : d["representable"]) {
            out << "representable(" << r["amount"].dump() << ") = " << detail::bool_str(r["representable"])
                << '\n';
        }
        if (!d["oracle"].is_null()) out << "oracle: agrees\n";
    } else if (v == "boundary") {
        out << d["word"].get<std::string>() << '\n';
        if (!d["cayley"].is_null()) out << "cayley: " << detail::join(d["cayley"], " -> ") << '\n';
    } else if (v == "fraenkel") {
        out << d["word"].get<std::string>() << '\n';
        if (p.shows("frequencies")) out << "frequencies: " << detail::counts_str(d["frequencies"]) << '\n';
    } else if (v == "beatty") {
        if (d["mode"] == "slice") {
            out << detail::join(d["values"], ", ") << '\n';
        } else {
            out << "disjoint offsets exist: " << detail::bool_str(d["disjoint"]) << '\n';
            if (!d["oracle"].is_null() && d["oracle"]["decision"].get<bool>()) {
                out << "oracle offsets: " << d["oracle"]["offset1"].get<std::string>() << ", "
                    << d["oracle"]["offset2"].get<std::string>() << '\n';
            }
        }
    } else if (v == "oracle-check") {
        if (d["mode"] == "pair") {
            out << "superimposable: " << detail::bool_str(d["decision"]) << '\n';
            out << "witnesses mod " << d["modulus"].dump() << ": {" << detail::join(d["witnesses"], ", ")
                << "}\n";
        } else {
            out << "instances: " << d["instances"].dump() << "; superimposable: "
                << d["superimposable"].dump() << "; disagreements: " << d["disagreements"].size() << '\n';
        }
    }
    return out.str();
}

/// One document per invocation; json is compact and newline-terminated.
inline std::string render(const Payload& p, Format format) {
    if (format == Format::json) return p.data.dump() + "\n";
    return render_text(p);
}

// ---------------------------------------------------------------------------
// Verb implementations

struct GenArgs {
    Int n = 0, alpha = 0;
    std::string letters = "a,x";
    bool reversed = false;
    Int conjugate_by = 0;
};

inline Payload do_gen(const GenArgs& a) {
    const auto [low, high] = detail::letter_pair(a.letters);
    Word w = christoffel_word(a.n, a.alpha, low, high);
    if (a.reversed) w = reverse(w);
    if (a.conjugate_by != 0) w = conjugate(w, a.conjugate_by);
    Json d;
    d["n"] = a.n;
    d["alpha"] = a.alpha;
    d["word"] = w.str();
    return {"gen", d, {}};
}

struct PositionsArgs {
    Int n = 0, alpha = 0;
    std::string letters = "a,x";
    bool oracle = false;
};

inline Payload do_positions(const PositionsArgs& a) {
    const auto [low, high] = detail::letter_pair(a.letters);
    const ChristoffelSpec spec{a.n, a.alpha, low, high};
    const PositionSet pos = letter_positions(spec);
    Json d;
    d["n"] = a.n;
    d["alpha"] = a.alpha;
    d["positions"] = detail::int_array(pos.residues());
    d["complement"] = nullptr;
    d["cayley"] = nullptr;
    d["path"] = nullptr;
    if (a.n >= 2 && coprime(a.alpha, a.n)) d["complement"] = modular_complement(a.alpha, a.n);
    if (a.alpha < a.n) d["cayley"] = detail::int_array(cayley_graph(spec).vertex_order());
    if (a.alpha < a.n && coprime(a.alpha, a.n)) {
        d["path"] = christoffel_path(a.alpha, a.n - a.alpha).encode(low, high).str();
    }
    d["oracle"] = nullptr;
    if (a.oracle) {
        const Word w = christoffel_word(spec);
        const bool agrees = positions_of(w, low) == pos;
        if (!agrees) throw OracleDisagreement("letter positions differ from the constructed word");
        d["oracle"] = Json{{"agrees", true}};
    }
    return {"positions", d, {}};
}

struct BalanceArgs {
    std::string word;
    std::string alphabet;
    std::string project;
    std::string filler = "x";
};

inline Payload do_balance(const BalanceArgs& a) {
    const Word w = make_word(a.word, detail::alphabet_for(a.word, a.alphabet));
    Json d;
    d["word"] = w.str();
    d["length"] = w.size();
    d["balanced"] = is_balanced(w);
    d["circularly_balanced"] = is_circularly_balanced(w);
    d["primitive"] = w.empty() ? Json(nullptr) : Json(is_primitive(w));
    Json counts = Json::object();
    for (const auto& l : w.alphabet().letters()) counts[l] = count_letter(w, l);
    d["counts"] = counts;
    d["projection"] = nullptr;
    if (!a.project.empty()) d["projection"] = projection(w, a.project, a.filler).str();
    return {"balance", d, {}};
}

struct SuperimposeArgs {
    Int n = 0, m = 0, q = 1, alpha = 0, beta = 0;
    bool count = false, shift = false, diagnostics = false, oracle = false;
};

inline Json diagnostics_json(const SuperimpositionProblem& pr) {
    const auto sol = solve_bezout(pr);
    const auto diag = shift_diagnostics(pr);
    Json g;
    g["z"] = sol.z;
    g["offsets"] = detail::int_array(diag.intervals.offsets);
    Json iv = Json::array();
    for (const auto& i : diag.intervals.members) iv.push_back(Json::array({i.lo, i.hi}));
    g["intervals"] = iv;
    g["uncovered"] = detail::int_array(diag.uncovered);
    g["shifts"] = detail::int_array(diag.shifts);
    g["shifts_second"] = diag.shifts_second;
    return g;
}

inline Payload do_superimpose(const SuperimposeArgs& a) {
    const SuperimpositionProblem pr{a.n, a.m, a.q, a.alpha, a.beta};
    const auto rep = analyze(pr, a.diagnostics || a.oracle);
    Json d;
    d["superimposable"] = rep.superimposable;
    d["x"] = rep.bezout->x;
    d["y"] = rep.bezout->y;
    d["count"] = rep.count;
    d["canonical_shift"] = rep.canonical_shift ? Json(*rep.canonical_shift) : Json(nullptr);
    d["reversed"] = rep.reversed_form;
    d["reversal_criterion"] = nullptr;
    if (a.n == a.m && a.q == 1) {
        d["reversal_criterion"] = reversal_superimposition_criterion(a.n, a.alpha, a.beta);
    }
    d["diagnostics"] = a.diagnostics ? diagnostics_json(pr) : Json(nullptr);
    d["oracle"] = nullptr;
    if (a.oracle) {
        const Word u = first_word(pr);
        const Word v = second_word(pr);
        const auto res = oracle::oracle_superimposable(u, v);
        if (res.decision != rep.superimposable) {
            throw OracleDisagreement("decision differs from the exhaustive shift search");
        }
        if (static_cast<Int>(res.witnesses.size()) != rep.count) {
            throw OracleDisagreement("count " + std::to_string(rep.count) + " differs from " +
                                     std::to_string(res.witnesses.size()) + " oracle witnesses");
        }
        if (rep.diagnostics && rep.diagnostics->shifts != res.witnesses) {
            throw OracleDisagreement("interval-derived shifts differ from the oracle witnesses");
        }
        if (rep.canonical_shift &&
            !oracle::disjoint_by_lcm_scan(u, reverse(v), *rep.canonical_shift)) {
            throw OracleDisagreement("canonical shift fails the residue scan");
        }
        d["oracle"] = Json{{"agrees", true}, {"witnesses", detail::int_array(res.witnesses)}};
    }
    std::vector<std::string> fields;
    if (a.count) fields.push_back("count");
    if (a.shift) fields.push_back("shift");
    return {"superimpose", d, fields};
}

struct DecimateArgs {
    std::string word, alphabet, letter, direction = "ltr";
    Int p = 0, q = 1;
};

inline Direction parse_direction(const std::string& s) {
    if (s == "ltr" || s == "left_to_right") return Direction::left_to_right;
    if (s == "rtl" || s == "right_to_left") return Direction::right_to_left;
    throw CLI::ValidationError("--direction", "expected ltr or rtl, got '" + s + "'");
}

inline Payload do_decimate(const DecimateArgs& a) {
    const Word w = make_word(a.word, detail::alphabet_for(a.word, a.alphabet));
    const Word out = decimate(w, DecimationSpec{a.p, a.q, parse_direction(a.direction), a.letter});
    Json d;
    d["input"] = w.str();
    d["output"] = out.str();
    return {"decimate", d, {}};
}

struct MergeArgs {
    std::string u, v, u_alphabet, v_alphabet;
    Int shift = 0;
    bool reverse_second = false, collapse = false, oracle = false;
};

inline Payload do_merge(const MergeArgs& a) {
    const Word u = make_word(a.u, detail::alphabet_for(a.u, a.u_alphabet));
    Word v = make_word(a.v, detail::alphabet_for(a.v, a.v_alphabet));
    if (a.reverse_second) v = reverse(v);
    if (a.shift != 0) v = conjugate(v, a.shift);
    const bool fits = perfectly_superimposable(u, v);
    if (a.oracle && fits != oracle::disjoint_by_lcm_scan(u, v, 0)) {
        throw OracleDisagreement("superimposability differs from the residue scan");
    }
    const Word merged = merge_superimposition(u, v);
    Json d;
    d["u"] = u.str();
    d["v"] = v.str();
    d["merged"] = merged.str();
    d["collapsed"] = nullptr;
    if (a.collapse) {
        const MarkedPair mp = marked_pair(u, v);
        d["collapsed"] = collapse_merge(merged, u.alphabet().letter(mp.filler_u)).str();
    }
    return {"merge", d, {}};
}

struct FrobeniusArgs {
    Int a = 0, b = 0;
    std::vector<Int> amounts;
    bool oracle = false;
};

inline Payload do_frobenius(const FrobeniusArgs& a) {
    const CoinPair c{a.a, a.b};
    Json d;
    d["a"] = a.a;
    d["b"] = a.b;
    d["frobenius"] = frobenius_number(c);
    d["nonrepresentable"] = nonrepresentable_count(c);
    Json reps = Json::array();
    for (Int amount : a.amounts) {
        reps.push_back(Json{{"amount", amount}, {"representable", representable(c, amount)}});
    }
    d["representable"] = reps;
    d["oracle"] = nullptr;
    if (a.oracle) {
        const auto sieve = oracle::oracle_frobenius(c);
        if (sieve.largest != d["frobenius"].get<Int>() || sieve.count != d["nonrepresentable"].get<Int>()) {
            throw OracleDisagreement("closed forms differ from the sieve: largest " +
                                     std::to_string(sieve.largest) + ", count " +
                                     std::to_string(sieve.count));
        }
        d["oracle"] = Json{{"largest", sieve.largest}, {"count", sieve.count}};
    }
    return {"frobenius", d, {}};
}

struct BoundaryArgs {
    Int a = 0, b = 0;
    std::string letters = "α,β";
    bool cayley = false;
};

inline Payload do_boundary(const BoundaryArgs& a) {
    const auto [right, up] = detail::letter_pair(a.letters);
    const CoinPair c{a.a, a.b};
    const auto qb = boundary_word(c, right, up);
    Json d;
    d["a"] = a.a;
    d["b"] = a.b;
    d["word"] = qb.word.str();
    d["cayley"] = a.cayley ? detail::int_array(shifted_cayley(c)) : Json(nullptr);
    return {"boundary", d, {}};
}

struct FraenkelArgs {
    Int k = 0;
    bool frequencies = false;
};

inline Payload do_fraenkel(const FraenkelArgs& a) {
    const Word w = fraenkel_word(a.k);
    Json d;
    d["k"] = a.k;
    d["word"] = w.str();
    Json f = Json::object();
    for (const auto& [letter, count] : letter_frequencies(w)) f[letter] = count;
    d["frequencies"] = f;
    std::vector<std::string> fields;
    if (a.frequencies) fields.push_back("frequencies");
    return {"fraenkel", d, fields};
}

struct BeattyArgs {
    std::string slope, offset = "0", disjoint;
    Int from = 0, to = 0;
    Int grid = 0;
    bool oracle = false;
};

inline Payload do_beatty(const BeattyArgs& a) {
    Json d;
    if (!a.disjoint.empty()) {
        if (!a.slope.empty()) throw CLI::ValidationError("beatty", "--slope and --disjoint are exclusive");
        const auto parts = detail::split_list(a.disjoint);
        if (parts.size() != 4) throw CLI::ValidationError("--disjoint", "expects p1,q1,p2,q2");
        std::vector<Int> v;
        for (const auto& s : parts) {
            try {
                v.push_back(std::stoll(s));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--disjoint", "not an integer: '" + s + "'");
            }
        }
        d["mode"] = "disjoint";
        d["p1"] = v[0];
        d["q1"] = v[1];
        d["p2"] = v[2];
        d["q2"] = v[3];
        const bool exists = beatty_disjoint_exists(v[0], v[1], v[2], v[3]);
        d["disjoint"] = exists;
        d["oracle"] = nullptr;
        if (a.oracle) {
            const Int grid = a.grid > 0 ? a.grid : lcm(v[1], v[3]);
            const auto res = oracle::oracle_beatty_disjoint(v[0], v[1], v[2], v[3], grid);
            if (res.decision != exists) {
                throw OracleDisagreement("offset search on grid 1/" + std::to_string(grid) +
                                         " gives " + (res.decision ? "true" : "false"));
            }
            Json o;
            o["grid"] = grid;
            o["decision"] = res.decision;
            o["offset1"] = res.offset1 ? Json(detail::rational_str(*res.offset1)) : Json(nullptr);
            o["offset2"] = res.offset2 ? Json(detail::rational_str(*res.offset2)) : Json(nullptr);
            d["oracle"] = o;
        }
        return {"beatty", d, {}};
    }
    if (a.slope.empty()) throw CLI::ValidationError("beatty", "one of --slope or --disjoint is required");
    if (a.oracle) throw CLI::ValidationError("--oracle", "only applies with --disjoint");
    const BeattySpec spec{detail::parse_rational(a.slope), detail::parse_rational(a.offset)};
    d["mode"] = "slice";
    d["slope"] = detail::rational_str(spec.slope);
    d["offset"] = detail::rational_str(spec.offset);
    d["from"] = a.from;
    d["to"] = a.to;
    d["values"] = detail::int_array(beatty_slice(spec, a.from, a.to));
    return {"beatty", d, {}};
}

struct OracleCheckArgs {
    std::string u, v, u_alphabet, v_alphabet;
    Int sweep = 0;
};

/// Compares the closed forms with the exhaustive search over every valid
/// problem with n, m <= limit.
inline Json sweep_report(Int limit) {
    Int instances = 0, positive = 0;
    Json bad = Json::array();
    for (Int n = 2; n <= limit; ++n) {
        for (Int A = 1; A < n; ++A) {
            if (!coprime(A, n)) continue;
            const Word u = christoffel_word(n, A, "a", "x");
            for (Int m = 2; m <= limit; ++m) {
                for (Int B = 1; B < m; ++B) {
                    if (!coprime(B, m)) continue;
                    const auto pr = SuperimpositionProblem::from_counts(n, A, m, B);
                    const Word v = christoffel_word(m, B, "b", "x");
                    const auto res = oracle::oracle_superimposable(u, v);
                    const bool dec = is_superimposable(pr);
                    const Int cnt = count_superimpositions(pr);
                    ++instances;
                    if (dec) ++positive;
                    bool shift_ok = true;
                    if (dec) {
                        shift_ok = oracle::disjoint_by_lcm_scan(u, reverse(v), canonical_shift(pr).shift);
                    }
                    if (dec != res.decision || cnt != static_cast<Int>(res.witnesses.size()) || !shift_ok) {
                        bad.push_back(Json{{"n", n}, {"A", A}, {"m", m}, {"B", B}});
                    }
                }
            }
        }
    }
    Json d;
    d["mode"] = "sweep";
    d["max_length"] = limit;
    d["instances"] = instances;
    d["superimposable"] = positive;
    d["disagreements"] = bad;
    return d;
}

inline Payload do_oracle_check(const OracleCheckArgs& a) {
    if (a.sweep > 0) {
        if (!a.u.empty() || !a.v.empty()) throw CLI::ValidationError("oracle-check", "--sweep excludes --u/--v");
        Json d = sweep_report(a.sweep);
        if (!d["disagreements"].empty()) {
            throw OracleDisagreement(std::to_string(d["disagreements"].size()) +
                                     " instances disagree; first: " + d["disagreements"][0].dump());
        }
        return {"oracle-check", d, {}};
    }
    if (a.u.empty() || a.v.empty()) throw CLI::ValidationError("oracle-check", "give --u and --v, or --sweep");
    const Word u = make_word(a.u, detail::alphabet_for(a.u, a.u_alphabet));
    const Word v = make_word(a.v, detail::alphabet_for(a.v, a.v_alphabet));
    const auto res = oracle::oracle_superimposable(u, v);
    Json d;
    d["mode"] = "pair";
    d["decision"] = res.decision;
    d["modulus"] = res.modulus;
    d["shifts_second"] = res.shifts_second;
    d["witnesses"] = detail::int_array(res.witnesses);
    return {"oracle-check", d, {}};
}

// ---------------------------------------------------------------------------
// Entry point

/// Parses `args` (without the program name), runs the verb and writes the
/// rendered payload to `out`; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Christoffel words, superimpositions and related constructions", "christoffel"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "build the Christoffel word C(n, alpha)");
    c_gen->add_option("--n", gen.n, "length")->required();
    c_gen->add_option("--alpha", gen.alpha, "occurrences of the low letter")->required();
    c_gen->add_option("--letters", gen.letters, "low,high letters")->capture_default_str();
    c_gen->add_flag("--reverse", gen.reversed, "reverse the word");
    c_gen->add_option("--conjugate", gen.conjugate_by, "rotate left by k after reversal");

    PositionsArgs pos;
    auto* c_pos = app.add_subcommand("positions", "low-letter positions, complement, Cayley cycle, path");
    c_pos->add_option("--n", pos.n)->required();
    c_pos->add_option("--alpha", pos.alpha)->required();
    c_pos->add_option("--letters", pos.letters)->capture_default_str();
    c_pos->add_flag("--oracle", pos.oracle, "compare with the positions read off the word");

    BalanceArgs bal;
    auto* c_bal = app.add_subcommand("balance", "balance, primitivity, letter counts, projection");
    c_bal->add_option("--word", bal.word)->required();
    c_bal->add_option("--alphabet", bal.alphabet, "comma-separated ordered alphabet");
    c_bal->add_option("--project", bal.project, "letter kept by the projection");
    c_bal->add_option("--filler", bal.filler, "filler letter of the projection")->capture_default_str();

    SuperimposeArgs sup;
    auto* c_sup = app.add_subcommand("superimpose", "decide and count superimpositions of C(n,qa), C(m,qb)");
    c_sup->add_option("--n", sup.n, "length of the first word")->required();
    c_sup->add_option("--a", sup.alpha, "reduced count alpha of the first word")->required();
    c_sup->add_option("--m", sup.m, "length of the second word")->required();
    c_sup->add_option("--b", sup.beta, "reduced count beta of the second word")->required();
    c_sup->add_option("--q", sup.q, "common factor")->capture_default_str();
    c_sup->add_flag("--count", sup.count, "show the count in text output");
    c_sup->add_flag("--shift", sup.shift, "show the canonical shift in text output");
    c_sup->add_flag("--diagnostics", sup.diagnostics, "include interval offsets and shift lists");
    c_sup->add_flag("--oracle", sup.oracle, "cross-check against exhaustive shift search");

    DecimateArgs dec;
    auto* c_dec = app.add_subcommand("decimate", "remove p of every q occurrences of a letter");
    c_dec->add_option("--word", dec.word)->required();
    c_dec->add_option("--alphabet", dec.alphabet);
    c_dec->add_option("--p", dec.p)->required();
    c_dec->add_option("--q", dec.q)->required();
    c_dec->add_option("--letter", dec.letter)->required();
    c_dec->add_option("--direction", dec.direction, "ltr or rtl")->capture_default_str();

    MergeArgs mer;
    auto* c_mer = app.add_subcommand("merge", "merge two perfectly superimposed words");
    c_mer->add_option("--u", mer.u)->required();
    c_mer->add_option("--v", mer.v)->required();
    c_mer->add_option("--u-alphabet", mer.u_alphabet);
    c_mer->add_option("--v-alphabet", mer.v_alphabet);
    c_mer->add_flag("--reverse-second", mer.reverse_second, "reverse v first");
    c_mer->add_option("--shift", mer.shift, "rotate v left by k (after reversal)");
    c_mer->add_flag("--collapse", mer.collapse, "also print the merge without filler letters");
    c_mer->add_flag("--oracle", mer.oracle, "cross-check disjointness with the residue scan");

    FrobeniusArgs fro;
    auto* c_fro = app.add_subcommand("frobenius", "two-coin Frobenius number and non-representable count");
    c_fro->add_option("--a", fro.a)->required();
    c_fro->add_option("--b", fro.b)->required();
    c_fro->add_option("--amount", fro.amounts, "amounts to test for representability");
    c_fro->add_flag("--oracle", fro.oracle, "cross-check against a sieve");

    BoundaryArgs bnd;
    auto* c_bnd = app.add_subcommand("boundary", "boundary word of the money-problem region");
    c_bnd->add_option("--a", bnd.a)->required();
    c_bnd->add_option("--b", bnd.b)->required();
    c_bnd->add_option("--letters", bnd.letters, "right,up letters")->capture_default_str();
    c_bnd->add_flag("--cayley", bnd.cayley, "also print the shifted Cayley walk");

    FraenkelArgs fra;
    auto* c_fra = app.add_subcommand("fraenkel", "Fraenkel word Fr_k");
    c_fra->add_option("--k", fra.k)->required();
    c_fra->add_flag("--frequencies", fra.frequencies, "show letter frequencies in text output");

    BeattyArgs bea;
    auto* c_bea = app.add_subcommand("beatty", "rational Beatty slices and disjointness");
    c_bea->add_option("--slope", bea.slope, "p/q");
    c_bea->add_option("--offset", bea.offset, "p/q")->capture_default_str();
    c_bea->add_option("--from", bea.from);
    c_bea->add_option("--to", bea.to);
    c_bea->add_option("--disjoint", bea.disjoint, "p1,q1,p2,q2");
    c_bea->add_option("--grid", bea.grid, "offset grid denominator for --oracle (default lcm(q1,q2))");
    c_bea->add_flag("--oracle", bea.oracle, "search concrete offsets on a rational grid");

    OracleCheckArgs orc;
    auto* c_orc = app.add_subcommand("oracle-check", "exhaustive shift search for a pair, or a sweep");
    c_orc->add_option("--u", orc.u);
    c_orc->add_option("--v", orc.v);
    c_orc->add_option("--u-alphabet", orc.u_alphabet);
    c_orc->add_option("--v-alphabet", orc.v_alphabet);
    c_orc->add_option("--sweep", orc.sweep, "check every problem with n, m <= N");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    for (const auto& arg : args) {
        if (arg.empty() || arg[0] == '-') continue;
        if (app.get_subcommand_no_throw(arg) == nullptr) {
            err << "error: unknown verb '" << arg << "'\n" << app.help();
            return parse_error;
        }
        break;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return parse_error;
    }

    try {
        std::optional<Payload> payload;
        if (c_gen->parsed()) payload = do_gen(gen);
        else if (c_pos->parsed()) payload = do_positions(pos);
        else if (c_bal->parsed()) payload = do_balance(bal);
        else if (c_sup->parsed()) payload = do_superimpose(sup);
        else if (c_dec->parsed()) payload = do_decimate(dec);
        else if (c_mer->parsed()) payload = do_merge(mer);
        else if (c_fro->parsed()) payload = do_frobenius(fro);
        else if (c_bnd->parsed()) payload = do_boundary(bnd);
        else if (c_fra->parsed()) payload = do_fraenkel(fra);
        else if (c_bea->parsed()) payload = do_beatty(bea);
        else if (c_orc->parsed()) payload = do_oracle_check(orc);
        if (!payload) {
            err << app.help();
            return parse_error;
        }
        out << render(*payload, json ? Format::json : Format::text);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const precondition_error& e) {
        err << "precondition violated: " << e.what() << '\n';
        return precondition_failed;
    } catch (const OracleDisagreement& e) {
        err << "oracle disagreement: " << e.what() << '\n';
        return oracle_mismatch;
    }
}

}  // namespace christoffel::cli
