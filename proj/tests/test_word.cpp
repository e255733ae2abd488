#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "christoffel/word.hpp"

using namespace christoffel;

namespace {

Word w(std::string_view text, std::string_view alphabet) {
    return make_word(text, Alphabet::from_string(alphabet));
}

// Direct factor comparison, kept deliberately naive.
bool balanced_naive(const Word& u) {
    const std::size_t n = u.size();
    for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            for (std::size_t j = 0; j + len <= n; ++j) {
                for (Symbol c = 0; c < u.alphabet().size(); ++c) {
                    Int a = 0, b = 0;
                    for (std::size_t t = 0; t < len; ++t) {
                        a += u[i + t] == c;
                        b += u[j + t] == c;
                    }
                    if (a - b > 1 || b - a > 1) return false;
                }
            }
        }
    }
    return true;
}

// Enumerates every word of length `len` over `alphabet`.
void for_each_word(const Alphabet& alphabet, std::size_t len, const std::function<void(const Word&)>& f) {
    std::vector<Symbol> s(len, 0);
    while (true) {
        f(Word(alphabet, s));
        std::size_t i = 0;
        while (i < len && ++s[i] == alphabet.size()) s[i++] = 0;
        if (i == len) return;
    }
}

}  // namespace

TEST(Alphabet, RejectsDuplicatesAndMultiSymbolLetters) {
    EXPECT_THROW(Alphabet({"a", "a"}), precondition_error);
    EXPECT_THROW(Alphabet({"ab", "x"}), precondition_error);
    EXPECT_THROW(Alphabet({" ", "x"}), precondition_error);
    EXPECT_NO_THROW(Alphabet({"α", "β"}));
    EXPECT_EQ(Alphabet::from_string("αβ").size(), 2u);
}

TEST(MakeWord, KeepsSymbolsVerbatim) {
    const Word u = w("aaxaaxax", "ax");
    EXPECT_EQ(u.size(), 8u);
    EXPECT_EQ(u.str(), "aaxaaxax");
    EXPECT_EQ(count_letter(u, "a"), 5);
    EXPECT_EQ(count_letter(u, "x"), 3);
}

TEST(MakeWord, EmptyWord) {
    const Word e = w("", "ax");
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(count_letter(e, "a"), 0);
}

TEST(MakeWord, NamesOffendingSymbolAndIndex) {
    try {
        w("ab", "ax");
        FAIL() << "expected rejection";
    } catch (const precondition_error& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("'b'"), std::string::npos);
        EXPECT_NE(msg.find("index 1"), std::string::npos);
    }
}

TEST(CountLetter, FraenkelThree) {
    EXPECT_EQ(count_letter(w("1213121", "123"), "1"), 4);
    EXPECT_THROW(count_letter(w("1213121", "123"), "4"), precondition_error);
}

TEST(Balance, Examples) {
    EXPECT_TRUE(is_balanced(w("112121", "12")));
    EXPECT_TRUE(is_balanced(w("112112", "12")));
    EXPECT_FALSE(is_balanced(w("1122", "12")));
    EXPECT_FALSE(is_circularly_balanced(w("112121", "12")));
    EXPECT_TRUE(is_circularly_balanced(w("112", "12")));
    EXPECT_TRUE(is_circularly_balanced(w("", "12")));
}

TEST(Balance, PrefixScanMatchesNaiveFactorComparison) {
    const Alphabet abc = Alphabet::from_string("abc");
    for (std::size_t len = 0; len <= 7; ++len) {
        for_each_word(abc, len, [](const Word& u) {
            ASSERT_EQ(is_balanced(u), balanced_naive(u)) << u;
            if (is_circularly_balanced(u)) {
                ASSERT_TRUE(is_balanced(u)) << u;
            }
        });
    }
}

TEST(Reverse, Examples) {
    EXPECT_EQ(reverse(w("aaxaaxax", "ax")).str(), "xaxaaxaa");
    EXPECT_EQ(reverse(w("aba", "ab")).str(), "aba");
    EXPECT_EQ(reverse(w("bzzzbzzzbzzzz", "bz")).str(), "zzzzbzzzbzzzb");
    const Word u = w("abcab", "abc");
    EXPECT_EQ(reverse(reverse(u)), u);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(w("aab", "ab"), 1).str(), "aba");
    EXPECT_EQ(conjugate(w("aab", "ab"), 3).str(), "aab");
    EXPECT_EQ(conjugate(w("bzzzbzzzbzzzz", "bz"), 9).str(), "zzzzbzzzbzzzb");
    EXPECT_EQ(conjugate(w("aab", "ab"), -1).str(), "baa");
    EXPECT_EQ(conjugate(w("", "ab"), 0).str(), "");
    EXPECT_THROW(conjugate(w("", "ab"), 1), precondition_error);
}

TEST(Conjugate, GroupLaw) {
    const Alphabet ab = Alphabet::from_string("ab");
    for (std::size_t len = 1; len <= 12; ++len) {
        std::vector<Symbol> s(len);
        for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<Symbol>((i * i + i / 3) % 2);
        const Word u(ab, s);
        const Int n = static_cast<Int>(len);
        for (Int i = -n; i <= n; ++i) {
            for (Int j = -n; j <= n; ++j) {
                ASSERT_EQ(conjugate(conjugate(u, i), j), conjugate(u, i + j));
            }
        }
        EXPECT_EQ(conjugate(u, n), u);
    }
}

TEST(Primitive, Examples) {
    EXPECT_TRUE(is_primitive(w("aaxaaxax", "ax")));
    EXPECT_FALSE(is_primitive(w("axax", "ax")));
    EXPECT_TRUE(is_primitive(w("a", "ax")));
    EXPECT_THROW(is_primitive(w("", "ax")), precondition_error);
}

TEST(Projection, Examples) {
    const Word u = w("1232343112", "1234");
    EXPECT_EQ(projection(u, "1", "x").str(), "1xxxxxx11x");
    EXPECT_EQ(projection(u, "4", "x").str(), "xxxxx4xxxx");
    EXPECT_EQ(projection(w("222", "12"), "1", "x").str(), "xxx");
    EXPECT_EQ(projection(u, "1", "x").alphabet().str(), "1<x");
    EXPECT_THROW(projection(u, "1", "2"), precondition_error);
}

TEST(Projection, PreservesCircularBalance) {
    const Alphabet abc = Alphabet::from_string("abc");
    int checked = 0;
    for (std::size_t len = 1; len <= 10; ++len) {
        for_each_word(abc, len, [&](const Word& u) {
            if (!is_circularly_balanced(u)) return;
            ++checked;
            for (const auto& letter : abc.letters()) {
                ASSERT_TRUE(is_circularly_balanced(projection(u, letter, "x"))) << u << " " << letter;
            }
        });
    }
    EXPECT_GT(checked, 0);
}

TEST(Decimate, Examples) {
    const Word u = w("aabaabababa", "ab");
    EXPECT_EQ(decimate(u, {1, 3, Direction::right_to_left, "a"}).str(), "abababab");
    EXPECT_EQ(decimate(w("abababab", "ab"), {1, 2, Direction::left_to_right, "b"}).str(), "aabaab");
    EXPECT_EQ(decimate(u, {0, 1, Direction::left_to_right, "a"}), u);
    EXPECT_EQ(decimate(u, {0, 1, Direction::right_to_left, "b"}), u);
    EXPECT_THROW(decimate(u, {2, 1, Direction::left_to_right, "a"}), precondition_error);
    EXPECT_THROW(decimate(u, {1, 2, Direction::left_to_right, "c"}), precondition_error);
}

TEST(Decimate, MatchesBlockByBlockReference) {
    // Reference: walk the occurrences in deletion order and drop the first p of
    // each block of q.
    auto reference = [](const Word& u, Int p, Int q, Direction dir, Symbol target) {
        const std::size_t n = u.size();
        std::vector<bool> drop(n, false);
        Int seen = 0;
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t i = dir == Direction::left_to_right ? step : n - 1 - step;
            if (u[i] != target) continue;
            if (seen % q < p) drop[i] = true;
            ++seen;
        }
        std::vector<Symbol> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (!drop[i]) s.push_back(u[i]);
        }
        return Word(u.alphabet(), s);
    };
    const Alphabet ab = Alphabet::from_string("ab");
    for (std::size_t len = 0; len <= 9; ++len) {
        for_each_word(ab, len, [&](const Word& u) {
            const Int occurrences = count_letter(u, "a");
            for (Int q = 1; q <= 4; ++q) {
                for (Int p = 0; p <= q; ++p) {
                    for (Direction dir : {Direction::left_to_right, Direction::right_to_left}) {
                        const Word out = decimate(u, {p, q, dir, "a"});
                        ASSERT_EQ(out, reference(u, p, q, dir, 0));
                        const Int removed = occurrences - count_letter(out, "a");
                        ASSERT_EQ(removed, p * (occurrences / q) + std::min(p, occurrences % q));
                        ASSERT_EQ(count_letter(out, "b"), count_letter(u, "b"));
                    }
                }
            }
        });
    }
}

TEST(MarkedPair, RequiresExactlyOneSharedLetter) {
    const Word u = w("axx", "ax");
    EXPECT_NO_THROW(marked_pair(u, w("bxx", "bx")));
    EXPECT_THROW(marked_pair(u, w("byy", "by")), precondition_error);
    EXPECT_THROW(marked_pair(u, w("axx", "ax")), precondition_error);
    EXPECT_THROW(marked_pair(u, w("abc", "abc")), precondition_error);
}
