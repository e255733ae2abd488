#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "christoffel/christoffel.hpp"

using namespace christoffel;

namespace {

// alpha-bar by exhaustive search.
Int complement_by_scan(Int alpha, Int n) {
    for (Int t = 0; t < n; ++t) {
        if ((alpha * t + 1) % n == 0) return t;
    }
    return -1;
}

// Lower Christoffel word of slope beta/alpha: step k is horizontal iff the
// height floor(k*beta/n) does not increase.
std::string word_from_line(Int alpha, Int beta) {
    const Int n = alpha + beta;
    std::string s;
    for (Int k = 0; k < n; ++k) s += ((k + 1) * beta / n == k * beta / n) ? 'a' : 'x';
    return s;
}

}  // namespace

TEST(ModularComplement, Examples) {
    EXPECT_EQ(modular_complement(5, 8), 3);
    EXPECT_EQ(modular_complement(3, 13), 4);
    for (Int n = 2; n <= 30; ++n) EXPECT_EQ(modular_complement(1, n), n - 1);
    EXPECT_THROW(modular_complement(2, 8), precondition_error);
    EXPECT_THROW(modular_complement(1, 1), precondition_error);
}

TEST(ModularComplement, EuclidMatchesScan) {
    for (Int n = 2; n <= 200; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            ASSERT_EQ(modular_complement(a, n), complement_by_scan(a, n)) << a << " " << n;
        }
    }
}

TEST(ChristoffelWord, Examples) {
    EXPECT_EQ(christoffel_word(8, 5, "a", "x").str(), "aaxaaxax");
    EXPECT_EQ(christoffel_word(13, 4, "a", "z").str(), "azzazzazzazzz");
    EXPECT_EQ(christoffel_word(4, 2, "a", "x").str(), "axax");
    EXPECT_EQ(christoffel_word(5, 5, "a", "x").str(), "aaaaa");
    EXPECT_EQ(christoffel_word(7, 4, "a", "b").str(), "aababab");
    EXPECT_THROW(christoffel_word(8, 0), precondition_error);
    EXPECT_THROW(christoffel_word(8, 9), precondition_error);
    EXPECT_THROW(christoffel_word(8, 3, "a", "a"), precondition_error);
}

TEST(ChristoffelWord, MatchesLatticeLine) {
    for (Int n = 2; n <= 120; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            ASSERT_EQ(christoffel_word(n, a).str(), word_from_line(a, n - a)) << n << " " << a;
        }
    }
}

TEST(LetterPositions, Examples) {
    EXPECT_EQ(letter_positions(8, 5).residues(), (std::vector<Int>{0, 1, 3, 4, 6}));
    EXPECT_EQ(letter_positions(13, 4).residues(), (std::vector<Int>{0, 3, 6, 9}));
    EXPECT_EQ(letter_positions(6, 6).residues(), (std::vector<Int>{0, 1, 2, 3, 4, 5}));
}

TEST(LetterPositions, AgreeWithConstructionIncludingPowers) {
    for (Int n = 1; n <= 200; ++n) {
        for (Int a = 1; a <= n; ++a) {
            const Word u = christoffel_word(n, a);
            ASSERT_EQ(positions_of(u, "a"), letter_positions(n, a)) << n << " " << a;
        }
    }
}

TEST(CayleyGraph, Examples) {
    const auto g = cayley_graph({8, 5, "a", "x"});
    EXPECT_EQ(g.labels().str(), "aaxaaxax");
    EXPECT_EQ(g.vertex_order(), (std::vector<Int>{0, 3, 6, 1, 4, 7, 2, 5, 0}));
    EXPECT_EQ(cayley_graph({13, 8, "a", "x"}).vertex_order(),
              (std::vector<Int>{0, 5, 10, 2, 7, 12, 4, 9, 1, 6, 11, 3, 8, 0}));
    EXPECT_EQ(cayley_graph({2, 1, "a", "x"}).labels().str(), "ax");
    EXPECT_THROW(cayley_graph({5, 5, "a", "x"}), precondition_error);
}

TEST(CayleyGraph, LabelsSpellTheWord) {
    for (Int n = 2; n <= 120; ++n) {
        for (Int a = 1; a < n; ++a) {
            const auto g = cayley_graph({n, a, "a", "x"});
            ASSERT_EQ(g.edges.size(), static_cast<std::size_t>(n));
            for (const auto& e : g.edges) {
                ASSERT_EQ(mod(e.source + n - a, n), e.target);
                ASSERT_EQ(e.label == 0, e.source < e.target);
            }
            ASSERT_EQ(g.labels(), christoffel_word(n, a)) << n << " " << a;
        }
    }
}

TEST(ChristoffelPath, Examples) {
    EXPECT_EQ(christoffel_path(5, 3).encode().str(), "aaxaaxax");
    const auto unit = christoffel_path(1, 1);
    EXPECT_EQ(unit.steps, (std::vector<Step>{Step::right, Step::up}));
    EXPECT_EQ(christoffel_path(8, 5).encode("α", "β").str(), "ααβααβαβααβαβ");
    EXPECT_THROW(christoffel_path(4, 2), precondition_error);
}

TEST(ChristoffelPath, BelowSegmentAndEncodesWord) {
    for (Int a = 1; a <= 60; ++a) {
        for (Int b = 1; b <= 60; ++b) {
            if (gcd(a, b) != 1) continue;
            const auto path = christoffel_path(a, b);
            ASSERT_TRUE(path.below_segment());
            ASSERT_EQ(path.encode(), christoffel_word(a + b, a));
        }
    }
}

TEST(Identities, ReversalSwapsLetterOrder) {
    for (Int n = 2; n <= 200; ++n) {
        for (Int a = 1; a < n; ++a) {
            ASSERT_EQ(reverse(christoffel_word(n, a, "a", "x")).str(),
                      christoffel_word(n, n - a, "x", "a").str())
                << n << " " << a;
        }
    }
}

TEST(Identities, ConjugateOfReversalByComplement) {
    for (Int n = 2; n <= 200; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            const Word u = christoffel_word(n, a);
            ASSERT_EQ(conjugate(reverse(u), modular_complement(a, n)), u) << n << " " << a;
        }
    }
}

TEST(Identities, PrimitiveBalancedAndLexicographicallyMinimal) {
    for (Int n = 2; n <= 120; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            const Word u = christoffel_word(n, a);
            ASSERT_TRUE(is_primitive(u));
            ASSERT_TRUE(is_circularly_balanced(u));
            const auto s = u.symbols();
            for (Int k = 1; k < n; ++k) {
                const Word c = conjugate(u, k);
                const auto t = c.symbols();
                ASSERT_TRUE(std::lexicographical_compare(s.begin(), s.end(), t.begin(), t.end()))
                    << n << " " << a << " " << k;
            }
        }
    }
}

TEST(Identities, PowerDecomposition) {
    for (Int n = 2; n <= 40; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            for (Int q = 1; q * n <= 200; ++q) {
                ASSERT_EQ(christoffel_word(n * q, a * q), power(christoffel_word(n, a), static_cast<std::size_t>(q)));
            }
        }
    }
}

TEST(Identities, MirrorPositionCriterion) {
    // i is a low-letter position of the reversed word iff some j has
    // i*alpha < j*n <= (i+1)*alpha.
    for (Int n = 2; n <= 100; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            const Word r = reverse(christoffel_word(n, a));
            for (Int i = 0; i < n; ++i) {
                bool exists = false;
                for (Int j = 0; j * n <= (i + 1) * a && !exists; ++j) exists = i * a < j * n;
                ASSERT_EQ(r[static_cast<std::size_t>(i)] == 0, exists) << n << " " << a << " " << i;
            }
        }
    }
}

TEST(Identities, DivisibleCountsGiveNestedPositions) {
    for (Int n = 2; n <= 100; ++n) {
        for (Int a = 1; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            for (Int b = 2 * a; b < n; b += a) {
                if (gcd(b, n) != 1) continue;
                ASSERT_TRUE(letter_positions(n, a).is_subset_of(letter_positions(n, b)))
                    << n << " " << a << " " << b;
            }
        }
    }
}
