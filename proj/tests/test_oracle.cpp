#include <gtest/gtest.h>

#include <vector>

#include "christoffel/oracle.hpp"
#include "christoffel/superimpose.hpp"

using namespace christoffel;

namespace {

Word cw(Int n, Int a, const char* low) { return christoffel_word(n, a, low, "x"); }

}  // namespace

TEST(OracleSuperimposable, Examples) {
    const auto r1 = oracle::oracle_superimposable(cw(13, 4, "a"), cw(13, 3, "b"));
    EXPECT_TRUE(r1.decision);
    EXPECT_EQ(r1.witnesses.size(), 3u);
    EXPECT_EQ(r1.modulus, 13);

    const auto r2 = oracle::oracle_superimposable(cw(4, 1, "a"), cw(6, 1, "b"));
    EXPECT_EQ(r2.witnesses, (std::vector<Int>{1, 3, 5}));
    EXPECT_EQ(r2.modulus, 6);
    EXPECT_TRUE(r2.shifts_second);

    const auto r3 = oracle::oracle_superimposable(cw(3, 1, "a"), cw(4, 1, "b"));
    EXPECT_FALSE(r3.decision);
    EXPECT_TRUE(r3.witnesses.empty());
}

TEST(OracleSuperimposable, LongerFirstOperandIsTheOneRotated) {
    const Word u = cw(6, 1, "a");
    const Word v = cw(4, 1, "b");
    const auto r = oracle::oracle_superimposable(u, v);
    EXPECT_FALSE(r.shifts_second);
    EXPECT_EQ(r.modulus, 6);
    for (Int k : r.witnesses) EXPECT_TRUE(perfectly_superimposable(conjugate(u, k), v));
}

TEST(OracleSuperimposable, RejectsMismatchedAlphabets) {
    EXPECT_THROW(oracle::oracle_superimposable(cw(5, 2, "a"), cw(5, 2, "a")), precondition_error);
    EXPECT_THROW(oracle::oracle_superimposable(cw(5, 2, "a"), christoffel_word(5, 2, "b", "y")),
                 precondition_error);
}

TEST(OracleSuperimposable, ResidueReductionMatchesLcmScan) {
    for (Int n = 2; n <= 18; ++n) {
        for (Int A = 1; A < n; ++A) {
            for (Int m = 2; m <= 18; ++m) {
                for (Int B = 1; B < m; ++B) {
                    const Word u = cw(n, A, "a");
                    const Word v = cw(m, B, "b");
                    const auto fast = oracle::oracle_superimposable(u, v);
                    const auto slow = oracle::oracle_superimposable_lcm(u, v);
                    ASSERT_EQ(fast.witnesses, slow.witnesses) << n << " " << A << " " << m << " " << B;
                    ASSERT_EQ(fast.shifts_second, slow.shifts_second);
                    ASSERT_EQ(fast.modulus, slow.modulus);
                }
            }
        }
    }
}

TEST(OracleSuperimposable, WitnessesRevalidate) {
    for (Int n = 2; n <= 30; ++n) {
        for (Int A = 1; A < n; ++A) {
            for (Int m = 2; m <= 30; ++m) {
                for (Int B = 1; B < m; ++B) {
                    const Word u = cw(n, A, "a");
                    const Word v = cw(m, B, "b");
                    const auto r = oracle::oracle_superimposable(u, v);
                    ASSERT_EQ(r.decision, !r.witnesses.empty());
                    ASSERT_TRUE(oracle::revalidate(u, v, r));
                    for (Int k : r.witnesses) {
                        const bool ok = r.shifts_second ? perfectly_superimposable(u, conjugate(v, k))
                                                        : perfectly_superimposable(conjugate(u, k), v);
                        ASSERT_TRUE(ok) << n << " " << A << " " << m << " " << B << " k=" << k;
                    }
                }
            }
        }
    }
}

TEST(OracleSuperimposable, NonWitnessesCollide) {
    const Word u = cw(13, 4, "a");
    const Word v = cw(13, 3, "b");
    const auto r = oracle::oracle_superimposable(u, v);
    for (Int k = 0; k < 13; ++k) {
        const bool listed = std::find(r.witnesses.begin(), r.witnesses.end(), k) != r.witnesses.end();
        EXPECT_EQ(listed, perfectly_superimposable(u, conjugate(v, k))) << k;
    }
}

TEST(OracleBeatty, RejectsNonPositive) {
    EXPECT_THROW(oracle::oracle_beatty_disjoint(1, 1, 1, 1, 0), precondition_error);
    EXPECT_THROW(oracle::oracle_beatty_disjoint(1, 0, 1, 1, 1), precondition_error);
}
