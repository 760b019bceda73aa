#include <gtest/gtest.h>

#include "qbasis/qbasis.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace qbasis;
using namespace qbasis::testing;

namespace {

using Cols = std::vector<Fiber<Q>>;

TEST(FiberSolverTest, SolvesConsistentSystem) {
    const Cols cols{{1, 0}, {1, 1}};
    const auto c = solve_fiber<Q>(cols, Fiber<Q>{3, 2});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (std::vector<Q>{1, 2}));
}

TEST(FiberSolverTest, ReportsInconsistency) {
    const Cols cols{{0, 2}};
    EXPECT_FALSE(solve_fiber<Q>(cols, Fiber<Q>{1, 1}));
    EXPECT_FALSE(solve_fiber<Q>(Cols{}, Fiber<Q>{0, 1}));
    EXPECT_TRUE(solve_fiber<Q>(Cols{}, Fiber<Q>{0, 0}));
}

TEST(FiberSolverTest, FreeVariablesAreZero) {
    // Column 1 duplicates column 0, column 2 is zero: only column 0 is used.
    const Cols cols{{2, 0}, {2, 0}, {0, 0}};
    const auto c = solve_fiber<Q>(cols, Fiber<Q>{1, 0});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (std::vector<Q>{q("1/2"), 0, 0}));
}

TEST(FiberSolverTest, Rank) {
    EXPECT_EQ(fiber_rank<Q>(Cols{{1, 0}, {0, 2}, {1, 1}}, 2), 2u);
    EXPECT_EQ(fiber_rank<Q>(Cols{{1, 2, 3}, {2, 4, 6}}, 3), 1u);
    EXPECT_EQ(fiber_rank<Q>(Cols{}, 3), 0u);
}

TEST(FiberSolverTest, AgreesWithMinorRankAndSolutionsAreExact) {
    InstanceGenerator gen(3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t m = gen.uniform(1, 5);
        const std::size_t l = gen.uniform(0, 5);
        const double bias = gen.zero_bias();
        Cols cols(l, Fiber<Q>(m));
        for (auto& col : cols) {
            for (auto& v : col) v = gen.entry(bias);
        }
        Fiber<Q> target(m);
        for (auto& v : target) v = gen.entry(bias);

        ASSERT_EQ(fiber_rank<Q>(cols, m), minor_rank<Q>(cols, m));
        Cols augmented = cols;
        augmented.push_back(target);
        const bool member = minor_rank<Q>(augmented, m) == minor_rank<Q>(cols, m);
        const auto c = solve_fiber<Q>(cols, target);
        ASSERT_EQ(c.has_value(), member);
        if (c) {
            for (std::size_t r = 0; r < m; ++r) {
                Q sum{0};
                for (std::size_t j = 0; j < l; ++j) sum += (*c)[j] * cols[j][r];
                ASSERT_EQ(sum, target[r]);
            }
        }
    }
}

}  // namespace
