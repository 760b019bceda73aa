#include <gtest/gtest.h>

#include "qbasis/qbasis.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace qbasis;
using namespace qbasis::testing;

namespace {

class ModuleTest : public ::testing::Test, protected F1 {};

TEST_F(ModuleTest, VectorSupport) {
    EXPECT_EQ(vec_support(z1), idem({0, 1}));
    EXPECT_EQ(vec_support(z2), idem({1}));
    EXPECT_EQ(vec_support(z3), idem({0, 2}));
    EXPECT_EQ(vec_support(theta()), zero());
}

TEST_F(ModuleTest, EvaluateAtReadsFibers) {
    EXPECT_EQ(evaluate_at(z1, 0), (Fiber<Q>{1, 0}));
    EXPECT_EQ(evaluate_at(z1, 1), (Fiber<Q>{0, 2}));
    EXPECT_EQ(evaluate_at(theta(), 2), (Fiber<Q>{0, 0}));
    EXPECT_THROW(evaluate_at(z1, 3), StructuralError);
    const auto sum = vec_add(z1, z3);
    for (std::size_t w = 0; w < 3; ++w) {
        const auto a = evaluate_at(z1, w);
        const auto b = evaluate_at(z3, w);
        EXPECT_EQ(evaluate_at(sum, w), (Fiber<Q>{a[0] + b[0], a[1] + b[1]}));
    }
}

TEST_F(ModuleTest, RestrictAndScale) {
    EXPECT_EQ(restrict(e(), z3), z3);
    EXPECT_EQ(restrict(zero(), z3), theta());
    EXPECT_EQ(scalar_mul(Elem::one(space), z3), z3);
    EXPECT_EQ(restrict(idem({0}), z3), vec(space, {{1, 0, 0}, {1, 0, 0}}));
    for (unsigned mask = 0; mask < 8; ++mask) {
        const auto i = Idempotent::from_mask(space, mask);
        EXPECT_TRUE(vec_support(restrict(i, z1)).is_below(i));
        EXPECT_EQ(restrict(i, z1), to_ring<Q>(i) * z1);
    }
}

TEST_F(ModuleTest, ShapeMismatchIsStructural) {
    const auto wide = Vec::zero(space, 3);
    EXPECT_THROW(vec_add(z1, wide), StructuralError);
    const auto elsewhere = Vec::zero(make_space(4), 2);
    EXPECT_THROW(vec_add(z1, elsewhere), StructuralError);
    EXPECT_THROW(Vec::zero(space, 0), StructuralError);
    EXPECT_THROW(GeneratorSet<Q>(space, 2, {z1, wide}), StructuralError);
}

TEST_F(ModuleTest, ConcatenateExamples) {
    const std::vector<Idempotent> split{idem({0}), idem({1, 2})};
    const std::vector<Vec> same{z3, z3};
    EXPECT_EQ(concatenate<Q>(split, same), z3);
    const std::vector<Idempotent> whole{e()};
    const std::vector<Vec> one{z2};
    EXPECT_EQ(concatenate<Q>(whole, one), z2);

    const auto s2 = make_space(2);
    const std::vector<Idempotent> atoms{Idempotent(s2, {0}), Idempotent(s2, {1})};
    const std::vector<Vec> parts{vec(s2, {{5, 7}}), vec(s2, {{9, 4}})};
    EXPECT_EQ(concatenate<Q>(atoms, parts), vec(s2, {{5, 4}}));
}

TEST_F(ModuleTest, ConcatenateRequiresPartition) {
    const std::vector<Vec> two{z1, z2};
    const std::vector<Idempotent> overlap{idem({0, 1}), idem({1, 2})};
    const std::vector<Idempotent> gap{idem({0}), idem({1})};
    EXPECT_THROW(concatenate<Q>(overlap, two), PreconditionError);
    EXPECT_THROW(concatenate<Q>(gap, two), PreconditionError);
    const std::vector<Idempotent> three{idem({0}), idem({1}), idem({2})};
    EXPECT_THROW(concatenate<Q>(three, two), StructuralError);
}

TEST(ModulePropertyTest, SplitThenConcatenateIsIdentity) {
    InstanceGenerator gen(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = make_space(gen.uniform(1, 8));
        const std::size_t m = gen.uniform(1, 4);
        const auto x = gen.vector(s, m, gen.zero_bias());
        // A random partition of e: assign every atom a block.
        const std::size_t blocks = gen.uniform(1, s->size());
        std::vector<std::vector<std::size_t>> members(blocks);
        for (std::size_t w = 0; w < s->size(); ++w) members[gen.uniform(0, blocks - 1)].push_back(w);
        std::vector<Idempotent> partition;
        std::vector<Vec> parts;
        for (const auto& b : members) {
            partition.emplace_back(s, b);
            // Anything that agrees with x on the block will do.
            const auto noise = gen.vector(s, m, 0.5);
            parts.push_back(restrict(partition.back(), x) + restrict(complement(partition.back()), noise));
        }
        const auto glued = concatenate<Q>(partition, parts);
        ASSERT_EQ(glued, x);
        // Agreement on every block of a partition forces equality.
        for (std::size_t k = 0; k < partition.size(); ++k) {
            ASSERT_EQ(restrict(partition[k], glued), restrict(partition[k], parts[k]));
        }
    }
}

TEST(ModulePropertyTest, SupportLaws) {
    InstanceGenerator gen(6);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = make_space(gen.uniform(1, 8));
        const std::size_t m = gen.uniform(1, 4);
        const double bias = gen.zero_bias();
        const auto x = gen.vector(s, m, bias);
        const auto a = gen.ring(s, bias);
        ASSERT_EQ(vec_support(x).is_zero(), x.is_zero());
        ASSERT_EQ(vec_support(scalar_mul(a, x)), meet(support(a), vec_support(x)));
        Idempotent joined = Idempotent::zero(s);
        for (const auto& c : x.coords()) joined = join(joined, support(c));
        ASSERT_EQ(vec_support(x), joined);
    }
}

}  // namespace
