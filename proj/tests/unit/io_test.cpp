#include <gtest/gtest.h>

#include "qbasis/io/documents.hpp"
#include "qbasis/io/problem.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace qbasis;
using namespace qbasis::testing;

namespace {

std::string data(const char* name) {
    return std::string(QBASIS_TEST_DATA) + "/" + name;
}

std::string error_of(const std::string& text) {
    try {
        io::parse_problem_text(text);
    } catch (const io::InputError& e) {
        return e.what();
    }
    return "";
}

TEST(ProblemTest, LoadsFixture) {
    const auto p = io::load_problem(data("f1.json"));
    const F1 f1;
    EXPECT_EQ(p.space->size(), 3u);
    EXPECT_EQ(p.ambient_rank, 2u);
    ASSERT_EQ(p.generators.size(), 3u);
    EXPECT_EQ(p.generators[0].coords(), f1.z1.coords());
    EXPECT_EQ(p.generators[2].coords(), f1.z3.coords());
    EXPECT_EQ(p.queries.size(), 3u);
    EXPECT_FALSE(p.basis);
    EXPECT_FALSE(p.space->weights());
}

TEST(ProblemTest, LoadsWeights) {
    const auto p = io::load_problem(data("all_zero.json"));
    ASSERT_TRUE(p.space->weights());
    EXPECT_EQ(p.space->weights()->front(), q("1/4"));
}

TEST(ProblemTest, DiagnosticsNameTheField) {
    const auto bad_row = [] {
        try {
            io::load_problem(data("bad_row_length.json"));
        } catch (const io::InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    }();
    EXPECT_NE(bad_row.find("generators[1][0]"), std::string::npos) << bad_row;

    EXPECT_NE(error_of(R"({"ambient_rank":1,"generators":[]})").find("omega_size"), std::string::npos);
    EXPECT_NE(error_of(R"({"omega_size":1,"ambient_rank":1})").find("generators"), std::string::npos);
    EXPECT_NE(error_of(R"({"omega_size":0,"ambient_rank":1,"generators":[]})").find("omega_size"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"omega_size":1,"ambient_rank":1,"generators":[[["1.5"]]]})")
                  .find("generators[0][0][0]"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"omega_size":1,"ambient_rank":1,"generators":[[[1]]]})").find("strings"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"omega_size":1,"ambient_rank":2,"generators":[[["1"]]]})").find("coordinate rows"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"omega_size":2,"weights":["1/2","1/3"],"ambient_rank":1,"generators":[]})")
                  .find("weights"),
              std::string::npos);
    EXPECT_NE(error_of("{ not json").find("invalid JSON"), std::string::npos);
}

TEST(ProblemTest, EmptyGeneratorListIsValid) {
    const auto p = io::parse_problem_text(R"({"omega_size":2,"ambient_rank":1,"generators":[]})");
    EXPECT_TRUE(p.generators.empty());
}

TEST(DocumentsTest, EncodesCanonically) {
    const auto s = make_space(3);
    EXPECT_EQ(io::encode_idempotent(Idempotent(s, {2, 0})).dump(), "[0,2]");
    EXPECT_EQ(io::encode_ring(ring(s, {q("2/4"), q("-3"), q("0/9")})).dump(), R"(["1/2","-3","0"])");
}

TEST(DocumentsTest, VectorsRoundTrip) {
    InstanceGenerator gen(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = make_space(gen.uniform(1, 6));
        const std::size_t m = gen.uniform(1, 4);
        const auto x = gen.vector(s, m, gen.zero_bias());
        const auto text = io::encode_vector(x).dump();
        ASSERT_EQ(io::parse_vector(nlohmann::json::parse(text), s, m, "x"), x);
    }
}

}  // namespace
