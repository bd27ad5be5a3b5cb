#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tnn/errors.hpp"
#include "tnn/lacunary.hpp"

using namespace tnn;

namespace {

const CauchonDiagram kFirstExample(3, 3, {{1, 3}, {2, 1}, {2, 3}, {3, 1}});
const CauchonDiagram kWorkedDiagram = CauchonDiagram::parse_ascii("..#\n##.\n...\n");

using Points = std::vector<GridIndex>;

}  // namespace

TEST(IsLacunary, Examples) {
    EXPECT_TRUE(is_lacunary(kFirstExample, {{1, 2}, {3, 3}}));
    EXPECT_FALSE(is_lacunary(CauchonDiagram::all_white(3, 3), {{1, 1}, {2, 2}}));  // (3,3) white to the south-east
    EXPECT_FALSE(is_lacunary(kWorkedDiagram, {}));
    EXPECT_FALSE(is_lacunary(kWorkedDiagram, {{1, 1}, {2, 2}}));  // (2,2) black
    EXPECT_FALSE(is_lacunary(kWorkedDiagram, {{1, 1}, {1, 2}}));  // rows must increase
    EXPECT_THROW(is_lacunary(kWorkedDiagram, {{4, 1}}), DomainError);
}

TEST(IsLacunary, BottomRowAndLastColumnAreSinglePoints) {
    std::mt19937_64 rng(71);
    for (int k = 0; k < 50; ++k) {
        const CauchonDiagram c = random_diagram(3, 4, rng);
        for (int b = 1; b <= 4; ++b) EXPECT_TRUE(is_lacunary(c, {{3, b}}));
        for (int j = 1; j <= 3; ++j) EXPECT_TRUE(is_lacunary(c, {{j, 4}}));
    }
}

TEST(LacunaryFrom, WorkedExamples) {
    EXPECT_EQ(lacunary_from(kWorkedDiagram, 1, 2).points, (Points{{1, 2}, {2, 3}}));
    EXPECT_EQ(lacunary_from(kWorkedDiagram, 1, 1).points, (Points{{1, 1}, {3, 2}}));
    EXPECT_EQ(lacunary_from(kWorkedDiagram, 2, 1).points, (Points{{2, 1}, {3, 2}}));
    EXPECT_EQ(lacunary_from(kWorkedDiagram, 2, 2).points, (Points{{2, 2}, {3, 3}}));
    EXPECT_EQ(lacunary_from(kWorkedDiagram, 1, 3).points, (Points{{1, 3}}));
    EXPECT_THROW(lacunary_from(kWorkedDiagram, 0, 1), DomainError);
}

TEST(LacunaryFrom, AllWhiteGivesTheDiagonal) {
    EXPECT_EQ(lacunary_from(CauchonDiagram::all_white(3, 4), 1, 1).points, (Points{{1, 1}, {2, 2}, {3, 3}}));
    EXPECT_EQ(lacunary_from(CauchonDiagram::all_white(3, 4), 1, 2).points, (Points{{1, 2}, {2, 3}, {3, 4}}));
}

TEST(LacunaryFrom, ValidForEveryBoxOfEveryDiagram) {
    for (int m = 1; m <= 3; ++m) {
        for (int p = 1; p <= 3; ++p) {
            for (const auto& c : enumerate_diagrams(m, p)) {
                for (int j = 1; j <= m; ++j) {
                    for (int b = 1; b <= p; ++b) {
                        const LacunarySequence s = lacunary_from(c, j, b);
                        EXPECT_EQ(s.start(), (GridIndex{j, b}));
                        EXPECT_TRUE(is_lacunary(c, s.points)) << c.to_ascii();
                        EXPECT_EQ(s, lacunary_from(c, j, b));
                        if (j == m || b == p) EXPECT_EQ(s.points.size(), 1u);
                    }
                }
            }
        }
    }
    std::mt19937_64 rng(73);
    const auto four = enumerate_diagrams(4, 4);
    for (int k = 0; k < 500; ++k) {
        const CauchonDiagram& c = four[rng() % four.size()];
        const int j = 1 + static_cast<int>(rng() % 4);
        const int b = 1 + static_cast<int>(rng() % 4);
        EXPECT_TRUE(is_lacunary(c, lacunary_from(c, j, b).points)) << c.to_ascii();
    }
}

TEST(LacunaryFrom, LargerRandomDiagrams) {
    std::mt19937_64 rng(79);
    for (int k = 0; k < 200; ++k) {
        const int m = 1 + static_cast<int>(rng() % 8);
        const int p = 1 + static_cast<int>(rng() % 8);
        const CauchonDiagram c = random_diagram(m, p, rng, 0.3 + 0.4 * static_cast<double>(k % 3) / 2);
        for (int j = 1; j <= m; ++j) {
            for (int b = 1; b <= p; ++b) EXPECT_TRUE(is_lacunary(c, lacunary_from(c, j, b).points));
        }
    }
}

TEST(AllLacunaryFrom, WorkedExamples) {
    const auto first = all_lacunary_from(kFirstExample, 1, 2);
    EXPECT_NE(std::find(first.begin(), first.end(), LacunarySequence{{{1, 2}, {3, 3}}}), first.end());

    const auto second = all_lacunary_from(kWorkedDiagram, 1, 2);
    EXPECT_NE(std::find(second.begin(), second.end(), LacunarySequence{{{1, 2}, {2, 3}}}), second.end());
    EXPECT_NE(std::find(second.begin(), second.end(), LacunarySequence{{{1, 2}, {3, 3}}}), second.end());

    const auto corner = all_lacunary_from(kWorkedDiagram, 3, 3);
    ASSERT_EQ(corner.size(), 1u);
    EXPECT_EQ(corner.front().points, (Points{{3, 3}}));
}

TEST(AllLacunaryFrom, NonemptyAndContainsTheCanonicalChoice) {
    for (int m = 1; m <= 3; ++m) {
        for (int p = 1; p <= 3; ++p) {
            for (const auto& c : enumerate_diagrams(m, p)) {
                for (int j = 1; j <= m; ++j) {
                    for (int b = 1; b <= p; ++b) {
                        const auto all = all_lacunary_from(c, j, b);
                        ASSERT_FALSE(all.empty());
                        if (j == m || b == p) EXPECT_EQ(all.size(), 1u);
                        const auto canonical = lacunary_from(c, j, b);
                        EXPECT_NE(std::find(all.begin(), all.end(), canonical), all.end());
                    }
                }
            }
        }
    }
}

TEST(AllLacunaryFrom, CapacityGuard) {
    EXPECT_THROW(all_lacunary_from(CauchonDiagram::all_white(5, 6), 1, 1), CapacityError);
}
