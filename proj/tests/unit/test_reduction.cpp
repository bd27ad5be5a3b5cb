#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tnn/errors.hpp"
#include "tnn/minors.hpp"
#include "tnn/oracle.hpp"
#include "tnn/reduction.hpp"
#include "../support/generators.hpp"

using namespace tnn;

namespace {

const Matrix kWorked{{16, 5, 0}, {12, 6, 3}, {4, 2, 1}};
const CauchonDiagram kWorkedDiagram = CauchonDiagram::parse_ascii("..#\n##.\n...\n");

std::set<GridIndex> zeros_of(const Matrix& m) {
    std::set<GridIndex> z;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int a = 1; a <= m.cols(); ++a) {
            if (m(i, a).is_zero()) z.insert({i, a});
        }
    }
    return z;
}

}  // namespace

TEST(CauchonReduce, TwoByTwo) {
    EXPECT_EQ(reduced_matrix(Matrix{{2, 1}, {1, 1}}), (Matrix{{1, 1}, {1, 1}}));
}

TEST(CauchonReduce, WorkedMatrix) {
    const ReductionTrace trace = cauchon_reduce(kWorked);
    EXPECT_EQ(trace.t_matrix, (Matrix{{6, 5, 0}, {0, 0, 3}, {4, 2, 1}}));
    EXPECT_EQ(zeros_of(trace.t_matrix), kWorkedDiagram.black_boxes());
    ASSERT_EQ(trace.steps.size(), 8u);
    EXPECT_EQ(trace.steps.front().r, (GridIndex{3, 3}));
    EXPECT_EQ(trace.steps.front().pivot, Rational(1));
    EXPECT_EQ(trace.steps[1].r, (GridIndex{3, 2}));
    EXPECT_EQ(trace.steps[1].pivot, Rational(2));
    EXPECT_EQ(trace.steps.back().r, (GridIndex{1, 2}));
}

TEST(CauchonReduce, ZeroMatrixStaysZero) {
    const ReductionTrace trace = cauchon_reduce(Matrix(3, 4));
    EXPECT_EQ(trace.t_matrix, Matrix(3, 4));
    for (const auto& s : trace.steps) EXPECT_TRUE(s.pivot.is_zero());
}

TEST(CauchonReduce, OneByOneHasNoSteps) {
    const ReductionTrace trace = cauchon_reduce(Matrix{{Rational(-3, 2)}});
    EXPECT_TRUE(trace.steps.empty());
    EXPECT_EQ(trace.t_matrix, (Matrix{{Rational(-3, 2)}}));
}

TEST(CauchonReduce, StepsNeverTouchEntriesAtOrAfterR) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int p = 1 + static_cast<int>(rng() % 4);
        const Matrix x = gen::random_matrix(rng, m, p);
        const ReductionTrace trace = cauchon_reduce(x, true);
        ASSERT_EQ(trace.intermediates.size(), trace.steps.size());
        Matrix before = x;
        for (std::size_t s = 0; s < trace.steps.size(); ++s) {
            const GridIndex r = trace.steps[s].r;
            EXPECT_EQ(trace.steps[s].pivot, before(r.row, r.col));
            const Matrix& after = trace.intermediates[s];
            for (int i = 1; i <= m; ++i) {
                for (int a = 1; a <= p; ++a) {
                    if (!(GridIndex{i, a} < r)) EXPECT_EQ(after(i, a), before(i, a));
                }
            }
            before = after;
        }
        EXPECT_EQ(before, trace.t_matrix);
    }
}

TEST(Classify, WorkedMatrixIsTnnInItsCell) {
    const CellAssignment cell = classify(kWorked);
    ASSERT_TRUE(cell.is_tnn);
    EXPECT_EQ(cell.diagram->black_boxes(), (std::set<GridIndex>{{1, 3}, {2, 1}, {2, 2}}));
}

TEST(Classify, NegativeDeterminantIsNotTnn) {
    const CellAssignment cell = classify(Matrix{{1, 2}, {3, 4}});
    EXPECT_FALSE(cell.is_tnn);
    EXPECT_FALSE(cell.diagram.has_value());
    EXPECT_EQ(cell.t_matrix(1, 1), Rational(-1, 2));
}

TEST(Classify, Identity) {
    const CellAssignment cell = classify(Matrix{{1, 0}, {0, 1}});
    ASSERT_TRUE(cell.is_tnn);
    EXPECT_EQ(cell.diagram->black_boxes(), (std::set<GridIndex>{{1, 2}, {2, 1}}));
}

TEST(Restore, Examples) {
    EXPECT_EQ(restore(Matrix{{1, 1}, {1, 1}}), (Matrix{{2, 1}, {1, 1}}));
    const Matrix m = restore(Matrix{{1, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    EXPECT_EQ(m, (Matrix{{2, 1, 0}, {1, 1, 1}, {1, 1, 1}}));
    EXPECT_TRUE(is_tnn_bruteforce(m));
    EXPECT_TRUE(determinant(m).is_zero());
    EXPECT_EQ(classify(m).diagram, kWorkedDiagram);
    EXPECT_EQ(restore(Matrix(2, 3)), Matrix(2, 3));
}

TEST(Restore, RejectsNonCellData) {
    EXPECT_THROW(restore(Matrix{{1, -1}, {1, 1}}), DomainError);
    EXPECT_THROW(restore(Matrix{{1, 1}, {1, 0}}), DomainError);  // zero at (2,2) alone is not Cauchon
}

TEST(Restore, RoundTripOnRandomCauchonMatrices) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 200; ++k) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const int p = 1 + static_cast<int>(rng() % 5);
        const Matrix t = gen::random_cauchon_t_matrix(rng, m, p);
        EXPECT_EQ(reduced_matrix(restore(t)), t);
    }
}

TEST(Representative, Examples) {
    EXPECT_EQ(representative(CauchonDiagram::all_black(2, 3)), Matrix(2, 3));
    EXPECT_EQ(representative(CauchonDiagram::all_white(2, 2)), (Matrix{{2, 1}, {1, 1}}));
    EXPECT_EQ(representative(kWorkedDiagram), (Matrix{{2, 1, 0}, {1, 1, 1}, {1, 1, 1}}));
}

TEST(Representative, ClassifiesBackToItsDiagram) {
    for (int m = 1; m <= 3; ++m) {
        for (int p = 1; p <= 3; ++p) {
            for (const auto& c : enumerate_diagrams(m, p)) {
                const CellAssignment cell = classify(representative(c));
                ASSERT_TRUE(cell.is_tnn);
                EXPECT_EQ(*cell.diagram, c);
            }
        }
    }
    std::mt19937_64 rng(47);
    const auto four = enumerate_diagrams(4, 4);
    for (int k = 0; k < 300; ++k) {
        const CauchonDiagram& c = four[rng() % four.size()];
        const CellAssignment cell = classify(random_representative(c, rng));
        ASSERT_TRUE(cell.is_tnn);
        EXPECT_EQ(*cell.diagram, c);
    }
}

TEST(Classify, TnnMatricesAreCauchonMatrices) {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 300; ++k) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int p = 1 + static_cast<int>(rng() % 4);
        const Matrix x = random_representative(random_diagram(m, p, rng), rng);
        ASSERT_TRUE(classify(x).is_tnn);
        EXPECT_TRUE(is_cauchon(m, p, zeros_of(x))) << x;
    }
}

TEST(Classify, AgreesWithAllMinorsOracle) {
    std::mt19937_64 rng(59);
    int tnn_seen = 0;
    int other_seen = 0;
    auto check = [&](const Matrix& x) {
        const bool expected = is_tnn_bruteforce(x);
        (expected ? tnn_seen : other_seen)++;
        EXPECT_EQ(classify(x).is_tnn, expected) << x;
    };
    for (const auto& c : enumerate_diagrams(3, 3)) {
        const Matrix rep = representative(c);
        check(rep);
        check(gen::perturb_one_entry(rep, rng));
    }
    for (int k = 0; k < 300; ++k) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int p = 1 + static_cast<int>(rng() % 4);
        check(gen::random_matrix(rng, m, p, -2, 9, 3));
    }
    EXPECT_GT(tnn_seen, 230);
    EXPECT_GT(other_seen, 100);
}

TEST(TpFormula, Examples) {
    EXPECT_TRUE(tp_t_formula_check(Matrix{{2, 1}, {1, 1}}));
    EXPECT_TRUE(tp_t_formula_check(Matrix{{Rational(5, 7)}}));
    EXPECT_THROW(tp_t_formula_check(Matrix{{1, 0}, {0, 1}}), DomainError);
}

TEST(TpFormula, HoldsOnRandomTotallyPositiveMatrices) {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 60; ++k) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int p = 1 + static_cast<int>(rng() % 4);
        EXPECT_TRUE(tp_t_formula_check(gen::random_tp_matrix(rng, m, p)));
    }
}

TEST(TpFormula, FinalMinorsFactorAlongTheDiagonal) {
    std::mt19937_64 rng(67);
    for (int k = 0; k < 40; ++k) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int p = 1 + static_cast<int>(rng() % 4);
        const Matrix x = gen::random_tp_matrix(rng, m, p);
        const Matrix t = reduced_matrix(x);
        for (int i = 1; i <= m; ++i) {
            for (int a = 1; a <= p; ++a) {
                const MinorSpec s = final_minor_at(i, a, m, p);
                Rational product = 1;
                for (int d = 0; d < s.size(); ++d) product *= t(i + d, a + d);
                EXPECT_EQ(minor(x, s), product);
            }
        }
    }
}
