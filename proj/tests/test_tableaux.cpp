#include "narayana/posets.hpp"
#include "narayana/tableaux.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace narayana;

namespace {

RankSubset S(std::initializer_list<unsigned> xs) { return RankSubset::from_members(std::vector<unsigned>(xs)); }

// Naive s_lambda(q, ..., q^m): fill every cell with every value in [1, m]
// and keep the fillings that are semistandard.
QPoly schur_by_all_fillings(const Partition& shape, unsigned m) {
    const unsigned cells = shape.size();
    std::vector<Integer> coeffs;
    std::vector<unsigned> fill(cells, 1);
    if (m == 0) return cells == 0 ? QPoly::one() : QPoly{};
    while (true) {
        std::vector<std::vector<unsigned>> rows;
        std::size_t pos = 0;
        for (unsigned p : shape.parts()) {
            rows.emplace_back(fill.begin() + static_cast<long>(pos), fill.begin() + static_cast<long>(pos + p));
            pos += p;
        }
        bool ok = true;
        for (std::size_t i = 0; i < rows.size() && ok; ++i) {
            for (std::size_t j = 0; j < rows[i].size() && ok; ++j) {
                if (j > 0 && rows[i][j - 1] > rows[i][j]) ok = false;
                if (i > 0 && rows[i - 1][j] >= rows[i][j]) ok = false;
            }
        }
        if (ok) {
            unsigned e = 0;
            for (unsigned x : fill) e += x;
            if (coeffs.size() <= e) coeffs.resize(e + 1);
            coeffs[e] += 1;
        }
        std::size_t k = 0;
        while (k < cells && fill[k] == m) fill[k++] = 1;
        if (k == cells) break;
        ++fill[k];
    }
    return QPoly(std::move(coeffs));
}

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({1, 2}), InvalidPartition);
    EXPECT_THROW(Partition({2, 0}), InvalidPartition);
    const Partition p({3, 1});
    EXPECT_EQ(p.size(), 4u);
    EXPECT_EQ(p.column_length(1), 2u);
    EXPECT_EQ(p.column_length(2), 1u);
    EXPECT_EQ(Partition::two_column(0).length(), 0u);
}

TEST(SSYT, Validation) {
    EXPECT_NO_THROW(SSYT({{1, 2}, {3, 5}, {5, 6}}));
    EXPECT_THROW(SSYT({{2, 1}}), InvalidTableau);
    EXPECT_THROW(SSYT({{1, 1}, {1, 2}}), InvalidTableau);
    EXPECT_THROW(SSYT({{1}, {2, 3}}), InvalidTableau);
    EXPECT_THROW(SSYT({{0, 1}}), InvalidTableau);
}

TEST(EnumerateSSYT, Examples) {
    const auto one = enumerate_ssyt(Partition::two_column(1), 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], SSYT({{1, 1}}));

    const auto three = enumerate_ssyt(Partition::two_column(1), 2);
    EXPECT_EQ(three, (std::vector<SSYT>{SSYT({{1, 1}}), SSYT({{1, 2}}), SSYT({{2, 2}})}));

    const auto forced = enumerate_ssyt(Partition::two_column(2), 2);
    ASSERT_EQ(forced.size(), 1u);
    EXPECT_EQ(forced[0], SSYT({{1, 1}, {2, 2}}));

    EXPECT_TRUE(enumerate_ssyt(Partition::two_column(3), 2).empty());
    EXPECT_EQ(enumerate_ssyt(Partition{}, 0).size(), 1u);
}

TEST(RowSums, Examples) {
    EXPECT_EQ(row_sums(SSYT({{1, 1}})), (std::vector<unsigned>{2}));
    EXPECT_EQ(row_sums(SSYT({{1, 2}, {3, 5}, {5, 6}})), (std::vector<unsigned>{3, 8, 11}));
    EXPECT_EQ(row_sums(SSYT({{1, 1}, {2, 2}})), (std::vector<unsigned>{2, 4}));
}

TEST(SsytDyck, FigureExample) {
    const SSYT t({{1, 2}, {3, 5}, {5, 6}});
    const DyckPath w = ssyt_to_dyck(t, 7);
    EXPECT_EQ(w.to_string(), "vvhvvvhhvhhvhh");
    EXPECT_EQ(descent_set(w), S({3, 8, 11}));
    EXPECT_EQ(dyck_to_ssyt(w), t);
}

TEST(SsytDyck, Examples) {
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_EQ(ssyt_to_dyck(SSYT{}, n), staircase_path(n));
        EXPECT_EQ(dyck_to_ssyt(staircase_path(n)), SSYT{});
    }
    EXPECT_EQ(ssyt_to_dyck(SSYT({{1, 1}}), 2), DyckPath::parse("vhvh"));
    EXPECT_EQ(dyck_to_ssyt(DyckPath::parse("vhvh")), SSYT({{1, 1}}));
    EXPECT_THROW(ssyt_to_dyck(SSYT({{1, 2}}), 2), EntryOutOfRange);
    EXPECT_THROW(ssyt_to_dyck(SSYT({{1, 2, 3}}), 5), InvalidTableau);
}

TEST(SsytDyck, BijectionAndDescentSets) {
    for (unsigned n = 1; n <= 7; ++n) {
        std::size_t total = 0;
        for (unsigned k = 0; k < n; ++k) {
            const auto tabs = enumerate_ssyt(Partition::two_column(k), n - 1);
            EXPECT_EQ(tabs.size(), narayana::narayana(n, k).get_ui());
            total += tabs.size();
            for (const auto& t : tabs) {
                const DyckPath w = ssyt_to_dyck(t, n);
                EXPECT_EQ(dyck_to_ssyt(w), t);
                EXPECT_EQ(descent_set(w), row_sum_set(t));
                const auto sums = row_sums(t);
                EXPECT_TRUE(std::is_sorted(sums.begin(), sums.end(), std::less_equal<>{}) &&
                            std::adjacent_find(sums.begin(), sums.end()) == sums.end());
            }
        }
        EXPECT_EQ(total, dyck_count(n));
        for (const auto& w : enumerate(n)) EXPECT_EQ(ssyt_to_dyck(dyck_to_ssyt(w), n), w);
    }
}

TEST(SsytDyck, CountsMatchFlagH) {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto beta = flag_h_vector(ideal_lattice(chain_product_2xn(n)).lattice());
        FlagVector counts(2 * n);
        for (unsigned k = 0; k < n; ++k) {
            for (const auto& t : enumerate_ssyt(Partition::two_column(k), n - 1)) ++counts[row_sum_set(t)];
        }
        EXPECT_EQ(counts, beta) << n;
    }
}

TEST(Hook, Examples) {
    const auto two = Partition::two_column(1);
    EXPECT_EQ(hook_length(two, {1, 1}), 2u);
    EXPECT_EQ(content(two, {1, 1}), 0);
    for (unsigned k = 1; k <= 6; ++k) {
        for (unsigned i = 1; i <= k; ++i) EXPECT_EQ(hook_length(Partition::two_column(k), {i, 1}), k - i + 2);
    }
    const Partition p({4, 2, 1});
    EXPECT_EQ(hook_length(p, {1, 4}), 1u);
    EXPECT_EQ(hook_length(p, {2, 2}), 1u);
    EXPECT_EQ(hook_length(p, {3, 1}), 1u);
    EXPECT_EQ(hook_length(p, {1, 1}), 6u);
    EXPECT_EQ(content(p, {3, 1}), -2);
    EXPECT_THROW(hook_length(p, {2, 3}), CellNotInDiagram);
    EXPECT_THROW(content(p, {4, 1}), CellNotInDiagram);
}

TEST(Schur, Examples) {
    for (unsigned m = 0; m <= 5; ++m) {
        EXPECT_EQ(schur_principal_ssyt(Partition{}, m), QPoly::one());
        EXPECT_EQ(schur_principal_hook(Partition{}, m), QPoly::one());
    }
    EXPECT_EQ(schur_principal_ssyt(Partition::two_column(1), 2), (QPoly{0, 0, 1, 1, 1}));
    EXPECT_EQ(schur_principal_hook(Partition::two_column(1), 2), (QPoly{0, 0, 1, 1, 1}));
    EXPECT_EQ(schur_principal_ssyt(Partition::two_column(2), 2), QPoly::monomial(1, 6));
    EXPECT_EQ(schur_principal_hook(Partition::two_column(2), 2), QPoly::monomial(1, 6));
}

TEST(Schur, RoutesAgreeOnTwoColumnShapes) {
    for (unsigned k = 0; k <= 5; ++k) {
        for (unsigned m = 0; m <= 8; ++m) {
            const auto shape = Partition::two_column(k);
            EXPECT_EQ(schur_principal_ssyt(shape, m), schur_principal_hook(shape, m)) << k << "," << m;
        }
    }
}

TEST(Schur, RoutesAgreeOnOtherShapesAndBruteForce) {
    const std::vector<Partition> shapes = {Partition({3, 1}), Partition({2, 2, 1}), Partition({3}),
                                           Partition({1, 1, 1}), Partition({3, 2, 1})};
    for (const auto& shape : shapes) {
        for (unsigned m = 0; m <= 5; ++m) {
            const QPoly ssyt = schur_principal_ssyt(shape, m);
            EXPECT_EQ(ssyt, schur_principal_hook(shape, m));
            if (m <= 4) EXPECT_EQ(ssyt, schur_by_all_fillings(shape, m));
        }
    }
}

TEST(QNarayanaSchur, Examples) {
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_EQ(q_narayana_schur(n, 0), QPoly::one());
        EXPECT_EQ(q_narayana_schur(n, 0, SchurRoute::hook), QPoly::one());
    }
    EXPECT_EQ(q_narayana_schur(3, 1), (QPoly{0, 0, 1, 1, 1}));
    EXPECT_EQ(q_narayana_schur(3, 2), QPoly::monomial(1, 6));
    EXPECT_TRUE(q_narayana_schur(3, 3).is_zero());
    EXPECT_TRUE(q_narayana_schur(3, 3, SchurRoute::hook).is_zero());
}

TEST(QNarayanaSchur, ThreeWayIdentity) {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto joint = joint_q(n, Statistic::parse("des"));
        for (unsigned k = 0; k < n; ++k) {
            const QPoly closed = q_narayana_closed(n, k);
            EXPECT_EQ(q_narayana_schur(n, k, SchurRoute::ssyt), closed);
            EXPECT_EQ(q_narayana_schur(n, k, SchurRoute::hook), closed);
            EXPECT_EQ(joint.at(k), closed);
            EXPECT_EQ(q_narayana_schur(n, k).low_degree(), static_cast<long>(k * k + k));
        }
    }
}
