#include "narayana/posets.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <random>

using namespace narayana;

namespace {

RankSubset S(std::initializer_list<unsigned> xs) { return RankSubset::from_members(std::vector<unsigned>(xs)); }

// All order ideals of 2 x n as pairs (a, b) with b <= a: a elements of C1, b of C2.
std::size_t ideals_of_2xn(unsigned n) { return static_cast<std::size_t>(n + 1) * (n + 2) / 2; }

// alpha(S) by brute force: every subset of interior elements that is a chain
// (pairwise comparable) with rank set S.
std::int64_t alpha_by_subsets(const GradedBoundedPoset& l, RankSubset s) {
    std::vector<std::size_t> interior;
    for (std::size_t x = 0; x < l.size(); ++x) {
        if (x != l.bottom() && x != l.top()) interior.push_back(x);
    }
    const auto ranks = s.members();
    std::int64_t count = 0;
    std::vector<std::size_t> pick(ranks.size());
    // Choose one element per rank, check pairwise comparability.
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == ranks.size()) {
            ++count;
            return;
        }
        for (std::size_t x : l.elements_of_rank(ranks[j])) {
            if (j > 0 && !l.less(pick[j - 1], x)) continue;
            pick[j] = x;
            go(j + 1);
        }
    };
    go(0);
    return count;
}

}  // namespace

TEST(FinitePoset, Validation) {
    EXPECT_THROW(FinitePoset(2, {{0, 1}, {1, 0}}), InvalidPoset);
    EXPECT_THROW(FinitePoset(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidPoset);
    EXPECT_THROW(FinitePoset(2, {{0, 0}}), InvalidPoset);
    EXPECT_THROW(FinitePoset(2, {{0, 5}}), InvalidPoset);
    const auto c = FinitePoset::chain(4);
    EXPECT_TRUE(c.leq(0, 3));
    EXPECT_FALSE(c.leq(3, 0));
    EXPECT_TRUE(c.less(1, 2));
    EXPECT_FALSE(c.less(2, 2));
}

TEST(GradedBoundedPoset, Validation) {
    EXPECT_THROW(GradedBoundedPoset(FinitePoset::antichain(2)), InvalidPoset);
    // 0 < a < b < 1 and 0 < c < 1: not graded
    EXPECT_THROW(GradedBoundedPoset(FinitePoset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})), InvalidPoset);
    const GradedBoundedPoset c(FinitePoset::chain(3));
    EXPECT_EQ(c.height(), 2u);
    EXPECT_EQ(c.rank(1), 1u);
}

TEST(ChainProduct, Examples) {
    const auto p1 = chain_product_2xn(1);
    EXPECT_EQ(p1.size(), 2u);
    EXPECT_EQ(p1.covers().size(), 1u);
    const auto p2 = chain_product_2xn(2);
    EXPECT_EQ(p2.size(), 4u);
    EXPECT_EQ(p2.covers().size(), 4u);
    const auto p4 = chain_product_2xn(4);
    EXPECT_EQ(p4.size(), 8u);
    EXPECT_TRUE(p4.leq(chain_product_index(1, 2, 4), chain_product_index(2, 3, 4)));
    EXPECT_FALSE(p4.leq(chain_product_index(2, 1, 4), chain_product_index(1, 3, 4)));
}

TEST(IdealLattice, Examples) {
    EXPECT_EQ(ideal_lattice(FinitePoset::antichain(2)).size(), 4u);
    EXPECT_EQ(ideal_lattice(chain_product_2xn(2)).size(), 6u);
    EXPECT_EQ(ideal_lattice(chain_product_2xn(5)).size(), 21u);
    for (unsigned n = 1; n <= 9; ++n) {
        const auto j = ideal_lattice(chain_product_2xn(n));
        EXPECT_EQ(j.size(), ideals_of_2xn(n));
        EXPECT_EQ(j.lattice().height(), 2 * n);
        for (std::size_t x = 0; x < j.size(); ++x) {
            EXPECT_EQ(j.lattice().rank(x), static_cast<unsigned>(__builtin_popcountll(j.ideal(x))));
        }
    }
}

TEST(IdealLattice, IdealsAreDownClosed) {
    const auto base = chain_product_2xn(4);
    const auto j = ideal_lattice(base);
    for (std::size_t x = 0; x < j.size(); ++x) {
        const auto ideal = j.ideal(x);
        for (std::size_t a = 0; a < base.size(); ++a) {
            for (std::size_t b = 0; b < base.size(); ++b) {
                if (((ideal >> b) & 1U) && base.leq(a, b)) EXPECT_TRUE((ideal >> a) & 1U);
            }
        }
    }
    for (const auto& [a, b] : j.lattice().poset().covers()) {
        EXPECT_EQ(__builtin_popcountll(j.ideal(b) ^ j.ideal(a)), 1);
        EXPECT_EQ(j.ideal(a) & ~j.ideal(b), 0u);
    }
}

TEST(LinearExtensions, Examples) {
    EXPECT_EQ(linear_extensions(FinitePoset::chain(3)).size(), 1u);
    EXPECT_EQ(linear_extensions(FinitePoset::antichain(3)).size(), 6u);
    const auto cat = oracle::catalan_table(8);
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(linear_extensions(chain_product_2xn(n)).size(), cat[n]);
    EXPECT_THROW(linear_extensions(FinitePoset::antichain(17)), TooLarge);
    for (const auto& ext : linear_extensions(chain_product_2xn(4))) {
        EXPECT_TRUE(is_linear_extension(chain_product_2xn(4), ext));
    }
}

TEST(JordanHolder, Examples) {
    const auto chain = FinitePoset::chain(4);
    const auto jc = jordan_holder(chain, {1, 2, 3, 4});
    ASSERT_EQ(jc.size(), 1u);
    EXPECT_EQ(jc[0], (Permutation{1, 2, 3, 4}));

    auto ja = jordan_holder(FinitePoset::antichain(2), {1, 2});
    std::sort(ja.begin(), ja.end());
    EXPECT_EQ(ja, (std::vector<Permutation>{{1, 2}, {2, 1}}));

    EXPECT_THROW(jordan_holder(chain, {2, 1, 3, 4}), NotLinearExtension);
}

TEST(JordanHolder, DescentCountsOfTwoByThree) {
    const auto p = chain_product_2xn(3);
    const auto omega = path_to_extension(DyckPath::parse("vvvhhh"));
    std::map<unsigned, int> hist;
    for (const auto& pi : jordan_holder(p, omega)) ++hist[permutation_descent_set(pi).size()];
    EXPECT_EQ(hist, (std::map<unsigned, int>{{0, 1}, {1, 3}, {2, 1}}));
}

TEST(ExtensionPath, Examples) {
    // sigma(1,1)=1, sigma(1,2)=2, sigma(2,1)=3, sigma(1,3)=4, sigma(1,4)=5, sigma(2,2)=6, ...
    LinearExtension sigma(8);
    sigma[chain_product_index(1, 1, 4)] = 1;
    sigma[chain_product_index(1, 2, 4)] = 2;
    sigma[chain_product_index(2, 1, 4)] = 3;
    sigma[chain_product_index(1, 3, 4)] = 4;
    sigma[chain_product_index(1, 4, 4)] = 5;
    sigma[chain_product_index(2, 2, 4)] = 6;
    sigma[chain_product_index(2, 3, 4)] = 7;
    sigma[chain_product_index(2, 4, 4)] = 8;
    const DyckPath w = extension_to_path(sigma, 4);
    EXPECT_EQ(label(w).to_string(), "v1v2h1v3v4h2h3h4");
    EXPECT_EQ(path_to_extension(w), sigma);

    EXPECT_EQ(extension_to_path({1, 2}, 1), DyckPath::parse("vh"));
    EXPECT_EQ(extension_to_path({1, 2, 3, 4, 5, 6}, 3), DyckPath::parse("vvvhhh"));
    EXPECT_THROW(extension_to_path({2, 1}, 1), NotLinearExtension);
}

TEST(ExtensionPath, MutuallyInverse) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto p = chain_product_2xn(n);
        const auto exts = linear_extensions(p);
        std::set<std::string> seen;
        for (const auto& e : exts) {
            const DyckPath w = extension_to_path(e, n);
            EXPECT_EQ(path_to_extension(w), e);
            seen.insert(w.to_string());
        }
        EXPECT_EQ(seen.size(), dyck_count(n));
        for (const auto& w : enumerate(n)) EXPECT_EQ(extension_to_path(path_to_extension(w), n), w);
    }
}

TEST(FlagF, Examples) {
    const auto j2 = ideal_lattice(chain_product_2xn(2));
    EXPECT_EQ(flag_f(j2.lattice(), RankSubset{}), 1);
    EXPECT_EQ(flag_f(j2.lattice(), S({2})), 2);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto j = ideal_lattice(chain_product_2xn(n));
        EXPECT_EQ(flag_f(j.lattice(), RankSubset::interval(2 * n - 1)), static_cast<std::int64_t>(dyck_count(n)));
    }
    EXPECT_THROW(flag_f(j2.lattice(), S({4})), RankOutOfRange);
}

TEST(FlagF, VectorMatchesPerSubsetAndBruteForce) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto j = ideal_lattice(chain_product_2xn(n));
        const auto alpha = flag_f_vector(j.lattice());
        for (std::size_t i = 0; i < alpha.subset_count(); ++i) {
            const RankSubset s = alpha.subset(i);
            EXPECT_EQ(alpha[s], flag_f(j.lattice(), s));
            EXPECT_EQ(alpha[s], alpha_by_subsets(j.lattice(), s));
        }
    }
}

TEST(FlagH, Examples) {
    const auto j3 = ideal_lattice(chain_product_2xn(3));
    EXPECT_EQ(flag_h(j3.lattice(), RankSubset{}), 1);
    // Brute force over D_3: descent sets are {}, {2}, {3}, {4}, {2,4}, once each.
    EXPECT_EQ(flag_h(j3.lattice(), S({3})), 1);
    EXPECT_EQ(flag_h(j3.lattice(), S({1})), 0);
    EXPECT_EQ(flag_h(j3.lattice(), S({2, 4})), 1);
    EXPECT_EQ(flag_h(j3.lattice(), S({2, 3})), 0);
    EXPECT_THROW(flag_h(j3.lattice(), S({6})), RankOutOfRange);
}

TEST(FlagH, RowSumsAndNonnegativity) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto j = ideal_lattice(chain_product_2xn(n));
        const auto beta = flag_h_vector(j.lattice());
        EXPECT_EQ(beta.total(), static_cast<std::int64_t>(dyck_count(n)));
        std::map<unsigned, std::int64_t> by_size;
        for (std::size_t i = 0; i < beta.subset_count(); ++i) {
            const RankSubset s = beta.subset(i);
            EXPECT_GE(beta[s], 0);
            by_size[s.size()] += beta[s];
            if (n <= 4) EXPECT_EQ(beta[s], flag_h(j.lattice(), s));
        }
        for (unsigned k = 0; k < n; ++k) EXPECT_EQ(by_size[k], narayana::narayana(n, k).get_si());
    }
}

TEST(FlagH, JordanHolderDescentSets) {
    // beta(S) equals the number of pi in L(P, omega) with descent set S, for any omega.
    for (unsigned n = 1; n <= 5; ++n) {
        const auto p = chain_product_2xn(n);
        const auto beta = flag_h_vector(ideal_lattice(p).lattice());
        for (const auto& omega : linear_extensions(p)) {
            FlagVector counts(2 * n);
            for (const auto& pi : jordan_holder(p, omega)) ++counts[permutation_descent_set(pi)];
            EXPECT_EQ(counts, beta) << "n=" << n;
        }
    }
}

TEST(FlagH, BooleanLattice) {
    // J(antichain of 3) is the Boolean lattice B_3; beta(S) = number of permutations of 3 with descent set S.
    const auto b3 = ideal_lattice(FinitePoset::antichain(3));
    const auto beta = flag_h_vector(b3.lattice());
    EXPECT_EQ(beta[RankSubset{}], 1);
    EXPECT_EQ(beta[S({1})], 2);
    EXPECT_EQ(beta[S({2})], 2);
    EXPECT_EQ(beta[S({1, 2})], 1);
}

TEST(MainTheorem, Examples) {
    const auto r1 = verify_theorem_main(1, DyckPath::parse("vh"));
    EXPECT_TRUE(r1.pass);
    ASSERT_EQ(r1.rows.size(), 2u);
    EXPECT_EQ(r1.rows[0].beta, 1);
    EXPECT_EQ(r1.rows[1].beta, 0);

    const auto r_stair = verify_theorem_main(3, DyckPath::parse("vvvhhh"));
    const auto r_zig = verify_theorem_main(3, DyckPath::parse("vhvhvh"));
    EXPECT_TRUE(r_stair.pass);
    EXPECT_TRUE(r_zig.pass);
    for (std::size_t i = 0; i < r_stair.rows.size(); ++i) EXPECT_EQ(r_stair.rows[i].beta, r_zig.rows[i].beta);

    EXPECT_TRUE(verify_theorem_main(2, DyckPath::parse("vvhh")).pass);
    EXPECT_THROW(verify_theorem_main(7, staircase_path(7)), TooLarge);
    EXPECT_THROW(verify_theorem_main(3, staircase_path(2)), LengthMismatch);
}

TEST(MainTheorem, ExhaustiveSmallAndRandomLarger) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& w : enumerate(n)) EXPECT_TRUE(verify_theorem_main(n, w).pass) << w.to_string();
    }
    std::mt19937_64 rng(31);
    for (unsigned n : {5u, 6u}) {
        const auto beta = flag_h_vector(ideal_lattice(chain_product_2xn(n)).lattice());
        for (int t = 0; t < 25; ++t) {
            const DyckPath w = random_path(n, rng);
            EXPECT_TRUE(verify_theorem_main(beta, w).pass) << w.to_string();
        }
    }
}
