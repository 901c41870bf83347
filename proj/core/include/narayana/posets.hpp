#pragma once

/**
 * @file posets.hpp
 * @brief Finite posets given by cover relations, lattices of order ideals,
 *        linear extensions, and flag f/h-vectors of graded bounded posets.
 *
 * Flag vectors are indexed by subsets of the interior ranks 1..rho(1)-1:
 * the bottom and top element never appear in a counted chain.
 */

#include "narayana/dyck.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace narayana {

class InvalidPoset : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class TooLarge : public std::length_error {
    using std::length_error::length_error;
};

class NotLinearExtension : public std::invalid_argument {
public:
    NotLinearExtension() : std::invalid_argument("not a linear extension") {}
};

class RankOutOfRange : public std::out_of_range {
public:
    RankOutOfRange() : std::out_of_range("rank out of range") {}
};

using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

class FinitePoset {
public:
    FinitePoset() = default;
    /// Rejects cyclic cover digraphs and cover lists that are not a transitive reduction.
    FinitePoset(std::size_t size, std::vector<Cover> covers);

    static FinitePoset chain(std::size_t size);
    static FinitePoset antichain(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_.at(x); }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_.at(x); }

    bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

private:
    std::size_t size_ = 0;
    std::vector<Cover> covers_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
    std::vector<std::vector<bool>> leq_;
};

/// Poset with unique 0 and 1 in which every cover raises rank by one.
class GradedBoundedPoset {
public:
    /// Throws InvalidPoset if P has no unique min/max or is not graded.
    explicit GradedBoundedPoset(FinitePoset poset);

    const FinitePoset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }
    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }
    unsigned rank(std::size_t x) const { return rank_.at(x); }
    /// rho(1)
    unsigned height() const noexcept { return rank_[top_]; }
    const std::vector<std::size_t>& elements_of_rank(unsigned r) const { return by_rank_.at(r); }
    bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
    bool less(std::size_t a, std::size_t b) const { return poset_.less(a, b); }

private:
    FinitePoset poset_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
    std::vector<unsigned> rank_;
    std::vector<std::vector<std::size_t>> by_rank_;
};

/// J(P): order ideals of a base poset (at most 64 elements) under inclusion.
class IdealLattice {
public:
    explicit IdealLattice(const FinitePoset& base);

    const FinitePoset& base() const noexcept { return base_; }
    const GradedBoundedPoset& lattice() const noexcept { return lattice_; }
    std::size_t size() const noexcept { return ideals_.size(); }
    /// Bitmask over base elements.
    std::uint64_t ideal(std::size_t x) const { return ideals_.at(x); }
    /// Element holding the given ideal; throws std::out_of_range if absent.
    std::size_t index_of(std::uint64_t ideal) const { return index_.at(ideal); }

private:
    FinitePoset base_;
    std::vector<std::uint64_t> ideals_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    GradedBoundedPoset lattice_;
};

IdealLattice ideal_lattice(const FinitePoset& base);

/// 2 x n with (i,k) <= (i',k') iff i <= i' and k <= k'. Element (i,k) has
/// index (i-1)*n + (k-1).
FinitePoset chain_product_2xn(unsigned n);
inline std::size_t chain_product_index(unsigned i, unsigned k, unsigned n) {
    return static_cast<std::size_t>(i - 1) * n + (k - 1);
}

/// Element -> label in 1..p.
using LinearExtension = std::vector<unsigned>;
/// One-line notation a_1 ... a_p.
using Permutation = std::vector<unsigned>;

inline constexpr std::size_t kLinearExtensionGuard = 16;

bool is_linear_extension(const FinitePoset& p, const LinearExtension& omega);

/// Every linear extension, generated by repeatedly taking the smallest-index
/// available minimal element first. Throws TooLarge when |P| > guard.
std::vector<LinearExtension> linear_extensions(const FinitePoset& p,
                                               std::size_t guard = kLinearExtensionGuard);

/// { omega o sigma^{-1} : sigma a linear extension }.
std::vector<Permutation> jordan_holder(const FinitePoset& p, const LinearExtension& omega,
                                       std::size_t guard = kLinearExtensionGuard);

/// { i : pi_i > pi_{i+1} }
RankSubset permutation_descent_set(const Permutation& pi);

/// Linear extension of 2 x n -> Dyck path (C1 gives V, C2 gives H).
DyckPath extension_to_path(const LinearExtension& sigma, unsigned n);
LinearExtension path_to_extension(const DyckPath& w);

/// Values of a function 2^{[rank-1]} -> Z.
class FlagVector {
public:
    FlagVector() = default;
    explicit FlagVector(unsigned height);

    unsigned height() const noexcept { return height_; }
    /// Number of subsets of [height-1].
    std::size_t subset_count() const noexcept { return values_.size(); }
    std::int64_t operator[](RankSubset s) const { return values_.at(slot(s)); }
    std::int64_t& operator[](RankSubset s) { return values_.at(slot(s)); }
    /// The i-th subset in mask order.
    RankSubset subset(std::size_t i) const { return RankSubset::from_mask(static_cast<std::uint64_t>(i) << 1); }
    std::int64_t total() const;

    friend bool operator==(const FlagVector&, const FlagVector&) = default;

private:
    std::size_t slot(RankSubset s) const;

    unsigned height_ = 0;
    std::vector<std::int64_t> values_;
};

inline constexpr unsigned kFlagVectorMaxHeight = 25;

/// alpha(S): chains of L minus {0,1} whose rank set is S. Throws RankOutOfRange.
std::int64_t flag_f(const GradedBoundedPoset& l, RankSubset s);
/// beta(S) = sum over T in S of (-1)^{|S-T|} alpha(T).
std::int64_t flag_h(const GradedBoundedPoset& l, RankSubset s);

/// alpha for every S, by one pass over all interior chains bucketed by rank set.
FlagVector flag_f_vector(const GradedBoundedPoset& l);
/// beta for every S, by Moebius inversion of flag_f_vector.
FlagVector flag_h_vector(const GradedBoundedPoset& l);

struct MainTheoremRow {
    RankSubset subset;
    std::int64_t beta = 0;
    std::int64_t paths = 0;  // |{w : D_W(w) = S}|
};

struct MainTheoremReport {
    unsigned n = 0;
    DyckPath reference;
    std::vector<MainTheoremRow> rows;  // every S in [2n-1], mask order
    bool pass = false;
};

inline constexpr unsigned kMainTheoremMaxN = 6;

/// beta_{J(2 x n)}(S) against the descent sets taken w.r.t. the reference path.
MainTheoremReport verify_theorem_main(unsigned n, const DyckPath& reference);
/// Same, reusing a precomputed flag h-vector of J(2 x n).
MainTheoremReport verify_theorem_main(const FlagVector& beta, const DyckPath& reference);

}  // namespace narayana
