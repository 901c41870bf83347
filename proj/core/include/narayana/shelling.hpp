#pragma once

/**
 * @file shelling.hpp
 * @brief Pure simplicial complexes, partial orders on their facets,
 *        restrictions, shellings and pre-shellings, and the order Omega_n on
 *        the facets of the order complex of J(2 x n).
 *
 * Order complexes are built on the proper part of a bounded graded poset,
 * so a facet of Delta(J(2 x n)) is a chain of 2n-1 nonempty proper ideals
 * and its ranks live in [2n-1].
 */

#include "narayana/dyck.hpp"
#include "narayana/posets.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace narayana {

/// Vertex subset as a bitmask; complexes hold at most 64 vertices.
using VertexSet = std::uint64_t;

class InvalidComplex : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class NotAntisymmetric : public std::invalid_argument {
public:
    NotAntisymmetric() : std::invalid_argument("facet relation is not antisymmetric") {}
};

class NotMaximalChain : public std::invalid_argument {
public:
    NotMaximalChain() : std::invalid_argument("not a maximal chain") {}
};

class PositionOutOfRange : public std::out_of_range {
public:
    PositionOutOfRange() : std::out_of_range("position out of range") {}
};

inline constexpr std::size_t kFaceGuard = std::size_t{1} << 20;

class PureComplex {
public:
    PureComplex() = default;
    /// Facets must be distinct, equicardinal, and use vertices below vertex_count <= 64.
    PureComplex(std::size_t vertex_count, std::vector<VertexSet> facets);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t facet_count() const noexcept { return facets_.size(); }
    const std::vector<VertexSet>& facets() const noexcept { return facets_; }
    VertexSet facet(std::size_t i) const { return facets_.at(i); }
    /// Common facet cardinality d.
    unsigned dimension_size() const noexcept { return size_; }

    /// Every face, the empty face included, sorted. Throws TooLarge when the
    /// candidate count sum 2^{|F|} exceeds the guard.
    std::vector<VertexSet> faces(std::size_t guard = kFaceGuard) const;

private:
    std::size_t vertex_count_ = 0;
    unsigned size_ = 0;
    std::vector<VertexSet> facets_;
};

/// Strict partial order on facet indices: generating relations plus a
/// reachability matrix built at construction.
class FacetOrder {
public:
    FacetOrder() = default;
    /// Relations (a, b) mean a < b. Throws NotAntisymmetric on a cycle.
    FacetOrder(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> relations);

    static FacetOrder empty(std::size_t size) { return FacetOrder(size, {}); }
    /// Total order listing facets from smallest to largest.
    static FacetOrder total(const std::vector<std::size_t>& sequence);

    std::size_t size() const noexcept { return size_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& relations() const noexcept { return relations_; }

    bool less(std::size_t a, std::size_t b) const;
    bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
    /// Every facet strictly below b.
    std::vector<std::size_t> below(std::size_t b) const;

    /// Covering pairs (a, b) of the order, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_covers() const;

    /// Order generated by this one plus extra relations.
    FacetOrder extended(const std::vector<std::pair<std::size_t, std::size_t>>& extra) const;

    /// Reverse order: a < b here iff b < a in the result.
    FacetOrder reversed() const;

    /// A linear extension (smallest first), picking uniformly among the
    /// currently minimal facets.
    std::vector<std::size_t> random_linear_extension(std::mt19937_64& rng) const;

private:
    std::size_t size_ = 0;
    std::size_t words_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> relations_;
    std::vector<std::uint64_t> below_;  // row b: bitset of facets < b
};

/// { x in F : there is E < F with E and F sharing all of F but x }.
VertexSet restriction(const PureComplex& complex, std::size_t facet, const FacetOrder& order);
std::vector<VertexSet> restrictions(const PureComplex& complex, const FacetOrder& order);

struct ConditionVerdict {
    bool holds = true;
    /// Facet indices and/or a face exhibiting the failure.
    std::vector<std::size_t> facets;
    std::optional<VertexSet> face;
};

struct PreshellingReport {
    ConditionVerdict mutual_containment;   // (i)
    ConditionVerdict interval_partition;   // (ii)
    ConditionVerdict restriction_implies;  // (iii)
    ConditionVerdict shelling_step;        // (iv)

    bool all() const {
        return mutual_containment.holds && interval_partition.holds && restriction_implies.holds &&
               shelling_step.holds;
    }
    bool consistent() const {
        const bool first = mutual_containment.holds;
        return interval_partition.holds == first && restriction_implies.holds == first &&
               shelling_step.holds == first;
    }
};

/// Evaluates the four equivalent pre-shelling conditions independently.
PreshellingReport check_preshelling(const PureComplex& complex, const FacetOrder& order,
                                    std::size_t face_guard = kFaceGuard);

struct ShellingCheck {
    bool ok = true;
    /// (F, G) with F before G and no witnessing E, x.
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// The sequence lists every facet exactly once, earliest first.
ShellingCheck is_shelling(const PureComplex& complex, const std::vector<std::size_t>& sequence);

struct Partitioning {
    std::vector<VertexSet> restriction;  // r(F) per facet
};

struct PartitionCheck {
    bool ok = true;
    std::optional<VertexSet> witness;  // a face covered zero or several times
    std::size_t witness_cover_count = 0;
    std::size_t face_count = 0;
};

Partitioning partition_intervals(const PureComplex& complex, const FacetOrder& order);
PartitionCheck verify_partitioning(const PureComplex& complex, const Partitioning& p,
                                   std::size_t face_guard = kFaceGuard);
/// Same verdict without listing faces: intervals pairwise disjoint and their
/// sizes summing to the known face count (empty face included).
PartitionCheck verify_partitioning_counted(const PureComplex& complex, const Partitioning& p,
                                           std::size_t face_count);

/// Order complex of the proper part: vertex v is poset element element_of[v].
struct OrderComplex {
    PureComplex complex;
    std::vector<std::size_t> element_of;
    std::vector<unsigned> vertex_rank;
};

OrderComplex order_complex(const GradedBoundedPoset& l);

/// beta(S) = |{ c : rho(r(c)) = S }| over the facets of an order complex.
FlagVector flag_h_from_partition(const OrderComplex& oc, unsigned height, const Partitioning& p);

/// rho of a vertex set, as ranks.
RankSubset vertex_ranks(const OrderComplex& oc, VertexSet face);

/// Delta(J(2 x n)) with facet i the chain of the i-th path of enumerate(n).
class DyckComplex {
public:
    explicit DyckComplex(unsigned n);

    unsigned n() const noexcept { return n_; }
    const IdealLattice& lattice() const noexcept { return lattice_; }
    const OrderComplex& order_complex() const noexcept { return oc_; }
    const PureComplex& complex() const noexcept { return oc_.complex; }
    const std::vector<DyckPath>& paths() const noexcept { return paths_; }

    VertexSet path_to_facet(const DyckPath& w) const;
    /// Throws NotMaximalChain unless the set is a maximal chain of the proper part.
    DyckPath facet_to_path(VertexSet facet) const;
    std::size_t facet_index(const DyckPath& w) const;

private:
    unsigned n_;
    IdealLattice lattice_;
    OrderComplex oc_;
    std::vector<DyckPath> paths_;
    std::vector<std::size_t> vertex_of_element_;
};

/// Rewrites positions (i, i+1, i+2): VVH -> VHV, HHV -> HVH, otherwise identity.
DyckPath s_map(const DyckPath& w, unsigned i);

/// (da(w), maj(w)), compared lexicographically.
std::pair<unsigned, unsigned> sigma_stat(const DyckPath& w);

inline constexpr unsigned kOmegaMaxN = 9;

/// u < w when u is reached from w by nontrivial s_i rewrites; facet
/// indices follow enumerate(n).
FacetOrder omega_n(unsigned n);

}  // namespace narayana
