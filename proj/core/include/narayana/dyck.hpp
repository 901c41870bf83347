#pragma once

/**
 * @file dyck.hpp
 * @brief Dyck paths over {V, H}, their 1-based position sets and the
 *        Narayana statistics defined on them.
 *
 * A path of semilength n is a word of n V-steps and n H-steps in which
 * every prefix has at least as many V as H. Paths are bit-packed: the step
 * at position p (1-based) sits at bit 2n - p, with H = 1, so numeric order
 * on equal-length paths is lexicographic order with V < H.
 */

#include "narayana/qpoly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace narayana {

enum class Step : std::uint8_t { V, H };

inline constexpr unsigned kMaxSemilength = 32;

class InvalidPath : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
public:
    LengthMismatch() : std::invalid_argument("length mismatch") {}
};

class IndexOutOfRange : public std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Subset of {1, ..., 63}, held as a bitmask where bit i marks member i.
class RankSubset {
public:
    constexpr RankSubset() = default;
    static constexpr RankSubset from_mask(std::uint64_t mask) {
        RankSubset s;
        s.mask_ = mask & ~std::uint64_t{1};
        return s;
    }
    static RankSubset from_members(const std::vector<unsigned>& members);
    /// {1, ..., last}
    static RankSubset interval(unsigned last);

    void insert(unsigned i);
    constexpr bool contains(unsigned i) const noexcept { return i < 64 && ((mask_ >> i) & 1U); }
    constexpr std::uint64_t mask() const noexcept { return mask_; }
    unsigned size() const noexcept;
    unsigned sum() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    /// Largest member, 0 when empty.
    unsigned max() const noexcept;
    std::vector<unsigned> members() const;
    constexpr bool is_subset_of(RankSubset other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    /// All members lie in [1, bound].
    constexpr bool within(unsigned bound) const noexcept {
        return bound >= 63 || (mask_ >> (bound + 1)) == 0;
    }

    friend constexpr bool operator==(RankSubset, RankSubset) = default;
    friend constexpr auto operator<=>(RankSubset a, RankSubset b) { return a.mask_ <=> b.mask_; }

private:
    std::uint64_t mask_ = 0;
};

/// "{2, 4}" ("{}" when empty).
std::string to_string(RankSubset s);

class DyckPath {
public:
    /// The empty path.
    DyckPath() = default;

    /// Throws InvalidPath unless the word is balanced and never dips below the diagonal.
    static DyckPath from_steps(const std::vector<Step>& steps);
    /// Accepts the letters v/h in either case.
    static DyckPath parse(std::string_view word);
    /// Bits in the packed layout described above; validated.
    static DyckPath from_bits(std::uint64_t bits, unsigned semilength);

    unsigned semilength() const noexcept { return semilength_; }
    unsigned length() const noexcept { return 2 * semilength_; }
    std::uint64_t bits() const noexcept { return bits_; }

    /// Step at 1-based position p.
    Step step(unsigned p) const noexcept { return ((bits_ >> (length() - p)) & 1U) ? Step::H : Step::V; }
    bool is_v(unsigned p) const noexcept { return step(p) == Step::V; }
    bool is_h(unsigned p) const noexcept { return step(p) == Step::H; }

    std::vector<Step> steps() const;
    /// Lowercase word over {v, h}.
    std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
        if (auto c = a.semilength_ <=> b.semilength_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    DyckPath(std::uint64_t bits, unsigned semilength) : bits_(bits), semilength_(semilength) {}

    std::uint64_t bits_ = 0;
    unsigned semilength_ = 0;
};

struct LabeledStep {
    Step letter;
    unsigned index;  // occurrence number within its letter class, 1-based
    friend bool operator==(const LabeledStep&, const LabeledStep&) = default;
};

class LabeledPath {
public:
    explicit LabeledPath(const DyckPath& path);

    const DyckPath& path() const noexcept { return path_; }
    const std::vector<LabeledStep>& steps() const noexcept { return steps_; }
    /// Label at 1-based position p.
    const LabeledStep& at(unsigned p) const { return steps_.at(p - 1); }
    /// "v1v2h1v3h2h3"
    std::string to_string() const;

private:
    DyckPath path_;
    std::vector<LabeledStep> steps_;
};

/// All paths of semilength n in lexicographic order (V < H).
std::vector<DyckPath> enumerate(unsigned n);

/// Valleys: positions i with w_i = H and w_{i+1} = V.
RankSubset descent_set(const DyckPath& w);
unsigned des(const DyckPath& w);
unsigned maj(const DyckPath& w);

/// Peaks VH at i whose prefix w_1..w_i has V-excess at least 2.
RankSubset high_peak_set(const DyckPath& w);
unsigned hp(const DyckPath& w);

/// Number of V steps in even positions.
unsigned ea(const DyckPath& w);

/// Centers i in [2, 2n-1] of factors w_{i-1} w_i w_{i+1} equal to VVH or HHV.
RankSubset ls_set(const DyckPath& w);
unsigned lnfs(const DyckPath& w);
unsigned maj_l(const DyckPath& w);

/// Number of factors VV.
unsigned da(const DyckPath& w);

LabeledPath label(const DyckPath& w);

/// Positions i where the labeled letter w_{i+1} occurs before w_i in the
/// reference path. Throws LengthMismatch for paths of different length.
RankSubset descent_set_wrt(const DyckPath& w, const DyckPath& reference);
unsigned des_wrt(const DyckPath& w, const DyckPath& reference);
unsigned maj_wrt(const DyckPath& w, const DyckPath& reference);

/// Precomputes positions of the labeled letters of one reference path.
class ReferenceOrder {
public:
    explicit ReferenceOrder(const DyckPath& reference);
    const DyckPath& reference() const noexcept { return reference_; }
    RankSubset descent_set(const DyckPath& w) const;

private:
    DyckPath reference_;
    std::vector<unsigned> v_pos_;
    std::vector<unsigned> h_pos_;
};

enum class StatisticKind { des, hp, ea, lnfs, da, des_wrt };
enum class CoStatistic { maj, maj_l, maj_wrt };

class UnknownStatistic : public std::invalid_argument {
public:
    explicit UnknownStatistic(std::string_view name)
        : std::invalid_argument("unknown statistic: " + std::string(name)) {}
};

class NoCoStatistic : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A named path statistic, with its reference path when it is des_W.
struct Statistic {
    StatisticKind kind = StatisticKind::des;
    std::optional<DyckPath> reference;

    static Statistic parse(std::string_view name);
    static Statistic wrt(DyckPath reference) { return {StatisticKind::des_wrt, std::move(reference)}; }

    std::string name() const;
    unsigned operator()(const DyckPath& w) const;
    /// The MAJ-type companion: maj for des, maj_l for lnfs, maj_wrt for des_W.
    std::optional<CoStatistic> paired() const;
};

std::string_view to_string(StatisticKind kind);
std::string_view to_string(CoStatistic co);
CoStatistic parse_costatistic(std::string_view name);

/// Value -> number of paths in D_n.
std::map<unsigned, std::uint64_t> distribution(unsigned n, const Statistic& stat);

/// Value k -> sum of q^{co(w)} over paths with stat(w) = k.
std::map<unsigned, QPoly> joint_q(unsigned n, const Statistic& stat, CoStatistic co,
                                  const std::optional<DyckPath>& reference = std::nullopt);
/// Uses stat.paired(); throws NoCoStatistic for ea, hp and da.
std::map<unsigned, QPoly> joint_q(unsigned n, const Statistic& stat);

/// Number of paths of semilength n, as a machine integer (n <= 32).
std::uint64_t dyck_count(unsigned n);
/// Lexicographic index of w within enumerate(w.semilength()).
std::uint64_t rank(const DyckPath& w);
/// Inverse of rank. Throws IndexOutOfRange for index >= dyck_count(n).
DyckPath unrank(unsigned n, std::uint64_t index);
/// Uniform draw through unrank.
DyckPath random_path(unsigned n, std::mt19937_64& rng);
DyckPath random_path(unsigned n, std::uint64_t seed);

/// V^n H^n
DyckPath staircase_path(unsigned n);
/// (VH)^n
DyckPath zigzag_path(unsigned n);

}  // namespace narayana
