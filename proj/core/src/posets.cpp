#include "narayana/posets.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace narayana {

// --------------------------------------------------------------- FinitePoset

FinitePoset::FinitePoset(std::size_t size, std::vector<Cover> covers)
    : size_(size), covers_(std::move(covers)), up_(size), down_(size), leq_(size, std::vector<bool>(size, false)) {
    for (const auto& [a, b] : covers_) {
        if (a >= size_ || b >= size_) throw InvalidPoset("cover refers to a missing element");
        if (a == b) throw InvalidPoset("self cover");
        up_[a].push_back(b);
        down_[b].push_back(a);
    }
    for (auto& v : up_) {
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InvalidPoset("duplicate cover");
    }
    for (auto& v : down_) std::sort(v.begin(), v.end());

    // Kahn order; leftovers mean a directed cycle.
    std::vector<std::size_t> indegree(size_);
    for (const auto& [a, b] : covers_) ++indegree[b];
    std::deque<std::size_t> ready;
    for (std::size_t x = 0; x < size_; ++x) {
        if (indegree[x] == 0) ready.push_back(x);
    }
    std::vector<std::size_t> topo;
    topo.reserve(size_);
    while (!ready.empty()) {
        const std::size_t x = ready.front();
        ready.pop_front();
        topo.push_back(x);
        for (std::size_t y : up_[x]) {
            if (--indegree[y] == 0) ready.push_back(y);
        }
    }
    if (topo.size() != size_) throw InvalidPoset("cover relation has a cycle");

    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const std::size_t x = *it;
        leq_[x][x] = true;
        for (std::size_t y : up_[x]) {
            for (std::size_t z = 0; z < size_; ++z) {
                if (leq_[y][z]) leq_[x][z] = true;
            }
        }
    }
    for (const auto& [a, b] : covers_) {
        for (std::size_t c : up_[a]) {
            if (c != b && leq_[c][b]) throw InvalidPoset("covers are not a transitive reduction");
        }
    }
}

FinitePoset FinitePoset::chain(std::size_t size) {
    std::vector<Cover> covers;
    for (std::size_t i = 0; i + 1 < size; ++i) covers.emplace_back(i, i + 1);
    return FinitePoset(size, std::move(covers));
}

FinitePoset FinitePoset::antichain(std::size_t size) { return FinitePoset(size, {}); }

// -------------------------------------------------------- GradedBoundedPoset

GradedBoundedPoset::GradedBoundedPoset(FinitePoset poset) : poset_(std::move(poset)) {
    const std::size_t n = poset_.size();
    if (n == 0) throw InvalidPoset("empty poset has no bottom");
    std::vector<std::size_t> minimal;
    std::vector<std::size_t> maximal;
    for (std::size_t x = 0; x < n; ++x) {
        if (poset_.lower_covers(x).empty()) minimal.push_back(x);
        if (poset_.upper_covers(x).empty()) maximal.push_back(x);
    }
    if (minimal.size() != 1) throw InvalidPoset("no unique minimum");
    if (maximal.size() != 1) throw InvalidPoset("no unique maximum");
    bottom_ = minimal.front();
    top_ = maximal.front();

    constexpr unsigned unset = ~0U;
    rank_.assign(n, unset);
    rank_[bottom_] = 0;
    std::deque<std::size_t> queue{bottom_};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y : poset_.upper_covers(x)) {
            if (rank_[y] == unset) {
                rank_[y] = rank_[x] + 1;
                queue.push_back(y);
            } else if (rank_[y] != rank_[x] + 1) {
                throw InvalidPoset("poset is not graded");
            }
        }
    }
    by_rank_.resize(rank_[top_] + 1);
    for (std::size_t x = 0; x < n; ++x) by_rank_[rank_[x]].push_back(x);
}

// --------------------------------------------------------------- IdealLattice

namespace {

std::vector<std::uint64_t> below_masks(const FinitePoset& base) {
    std::vector<std::uint64_t> out(base.size(), 0);
    for (std::size_t x = 0; x < base.size(); ++x) {
        for (std::size_t y : base.lower_covers(x)) out[x] |= std::uint64_t{1} << y;
    }
    return out;
}

std::vector<std::uint64_t> enumerate_ideals(const FinitePoset& base) {
    if (base.size() > 64) throw TooLarge("ideal lattice supports base posets of at most 64 elements");
    const auto below = below_masks(base);
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> stack{0};
    while (!stack.empty()) {
        const std::uint64_t ideal = stack.back();
        stack.pop_back();
        for (std::size_t x = 0; x < base.size(); ++x) {
            const std::uint64_t bit = std::uint64_t{1} << x;
            if ((ideal & bit) == 0 && (below[x] & ~ideal) == 0) {
                if (seen.insert(ideal | bit).second) stack.push_back(ideal | bit);
            }
        }
    }
    std::vector<std::uint64_t> ideals(seen.begin(), seen.end());
    std::sort(ideals.begin(), ideals.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return ideals;
}

std::unordered_map<std::uint64_t, std::size_t> index_ideals(const std::vector<std::uint64_t>& ideals) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < ideals.size(); ++i) index.emplace(ideals[i], i);
    return index;
}

FinitePoset inclusion_poset(const FinitePoset& base, const std::vector<std::uint64_t>& ideals,
                            const std::unordered_map<std::uint64_t, std::size_t>& index) {
    const auto below = below_masks(base);
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t x = 0; x < base.size(); ++x) {
            const std::uint64_t bit = std::uint64_t{1} << x;
            if ((ideals[i] & bit) == 0 && (below[x] & ~ideals[i]) == 0) {
                covers.emplace_back(i, index.at(ideals[i] | bit));
            }
        }
    }
    return FinitePoset(ideals.size(), std::move(covers));
}

}  // namespace

IdealLattice::IdealLattice(const FinitePoset& base)
    : base_(base),
      ideals_(enumerate_ideals(base)),
      index_(index_ideals(ideals_)),
      lattice_(inclusion_poset(base_, ideals_, index_)) {}

IdealLattice ideal_lattice(const FinitePoset& base) { return IdealLattice(base); }

FinitePoset chain_product_2xn(unsigned n) {
    if (n == 0) throw InvalidPoset("2 x n needs n >= 1");
    std::vector<Cover> covers;
    for (unsigned k = 1; k <= n; ++k) {
        if (k < n) {
            covers.emplace_back(chain_product_index(1, k, n), chain_product_index(1, k + 1, n));
            covers.emplace_back(chain_product_index(2, k, n), chain_product_index(2, k + 1, n));
        }
        covers.emplace_back(chain_product_index(1, k, n), chain_product_index(2, k, n));
    }
    return FinitePoset(2 * static_cast<std::size_t>(n), std::move(covers));
}

// ---------------------------------------------------------- Linear extensions

bool is_linear_extension(const FinitePoset& p, const LinearExtension& omega) {
    if (omega.size() != p.size()) return false;
    std::vector<bool> used(p.size() + 1, false);
    for (unsigned label : omega) {
        if (label == 0 || label > p.size() || used[label]) return false;
        used[label] = true;
    }
    for (const auto& [a, b] : p.covers()) {
        if (omega[a] >= omega[b]) return false;
    }
    return true;
}

namespace {

void extend(const FinitePoset& p, std::vector<std::size_t>& missing_below, LinearExtension& current,
            unsigned next_label, std::vector<LinearExtension>& out) {
    if (next_label > p.size()) {
        out.push_back(current);
        return;
    }
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (current[x] != 0 || missing_below[x] != 0) continue;
        current[x] = next_label;
        for (std::size_t y : p.upper_covers(x)) --missing_below[y];
        extend(p, missing_below, current, next_label + 1, out);
        for (std::size_t y : p.upper_covers(x)) ++missing_below[y];
        current[x] = 0;
    }
}

}  // namespace

std::vector<LinearExtension> linear_extensions(const FinitePoset& p, std::size_t guard) {
    if (p.size() > guard) {
        throw TooLarge("linear extension enumeration limited to " + std::to_string(guard) + " elements");
    }
    std::vector<std::size_t> missing_below(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) missing_below[x] = p.lower_covers(x).size();
    LinearExtension current(p.size(), 0);
    std::vector<LinearExtension> out;
    extend(p, missing_below, current, 1, out);
    return out;
}

std::vector<Permutation> jordan_holder(const FinitePoset& p, const LinearExtension& omega, std::size_t guard) {
    if (!is_linear_extension(p, omega)) throw NotLinearExtension();
    std::vector<Permutation> out;
    for (const auto& sigma : linear_extensions(p, guard)) {
        Permutation pi(p.size());
        for (std::size_t x = 0; x < p.size(); ++x) pi[sigma[x] - 1] = omega[x];
        out.push_back(std::move(pi));
    }
    return out;
}

RankSubset permutation_descent_set(const Permutation& pi) {
    RankSubset s;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
        if (pi[i] > pi[i + 1]) s.insert(static_cast<unsigned>(i + 1));
    }
    return s;
}

DyckPath extension_to_path(const LinearExtension& sigma, unsigned n) {
    if (n == 0 || !is_linear_extension(chain_product_2xn(n), sigma)) throw NotLinearExtension();
    std::vector<Step> steps(2 * static_cast<std::size_t>(n));
    for (unsigned k = 1; k <= n; ++k) {
        steps[sigma[chain_product_index(1, k, n)] - 1] = Step::V;
        steps[sigma[chain_product_index(2, k, n)] - 1] = Step::H;
    }
    return DyckPath::from_steps(steps);
}

LinearExtension path_to_extension(const DyckPath& w) {
    const unsigned n = w.semilength();
    LinearExtension sigma(2 * static_cast<std::size_t>(n));
    unsigned nv = 0;
    unsigned nh = 0;
    for (unsigned p = 1; p <= w.length(); ++p) {
        if (w.is_v(p)) sigma[chain_product_index(1, ++nv, n)] = p;
        else sigma[chain_product_index(2, ++nh, n)] = p;
    }
    return sigma;
}

// ----------------------------------------------------------------- Flag vectors

FlagVector::FlagVector(unsigned height) : height_(height) {
    if (height > kFlagVectorMaxHeight) throw TooLarge("flag vector height too large");
    const unsigned interior = height == 0 ? 0 : height - 1;
    values_.assign(std::size_t{1} << interior, 0);
}

std::size_t FlagVector::slot(RankSubset s) const {
    const unsigned interior = height_ == 0 ? 0 : height_ - 1;
    if (!s.within(interior)) throw RankOutOfRange();
    return static_cast<std::size_t>(s.mask() >> 1);
}

std::int64_t FlagVector::total() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }

std::int64_t flag_f(const GradedBoundedPoset& l, RankSubset s) {
    const unsigned h = l.height();
    if (!s.within(h == 0 ? 0 : h - 1)) throw RankOutOfRange();
    const auto ranks = s.members();
    if (ranks.empty()) return 1;

    std::vector<std::int64_t> count(l.size(), 0);
    for (std::size_t x : l.elements_of_rank(ranks.front())) count[x] = 1;
    for (std::size_t j = 1; j < ranks.size(); ++j) {
        for (std::size_t y : l.elements_of_rank(ranks[j])) {
            for (std::size_t x : l.elements_of_rank(ranks[j - 1])) {
                if (l.less(x, y)) count[y] += count[x];
            }
        }
    }
    std::int64_t total = 0;
    for (std::size_t x : l.elements_of_rank(ranks.back())) total += count[x];
    return total;
}

std::int64_t flag_h(const GradedBoundedPoset& l, RankSubset s) {
    const unsigned h = l.height();
    if (!s.within(h == 0 ? 0 : h - 1)) throw RankOutOfRange();
    // Enumerate submasks T of S.
    const std::uint64_t full = s.mask();
    std::int64_t total = 0;
    std::uint64_t t = full;
    while (true) {
        const auto sub = RankSubset::from_mask(t);
        const std::int64_t term = flag_f(l, sub);
        total += ((s.size() - sub.size()) % 2 == 0) ? term : -term;
        if (t == 0) break;
        t = (t - 1) & full;
    }
    return total;
}

FlagVector flag_f_vector(const GradedBoundedPoset& l) {
    const unsigned h = l.height();
    FlagVector alpha(h);
    if (h <= 1) {
        alpha[RankSubset{}] = 1;
        return alpha;
    }
    // below[x][m]: chains of interior elements ending at x whose ranks other
    // than rho(x) form m (bit r-1 for rank r).
    std::vector<std::vector<std::int64_t>> below(l.size());
    for (unsigned r = 1; r < h; ++r) {
        for (std::size_t y : l.elements_of_rank(r)) {
            auto& table = below[y];
            table.assign(std::size_t{1} << (r - 1), 0);
            table[0] = 1;
            for (unsigned rx = 1; rx < r; ++rx) {
                const std::size_t bit = std::size_t{1} << (rx - 1);
                for (std::size_t x : l.elements_of_rank(rx)) {
                    if (!l.less(x, y)) continue;
                    const auto& from = below[x];
                    for (std::size_t m = 0; m < from.size(); ++m) table[m | bit] += from[m];
                }
            }
            for (std::size_t m = 0; m < table.size(); ++m) {
                const std::uint64_t mask = (static_cast<std::uint64_t>(m) << 1) | (std::uint64_t{1} << r);
                alpha[RankSubset::from_mask(mask)] += table[m];
            }
        }
    }
    alpha[RankSubset{}] = 1;
    return alpha;
}

FlagVector flag_h_vector(const GradedBoundedPoset& l) {
    FlagVector beta = flag_f_vector(l);
    const std::size_t count = beta.subset_count();
    std::vector<std::int64_t> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = beta[beta.subset(i)];
    for (std::size_t bit = 1; bit < count; bit <<= 1) {
        for (std::size_t m = 0; m < count; ++m) {
            if (m & bit) values[m] -= values[m ^ bit];
        }
    }
    for (std::size_t i = 0; i < count; ++i) beta[beta.subset(i)] = values[i];
    return beta;
}

MainTheoremReport verify_theorem_main(const FlagVector& beta, const DyckPath& reference) {
    const unsigned n = reference.semilength();
    if (beta.height() != 2 * n) throw LengthMismatch();
    MainTheoremReport report;
    report.n = n;
    report.reference = reference;
    report.rows.resize(beta.subset_count());
    for (std::size_t i = 0; i < beta.subset_count(); ++i) {
        report.rows[i].subset = beta.subset(i);
        report.rows[i].beta = beta[beta.subset(i)];
    }
    const ReferenceOrder order(reference);
    for (const auto& w : enumerate(n)) {
        const auto s = order.descent_set(w);
        ++report.rows[static_cast<std::size_t>(s.mask() >> 1)].paths;
    }
    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const MainTheoremRow& r) { return r.beta == r.paths; });
    return report;
}

MainTheoremReport verify_theorem_main(unsigned n, const DyckPath& reference) {
    if (n == 0) throw InvalidPoset("main theorem needs n >= 1");
    if (n > kMainTheoremMaxN) throw TooLarge("main theorem check limited to n <= 6");
    if (reference.semilength() != n) throw LengthMismatch();
    const auto lattice = ideal_lattice(chain_product_2xn(n));
    return verify_theorem_main(flag_h_vector(lattice.lattice()), reference);
}

}  // namespace narayana
