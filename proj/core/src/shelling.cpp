#include "narayana/shelling.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace narayana {

namespace {

inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline unsigned card(VertexSet a) { return static_cast<unsigned>(std::popcount(a)); }

}  // namespace

// -------------------------------------------------------------- PureComplex

PureComplex::PureComplex(std::size_t vertex_count, std::vector<VertexSet> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets)) {
    if (vertex_count_ > 64) throw InvalidComplex("complexes are limited to 64 vertices");
    const VertexSet allowed = vertex_count_ == 64 ? ~VertexSet{0} : ((VertexSet{1} << vertex_count_) - 1);
    if (!facets_.empty()) size_ = card(facets_.front());
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : facets_) {
        if (!subset_of(f, allowed)) throw InvalidComplex("facet uses an unknown vertex");
        if (card(f) != size_) throw InvalidComplex("facets differ in cardinality");
        if (!seen.insert(f).second) throw InvalidComplex("duplicate facet");
    }
}

std::vector<VertexSet> PureComplex::faces(std::size_t guard) const {
    std::size_t candidates = 0;
    for (VertexSet f : facets_) {
        candidates += std::size_t{1} << card(f);
        if (candidates > guard) throw TooLarge("complex too large for face enumeration");
    }
    std::unordered_set<VertexSet> all;
    all.reserve(candidates);
    for (VertexSet f : facets_) {
        VertexSet sub = f;
        while (true) {
            all.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<VertexSet> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------- FacetOrder

FacetOrder::FacetOrder(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> relations)
    : size_(size), words_((size + 63) / 64), relations_(std::move(relations)), below_(size_ * words_, 0) {
    std::vector<std::vector<std::size_t>> lower(size_);
    std::vector<std::size_t> indegree(size_, 0);
    std::vector<std::vector<std::size_t>> upper(size_);
    for (const auto& [a, b] : relations_) {
        if (a >= size_ || b >= size_) throw std::out_of_range("relation refers to a missing facet");
        if (a == b) throw NotAntisymmetric();
        lower[b].push_back(a);
        upper[a].push_back(b);
        ++indegree[b];
    }
    std::deque<std::size_t> ready;
    for (std::size_t x = 0; x < size_; ++x) {
        if (indegree[x] == 0) ready.push_back(x);
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
        const std::size_t b = ready.front();
        ready.pop_front();
        ++processed;
        std::uint64_t* row = &below_[b * words_];
        for (std::size_t a : lower[b]) {
            const std::uint64_t* from = &below_[a * words_];
            for (std::size_t w = 0; w < words_; ++w) row[w] |= from[w];
            row[a / 64] |= std::uint64_t{1} << (a % 64);
        }
        for (std::size_t c : upper[b]) {
            if (--indegree[c] == 0) ready.push_back(c);
        }
    }
    if (processed != size_) throw NotAntisymmetric();
}

FacetOrder FacetOrder::total(const std::vector<std::size_t>& sequence) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) rel.emplace_back(sequence[i], sequence[i + 1]);
    return FacetOrder(sequence.size(), std::move(rel));
}

bool FacetOrder::less(std::size_t a, std::size_t b) const {
    if (a >= size_ || b >= size_) throw std::out_of_range("facet index out of range");
    return (below_[b * words_ + a / 64] >> (a % 64)) & 1U;
}

std::vector<std::size_t> FacetOrder::below(std::size_t b) const {
    if (b >= size_) throw std::out_of_range("facet index out of range");
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t m = below_[b * words_ + w]; m != 0; m &= m - 1) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FacetOrder::hasse_covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::vector<std::uint64_t> cand(words_);
    for (std::size_t b = 0; b < size_; ++b) {
        std::copy_n(&below_[b * words_], words_, cand.begin());
        for (std::size_t z : below(b)) {
            for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~below_[z * words_ + w];
        }
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t m = cand[w]; m != 0; m &= m - 1) {
                out.emplace_back(w * 64 + static_cast<std::size_t>(std::countr_zero(m)), b);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FacetOrder FacetOrder::extended(const std::vector<std::pair<std::size_t, std::size_t>>& extra) const {
    auto rel = relations_;
    rel.insert(rel.end(), extra.begin(), extra.end());
    return FacetOrder(size_, std::move(rel));
}

FacetOrder FacetOrder::reversed() const {
    auto rel = relations_;
    for (auto& [a, b] : rel) std::swap(a, b);
    return FacetOrder(size_, std::move(rel));
}

std::vector<std::size_t> FacetOrder::random_linear_extension(std::mt19937_64& rng) const {
    std::vector<std::size_t> indegree(size_, 0);
    std::vector<std::vector<std::size_t>> upper(size_);
    for (const auto& [a, b] : relations_) {
        upper[a].push_back(b);
        ++indegree[b];
    }
    std::vector<std::size_t> available;
    for (std::size_t x = 0; x < size_; ++x) {
        if (indegree[x] == 0) available.push_back(x);
    }
    std::vector<std::size_t> out;
    out.reserve(size_);
    while (!available.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, available.size() - 1);
        const std::size_t slot = pick(rng);
        const std::size_t x = available[slot];
        available.erase(available.begin() + static_cast<std::ptrdiff_t>(slot));
        out.push_back(x);
        for (std::size_t y : upper[x]) {
            if (--indegree[y] == 0) available.insert(std::upper_bound(available.begin(), available.end(), y), y);
        }
    }
    return out;
}

// ------------------------------------------------------------- Restrictions

VertexSet restriction(const PureComplex& complex, std::size_t facet, const FacetOrder& order) {
    const VertexSet f = complex.facet(facet);
    const unsigned d = complex.dimension_size();
    VertexSet r = 0;
    for (std::size_t e : order.below(facet)) {
        const VertexSet shared = complex.facet(e) & f;
        if (d > 0 && card(shared) == d - 1) r |= f & ~shared;
    }
    return r;
}

std::vector<VertexSet> restrictions(const PureComplex& complex, const FacetOrder& order) {
    if (order.size() != complex.facet_count()) throw std::invalid_argument("order size differs from facet count");
    std::vector<VertexSet> out(complex.facet_count());
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = restriction(complex, f, order);
    return out;
}

PreshellingReport check_preshelling(const PureComplex& complex, const FacetOrder& order, std::size_t face_guard) {
    const auto faces = complex.faces(face_guard);
    const auto r = restrictions(complex, order);
    const auto& facets = complex.facets();
    const std::size_t m = facets.size();
    const unsigned d = complex.dimension_size();
    PreshellingReport report;

    // (i)
    for (std::size_t f = 0; f < m && report.mutual_containment.holds; ++f) {
        for (std::size_t g = f + 1; g < m; ++g) {
            if (subset_of(r[f], facets[g]) && subset_of(r[g], facets[f])) {
                report.mutual_containment = {false, {f, g}, std::nullopt};
                break;
            }
        }
    }

    // (ii)
    for (VertexSet face : faces) {
        std::vector<std::size_t> covering;
        for (std::size_t f = 0; f < m; ++f) {
            if (subset_of(r[f], face) && subset_of(face, facets[f])) covering.push_back(f);
        }
        if (covering.size() != 1) {
            report.interval_partition = {false, std::move(covering), face};
            break;
        }
    }

    // (iii)
    for (std::size_t f = 0; f < m && report.restriction_implies.holds; ++f) {
        for (std::size_t g = 0; g < m; ++g) {
            if (subset_of(r[f], facets[g]) && !order.leq(f, g)) {
                report.restriction_implies = {false, {f, g}, std::nullopt};
                break;
            }
        }
    }

    // (iv), straight from the definition without using r.
    for (std::size_t g = 0; g < m && report.shelling_step.holds; ++g) {
        const auto earlier = order.below(g);
        for (std::size_t f = 0; f < m; ++f) {
            if (order.leq(g, f)) continue;
            const VertexSet fg = facets[f] & facets[g];
            const bool witnessed = std::any_of(earlier.begin(), earlier.end(), [&](std::size_t e) {
                const VertexSet eg = facets[e] & facets[g];
                return d > 0 && card(eg) == d - 1 && subset_of(fg, eg);
            });
            if (!witnessed) {
                report.shelling_step = {false, {f, g}, std::nullopt};
                break;
            }
        }
    }
    return report;
}

ShellingCheck is_shelling(const PureComplex& complex, const std::vector<std::size_t>& sequence) {
    const std::size_t m = complex.facet_count();
    if (sequence.size() != m) throw std::invalid_argument("sequence must list every facet once");
    std::vector<bool> seen(m, false);
    for (std::size_t x : sequence) {
        if (x >= m || seen[x]) throw std::invalid_argument("sequence must list every facet once");
        seen[x] = true;
    }
    const unsigned d = complex.dimension_size();
    for (std::size_t j = 1; j < m; ++j) {
        const VertexSet g = complex.facet(sequence[j]);
        for (std::size_t i = 0; i < j; ++i) {
            const VertexSet fg = complex.facet(sequence[i]) & g;
            bool witnessed = false;
            for (std::size_t k = 0; k < j && !witnessed; ++k) {
                const VertexSet eg = complex.facet(sequence[k]) & g;
                witnessed = d > 0 && card(eg) == d - 1 && subset_of(fg, eg);
            }
            if (!witnessed) return {false, std::make_pair(sequence[i], sequence[j])};
        }
    }
    return {};
}

Partitioning partition_intervals(const PureComplex& complex, const FacetOrder& order) {
    return {restrictions(complex, order)};
}

PartitionCheck verify_partitioning(const PureComplex& complex, const Partitioning& p, std::size_t face_guard) {
    const auto& facets = complex.facets();
    if (p.restriction.size() != facets.size()) throw std::invalid_argument("partitioning size differs from facet count");
    for (std::size_t f = 0; f < facets.size(); ++f) {
        if (!subset_of(p.restriction[f], facets[f])) throw std::invalid_argument("restriction not inside its facet");
    }
    const auto faces = complex.faces(face_guard);
    PartitionCheck check;
    check.face_count = faces.size();
    for (VertexSet face : faces) {
        std::size_t covers = 0;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (subset_of(p.restriction[f], face) && subset_of(face, facets[f])) ++covers;
        }
        if (covers != 1) {
            check.ok = false;
            check.witness = face;
            check.witness_cover_count = covers;
            return check;
        }
    }
    return check;
}

PartitionCheck verify_partitioning_counted(const PureComplex& complex, const Partitioning& p,
                                           std::size_t face_count) {
    const auto& facets = complex.facets();
    if (p.restriction.size() != facets.size()) throw std::invalid_argument("partitioning size differs from facet count");
    PartitionCheck check;
    check.face_count = face_count;
    std::size_t covered = 0;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        if (!subset_of(p.restriction[f], facets[f])) throw std::invalid_argument("restriction not inside its facet");
        covered += std::size_t{1} << (card(facets[f]) - card(p.restriction[f]));
        for (std::size_t g = 0; g < f; ++g) {
            // [r(F), F] and [r(G), G] meet iff r(F) | r(G) lies in F & G
            const VertexSet low = p.restriction[f] | p.restriction[g];
            if (subset_of(low, facets[f] & facets[g])) {
                check.ok = false;
                check.witness = low;
                check.witness_cover_count = 2;
                return check;
            }
        }
    }
    if (covered != face_count) check.ok = false;
    return check;
}

// ------------------------------------------------------------ Order complex

OrderComplex order_complex(const GradedBoundedPoset& l) {
    OrderComplex oc;
    std::vector<std::size_t> vertex_of(l.size(), l.size());
    for (std::size_t x = 0; x < l.size(); ++x) {
        if (x == l.bottom() || x == l.top()) continue;
        vertex_of[x] = oc.element_of.size();
        oc.element_of.push_back(x);
        oc.vertex_rank.push_back(l.rank(x));
    }
    if (oc.element_of.size() > 64) throw TooLarge("order complex limited to 64 vertices");

    std::vector<VertexSet> facets;
    std::vector<std::pair<std::size_t, VertexSet>> stack{{l.bottom(), 0}};
    while (!stack.empty()) {
        auto [x, chain] = stack.back();
        stack.pop_back();
        if (x == l.top()) {
            facets.push_back(chain);
            continue;
        }
        for (std::size_t y : l.poset().upper_covers(x)) {
            const VertexSet next = y == l.top() ? chain : chain | (VertexSet{1} << vertex_of[y]);
            stack.emplace_back(y, next);
        }
    }
    std::sort(facets.begin(), facets.end());
    oc.complex = PureComplex(oc.element_of.size(), std::move(facets));
    return oc;
}

RankSubset vertex_ranks(const OrderComplex& oc, VertexSet face) {
    RankSubset s;
    for (VertexSet m = face; m != 0; m &= m - 1) s.insert(oc.vertex_rank.at(static_cast<std::size_t>(std::countr_zero(m))));
    return s;
}

FlagVector flag_h_from_partition(const OrderComplex& oc, unsigned height, const Partitioning& p) {
    FlagVector beta(height);
    for (VertexSet r : p.restriction) ++beta[vertex_ranks(oc, r)];
    return beta;
}

// -------------------------------------------------------------- DyckComplex

DyckComplex::DyckComplex(unsigned n)
    : n_(n), lattice_(chain_product_2xn(n)), oc_(narayana::order_complex(lattice_.lattice())), paths_(enumerate(n)) {
    vertex_of_element_.assign(lattice_.size(), lattice_.size());
    for (std::size_t v = 0; v < oc_.element_of.size(); ++v) vertex_of_element_[oc_.element_of[v]] = v;

    std::vector<VertexSet> by_path;
    by_path.reserve(paths_.size());
    for (const auto& w : paths_) by_path.push_back(path_to_facet(w));
    auto sorted = by_path;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != oc_.complex.facets()) throw std::logic_error("maximal chains of J(2 x n) do not match Dyck paths");
    oc_.complex = PureComplex(oc_.element_of.size(), std::move(by_path));
}

VertexSet DyckComplex::path_to_facet(const DyckPath& w) const {
    if (w.semilength() != n_) throw LengthMismatch();
    VertexSet facet = 0;
    std::uint64_t ideal = 0;
    unsigned nv = 0;
    unsigned nh = 0;
    for (unsigned p = 1; p < w.length(); ++p) {
        const std::size_t element = w.is_v(p) ? chain_product_index(1, ++nv, n_) : chain_product_index(2, ++nh, n_);
        ideal |= std::uint64_t{1} << element;
        facet |= VertexSet{1} << vertex_of_element_[lattice_.index_of(ideal)];
    }
    return facet;
}

DyckPath DyckComplex::facet_to_path(VertexSet facet) const {
    const unsigned len = 2 * n_;
    if (card(facet) != len - 1) throw NotMaximalChain();
    if (oc_.element_of.size() < 64 && (facet >> oc_.element_of.size()) != 0) throw NotMaximalChain();
    std::vector<std::uint64_t> ideals(len + 1, 0);
    std::vector<bool> filled(len + 1, false);
    for (VertexSet m = facet; m != 0; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        const unsigned r = oc_.vertex_rank[v];
        if (filled[r]) throw NotMaximalChain();
        filled[r] = true;
        ideals[r] = lattice_.ideal(oc_.element_of[v]);
    }
    ideals[len] = (len >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    std::vector<Step> steps(len);
    for (unsigned i = 1; i <= len; ++i) {
        const std::uint64_t added = ideals[i] & ~ideals[i - 1];
        if ((ideals[i - 1] & ~ideals[i]) != 0 || std::popcount(added) != 1) throw NotMaximalChain();
        const auto element = static_cast<unsigned>(std::countr_zero(added));
        steps[i - 1] = element < n_ ? Step::V : Step::H;
    }
    return DyckPath::from_steps(steps);
}

std::size_t DyckComplex::facet_index(const DyckPath& w) const {
    if (w.semilength() != n_) throw LengthMismatch();
    return static_cast<std::size_t>(rank(w));
}

// ------------------------------------------------------------------ Omega_n

DyckPath s_map(const DyckPath& w, unsigned i) {
    if (w.length() < 3 || i < 1 || i > w.length() - 2) throw PositionOutOfRange();
    const Step a = w.step(i);
    const Step b = w.step(i + 1);
    const Step c = w.step(i + 2);
    if (a != b || c == b) return w;
    auto steps = w.steps();
    // VVH -> VHV, HHV -> HVH: swap the last two letters of the factor.
    std::swap(steps[i], steps[i + 1]);
    return DyckPath::from_steps(steps);
}

std::pair<unsigned, unsigned> sigma_stat(const DyckPath& w) { return {da(w), maj(w)}; }

FacetOrder omega_n(unsigned n) {
    if (n == 0) throw std::invalid_argument("omega_n needs n >= 1");
    if (n > kOmegaMaxN) throw TooLarge("omega_n limited to n <= 9");
    const auto paths = enumerate(n);
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i].bits(), i);
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t b = 0; b < paths.size(); ++b) {
        const auto& w = paths[b];
        if (w.length() < 3) continue;
        for (unsigned i = 1; i + 2 <= w.length(); ++i) {
            const DyckPath u = s_map(w, i);
            if (u != w) relations.emplace_back(index.at(u.bits()), b);
        }
    }
    return FacetOrder(paths.size(), std::move(relations));
}

}  // namespace narayana
