#include "narayana/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace narayana {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("partition parts must weakly decrease");
    }
}

Partition Partition::two_column(unsigned k) { return Partition(std::vector<unsigned>(k, 2)); }

unsigned Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

unsigned Partition::column_length(unsigned j) const noexcept {
    unsigned len = 0;
    for (unsigned p : parts_) {
        if (p >= j) ++len;
    }
    return len;
}

SSYT::SSYT(std::vector<std::vector<unsigned>> rows) : rows_(std::move(rows)) {
    std::vector<unsigned> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<unsigned>(row.size()));
    try {
        shape_ = Partition(std::move(parts));
    } catch (const InvalidPartition& e) {
        throw InvalidTableau(std::string("bad shape: ") + e.what());
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            const unsigned x = rows_[i][j];
            if (x == 0) throw InvalidTableau("entries must be positive");
            if (j > 0 && rows_[i][j - 1] > x) throw InvalidTableau("row not weakly increasing");
            if (i > 0 && rows_[i - 1][j] >= x) throw InvalidTableau("column not strictly increasing");
        }
    }
}

unsigned SSYT::entry_sum() const noexcept {
    unsigned total = 0;
    for (const auto& row : rows_) total = std::accumulate(row.begin(), row.end(), total);
    return total;
}

unsigned SSYT::max_entry() const noexcept {
    unsigned best = 0;
    for (const auto& row : rows_) {
        if (!row.empty()) best = std::max(best, row.back());
    }
    return best;
}

std::string to_string(const SSYT& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j > 0) out += ",";
            out += std::to_string(t.rows()[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

namespace {

struct Filler {
    const Partition& shape;
    unsigned max_part;
    std::vector<std::vector<unsigned>> rows;
    std::vector<SSYT> out;

    void fill(std::size_t i, std::size_t j) {
        if (i == rows.size()) {
            out.emplace_back(rows);
            return;
        }
        if (j == rows[i].size()) {
            fill(i + 1, 0);
            return;
        }
        unsigned lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        // Column below still needs shape.column_length(j+1) - (i+1) larger entries.
        const unsigned below = shape.column_length(static_cast<unsigned>(j + 1)) - static_cast<unsigned>(i + 1);
        if (max_part < below) return;
        const unsigned hi = max_part - below;
        for (unsigned x = lo; x <= hi; ++x) {
            rows[i][j] = x;
            fill(i, j + 1);
        }
    }
};

}  // namespace

std::vector<SSYT> enumerate_ssyt(const Partition& shape, unsigned max_part) {
    Filler f{shape, max_part, {}, {}};
    for (unsigned p : shape.parts()) f.rows.emplace_back(p, 0U);
    if (shape.length() > max_part) return {};
    f.fill(0, 0);
    return std::move(f.out);
}

std::vector<unsigned> row_sums(const SSYT& t) {
    std::vector<unsigned> out;
    for (const auto& row : t.rows()) out.push_back(std::accumulate(row.begin(), row.end(), 0U));
    return out;
}

RankSubset row_sum_set(const SSYT& t) {
    RankSubset s;
    for (unsigned g : row_sums(t)) s.insert(g);
    return s;
}

DyckPath ssyt_to_dyck(const SSYT& t, unsigned n) {
    const auto& parts = t.shape().parts();
    if (!std::all_of(parts.begin(), parts.end(), [](unsigned p) { return p == 2; })) {
        throw InvalidTableau("expected a two-column rectangular shape");
    }
    if (n == 0 || t.max_entry() >= n) throw EntryOutOfRange();
    std::vector<Step> steps;
    steps.reserve(2 * static_cast<std::size_t>(n));
    unsigned prev_right = 0;
    unsigned prev_left = 0;
    const std::size_t k = t.rows().size();
    for (std::size_t i = 1; i <= k + 1; ++i) {
        const unsigned right = i <= k ? t.at(i, 2) : n;
        const unsigned left = i <= k ? t.at(i, 1) : n;
        steps.insert(steps.end(), right - prev_right, Step::V);
        steps.insert(steps.end(), left - prev_left, Step::H);
        prev_right = right;
        prev_left = left;
    }
    return DyckPath::from_steps(steps);
}

SSYT dyck_to_ssyt(const DyckPath& w) {
    // w = V^{a_1} H^{b_1} ... V^{a_{k+1}} H^{b_{k+1}}; T_{i2}, T_{i1} are partial sums.
    std::vector<std::vector<unsigned>> rows;
    unsigned v_total = 0;
    unsigned h_total = 0;
    unsigned p = 1;
    while (p <= w.length()) {
        while (p <= w.length() && w.is_v(p)) {
            ++v_total;
            ++p;
        }
        while (p <= w.length() && w.is_h(p)) {
            ++h_total;
            ++p;
        }
        if (p <= w.length()) rows.push_back({h_total, v_total});
    }
    return SSYT(std::move(rows));
}

unsigned hook_length(const Partition& shape, Cell u) {
    if (!shape.contains(u.row, u.col)) throw CellNotInDiagram();
    const unsigned arm = shape.part(u.row) - u.col;
    const unsigned leg = shape.column_length(u.col) - static_cast<unsigned>(u.row);
    return arm + leg + 1;
}

long content(const Partition& shape, Cell u) {
    if (!shape.contains(u.row, u.col)) throw CellNotInDiagram();
    return static_cast<long>(u.col) - static_cast<long>(u.row);
}

QPoly schur_principal_ssyt(const Partition& shape, unsigned m) {
    std::vector<Integer> coeffs;
    for (const auto& t : enumerate_ssyt(shape, m)) {
        const unsigned e = t.entry_sum();
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] += 1;
    }
    return QPoly(std::move(coeffs));
}

QPoly schur_principal_hook(const Partition& shape, unsigned m) {
    if (shape.length() > m) return {};  // some cell has m + c(u) = 0
    QPoly numerator = QPoly::one();
    std::vector<unsigned> hooks;
    std::size_t weight = 0;
    for (std::size_t i = 1; i <= shape.length(); ++i) {
        weight += i * shape.part(i);
        for (unsigned j = 1; j <= shape.part(i); ++j) {
            const Cell u{i, j};
            numerator *= q_int(static_cast<unsigned>(static_cast<long>(m) + content(shape, u)));
            hooks.push_back(hook_length(shape, u));
        }
    }
    std::sort(hooks.begin(), hooks.end());
    for (unsigned h : hooks) {
        if (h > 1) numerator = exact_div(numerator, q_int(h));
    }
    return numerator.shifted(weight);
}

QPoly q_narayana_schur(unsigned n, unsigned k, SchurRoute route) {
    if (n == 0) throw std::invalid_argument("q_narayana_schur: n must be positive");
    const auto shape = Partition::two_column(k);
    return route == SchurRoute::ssyt ? schur_principal_ssyt(shape, n - 1) : schur_principal_hook(shape, n - 1);
}

}  // namespace narayana
