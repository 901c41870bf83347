#include "narayana/dyck.hpp"

#include <bit>
#include <cctype>

namespace narayana {

// ---------------------------------------------------------------- RankSubset

RankSubset RankSubset::from_members(const std::vector<unsigned>& members) {
    RankSubset s;
    for (unsigned m : members) s.insert(m);
    return s;
}

RankSubset RankSubset::interval(unsigned last) {
    if (last > 63) throw std::out_of_range("RankSubset holds members 1..63");
    RankSubset s;
    for (unsigned i = 1; i <= last; ++i) s.insert(i);
    return s;
}

void RankSubset::insert(unsigned i) {
    if (i == 0 || i > 63) throw std::out_of_range("RankSubset member out of range: " + std::to_string(i));
    mask_ |= std::uint64_t{1} << i;
}

unsigned RankSubset::size() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

unsigned RankSubset::sum() const noexcept {
    unsigned total = 0;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) total += static_cast<unsigned>(std::countr_zero(m));
    return total;
}

unsigned RankSubset::max() const noexcept {
    return mask_ == 0 ? 0 : 63 - static_cast<unsigned>(std::countl_zero(mask_));
}

std::vector<unsigned> RankSubset::members() const {
    std::vector<unsigned> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)));
    return out;
}

std::string to_string(RankSubset s) {
    std::string out = "{";
    bool first = true;
    for (unsigned m : s.members()) {
        if (!first) out += ", ";
        out += std::to_string(m);
        first = false;
    }
    return out + "}";
}

// ------------------------------------------------------------------ DyckPath

DyckPath DyckPath::from_steps(const std::vector<Step>& steps) {
    if (steps.size() % 2 != 0) throw InvalidPath("odd length word");
    if (steps.size() > 2 * kMaxSemilength) throw InvalidPath("path longer than 64 steps");
    std::uint64_t bits = 0;
    long excess = 0;
    for (Step s : steps) {
        bits = (bits << 1) | (s == Step::H ? 1U : 0U);
        excess += s == Step::V ? 1 : -1;
        if (excess < 0) throw InvalidPath("prefix has more H than V");
    }
    if (excess != 0) throw InvalidPath("unbalanced word");
    return DyckPath(bits, static_cast<unsigned>(steps.size() / 2));
}

DyckPath DyckPath::parse(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (char c : word) {
        switch (std::tolower(static_cast<unsigned char>(c))) {
            case 'v': steps.push_back(Step::V); break;
            case 'h': steps.push_back(Step::H); break;
            default: throw InvalidPath("unexpected letter '" + std::string(1, c) + "' in path word");
        }
    }
    return from_steps(steps);
}

DyckPath DyckPath::from_bits(std::uint64_t bits, unsigned semilength) {
    if (semilength > kMaxSemilength) throw InvalidPath("semilength exceeds 32");
    const unsigned len = 2 * semilength;
    if (len < 64 && (bits >> len) != 0) throw InvalidPath("bits beyond path length");
    std::vector<Step> steps(len);
    for (unsigned p = 1; p <= len; ++p) steps[p - 1] = ((bits >> (len - p)) & 1U) ? Step::H : Step::V;
    return from_steps(steps);
}

std::vector<Step> DyckPath::steps() const {
    std::vector<Step> out(length());
    for (unsigned p = 1; p <= length(); ++p) out[p - 1] = step(p);
    return out;
}

std::string DyckPath::to_string() const {
    std::string out(length(), 'v');
    for (unsigned p = 1; p <= length(); ++p) {
        if (is_h(p)) out[p - 1] = 'h';
    }
    return out;
}

LabeledPath::LabeledPath(const DyckPath& path) : path_(path) {
    unsigned nv = 0;
    unsigned nh = 0;
    steps_.reserve(path.length());
    for (unsigned p = 1; p <= path.length(); ++p) {
        if (path.is_v(p)) steps_.push_back({Step::V, ++nv});
        else steps_.push_back({Step::H, ++nh});
    }
}

std::string LabeledPath::to_string() const {
    std::string out;
    for (const auto& s : steps_) {
        out += s.letter == Step::V ? 'v' : 'h';
        out += std::to_string(s.index);
    }
    return out;
}

// ---------------------------------------------------------------- Enumeration

namespace {

void enumerate_into(unsigned n, unsigned placed, unsigned v_used, std::uint64_t bits,
                    std::vector<DyckPath>& out) {
    if (placed == 2 * n) {
        out.push_back(DyckPath::from_bits(bits, n));
        return;
    }
    const unsigned h_used = placed - v_used;
    if (v_used < n) enumerate_into(n, placed + 1, v_used + 1, bits << 1, out);
    if (h_used < v_used) enumerate_into(n, placed + 1, v_used, (bits << 1) | 1U, out);
}

// completions[r][e]: ways to finish r remaining steps from excess e.
std::vector<std::vector<std::uint64_t>> completion_table(unsigned n) {
    const unsigned len = 2 * n;
    std::vector<std::vector<std::uint64_t>> table(len + 1, std::vector<std::uint64_t>(len + 2, 0));
    table[0][0] = 1;
    for (unsigned r = 1; r <= len; ++r) {
        for (unsigned e = 0; e <= len; ++e) {
            std::uint64_t ways = table[r - 1][e + 1];
            if (e > 0) ways += table[r - 1][e - 1];
            table[r][e] = ways;
        }
    }
    return table;
}

}  // namespace

std::vector<DyckPath> enumerate(unsigned n) {
    if (n > kMaxSemilength) throw InvalidPath("semilength exceeds 32");
    std::vector<DyckPath> out;
    out.reserve(dyck_count(n));
    enumerate_into(n, 0, 0, 0, out);
    return out;
}

std::uint64_t dyck_count(unsigned n) {
    if (n > kMaxSemilength) throw InvalidPath("semilength exceeds 32");
    return completion_table(n)[2 * n][0];
}

std::uint64_t rank(const DyckPath& w) {
    const unsigned len = w.length();
    const auto table = completion_table(w.semilength());
    std::uint64_t index = 0;
    unsigned excess = 0;
    for (unsigned p = 1; p <= len; ++p) {
        const unsigned remaining = len - p;
        if (w.is_h(p)) {
            index += table[remaining][excess + 1];
            --excess;
        } else {
            ++excess;
        }
    }
    return index;
}

DyckPath unrank(unsigned n, std::uint64_t index) {
    if (n > kMaxSemilength) throw InvalidPath("semilength exceeds 32");
    const auto table = completion_table(n);
    const unsigned len = 2 * n;
    if (index >= table[len][0]) {
        throw IndexOutOfRange("index " + std::to_string(index) + " out of range for semilength " +
                              std::to_string(n));
    }
    std::uint64_t bits = 0;
    unsigned excess = 0;
    for (unsigned p = 1; p <= len; ++p) {
        const unsigned remaining = len - p;
        const std::uint64_t with_v = table[remaining][excess + 1];
        if (index < with_v) {
            bits <<= 1;
            ++excess;
        } else {
            index -= with_v;
            bits = (bits << 1) | 1U;
            --excess;
        }
    }
    return DyckPath::from_bits(bits, n);
}

DyckPath random_path(unsigned n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, dyck_count(n) - 1);
    return unrank(n, pick(rng));
}

DyckPath random_path(unsigned n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_path(n, rng);
}

DyckPath staircase_path(unsigned n) {
    std::vector<Step> steps(n, Step::V);
    steps.insert(steps.end(), n, Step::H);
    return DyckPath::from_steps(steps);
}

DyckPath zigzag_path(unsigned n) {
    std::vector<Step> steps;
    for (unsigned i = 0; i < n; ++i) {
        steps.push_back(Step::V);
        steps.push_back(Step::H);
    }
    return DyckPath::from_steps(steps);
}

// ----------------------------------------------------------------- Statistics

RankSubset descent_set(const DyckPath& w) {
    RankSubset s;
    for (unsigned i = 1; i + 1 <= w.length(); ++i) {
        if (w.is_h(i) && w.is_v(i + 1)) s.insert(i);
    }
    return s;
}

unsigned des(const DyckPath& w) { return descent_set(w).size(); }
unsigned maj(const DyckPath& w) { return descent_set(w).sum(); }

RankSubset high_peak_set(const DyckPath& w) {
    RankSubset s;
    int excess = 0;
    for (unsigned i = 1; i <= w.length(); ++i) {
        excess += w.is_v(i) ? 1 : -1;
        if (i < w.length() && w.is_v(i) && w.is_h(i + 1) && excess >= 2) s.insert(i);
    }
    return s;
}

unsigned hp(const DyckPath& w) { return high_peak_set(w).size(); }

unsigned ea(const DyckPath& w) {
    unsigned count = 0;
    for (unsigned i = 2; i <= w.length(); i += 2) {
        if (w.is_v(i)) ++count;
    }
    return count;
}

RankSubset ls_set(const DyckPath& w) {
    RankSubset s;
    for (unsigned i = 2; i + 1 <= w.length(); ++i) {
        const Step a = w.step(i - 1);
        const Step b = w.step(i);
        const Step c = w.step(i + 1);
        if (a == b && c != b) s.insert(i);
    }
    return s;
}

unsigned lnfs(const DyckPath& w) { return ls_set(w).size(); }
unsigned maj_l(const DyckPath& w) { return ls_set(w).sum(); }

unsigned da(const DyckPath& w) {
    unsigned count = 0;
    for (unsigned i = 1; i + 1 <= w.length(); ++i) {
        if (w.is_v(i) && w.is_v(i + 1)) ++count;
    }
    return count;
}

LabeledPath label(const DyckPath& w) { return LabeledPath(w); }

ReferenceOrder::ReferenceOrder(const DyckPath& reference)
    : reference_(reference), v_pos_(reference.semilength() + 1), h_pos_(reference.semilength() + 1) {
    LabeledPath labeled(reference);
    for (unsigned p = 1; p <= reference.length(); ++p) {
        const auto& s = labeled.at(p);
        (s.letter == Step::V ? v_pos_ : h_pos_)[s.index] = p;
    }
}

RankSubset ReferenceOrder::descent_set(const DyckPath& w) const {
    if (w.length() != reference_.length()) throw LengthMismatch();
    RankSubset s;
    unsigned nv = 0;
    unsigned nh = 0;
    unsigned prev_pos = 0;
    for (unsigned p = 1; p <= w.length(); ++p) {
        const unsigned pos = w.is_v(p) ? v_pos_[++nv] : h_pos_[++nh];
        if (p > 1 && pos < prev_pos) s.insert(p - 1);
        prev_pos = pos;
    }
    return s;
}

RankSubset descent_set_wrt(const DyckPath& w, const DyckPath& reference) {
    if (w.length() != reference.length()) throw LengthMismatch();
    return ReferenceOrder(reference).descent_set(w);
}

unsigned des_wrt(const DyckPath& w, const DyckPath& reference) { return descent_set_wrt(w, reference).size(); }
unsigned maj_wrt(const DyckPath& w, const DyckPath& reference) { return descent_set_wrt(w, reference).sum(); }

// ------------------------------------------------------------- Distributions

std::string_view to_string(StatisticKind kind) {
    switch (kind) {
        case StatisticKind::des: return "des";
        case StatisticKind::hp: return "hp";
        case StatisticKind::ea: return "ea";
        case StatisticKind::lnfs: return "lnfs";
        case StatisticKind::da: return "da";
        case StatisticKind::des_wrt: return "des-wrt";
    }
    return "?";
}

std::string_view to_string(CoStatistic co) {
    switch (co) {
        case CoStatistic::maj: return "maj";
        case CoStatistic::maj_l: return "maj-l";
        case CoStatistic::maj_wrt: return "maj-wrt";
    }
    return "?";
}

CoStatistic parse_costatistic(std::string_view name) {
    if (name == "maj") return CoStatistic::maj;
    if (name == "maj-l" || name == "maj_l") return CoStatistic::maj_l;
    if (name == "maj-wrt" || name == "maj_w" || name == "maj-w") return CoStatistic::maj_wrt;
    throw UnknownStatistic(name);
}

Statistic Statistic::parse(std::string_view name) {
    for (auto kind : {StatisticKind::des, StatisticKind::hp, StatisticKind::ea, StatisticKind::lnfs,
                      StatisticKind::da}) {
        if (name == to_string(kind)) return {kind, std::nullopt};
    }
    throw UnknownStatistic(name);
}

std::string Statistic::name() const { return std::string(to_string(kind)); }

unsigned Statistic::operator()(const DyckPath& w) const {
    switch (kind) {
        case StatisticKind::des: return des(w);
        case StatisticKind::hp: return hp(w);
        case StatisticKind::ea: return ea(w);
        case StatisticKind::lnfs: return lnfs(w);
        case StatisticKind::da: return da(w);
        case StatisticKind::des_wrt:
            if (!reference) throw std::invalid_argument("des-wrt needs a reference path");
            return des_wrt(w, *reference);
    }
    return 0;
}

std::optional<CoStatistic> Statistic::paired() const {
    switch (kind) {
        case StatisticKind::des: return CoStatistic::maj;
        case StatisticKind::lnfs: return CoStatistic::maj_l;
        case StatisticKind::des_wrt: return CoStatistic::maj_wrt;
        default: return std::nullopt;
    }
}

namespace {

// Set-valued version of the statistic, when it has one; lets des/maj share a scan.
std::optional<RankSubset> statistic_set(const Statistic& stat, const DyckPath& w,
                                        const std::optional<ReferenceOrder>& ref) {
    switch (stat.kind) {
        case StatisticKind::des: return descent_set(w);
        case StatisticKind::lnfs: return ls_set(w);
        case StatisticKind::des_wrt: return ref->descent_set(w);
        default: return std::nullopt;
    }
}

}  // namespace

std::map<unsigned, std::uint64_t> distribution(unsigned n, const Statistic& stat) {
    if (stat.kind == StatisticKind::des_wrt) {
        if (!stat.reference) throw std::invalid_argument("des-wrt needs a reference path");
        if (stat.reference->semilength() != n) throw LengthMismatch();
    }
    std::optional<ReferenceOrder> ref;
    if (stat.reference) ref.emplace(*stat.reference);
    std::map<unsigned, std::uint64_t> out;
    for (const auto& w : enumerate(n)) {
        const auto set = statistic_set(stat, w, ref);
        ++out[set ? set->size() : stat(w)];
    }
    return out;
}

std::map<unsigned, QPoly> joint_q(unsigned n, const Statistic& stat, CoStatistic co,
                                  const std::optional<DyckPath>& reference) {
    std::optional<DyckPath> ref_path = reference ? reference : stat.reference;
    if (co == CoStatistic::maj_wrt && !ref_path) throw std::invalid_argument("maj-wrt needs a reference path");
    if (ref_path && ref_path->semilength() != n) throw LengthMismatch();
    if (stat.kind == StatisticKind::des_wrt && !stat.reference) {
        throw std::invalid_argument("des-wrt needs a reference path");
    }
    std::optional<ReferenceOrder> stat_ref;
    if (stat.reference) stat_ref.emplace(*stat.reference);
    std::optional<ReferenceOrder> co_ref;
    if (co == CoStatistic::maj_wrt) co_ref.emplace(*ref_path);

    // value -> exponent -> count
    std::map<unsigned, std::map<unsigned, std::uint64_t>> counts;
    for (const auto& w : enumerate(n)) {
        const auto set = statistic_set(stat, w, stat_ref);
        const unsigned value = set ? set->size() : stat(w);
        unsigned exponent = 0;
        switch (co) {
            case CoStatistic::maj: exponent = maj(w); break;
            case CoStatistic::maj_l: exponent = maj_l(w); break;
            case CoStatistic::maj_wrt: exponent = co_ref->descent_set(w).sum(); break;
        }
        ++counts[value][exponent];
    }
    std::map<unsigned, QPoly> out;
    for (const auto& [value, by_exp] : counts) {
        std::vector<Integer> coeffs(by_exp.rbegin()->first + 1);
        for (const auto& [e, c] : by_exp) coeffs[e] = Integer(static_cast<unsigned long>(c));
        out.emplace(value, QPoly(std::move(coeffs)));
    }
    return out;
}

std::map<unsigned, QPoly> joint_q(unsigned n, const Statistic& stat) {
    const auto co = stat.paired();
    if (!co) throw NoCoStatistic("no co-statistic is paired with " + stat.name());
    return joint_q(n, stat, *co, stat.reference);
}

}  // namespace narayana
