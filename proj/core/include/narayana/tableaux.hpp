#pragma once

/**
 * @file tableaux.hpp
 * @brief Semistandard Young tableaux, the two-column bijection with Dyck
 *        paths, and principal specializations s_lambda(q, q^2, ..., q^m).
 */

#include "narayana/dyck.hpp"
#include "narayana/qpoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace narayana {

class InvalidPartition : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class InvalidTableau : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class EntryOutOfRange : public std::out_of_range {
public:
    EntryOutOfRange() : std::out_of_range("entry out of range") {}
};

class CellNotInDiagram : public std::out_of_range {
public:
    CellNotInDiagram() : std::out_of_range("cell not in diagram") {}
};

class Partition {
public:
    Partition() = default;
    /// Parts must be positive and weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    /// <2^k>: k parts equal to 2.
    static Partition two_column(unsigned k);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    unsigned size() const noexcept;
    /// lambda_i for 1-based i, 0 past the end.
    unsigned part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    /// lambda'_j, the length of column j.
    unsigned column_length(unsigned j) const noexcept;
    bool contains(std::size_t row, unsigned col) const noexcept { return row >= 1 && col >= 1 && col <= part(row); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// 1-based (row, column).
struct Cell {
    std::size_t row;
    unsigned col;
};

/// Row-major tableau with explicit shape.
class SSYT {
public:
    SSYT() = default;
    /// Rows must be weakly increasing, columns strictly increasing, entries positive.
    explicit SSYT(std::vector<std::vector<unsigned>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<unsigned>>& rows() const noexcept { return rows_; }
    /// T_{ij}, 1-based.
    unsigned at(std::size_t i, unsigned j) const { return rows_.at(i - 1).at(j - 1); }
    unsigned entry_sum() const noexcept;
    unsigned max_entry() const noexcept;

    friend bool operator==(const SSYT&, const SSYT&) = default;

private:
    Partition shape_;
    std::vector<std::vector<unsigned>> rows_;
};

std::string to_string(const SSYT& t);

/// Every SSYT of the shape with entries in [1, max_part], lexicographic by
/// row-reading word.
std::vector<SSYT> enumerate_ssyt(const Partition& shape, unsigned max_part);

/// (gamma_1(T), gamma_2(T), ...)
std::vector<unsigned> row_sums(const SSYT& t);
/// Row sums as a set; for <2^k> tableaux they strictly increase.
RankSubset row_sum_set(const SSYT& t);

/// w(T) for a tableau of shape <2^k> with entries < n.
DyckPath ssyt_to_dyck(const SSYT& t, unsigned n);
/// The unique <2^k> tableau with w(T) = w, where k = des(w).
SSYT dyck_to_ssyt(const DyckPath& w);

unsigned hook_length(const Partition& shape, Cell u);
long content(const Partition& shape, Cell u);

/// s_lambda(q, q^2, ..., q^m) as a sum over SSYT with entries <= m.
QPoly schur_principal_ssyt(const Partition& shape, unsigned m);
/// s_lambda(q, ..., q^m) by the hook-content product, divided out exactly.
QPoly schur_principal_hook(const Partition& shape, unsigned m);

enum class SchurRoute { ssyt, hook };

/// s_{<2^k>}(q, q^2, ..., q^{n-1}). Requires n >= 1.
QPoly q_narayana_schur(unsigned n, unsigned k, SchurRoute route = SchurRoute::ssyt);

}  // namespace narayana
