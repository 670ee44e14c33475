#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "strata/error.hpp"
#include "strata/linalg/rational.hpp"

namespace strata::linalg {

template <typename T>
struct Triplet {
    std::int32_t row = 0;
    std::int32_t col = 0;
    T value{};
};

/// Coordinate-format sparse matrix with exact entries. Entry lists may hold
/// duplicates until canonicalize() merges them.
template <typename T>
struct SparseMat {
    std::int32_t rows = 0;
    std::int32_t cols = 0;
    std::vector<Triplet<T>> entries;

    SparseMat() = default;
    SparseMat(std::int32_t r, std::int32_t c) : rows(r), cols(c) {}

    void add(std::int32_t r, std::int32_t c, T v) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw InternalError("sparse entry out of range");
        if (v == 0) return;
        entries.push_back(Triplet<T>{r, c, std::move(v)});
    }

    std::size_t nnz() const { return entries.size(); }

    /// Sort by (col, row), merge duplicates, drop explicit zeros.
    void canonicalize() {
        std::sort(entries.begin(), entries.end(), [](const Triplet<T>& a, const Triplet<T>& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        std::vector<Triplet<T>> merged;
        merged.reserve(entries.size());
        for (auto& e : entries) {
            if (!merged.empty() && merged.back().col == e.col && merged.back().row == e.row)
                merged.back().value += e.value;
            else
                merged.push_back(std::move(e));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Triplet<T>& e) { return e.value == 0; }),
                     merged.end());
        entries = std::move(merged);
    }

    /// Submatrix on the given column subset (sorted indices), columns reindexed 0..k-1.
    SparseMat select_columns(const std::vector<std::int32_t>& cs) const {
        return select_impl(nullptr, &cs);
    }

    /// Submatrix on the given row and column subsets, both reindexed.
    SparseMat select(const std::vector<std::int32_t>& rs, const std::vector<std::int32_t>& cs) const {
        return select_impl(&rs, &cs);
    }

    std::vector<std::vector<T>> to_dense() const {
        std::vector<std::vector<T>> d(static_cast<std::size_t>(rows),
                                      std::vector<T>(static_cast<std::size_t>(cols), T{}));
        for (const auto& e : entries) d[e.row][e.col] += e.value;
        return d;
    }

private:
    SparseMat select_impl(const std::vector<std::int32_t>* rs, const std::vector<std::int32_t>* cs) const {
        std::vector<std::int32_t> rmap, cmap;
        if (rs) {
            rmap.assign(rows, -1);
            for (std::size_t i = 0; i < rs->size(); ++i) rmap[(*rs)[i]] = static_cast<std::int32_t>(i);
        }
        if (cs) {
            cmap.assign(cols, -1);
            for (std::size_t i = 0; i < cs->size(); ++i) cmap[(*cs)[i]] = static_cast<std::int32_t>(i);
        }
        SparseMat out(rs ? static_cast<std::int32_t>(rs->size()) : rows,
                      cs ? static_cast<std::int32_t>(cs->size()) : cols);
        for (const auto& e : entries) {
            std::int32_t r = rs ? rmap[e.row] : e.row;
            std::int32_t c = cs ? cmap[e.col] : e.col;
            if (r >= 0 && c >= 0) out.entries.push_back(Triplet<T>{r, c, e.value});
        }
        return out;
    }
};

using SparseMatZ = SparseMat<Int>;
using SparseMatQ = SparseMat<Rat>;

/// Scale each row by the lcm of its denominators. Preserves rank and row space
/// up to row scaling.
SparseMatZ clear_denominators_rows(const SparseMatQ& m);

SparseMatQ to_rational(const SparseMatZ& m);

/// Exact sparse product a*b.
SparseMatQ matmul(const SparseMatQ& a, const SparseMatQ& b);

} // namespace strata::linalg
