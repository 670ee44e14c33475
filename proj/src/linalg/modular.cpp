#include "strata/linalg/modular.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <tuple>
#include <vector>

#include "strata/error.hpp"
#include "strata/linalg/kernels.hpp"

namespace strata::linalg {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::tie(t, newt) = std::make_tuple(newt, t - q * newt);
        std::tie(r, newr) = std::make_tuple(newr, r - q * newr);
    }
    if (r != 1) throw InternalError("mod_inverse: value not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t residue(const Int& v, std::uint32_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint32_t>();
}

class ModEliminator {
public:
    ModEliminator(const SparseMatZ& m, std::uint32_t p, const ModRankTuning& tun)
        : p_(p), tun_(tun), nrows_(m.rows), ncols_(m.cols) {
        rows_.resize(nrows_);
        for (const auto& e : m.entries) {
            std::uint32_t v = residue(e.value, p);
            if (v) rows_[e.row].emplace_back(e.col, v);
        }
        row_active_.assign(nrows_, true);
        col_rows_.resize(ncols_);
        col_nnz_.assign(ncols_, 0);
        col_active_.assign(ncols_, true);
        live_rows_ = 0;
        nnz_ = 0;
        for (std::int32_t r = 0; r < nrows_; ++r) {
            auto& row = rows_[r];
            std::sort(row.begin(), row.end());
            Row merged;
            for (auto& [c, v] : row) {
                if (!merged.empty() && merged.back().first == c)
                    merged.back().second = static_cast<std::uint32_t>(
                        (static_cast<std::uint64_t>(merged.back().second) + v) % p_);
                else
                    merged.emplace_back(c, v);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& e) { return e.second == 0; }),
                         merged.end());
            row = std::move(merged);
            if (!row.empty()) ++live_rows_;
            for (const auto& [c, v] : row) {
                col_rows_[c].push_back(r);
                ++col_nnz_[c];
                ++nnz_;
            }
        }
        live_cols_ = 0;
        for (std::int32_t c = 0; c < ncols_; ++c) {
            if (col_nnz_[c] > 0) {
                ++live_cols_;
                heap_.push({col_nnz_[c], c});
            }
        }
    }

    std::int32_t run() {
        std::int32_t rank = 0;
        while (true) {
            if (should_go_dense()) return rank + dense_finish();
            std::int32_t c = pop_pivot_column();
            if (c < 0) break;
            std::int32_t r = pick_pivot_row(c);
            eliminate(r, c);
            ++rank;
        }
        return rank;
    }

private:
    using Row = std::vector<std::pair<std::int32_t, std::uint32_t>>;

    bool should_go_dense() const {
        if (live_rows_ <= 0 || live_cols_ <= 0) return false;
        std::size_t cells =
            static_cast<std::size_t>(live_rows_) * static_cast<std::size_t>(live_cols_);
        if (tun_.force_dense) return true;
        if (cells > tun_.dense_max_cells) return false;
        double fill = static_cast<double>(nnz_) / static_cast<double>(cells);
        return fill >= tun_.dense_min_fill || cells <= (std::size_t(1) << 14);
    }

    std::int32_t pop_pivot_column() {
        while (!heap_.empty()) {
            auto [nnz, c] = heap_.top();
            if (!col_active_[c] || col_nnz_[c] != nnz || nnz == 0) {
                heap_.pop();
                continue;
            }
            return c;
        }
        return -1;
    }

    const std::uint32_t* find_entry(const Row& row, std::int32_t c) const {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::int32_t col) { return e.first < col; });
        if (it != row.end() && it->first == c) return &it->second;
        return nullptr;
    }

    std::int32_t pick_pivot_row(std::int32_t c) {
        std::int32_t best = -1;
        std::size_t best_nnz = 0;
        auto& cand = col_rows_[c];
        std::size_t w = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::int32_t r = cand[i];
            if (!row_active_[r]) continue;
            if (!find_entry(rows_[r], c)) continue;
            cand[w++] = r;
            std::size_t nnz = rows_[r].size();
            if (best < 0 || std::make_pair(nnz, r) < std::make_pair(best_nnz, best)) {
                best = r;
                best_nnz = nnz;
            }
        }
        cand.resize(w);
        if (best < 0) throw InternalError("modular pivot column without live rows");
        return best;
    }

    void remove_from_col(std::int32_t c) {
        --col_nnz_[c];
        --nnz_;
        if (col_nnz_[c] == 0 && col_active_[c]) --live_cols_;
        heap_.push({col_nnz_[c], c});
    }

    void add_to_col(std::int32_t c, std::int32_t r) {
        if (col_nnz_[c] == 0 && col_active_[c]) ++live_cols_;
        col_rows_[c].push_back(r);
        ++col_nnz_[c];
        ++nnz_;
        heap_.push({col_nnz_[c], c});
    }

    void eliminate(std::int32_t pr, std::int32_t pc) {
        const std::uint32_t pivot = *find_entry(rows_[pr], pc);
        const std::uint32_t pinv = mod_inverse(pivot, p_);
        auto rows_in_col = col_rows_[pc];
        for (std::int32_t r : rows_in_col) {
            if (r == pr || !row_active_[r]) continue;
            const std::uint32_t* e = find_entry(rows_[r], pc);
            if (!e) continue;
            std::uint32_t mult = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(*e) * pinv % p_);
            combine_rows(r, mult, pr);
        }
        row_active_[pr] = false;
        --live_rows_;
        for (const auto& [c, v] : rows_[pr]) remove_from_col(c);
        Row().swap(rows_[pr]);
        if (col_nnz_[pc] != 0) throw InternalError("modular elimination left pivot column live");
        col_active_[pc] = false;
    }

    // row_r := row_r - mult*row_p (mod p)
    void combine_rows(std::int32_t r, std::uint32_t mult, std::int32_t pr) {
        const Row& a = rows_[r];
        const Row& b = rows_[pr];
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        const std::uint64_t p64 = p_;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i]);
                ++i;
            } else if (i == a.size() || b[j].first < a[i].first) {
                std::uint32_t v = static_cast<std::uint32_t>(
                    (p64 - static_cast<std::uint64_t>(mult) * b[j].second % p64) % p64);
                if (v) {
                    add_to_col(b[j].first, r);
                    out.emplace_back(b[j].first, v);
                }
                ++j;
            } else {
                std::uint64_t sub = static_cast<std::uint64_t>(mult) * b[j].second % p64;
                std::uint32_t v = static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(a[i].second) + p64 - sub) % p64);
                if (v == 0)
                    remove_from_col(a[i].first);
                else
                    out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        rows_[r] = std::move(out); // invalidates a
        if (rows_[r].empty()) --live_rows_;
    }

    // Gather the live block into dense rows and eliminate with the dispatched
    // axpy kernel.
    std::int32_t dense_finish() {
        std::vector<std::int32_t> cols;
        cols.reserve(live_cols_);
        std::vector<std::int32_t> col_map(ncols_, -1);
        for (std::int32_t c = 0; c < ncols_; ++c) {
            if (col_active_[c] && col_nnz_[c] > 0) {
                col_map[c] = static_cast<std::int32_t>(cols.size());
                cols.push_back(c);
            }
        }
        const std::size_t nc = cols.size();
        std::vector<std::vector<double>> dense;
        for (std::int32_t r = 0; r < nrows_; ++r) {
            if (!row_active_[r] || rows_[r].empty()) continue;
            std::vector<double> row(nc, 0.0);
            for (const auto& [c, v] : rows_[r]) row[col_map[c]] = static_cast<double>(v);
            dense.push_back(std::move(row));
        }
        const double pd = static_cast<double>(p_);
        const double inv_p = 1.0 / pd;
        auto axpy = kernels::select_axpy_mod();
        std::size_t done = 0;
        for (std::size_t j = 0; j < nc && done < dense.size(); ++j) {
            std::size_t sel = done;
            while (sel < dense.size() && dense[sel][j] == 0.0) ++sel;
            if (sel == dense.size()) continue;
            std::swap(dense[done], dense[sel]);
            const std::uint32_t pivot = static_cast<std::uint32_t>(dense[done][j]);
            const std::uint64_t pinv = mod_inverse(pivot, p_);
            for (std::size_t r = done + 1; r < dense.size(); ++r) {
                if (dense[r][j] == 0.0) continue;
                std::uint64_t mult = static_cast<std::uint64_t>(dense[r][j]) * pinv % p_;
                if (mult == 0) continue;
                double c = static_cast<double>(p_ - mult);
                axpy(dense[r].data() + j, dense[done].data() + j, c, nc - j, pd, inv_p);
            }
            ++done;
        }
        return static_cast<std::int32_t>(done);
    }

    std::uint32_t p_;
    ModRankTuning tun_;
    std::int32_t nrows_, ncols_;
    std::vector<Row> rows_;
    std::vector<bool> row_active_;
    std::vector<std::vector<std::int32_t>> col_rows_;
    std::vector<std::int32_t> col_nnz_;
    std::vector<char> col_active_;
    std::int64_t live_rows_ = 0, live_cols_ = 0;
    std::size_t nnz_ = 0;
    std::priority_queue<std::pair<std::int32_t, std::int32_t>,
                        std::vector<std::pair<std::int32_t, std::int32_t>>,
                        std::greater<>>
        heap_;
};

} // namespace

std::int32_t rank_mod_p(const SparseMatZ& m, std::uint32_t p, const ModRankTuning& tuning) {
    if (p < 3 || p >= (1u << 26)) throw InputError("modular prime must lie in [3, 2^26)");
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    ModEliminator elim(m, p, tuning);
    return elim.run();
}

std::int32_t rank_mod_p(const SparseMatZ& m, std::uint32_t p) {
    return rank_mod_p(m, p, ModRankTuning{});
}

} // namespace strata::linalg
