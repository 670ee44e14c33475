#include "strata/linalg/elimination.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>
#include <utility>

#include "strata/error.hpp"
#include "strata/linalg/modular.hpp"

namespace strata::linalg {

namespace {

// ---------------------------------------------------------------------------
// Value tiers for the exact eliminator. Updates run in int64 with overflow
// checks first; a single overflow restarts the elimination with cpp_int.
// ---------------------------------------------------------------------------

struct Overflow {};

struct Checked64 {
    std::int64_t v = 0;

    Checked64() = default;
    Checked64(std::int64_t x) : v(x) {}

    friend Checked64 operator*(const Checked64& a, const Checked64& b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return Checked64(r);
    }
    friend Checked64 operator-(const Checked64& a, const Checked64& b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return Checked64(r);
    }
    friend Checked64 operator+(const Checked64& a, const Checked64& b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return Checked64(r);
    }
    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v == 1 || v == -1; }
};

struct BigInt {
    Int v;

    BigInt() = default;
    BigInt(const Int& x) : v(x) {}

    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(a.v * b.v); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(a.v - b.v); }
    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(a.v + b.v); }
    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v == 1 || v == -1; }
};

std::uint64_t abs_u64(std::int64_t x) {
    return x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
}

// gcd of the absolute values of all entries in a row
std::int64_t row_content(const std::vector<std::pair<std::int32_t, Checked64>>& row) {
    std::uint64_t g = 0;
    for (const auto& [c, x] : row) {
        g = std::gcd(g, abs_u64(x.v));
        if (g == 1) break;
    }
    return static_cast<std::int64_t>(g);
}

Int row_content(const std::vector<std::pair<std::int32_t, BigInt>>& row) {
    Int g = 0;
    for (const auto& [c, x] : row) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x.v));
        if (g == 1) break;
    }
    return g;
}

void divide_row(std::vector<std::pair<std::int32_t, Checked64>>& row, std::int64_t g) {
    for (auto& [c, x] : row) x.v /= g;
}

void divide_row(std::vector<std::pair<std::int32_t, BigInt>>& row, const Int& g) {
    for (auto& [c, x] : row) x.v /= g;
}

// ---------------------------------------------------------------------------
// Sparse fraction-free elimination with Markowitz-flavoured pivoting:
// pick the sparsest surviving column, then within it the row with the fewest
// entries, preferring unit pivots. Row updates are the two-term integer
// combination new = pivot*row - entry*pivot_row followed by content removal,
// so entries stay integral throughout.
// ---------------------------------------------------------------------------

template <typename T>
class SparseEliminator {
public:
    SparseEliminator(std::int32_t rows, std::int32_t cols) : nrows_(rows), ncols_(cols) {
        rows_.resize(rows);
        row_active_.assign(rows, true);
        col_rows_.resize(cols);
        col_nnz_.assign(cols, 0);
        col_active_.assign(cols, true);
    }

    void set_entry(std::int32_t r, std::int32_t c, T v) {
        rows_[r].emplace_back(c, std::move(v));
    }

    void finalize_load() {
        for (std::int32_t r = 0; r < nrows_; ++r) {
            std::sort(rows_[r].begin(), rows_[r].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            // merge duplicate coordinates, drop zeros
            RowVec merged;
            merged.reserve(rows_[r].size());
            for (auto& e : rows_[r]) {
                if (!merged.empty() && merged.back().first == e.first)
                    merged.back().second = merged.back().second + e.second;
                else
                    merged.push_back(std::move(e));
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& e) { return e.second.is_zero(); }),
                         merged.end());
            rows_[r] = std::move(merged);
            for (const auto& [c, v] : rows_[r]) {
                col_rows_[c].push_back(r);
                ++col_nnz_[c];
            }
        }
        for (std::int32_t c = 0; c < ncols_; ++c)
            if (col_nnz_[c] > 0) heap_.push({col_nnz_[c], c});
    }

    std::int32_t run() {
        std::int32_t rank = 0;
        while (true) {
            std::int32_t c = pop_pivot_column();
            if (c < 0) break;
            std::int32_t r = pick_pivot_row(c);
            eliminate(r, c);
            ++rank;
        }
        return rank;
    }

private:
    using RowVec = std::vector<std::pair<std::int32_t, T>>;

    std::int32_t pop_pivot_column() {
        while (!heap_.empty()) {
            auto [nnz, c] = heap_.top();
            if (!col_active_[c] || col_nnz_[c] != nnz) {
                heap_.pop();
                continue;
            }
            if (nnz == 0) {
                heap_.pop();
                continue;
            }
            return c;
        }
        return -1;
    }

    const T* find_entry(const RowVec& row, std::int32_t c) const {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::int32_t col) { return e.first < col; });
        if (it != row.end() && it->first == c) return &it->second;
        return nullptr;
    }

    std::int32_t pick_pivot_row(std::int32_t c) {
        std::int32_t best = -1;
        std::size_t best_nnz = 0;
        bool best_unit = false;
        auto& cand = col_rows_[c];
        std::size_t w = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::int32_t r = cand[i];
            if (!row_active_[r]) continue;
            const T* e = find_entry(rows_[r], c);
            if (!e) continue; // stale
            cand[w++] = r;
            bool unit = e->is_unit();
            std::size_t nnz = rows_[r].size();
            if (best < 0 || std::make_tuple(!unit, nnz, r) < std::make_tuple(!best_unit, best_nnz, best)) {
                best = r;
                best_nnz = nnz;
                best_unit = unit;
            }
        }
        cand.resize(w);
        if (best < 0) throw InternalError("pivot column without live rows");
        return best;
    }

    void remove_from_col(std::int32_t c) {
        --col_nnz_[c];
        heap_.push({col_nnz_[c], c});
    }

    void add_to_col(std::int32_t c, std::int32_t r) {
        col_rows_[c].push_back(r);
        ++col_nnz_[c];
        heap_.push({col_nnz_[c], c});
    }

    void eliminate(std::int32_t pr, std::int32_t pc) {
        const T pivot = *find_entry(rows_[pr], pc);
        auto rows_in_col = col_rows_[pc]; // copy: we mutate the registry
        for (std::int32_t r : rows_in_col) {
            if (r == pr || !row_active_[r]) continue;
            const T* e = find_entry(rows_[r], pc);
            if (!e) continue;
            combine_rows(r, *e, pr, pivot);
        }
        // retire pivot row and column
        row_active_[pr] = false;
        for (const auto& [c, v] : rows_[pr]) remove_from_col(c);
        RowVec().swap(rows_[pr]);
        col_active_[pc] = false;
    }

    // row_r := pivot*row_r - coef*row_p, gcd-normalized; the pivot-column
    // entry cancels inside the merge.
    void combine_rows(std::int32_t r, const T coef, std::int32_t pr, const T& pivot) {
        const RowVec& a = rows_[r];
        const RowVec& b = rows_[pr];
        RowVec out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.emplace_back(a[i].first, pivot * a[i].second);
                ++i;
            } else if (i == a.size() || b[j].first < a[i].first) {
                T v = T() - coef * b[j].second;
                add_to_col(b[j].first, r); // fill-in
                out.emplace_back(b[j].first, std::move(v));
                ++j;
            } else {
                T v = pivot * a[i].second - coef * b[j].second;
                if (v.is_zero())
                    remove_from_col(a[i].first);
                else
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        auto g = row_content(out);
        if (!(g == 1) && !(g == 0)) divide_row(out, g);
        rows_[r] = std::move(out);
    }

    std::int32_t nrows_, ncols_;
    std::vector<RowVec> rows_;
    std::vector<bool> row_active_;
    std::vector<std::vector<std::int32_t>> col_rows_; // may hold stale ids
    std::vector<std::int32_t> col_nnz_;               // exact live counts
    std::vector<char> col_active_;
    std::priority_queue<std::pair<std::int32_t, std::int32_t>,
                        std::vector<std::pair<std::int32_t, std::int32_t>>,
                        std::greater<>>
        heap_;
};

template <typename T, typename Load>
std::int32_t run_eliminator(const SparseMatZ& m, Load load) {
    SparseEliminator<T> elim(m.rows, m.cols);
    for (const auto& e : m.entries) elim.set_entry(e.row, e.col, load(e.value));
    elim.finalize_load();
    return elim.run();
}

} // namespace

std::int32_t rank_exact(const SparseMatZ& m) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    try {
        return run_eliminator<Checked64>(m, [](const Int& v) {
            if (v < std::numeric_limits<std::int64_t>::min() ||
                v > std::numeric_limits<std::int64_t>::max())
                throw Overflow{};
            return Checked64(static_cast<std::int64_t>(v));
        });
    } catch (const Overflow&) {
        return run_eliminator<BigInt>(m, [](const Int& v) { return BigInt(v); });
    }
}

std::int32_t rank(const SparseMatZ& m, const RankOptions& opts) {
    switch (opts.engine) {
    case RankEngine::Exact:
        return rank_exact(m);
    case RankEngine::Modular:
        return rank_mod_p(m, opts.prime);
    case RankEngine::Checked: {
        std::int32_t re = rank_exact(m);
        std::int32_t rm = rank_mod_p(m, opts.prime);
        if (re != rm)
            throw MismatchError("modular rank " + std::to_string(rm) +
                                " disagrees with exact rank " + std::to_string(re) +
                                " (prime " + std::to_string(opts.prime) + ")");
        return re;
    }
    }
    throw InternalError("unknown rank engine");
}

std::int32_t rank(const SparseMatQ& m, const RankOptions& opts) {
    return rank(clear_denominators_rows(m), opts);
}

SparseMatZ clear_denominators_rows(const SparseMatQ& m) {
    std::vector<Int> scale(static_cast<std::size_t>(m.rows), Int(1));
    for (const auto& e : m.entries) {
        Int den = boost::multiprecision::denominator(e.value);
        scale[e.row] = boost::multiprecision::lcm(scale[e.row], den);
    }
    SparseMatZ out(m.rows, m.cols);
    out.entries.reserve(m.entries.size());
    for (const auto& e : m.entries) {
        Int num = boost::multiprecision::numerator(e.value);
        Int den = boost::multiprecision::denominator(e.value);
        out.entries.push_back({e.row, e.col, num * (scale[e.row] / den)});
    }
    return out;
}

SparseMatQ to_rational(const SparseMatZ& m) {
    SparseMatQ out(m.rows, m.cols);
    out.entries.reserve(m.entries.size());
    for (const auto& e : m.entries) out.entries.push_back({e.row, e.col, Rat(e.value)});
    return out;
}

SparseMatQ matmul(const SparseMatQ& a, const SparseMatQ& b) {
    if (a.cols != b.rows) throw InternalError("matmul shape mismatch");
    // group a's entries by column
    std::vector<std::vector<std::pair<std::int32_t, Rat>>> a_by_col(a.cols);
    for (const auto& e : a.entries) a_by_col[e.col].emplace_back(e.row, e.value);
    SparseMatQ out(a.rows, b.cols);
    for (const auto& e : b.entries) {
        for (const auto& [r, v] : a_by_col[e.row]) out.entries.push_back({r, e.col, v * e.value});
    }
    out.canonicalize();
    return out;
}

std::vector<std::int32_t> rref_dense(DenseQ& m) {
    std::vector<std::int32_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t nrows = m.size();
    const std::size_t ncols = m[0].size();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < ncols && prow < nrows; ++c) {
        std::size_t sel = prow;
        while (sel < nrows && m[sel][c] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[prow], m[sel]);
        const Rat inv = Rat(1) / m[prow][c];
        for (std::size_t j = c; j < ncols; ++j) m[prow][j] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == prow || m[r][c] == 0) continue;
            const Rat f = m[r][c];
            for (std::size_t j = c; j < ncols; ++j) m[r][j] -= f * m[prow][j];
        }
        pivots.push_back(static_cast<std::int32_t>(c));
        ++prow;
    }
    return pivots;
}

std::vector<std::vector<Rat>> kernel_basis(const SparseMatQ& m) {
    DenseQ d = m.to_dense();
    if (d.empty()) d.assign(1, std::vector<Rat>(static_cast<std::size_t>(m.cols), Rat(0)));
    std::vector<std::int32_t> pivots = rref_dense(d);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
    for (std::int32_t c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (std::int32_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(m.cols), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -d[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseMatQ solve_in_span(const SparseMatQ& b, const SparseMatQ& y) {
    if (b.rows != y.rows) throw InternalError("solve_in_span shape mismatch");
    const std::size_t nrows = static_cast<std::size_t>(b.rows);
    const std::size_t kb = static_cast<std::size_t>(b.cols);
    const std::size_t ky = static_cast<std::size_t>(y.cols);
    DenseQ aug(nrows, std::vector<Rat>(kb + ky, Rat(0)));
    for (const auto& e : b.entries) aug[e.row][e.col] += e.value;
    for (const auto& e : y.entries) aug[e.row][kb + e.col] += e.value;
    std::vector<std::int32_t> pivots = rref_dense(aug);
    for (std::int32_t p : pivots)
        if (static_cast<std::size_t>(p) >= kb)
            throw InternalError("solve_in_span: right-hand side not in span");
    if (pivots.size() != kb) throw InternalError("solve_in_span: basis not of full column rank");
    SparseMatQ x(static_cast<std::int32_t>(kb), static_cast<std::int32_t>(ky));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ky; ++j)
            if (aug[i][kb + j] != 0)
                x.entries.push_back({static_cast<std::int32_t>(pivots[i]),
                                     static_cast<std::int32_t>(j), aug[i][kb + j]});
    x.canonicalize();
    return x;
}

} // namespace strata::linalg
