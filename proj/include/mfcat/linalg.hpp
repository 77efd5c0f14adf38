#pragma once

#include "mfcat/field.hpp"

#include <cstdint>
#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace mfcat {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::value_type>>;

// Row space kept in semi-echelon form: every row starts with a pivot column
// (the smallest column it touches) scaled to 1, pivots distinct.
template <class F>
class Echelon {
public:
    using V = typename F::value_type;
    using Row = SparseVec<F>;

    Echelon(F field, std::size_t ncols)
        : f_(field), ncols_(ncols), pivot_(ncols, -1), acc_(ncols, field.zero()), mark_(ncols, 0) {}

    const F& field() const { return f_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    int pivot_row(std::uint32_t col) const { return pivot_[col]; }
    bool is_pivot(std::uint32_t col) const { return pivot_[col] >= 0; }

    // Eliminates pivot columns from v.  With full = false only the leading part
    // is reduced and the first surviving column is returned first.
    Row reduce(const Row& v, bool full = true) {
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        for (const auto& [c, a] : v) {
            if (f_.is_zero(a)) continue;
            acc_[c] = f_.add(acc_[c], a);
            if (!mark_[c]) {
                mark_[c] = 1;
                heap.push(c);
            }
        }
        Row out;
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            mark_[c] = 0;
            if (f_.is_zero(acc_[c])) continue;
            int pr = pivot_[c];
            if (pr >= 0 && (full || out.empty())) {
                V coef = acc_[c];
                acc_[c] = f_.zero();
                const Row& row = rows_[pr];
                for (std::size_t k = 1; k < row.size(); ++k) {
                    std::uint32_t cc = row[k].first;
                    f_.submul(acc_[cc], coef, row[k].second);
                    if (!mark_[cc]) {
                        mark_[cc] = 1;
                        heap.push(cc);
                    }
                }
            } else {
                out.emplace_back(c, acc_[c]);
                acc_[c] = f_.zero();
            }
        }
        return out;
    }

    // Adds v to the row space; returns false when v was dependent.
    bool insert(const Row& v) {
        Row r = reduce(v, false);
        if (r.empty()) return false;
        V inv = f_.inv(r.front().second);
        for (auto& e : r) e.second = f_.mul(e.second, inv);
        pivot_[r.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    bool contains(const Row& v) { return reduce(v, false).empty(); }

    // Back-substitution to reduced row echelon form.
    void make_reduced() {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
        for (std::size_t i : order) {
            Row tail(rows_[i].begin() + 1, rows_[i].end());
            Row red = reduce(tail, true);
            Row nr;
            nr.reserve(red.size() + 1);
            nr.push_back(rows_[i].front());
            for (auto& e : red) nr.push_back(std::move(e));
            rows_[i] = std::move(nr);
        }
    }

    // Kernel of the row space viewed as a linear system; requires make_reduced().
    // Only columns in [lo, hi) are considered, and rows must not touch others.
    std::vector<Row> kernel_basis(std::uint32_t lo, std::uint32_t hi) const {
        std::vector<Row> basis;
        std::vector<std::vector<std::pair<std::uint32_t, V>>> by_free(hi - lo);
        for (const Row& r : rows_) {
            std::uint32_t lead = r.front().first;
            if (lead < lo || lead >= hi) continue;
            for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].first - lo].emplace_back(lead, f_.neg(r[k].second));
        }
        for (std::uint32_t j = lo; j < hi; ++j) {
            if (pivot_[j] >= 0) continue;
            Row v = by_free[j - lo];
            v.emplace_back(j, f_.one());
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Completes x (values on columns >= split) to a solution of all rows by
    // back-substitution, setting free columns below split to zero.
    std::vector<V> back_substitute(std::vector<V> x, std::uint32_t split) const {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].front().first < split) order.push_back(i);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
        for (std::size_t i : order) {
            const Row& r = rows_[i];
            V s = f_.zero();
            for (std::size_t k = 1; k < r.size(); ++k) s = f_.add(s, f_.mul(r[k].second, x[r[k].first]));
            x[r.front().first] = f_.neg(s);
        }
        return x;
    }

private:
    F f_;
    std::size_t ncols_;
    std::vector<int> pivot_;
    std::vector<Row> rows_;
    std::vector<V> acc_;
    std::vector<char> mark_;
};

// Writes targets as combinations of a fixed list of vectors.
template <class F>
class SpanSolver {
public:
    using V = typename F::value_type;

    SpanSolver(F field, std::size_t ncols, const std::vector<SparseVec<F>>& gens)
        : f_(field), ncols_(ncols), k_(gens.size()), ech_(field, ncols + gens.size()) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            SparseVec<F> v = gens[i];
            v.emplace_back(static_cast<std::uint32_t>(ncols + i), field.one());
            ech_.insert(v);
        }
    }

    std::optional<std::vector<V>> solve(const SparseVec<F>& target) {
        SparseVec<F> r = ech_.reduce(target, true);
        std::vector<V> coef(k_, f_.zero());
        for (const auto& [c, a] : r) {
            if (c < ncols_) return std::nullopt;
            coef[c - ncols_] = f_.neg(a);
        }
        return coef;
    }

private:
    F f_;
    std::size_t ncols_, k_;
    Echelon<F> ech_;
};

// Rank and determinant of small dense matrices.
template <class F>
std::size_t dense_rank(const F& f, std::vector<std::vector<typename F::value_type>> m) {
    std::size_t rank = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && f.is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        auto inv = f.inv(m[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || f.is_zero(m[r][c])) continue;
            auto t = f.mul(m[r][c], inv);
            for (std::size_t k = c; k < cols; ++k) f.submul(m[r][k], t, m[rank][k]);
        }
        ++rank;
    }
    return rank;
}

template <class F>
typename F::value_type dense_det(const F& f, std::vector<std::vector<typename F::value_type>> m) {
    std::size_t n = m.size();
    auto det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && f.is_zero(m[p][c])) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = f.neg(det);
        }
        det = f.mul(det, m[c][c]);
        auto inv = f.inv(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (f.is_zero(m[r][c])) continue;
            auto t = f.mul(m[r][c], inv);
            for (std::size_t k = c; k < n; ++k) f.submul(m[r][k], t, m[c][k]);
        }
    }
    return det;
}

}  // namespace mfcat
