#include "supereinstein/linalg.hpp"

namespace supereinstein {

namespace {

// Row-reduces [a | rhs] in place; returns pivot column per row.
std::vector<int> eliminate(ScalarMatrix& a, ScalarMatrix* rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        if (rhs)
            for (auto& v : (*rhs)[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (rhs)
                for (std::size_t j = 0; j < (*rhs)[i].size(); ++j) (*rhs)[i][j] -= f * (*rhs)[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_col;
}

}  // namespace

ScalarMatrix invert(const ScalarMatrix& a) {
    const std::size_t n = a.size();
    ScalarMatrix work = a;
    ScalarMatrix id(n, ScalarVector(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Scalar(1);
    auto pivots = eliminate(work, &id);
    if (pivots.size() != n) throw DegenerateForm("matrix is singular");
    return id;
}

RationalMatrix invert(const RationalMatrix& a) {
    ScalarMatrix s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        s[i].reserve(a[i].size());
        for (const auto& v : a[i]) s[i].emplace_back(v);
    }
    ScalarMatrix inv = invert(s);
    RationalMatrix out(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
        out[i].reserve(inv[i].size());
        for (const auto& v : inv[i]) out[i].push_back(v.as_rational());
    }
    return out;
}

ScalarVector solve(const ScalarMatrix& a, const ScalarVector& b) {
    const std::size_t n = a.size();
    ScalarMatrix work = a;
    ScalarMatrix rhs(n, ScalarVector(1));
    for (std::size_t i = 0; i < n; ++i) rhs[i][0] = b[i];
    auto pivots = eliminate(work, &rhs);
    if (pivots.size() != n) throw DegenerateForm("singular system");
    ScalarVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(pivots[i])] = rhs[i][0];
    return out;
}

std::vector<ScalarVector> nullspace(const ScalarMatrix& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    ScalarMatrix work = a;
    auto pivots = eliminate(work, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<ScalarVector> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        ScalarVector v(cols);
        v[free_c] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = -work[r][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(const ScalarMatrix& a) {
    const std::size_t n = a.size();
    ScalarMatrix work = a;
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && work[p][c].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            std::swap(work[p], work[c]);
            det = -det;
        }
        det *= work[c][c];
        Scalar inv = work[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (work[i][c].is_zero()) continue;
            Scalar f = work[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) work[i][j] -= f * work[c][j];
        }
    }
    return det;
}

}  // namespace supereinstein
