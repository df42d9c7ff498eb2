#include "kstab/linalg.hpp"

#include <utility>

namespace kstab::linalg {

namespace {

struct Echelon {
    Matrix rows;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form of an augmented or plain matrix.
Echelon reduce(Matrix m, int cols) {
    Echelon e;
    int r = 0;
    const int nrows = static_cast<int>(m.size());
    for (int c = 0; c < cols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(m);
    return e;
}

}  // namespace

int rank(Matrix rows) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows.front().size());
    return static_cast<int>(reduce(std::move(rows), cols).pivot_cols.size());
}

Rational determinant(Matrix m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<Vec> nullspace(const Matrix& rows, int cols) {
    auto e = reduce(rows, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec x = zero_vec(cols);
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            x[static_cast<std::size_t>(e.pivot_cols[i])] = -e.rows[i][static_cast<std::size_t>(free)];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

std::optional<Echelon> augmented(const Matrix& rows, const Vec& rhs, int& cols) {
    if (rows.size() != rhs.size()) throw GeometryError("solve: row count mismatch");
    cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    Matrix aug = rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto e = reduce(std::move(aug), cols + 1);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;
    return e;
}

}  // namespace

std::optional<Vec> solve_any(const Matrix& rows, const Vec& rhs) {
    int cols = 0;
    auto e = augmented(rows, rhs, cols);
    if (!e) return std::nullopt;
    Vec x = zero_vec(cols);
    for (std::size_t i = 0; i < e->pivot_cols.size(); ++i)
        x[static_cast<std::size_t>(e->pivot_cols[i])] = e->rows[i][static_cast<std::size_t>(cols)];
    return x;
}

std::optional<Vec> solve_unique(const Matrix& rows, const Vec& rhs) {
    int cols = 0;
    auto e = augmented(rows, rhs, cols);
    if (!e || static_cast<int>(e->pivot_cols.size()) != cols) return std::nullopt;
    Vec x = zero_vec(cols);
    for (std::size_t i = 0; i < e->pivot_cols.size(); ++i)
        x[static_cast<std::size_t>(e->pivot_cols[i])] = e->rows[i][static_cast<std::size_t>(cols)];
    return x;
}

}  // namespace kstab::linalg
