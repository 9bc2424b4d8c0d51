#include "friezelab/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace friezelab::linalg {

Matrix::Matrix(const gf::Field& f, std::size_t rows, std::size_t cols)
    : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {
    if (rows == 0 || cols == 0)
        throw invalid_parameter("matrix dimensions must be positive");
}

Matrix Matrix::identity(const gf::Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const gf::Field& f, const std::vector<Vec>& rows) {
    if (rows.empty()) throw invalid_parameter("matrix needs at least one row");
    Matrix m(f, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw invalid_parameter("ragged rows in matrix construction");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const gf::Field& f, const std::vector<Vec>& cols) {
    if (cols.empty()) throw invalid_parameter("matrix needs at least one column");
    Matrix m(f, cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_)
            throw invalid_parameter("ragged columns in matrix construction");
        for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.f_ != b.f_) throw invalid_parameter("mixed-field matrix product");
    if (a.cols_ != b.rows_)
        throw invalid_parameter("inner dimensions disagree in matrix product");
    Matrix r(*a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Fe aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size())
        throw invalid_parameter("dimension mismatch in matrix-vector product");
    Vec r(a.rows_, a.f_->zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Fe Matrix::det() const {
    if (rows_ != cols_) throw invalid_parameter("determinant of non-square matrix");
    Matrix m = *this;
    Fe d = f_->one();
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) return f_->zero();
        if (piv != col) {
            for (std::size_t c = col; c < cols_; ++c)
                std::swap(m.at(piv, c), m.at(col, c));
            d = -d;
        }
        const Fe p = m.at(col, col);
        d *= p;
        for (std::size_t r = col + 1; r < rows_; ++r) {
            const Fe factor = m.at(r, col) / p;
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < cols_; ++c)
                m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw invalid_parameter("inverse of non-square matrix");
    Matrix m = *this;
    Matrix inv = identity(*f_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) throw invalid_parameter("matrix is singular");
        if (piv != col)
            for (std::size_t c = 0; c < cols_; ++c) {
                std::swap(m.at(piv, c), m.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        const Fe pinv = m.at(col, col).inv();
        for (std::size_t c = 0; c < cols_; ++c) {
            m.at(col, c) *= pinv;
            inv.at(col, c) *= pinv;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == col) continue;
            const Fe factor = m.at(r, col);
            if (factor.is_zero()) continue;
            for (std::size_t c = 0; c < cols_; ++c) {
                m.at(r, c) -= factor * m.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t c = col; c < cols_; ++c)
                std::swap(m.at(piv, c), m.at(rank, c));
        const Fe p = m.at(rank, col);
        for (std::size_t r = piv + 1; r < rows_; ++r) {
            const Fe factor = m.at(r, col) / p;
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < cols_; ++c)
                m.at(r, c) -= factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::transpose() const {
    Matrix t(*f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Vec solve(const Matrix& A, const Vec& b) {
    if (A.rows() != A.cols() || A.rows() != b.size())
        throw invalid_parameter("solve needs a square system");
    return A.inverse() * b;
}

cpp_int gl_order(int k, long q) {
    if (k < 1 || q < 2) throw invalid_parameter("gl_order needs k >= 1, q >= 2");
    cpp_int qk = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(k));
    cpp_int order = 1;
    cpp_int qi = 1;
    for (int i = 0; i < k; ++i) {
        order *= qk - qi;
        qi *= q;
    }
    return order;
}

cpp_int pgl_order(int k, long q) {
    const cpp_int gl = gl_order(k, q);
    const cpp_int centre = q - 1;
    if (gl % centre != 0)
        throw invariant_violation("group order not divisible by its centre");
    return gl / centre;
}

Vec proj_normalize(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const Fe s = v[i].inv();
        Vec out(v);
        for (auto& x : out) x *= s;
        return out;
    }
    throw invalid_parameter("zero vector has no projective representative");
}

std::vector<Vec> all_proj_points(const gf::Field& f, int k) {
    if (k < 1) throw invalid_parameter("projective points need k >= 1");
    std::vector<Vec> pts;
    const auto els = gf::all_elements(f);
    // Leading zeros, then a 1, then free coordinates; recursion order equals
    // lexicographic order of the code sequences.
    Vec cur(static_cast<std::size_t>(k), f.zero());
    auto emit_free = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            pts.push_back(cur);
            return;
        }
        for (Fe e : els) {
            cur[pos] = e;
            self(self, pos + 1);
        }
        cur[pos] = f.zero();
    };
    for (int lead = k - 1; lead >= 0; --lead) {
        // later leading positions give longer zero prefixes, which sort first
        std::fill(cur.begin(), cur.end(), f.zero());
        cur[lead] = f.one();
        emit_free(emit_free, lead + 1);
    }
    return pts;
}

void for_each_invertible(const gf::Field& f, int k,
                         const std::function<void(const Matrix&)>& fn) {
    if (k < 1) throw invalid_parameter("for_each_invertible needs k >= 1");
    const auto els = gf::all_elements(f);
    Matrix m(f, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    std::vector<Vec> rows;
    auto rec = [&](auto&& self, int r) -> void {
        if (r == k) {
            fn(m);
            return;
        }
        Vec row(static_cast<std::size_t>(k), f.zero());
        auto fill = [&](auto&& self2, int c) -> void {
            if (c == k) {
                rows.push_back(row);
                if (Matrix::from_rows(f, rows).rank() == rows.size()) {
                    for (int j = 0; j < k; ++j)
                        m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) = row[static_cast<std::size_t>(j)];
                    self(self, r + 1);
                }
                rows.pop_back();
                return;
            }
            for (Fe e : els) {
                row[static_cast<std::size_t>(c)] = e;
                self2(self2, c + 1);
            }
        };
        fill(fill, 0);
    };
    rec(rec, 0);
}

}  // namespace friezelab::linalg
