#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "friezelab/gf.hpp"

namespace friezelab::linalg {

using gf::Fe;
using boost::multiprecision::cpp_int;

using Vec = std::vector<Fe>;

/// Dense matrix over a finite field, row-major. All entries share one field.
class Matrix {
public:
    Matrix(const gf::Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const gf::Field& f, std::size_t n);
    static Matrix from_rows(const gf::Field& f, const std::vector<Vec>& rows);
    static Matrix from_columns(const gf::Field& f, const std::vector<Vec>& cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const gf::Field& field() const { return *f_; }

    [[nodiscard]] Fe& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    [[nodiscard]] const Fe& at(std::size_t r, std::size_t c) const {
        return a_[r * cols_ + c];
    }
    [[nodiscard]] Vec row(std::size_t r) const;
    [[nodiscard]] Vec column(std::size_t c) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Determinant by Gaussian elimination. Square matrices only.
    [[nodiscard]] Fe det() const;
    /// Throws invalid_parameter if the matrix is singular or not square.
    [[nodiscard]] Matrix inverse() const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] Matrix transpose() const;

private:
    const gf::Field* f_;
    std::size_t rows_, cols_;
    std::vector<Fe> a_;
};

/// Solves A x = b for square invertible A; throws invalid_parameter otherwise.
[[nodiscard]] Vec solve(const Matrix& A, const Vec& b);

[[nodiscard]] cpp_int gl_order(int k, long q);
[[nodiscard]] cpp_int pgl_order(int k, long q);

/// Canonical representative of a projective point: the scalar multiple whose
/// first nonzero coordinate is 1. Throws invalid_parameter on the zero vector.
[[nodiscard]] Vec proj_normalize(const Vec& v);

/// All (q^k - 1)/(q - 1) projective points of dimension k - 1, as canonical
/// representatives in lexicographic order of their coordinate codes.
[[nodiscard]] std::vector<Vec> all_proj_points(const gf::Field& f, int k);

/// Calls fn once for every invertible k x k matrix, building rows left to
/// right and pruning dependent prefixes.
void for_each_invertible(const gf::Field& f, int k,
                         const std::function<void(const Matrix&)>& fn);

}  // namespace friezelab::linalg
