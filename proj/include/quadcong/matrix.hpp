#pragma once

#include "quadcong/field.hpp"

#include <string>
#include <vector>

namespace quadcong {

using Vec = std::vector<GR>;

// Dense matrix over Q(i), row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<GR>>& rows);
    static Matrix diag(const Vec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int dim() const { return rows_; }

    GR& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const GR& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const GR& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const GR& c) { return a *= c; }
    friend Matrix operator*(const GR& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(int e) const;
    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GR> data_;
};

using SquareMatrix = Matrix;

GR det(const Matrix& m);
Matrix inverse(const Matrix& m);
Matrix adjugate(const Matrix& m);
int rank(const Matrix& m);
// basis of the right null space {v : m v = 0}
std::vector<Vec> kernel(const Matrix& m);
// reduced row echelon form, returns pivot columns
std::vector<int> rref(Matrix& m);

Matrix sym_part(const Matrix& m);
Matrix antisym_part(const Matrix& m);

GR dot(const Vec& a, const Vec& b);
bool proportional(const Vec& u, const Vec& v);
bool is_zero(const Vec& v);
// true iff the two families span the same subspace
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace quadcong
