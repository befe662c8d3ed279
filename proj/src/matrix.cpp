#include "quadcong/matrix.hpp"

#include <sstream>

namespace quadcong {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = GR(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GR>>& rows) {
    if (rows.empty()) throw math_error("empty matrix");
    int c = static_cast<int>(rows[0].size());
    Matrix m(static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw math_error("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diag(const Vec& d) {
    int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = d[k];
    return m;
}

Vec Matrix::row(int i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const { return is_square() && *this == transpose(); }
bool Matrix::is_antisymmetric() const { return is_square() && *this == -transpose(); }

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix add: shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix sub: shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const GR& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw math_error("matrix mul: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const GR& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw math_error("matrix-vector: shape mismatch");
    Vec r(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Matrix Matrix::pow(int e) const {
    if (!is_square()) throw math_error("pow of non-square matrix");
    if (e < 0) return inverse(*this).pow(-e);
    Matrix r = identity(rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        GR inv = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GR f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

GR det(const Matrix& m0) {
    if (!m0.is_square()) throw math_error("det of non-square matrix");
    Matrix m = m0;
    int n = m.rows();
    GR d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return GR(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        GR inv = m(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            GR f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw math_error("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = GR(1);
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw math_error("inverse of singular matrix");
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

Matrix adjugate(const Matrix& m) {
    if (!m.is_square()) throw math_error("adjugate of non-square matrix");
    int n = m.rows();
    GR d = det(m);
    if (!d.is_zero()) return inverse(m) * d;
    Matrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = GR(1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            GR v = det(minor);
            adj(i, j) = ((i + j) % 2) ? -v : v;
        }
    return adj;
}

int rank(const Matrix& m) {
    Matrix t = m;
    return static_cast<int>(rref(t).size());
}

std::vector<Vec> kernel(const Matrix& m) {
    Matrix t = m;
    auto piv = rref(t);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        Vec v(m.cols());
        v[free] = GR(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(static_cast<int>(r), free);
        basis.push_back(v);
    }
    return basis;
}

Matrix sym_part(const Matrix& m) { return (m + m.transpose()) * GR::frac(1, 2); }
Matrix antisym_part(const Matrix& m) { return (m - m.transpose()) * GR::frac(1, 2); }

GR dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw math_error("dot: length mismatch");
    GR s(0);
    for (size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool proportional(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw math_error("proportional: length mismatch");
    bool uz = is_zero(u), vz = is_zero(v);
    if (uz || vz) return uz && vz;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    // pairs with a common zero slot are not caught above
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i].is_zero() != v[i].is_zero()) return false;
    return true;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    auto stack = [](const std::vector<Vec>& rows, int width) {
        Matrix m(static_cast<int>(rows.size()), width);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < width; ++j) m(static_cast<int>(i), j) = rows[i][j];
        return m;
    };
    int width = !a.empty() ? static_cast<int>(a[0].size()) : !b.empty() ? static_cast<int>(b[0].size()) : 0;
    if (width == 0) return true;
    std::vector<Vec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    int ra = a.empty() ? 0 : rank(stack(a, width));
    int rb = b.empty() ? 0 : rank(stack(b, width));
    return ra == rb && rank(stack(both, width)) == ra;
}

}  // namespace quadcong
