#include "nova/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nova {

namespace {

void require_same_len(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
}

}  // namespace

Vec zero_vec(std::size_t n, Field f) { return Vec(n, Scalar::zero(f)); }

Vec basis_vec(std::size_t n, std::size_t i, Field f) {
    if (i >= n) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
    require_same_len(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_len(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (Scalar& s : r) s *= c;
    return r;
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

Mat::Mat(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(std::size_t n, Field f) {
    Mat m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("operator/vector dimension mismatch");
    Vec r = zero_vec(rows_, field_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
    }
    return r;
}

Mat Mat::power(unsigned long long n) const {
    if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
    Mat acc = identity(rows_, field_);
    Mat base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Mat Mat::kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return Scalar::one(field_);
    // Bareiss fraction-free elimination: every division below is exact.
    Mat w = *this;
    Scalar prev = Scalar::one(field_);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k).is_zero()) ++piv;
            if (piv == n) return Scalar::zero(field_);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    Scalar d = w.at(n - 1, n - 1);
    return negate ? -d : d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = rows_;
    // Gauss-Jordan on [this | I]; the right block becomes the inverse.
    Mat aug(n, 2 * n, field_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Scalar::one(field_);
    }
    Mat r = aug.rref();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool want_one = i == j;
            if (r.at(i, j).is_one() != want_one || (!want_one && !r.at(i, j).is_zero()))
                throw std::domain_error("matrix is singular");
        }
    Mat inv(n, n, field_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Mat Mat::rref() const {
    Mat w = *this;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows_ && lead < cols_; ++r) {
        std::size_t piv = r;
        while (piv < rows_ && w.at(piv, lead).is_zero()) ++piv;
        if (piv == rows_) {
            ++lead;
            --r;  // retry this row with the next column
            continue;
        }
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(r, j), w.at(piv, j));
        Scalar inv = w.at(r, lead).inverse();
        for (std::size_t j = 0; j < cols_; ++j) w.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || w.at(i, lead).is_zero()) continue;
            Scalar f = w.at(i, lead);
            for (std::size_t j = 0; j < cols_; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++lead;
    }
    return w;
}

std::vector<Vec> Mat::nullspace() const {
    Mat r = rref();
    std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
    std::size_t nrank = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!r.at(i, j).is_zero()) {
                pivot_of_col[j] = static_cast<std::ptrdiff_t>(i);
                ++nrank;
                break;
            }
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        Vec v = zero_vec(cols_, field_);
        v[j] = Scalar::one(field_);
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = -r.at(static_cast<std::size_t>(pivot_of_col[c]), j);
        basis.push_back(std::move(v));
    }
    (void)nrank;
    return basis;
}

std::size_t Mat::rank() const {
    Mat r = rref();
    std::size_t rk = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!r.at(i, j).is_zero()) {
                ++rk;
                break;
            }
    return rk;
}

std::string Mat::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& gens, Field f)
    : ambient_(ambient), field_(f) {
    Mat m(gens.size(), ambient, f);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != ambient)
            throw std::invalid_argument("generator length differs from ambient dimension");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = gens[i][j];
    }
    Mat r = m.rref();
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Vec row(ambient, Scalar::zero(f));
        bool nz = false;
        for (std::size_t j = 0; j < ambient; ++j) {
            row[j] = r.at(i, j);
            nz = nz || !row[j].is_zero();
        }
        if (nz) basis_.push_back(std::move(row));
    }
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector/ambient dimension mismatch");
    // Reduce v against the canonical basis rows.
    Vec w = v;
    for (const Vec& row : basis_) {
        std::size_t lead = 0;
        while (lead < ambient_ && row[lead].is_zero()) ++lead;
        if (lead == ambient_) continue;
        if (!w[lead].is_zero()) {
            Scalar f = w[lead];
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * row[j];
        }
    }
    return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& o) const {
    for (const Vec& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

}  // namespace nova
