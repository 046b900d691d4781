#pragma once

#include "nova/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nova {

/// Coordinate vector over the ambient field; length is fixed by context.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, Field f);
Vec basis_vec(std::size_t n, std::size_t i, Field f);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
std::string vec_str(const Vec& v);

/// Dense matrix of exact scalars, row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static Mat identity(std::size_t n, Field f);

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;      ///< Matrix times column vector.
    Mat power(unsigned long long n) const;
    Mat kron(const Mat& o) const;       ///< Kronecker product.

    /// Exact determinant via fraction-free (Bareiss) elimination.
    Scalar det() const;
    /// Inverse by Gauss-Jordan; std::domain_error when singular.
    Mat inverse() const;
    /// Canonical reduced row echelon form (unit pivots, zeros above and below).
    Mat rref() const;
    /// Basis of the right nullspace in canonical reduced echelon form.
    std::vector<Vec> nullspace() const;
    std::size_t rank() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> a_;
};

/// Row space of a matrix in canonical reduced echelon form, used to compare
/// and chain spans of vectors.
class Subspace {
public:
    /// Span of the given vectors inside an ambient space of dimension n.
    Subspace(std::size_t ambient, const std::vector<Vec>& gens, Field f);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

private:
    std::size_t ambient_ = 0;
    Field field_;
    std::vector<Vec> basis_;  // rows of the RREF, canonical
};

}  // namespace nova
