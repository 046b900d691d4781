#pragma once

#include "nova/linalg.hpp"
#include "nova/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace nova {

/// A single nonzero structure constant: e_i e_j includes value * e_k.
struct TensorEntry {
    std::size_t i, j, k;
    Scalar value;
};

/// Maximum dimension for dense exact tensors (dim^3 scalars are stored).
inline constexpr std::size_t kMaxDim = 64;

/// Finite-dimensional algebra given by its structure constants with respect
/// to the basis e_0..e_{dim-1}:  e_i e_j = sum_k c[i][j][k] e_k.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::size_t dim, Field f, std::string label = {});

    std::size_t dim() const { return dim_; }
    Field field() const { return field_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    Scalar& c(std::size_t i, std::size_t j, std::size_t k);
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const;

    /// Product of basis elements e_i e_j as a coordinate vector.
    Vec basis_product(std::size_t i, std::size_t j) const;

    bool operator==(const Algebra& o) const;
    bool operator!=(const Algebra& o) const { return !(*this == o); }

private:
    std::size_t dim_ = 0;
    Field field_;
    std::string label_;
    std::vector<Scalar> c_;  // row-major rank-3 tensor, dim^3 entries

    void check_index(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Builds an algebra from a sparse entry list.  Entries must be in range,
/// without duplicate (i,j,k) positions, and dim must not exceed kMaxDim.
Algebra make_algebra(std::size_t dim, const std::vector<TensorEntry>& entries, Field f,
                     std::string label = {});

/// Bilinear product of two coordinate vectors in A.
Vec multiply(const Algebra& a, const Vec& x, const Vec& y);

/// Associator (xy)z - x(yz).
Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

/// Linear map in column convention: map(e_j) = sum_i m[i][j] e_i.
struct LinearOperator {
    Mat m;
    std::string label;

    std::size_t dim() const { return m.rows(); }
    Vec apply(const Vec& v) const { return m.apply(v); }
    static LinearOperator identity(std::size_t n, Field f, std::string label = "id");
};

/// Bilinear form B(e_i, e_j) = b[i][j].
struct BilinearForm {
    Mat b;
    std::string label;

    std::size_t dim() const { return b.rows(); }
    Scalar eval(const Vec& x, const Vec& y) const;
};

/// A carrier space with whichever named components a computation involves.
/// `dot` is the commutative-associative role, `star` the Novikov/bracket
/// role; alpha is the twist map, del the derivation-like map, form the
/// bilinear form.  All present components must share dim and field.
struct StructureBundle {
    std::size_t dim = 0;
    Field field;
    std::optional<Algebra> dot;
    std::optional<Algebra> star;
    std::optional<LinearOperator> alpha;
    std::optional<LinearOperator> del;
    std::optional<BilinearForm> form;
    std::string label;
};

/// Validates cross-component dimensions/fields; throws std::invalid_argument.
StructureBundle make_bundle(std::size_t dim, Field f, std::optional<Algebra> dot,
                            std::optional<Algebra> star, std::optional<LinearOperator> alpha,
                            std::optional<LinearOperator> del, std::optional<BilinearForm> form,
                            std::string label = {});

/// Applies a linear map to every product of A: returns the algebra with
/// products op(e_i e_j).
Algebra compose_product(const LinearOperator& op, const Algebra& a, std::string label = {});

/// Commutator tensor [x,y] = xy - yx of A.
Algebra commutator_tensor(const Algebra& a, std::string label = {});

}  // namespace nova
