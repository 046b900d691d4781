#include "nova/algebra.hpp"

#include <stdexcept>

namespace nova {

Algebra::Algebra(std::size_t dim, Field f, std::string label)
    : dim_(dim), field_(f), label_(std::move(label)) {
    if (dim > kMaxDim)
        throw std::invalid_argument("dimension overflow: " + std::to_string(dim) + " > " +
                                    std::to_string(kMaxDim));
    c_.assign(dim * dim * dim, Scalar::zero(f));
}

void Algebra::check_index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_)
        throw std::out_of_range("tensor index (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ") out of range for dim " +
                                std::to_string(dim_));
}

Scalar& Algebra::c(std::size_t i, std::size_t j, std::size_t k) {
    check_index(i, j, k);
    return c_[(i * dim_ + j) * dim_ + k];
}

const Scalar& Algebra::c(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i, j, k);
    return c_[(i * dim_ + j) * dim_ + k];
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
    check_index(i, j, 0);
    Vec v = zero_vec(dim_, field_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c_[(i * dim_ + j) * dim_ + k];
    return v;
}

bool Algebra::operator==(const Algebra& o) const {
    if (dim_ != o.dim_ || !(field_ == o.field_)) return false;
    for (std::size_t t = 0; t < c_.size(); ++t)
        if (c_[t] != o.c_[t]) return false;
    return true;
}

Algebra make_algebra(std::size_t dim, const std::vector<TensorEntry>& entries, Field f,
                     std::string label) {
    Algebra a(dim, f, std::move(label));
    std::vector<bool> seen(dim * dim * dim, false);
    for (const TensorEntry& e : entries) {
        if (e.i >= dim || e.j >= dim || e.k >= dim)
            throw std::out_of_range("tensor entry (" + std::to_string(e.i) + "," +
                                    std::to_string(e.j) + "," + std::to_string(e.k) +
                                    ") out of range for dim " + std::to_string(dim));
        std::size_t flat = (e.i * dim + e.j) * dim + e.k;
        if (seen[flat])
            throw std::invalid_argument("duplicate tensor entry at (" + std::to_string(e.i) +
                                        "," + std::to_string(e.j) + "," + std::to_string(e.k) +
                                        ")");
        seen[flat] = true;
        if (!(e.value.field() == f))
            throw std::invalid_argument("tensor entry mode " + e.value.field().name() +
                                        " differs from algebra field " + f.name());
        a.c(e.i, e.j, e.k) = e.value;
    }
    return a;
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
    if (x.size() != a.dim() || y.size() != a.dim())
        throw std::invalid_argument("product operand length differs from algebra dimension");
    Vec r = zero_vec(a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Scalar& ck = a.c(i, j, k);
                if (!ck.is_zero()) r[k] += w * ck;
            }
        }
    }
    return r;
}

Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return sub(multiply(a, multiply(a, x, y), z), multiply(a, x, multiply(a, y, z)));
}

LinearOperator LinearOperator::identity(std::size_t n, Field f, std::string label) {
    return LinearOperator{Mat::identity(n, f), std::move(label)};
}

Scalar BilinearForm::eval(const Vec& x, const Vec& y) const {
    if (x.size() != b.rows() || y.size() != b.cols())
        throw std::invalid_argument("form operand length differs from form dimension");
    Scalar r = Scalar::zero(b.field());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!y[j].is_zero() && !b.at(i, j).is_zero()) r += x[i] * y[j] * b.at(i, j);
    }
    return r;
}

StructureBundle make_bundle(std::size_t dim, Field f, std::optional<Algebra> dot,
                            std::optional<Algebra> star, std::optional<LinearOperator> alpha,
                            std::optional<LinearOperator> del, std::optional<BilinearForm> form,
                            std::string label) {
    StructureBundle b;
    b.dim = dim;
    b.field = f;
    auto check_dim = [&](std::size_t got, const char* what) {
        if (got != dim)
            throw std::invalid_argument(std::string(what) + " dimension " + std::to_string(got) +
                                        " differs from bundle dimension " + std::to_string(dim));
    };
    if (dot) {
        check_dim(dot->dim(), "dot product");
        if (!(dot->field() == f)) throw std::invalid_argument("dot product field mismatch");
    }
    if (star) {
        check_dim(star->dim(), "star product");
        if (!(star->field() == f)) throw std::invalid_argument("star product field mismatch");
    }
    if (alpha) {
        if (alpha->m.rows() != alpha->m.cols()) throw std::invalid_argument("alpha not square");
        check_dim(alpha->dim(), "alpha");
        if (!(alpha->m.field() == f)) throw std::invalid_argument("alpha field mismatch");
    }
    if (del) {
        if (del->m.rows() != del->m.cols()) throw std::invalid_argument("del not square");
        check_dim(del->dim(), "del");
        if (!(del->m.field() == f)) throw std::invalid_argument("del field mismatch");
    }
    if (form) {
        if (form->b.rows() != form->b.cols()) throw std::invalid_argument("form not square");
        check_dim(form->dim(), "form");
        if (!(form->b.field() == f)) throw std::invalid_argument("form field mismatch");
    }
    b.dot = std::move(dot);
    b.star = std::move(star);
    b.alpha = std::move(alpha);
    b.del = std::move(del);
    b.form = std::move(form);
    b.label = std::move(label);
    return b;
}

Algebra compose_product(const LinearOperator& op, const Algebra& a, std::string label) {
    if (op.dim() != a.dim() || op.m.cols() != a.dim())
        throw std::invalid_argument("operator/algebra dimension mismatch");
    Algebra out(a.dim(), a.field(), std::move(label));
    // c'[i][j][.] = m * c[i][j][.]
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec fib = op.m.apply(a.basis_product(i, j));
            for (std::size_t k = 0; k < a.dim(); ++k) out.c(i, j, k) = fib[k];
        }
    return out;
}

Algebra commutator_tensor(const Algebra& a, std::string label) {
    Algebra out(a.dim(), a.field(), std::move(label));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                out.c(i, j, k) = a.c(i, j, k) - a.c(j, i, k);
    return out;
}

}  // namespace nova
