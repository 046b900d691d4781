#include "nova/constructions.hpp"

#include <stdexcept>

namespace nova {

namespace {

Report single_entry(const std::string& name, Verdict v) {
    Report r;
    r.entries.push_back({name, std::move(v)});
    return r;
}

void require_endomorphism(const Algebra& a, const LinearOperator& alpha, const char* who) {
    StructureBundle view = make_bundle(a.dim(), a.field(), std::nullopt, a, alpha, std::nullopt,
                                       std::nullopt);
    Verdict v = check_identity(view, IdentityId::morphism);
    if (!v.holds)
        throw PreconditionError(std::string(who) + ": map is not an endomorphism",
                                single_entry("morphism", std::move(v)));
}

void require_star_alpha(const StructureBundle& b, const char* who) {
    if (!b.star) throw MissingRoleError(std::string(who) + ": bundle has no star product");
    if (!b.alpha) throw MissingRoleError(std::string(who) + ": bundle has no alpha");
}

void require_pass(const Report& rep, const char* who, const char* what) {
    if (!rep.pass())
        throw PreconditionError(std::string(who) + ": input fails " + what, rep);
}

/// Star tensor x . del(y): c'[i][j][k] = sum_l d[l][j] c_dot[i][l][k].
Algebra dot_del_product(const Algebra& dot, const LinearOperator& del, std::string label) {
    Algebra out(dot.dim(), dot.field(), std::move(label));
    for (std::size_t i = 0; i < dot.dim(); ++i)
        for (std::size_t j = 0; j < dot.dim(); ++j) {
            Vec fib = multiply(dot, basis_vec(dot.dim(), i, dot.field()),
                               del.apply(basis_vec(dot.dim(), j, dot.field())));
            for (std::size_t k = 0; k < dot.dim(); ++k) out.c(i, j, k) = fib[k];
        }
    return out;
}

void check_partial_star_maps(const StructureBundle& b, const char* who) {
    Verdict gd = check_identity(
        make_bundle(b.dim, b.field, b.dot, std::nullopt, std::nullopt, b.del, std::nullopt),
        IdentityId::gd2);
    if (!gd.holds)
        throw PreconditionError(std::string(who) + ": del fails del(x.del(y)) = del(x).del(y)",
                                single_entry("gd2", std::move(gd)));
    Verdict cm = check_identity(
        make_bundle(b.dim, b.field, std::nullopt, std::nullopt, b.alpha, b.del, std::nullopt),
        IdentityId::commute_maps);
    if (!cm.holds)
        throw PreconditionError(std::string(who) + ": del and alpha do not commute",
                                single_entry("commute-maps", std::move(cm)));
}

}  // namespace

StructureBundle yau_twist(const Algebra& a, const LinearOperator& alpha) {
    require_endomorphism(a, alpha, "yau_twist");
    Algebra star = compose_product(alpha, a, "twist of " + a.label());
    return make_bundle(a.dim(), a.field(), std::nullopt, std::move(star), alpha, std::nullopt,
                       std::nullopt, a.label().empty() ? "" : "yau twist of " + a.label());
}

StructureBundle power_twist(const Algebra& a, const LinearOperator& alpha, unsigned long long n) {
    require_endomorphism(a, alpha, "power_twist");
    LinearOperator an{alpha.m.power(n), alpha.label + "^" + std::to_string(n)};
    LinearOperator an1{alpha.m.power(n + 1), alpha.label + "^" + std::to_string(n + 1)};
    Algebra star = compose_product(an, a, "");
    return make_bundle(a.dim(), a.field(), std::nullopt, std::move(star), std::move(an1),
                       std::nullopt, std::nullopt);
}

StructureBundle commutator_bracket(const Algebra& a, std::optional<LinearOperator> alpha) {
    Algebra br = commutator_tensor(a, a.label().empty() ? "" : "commutator of " + a.label());
    return make_bundle(a.dim(), a.field(), std::nullopt, std::move(br), std::move(alpha),
                       std::nullopt, std::nullopt);
}

Algebra involutive_untwist(const StructureBundle& b) {
    require_star_alpha(b, "involutive_untwist");
    require_pass(validate(b, Kind::hom_novikov), "involutive_untwist", "hom-novikov");
    Mat sq = b.alpha->m * b.alpha->m;
    Mat id = Mat::identity(b.dim, b.field);
    if (sq != id) {
        for (std::size_t j = 0; j < b.dim; ++j) {
            Vec col = sq.apply(basis_vec(b.dim, j, b.field));
            if (col != basis_vec(b.dim, j, b.field)) {
                Witness w;
                w.tuple = {j};
                w.lhs_vec = col;
                w.rhs_vec = basis_vec(b.dim, j, b.field);
                throw PreconditionError("involutive_untwist: alpha is not an involution",
                                        single_entry("involution", Verdict{false, std::move(w)}));
            }
        }
    }
    return compose_product(*b.alpha, *b.star, "untwist of " + b.label);
}

Algebra alpha_inverse_bracket(const StructureBundle& b) {
    require_star_alpha(b, "alpha_inverse_bracket");
    require_pass(validate(b, Kind::hom_novikov), "alpha_inverse_bracket", "hom-novikov");
    if (b.alpha->m.det().is_zero()) {
        Witness w;
        w.lhs_text = "alpha matrix is singular";
        throw PreconditionError("alpha_inverse_bracket: alpha is not invertible",
                                single_entry("invertible", Verdict{false, std::move(w)}));
    }
    LinearOperator inv{b.alpha->m.inverse(), "alpha^-1"};
    return compose_product(inv, commutator_tensor(*b.star), "");
}

Algebra gd_lambda_product(const Algebra& a, const LinearOperator& d, const Scalar& lambda) {
    if (!(lambda.field() == a.field()))
        throw std::invalid_argument("gd_lambda_product: weight mode differs from algebra field");
    StructureBundle view = make_bundle(a.dim(), a.field(), a, std::nullopt, std::nullopt,
                                       std::nullopt, std::nullopt);
    require_pass(validate(view, Kind::commutative_associative), "gd_lambda_product",
                 "commutative-associative");
    Verdict der = map_properties(a, d).derivation;
    if (!der.holds)
        throw PreconditionError("gd_lambda_product: map is not a derivation",
                                single_entry("derivation", std::move(der)));
    Algebra out = dot_del_product(a, d, "");
    if (!lambda.is_zero())
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) out.c(i, j, k) += lambda * a.c(i, j, k);
    return out;
}

Algebra gd_lambda_product_xu(const Algebra& a, const LinearOperator& d, const Vec& lambda) {
    if (lambda.size() != a.dim())
        throw std::invalid_argument("gd_lambda_product_xu: weight length differs from dimension");
    StructureBundle view = make_bundle(a.dim(), a.field(), a, std::nullopt, std::nullopt,
                                       std::nullopt, std::nullopt);
    require_pass(validate(view, Kind::commutative_associative), "gd_lambda_product_xu",
                 "commutative-associative");
    Verdict der = map_properties(a, d).derivation;
    if (!der.holds)
        throw PreconditionError("gd_lambda_product_xu: map is not a derivation",
                                single_entry("derivation", std::move(der)));
    Algebra out = dot_del_product(a, d, "");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lam_xy = multiply(a, lambda, a.basis_product(i, j));
            for (std::size_t k = 0; k < a.dim(); ++k) out.c(i, j, k) += lam_xy[k];
        }
    return out;
}

StructureBundle partial_star_product(const StructureBundle& b) {
    if (!b.dot) throw MissingRoleError("partial_star_product: bundle has no dot product");
    if (!b.alpha) throw MissingRoleError("partial_star_product: bundle has no alpha");
    if (!b.del) throw MissingRoleError("partial_star_product: bundle has no del");
    require_pass(validate(b, Kind::hom_associative_commutative), "partial_star_product",
                 "hom-associative-commutative");
    check_partial_star_maps(b, "partial_star_product");
    Algebra star = dot_del_product(*b.dot, *b.del, "");
    return make_bundle(b.dim, b.field, b.dot, std::move(star), b.alpha, b.del, std::nullopt,
                       b.label);
}

StructureBundle derivation_np_product(const StructureBundle& b) {
    if (!b.dot) throw MissingRoleError("derivation_np_product: bundle has no dot product");
    if (!b.alpha) throw MissingRoleError("derivation_np_product: bundle has no alpha");
    if (!b.del) throw MissingRoleError("derivation_np_product: bundle has no del");
    require_pass(validate(b, Kind::hom_associative_commutative), "derivation_np_product",
                 "hom-associative-commutative");
    Verdict der = map_properties(*b.dot, *b.del).derivation;
    if (!der.holds)
        throw PreconditionError("derivation_np_product: del is not a derivation of dot",
                                single_entry("derivation", std::move(der)));
    Verdict cm = check_identity(
        make_bundle(b.dim, b.field, std::nullopt, std::nullopt, b.alpha, b.del, std::nullopt),
        IdentityId::commute_maps);
    if (!cm.holds)
        throw PreconditionError("derivation_np_product: del and alpha do not commute",
                                single_entry("commute-maps", std::move(cm)));
    Algebra star = dot_del_product(*b.dot, *b.del, "");
    return make_bundle(b.dim, b.field, b.dot, std::move(star), b.alpha, b.del, std::nullopt,
                       b.label);
}

StructureBundle np_yau_twist(const StructureBundle& b, const LinearOperator& alpha) {
    if (!b.dot || !b.star)
        throw MissingRoleError("np_yau_twist: bundle needs both dot and star products");
    require_pass(validate(b, Kind::novikov_poisson), "np_yau_twist", "novikov-poisson");
    require_endomorphism(*b.dot, alpha, "np_yau_twist (dot)");
    require_endomorphism(*b.star, alpha, "np_yau_twist (star)");
    Algebra dot = compose_product(alpha, *b.dot, "");
    Algebra star = compose_product(alpha, *b.star, "");
    return make_bundle(b.dim, b.field, std::move(dot), std::move(star), alpha, std::nullopt,
                       std::nullopt, b.label.empty() ? "" : "np yau twist of " + b.label);
}

StructureBundle tensor_np(const StructureBundle& b1, const StructureBundle& b2) {
    if (!b1.dot || !b1.star || !b2.dot || !b2.star)
        throw MissingRoleError("tensor_np: both bundles need dot and star products");
    if (!(b1.field == b2.field)) throw std::invalid_argument("tensor_np: field mismatch");
    require_pass(validate(b1, Kind::novikov_poisson), "tensor_np", "novikov-poisson (left)");
    require_pass(validate(b2, Kind::novikov_poisson), "tensor_np", "novikov-poisson (right)");
    std::size_t n1 = b1.dim, n2 = b2.dim;
    if (n1 * n2 > kMaxDim)
        throw std::invalid_argument("tensor_np: output dimension " + std::to_string(n1 * n2) +
                                    " exceeds " + std::to_string(kMaxDim));
    Field f = b1.field;
    auto flat = [n2](std::size_t i1, std::size_t i2) { return i1 * n2 + i2; };
    Algebra dot(n1 * n2, f, "");
    Algebra star(n1 * n2, f, "");
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t j1 = 0; j1 < n1; ++j1)
            for (std::size_t i2 = 0; i2 < n2; ++i2)
                for (std::size_t j2 = 0; j2 < n2; ++j2)
                    for (std::size_t k1 = 0; k1 < n1; ++k1)
                        for (std::size_t k2 = 0; k2 < n2; ++k2) {
                            std::size_t I = flat(i1, i2), J = flat(j1, j2), K = flat(k1, k2);
                            dot.c(I, J, K) =
                                b1.dot->c(i1, j1, k1) * b2.dot->c(i2, j2, k2);
                            star.c(I, J, K) =
                                b1.star->c(i1, j1, k1) * b2.dot->c(i2, j2, k2) +
                                b1.dot->c(i1, j1, k1) * b2.star->c(i2, j2, k2);
                        }
    std::optional<LinearOperator> alpha;
    if (b1.alpha || b2.alpha) {
        Mat m1 = b1.alpha ? b1.alpha->m : Mat::identity(n1, f);
        Mat m2 = b2.alpha ? b2.alpha->m : Mat::identity(n2, f);
        if (b1.alpha) require_endomorphism(*b1.dot, *b1.alpha, "tensor_np (left dot)");
        if (b1.alpha) require_endomorphism(*b1.star, *b1.alpha, "tensor_np (left star)");
        if (b2.alpha) require_endomorphism(*b2.dot, *b2.alpha, "tensor_np (right dot)");
        if (b2.alpha) require_endomorphism(*b2.star, *b2.alpha, "tensor_np (right star)");
        alpha = LinearOperator{m1.kron(m2), "tensor twist"};
    }
    return make_bundle(n1 * n2, f, std::move(dot), std::move(star), std::move(alpha),
                       std::nullopt, std::nullopt);
}

std::optional<Vec> find_unity(const Algebra& a) {
    std::size_t n = a.dim();
    if (n == 0) return Vec{};
    // Unknowns u_0..u_{n-1}; equations u e_i = e_i and e_i u = e_i.
    Mat sys(2 * n * n, n + 1, a.field());
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) sys.at(row, j) = a.c(j, i, k);
            sys.at(row, n) = i == k ? Scalar::one(a.field()) : Scalar::zero(a.field());
            ++row;
            for (std::size_t j = 0; j < n; ++j) sys.at(row, j) = a.c(i, j, k);
            sys.at(row, n) = i == k ? Scalar::one(a.field()) : Scalar::zero(a.field());
            ++row;
        }
    Mat r = sys.rref();
    // Inconsistent iff a pivot appears in the rhs column.
    Vec u = zero_vec(n, a.field());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < n + 1 && r.at(i, lead).is_zero()) ++lead;
        if (lead == n + 1) continue;        // zero row
        if (lead == n) return std::nullopt;  // 0 = nonzero row
        u[lead] = r.at(i, n);
    }
    // Verify: free variables were set to zero, which must still solve.
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = basis_vec(n, i, a.field());
        if (multiply(a, u, ei) != ei || multiply(a, ei, u) != ei) return std::nullopt;
    }
    return u;
}

LinearOperator unity_derivation(const StructureBundle& b) {
    if (!b.dot || !b.star)
        throw MissingRoleError("unity_derivation: bundle needs both dot and star products");
    require_pass(validate(b, Kind::novikov_poisson), "unity_derivation", "novikov-poisson");
    std::optional<Vec> u = find_unity(*b.dot);
    if (!u)
        throw PreconditionError("unity_derivation: dot product has no unity",
                                single_entry("unity", Verdict{false, Witness{}}));
    Vec uu = multiply(*b.star, *u, *u);  // 1 * 1
    Mat m(b.dim, b.dim, b.field);
    for (std::size_t j = 0; j < b.dim; ++j) {
        Vec ej = basis_vec(b.dim, j, b.field);
        Vec col = sub(multiply(*b.star, *u, ej), multiply(*b.dot, uu, ej));
        for (std::size_t i = 0; i < b.dim; ++i) m.at(i, j) = col[i];
    }
    return LinearOperator{std::move(m), "unity derivation"};
}

std::vector<LinearOperator> enumerate_endomorphisms(const Algebra& a) {
    Field f = a.field();
    if (f.is_rational())
        throw std::invalid_argument("enumerate_endomorphisms needs a finite field");
    std::size_t n = a.dim();
    std::size_t cells = n * n;
    double space = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        space *= f.p;
        if (space > 1e6)
            throw std::invalid_argument("enumerate_endomorphisms: search space p^(dim^2) "
                                        "exceeds 10^6");
    }
    std::vector<LinearOperator> out;
    std::vector<std::uint32_t> digits(cells, 0);
    for (;;) {
        Mat m(n, n, f);
        for (std::size_t t = 0; t < cells; ++t)
            m.at(t / n, t % n) = Scalar::residue(f.p, digits[t]);
        LinearOperator op{std::move(m), ""};
        StructureBundle view = make_bundle(n, f, std::nullopt, a, op, std::nullopt, std::nullopt);
        if (check_identity(view, IdentityId::morphism).holds) out.push_back(std::move(op));
        // next matrix in lexicographic (row-major, most significant first) order
        std::size_t pos = cells;
        while (pos > 0) {
            if (++digits[pos - 1] < f.p) break;
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

}  // namespace nova
