#include "nova/quadratic.hpp"

#include "nova/constructions.hpp"

#include <stdexcept>

namespace nova {

namespace {

Report single_entry(const std::string& name, Verdict v) {
    Report r;
    r.entries.push_back({name, std::move(v)});
    return r;
}

void require_quadratic_roles(const StructureBundle& b, const char* who) {
    if (!b.star && !b.dot) throw MissingRoleError(std::string(who) + ": bundle has no product");
    if (!b.alpha) throw MissingRoleError(std::string(who) + ": bundle has no alpha");
    if (!b.form) throw MissingRoleError(std::string(who) + ": bundle has no form");
}

void require_automorphism(const StructureBundle& b, const char* who) {
    // Multiplicativity is already part of the quadratic validation; the
    // extra content of "automorphism" is invertibility.
    if (b.alpha->m.det().is_zero()) {
        Witness w;
        w.lhs_text = "alpha matrix is singular";
        throw PreconditionError(std::string(who) + ": alpha is not an automorphism",
                                single_entry("invertible", Verdict{false, std::move(w)}));
    }
}

void require_alpha_compat(const StructureBundle& b, const char* who) {
    Verdict v = check_identity(b, IdentityId::form_alpha_compat);
    if (!v.holds)
        throw PreconditionError(std::string(who) +
                                    ": form and alpha fail B(alpha(x),y) = B(x,alpha(y))",
                                single_entry("form-alpha-compat", std::move(v)));
}

const Algebra& star_product(const StructureBundle& b, const char* who) {
    if (b.star) return *b.star;
    if (b.dot) return *b.dot;
    throw MissingRoleError(std::string(who) + ": bundle has no product");
}

}  // namespace

FormProperties form_properties(const BilinearForm& f) {
    FormProperties p;
    std::size_t n = f.dim();
    for (std::size_t i = 0; i < n && p.symmetric.holds; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f.b.at(i, j) != f.b.at(j, i)) {
                Witness w;
                w.tuple = {i, j};
                w.lhs_scalar = f.b.at(i, j);
                w.rhs_scalar = f.b.at(j, i);
                p.symmetric = Verdict{false, std::move(w)};
                break;
            }
    for (std::size_t i = 0; i < n && p.skew_symmetric.holds; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f.b.at(i, j) != -f.b.at(j, i)) {
                Witness w;
                w.tuple = {i, j};
                w.lhs_scalar = f.b.at(i, j);
                w.rhs_scalar = -f.b.at(j, i);
                p.skew_symmetric = Verdict{false, std::move(w)};
                break;
            }
    p.nondegenerate = nondegenerate_verdict(f);
    p.radical_dim = n - f.b.rank();
    return p;
}

Verdict check_form_identity(const StructureBundle& b, IdentityId id) {
    if (!identity_info(id).needs_form)
        throw std::invalid_argument(std::string("check_form_identity: '") +
                                    identity_info(id).name + "' is not a form law");
    return check_identity(b, id);
}

BilinearForm twist_form(const BilinearForm& f, const LinearOperator& alpha,
                        unsigned long long k) {
    if (alpha.dim() != f.dim())
        throw std::invalid_argument("twist_form: operator/form dimension mismatch");
    Mat mk = alpha.m.power(k);
    return BilinearForm{mk.transpose() * f.b, f.label.empty() ? "" : f.label + "_twisted"};
}

StructureBundle derive_quadratic_homlie(const StructureBundle& b, HomLieMode mode) {
    require_quadratic_roles(b, "derive_quadratic_homlie");
    const Algebra& star = star_product(b, "derive_quadratic_homlie");
    if (mode == HomLieMode::from_hom_novikov) {
        {
            Report rep = validate(b, Kind::quadratic_hom_novikov);
            if (!rep.pass())
                throw PreconditionError(
                    "derive_quadratic_homlie: input fails quadratic-hom-novikov", rep);
        }
        require_automorphism(b, "derive_quadratic_homlie");
        require_alpha_compat(b, "derive_quadratic_homlie");
        Algebra bracket = commutator_tensor(star);
        BilinearForm tf = twist_form(*b.form, *b.alpha, 1);
        return make_bundle(b.dim, b.field, std::nullopt, std::move(bracket), b.alpha,
                           std::nullopt, std::move(tf));
    }
    // from_novikov_with_automorphism: the untwisted structure must be
    // quadratic Novikov; alpha only enters through the derived bracket.
    {
        StructureBundle plain = make_bundle(b.dim, b.field, std::nullopt, star, std::nullopt,
                                            std::nullopt, b.form);
        Report rep = validate(plain, Kind::quadratic_novikov);
        if (!rep.pass())
            throw PreconditionError("derive_quadratic_homlie: input fails quadratic-novikov",
                                    rep);
    }
    {
        Verdict endo = map_properties(star, *b.alpha).endomorphism;
        if (!endo.holds)
            throw PreconditionError("derive_quadratic_homlie: alpha is not an endomorphism",
                                    single_entry("morphism", std::move(endo)));
    }
    require_automorphism(b, "derive_quadratic_homlie");
    require_alpha_compat(b, "derive_quadratic_homlie");
    Algebra bracket = compose_product(*b.alpha, commutator_tensor(star));
    BilinearForm tf = twist_form(*b.form, *b.alpha, 1);
    return make_bundle(b.dim, b.field, std::nullopt, std::move(bracket), b.alpha, std::nullopt,
                       std::move(tf));
}

StructureBundle quadratic_novikov_from_involutive(const StructureBundle& b) {
    require_quadratic_roles(b, "quadratic_novikov_from_involutive");
    const Algebra& star = star_product(b, "quadratic_novikov_from_involutive");
    {
        Report rep = validate(b, Kind::quadratic_hom_novikov);
        if (!rep.pass())
            throw PreconditionError(
                "quadratic_novikov_from_involutive: input fails quadratic-hom-novikov", rep);
    }
    Mat sq = b.alpha->m * b.alpha->m;
    if (sq != Mat::identity(b.dim, b.field)) {
        Witness w;
        w.lhs_text = "alpha^2 differs from the identity";
        throw PreconditionError("quadratic_novikov_from_involutive: alpha is not an involution",
                                single_entry("involution", Verdict{false, std::move(w)}));
    }
    require_alpha_compat(b, "quadratic_novikov_from_involutive");
    Algebra untwisted = compose_product(*b.alpha, star);
    return make_bundle(b.dim, b.field, std::nullopt, std::move(untwisted), std::nullopt,
                       std::nullopt, b.form);
}

Subspace center(const Algebra& a) {
    std::size_t n = a.dim();
    Mat sys(2 * n * n, n, a.field());
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) sys.at(row, j) = a.c(j, i, k);  // x e_i = 0
            ++row;
            for (std::size_t j = 0; j < n; ++j) sys.at(row, j) = a.c(i, j, k);  // e_i x = 0
            ++row;
        }
    return Subspace(n, sys.nullspace(), a.field());
}

std::vector<Subspace> lower_central_series(const Algebra& bracket, std::size_t max_steps) {
    std::size_t n = bracket.dim();
    std::vector<Vec> full;
    for (std::size_t i = 0; i < n; ++i) full.push_back(basis_vec(n, i, bracket.field()));
    std::vector<Subspace> series;
    series.emplace_back(n, full, bracket.field());
    while (series.size() < max_steps) {
        const Subspace& prev = series.back();
        if (prev.dim() == 0) break;
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < n; ++i) {
            Vec ei = basis_vec(n, i, bracket.field());
            for (const Vec& v : prev.basis()) gens.push_back(multiply(bracket, ei, v));
        }
        Subspace next(n, gens, bracket.field());
        bool stable = next == prev;
        series.push_back(std::move(next));
        if (stable) break;
    }
    return series;
}

NilpotencyReport nilpotency_report(const StructureBundle& b) {
    require_quadratic_roles(b, "nilpotency_report");
    {
        Report rep = validate(b, Kind::quadratic_hom_novikov);
        if (!rep.pass())
            throw PreconditionError("nilpotency_report: input fails quadratic-hom-novikov", rep);
    }
    require_automorphism(b, "nilpotency_report");
    const Algebra& star = star_product(b, "nilpotency_report");

    NilpotencyReport out;
    out.alpha_compat = check_identity(b, IdentityId::form_alpha_compat).holds;

    Algebra bracket = commutator_tensor(star);
    Subspace z = center(star);
    std::vector<Subspace> series = lower_central_series(bracket);
    for (const Subspace& s : series) out.lcs_dims.push_back(s.dim());
    out.derived_in_center = series.size() < 2 ? true : z.contains(series[1]);
    out.two_step = series.back().dim() == 0 && series.size() <= 3;
    return out;
}

}  // namespace nova
