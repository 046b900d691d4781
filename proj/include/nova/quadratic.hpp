#pragma once

#include "nova/algebra.hpp"
#include "nova/identity.hpp"

#include <vector>

namespace nova {

/// Shape facts about a bilinear form, each with a witness on failure.
struct FormProperties {
    Verdict symmetric;
    Verdict skew_symmetric;
    Verdict nondegenerate;
    std::size_t radical_dim = 0;  ///< dim minus rank of the Gram matrix
};

FormProperties form_properties(const BilinearForm& f);

/// Checks a scalar-valued law from the catalog (form-assoc,
/// form-lie-invariance, form-hom-invariance, form-alpha-compat,
/// form-symmetry) on the bundle.  Non-form laws are rejected.
Verdict check_form_identity(const StructureBundle& b, IdentityId id);

/// B_k(x, y) = B(alpha^k(x), y); Gram matrix (m^k)^T b.
BilinearForm twist_form(const BilinearForm& f, const LinearOperator& alpha,
                        unsigned long long k = 1);

enum class HomLieMode {
    /// Commutator bracket of a quadratic hom-Novikov bundle whose twist is
    /// an automorphism compatible with the form; form becomes B(alpha(x), y).
    from_hom_novikov,
    /// Twisted bracket alpha([x,y]) of a quadratic Novikov product with a
    /// compatible automorphism; same form recipe.
    from_novikov_with_automorphism,
};

/// Derives a quadratic hom-Lie bundle (bracket in the star slot, twist map,
/// twisted form) from a quadratic (hom-)Novikov input.  Preconditions are
/// validated eagerly and failures raise PreconditionError with the report.
StructureBundle derive_quadratic_homlie(const StructureBundle& b, HomLieMode mode);

/// For a quadratic hom-Novikov bundle with involutive twist compatible with
/// the form, the untwisted product alpha(x * y) with the unchanged form is
/// quadratic Novikov.
StructureBundle quadratic_novikov_from_involutive(const StructureBundle& b);

/// Two-sided annihilator center {x : x a = a x = 0 for all a}, as the exact
/// nullspace of the stacked left/right multiplication equations, in
/// canonical reduced echelon form.
Subspace center(const Algebra& a);

/// Lower central series of a bracket tensor: G^1 the whole space,
/// G^{i+1} = span{[e_b, v]}.  Stops at the first stabilized or zero term;
/// max_steps bounds the iteration defensively.
std::vector<Subspace> lower_central_series(const Algebra& bracket, std::size_t max_steps = 64);

/// Structure facts behind the nilpotency statement for quadratic
/// hom-Novikov bundles: the derived span of the commutator bracket sits in
/// the center, and the bracket's lower central series dies at step three.
struct NilpotencyReport {
    bool derived_in_center = false;
    bool two_step = false;                ///< G^3 of the bracket vanishes
    std::vector<std::size_t> lcs_dims;    ///< bracket series dimensions
    bool alpha_compat = false;            ///< B(alpha(x), y) = B(x, alpha(y)) held
};

/// Preconditions: validate(quadratic-hom-novikov) passes and alpha is an
/// automorphism.  The form/twist compatibility law is recorded in the
/// result rather than required.
NilpotencyReport nilpotency_report(const StructureBundle& b);

}  // namespace nova
