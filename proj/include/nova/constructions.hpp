#pragma once

#include "nova/algebra.hpp"
#include "nova/identity.hpp"

#include <optional>
#include <vector>

namespace nova {

/// Twists A along a multiplicative map: the output bundle carries the
/// product alpha(x y) together with alpha as the twist map.  Input map must
/// be an endomorphism of A (checked; failure raises PreconditionError with
/// the offending basis pair).
StructureBundle yau_twist(const Algebra& a, const LinearOperator& alpha);

/// Iterated twist: product alpha^n(x y) with twist map alpha^{n+1}.
StructureBundle power_twist(const Algebra& a, const LinearOperator& alpha, unsigned long long n);

/// Commutator bracket [x,y] = xy - yx as the star slot; alpha is carried
/// through unchanged when given.
StructureBundle commutator_bracket(const Algebra& a,
                                   std::optional<LinearOperator> alpha = std::nullopt);

/// Inverse of the Yau twist for an involutive twist map: from a bundle
/// whose (star, alpha) is hom-Novikov with alpha^2 = id, recovers the
/// untwisted product alpha(x * y).
Algebra involutive_untwist(const StructureBundle& b);

/// From a hom-Novikov bundle with invertible alpha, the bracket
/// alpha^{-1}([x,y]) — a Lie bracket (checkable via hom-lie with identity
/// twist).
Algebra alpha_inverse_bracket(const StructureBundle& b);

/// Derivation product x*y = x D(y) + lambda x y on a commutative
/// associative algebra with derivation D; the classical Novikov source.
Algebra gd_lambda_product(const Algebra& a, const LinearOperator& d, const Scalar& lambda);

/// Experimental variant with an algebra element as weight:
/// x*y = x D(y) + lambda.(x y), lambda acting by the given product.
/// Kept out of the validated tower; no structural postcondition is claimed.
Algebra gd_lambda_product_xu(const Algebra& a, const LinearOperator& d, const Vec& lambda);

/// Star product x * y = x . del(y) from a commutative hom-associative dot
/// with maps satisfying del(x . del y) = del(x) . del(y) and
/// del o alpha = alpha o del.  del need not be a derivation.
StructureBundle partial_star_product(const StructureBundle& b);

/// Same product formula under the stronger hypothesis that del is a
/// derivation of dot; output is a full hom-Novikov-Poisson bundle.
StructureBundle derivation_np_product(const StructureBundle& b);

/// Twists both products of a Novikov-Poisson bundle along a map that is an
/// endomorphism of each.
StructureBundle np_yau_twist(const StructureBundle& b, const LinearOperator& alpha);

/// Tensor product of two Novikov-Poisson bundles on the flattened basis
/// e_{i1} (x) e_{i2} |-> index i1*dim2 + i2:
///   dot  = dot1 (x) dot2
///   star = star1 (x) dot2 + dot1 (x) star2
/// Twist maps combine as the Kronecker product; a side without one
/// contributes the identity.
StructureBundle tensor_np(const StructureBundle& b1, const StructureBundle& b2);

/// Two-sided unity of A, if any.
std::optional<Vec> find_unity(const Algebra& a);

/// For a unital Novikov-Poisson bundle, the map del(x) = 1 * x - (1 * 1) . x
/// built from the unity of dot.  It is a derivation of dot and also equals
/// 1 * x - x * 1.
LinearOperator unity_derivation(const StructureBundle& b);

/// All multiplicative linear maps of a GF(p) algebra, by brute force over
/// the p^(dim^2) matrices in lexicographic order.  Guarded: the search
/// space must not exceed 10^6 candidates.
std::vector<LinearOperator> enumerate_endomorphisms(const Algebra& a);

}  // namespace nova
