#pragma once

#include "nova/algebra.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nova {

/// Closed catalog of multilinear laws the engine can check.  Names follow
/// the CLI/report spelling, e.g. IdentityId::hom_right_commute is
/// "hom-right-commute".
enum class IdentityId {
    right_commute,
    left_symmetry,
    commutativity,
    associativity,
    hom_associativity,
    hom_right_commute,
    hom_left_symmetry,
    skew_symmetry,
    hom_jacobi,
    j1,
    j2,
    np_1,
    np_2,
    hom_np_1,
    hom_np_2,
    morphism,
    derivation,
    gd2,
    commute_maps,
    form_assoc,
    form_lie_invariance,
    form_hom_invariance,
    form_alpha_compat,
    form_symmetry,
};

/// Static description of one catalog entry.
struct IdentityInfo {
    IdentityId id;
    const char* name;      ///< kebab-case tag used in CLI and reports
    const char* equation;  ///< the law in ASCII
    int arity;             ///< number of arguments (1, 2 or 3)
    bool needs_product;    ///< reads one product, resolved by preference
    bool prefer_star;      ///< resolution order when one product is read
    bool needs_both_products;
    bool needs_alpha;
    bool needs_del;
    bool needs_form;      ///< scalar-valued law involving the bilinear form
    bool scalar_valued;   ///< sides evaluate to scalars instead of vectors
};

const IdentityInfo& identity_info(IdentityId id);
const std::vector<IdentityInfo>& identity_catalog();
std::optional<IdentityId> identity_from_name(const std::string& name);

/// Failing instance of a law: the lexicographically smallest basis tuple
/// together with both sides fully expanded.  Vector-valued laws fill
/// lhs_vec/rhs_vec, scalar-valued ones lhs_scalar/rhs_scalar; the sparse
/// family checker fills the text fields instead.
struct Witness {
    std::vector<std::size_t> tuple;
    std::optional<Vec> lhs_vec, rhs_vec;
    std::optional<Scalar> lhs_scalar, rhs_scalar;
    std::optional<std::string> lhs_text, rhs_text;
    std::optional<std::string> role;  ///< product the failure occurred in, when ambiguous

    std::string describe() const;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;  ///< present exactly when holds is false
};

/// Ordered list of named checks with their verdicts.
struct Report {
    struct Entry {
        std::string name;
        Verdict verdict;
    };
    std::vector<Entry> entries;

    bool pass() const;
    const Entry* first_failure() const;
    std::string summary() const;
};

/// A component (product, map or form) required by a check is absent.
struct MissingRoleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction's input fails its contract; carries the failing report.
struct PreconditionError : std::runtime_error {
    Report report;
    PreconditionError(const std::string& msg, Report r);
};

/// Checks the law on every basis tuple of the bundle.  Because each law is
/// multilinear in its arguments, passing on all basis tuples is equivalent
/// to passing on all vectors.  When `morphism` is checked on a bundle with
/// both products, both are required to be preserved (dot first).
Verdict check_identity(const StructureBundle& b, IdentityId id);

/// Re-evaluates the law on `trials` pseudo-random vector tuples drawn from a
/// seeded generator; reproducible for a fixed seed.  Agreement with
/// check_identity in the direction "basis holds => random holds" is exact.
Verdict random_sanity(const StructureBundle& b, IdentityId id, std::size_t trials,
                      std::uint64_t seed);

/// Structure kinds the validator knows.
enum class Kind {
    novikov,
    left_symmetric,
    commutative_associative,
    hom_associative_commutative,
    hom_lie,
    hom_novikov,
    novikov_poisson,
    hom_novikov_poisson,
    quadratic_novikov,
    quadratic_hom_novikov,
    quadratic_hom_lie,
};

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

struct ValidateOptions {
    /// Hom-Novikov (and its quadratic variant) requires the twist map to be
    /// multiplicative.  Turning this off drops that check for callers who
    /// work with non-multiplicative twists; every other law stays on.
    bool require_morphism = true;
};

/// Runs the full check list for the kind and reports each verdict.
/// Single-product kinds accept a bundle holding either product slot;
/// two-product kinds require both.  A zero-dimensional bundle passes
/// every kind vacuously.
Report validate(const StructureBundle& b, Kind kind, const ValidateOptions& opts = {});

/// Classification of a linear map against an algebra.
struct MapProperties {
    Verdict endomorphism;  ///< multiplicative for the product
    Verdict automorphism;  ///< endomorphism with invertible matrix
    Verdict involution;    ///< matrix squares to the identity
    Verdict derivation;    ///< Leibniz rule for the product
};

MapProperties map_properties(const Algebra& a, const LinearOperator& op);

/// Nondegeneracy of a bilinear form via exact determinant; a failing
/// verdict carries a radical vector as witness.
Verdict nondegenerate_verdict(const BilinearForm& form);

}  // namespace nova
