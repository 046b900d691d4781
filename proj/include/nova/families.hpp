#pragma once

#include "nova/algebra.hpp"
#include "nova/identity.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nova {

/// Basis index of a family element.  For the Laurent-with-odd-part family
/// the basis is t^n (parity 0) and theta t^m (parity 1); for the indexed
/// family it is x_a (parity always 0).  Ordered by (grade, parity).
struct GradedIndex {
    long long grade = 0;
    int parity = 0;
    auto operator<=>(const GradedIndex&) const = default;
};

/// Finitely supported linear combination of family basis elements.
/// Zero-coefficient terms are never stored.
class SparseElement {
public:
    SparseElement() = default;
    static SparseElement basis(GradedIndex g, Field f);

    void add_term(GradedIndex g, const Scalar& v);
    const std::map<GradedIndex, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SparseElement plus(const SparseElement& o) const;
    SparseElement minus(const SparseElement& o) const;
    SparseElement negated() const;
    SparseElement scaled(const Scalar& c) const;

    bool operator==(const SparseElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparseElement& o) const { return !(*this == o); }

private:
    std::map<GradedIndex, Scalar> terms_;
};

/// An input lies outside the domain a family operation is defined on
/// (e.g. a negative power of t under the shift map).
struct FamilyDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Closed-form description of one of the two built-in families.
struct FamilySpec {
    enum class Variant { laurent, indexed };
    Variant variant = Variant::laurent;

    // laurent: shift constant in alpha(t^n) = (t+c)^n
    Scalar c;
    // indexed: x_a x_b = x_{a+b+q}, weights f(a) = s*a, twist base beta
    long long q = 0;
    Scalar s, beta;

    Field field() const;

    static FamilySpec laurent(Scalar c);
    /// s and beta must be nonzero and share a mode.
    static FamilySpec indexed(long long q, Scalar s, Scalar beta);
};

/// Products a family defines.  laurent: dot (Laurent product with the odd
/// square-zero part), star1 = x del(y), bullet = alpha(x y),
/// star2 = x bullet del(y).  indexed: dot56 (index shift), star (weighted
/// shift), bullet = alpha(x dot56 y), star2 = x bullet del(y).
enum class FamilyProduct { dot, bullet, star1, star2, star, dot56 };

/// Maps a family defines.  laurent: del (projection onto the even part),
/// alpha (t |-> t+c).  indexed: del (weighted diagonal), del2 (the same map
/// reconstructed from star commutators with the unity index), alpha
/// (diagonal powers of beta).
enum class FamilyMap { del, del2, alpha };

const char* family_product_name(FamilyProduct p);
const char* family_map_name(FamilyMap m);
std::optional<FamilyProduct> family_product_from_name(const std::string& n);
std::optional<FamilyMap> family_map_from_name(const std::string& n);

/// Bilinear extension of the closed-form basis rules; exact, never clipped.
SparseElement family_product(const FamilySpec& spec, FamilyProduct p, const SparseElement& x,
                             const SparseElement& y);

/// Linear extension of the closed-form map rules.
SparseElement family_map(const FamilySpec& spec, FamilyMap m, const SparseElement& x);

/// Human-readable basis label: "t^3", "theta*t^-2", "x_5".
std::string family_basis_label(const FamilySpec& spec, GradedIndex g);
std::string family_element_str(const FamilySpec& spec, const SparseElement& e);

struct GradeWindow {
    long long lo = 0, hi = 0;
};

/// Names which family product plays each engine role during a window check.
struct FamilyBinding {
    std::optional<FamilyProduct> dot, star;
    std::optional<FamilyMap> alpha, del;
};

/// Checks a catalog law on every basis tuple whose inputs lie in the
/// window.  Products are evaluated exactly in the full family, so outputs
/// may leave the window; nothing is truncated.  Form laws are not
/// available for families.
Verdict window_verify(const FamilySpec& spec, IdentityId id, const FamilyBinding& binding,
                      GradeWindow window);

/// One named check of a demo suite: a law plus the role binding it runs
/// under.  Entries like "morphism:dot" record which product the law reads.
struct SuiteCheck {
    std::string name;
    IdentityId id;
    FamilyBinding binding;
};

/// Built-in window-check suites.  laurent: "star1-novikov",
/// "hom-novikov-star2", "gd2", "derivation".  indexed: "np", "hom-np".
/// Unknown suite names throw std::invalid_argument.
std::vector<SuiteCheck> family_suite(FamilySpec::Variant v, const std::string& suite);
std::vector<std::string> family_suite_names(FamilySpec::Variant v);

/// Finite structure-constant snapshot of a family window.
struct EmbeddedWindow {
    StructureBundle bundle;
    std::vector<GradedIndex> basis;  ///< bundle index -> family index
    bool quotient = false;
    std::string ideal;  ///< description of the truncation ideal, if any
};

/// Builds dense components from the window basis.  Without quotient, every
/// product term and map image must stay inside the window.  With quotient,
/// grade-additive products may send terms above the cap, which are mapped
/// to zero — the cap span is then a genuine ideal (requires lo plus the
/// family's grade shift to be nonnegative).  Products that spread one basis
/// pair over several grades cannot be truncated soundly and are rejected.
EmbeddedWindow embed_window(const FamilySpec& spec, const FamilyBinding& request,
                            GradeWindow window, bool quotient = false);

}  // namespace nova
