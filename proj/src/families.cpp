#include "nova/families.hpp"

#include "nova/identity_eval.hpp"

#include <stdexcept>

namespace nova {

namespace {

Scalar scalar_from_bigint(const BigInt& v, Field f) {
    if (f.is_rational()) return Scalar::rational(BigRat(v));
    BigInt m = v % f.p;
    if (m < 0) m += f.p;
    return Scalar::residue(f.p, m.convert_to<long long>());
}

BigInt binomial(long long n, long long k) {
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

/// (t+c)^n expanded exactly; n must be nonnegative.
SparseElement shift_power(const FamilySpec& spec, long long n) {
    if (n < 0)
        throw FamilyDomainError("shift map undefined on t^" + std::to_string(n) +
                                " (negative grade)");
    SparseElement out;
    Field f = spec.field();
    for (long long k = 0; k <= n; ++k)
        out.add_term({k, 0}, scalar_from_bigint(binomial(n, k), f) * spec.c.pow(n - k));
    return out;
}

void require_laurent(const FamilySpec& spec, const char* what) {
    if (spec.variant != FamilySpec::Variant::laurent)
        throw std::invalid_argument(std::string(what) + " belongs to the laurent family");
}

void require_indexed(const FamilySpec& spec, const char* what) {
    if (spec.variant != FamilySpec::Variant::indexed)
        throw std::invalid_argument(std::string(what) + " belongs to the indexed family");
}

void require_even(const GradedIndex& g) {
    if (g.parity != 0)
        throw std::invalid_argument("indexed family basis has no odd part");
}

/// The laurent shift-based operations are only defined when every even
/// term has nonnegative grade.
void require_shiftable(const SparseElement& x, const char* what) {
    for (const auto& [g, v] : x.terms())
        if (g.parity == 0 && g.grade < 0)
            throw FamilyDomainError(std::string(what) + " undefined on t^" +
                                    std::to_string(g.grade) + " (negative grade)");
}

SparseElement laurent_basis_product(const FamilySpec& spec, FamilyProduct p, GradedIndex a,
                                    GradedIndex b) {
    SparseElement out;
    Field f = spec.field();
    switch (p) {
        case FamilyProduct::dot:
            if (a.parity && b.parity) return out;  // theta^2 = 0
            out.add_term({a.grade + b.grade, a.parity + b.parity}, Scalar::one(f));
            return out;
        case FamilyProduct::star1:
            // x del(y): del keeps only the even part of y
            if (b.parity) return out;
            out.add_term({a.grade + b.grade, a.parity}, Scalar::one(f));
            return out;
        case FamilyProduct::bullet:
            // alpha(x y): alpha kills the odd part
            if (a.parity || b.parity) return out;
            return shift_power(spec, a.grade + b.grade);
        case FamilyProduct::star2:
            // x bullet del(y)
            if (a.parity || b.parity) return out;
            return shift_power(spec, a.grade + b.grade);
        default:
            require_laurent(spec, family_product_name(p));  // throws
            return out;
    }
}

SparseElement indexed_basis_product(const FamilySpec& spec, FamilyProduct p, GradedIndex a,
                                    GradedIndex b) {
    require_even(a);
    require_even(b);
    SparseElement out;
    Field f = spec.field();
    long long g = a.grade + b.grade + spec.q;
    Scalar weight = Scalar::one(f);
    switch (p) {
        case FamilyProduct::dot56:
            break;
        case FamilyProduct::star:
            weight = spec.s * Scalar::from_int(b.grade + spec.q, f);
            break;
        case FamilyProduct::bullet:
            weight = spec.beta.pow(a.grade + b.grade + 2 * spec.q);
            break;
        case FamilyProduct::star2:
            weight = spec.beta.pow(a.grade + b.grade + 2 * spec.q) * spec.s *
                     Scalar::from_int(b.grade + spec.q, f);
            break;
        default:
            require_indexed(spec, family_product_name(p));  // throws
            return out;
    }
    out.add_term({g, 0}, weight);
    return out;
}

}  // namespace

SparseElement SparseElement::basis(GradedIndex g, Field f) {
    SparseElement e;
    e.add_term(g, Scalar::one(f));
    return e;
}

void SparseElement::add_term(GradedIndex g, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SparseElement SparseElement::plus(const SparseElement& o) const {
    SparseElement r = *this;
    for (const auto& [g, v] : o.terms_) r.add_term(g, v);
    return r;
}

SparseElement SparseElement::minus(const SparseElement& o) const {
    SparseElement r = *this;
    for (const auto& [g, v] : o.terms_) r.add_term(g, -v);
    return r;
}

SparseElement SparseElement::negated() const {
    SparseElement r;
    for (const auto& [g, v] : terms_) r.add_term(g, -v);
    return r;
}

SparseElement SparseElement::scaled(const Scalar& c) const {
    SparseElement r;
    for (const auto& [g, v] : terms_) r.add_term(g, v * c);
    return r;
}

Field FamilySpec::field() const {
    return variant == Variant::laurent ? c.field() : s.field();
}

FamilySpec FamilySpec::laurent(Scalar c) {
    FamilySpec f;
    f.variant = Variant::laurent;
    f.c = std::move(c);
    // the unused indexed parameters stay in the same mode for consistency
    f.s = Scalar::one(f.c.field());
    f.beta = Scalar::one(f.c.field());
    return f;
}

FamilySpec FamilySpec::indexed(long long q, Scalar s, Scalar beta) {
    if (s.is_zero()) throw std::invalid_argument("indexed family weight s must be nonzero");
    if (beta.is_zero()) throw std::invalid_argument("indexed family base beta must be nonzero");
    if (!s.same_mode(beta)) throw std::invalid_argument("indexed family parameter mode mismatch");
    FamilySpec f;
    f.variant = Variant::indexed;
    f.q = q;
    f.s = std::move(s);
    f.beta = std::move(beta);
    f.c = Scalar::zero(f.s.field());
    return f;
}

const char* family_product_name(FamilyProduct p) {
    switch (p) {
        case FamilyProduct::dot: return "dot";
        case FamilyProduct::bullet: return "bullet";
        case FamilyProduct::star1: return "star1";
        case FamilyProduct::star2: return "star2";
        case FamilyProduct::star: return "star";
        case FamilyProduct::dot56: return "dot56";
    }
    return "?";
}

const char* family_map_name(FamilyMap m) {
    switch (m) {
        case FamilyMap::del: return "del";
        case FamilyMap::del2: return "del2";
        case FamilyMap::alpha: return "alpha";
    }
    return "?";
}

std::optional<FamilyProduct> family_product_from_name(const std::string& n) {
    for (FamilyProduct p : {FamilyProduct::dot, FamilyProduct::bullet, FamilyProduct::star1,
                            FamilyProduct::star2, FamilyProduct::star, FamilyProduct::dot56})
        if (n == family_product_name(p)) return p;
    return std::nullopt;
}

std::optional<FamilyMap> family_map_from_name(const std::string& n) {
    for (FamilyMap m : {FamilyMap::del, FamilyMap::del2, FamilyMap::alpha})
        if (n == family_map_name(m)) return m;
    return std::nullopt;
}

SparseElement family_product(const FamilySpec& spec, FamilyProduct p, const SparseElement& x,
                             const SparseElement& y) {
    bool laurent = spec.variant == FamilySpec::Variant::laurent;
    if (laurent && (p == FamilyProduct::star || p == FamilyProduct::dot56))
        throw std::invalid_argument(std::string(family_product_name(p)) +
                                    " belongs to the indexed family");
    if (!laurent && (p == FamilyProduct::dot || p == FamilyProduct::star1))
        throw std::invalid_argument(std::string(family_product_name(p)) +
                                    " belongs to the laurent family");
    if (laurent && (p == FamilyProduct::bullet || p == FamilyProduct::star2)) {
        require_shiftable(x, family_product_name(p));
        require_shiftable(y, family_product_name(p));
    }
    SparseElement out;
    for (const auto& [ga, va] : x.terms())
        for (const auto& [gb, vb] : y.terms()) {
            SparseElement base = laurent ? laurent_basis_product(spec, p, ga, gb)
                                         : indexed_basis_product(spec, p, ga, gb);
            for (const auto& [g, v] : base.terms()) out.add_term(g, va * vb * v);
        }
    return out;
}

SparseElement family_map(const FamilySpec& spec, FamilyMap m, const SparseElement& x) {
    SparseElement out;
    Field f = spec.field();
    if (spec.variant == FamilySpec::Variant::laurent) {
        switch (m) {
            case FamilyMap::del:
                for (const auto& [g, v] : x.terms())
                    if (g.parity == 0) out.add_term(g, v);
                return out;
            case FamilyMap::alpha: {
                require_shiftable(x, "alpha");
                for (const auto& [g, v] : x.terms()) {
                    if (g.parity != 0) continue;  // alpha kills the odd part
                    SparseElement img = shift_power(spec, g.grade);
                    for (const auto& [h, w] : img.terms()) out.add_term(h, v * w);
                }
                return out;
            }
            case FamilyMap::del2:
                throw std::invalid_argument("del2 belongs to the indexed family");
        }
    }
    switch (m) {
        case FamilyMap::del:
            for (const auto& [g, v] : x.terms()) {
                require_even(g);
                out.add_term(g, v * spec.s * Scalar::from_int(g.grade + spec.q, f));
            }
            return out;
        case FamilyMap::del2: {
            // The same weighted diagonal, reconstructed through the star
            // product around the unity index -q: x_{-q} * x - x * x_{-q}.
            SparseElement unity = SparseElement::basis({-spec.q, 0}, f);
            return family_product(spec, FamilyProduct::star, unity, x)
                .minus(family_product(spec, FamilyProduct::star, x, unity));
        }
        case FamilyMap::alpha:
            for (const auto& [g, v] : x.terms()) {
                require_even(g);
                out.add_term(g, v * spec.beta.pow(g.grade + spec.q));
            }
            return out;
    }
    return out;
}

std::string family_basis_label(const FamilySpec& spec, GradedIndex g) {
    if (spec.variant == FamilySpec::Variant::indexed)
        return "x_" + std::to_string(g.grade);
    std::string t = "t^" + std::to_string(g.grade);
    return g.parity ? "theta*" + t : t;
}

std::string family_element_str(const FamilySpec& spec, const SparseElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [g, v] : e.terms()) {
        if (!out.empty()) out += " + ";
        out += v.str() + "*" + family_basis_label(spec, g);
    }
    return out;
}

namespace {

std::vector<GradedIndex> window_basis(const FamilySpec& spec, GradeWindow w) {
    if (w.lo > w.hi) throw std::invalid_argument("window lo exceeds hi");
    std::vector<GradedIndex> basis;
    for (long long g = w.lo; g <= w.hi; ++g) {
        basis.push_back({g, 0});
        if (spec.variant == FamilySpec::Variant::laurent) basis.push_back({g, 1});
    }
    return basis;
}

/// Evaluation context over sparse family elements.
struct FamilyCtx {
    using Element = SparseElement;
    const FamilySpec* spec;
    std::optional<FamilyProduct> prim_, dot_, star_;
    std::optional<FamilyMap> alpha_, del_;

    Element add(const Element& a, const Element& b) const { return a.plus(b); }
    Element sub(const Element& a, const Element& b) const { return a.minus(b); }
    Element neg(const Element& a) const { return a.negated(); }
    Element zero() const { return SparseElement{}; }
    Element prim(const Element& a, const Element& b) const {
        return family_product(*spec, *prim_, a, b);
    }
    Element dotp(const Element& a, const Element& b) const {
        return family_product(*spec, *dot_, a, b);
    }
    Element starp(const Element& a, const Element& b) const {
        return family_product(*spec, *star_, a, b);
    }
    Element alpha(const Element& a) const { return family_map(*spec, *alpha_, a); }
    Element del(const Element& a) const { return family_map(*spec, *del_, a); }
    Scalar form(const Element&, const Element&) const {
        throw MissingRoleError("families define no bilinear form");
    }
};

FamilyCtx make_family_ctx(const FamilySpec& spec, IdentityId id, const FamilyBinding& binding) {
    const IdentityInfo& info = identity_info(id);
    FamilyCtx ctx{&spec, {}, {}, {}, {}, {}};
    if (info.needs_form) throw MissingRoleError("families define no bilinear form");
    if (info.needs_product) {
        ctx.prim_ = info.prefer_star ? (binding.star ? binding.star : binding.dot)
                                     : (binding.dot ? binding.dot : binding.star);
        if (!ctx.prim_)
            throw MissingRoleError(std::string("check '") + info.name +
                                   "' needs a bound product");
        ctx.star_ = ctx.prim_;  // jacobi-style sums read the star slot
    }
    if (info.needs_both_products) {
        if (!binding.dot || !binding.star)
            throw MissingRoleError(std::string("check '") + info.name +
                                   "' needs both dot and star bindings");
        ctx.dot_ = binding.dot;
        ctx.star_ = binding.star;
    }
    if (info.needs_alpha) {
        if (!binding.alpha)
            throw MissingRoleError(std::string("check '") + info.name + "' needs alpha");
        ctx.alpha_ = binding.alpha;
    }
    if (info.needs_del) {
        if (!binding.del)
            throw MissingRoleError(std::string("check '") + info.name + "' needs del");
        ctx.del_ = binding.del;
    }
    return ctx;
}

}  // namespace

Verdict window_verify(const FamilySpec& spec, IdentityId id, const FamilyBinding& binding,
                      GradeWindow window) {
    const IdentityInfo& info = identity_info(id);
    FamilyCtx ctx = make_family_ctx(spec, id, binding);
    std::vector<GradedIndex> basis = window_basis(spec, window);
    Field f = spec.field();
    std::size_t n = basis.size();
    std::vector<std::size_t> t(static_cast<std::size_t>(info.arity), 0);
    for (;;) {
        std::vector<SparseElement> args;
        for (std::size_t idx : t) args.push_back(SparseElement::basis(basis[idx], f));
        Sides<SparseElement> s = eval_identity_sides(ctx, id, args);
        if (*s.lhs != *s.rhs) {
            Witness w;
            w.tuple = t;
            w.lhs_text = family_element_str(spec, *s.lhs);
            w.rhs_text = family_element_str(spec, *s.rhs);
            return Verdict{false, std::move(w)};
        }
        std::size_t pos = t.size();
        while (pos > 0) {
            if (++t[pos - 1] < n) break;
            t[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return Verdict{};
}

std::vector<SuiteCheck> family_suite(FamilySpec::Variant v, const std::string& suite) {
    using P = FamilyProduct;
    using M = FamilyMap;
    auto bind = [](std::optional<P> dot, std::optional<P> star, std::optional<M> alpha = {},
                   std::optional<M> del = {}) {
        return FamilyBinding{dot, star, alpha, del};
    };
    if (v == FamilySpec::Variant::laurent) {
        if (suite == "star1-novikov")
            return {{"right-commute", IdentityId::right_commute, bind({}, P::star1)},
                    {"left-symmetry", IdentityId::left_symmetry, bind({}, P::star1)}};
        if (suite == "hom-novikov-star2")
            return {{"morphism", IdentityId::morphism, bind({}, P::star2, M::alpha)},
                    {"hom-right-commute", IdentityId::hom_right_commute,
                     bind({}, P::star2, M::alpha)},
                    {"hom-left-symmetry", IdentityId::hom_left_symmetry,
                     bind({}, P::star2, M::alpha)}};
        if (suite == "gd2")
            return {{"gd2", IdentityId::gd2, bind(P::dot, {}, {}, M::del)},
                    {"commute-maps", IdentityId::commute_maps, bind({}, {}, M::alpha, M::del)}};
        if (suite == "derivation")
            return {{"derivation", IdentityId::derivation, bind(P::dot, {}, {}, M::del)}};
    } else {
        if (suite == "np")
            return {{"commutativity", IdentityId::commutativity, bind(P::dot56, {})},
                    {"associativity", IdentityId::associativity, bind(P::dot56, {})},
                    {"right-commute", IdentityId::right_commute, bind({}, P::star)},
                    {"left-symmetry", IdentityId::left_symmetry, bind({}, P::star)},
                    {"np-1", IdentityId::np_1, bind(P::dot56, P::star)},
                    {"np-2", IdentityId::np_2, bind(P::dot56, P::star)}};
        if (suite == "hom-np")
            return {{"morphism:dot", IdentityId::morphism, bind({}, P::bullet, M::alpha)},
                    {"morphism:star", IdentityId::morphism, bind({}, P::star2, M::alpha)},
                    {"commutativity", IdentityId::commutativity, bind(P::bullet, {})},
                    {"hom-associativity", IdentityId::hom_associativity,
                     bind(P::bullet, {}, M::alpha)},
                    {"hom-right-commute", IdentityId::hom_right_commute,
                     bind({}, P::star2, M::alpha)},
                    {"hom-left-symmetry", IdentityId::hom_left_symmetry,
                     bind({}, P::star2, M::alpha)},
                    {"hom-np-1", IdentityId::hom_np_1, bind(P::bullet, P::star2, M::alpha)},
                    {"hom-np-2", IdentityId::hom_np_2, bind(P::bullet, P::star2, M::alpha)}};
    }
    throw std::invalid_argument("unknown suite '" + suite + "' for the " +
                                (v == FamilySpec::Variant::laurent ? "laurent" : "indexed") +
                                " family");
}

std::vector<std::string> family_suite_names(FamilySpec::Variant v) {
    if (v == FamilySpec::Variant::laurent)
        return {"star1-novikov", "hom-novikov-star2", "gd2", "derivation"};
    return {"np", "hom-np"};
}

namespace {

/// Products whose basis-pair output sits entirely at grade
/// g_x + g_y + shift, which is what makes cap truncation an ideal quotient.
bool grade_concentrated(const FamilySpec& spec, FamilyProduct p) {
    if (spec.variant == FamilySpec::Variant::laurent)
        return p == FamilyProduct::dot || p == FamilyProduct::star1;
    return true;  // all indexed products shift by exactly q
}

long long grade_shift(const FamilySpec& spec) {
    return spec.variant == FamilySpec::Variant::indexed ? spec.q : 0;
}

}  // namespace

EmbeddedWindow embed_window(const FamilySpec& spec, const FamilyBinding& request,
                            GradeWindow window, bool quotient) {
    EmbeddedWindow out;
    out.basis = window_basis(spec, window);
    out.quotient = quotient;
    Field f = spec.field();
    std::size_t n = out.basis.size();
    if (n > kMaxDim)
        throw std::invalid_argument("window dimension " + std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxDim));
    auto index_of = [&](GradedIndex g) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < n; ++i)
            if (out.basis[i] == g) return static_cast<std::ptrdiff_t>(i);
        return -1;
    };
    if (quotient) {
        if (window.lo + grade_shift(spec) < 0)
            throw std::invalid_argument(
                "quotient window needs lo + grade shift >= 0 so the cap span is an ideal");
        out.ideal = "span{grade > " + std::to_string(window.hi) + "}";
    }

    auto embed_product = [&](FamilyProduct p) -> Algebra {
        if (quotient && !grade_concentrated(spec, p))
            throw std::invalid_argument(std::string(family_product_name(p)) +
                                        " spreads basis products over several grades; the cap "
                                        "span is not an ideal, so it cannot be truncated");
        Algebra alg(n, f, family_product_name(p));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SparseElement prod = family_product(spec, p, SparseElement::basis(out.basis[i], f),
                                                    SparseElement::basis(out.basis[j], f));
                for (const auto& [g, v] : prod.terms()) {
                    std::ptrdiff_t k = index_of(g);
                    if (k >= 0) {
                        alg.c(i, j, static_cast<std::size_t>(k)) = v;
                        continue;
                    }
                    if (quotient && g.grade > window.hi) continue;  // killed by the cap ideal
                    throw std::invalid_argument(
                        std::string("window not closed: ") + family_basis_label(spec, out.basis[i]) +
                        " " + family_product_name(p) + " " +
                        family_basis_label(spec, out.basis[j]) + " reaches " +
                        family_basis_label(spec, g));
                }
            }
        return alg;
    };

    auto embed_map = [&](FamilyMap m) -> LinearOperator {
        Mat mat(n, n, f);
        for (std::size_t j = 0; j < n; ++j) {
            SparseElement img = family_map(spec, m, SparseElement::basis(out.basis[j], f));
            for (const auto& [g, v] : img.terms()) {
                std::ptrdiff_t i = index_of(g);
                if (i < 0)
                    throw std::invalid_argument(std::string("window not closed under ") +
                                                family_map_name(m) + ": image of " +
                                                family_basis_label(spec, out.basis[j]) +
                                                " reaches " + family_basis_label(spec, g));
                mat.at(static_cast<std::size_t>(i), j) = v;
            }
        }
        return LinearOperator{std::move(mat), family_map_name(m)};
    };

    std::optional<Algebra> dot, star;
    std::optional<LinearOperator> alpha, del;
    if (request.dot) dot = embed_product(*request.dot);
    if (request.star) star = embed_product(*request.star);
    if (request.alpha) alpha = embed_map(*request.alpha);
    if (request.del) del = embed_map(*request.del);
    std::string label = std::string(spec.variant == FamilySpec::Variant::laurent ? "laurent"
                                                                                 : "indexed") +
                        " window [" + std::to_string(window.lo) + "," +
                        std::to_string(window.hi) + "]" +
                        (quotient ? " mod " + out.ideal : "");
    out.bundle = make_bundle(n, f, std::move(dot), std::move(star), std::move(alpha),
                             std::move(del), std::nullopt, std::move(label));
    return out;
}

}  // namespace nova
