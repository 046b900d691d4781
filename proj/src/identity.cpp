#include "nova/identity.hpp"

#include "nova/identity_eval.hpp"

#include <random>
#include <stdexcept>

namespace nova {

namespace {

// id, name, equation, arity, product, prefer_star, both, alpha, del, form, scalar
const std::vector<IdentityInfo> kCatalog = {
    {IdentityId::right_commute, "right-commute", "(x*y)*z = (x*z)*y",
     3, true, true, false, false, false, false, false},
    {IdentityId::left_symmetry, "left-symmetry", "a(x,y,z) = a(y,x,z)",
     3, true, true, false, false, false, false, false},
    {IdentityId::commutativity, "commutativity", "x*y = y*x",
     2, true, false, false, false, false, false, false},
    {IdentityId::associativity, "associativity", "(x*y)*z = x*(y*z)",
     3, true, false, false, false, false, false, false},
    {IdentityId::hom_associativity, "hom-associativity", "alpha(x)*(y*z) = (x*y)*alpha(z)",
     3, true, false, false, true, false, false, false},
    {IdentityId::hom_right_commute, "hom-right-commute", "(x*y)*alpha(z) = (x*z)*alpha(y)",
     3, true, true, false, true, false, false, false},
    {IdentityId::hom_left_symmetry, "hom-left-symmetry", "ha(x,y,z) = ha(y,x,z)",
     3, true, true, false, true, false, false, false},
    {IdentityId::skew_symmetry, "skew-symmetry", "[x,y] = -[y,x]",
     2, true, true, false, false, false, false, false},
    {IdentityId::hom_jacobi, "hom-jacobi",
     "[[x,y],alpha(z)] + [[z,x],alpha(y)] + [[y,z],alpha(x)] = 0",
     3, true, true, false, true, false, false, false},
    {IdentityId::j1, "j1", "[x,y]*alpha(z) + [y,z]*alpha(x) + [z,x]*alpha(y) = 0",
     3, true, true, false, true, false, false, false},
    {IdentityId::j2, "j2", "alpha(x)*[y,z] + alpha(y)*[z,x] + alpha(z)*[x,y] = 0",
     3, true, true, false, true, false, false, false},
    {IdentityId::np_1, "np-1", "(x.y)*z = x.(y*z)",
     3, false, false, true, false, false, false, false},
    {IdentityId::np_2, "np-2", "(x*y).z - x*(y.z) = (y*x).z - y*(x.z)",
     3, false, false, true, false, false, false, false},
    {IdentityId::hom_np_1, "hom-np-1", "(x.y)*alpha(z) = alpha(x).(y*z)",
     3, false, false, true, true, false, false, false},
    {IdentityId::hom_np_2, "hom-np-2",
     "(x*y).alpha(z) - alpha(x)*(y.z) = (y*x).alpha(z) - alpha(y)*(x.z)",
     3, false, false, true, true, false, false, false},
    {IdentityId::morphism, "morphism", "alpha(x*y) = alpha(x)*alpha(y)",
     2, true, true, false, true, false, false, false},
    {IdentityId::derivation, "derivation", "del(x*y) = del(x)*y + x*del(y)",
     2, true, false, false, false, true, false, false},
    {IdentityId::gd2, "gd2", "del(x*del(y)) = del(x)*del(y)",
     2, true, false, false, false, true, false, false},
    {IdentityId::commute_maps, "commute-maps", "del(alpha(x)) = alpha(del(x))",
     1, false, false, false, true, true, false, false},
    {IdentityId::form_assoc, "form-assoc", "B(x*y, z) = B(x, y*z)",
     3, true, true, false, false, false, true, true},
    {IdentityId::form_lie_invariance, "form-lie-invariance", "B([x,y], z) = B(x, [y,z])",
     3, true, true, false, false, false, true, true},
    {IdentityId::form_hom_invariance, "form-hom-invariance",
     "B(x*y, alpha(z)) = B(alpha(x), y*z)",
     3, true, true, false, true, false, true, true},
    {IdentityId::form_alpha_compat, "form-alpha-compat", "B(alpha(x), y) = B(x, alpha(y))",
     2, false, false, false, true, false, true, true},
    {IdentityId::form_symmetry, "form-symmetry", "B(x,y) = B(y,x)",
     2, false, false, false, false, false, true, true},
};

/// Component pointers a check actually uses, after role resolution.
struct ResolvedRoles {
    const Algebra* prim = nullptr;
    const Algebra* dot = nullptr;
    const Algebra* star = nullptr;
    const LinearOperator* alpha = nullptr;
    const LinearOperator* del = nullptr;
    const BilinearForm* form = nullptr;
};

ResolvedRoles resolve_roles(const StructureBundle& b, const IdentityInfo& info) {
    ResolvedRoles r;
    if (info.needs_product) {
        const Algebra* first = info.prefer_star ? (b.star ? &*b.star : nullptr)
                                                : (b.dot ? &*b.dot : nullptr);
        const Algebra* second = info.prefer_star ? (b.dot ? &*b.dot : nullptr)
                                                 : (b.star ? &*b.star : nullptr);
        r.prim = first ? first : second;
        if (!r.prim)
            throw MissingRoleError(std::string("check '") + info.name +
                                   "' needs a product but the bundle has none");
        // The jacobi-style sums read the star slot directly.
        r.star = r.prim;
    }
    if (info.needs_both_products) {
        if (!b.dot || !b.star)
            throw MissingRoleError(std::string("check '") + info.name +
                                   "' needs both dot and star products");
        r.dot = &*b.dot;
        r.star = &*b.star;
    }
    if (info.needs_alpha) {
        if (!b.alpha)
            throw MissingRoleError(std::string("check '") + info.name + "' needs alpha");
        r.alpha = &*b.alpha;
    }
    if (info.needs_del) {
        if (!b.del) throw MissingRoleError(std::string("check '") + info.name + "' needs del");
        r.del = &*b.del;
    }
    if (info.needs_form) {
        if (!b.form) throw MissingRoleError(std::string("check '") + info.name + "' needs a form");
        r.form = &*b.form;
    }
    return r;
}

/// Dense evaluation context over coordinate vectors.
struct DenseCtx {
    using Element = Vec;
    std::size_t dim;
    Field field;
    ResolvedRoles roles;

    Vec add(const Vec& a, const Vec& b) const { return nova::add(a, b); }
    Vec sub(const Vec& a, const Vec& b) const { return nova::sub(a, b); }
    Vec neg(const Vec& a) const { return nova::sub(zero(), a); }
    Vec zero() const { return zero_vec(dim, field); }
    Vec prim(const Vec& a, const Vec& b) const { return multiply(*roles.prim, a, b); }
    Vec dotp(const Vec& a, const Vec& b) const { return multiply(*roles.dot, a, b); }
    Vec starp(const Vec& a, const Vec& b) const { return multiply(*roles.star, a, b); }
    Vec alpha(const Vec& a) const { return roles.alpha->apply(a); }
    Vec del(const Vec& a) const { return roles.del->apply(a); }
    Scalar form(const Vec& a, const Vec& b) const { return roles.form->eval(a, b); }
};

bool sides_agree(const Sides<Vec>& s) {
    if (s.scalar_valued) return *s.lhs_s == *s.rhs_s;
    return *s.lhs == *s.rhs;
}

Witness make_witness(const std::vector<std::size_t>& tuple, const Sides<Vec>& s) {
    Witness w;
    w.tuple = tuple;
    if (s.scalar_valued) {
        w.lhs_scalar = s.lhs_s;
        w.rhs_scalar = s.rhs_s;
    } else {
        w.lhs_vec = s.lhs;
        w.rhs_vec = s.rhs;
    }
    return w;
}

/// Checks one law against one bundle view; the view has already been
/// focused so the resolver sees exactly the intended product.
Verdict check_on_view(const StructureBundle& b, IdentityId id) {
    const IdentityInfo& info = identity_info(id);
    DenseCtx ctx{b.dim, b.field, resolve_roles(b, info)};
    std::size_t n = b.dim;
    if (n == 0) return Verdict{};
    std::vector<std::size_t> t(static_cast<std::size_t>(info.arity), 0);
    std::vector<Vec> args;
    for (;;) {
        args.clear();
        for (std::size_t idx : t) args.push_back(basis_vec(n, idx, b.field));
        Sides<Vec> s = eval_identity_sides(ctx, id, args);
        if (!sides_agree(s)) return Verdict{false, make_witness(t, s)};
        // lexicographic odometer
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

Vec random_vec(std::size_t n, Field f, std::mt19937_64& rng) {
    Vec v = zero_vec(n, f);
    if (f.is_rational()) {
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 3);
        for (Scalar& s : v) s = Scalar::rational(BigInt(num(rng)), BigInt(den(rng)));
    } else {
        std::uniform_int_distribution<std::uint32_t> res(0, f.p - 1);
        for (Scalar& s : v) s = Scalar::residue(f.p, res(rng));
    }
    return v;
}

StructureBundle focused(const StructureBundle& b, const Algebra* as_dot, const Algebra* as_star) {
    StructureBundle v;
    v.dim = b.dim;
    v.field = b.field;
    if (as_dot) v.dot = *as_dot;
    if (as_star) v.star = *as_star;
    v.alpha = b.alpha;
    v.del = b.del;
    v.form = b.form;
    v.label = b.label;
    return v;
}

const Algebra* star_slot(const StructureBundle& b) {
    return b.star ? &*b.star : (b.dot ? &*b.dot : nullptr);
}

const Algebra* dot_slot(const StructureBundle& b) {
    return b.dot ? &*b.dot : (b.star ? &*b.star : nullptr);
}

}  // namespace

const IdentityInfo& identity_info(IdentityId id) {
    for (const IdentityInfo& info : kCatalog)
        if (info.id == id) return info;
    throw std::logic_error("identity tag missing from catalog");
}

const std::vector<IdentityInfo>& identity_catalog() { return kCatalog; }

std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (const IdentityInfo& info : kCatalog)
        if (name == info.name) return info.id;
    return std::nullopt;
}

std::string Witness::describe() const {
    std::string out = "tuple (";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(tuple[i]);
    }
    out += ")";
    if (role) out += " in " + *role;
    auto side = [](const std::optional<Vec>& v, const std::optional<Scalar>& s,
                   const std::optional<std::string>& t) -> std::string {
        if (v) return vec_str(*v);
        if (s) return s->str();
        if (t) return *t;
        return "?";
    };
    out += ": lhs = " + side(lhs_vec, lhs_scalar, lhs_text);
    out += ", rhs = " + side(rhs_vec, rhs_scalar, rhs_text);
    return out;
}

bool Report::pass() const {
    for (const Entry& e : entries)
        if (!e.verdict.holds) return false;
    return true;
}

const Report::Entry* Report::first_failure() const {
    for (const Entry& e : entries)
        if (!e.verdict.holds) return &e;
    return nullptr;
}

std::string Report::summary() const {
    std::string out;
    for (const Entry& e : entries) {
        if (!out.empty()) out += "; ";
        out += e.name;
        out += e.verdict.holds ? ": ok" : ": FAIL " + e.verdict.witness->describe();
    }
    return out;
}

PreconditionError::PreconditionError(const std::string& msg, Report r)
    : std::runtime_error(r.first_failure()
                             ? msg + " [" + r.first_failure()->name + " " +
                                   r.first_failure()->verdict.witness->describe() + "]"
                             : msg),
      report(std::move(r)) {}

Verdict check_identity(const StructureBundle& b, IdentityId id) {
    if (id == IdentityId::morphism && b.dot && b.star) {
        // A map preserving the structure must preserve both operations.
        Verdict vd = check_on_view(focused(b, &*b.dot, nullptr), id);
        if (!vd.holds) {
            vd.witness->role = "dot";
            return vd;
        }
        Verdict vs = check_on_view(focused(b, nullptr, &*b.star), id);
        if (!vs.holds) vs.witness->role = "star";
        return vs;
    }
    return check_on_view(b, id);
}

Verdict random_sanity(const StructureBundle& b, IdentityId id, std::size_t trials,
                      std::uint64_t seed) {
    const IdentityInfo& info = identity_info(id);
    std::mt19937_64 rng(seed);
    std::size_t n = b.dim;
    if (n == 0) return Verdict{};
    auto run = [&](const StructureBundle& view) -> Verdict {
        DenseCtx ctx{view.dim, view.field, resolve_roles(view, info)};
        for (std::size_t trial = 0; trial < trials; ++trial) {
            std::vector<Vec> args;
            for (int a = 0; a < info.arity; ++a) args.push_back(random_vec(n, b.field, rng));
            Sides<Vec> s = eval_identity_sides(ctx, id, args);
            if (!sides_agree(s)) {
                Witness w = make_witness({trial}, s);
                return Verdict{false, std::move(w)};
            }
        }
        return Verdict{};
    };
    if (id == IdentityId::morphism && b.dot && b.star) {
        Verdict vd = run(focused(b, &*b.dot, nullptr));
        if (!vd.holds) {
            vd.witness->role = "dot";
            return vd;
        }
        Verdict vs = run(focused(b, nullptr, &*b.star));
        if (!vs.holds) vs.witness->role = "star";
        return vs;
    }
    return run(b);
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::novikov: return "novikov";
        case Kind::left_symmetric: return "left-symmetric";
        case Kind::commutative_associative: return "commutative-associative";
        case Kind::hom_associative_commutative: return "hom-associative-commutative";
        case Kind::hom_lie: return "hom-lie";
        case Kind::hom_novikov: return "hom-novikov";
        case Kind::novikov_poisson: return "novikov-poisson";
        case Kind::hom_novikov_poisson: return "hom-novikov-poisson";
        case Kind::quadratic_novikov: return "quadratic-novikov";
        case Kind::quadratic_hom_novikov: return "quadratic-hom-novikov";
        case Kind::quadratic_hom_lie: return "quadratic-hom-lie";
    }
    return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
    for (Kind k : {Kind::novikov, Kind::left_symmetric, Kind::commutative_associative,
                   Kind::hom_associative_commutative, Kind::hom_lie, Kind::hom_novikov,
                   Kind::novikov_poisson, Kind::hom_novikov_poisson, Kind::quadratic_novikov,
                   Kind::quadratic_hom_novikov, Kind::quadratic_hom_lie})
        if (name == kind_name(k)) return k;
    return std::nullopt;
}

Verdict nondegenerate_verdict(const BilinearForm& form) {
    if (!form.b.det().is_zero()) return Verdict{};
    Witness w;
    // Radical vector: v with B(v, e_j) = 0 for every j, i.e. b^T v = 0.
    std::vector<Vec> ns = form.b.transpose().nullspace();
    w.lhs_vec = ns.empty() ? zero_vec(form.dim(), form.b.field()) : ns.front();
    w.rhs_vec = zero_vec(form.dim(), form.b.field());
    w.lhs_text = "radical vector " + vec_str(*w.lhs_vec);
    return Verdict{false, std::move(w)};
}

Report validate(const StructureBundle& b, Kind kind, const ValidateOptions& opts) {
    Report rep;
    auto push = [&](const StructureBundle& view, IdentityId id, const std::string& suffix = "") {
        rep.entries.push_back({identity_info(id).name + suffix, check_identity(view, id)});
    };
    auto need_star = [&]() -> const Algebra* {
        const Algebra* a = star_slot(b);
        if (!a)
            throw MissingRoleError(std::string("validate(") + kind_name(kind) +
                                   ") needs a product");
        return a;
    };
    auto need_dot = [&]() -> const Algebra* {
        const Algebra* a = dot_slot(b);
        if (!a)
            throw MissingRoleError(std::string("validate(") + kind_name(kind) +
                                   ") needs a product");
        return a;
    };
    auto need_both = [&]() {
        if (!b.dot || !b.star)
            throw MissingRoleError(std::string("validate(") + kind_name(kind) +
                                   ") needs both dot and star products");
    };
    auto need_form = [&]() -> const BilinearForm* {
        if (!b.form)
            throw MissingRoleError(std::string("validate(") + kind_name(kind) +
                                   ") needs a form");
        return &*b.form;
    };
    auto push_form_checks = [&](const StructureBundle& view) {
        const BilinearForm* f = need_form();
        push(view, IdentityId::form_symmetry);
        rep.entries.push_back({"nondegenerate", nondegenerate_verdict(*f)});
    };

    switch (kind) {
        case Kind::novikov: {
            StructureBundle v = focused(b, nullptr, need_star());
            push(v, IdentityId::right_commute);
            push(v, IdentityId::left_symmetry);
            break;
        }
        case Kind::left_symmetric: {
            push(focused(b, nullptr, need_star()), IdentityId::left_symmetry);
            break;
        }
        case Kind::commutative_associative: {
            StructureBundle v = focused(b, need_dot(), nullptr);
            push(v, IdentityId::commutativity);
            push(v, IdentityId::associativity);
            break;
        }
        case Kind::hom_associative_commutative: {
            StructureBundle v = focused(b, need_dot(), nullptr);
            push(v, IdentityId::commutativity);
            push(v, IdentityId::hom_associativity);
            break;
        }
        case Kind::hom_lie: {
            StructureBundle v = focused(b, nullptr, need_star());
            push(v, IdentityId::skew_symmetry);
            push(v, IdentityId::hom_jacobi);
            break;
        }
        case Kind::hom_novikov: {
            StructureBundle v = focused(b, nullptr, need_star());
            if (opts.require_morphism) push(v, IdentityId::morphism);
            push(v, IdentityId::hom_right_commute);
            push(v, IdentityId::hom_left_symmetry);
            break;
        }
        case Kind::novikov_poisson: {
            need_both();
            StructureBundle vd = focused(b, &*b.dot, nullptr);
            StructureBundle vs = focused(b, nullptr, &*b.star);
            push(vd, IdentityId::commutativity);
            push(vd, IdentityId::associativity);
            push(vs, IdentityId::right_commute);
            push(vs, IdentityId::left_symmetry);
            push(b, IdentityId::np_1);
            push(b, IdentityId::np_2);
            break;
        }
        case Kind::hom_novikov_poisson: {
            need_both();
            StructureBundle vd = focused(b, &*b.dot, nullptr);
            StructureBundle vs = focused(b, nullptr, &*b.star);
            push(vd, IdentityId::morphism, ":dot");
            push(vd, IdentityId::commutativity);
            push(vd, IdentityId::hom_associativity);
            push(vs, IdentityId::morphism, ":star");
            push(vs, IdentityId::hom_right_commute);
            push(vs, IdentityId::hom_left_symmetry);
            push(b, IdentityId::hom_np_1);
            push(b, IdentityId::hom_np_2);
            break;
        }
        case Kind::quadratic_novikov: {
            StructureBundle v = focused(b, nullptr, need_star());
            push(v, IdentityId::right_commute);
            push(v, IdentityId::left_symmetry);
            push_form_checks(v);
            push(v, IdentityId::form_assoc);
            break;
        }
        case Kind::quadratic_hom_novikov: {
            StructureBundle v = focused(b, nullptr, need_star());
            if (opts.require_morphism) push(v, IdentityId::morphism);
            push(v, IdentityId::hom_right_commute);
            push(v, IdentityId::hom_left_symmetry);
            push_form_checks(v);
            push(v, IdentityId::form_hom_invariance);
            break;
        }
        case Kind::quadratic_hom_lie: {
            StructureBundle v = focused(b, nullptr, need_star());
            push(v, IdentityId::skew_symmetry);
            push(v, IdentityId::hom_jacobi);
            push_form_checks(v);
            push(v, IdentityId::form_lie_invariance);
            push(v, IdentityId::form_alpha_compat);
            break;
        }
    }
    return rep;
}

MapProperties map_properties(const Algebra& a, const LinearOperator& op) {
    if (op.dim() != a.dim() || op.m.cols() != a.dim())
        throw std::invalid_argument("operator/algebra dimension mismatch");
    MapProperties p;
    StructureBundle as_star = make_bundle(a.dim(), a.field(), std::nullopt, a, op, std::nullopt,
                                          std::nullopt);
    p.endomorphism = check_identity(as_star, IdentityId::morphism);

    if (!p.endomorphism.holds) {
        p.automorphism = p.endomorphism;
    } else if (op.m.det().is_zero()) {
        Witness w;
        w.lhs_text = "matrix is singular";
        p.automorphism = Verdict{false, std::move(w)};
    }

    Mat sq = op.m * op.m;
    Mat id = Mat::identity(a.dim(), a.field());
    if (sq != id) {
        Witness w;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec col = sq.apply(basis_vec(a.dim(), j, a.field()));
            Vec ej = basis_vec(a.dim(), j, a.field());
            if (col != ej) {
                w.tuple = {j};
                w.lhs_vec = col;
                w.rhs_vec = ej;
                break;
            }
        }
        p.involution = Verdict{false, std::move(w)};
    }

    StructureBundle as_dot = make_bundle(a.dim(), a.field(), a, std::nullopt, std::nullopt, op,
                                         std::nullopt);
    p.derivation = check_identity(as_dot, IdentityId::derivation);
    return p;
}

}  // namespace nova
