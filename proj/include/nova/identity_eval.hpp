#pragma once

#include "nova/identity.hpp"

#include <vector>

namespace nova {

/// Both sides of a law, fully evaluated.  Vector-valued laws fill the
/// element pair, scalar-valued (form) laws the scalar pair.
template <class E>
struct Sides {
    bool scalar_valued = false;
    std::optional<E> lhs, rhs;
    std::optional<Scalar> lhs_s, rhs_s;
};

/// Evaluates one law on concrete arguments in an evaluation context.  This
/// is the single source for every formula in the catalog; the dense engine
/// and the sparse family checker instantiate it with their own contexts.
///
/// A context supplies:
///   using Element;
///   Element add/sub(a, b), neg(a), zero();
///   Element prim(a, b);          // the resolved single product
///   Element dotp(a, b), starp(a, b);
///   Element alpha(a), del(a);
///   Scalar  form(a, b);
/// Unused hooks are never called for a law that does not read them.
template <class Ctx>
Sides<typename Ctx::Element> eval_identity_sides(const Ctx& c, IdentityId id,
                                                 const std::vector<typename Ctx::Element>& xs) {
    using E = typename Ctx::Element;
    Sides<E> out;
    auto vec = [&](E l, E r) {
        out.lhs = std::move(l);
        out.rhs = std::move(r);
    };
    auto sca = [&](Scalar l, Scalar r) {
        out.scalar_valued = true;
        out.lhs_s = std::move(l);
        out.rhs_s = std::move(r);
    };
    // Commutator in the star product, used by the twisted Jacobi laws.
    auto br = [&](const E& u, const E& v) { return c.sub(c.starp(u, v), c.starp(v, u)); };

    const E& x = xs.at(0);
    const E& y = xs.size() > 1 ? xs.at(1) : xs.at(0);
    const E& z = xs.size() > 2 ? xs.at(2) : xs.at(0);

    switch (id) {
        case IdentityId::right_commute:
            vec(c.prim(c.prim(x, y), z), c.prim(c.prim(x, z), y));
            break;
        case IdentityId::left_symmetry:
            // associator symmetric in the first two arguments
            vec(c.sub(c.prim(c.prim(x, y), z), c.prim(x, c.prim(y, z))),
                c.sub(c.prim(c.prim(y, x), z), c.prim(y, c.prim(x, z))));
            break;
        case IdentityId::commutativity:
            vec(c.prim(x, y), c.prim(y, x));
            break;
        case IdentityId::associativity:
            vec(c.prim(c.prim(x, y), z), c.prim(x, c.prim(y, z)));
            break;
        case IdentityId::hom_associativity:
            vec(c.prim(c.alpha(x), c.prim(y, z)), c.prim(c.prim(x, y), c.alpha(z)));
            break;
        case IdentityId::hom_right_commute:
            vec(c.prim(c.prim(x, y), c.alpha(z)), c.prim(c.prim(x, z), c.alpha(y)));
            break;
        case IdentityId::hom_left_symmetry:
            // twisted associator (x y) a(z) - a(x) (y z), symmetric in x, y
            vec(c.sub(c.prim(c.prim(x, y), c.alpha(z)), c.prim(c.alpha(x), c.prim(y, z))),
                c.sub(c.prim(c.prim(y, x), c.alpha(z)), c.prim(c.alpha(y), c.prim(x, z))));
            break;
        case IdentityId::skew_symmetry:
            vec(c.prim(x, y), c.neg(c.prim(y, x)));
            break;
        case IdentityId::hom_jacobi:
            // the bundle's star is itself the bracket here
            vec(c.add(c.add(c.starp(c.starp(x, y), c.alpha(z)),
                            c.starp(c.starp(z, x), c.alpha(y))),
                      c.starp(c.starp(y, z), c.alpha(x))),
                c.zero());
            break;
        case IdentityId::j1:
            vec(c.add(c.add(c.starp(br(x, y), c.alpha(z)), c.starp(br(y, z), c.alpha(x))),
                      c.starp(br(z, x), c.alpha(y))),
                c.zero());
            break;
        case IdentityId::j2:
            vec(c.add(c.add(c.starp(c.alpha(x), br(y, z)), c.starp(c.alpha(y), br(z, x))),
                      c.starp(c.alpha(z), br(x, y))),
                c.zero());
            break;
        case IdentityId::np_1:
            vec(c.starp(c.dotp(x, y), z), c.dotp(x, c.starp(y, z)));
            break;
        case IdentityId::np_2:
            vec(c.sub(c.dotp(c.starp(x, y), z), c.starp(x, c.dotp(y, z))),
                c.sub(c.dotp(c.starp(y, x), z), c.starp(y, c.dotp(x, z))));
            break;
        case IdentityId::hom_np_1:
            vec(c.starp(c.dotp(x, y), c.alpha(z)), c.dotp(c.alpha(x), c.starp(y, z)));
            break;
        case IdentityId::hom_np_2:
            vec(c.sub(c.dotp(c.starp(x, y), c.alpha(z)), c.starp(c.alpha(x), c.dotp(y, z))),
                c.sub(c.dotp(c.starp(y, x), c.alpha(z)), c.starp(c.alpha(y), c.dotp(x, z))));
            break;
        case IdentityId::morphism:
            vec(c.alpha(c.prim(x, y)), c.prim(c.alpha(x), c.alpha(y)));
            break;
        case IdentityId::derivation:
            vec(c.del(c.prim(x, y)), c.add(c.prim(c.del(x), y), c.prim(x, c.del(y))));
            break;
        case IdentityId::gd2:
            vec(c.del(c.prim(x, c.del(y))), c.prim(c.del(x), c.del(y)));
            break;
        case IdentityId::commute_maps:
            vec(c.del(c.alpha(x)), c.alpha(c.del(x)));
            break;
        case IdentityId::form_assoc:
        case IdentityId::form_lie_invariance:
            sca(c.form(c.prim(x, y), z), c.form(x, c.prim(y, z)));
            break;
        case IdentityId::form_hom_invariance:
            sca(c.form(c.prim(x, y), c.alpha(z)), c.form(c.alpha(x), c.prim(y, z)));
            break;
        case IdentityId::form_alpha_compat:
            sca(c.form(c.alpha(x), y), c.form(x, c.alpha(y)));
            break;
        case IdentityId::form_symmetry:
            sca(c.form(x, y), c.form(y, x));
            break;
    }
    return out;
}

}  // namespace nova
