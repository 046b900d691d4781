#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nova/identity.hpp"

#include <set>

using nova::Algebra;
using nova::BilinearForm;
using nova::Field;
using nova::IdentityId;
using nova::Kind;
using nova::LinearOperator;
using nova::Mat;
using nova::Report;
using nova::Scalar;
using nova::StructureBundle;
using nova::Verdict;

namespace {

Field Q = Field::rationals();

Scalar q(const char* s) { return Scalar::parse(s, Q); }

Algebra dual_numbers() {
    return nova::make_algebra(2, {{0, 0, 0, q("1")}, {0, 1, 1, q("1")}, {1, 0, 1, q("1")}}, Q);
}

/// e0 e0 = e0 and e0 e1 = e1: associative but not right-commutative.
Algebra left_unit_action() {
    return nova::make_algebra(2, {{0, 0, 0, q("1")}, {0, 1, 1, q("1")}}, Q);
}

/// x * y = x . D(y) with D the weighted diagonal 1 |-> 0, eps |-> eps.
Algebra euler_star() {
    return nova::make_algebra(2, {{0, 1, 1, q("1")}}, Q);
}

LinearOperator diag(const char* a, const char* d, Field f = Q) {
    Mat m(2, 2, f);
    m.at(0, 0) = Scalar::parse(a, f);
    m.at(1, 1) = Scalar::parse(d, f);
    return LinearOperator{m, ""};
}

StructureBundle star_bundle(Algebra star, std::optional<LinearOperator> alpha = {},
                            std::optional<LinearOperator> del = {},
                            std::optional<BilinearForm> form = {}) {
    std::size_t n = star.dim();
    Field f = star.field();
    return nova::make_bundle(n, f, std::nullopt, std::move(star), std::move(alpha),
                             std::move(del), std::move(form));
}

}  // namespace

TEST_CASE("catalog is closed, named and typed") {
    const auto& cat = nova::identity_catalog();
    CHECK(cat.size() == 24);
    std::set<std::string> names;
    for (const auto& info : cat) {
        names.insert(info.name);
        CHECK(nova::identity_from_name(info.name) == info.id);
        CHECK((info.arity >= 1 && info.arity <= 3));
    }
    CHECK(names.size() == 24);  // no duplicates
    CHECK(!nova::identity_from_name("nonsense").has_value());

    CHECK(nova::identity_info(IdentityId::commute_maps).arity == 1);
    std::set<std::string> arity2;
    for (const auto& info : cat)
        if (info.arity == 2) arity2.insert(info.name);
    CHECK(arity2 == std::set<std::string>{"commutativity", "skew-symmetry", "morphism",
                                          "derivation", "gd2", "form-alpha-compat",
                                          "form-symmetry"});
    for (const char* scalar_law : {"form-assoc", "form-lie-invariance", "form-hom-invariance",
                                   "form-alpha-compat", "form-symmetry"})
        CHECK(nova::identity_info(*nova::identity_from_name(scalar_law)).scalar_valued);
}

TEST_CASE("first failure is the lexicographically smallest basis tuple") {
    Verdict v = nova::check_identity(star_bundle(left_unit_action()),
                                     IdentityId::right_commute);
    REQUIRE(!v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->tuple == std::vector<std::size_t>{0, 0, 1});
    CHECK(nova::vec_str(*v.witness->lhs_vec) == "(0, 1)");  // (e0 e0) e1 = e1
    CHECK(nova::vec_str(*v.witness->rhs_vec) == "(0, 0)");  // (e0 e1) e0 = 0
    CHECK(v.witness->describe() == "tuple (0,0,1): lhs = (0, 1), rhs = (0, 0)");
}

TEST_CASE("plain product laws") {
    StructureBundle dual = star_bundle(dual_numbers());
    CHECK(nova::check_identity(dual, IdentityId::commutativity).holds);
    CHECK(nova::check_identity(dual, IdentityId::associativity).holds);

    StructureBundle es = star_bundle(euler_star());
    CHECK(nova::check_identity(es, IdentityId::right_commute).holds);
    CHECK(nova::check_identity(es, IdentityId::left_symmetry).holds);
    CHECK(!nova::check_identity(es, IdentityId::commutativity).holds);
}

TEST_CASE("twisted laws reduce to plain ones under the identity map") {
    StructureBundle dual = star_bundle(dual_numbers(), LinearOperator::identity(2, Q));
    CHECK(nova::check_identity(dual, IdentityId::hom_associativity).holds);
    CHECK(nova::check_identity(dual, IdentityId::hom_right_commute).holds);
    CHECK(nova::check_identity(dual, IdentityId::hom_left_symmetry).holds);
    CHECK(nova::check_identity(dual, IdentityId::morphism).holds);
}

TEST_CASE("bracket laws") {
    // [e0, e1] = e0: the two-dimensional nonabelian Lie bracket
    Algebra br = nova::make_algebra(2, {{0, 1, 0, q("1")}, {1, 0, 0, q("-1")}}, Q);
    StructureBundle b = star_bundle(br, LinearOperator::identity(2, Q));
    CHECK(nova::check_identity(b, IdentityId::skew_symmetry).holds);
    CHECK(nova::check_identity(b, IdentityId::hom_jacobi).holds);

    // a symmetric product is not skew
    Verdict v = nova::check_identity(star_bundle(dual_numbers()), IdentityId::skew_symmetry);
    REQUIRE(!v.holds);
    CHECK(v.witness->tuple == std::vector<std::size_t>{0, 0});
}

TEST_CASE("derived bracket sums j1 and j2") {
    // x * y = x . t y' on truncated polynomials mod t^3: e_i * e_j = j e_{i+j}.
    Algebra star = nova::make_algebra(
        3, {{0, 1, 1, q("1")}, {0, 2, 2, q("2")}, {1, 1, 2, q("1")}}, Q);
    StructureBundle b = star_bundle(star, LinearOperator::identity(3, Q));
    REQUIRE(nova::validate(b, nova::Kind::novikov).pass());
    CHECK(nova::check_identity(b, IdentityId::j1).holds);
    CHECK(nova::check_identity(b, IdentityId::j2).holds);
    // and the commutator of a right-commutative left-symmetric product is a
    // twisted Lie bracket
    StructureBundle lie = star_bundle(nova::commutator_tensor(star),
                                      LinearOperator::identity(3, Q));
    CHECK(nova::validate(lie, nova::Kind::hom_lie).pass());
}

TEST_CASE("map laws") {
    Algebra dual = dual_numbers();
    // Euler map 1 |-> 0, eps |-> eps is a derivation of the dual numbers,
    // but breaks the chained-projection law: D(1 . D(eps)) = eps, while
    // D(1) . D(eps) = 0
    StructureBundle with_euler = star_bundle(dual, std::nullopt, diag("0", "1"));
    CHECK(nova::check_identity(with_euler, IdentityId::derivation).holds);
    Verdict g = nova::check_identity(with_euler, IdentityId::gd2);
    REQUIRE(!g.holds);
    CHECK(g.witness->tuple == std::vector<std::size_t>{0, 1});

    // 1 |-> 0, eps |-> 1 satisfies the chained-projection law but breaks Leibniz
    Mat m(2, 2, Q);
    m.at(0, 1) = q("1");
    StructureBundle with_ddeps = star_bundle(dual, std::nullopt, LinearOperator{m, ""});
    CHECK(nova::check_identity(with_ddeps, IdentityId::gd2).holds);
    Verdict v = nova::check_identity(with_ddeps, IdentityId::derivation);
    REQUIRE(!v.holds);
    CHECK(v.witness->tuple == std::vector<std::size_t>{1, 1});

    // commute-maps reads one argument only
    StructureBundle maps = star_bundle(dual, diag("1", "-1"), diag("0", "1"));
    CHECK(nova::check_identity(maps, IdentityId::commute_maps).holds);
    StructureBundle swapped = star_bundle(
        dual, LinearOperator{[] {
                  Mat s(2, 2, Q);
                  s.at(0, 1) = q("1");
                  s.at(1, 0) = q("1");
                  return s;
              }(),
                             ""},
        diag("0", "1"));
    CHECK(!nova::check_identity(swapped, IdentityId::commute_maps).holds);
}

TEST_CASE("checking a structure map against both products") {
    Algebra dot = dual_numbers();
    // eps * eps = 1, otherwise zero
    Algebra star = nova::make_algebra(2, {{1, 1, 0, q("1")}}, Q);
    StructureBundle b = nova::make_bundle(2, Q, dot, star, diag("1", "2"), std::nullopt,
                                          std::nullopt);
    Verdict v = nova::check_identity(b, IdentityId::morphism);
    REQUIRE(!v.holds);
    CHECK(v.witness->role == "star");  // the dot product is preserved, the star is not
    CHECK(v.witness->tuple == std::vector<std::size_t>{1, 1});

    Verdict r = nova::random_sanity(b, IdentityId::morphism, 20, 7);
    REQUIRE(!r.holds);
    CHECK(r.witness->role == "star");
}

TEST_CASE("missing roles are reported, not defaulted") {
    StructureBundle plain = star_bundle(dual_numbers());
    CHECK_THROWS_AS(nova::check_identity(plain, IdentityId::hom_associativity),
                    nova::MissingRoleError);
    CHECK_THROWS_AS(nova::check_identity(plain, IdentityId::np_1), nova::MissingRoleError);
    CHECK_THROWS_AS(nova::check_identity(plain, IdentityId::derivation),
                    nova::MissingRoleError);
    CHECK_THROWS_AS(nova::check_identity(plain, IdentityId::form_symmetry),
                    nova::MissingRoleError);
    StructureBundle empty;
    empty.field = Q;
    CHECK_THROWS_AS(nova::check_identity(empty, IdentityId::commutativity),
                    nova::MissingRoleError);
}

TEST_CASE("single-product laws fall back to the other slot") {
    // only a dot product present: star-preferring laws read it
    Algebra a = left_unit_action();
    StructureBundle dot_only = nova::make_bundle(2, Q, a, std::nullopt, std::nullopt,
                                                 std::nullopt, std::nullopt);
    Verdict v = nova::check_identity(dot_only, IdentityId::right_commute);
    CHECK(!v.holds);
    // only a star product: dot-preferring laws read it
    StructureBundle star_only = star_bundle(dual_numbers());
    CHECK(nova::check_identity(star_only, IdentityId::commutativity).holds);
}

TEST_CASE("zero-dimensional structures satisfy everything") {
    StructureBundle b = nova::make_bundle(0, Q, Algebra(0, Q), Algebra(0, Q),
                                          LinearOperator::identity(0, Q),
                                          LinearOperator::identity(0, Q),
                                          BilinearForm{Mat(0, 0, Q), ""});
    for (const auto& info : nova::identity_catalog())
        CHECK(nova::check_identity(b, info.id).holds);
    for (Kind k : {Kind::novikov, Kind::novikov_poisson, Kind::quadratic_hom_novikov})
        CHECK(nova::validate(b, k).pass());
}

TEST_CASE("random re-checks are seeded and reproducible") {
    StructureBundle b = star_bundle(left_unit_action());
    Verdict v1 = nova::random_sanity(b, IdentityId::right_commute, 25, 42);
    Verdict v2 = nova::random_sanity(b, IdentityId::right_commute, 25, 42);
    REQUIRE(!v1.holds);
    REQUIRE(!v2.holds);
    CHECK(v1.witness->tuple == v2.witness->tuple);
    CHECK(v1.witness->tuple.size() == 1);  // failing trial index
    CHECK(*v1.witness->lhs_vec == *v2.witness->lhs_vec);

    // a law that holds on the basis holds on every random tuple
    CHECK(nova::random_sanity(star_bundle(dual_numbers()), IdentityId::associativity, 50, 9)
              .holds);
    Field g5 = Field::gf(5);
    Algebra ga = nova::make_algebra(2, {{0, 0, 0, Scalar::residue(5, 3)}}, g5);
    CHECK(nova::random_sanity(nova::make_bundle(2, g5, std::nullopt, ga, std::nullopt,
                                                std::nullopt, std::nullopt),
                              IdentityId::right_commute, 50, 11)
              .holds);
}

TEST_CASE("structure kind names round-trip") {
    for (Kind k : {Kind::novikov, Kind::left_symmetric, Kind::commutative_associative,
                   Kind::hom_associative_commutative, Kind::hom_lie, Kind::hom_novikov,
                   Kind::novikov_poisson, Kind::hom_novikov_poisson, Kind::quadratic_novikov,
                   Kind::quadratic_hom_novikov, Kind::quadratic_hom_lie})
        CHECK(nova::kind_from_name(nova::kind_name(k)) == k);
    CHECK(!nova::kind_from_name("octonion").has_value());
}

TEST_CASE("validator reports every law of the kind") {
    Report good = nova::validate(star_bundle(euler_star()), Kind::novikov);
    CHECK(good.pass());
    CHECK(good.entries.size() == 2);
    CHECK(good.entries[0].name == "right-commute");
    CHECK(good.entries[1].name == "left-symmetry");

    Report bad = nova::validate(star_bundle(left_unit_action()), Kind::novikov);
    CHECK(!bad.pass());
    REQUIRE(bad.first_failure() != nullptr);
    CHECK(bad.first_failure()->name == "right-commute");
    CHECK(bad.summary().find("right-commute: FAIL") != std::string::npos);
}

TEST_CASE("two-product kinds require both slots") {
    CHECK_THROWS_AS(nova::validate(star_bundle(euler_star()), Kind::novikov_poisson),
                    nova::MissingRoleError);
    StructureBundle np = nova::make_bundle(2, Q, dual_numbers(), euler_star(), std::nullopt,
                                           std::nullopt, std::nullopt);
    Report r = nova::validate(np, Kind::novikov_poisson);
    CHECK(r.pass());
    CHECK(r.entries.size() == 6);
}

TEST_CASE("twist multiplicativity can be waived explicitly") {
    // e0 * e0 = e1 with alpha killing e0 and sending e1 to e0: the twisted
    // product laws hold but alpha is not multiplicative.
    Algebra star = nova::make_algebra(2, {{0, 0, 1, q("1")}}, Q);
    Mat m(2, 2, Q);
    m.at(0, 1) = q("1");
    StructureBundle b = star_bundle(star, LinearOperator{m, ""});
    Report strict = nova::validate(b, Kind::hom_novikov);
    CHECK(!strict.pass());
    CHECK(strict.first_failure()->name == "morphism");
    CHECK(strict.entries.size() == 3);

    nova::ValidateOptions opts;
    opts.require_morphism = false;
    Report relaxed = nova::validate(b, Kind::hom_novikov, opts);
    CHECK(relaxed.pass());
    CHECK(relaxed.entries.size() == 2);
}

TEST_CASE("poisson-compatibility bundle names its morphism entries") {
    StructureBundle np = nova::make_bundle(2, Q, dual_numbers(), euler_star(),
                                           LinearOperator::identity(2, Q), std::nullopt,
                                           std::nullopt);
    Report r = nova::validate(np, Kind::hom_novikov_poisson);
    CHECK(r.pass());
    CHECK(r.entries.size() == 8);
    CHECK(r.entries[0].name == "morphism:dot");
    CHECK(r.entries[3].name == "morphism:star");
}

TEST_CASE("map classification") {
    Algebra dual = dual_numbers();
    nova::MapProperties euler = nova::map_properties(dual, diag("0", "1"));
    CHECK(euler.derivation.holds);
    CHECK(!euler.endomorphism.holds);
    CHECK(!euler.automorphism.holds);
    CHECK(!euler.involution.holds);

    nova::MapProperties flip = nova::map_properties(dual, diag("1", "-1"));
    CHECK(flip.endomorphism.holds);
    CHECK(flip.automorphism.holds);
    CHECK(flip.involution.holds);
    CHECK(!flip.derivation.holds);

    nova::MapProperties crush = nova::map_properties(dual, diag("1", "0"));
    CHECK(crush.endomorphism.holds);
    REQUIRE(!crush.automorphism.holds);
    CHECK(*crush.automorphism.witness->lhs_text == "matrix is singular");
    CHECK(nova::map_properties(dual, LinearOperator::identity(2, Q)).involution.holds);
}

TEST_CASE("degenerate forms expose a radical vector") {
    Mat m(2, 2, Q);
    m.at(0, 0) = q("1");
    Verdict v = nova::nondegenerate_verdict(BilinearForm{m, ""});
    REQUIRE(!v.holds);
    CHECK(nova::vec_str(*v.witness->lhs_vec) == "(0, 1)");
    CHECK(v.witness->lhs_text->rfind("radical vector", 0) == 0);

    Mat h(2, 2, Q);
    h.at(0, 1) = q("1");
    h.at(1, 0) = q("1");
    CHECK(nova::nondegenerate_verdict(BilinearForm{h, ""}).holds);
}

TEST_CASE("precondition failures carry their report") {
    Report rep;
    nova::Witness w;
    w.tuple = {0, 1};
    w.lhs_text = "x";
    w.rhs_text = "y";
    rep.entries.push_back({"example-law", Verdict{false, std::move(w)}});
    nova::PreconditionError err("input rejected", rep);
    CHECK(std::string(err.what()).find("input rejected") != std::string::npos);
    CHECK(std::string(err.what()).find("example-law") != std::string::npos);
    CHECK(err.report.entries.size() == 1);
}
