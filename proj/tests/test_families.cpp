#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nova/families.hpp"

using nova::Algebra;
using nova::FamilyBinding;
using nova::FamilyDomainError;
using nova::FamilyMap;
using nova::FamilyProduct;
using nova::FamilySpec;
using nova::Field;
using nova::GradedIndex;
using nova::GradeWindow;
using nova::Kind;
using nova::Scalar;
using nova::SparseElement;
using nova::Verdict;

namespace {

Field Q = Field::rationals();

Scalar q(const char* s) { return Scalar::parse(s, Q); }

SparseElement t(long long n, Field f = Q) { return SparseElement::basis({n, 0}, f); }
SparseElement theta_t(long long n, Field f = Q) { return SparseElement::basis({n, 1}, f); }
SparseElement x(long long a, Field f = Q) { return SparseElement::basis({a, 0}, f); }

SparseElement term(long long grade, int parity, const char* coeff) {
    SparseElement e;
    e.add_term({grade, parity}, q(coeff));
    return e;
}

FamilySpec laurent_half() { return FamilySpec::laurent(q("1/2")); }
FamilySpec indexed_q1() { return FamilySpec::indexed(1, q("1"), q("2")); }

}  // namespace

TEST_CASE("sparse elements cancel exactly") {
    SparseElement e = term(2, 0, "1/3").plus(term(2, 0, "-1/3"));
    CHECK(e.is_zero());
    CHECK(e.terms().empty());
    SparseElement f = term(1, 0, "2").minus(term(1, 0, "1/2"));
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().begin()->second.str() == "3/2");
    CHECK(f.negated().terms().begin()->second.str() == "-3/2");
    CHECK(f.scaled(q("0")).is_zero());
    CHECK(term(0, 1, "1") != term(0, 0, "1"));  // parity distinguishes basis slots
}

TEST_CASE("laurent products") {
    FamilySpec spec = laurent_half();
    CHECK(nova::family_product(spec, FamilyProduct::dot, t(2), theta_t(3)) == theta_t(5));
    CHECK(nova::family_product(spec, FamilyProduct::dot, theta_t(1), theta_t(4)).is_zero());
    CHECK(nova::family_product(spec, FamilyProduct::dot, t(-3), t(1)) == t(-2));

    // star1 = x . del(y): the odd part of the right factor is discarded
    CHECK(nova::family_product(spec, FamilyProduct::star1, t(2), theta_t(3)).is_zero());
    CHECK(nova::family_product(spec, FamilyProduct::star1, theta_t(3), t(2)) == theta_t(5));

    // bullet/star2 shift the product: t * t expands (t + 1/2)^2
    SparseElement sq = nova::family_product(spec, FamilyProduct::star2, t(1), t(1));
    SparseElement expect = term(2, 0, "1").plus(term(1, 0, "1")).plus(term(0, 0, "1/4"));
    CHECK(sq == expect);
    CHECK(nova::family_product(spec, FamilyProduct::bullet, t(1), t(1)) == expect);

    // shift-based operations reject negative even grades in their inputs
    CHECK_THROWS_AS(nova::family_product(spec, FamilyProduct::bullet, t(-1), t(1)),
                    FamilyDomainError);
    CHECK_THROWS_AS(nova::family_product(spec, FamilyProduct::star2, t(1), t(-2)),
                    FamilyDomainError);

    CHECK_THROWS_AS(nova::family_product(spec, FamilyProduct::star, t(1), t(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(nova::family_product(spec, FamilyProduct::dot56, t(1), t(1)),
                    std::invalid_argument);
}

TEST_CASE("laurent maps") {
    FamilySpec spec = FamilySpec::laurent(q("1"));
    // del projects onto the even part and is defined on all grades
    CHECK(nova::family_map(spec, FamilyMap::del, t(-3)) == t(-3));
    CHECK(nova::family_map(spec, FamilyMap::del, t(3).plus(theta_t(5))) == t(3));

    // alpha substitutes t |-> t + 1 and kills the odd part
    SparseElement a2 = nova::family_map(spec, FamilyMap::alpha, t(2));
    CHECK(a2 == term(2, 0, "1").plus(term(1, 0, "2")).plus(term(0, 0, "1")));
    CHECK(nova::family_map(spec, FamilyMap::alpha, theta_t(-2)).is_zero());
    CHECK_THROWS_AS(nova::family_map(spec, FamilyMap::alpha, t(-1)), FamilyDomainError);
    CHECK_THROWS_AS(nova::family_map(spec, FamilyMap::del2, t(1)), std::invalid_argument);
}

TEST_CASE("indexed products and maps") {
    FamilySpec spec = indexed_q1();  // x_a x_b = x_{a+b+1}, weights b+1, base 2
    CHECK(nova::family_product(spec, FamilyProduct::dot56, x(2), x(3)) == x(6));
    CHECK(nova::family_product(spec, FamilyProduct::star, x(2), x(3)) ==
          x(6).scaled(q("4")));
    CHECK(nova::family_product(spec, FamilyProduct::bullet, x(2), x(3)) ==
          x(6).scaled(q("128")));  // 2^(2+3+2)
    CHECK(nova::family_product(spec, FamilyProduct::star2, x(2), x(3)) ==
          x(6).scaled(q("512")));

    CHECK(nova::family_map(spec, FamilyMap::del, x(3)) == x(3).scaled(q("4")));
    CHECK(nova::family_map(spec, FamilyMap::alpha, x(3)) == x(3).scaled(q("16")));
    CHECK(nova::family_map(spec, FamilyMap::alpha, x(-5)) == x(-5).scaled(q("1/16")));

    // the weighted diagonal equals its commutator reconstruction
    SparseElement mix = x(2).scaled(q("3")).minus(x(-4));
    CHECK(nova::family_map(spec, FamilyMap::del2, mix) ==
          nova::family_map(spec, FamilyMap::del, mix));

    CHECK_THROWS_AS(nova::family_product(spec, FamilyProduct::dot, x(1), x(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(nova::family_map(spec, FamilyMap::del, theta_t(1)),
                    std::invalid_argument);
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(FamilySpec::indexed(0, q("0"), q("2")), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::indexed(0, q("1"), q("0")), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::indexed(0, q("1"), Scalar::residue(5, 2)),
                    std::invalid_argument);
    CHECK(FamilySpec::indexed(2, q("1"), q("2")).field().is_rational());
    CHECK(laurent_half().field().is_rational());
}

TEST_CASE("element rendering") {
    FamilySpec spec = laurent_half();
    CHECK(nova::family_basis_label(spec, {2, 0}) == "t^2");
    CHECK(nova::family_basis_label(spec, {-2, 1}) == "theta*t^-2");
    CHECK(nova::family_element_str(spec, term(2, 0, "1")) == "1*t^2");
    CHECK(nova::family_element_str(spec, SparseElement{}) == "0");
    FamilySpec ix = indexed_q1();
    CHECK(nova::family_basis_label(ix, {5, 0}) == "x_5");
    CHECK(nova::family_element_str(ix, x(5).scaled(q("-1/2"))) == "-1/2*x_5");
}

TEST_CASE("window verification runs the full family exactly") {
    FamilySpec spec = laurent_half();
    FamilyBinding star1{std::nullopt, FamilyProduct::star1, std::nullopt, std::nullopt};
    CHECK(nova::window_verify(spec, nova::IdentityId::left_symmetry, star1, {-2, 2}).holds);
    CHECK(nova::window_verify(spec, nova::IdentityId::right_commute, star1, {-2, 2}).holds);

    // the even projection is not a derivation of the laurent product
    FamilyBinding dd{FamilyProduct::dot, std::nullopt, std::nullopt, FamilyMap::del};
    Verdict v = nova::window_verify(spec, nova::IdentityId::derivation, dd, {1, 2});
    REQUIRE(!v.holds);
    CHECK(v.witness->tuple == std::vector<std::size_t>{0, 0});
    CHECK(*v.witness->lhs_text == "1*t^2");
    CHECK(*v.witness->rhs_text == "2*t^2");

    FamilyBinding none{std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(nova::window_verify(spec, nova::IdentityId::form_symmetry, none, {0, 1}),
                    nova::MissingRoleError);
    CHECK_THROWS_AS(nova::window_verify(spec, nova::IdentityId::commutativity, none, {0, 1}),
                    nova::MissingRoleError);
    CHECK_THROWS_AS(nova::window_verify(spec, nova::IdentityId::left_symmetry, star1, {2, 1}),
                    std::invalid_argument);
}

TEST_CASE("built-in suites") {
    for (const char* name : {"star1-novikov", "hom-novikov-star2", "gd2", "derivation"})
        CHECK(!nova::family_suite(FamilySpec::Variant::laurent, name).empty());
    CHECK(nova::family_suite_names(FamilySpec::Variant::indexed) ==
          std::vector<std::string>{"np", "hom-np"});
    CHECK_THROWS_AS(nova::family_suite(FamilySpec::Variant::laurent, "np"),
                    std::invalid_argument);

    FamilySpec spec = laurent_half();
    for (const nova::SuiteCheck& chk :
         nova::family_suite(FamilySpec::Variant::laurent, "star1-novikov"))
        CHECK(nova::window_verify(spec, chk.id, chk.binding, {-2, 2}).holds);
    for (const nova::SuiteCheck& chk :
         nova::family_suite(FamilySpec::Variant::laurent, "hom-novikov-star2"))
        CHECK(nova::window_verify(spec, chk.id, chk.binding, {0, 3}).holds);

    FamilySpec ix = indexed_q1();
    for (const nova::SuiteCheck& chk : nova::family_suite(FamilySpec::Variant::indexed, "np"))
        CHECK(nova::window_verify(ix, chk.id, chk.binding, {-2, 2}).holds);
    for (const nova::SuiteCheck& chk :
         nova::family_suite(FamilySpec::Variant::indexed, "hom-np"))
        CHECK(nova::window_verify(ix, chk.id, chk.binding, {-2, 2}).holds);
}

TEST_CASE("embedding a window without truncation requires closure") {
    FamilySpec spec = laurent_half();
    FamilyBinding dot_only{FamilyProduct::dot, std::nullopt, std::nullopt, std::nullopt};
    try {
        nova::embed_window(spec, dot_only, {0, 1});
        FAIL("expected closure error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("window not closed") != std::string::npos);
        CHECK(std::string(e.what()).find("t^2") != std::string::npos);
    }

    // alpha with a nonzero shift leaks below the window floor
    FamilyBinding alpha_only{std::nullopt, std::nullopt, FamilyMap::alpha, std::nullopt};
    try {
        nova::embed_window(spec, alpha_only, {1, 3});
        FAIL("expected closure error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("window not closed under alpha") != std::string::npos);
    }
}

TEST_CASE("cap truncation embeds grade-additive products") {
    FamilySpec spec = laurent_half();
    FamilyBinding bind{FamilyProduct::dot, FamilyProduct::star1, std::nullopt, FamilyMap::del};
    nova::EmbeddedWindow w = nova::embed_window(spec, bind, {0, 3}, true);
    CHECK(w.bundle.dim == 8);  // four grades, two parities each
    CHECK(w.quotient);
    CHECK(w.ideal == "span{grade > 3}");
    CHECK(w.bundle.label == "laurent window [0,3] mod span{grade > 3}");
    REQUIRE(w.basis.size() == 8);
    CHECK(w.basis[0] == GradedIndex{0, 0});
    CHECK(w.basis[1] == GradedIndex{0, 1});
    // t^2 . t^2 = t^4 falls to the ideal; t^1 . t^2 = t^3 stays
    std::size_t i_t1 = 2, i_t2 = 4, i_t3 = 6;
    CHECK(w.basis[i_t2] == GradedIndex{2, 0});
    for (std::size_t k = 0; k < 8; ++k) CHECK(w.bundle.dot->c(i_t2, i_t2, k).is_zero());
    CHECK(w.bundle.dot->c(i_t1, i_t2, i_t3) == q("1"));

    // products that scatter grades cannot be quotient-embedded
    FamilyBinding bullet{std::nullopt, FamilyProduct::bullet, std::nullopt, std::nullopt};
    try {
        nova::embed_window(spec, bullet, {0, 3}, true);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("spreads basis products") != std::string::npos);
    }
    // and the floor may not dip below the shift
    CHECK_THROWS_AS(nova::embed_window(spec, bind, {-1, 3}, true), std::invalid_argument);
}

TEST_CASE("truncated indexed window is a polynomial algebra snapshot") {
    FamilySpec spec = FamilySpec::indexed(0, q("1"), q("2"));
    FamilyBinding bind{FamilyProduct::dot56, FamilyProduct::star, FamilyMap::alpha,
                       FamilyMap::del};
    nova::EmbeddedWindow w = nova::embed_window(spec, bind, {0, 3}, true);
    CHECK(w.bundle.dim == 4);
    CHECK(w.bundle.label == "indexed window [0,3] mod span{grade > 3}");
    // dot56 is the truncated polynomial product x_a x_b = x_{a+b}
    CHECK(w.bundle.dot->c(1, 2, 3) == q("1"));
    CHECK(w.bundle.dot->c(2, 2, 0).is_zero());
    // del is the weighted diagonal, alpha the geometric diagonal
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(w.bundle.del->m.at(j, j) == Scalar::from_int(static_cast<long long>(j), Q));
        CHECK(w.bundle.alpha->m.at(j, j) == q("2").pow(static_cast<long long>(j)));
    }
    CHECK(nova::validate(w.bundle, Kind::novikov_poisson).pass());

    // negative floor is fine when the index shift compensates
    nova::EmbeddedWindow w2 = nova::embed_window(indexed_q1(), bind, {-1, 3}, true);
    CHECK(w2.bundle.dim == 5);
    CHECK(w2.basis.front() == GradedIndex{-1, 0});

    // window too large for the dense tensor cap
    CHECK_THROWS_AS(nova::embed_window(indexed_q1(), bind, {0, 64}, true),
                    std::invalid_argument);
}
