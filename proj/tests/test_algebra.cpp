#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nova/algebra.hpp"

using nova::Algebra;
using nova::BilinearForm;
using nova::Field;
using nova::LinearOperator;
using nova::Mat;
using nova::Scalar;
using nova::TensorEntry;
using nova::Vec;

namespace {

Scalar q(const char* s) { return Scalar::parse(s, Field::rationals()); }

/// Commutative algebra on {1, eps} with eps^2 = 0.
Algebra dual_numbers() {
    return nova::make_algebra(2,
                              {{0, 0, 0, q("1")}, {0, 1, 1, q("1")}, {1, 0, 1, q("1")}},
                              Field::rationals(), "dual numbers");
}

}  // namespace

TEST_CASE("structure constants drive the product") {
    Algebra a = dual_numbers();
    CHECK(a.dim() == 2);
    CHECK(a.c(0, 1, 1).is_one());
    CHECK(a.c(1, 1, 0).is_zero());
    CHECK(nova::vec_str(a.basis_product(0, 1)) == "(0, 1)");

    // (1 + eps)^2 = 1 + 2 eps
    Vec x = {q("1"), q("1")};
    CHECK(nova::vec_str(nova::multiply(a, x, x)) == "(1, 2)");
    CHECK(nova::is_zero_vec(
        nova::multiply(a, nova::basis_vec(2, 1, a.field()), nova::basis_vec(2, 1, a.field()))));
}

TEST_CASE("tensor construction rejects bad input") {
    Field f = Field::rationals();
    CHECK_THROWS_AS(nova::make_algebra(65, {}, f), std::invalid_argument);
    CHECK_NOTHROW(nova::make_algebra(64, {}, f));
    CHECK_THROWS_AS(nova::make_algebra(2, {{2, 0, 0, q("1")}}, f), std::out_of_range);
    CHECK_THROWS_AS(
        nova::make_algebra(2, {{0, 0, 0, q("1")}, {0, 0, 0, q("2")}}, f),
        std::invalid_argument);  // duplicate position
    CHECK_THROWS_AS(nova::make_algebra(2, {{0, 0, 0, Scalar::residue(5, 1)}}, f),
                    std::invalid_argument);  // entry mode differs from field
    CHECK_THROWS_AS(dual_numbers().c(0, 0, 2), std::out_of_range);
}

TEST_CASE("associator vanishes exactly when the product associates") {
    Algebra a = dual_numbers();
    Field f = a.field();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(nova::is_zero_vec(nova::associator(a, nova::basis_vec(2, i, f),
                                                         nova::basis_vec(2, j, f),
                                                         nova::basis_vec(2, k, f))));

    // e0 e0 = e1, e1 e0 = e0 does not associate
    Algebra b = nova::make_algebra(2, {{0, 0, 1, q("1")}, {1, 0, 0, q("1")}}, f);
    Vec e0 = nova::basis_vec(2, 0, f);
    CHECK(nova::vec_str(nova::associator(b, e0, e0, e0)) == "(1, 0)");
}

TEST_CASE("operators use the column convention") {
    Field f = Field::rationals();
    Mat m(2, 2, f);
    m.at(0, 1) = q("3");  // map(e1) = 3 e0
    LinearOperator op{m, "test"};
    CHECK(nova::vec_str(op.apply(nova::basis_vec(2, 1, f))) == "(3, 0)");
    CHECK(LinearOperator::identity(2, f).apply({q("4"), q("5")}) == Vec{q("4"), q("5")});
}

TEST_CASE("bilinear forms evaluate on coordinates") {
    Field f = Field::rationals();
    Mat b(2, 2, f);
    b.at(0, 1) = q("1");
    b.at(1, 0) = q("1");
    BilinearForm form{b, "pairing"};
    CHECK(form.eval({q("1"), q("2")}, {q("3"), q("4")}) == q("10"));  // 1*4 + 2*3
    CHECK(form.eval(nova::basis_vec(2, 0, f), nova::basis_vec(2, 0, f)).is_zero());
}

TEST_CASE("bundles cross-check their components") {
    Algebra a = dual_numbers();
    Field f = a.field();
    CHECK_NOTHROW(nova::make_bundle(2, f, a, std::nullopt, std::nullopt, std::nullopt,
                                    std::nullopt));
    CHECK_THROWS_AS(nova::make_bundle(3, f, a, std::nullopt, std::nullopt, std::nullopt,
                                      std::nullopt),
                    std::invalid_argument);  // dimension mismatch
    CHECK_THROWS_AS(nova::make_bundle(2, Field::gf(5), a, std::nullopt, std::nullopt,
                                      std::nullopt, std::nullopt),
                    std::invalid_argument);  // field mismatch
    LinearOperator wrong{Mat(3, 3, f), ""};
    CHECK_THROWS_AS(nova::make_bundle(2, f, a, std::nullopt, wrong, std::nullopt, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("composing a map onto every product") {
    Algebra a = dual_numbers();
    Mat m(2, 2, a.field());
    m.at(0, 0) = q("2");
    m.at(1, 1) = q("3");
    Algebra scaled = nova::compose_product(LinearOperator{m, ""}, a);
    CHECK(scaled.c(0, 0, 0) == q("2"));
    CHECK(scaled.c(0, 1, 1) == q("3"));
    CHECK(scaled.c(1, 0, 1) == q("3"));
    CHECK(scaled.c(1, 1, 0).is_zero());
}

TEST_CASE("commutator tensor antisymmetrizes the product") {
    Field f = Field::rationals();
    // e0 e1 = e0, all other products zero
    Algebra a = nova::make_algebra(2, {{0, 1, 0, q("1")}}, f);
    Algebra br = nova::commutator_tensor(a);
    CHECK(br.c(0, 1, 0).is_one());
    CHECK(br.c(1, 0, 0) == q("-1"));
    CHECK(br.c(0, 0, 0).is_zero());
    CHECK(nova::commutator_tensor(dual_numbers()) ==
          Algebra(2, f));  // commutative input gives the zero bracket
}
