#include "doctest.h"
#include "tgrs/gf.hpp"

#include <functional>
#include <random>

using namespace tgrs;

namespace {
bool throws_code(const std::function<void()>& fn, const std::string& code) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}
}  // namespace

TEST_CASE("field construction") {
    const Field& f8 = Field::get(2, 3, {1, 1, 0, 1});
    CHECK(f8.size() == 8);
    CHECK(f8.characteristic() == 2);

    // beta^3 = beta + 1 forced by the modulus
    FieldElement b = f8.from_coeffs({0, 1});
    CHECK(b * b * b == b + f8.one());

    const Field& f3 = Field::get(3, 1);
    CHECK(f3.size() == 3);
    CHECK(f3.from_int(2) + f3.from_int(2) == f3.one());

    const Field& f16 = Field::get(2, 4, {1, 0, 0, 1, 1});
    CHECK(f16.size() == 16);

    CHECK(throws_code([] { Field::get(4, 1); }, "NotPrime"));
    CHECK(throws_code([] { Field::get(2, 2, {1, 0, 1}); }, "NotIrreducible"));  // x^2+1 = (x+1)^2
}

TEST_CASE("default modulus is deterministic and irreducible") {
    const Field& a = Field::get(2, 4);
    const Field& b = Field::get(2, 4);
    CHECK(&a == &b);
    CHECK(a.modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});  // x^4+x+1 is the smallest
}

TEST_CASE("element arithmetic and inverses") {
    const Field& f8 = Field::get(2, 3, {1, 1, 0, 1});
    FieldElement b = f8.from_coeffs({0, 1});
    CHECK(b.pow(7) == f8.one());
    for (uint32_t v = 1; v < 8; ++v) {
        FieldElement a = f8.from_packed(v);
        CHECK(a * a.inverse() == f8.one());
    }
    CHECK(throws_code([&] { f8.zero().inverse(); }, "DivisionByZero"));

    const Field& f9 = Field::get(3, 2);
    const Field& f3 = Field::get(3, 1);
    CHECK(throws_code([&] { (void)(f9.one() + f3.one()); }, "FieldMismatch"));
}

TEST_CASE("lagrange and frobenius properties") {
    std::mt19937_64 rng(7);
    for (const Field* fp : {&Field::get(2, 4), &Field::get(3, 2), &Field::get(5, 2), &Field::get(7, 1)}) {
        const Field& f = *fp;
        for (uint32_t v = 1; v < f.size(); ++v)
            CHECK(f.pow(v, f.size() - 1) == 1);
        for (int trial = 0; trial < 50; ++trial) {
            FieldElement a = f.from_packed(static_cast<uint32_t>(rng() % f.size()));
            FieldElement b = f.from_packed(static_cast<uint32_t>(rng() % f.size()));
            CHECK((a + b).pow(f.characteristic()) == a.pow(f.characteristic()) + b.pow(f.characteristic()));
        }
    }
}

TEST_CASE("squares and square roots") {
    const Field& f8 = Field::get(2, 3, {1, 1, 0, 1});
    FieldElement b = f8.from_coeffs({0, 1});
    CHECK(f8.sqrt(b * b) == b);
    for (uint32_t v = 0; v < 8; ++v) {
        FieldElement a = f8.from_packed(v);
        CHECK(f8.sqrt(a).square() == a);
    }
    CHECK(throws_code([&] { f8.is_square(b); }, "CharTwo"));

    const Field& f7 = Field::get(7, 1);
    // squares mod 7 are {1, 2, 4}
    CHECK(f7.is_square(f7.from_int(2)));
    CHECK(!f7.is_square(f7.from_int(3)));
    CHECK(f7.is_square(f7.one()));
    CHECK(throws_code([&] { f7.sqrt(f7.from_int(3)); }, "NotASquare"));

    const Field& f3 = Field::get(3, 1);
    CHECK(f3.sqrt(f3.one()) == f3.one());  // canonical pick among {1, 2}

    const Field& f9 = Field::get(3, 2);
    FieldElement two = f9.from_int(2);
    bool found = false;
    for (uint32_t v = 0; v < 9; ++v)
        if (f9.from_packed(v).square() == two) found = true;
    CHECK(found);
    CHECK(f9.sqrt(two).square() == two);

    // sqrt(a)^2 = a on every square of a few odd-char fields
    for (const Field* fp : {&Field::get(3, 2), &Field::get(5, 2), &Field::get(7, 2)}) {
        const Field& f = *fp;
        for (uint32_t v = 0; v < f.size(); ++v) {
            FieldElement a = f.from_packed(v);
            if (v == 0 || f.is_square(a)) CHECK(f.sqrt(a).square() == a);
        }
    }
}

TEST_CASE("polynomial arithmetic, derivative, gcd, eval") {
    const Field& f5 = Field::get(5, 1);
    Polynomial g(f5, std::vector<uint32_t>{4, 0, 1});  // x^2 - 1
    Polynomial lin(f5, std::vector<uint32_t>{4, 1});   // x - 1
    CHECK(poly_gcd(g, lin) == lin.monic());

    const Field& f8 = Field::get(2, 3, {1, 1, 0, 1});
    Polynomial mod8(f8, std::vector<uint32_t>{1, 1, 0, 1});
    FieldElement b = f8.from_coeffs({0, 1});
    CHECK(mod8.eval(b).is_zero());

    // derivative of x^12 + 2x^11 + 2 over GF(3): the x^12 term dies, leaving -2x^10 = x^10... scaled by 11 = 2
    const Field& f3 = Field::get(3, 1);
    std::vector<uint32_t> c(13, 0);
    c[12] = 1;
    c[11] = 2;
    c[0] = 2;
    Polynomial g3(f3, c);
    Polynomial d = g3.derivative();
    CHECK(d.degree() == 10);
    CHECK(d.coeff(10) == f3.from_int(2 * 11));  // 22 mod 3 = 1 = -2 mod 3 = -b with b=2
    for (int i = 0; i < 10; ++i) CHECK(d.coeff(i).is_zero());

    Polynomial z(f5);
    CHECK(z.degree() == -1);
}

TEST_CASE("roots in field by exhaustive evaluation") {
    const Field& f5 = Field::get(5, 1);
    Polynomial g(f5, std::vector<uint32_t>{1, 0, 1});  // x^2 + 1
    auto r = poly_roots(g);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == f5.from_int(2));
    CHECK(r[1] == f5.from_int(3));

    const Field& f2 = Field::get(2, 1);
    Polynomial irr(f2, std::vector<uint32_t>{1, 1, 1});  // x^2+x+1
    CHECK(poly_roots(irr).empty());
}

TEST_CASE("splitting fields") {
    // (x-1)(x-2) over GF(5) splits in place
    const Field& f5 = Field::get(5, 1);
    Polynomial g(f5, {f5.from_int(1), f5.from_int(2)});
    g = Polynomial::from_roots(f5, {f5.from_int(1), f5.from_int(2)});
    auto res = splitting_field(g);
    CHECK(res.field == &f5);
    CHECK(res.steps == 1);
    CHECK(res.roots.size() == 2);

    // x^2+x+1 over GF(2) needs GF(4)
    const Field& f2 = Field::get(2, 1);
    Polynomial irr(f2, std::vector<uint32_t>{1, 1, 1});
    auto res2 = splitting_field(irr);
    CHECK(res2.field->size() == 4);
    CHECK(res2.roots.size() == 2);

    // minimality: for each proper divisor m' of the returned m the polynomial must not split
    const Field& f4 = Field::get(2, 2);
    // x^3 - 1 = (x-1)(x^2+x+1) over GF(4) splits at m=1
    Polynomial cube(f4, std::vector<uint32_t>{1, 0, 0, 1});
    auto res3 = splitting_field(cube);
    CHECK(res3.steps == 1);

    CHECK(throws_code([&] {
              Polynomial sq(f2, std::vector<uint32_t>{0, 0, 1});  // x^2, gcd(g,g') != 1
              splitting_field(sq);
          },
          "NotSquarefree"));
}

TEST_CASE("embedding is a ring homomorphism") {
    const Field& f4 = Field::get(2, 2);
    const Field& f16 = Field::get(2, 4);
    Embedding emb = Embedding::make(f4, f16);
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            FieldElement x = f4.from_packed(a), y = f4.from_packed(b);
            CHECK(emb.map(x * y) == emb.map(x) * emb.map(y));
            CHECK(emb.map(x + y) == emb.map(x) + emb.map(y));
        }
    CHECK(emb.map(f4.one()) == f16.one());
}

TEST_CASE("designated primitive element") {
    // the paper-style field: GF(8) with x^3+x+1 and beta = x primitive
    const Field& f8 = Field::get(2, 3, {1, 1, 0, 1}, {0, 1});
    CHECK(f8.has_designated_primitive());
    CHECK(f8.generator() == f8.from_coeffs({0, 1}));
    CHECK(f8.generator().str() == "b^1");
    CHECK(f8.gen_pow(3).str() == "b^3");
    CHECK(f8.gen_pow(3) == f8.from_coeffs({1, 1}));  // b^3 = b + 1
    CHECK(f8.zero().str() == "0");
    CHECK(throws_code([] { Field::get(2, 3, {1, 1, 0, 1}, {1, 0, 0}); }, "NotPrimitive"));  // 1 has order 1
}
