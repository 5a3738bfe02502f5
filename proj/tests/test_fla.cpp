#include "doctest.h"
#include "tgrs/fla.hpp"

#include <random>

using namespace tgrs;

namespace {
MatrixGF random_matrix(const Field& f, size_t r, size_t c, std::mt19937_64& rng) {
    MatrixGF m(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set_packed(i, j, static_cast<uint32_t>(rng() % f.size()));
    return m;
}

// cofactor-expansion determinant, the independent oracle for det()
FieldElement det_cofactor(const MatrixGF& m) {
    const Field& f = m.field();
    size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    FieldElement acc = f.zero();
    for (size_t j = 0; j < n; ++j) {
        if (m.packed_at(0, j) == 0) continue;
        MatrixGF sub(f, n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t jj = 0; jj < n; ++jj) {
                if (jj == j) continue;
                sub.set_packed(i - 1, cc++, m.packed_at(i, jj));
            }
        }
        FieldElement term = m.at(0, j) * det_cofactor(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}
}  // namespace

TEST_CASE("rref basics") {
    const Field& f5 = Field::get(5, 1);
    CHECK(rank(MatrixGF::identity(f5, 3)) == 3);
    MatrixGF z(f5, 2, 4);
    CHECK(rank(z) == 0);

    const Field& f7 = Field::get(7, 1);
    MatrixGF v(f7, 2, 3);
    uint32_t rows[2][3] = {{1, 1, 1}, {1, 2, 4}};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) v.set_packed(i, j, rows[i][j]);
    CHECK(rank(v) == 2);
    // 2x2 minor (columns 0,1) is 2-1 = 1 != 0
    CHECK(det(v.select_cols({0, 1})) == f7.one());
}

TEST_CASE("rref is idempotent and rank(M) = rank(M^T)") {
    std::mt19937_64 rng(11);
    for (const Field* fp : {&Field::get(2, 3), &Field::get(5, 1), &Field::get(3, 2)}) {
        for (int trial = 0; trial < 20; ++trial) {
            MatrixGF m = random_matrix(*fp, 3 + rng() % 3, 3 + rng() % 4, rng);
            auto r1 = rref(m);
            CHECK(rref(r1.r).r == r1.r);
            CHECK(rank(m) == rank(m.transpose()));
        }
    }
}

TEST_CASE("kernel") {
    const Field& f2 = Field::get(2, 1);
    MatrixGF m(f2, 1, 2);
    m.set_packed(0, 0, 1);
    m.set_packed(0, 1, 1);
    MatrixGF k = kernel(m);
    REQUIRE(k.rows() == 1);
    CHECK(k.packed_at(0, 0) == 1);
    CHECK(k.packed_at(0, 1) == 1);

    const Field& f5 = Field::get(5, 1);
    CHECK(kernel(MatrixGF::identity(f5, 3)).rows() == 0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Field& f = Field::get(3, 2);
        MatrixGF m2 = random_matrix(f, 2 + rng() % 3, 4 + rng() % 3, rng);
        MatrixGF k2 = kernel(m2);
        CHECK(k2.rows() + rank(m2) == m2.cols());
        if (k2.rows() > 0) CHECK((m2 * k2.transpose()).is_zero());
    }
}

TEST_CASE("det against cofactor oracle, multiplicativity, singular") {
    std::mt19937_64 rng(17);
    for (const Field* fp : {&Field::get(2, 3), &Field::get(7, 1), &Field::get(3, 2)}) {
        const Field& f = *fp;
        CHECK(det(MatrixGF::identity(f, 4)) == f.one());
        for (int trial = 0; trial < 20; ++trial) {
            size_t n = 2 + rng() % 3;
            MatrixGF a = random_matrix(f, n, n, rng);
            MatrixGF b = random_matrix(f, n, n, rng);
            CHECK(det(a) == det_cofactor(a));
            CHECK(det(a * b) == det(a) * det(b));
        }
        // repeated row forces det 0
        MatrixGF s = random_matrix(f, 3, 3, rng);
        for (size_t j = 0; j < 3; ++j) s.set_packed(2, j, s.packed_at(0, j));
        CHECK(det(s).is_zero());
    }
}
