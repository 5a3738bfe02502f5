#include "tgrs/tgrs.hpp"

#include <set>

namespace tgrs {

EvalData EvalData::make(const Field& f, std::vector<FieldElement> alpha, std::vector<FieldElement> v) {
    size_t n = alpha.size();
    if (n < 2) fail("InvalidDimensions", "need at least two evaluation points");
    if (v.size() != n) fail("InvalidDimensions", "alpha and v must have equal length");
    std::set<uint32_t> seen;
    for (const auto& a : alpha) {
        if (&a.field() != &f) fail("FieldMismatch", "alpha entry from another field");
        if (!seen.insert(a.packed()).second) fail("DuplicateAlpha", "evaluation points must be distinct");
    }
    for (const auto& x : v) {
        if (&x.field() != &f) fail("FieldMismatch", "v entry from another field");
        if (x.is_zero()) fail("ZeroV", "column multipliers must be nonzero");
    }

    EvalData e;
    e.field = &f;
    e.alpha = std::move(alpha);
    e.v = std::move(v);

    // sigma by incremental multiplication: prod(x - alpha_i) = sum sigma_i x^(n-i)
    Polynomial m = Polynomial::from_roots(f, e.alpha);
    e.sigma.resize(n + 1);
    for (size_t i = 0; i <= n; ++i) e.sigma[i] = m.coeff(n - i);

    // u_i as the closed product
    e.u.resize(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement prod = f.one();
        for (size_t j = 0; j < n; ++j)
            if (j != i) prod = prod * (e.alpha[i] - e.alpha[j]);
        e.u[i] = prod.inverse();
    }

    // Lambda by forward substitution on the Toeplitz system (sigma_0 = 1)
    e.lambda.resize(n + 1);
    e.lambda[0] = f.one();
    for (size_t t = 1; t <= n; ++t) {
        FieldElement acc = f.zero();
        for (size_t j = 1; j <= t; ++j) acc = acc + e.sigma[j] * e.lambda[t - j];
        e.lambda[t] = -acc;
    }
    return e;
}

FieldElement reduce_leading_coeff(const EvalData& e, size_t t) {
    const Field& f = *e.field;
    size_t n = e.n();
    if (t > n) fail("InvalidDimensions", "t must lie in [0, n]");
    Polynomial m = Polynomial::from_roots(f, e.alpha);
    Polynomial rem = Polynomial::x_pow(f, n - 1 + t) % m;
    return rem.coeff(n - 1);
}

TwistMatrix TwistMatrix::a1(FieldElement e11, FieldElement e12, FieldElement e21, FieldElement e22) {
    TwistMatrix t;
    t.shape = TwistShape::A1;
    t.e11 = e11;
    t.e12 = e12;
    t.e21 = e21;
    t.e22 = e22;
    return t;
}

TwistMatrix TwistMatrix::a2(std::vector<FieldElement> row) {
    if (row.empty()) fail("InvalidDimensions", "A2 needs at least one entry");
    if (row.back().is_zero()) fail("ZeroLeadingTwist", "A2 requires eta_{n-k} != 0");
    TwistMatrix t;
    t.shape = TwistShape::A2;
    t.row = std::move(row);
    return t;
}

TGRSInstance TGRSInstance::make(EvalData eval, size_t k, TwistMatrix twist) {
    size_t n = eval.n();
    if (k < 2 || k >= n) fail("InvalidDimensions", "need 2 <= k < n");
    if (twist.shape == TwistShape::A1) {
        if (n - k < 2) fail("InvalidDimensions", "A1 needs n - k >= 2");
        const Field& f = *eval.field;
        for (const FieldElement* e : {&twist.e11, &twist.e12, &twist.e21, &twist.e22})
            if (&e->field() != &f) fail("FieldMismatch", "twist entry from another field");
    } else {
        if (twist.row.size() != n - k) fail("InvalidDimensions", "A2 row must have n - k entries");
        for (const auto& e : twist.row)
            if (&e.field() != eval.field) fail("FieldMismatch", "twist entry from another field");
    }
    TGRSInstance inst;
    inst.eval = std::move(eval);
    inst.k = k;
    inst.twist = std::move(twist);
    return inst;
}

// powers[j][i] = alpha_j^i for 0 <= i <= maxdeg
static std::vector<std::vector<FieldElement>> alpha_powers(const EvalData& e, size_t maxdeg) {
    std::vector<std::vector<FieldElement>> p(e.n());
    for (size_t j = 0; j < e.n(); ++j) {
        p[j].resize(maxdeg + 1);
        p[j][0] = e.field->one();
        for (size_t i = 1; i <= maxdeg; ++i) p[j][i] = p[j][i - 1] * e.alpha[j];
    }
    return p;
}

MatrixGF build_g1(const TGRSInstance& inst) {
    if (inst.twist.shape != TwistShape::A1) fail("ShapeMismatch", "build_g1 needs an A1 instance");
    const Field& f = inst.field();
    size_t n = inst.n(), k = inst.k;
    auto pw = alpha_powers(inst.eval, k + 1);
    MatrixGF g(f, k, n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i + 2 < k; ++i) g.set(i, j, inst.eval.v[j] * pw[j][i]);
        FieldElement hook1 = pw[j][k - 2] + inst.twist.e11 * pw[j][k] + inst.twist.e12 * pw[j][k + 1];
        FieldElement hook2 = pw[j][k - 1] + inst.twist.e21 * pw[j][k] + inst.twist.e22 * pw[j][k + 1];
        g.set(k - 2, j, inst.eval.v[j] * hook1);
        g.set(k - 1, j, inst.eval.v[j] * hook2);
    }
    if (rank(g) != k) fail("RankDeficient", "degenerate twist: generator rank below k");
    return g;
}

MatrixGF build_g2(const TGRSInstance& inst) {
    if (inst.twist.shape != TwistShape::A2) fail("ShapeMismatch", "build_g2 needs an A2 instance");
    const Field& f = inst.field();
    size_t n = inst.n(), k = inst.k;
    auto pw = alpha_powers(inst.eval, n - 1);
    MatrixGF g(f, k, n);
    for (size_t j = 0; j < n; ++j) {
        FieldElement top = f.one();
        for (size_t i = 1; i <= n - k; ++i) top = top + inst.twist.row[i - 1] * pw[j][k - 1 + i];
        g.set(0, j, inst.eval.v[j] * top);
        for (size_t i = 1; i < k; ++i) g.set(i, j, inst.eval.v[j] * pw[j][i]);
    }
    if (rank(g) != k) fail("RankDeficient", "degenerate twist: generator rank below k");
    return g;
}

MatrixGF build_h1(const TGRSInstance& inst) {
    if (inst.twist.shape != TwistShape::A1) fail("ShapeMismatch", "build_h1 needs an A1 instance");
    const Field& f = inst.field();
    size_t n = inst.n(), k = inst.k, r = n - k;
    const auto& sg = inst.eval.sigma;
    auto pw = alpha_powers(inst.eval, std::max<size_t>(r + 2, 4));
    MatrixGF h(f, r, n);
    for (size_t j = 0; j < n; ++j) {
        FieldElement uv = inst.eval.u[j] / inst.eval.v[j];
        for (size_t i = 0; i + 2 < r; ++i) h.set(i, j, uv * pw[j][i]);
        // S_i(alpha) = sum_{t=0}^{4-i} sigma_t alpha^{4-i-t}, i = 1, 2
        FieldElement s1 = sg[0] * pw[j][3] + sg[1] * pw[j][2] + sg[2] * pw[j][1] + sg[3];
        FieldElement s2 = sg[0] * pw[j][2] + sg[1] * pw[j][1] + sg[2];
        FieldElement row_a = f.one() - (inst.twist.e12 * s1 + inst.twist.e22 * s2);
        FieldElement row_b = (sg[0] * pw[j][1] + sg[1]) - (inst.twist.e11 * s1 + inst.twist.e21 * s2);
        h.set(r - 2, j, uv * pw[j][r - 2] * row_a);
        h.set(r - 1, j, uv * pw[j][r - 2] * row_b);
    }
    return h;
}

std::vector<FieldElement> b_recursion(const std::vector<FieldElement>& sigma, const std::vector<FieldElement>& eta) {
    size_t r = eta.size();  // n - k
    if (r == 0) fail("InvalidDimensions", "empty twist row");
    if (eta.back().is_zero()) fail("ZeroLeadingTwist", "b recursion requires eta_{n-k} != 0");
    std::vector<FieldElement> b;
    if (r == 1) return b;
    FieldElement lead_inv = eta.back().inverse();
    b.resize(r - 1);
    for (size_t i = 1; i <= r - 1; ++i) {
        FieldElement acc = sigma[i] - eta[r - i - 1] * lead_inv;  // eta_{n-k-i} is eta[r-i-1]
        for (size_t j = 1; j < i; ++j) acc = acc - sigma[i - j] * b[j - 1];
        b[i - 1] = acc;
    }
    return b;
}

MatrixGF build_h2(const TGRSInstance& inst) {
    if (inst.twist.shape != TwistShape::A2) fail("ShapeMismatch", "build_h2 needs an A2 instance");
    const Field& f = inst.field();
    size_t n = inst.n(), k = inst.k, r = n - k;
    const auto& sg = inst.eval.sigma;
    auto b = b_recursion(sg, inst.twist.row);
    auto pw = alpha_powers(inst.eval, n - 1);
    MatrixGF h(f, r, n);
    FieldElement lead = inst.twist.row.back();
    for (size_t j = 0; j < n; ++j) {
        FieldElement uv = inst.eval.u[j] / inst.eval.v[j];
        FieldElement t = f.zero();  // sum_{i=0}^{n-1} sigma_{n-1-i} alpha^i
        for (size_t i = 0; i < n; ++i) t = t + sg[n - 1 - i] * pw[j][i];
        h.set(0, j, uv * (f.one() - lead * t));
        for (size_t i = 1; i < r; ++i) h.set(i, j, uv * (b[i - 1] + pw[j][i]));
    }
    return h;
}

MatrixGF build_generator(const TGRSInstance& inst) {
    return inst.twist.shape == TwistShape::A1 ? build_g1(inst) : build_g2(inst);
}

MatrixGF build_parity_check(const TGRSInstance& inst) {
    return inst.twist.shape == TwistShape::A1 ? build_h1(inst) : build_h2(inst);
}

MatrixGF full_twist_matrix(const TGRSInstance& inst) {
    const Field& f = inst.field();
    size_t k = inst.k, r = inst.n() - inst.k;
    MatrixGF a(f, k, r);
    if (inst.twist.shape == TwistShape::A1) {
        a.set(k - 2, 0, inst.twist.e11);
        a.set(k - 2, 1, inst.twist.e12);
        a.set(k - 1, 0, inst.twist.e21);
        a.set(k - 1, 1, inst.twist.e22);
    } else {
        for (size_t j = 0; j < r; ++j) a.set(0, j, inst.twist.row[j]);
    }
    return a;
}

LinearCode to_code(const TGRSInstance& inst) { return LinearCode(build_generator(inst)); }

}  // namespace tgrs
