#include "tgrs/criteria.hpp"

namespace tgrs {

std::optional<FieldElement> lambda_condition(const EvalData& e) {
    FieldElement lam = e.v[0].square() / e.u[0];
    for (size_t i = 1; i < e.n(); ++i)
        if (e.v[i].square() != lam * e.u[i]) return std::nullopt;
    if (lam.is_zero()) return std::nullopt;
    return lam;
}

namespace {

void push(std::vector<ConditionCheck>& out, const std::string& name, const FieldElement& lhs,
          const FieldElement& rhs) {
    out.push_back({name, lhs.str(), rhs.str(), lhs == rhs});
}

void push_lambda(std::vector<ConditionCheck>& out, const EvalData& e) {
    auto lam = lambda_condition(e);
    out.push_back({"lambda-condition: v_i^2 = lambda u_i", lam ? lam->str() : "none", "some lambda != 0",
                   lam.has_value()});
}

bool all_ok(const std::vector<ConditionCheck>& cs) {
    for (const auto& c : cs)
        if (!c.ok) return false;
    return true;
}

}  // namespace

SODecision check_block_so(const TGRSInstance& inst) {
    if (inst.twist.shape != TwistShape::A1) fail("ShapeMismatch", "check_block_so needs an A1 instance");
    const Field& f = inst.field();
    size_t n = inst.n(), k = inst.k;
    if (2 * k > n) fail("CaseNotCovered", "a self-orthogonal code needs k <= n/2");
    const FieldElement s1 = inst.eval.sigma[1], s2 = inst.eval.sigma[2], s3 = inst.eval.sigma[3];
    const FieldElement h11 = inst.twist.e11, h12 = inst.twist.e12, h21 = inst.twist.e21, h22 = inst.twist.e22;
    const FieldElement two = f.from_int(2);
    const FieldElement zero = f.zero();

    SODecision d;
    std::vector<ConditionCheck>& cs = d.conditions;
    push_lambda(cs, inst.eval);

    if (2 * k + 4 <= n) {
        d.applicable_case = "block case 1 (k <= (n-4)/2)";
    } else if (2 * k + 3 == n) {
        d.applicable_case = "block case 2 (n odd, k = (n-3)/2)";
        push(cs, "eta12 = 0", h12, zero);
        push(cs, "eta22 = 0", h22, zero);
    } else if (2 * k + 2 == n) {
        d.applicable_case = "block case 3 (n even, k = (n-2)/2)";
        push(cs, "eta12 (eta12 sigma1 - 2 eta11) = 0", h12 * (h12 * s1 - two * h11), zero);
        push(cs, "eta22 (eta22 sigma1 - 2 eta21) = 0", h22 * (h22 * s1 - two * h21), zero);
        push(cs, "eta12 eta22 sigma1 = eta11 eta22 + eta12 eta21", h12 * h22 * s1, h11 * h22 + h12 * h21);
    } else if (2 * k + 1 == n || 2 * k == n) {
        // cases 4 and 5 test a 2x2 matrix identity built from sigma1..sigma3
        const FieldElement q = s1 * s1 - s2;
        MatrixGF h1p(f, 2, 2);
        h1p.set(0, 0, -h22);
        h1p.set(0, 1, -h12);
        h1p.set(1, 0, -h21);
        h1p.set(1, 1, -h11);
        MatrixGF lhs(f, 2, 2), a(f, 2, 2);
        if (2 * k + 1 == n) {
            d.applicable_case = "block case 4 (n odd, k = (n-1)/2)";
            lhs.set(0, 0, h12);
            lhs.set(1, 0, h22);
            a.set(0, 0, h12 * q - h11 * s1);
            a.set(0, 1, h11 - h12 * s1);
            a.set(1, 0, f.one() + h22 * q - h21 * s1);
            a.set(1, 1, h21 - h22 * s1);
        } else {
            d.applicable_case = "block case 5 (n = 2k, self-dual)";
            const FieldElement r = two * s1 * s2 - s1 * s1 * s1 - s3;
            lhs.set(0, 0, h11 - h12 * s1);
            lhs.set(0, 1, h12);
            lhs.set(1, 0, h21 - h22 * s1);
            lhs.set(1, 1, h22);
            a.set(0, 0, f.one() + h11 * q + h12 * r);
            a.set(0, 1, h12 * q - h11 * s1);
            a.set(1, 0, -s1 + h21 * q + h22 * r);
            a.set(1, 1, f.one() + h22 * q - h21 * s1);
        }
        MatrixGF rhs = a * h1p;
        static const char* names[2][2] = {{"matrix-condition (1,1)", "matrix-condition (1,2)"},
                                          {"matrix-condition (2,1)", "matrix-condition (2,2)"}};
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) push(cs, names[i][j], lhs.at(i, j), rhs.at(i, j));
    } else {
        fail("CaseNotCovered", "no theorem case matches (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    d.verdict = all_ok(cs);
    return d;
}

SODecision check_line_so(const TGRSInstance& inst) {
    if (inst.twist.shape != TwistShape::A2) fail("ShapeMismatch", "check_line_so needs an A2 instance");
    const Field& f = inst.field();
    size_t n = inst.n(), k = inst.k, r = n - k;
    if (2 * k > n) fail("CaseNotCovered", "a self-orthogonal code needs k <= n/2");
    const auto& sg = inst.eval.sigma;
    const auto& eta = inst.twist.row;  // eta[i-1] = eta_i
    const FieldElement two = f.from_int(2);

    SODecision d;
    std::vector<ConditionCheck>& cs = d.conditions;
    push_lambda(cs, inst.eval);

    for (size_t i = 1; i + 1 <= k; ++i)
        push(cs, "eta_{n-k-" + std::to_string(i) + "} = eta_{n-k} sigma_" + std::to_string(i), eta[r - i - 1],
             eta[r - 1] * sg[i]);

    if (2 * k == n) {
        d.applicable_case = "line case 2 (n = 2k, self-dual)";
        push(cs, "eta_k sigma_{n-1} = 2", eta[r - 1] * sg[n - 1], two);
    } else {
        d.applicable_case = "line case 1 (k <= (n-1)/2)";
        auto b = b_recursion(sg, eta);
        FieldElement acc = eta[r - 1] * sg[n - 1];
        for (size_t i = 1; i <= n - 2 * k; ++i)
            acc = acc + (eta[i - 1] - eta[r - 1] * sg[r - i]) * b[k + i - 2];  // b_{k+i-1}
        push(cs, "eta_{n-k} sigma_{n-1} + sum (eta_i - eta_{n-k} sigma_{n-k-i}) b_{k+i-1} = 2", acc, two);
    }
    d.verdict = all_ok(cs);
    return d;
}

SODecision check_so(const TGRSInstance& inst) {
    return inst.twist.shape == TwistShape::A1 ? check_block_so(inst) : check_line_so(inst);
}

bool so_oracle_agree(const TGRSInstance& inst) {
    MatrixGF g = build_generator(inst);
    bool direct = (g * g.transpose()).is_zero();
    return check_so(inst).verdict == direct;
}

FieldElement mds_witness(const EvalData& e, const MatrixGF& twist, const std::vector<size_t>& I) {
    const Field& f = *e.field;
    size_t n = e.n();
    size_t k = twist.rows();
    size_t r = twist.cols();
    if (r != n - k || k < 3 || k >= n) fail("BadSubset", "twist matrix must be k x (n-k) with 3 <= k < n");
    if (I.size() != k) fail("BadSubset", "I must have exactly k indices");
    std::vector<bool> seen(n, false);
    for (size_t idx : I) {
        if (idx >= n || seen[idx]) fail("BadSubset", "indices must be distinct and within range");
        seen[idx] = true;
    }

    // G(x) = prod_{i in I} (x - alpha_i) = c_0 x^k + ... + c_k, c_0 = 1
    std::vector<FieldElement> pts;
    for (size_t idx : I) pts.push_back(e.alpha[idx]);
    Polynomial gx = Polynomial::from_roots(f, pts);
    std::vector<FieldElement> c(k + 1);
    for (size_t i = 0; i <= k; ++i) c[i] = gx.coeff(k - i);
    std::vector<FieldElement> dcoef(k + 1);  // d_j = c_{k-j}
    for (size_t j = 0; j <= k; ++j) dcoef[j] = c[k - j];

    // companion matrix A_I and the (k,k) entries of its powers up to n-k-1
    MatrixGF a(f, k, k);
    for (size_t i = 0; i + 1 < k; ++i) a.set(i, i + 1, f.one());
    for (size_t j = 0; j < k; ++j) a.set(k - 1, j, -c[k - j]);
    std::vector<FieldElement> corner(r);  // (A_I^j)_{k,k}
    MatrixGF power = MatrixGF::identity(f, k);
    for (size_t j = 0; j < r; ++j) {
        corner[j] = power.at(k - 1, k - 1);
        if (j + 1 < r) power = power * a;
    }

    // g_{mt} = -sum_j a_{mt}^{t+j} (A_I^j)_{k,k}, with
    // a_{mt}^l = sum_{i+j=l, 1<=i<=n-k, 0<=j<=t-1} eta_{mi} d_j
    MatrixGF m = MatrixGF::identity(f, k);
    for (size_t mm = 1; mm <= k; ++mm) {
        bool row_zero = true;
        for (size_t i = 0; i < r; ++i)
            if (twist.packed_at(mm - 1, i)) row_zero = false;
        if (row_zero) continue;
        for (size_t t = 1; t <= k; ++t) {
            FieldElement g_mt = f.zero();
            for (size_t j = 0; j < r; ++j) {
                size_t l = t + j;
                FieldElement al = f.zero();
                for (size_t i = 1; i <= r && i <= l; ++i) {
                    size_t jj = l - i;
                    if (jj <= t - 1 && jj <= k) al = al + twist.at(mm - 1, i - 1) * dcoef[jj];
                }
                g_mt = g_mt + al * corner[j];
            }
            m.set(mm - 1, t - 1, m.at(mm - 1, t - 1) - g_mt);
        }
    }
    return det(m);
}

bool is_mds(const TGRSInstance& inst, const Bounds& b) {
    size_t n = inst.n(), k = inst.k;
    if (k < 3) fail("BadSubset", "the MDS witness needs k >= 3");
    if (binomial(n, k) > b.max_subsets) fail("BoundExceeded", "C(n,k) exceeds the subset cap");
    MatrixGF twist = full_twist_matrix(inst);
    Combinations comb(n, k);
    std::vector<size_t> idx;
    while (comb.next(idx)) {
        if (mds_witness(inst.eval, twist, idx).is_zero()) return false;
    }
    return true;
}

namespace {

// subset-dependent c_1..c_3 of G(x) = prod_{i in I}(x - alpha_i)
std::vector<FieldElement> subset_cs(const EvalData& e, const std::vector<size_t>& I, size_t upto) {
    const Field& f = *e.field;
    std::vector<FieldElement> pts;
    for (size_t idx : I) pts.push_back(e.alpha[idx]);
    Polynomial gx = Polynomial::from_roots(f, pts);
    std::vector<FieldElement> c(upto + 1, f.zero());
    for (size_t i = 1; i <= upto; ++i) c[i] = gx.coeff(I.size() - i);
    return c;
}

}  // namespace

std::optional<bool> mds_shortcut_row(const TGRSInstance& inst, const Bounds& b) {
    if (inst.twist.shape != TwistShape::A1 || !inst.twist.e11.is_zero() || !inst.twist.e12.is_zero())
        return std::nullopt;
    size_t n = inst.n(), k = inst.k;
    if (k < 3) return std::nullopt;
    if (binomial(n, k) > b.max_subsets) fail("BoundExceeded", "C(n,k) exceeds the subset cap");
    const Field& f = inst.field();
    Combinations comb(n, k);
    std::vector<size_t> idx;
    while (comb.next(idx)) {
        auto c = subset_cs(inst.eval, idx, 2);
        FieldElement val = inst.twist.e21 * c[1] + inst.twist.e22 * (c[2] - c[1] * c[1]);
        if (val == f.one()) return false;
    }
    return true;
}

std::optional<bool> mds_shortcut_col(const TGRSInstance& inst, const Bounds& b) {
    if (inst.twist.shape != TwistShape::A1 || !inst.twist.e11.is_zero() || !inst.twist.e21.is_zero())
        return std::nullopt;
    size_t n = inst.n(), k = inst.k;
    if (k < 3) return std::nullopt;
    if (binomial(n, k) > b.max_subsets) fail("BoundExceeded", "C(n,k) exceeds the subset cap");
    const Field& f = inst.field();
    const FieldElement n1 = inst.twist.e12, n2 = inst.twist.e22;
    Combinations comb(n, k);
    std::vector<size_t> idx;
    while (comb.next(idx)) {
        auto c = subset_cs(inst.eval, idx, 3);
        FieldElement val = f.one() + n1 * (c[1] * c[2] - c[3]) + n2 * (c[1] * c[1] - c[2]) +
                           n1 * n2 * c[1] * c[2] * (c[1] * c[1] + c[2] - n1 * c[2] - f.one());
        if (val.is_zero()) return false;
    }
    return true;
}

}  // namespace tgrs
