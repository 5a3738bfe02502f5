#ifndef TGRS_TGRS_HPP
#define TGRS_TGRS_HPP

#include "tgrs/code.hpp"

namespace tgrs {

// Evaluation-point data shared by every construction: the points alpha, the
// column multipliers v, the signed coefficients sigma_i of prod(x - alpha_i)
// = sum sigma_i x^(n-i), the dual multipliers u_i = prod_{j!=i}(alpha_i -
// alpha_j)^-1, and the Lambda sequence solving the lower-triangular Toeplitz
// system sigma * Lambda = e_1.
struct EvalData {
    const Field* field = nullptr;
    std::vector<FieldElement> alpha;
    std::vector<FieldElement> v;
    std::vector<FieldElement> sigma;   // sigma[0..n], sigma[0] = 1
    std::vector<FieldElement> u;       // u[0..n-1]
    std::vector<FieldElement> lambda;  // lambda[0..n], lambda[0] = 1

    static EvalData make(const Field& f, std::vector<FieldElement> alpha, std::vector<FieldElement> v);
    size_t n() const noexcept { return alpha.size(); }
};

// Reduce x^(n-1+t) modulo prod(x - alpha_i) and return the coefficient of
// x^(n-1); equals lambda[t].
FieldElement reduce_leading_coeff(const EvalData& e, size_t t);

enum class TwistShape { A1, A2 };

// The two twist layouts the paper studies. A1 places a 2x2 block in the
// bottom-two rows / first-two columns of the k x (n-k) matrix A(eta); A2 fills
// the top row with eta_1..eta_{n-k} and requires eta_{n-k} != 0.
struct TwistMatrix {
    TwistShape shape;
    FieldElement e11, e12, e21, e22;  // A1 entries
    std::vector<FieldElement> row;    // A2 entries eta_1..eta_{n-k}

    static TwistMatrix a1(FieldElement e11, FieldElement e12, FieldElement e21, FieldElement e22);
    static TwistMatrix a2(std::vector<FieldElement> row);  // ZeroLeadingTwist if the last entry is 0
};

struct TGRSInstance {
    EvalData eval;
    size_t k = 0;
    TwistMatrix twist;

    static TGRSInstance make(EvalData eval, size_t k, TwistMatrix twist);
    size_t n() const noexcept { return eval.n(); }
    const Field& field() const { return *eval.field; }
};

// b_1..b_{n-k-1} of the C2 parity-check theorem:
//   b_1 = sigma_1 - eta_{n-k-1}/eta_{n-k},
//   b_i = sigma_i - eta_{n-k-i}/eta_{n-k} - sum_{j<i} sigma_{i-j} b_j.
// eta holds eta_1..eta_{n-k}; ZeroLeadingTwist when eta_{n-k} = 0.
std::vector<FieldElement> b_recursion(const std::vector<FieldElement>& sigma, const std::vector<FieldElement>& eta);

MatrixGF build_g1(const TGRSInstance& inst);  // ShapeMismatch unless A1
MatrixGF build_g2(const TGRSInstance& inst);  // ShapeMismatch unless A2
MatrixGF build_h1(const TGRSInstance& inst);
MatrixGF build_h2(const TGRSInstance& inst);
MatrixGF build_generator(const TGRSInstance& inst);     // dispatch on shape
MatrixGF build_parity_check(const TGRSInstance& inst);  // dispatch on shape

// The instance's k x (n-k) twist matrix A(eta) in dense form, for the MDS
// witness machinery.
MatrixGF full_twist_matrix(const TGRSInstance& inst);

LinearCode to_code(const TGRSInstance& inst);

}  // namespace tgrs

#endif
