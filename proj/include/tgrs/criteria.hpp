#ifndef TGRS_CRITERIA_HPP
#define TGRS_CRITERIA_HPP

#include "tgrs/tgrs.hpp"

namespace tgrs {

// One named sub-condition of a self-orthogonality theorem, with both evaluated
// sides kept for failure forensics.
struct ConditionCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool ok;
};

struct SODecision {
    std::string applicable_case;  // e.g. "block case 3"
    bool verdict;
    std::vector<ConditionCheck> conditions;

    std::vector<ConditionCheck> failed() const {
        std::vector<ConditionCheck> f;
        for (const auto& c : conditions)
            if (!c.ok) f.push_back(c);
        return f;
    }
};

// The lambda of condition (i): the constant v_i^2 / u_i, if it exists.
std::optional<FieldElement> lambda_condition(const EvalData& e);

// Self-orthogonality decision for C1 (A1 twist), five cases keyed by (n, k).
// CaseNotCovered when k > n/2.
SODecision check_block_so(const TGRSInstance& inst);

// Self-orthogonality / self-duality decision for C2 (A2 twist), two cases.
SODecision check_line_so(const TGRSInstance& inst);

SODecision check_so(const TGRSInstance& inst);  // dispatch on twist shape

// Criterion verdict vs. the direct G * G^T test on the built generator.
bool so_oracle_agree(const TGRSInstance& inst);

// The witness determinant M(n, k, alpha, A(eta), I) for one k-subset I
// (0-based indices into alpha). twist is the dense k x (n-k) matrix A(eta).
FieldElement mds_witness(const EvalData& e, const MatrixGF& twist, const std::vector<size_t>& I);

// MDS decision: witness nonzero for every k-subset. BoundExceeded past the
// C(n,k) cap.
bool is_mds(const TGRSInstance& inst, const Bounds& b = {});

// Specialized nonvanishing predicates for the bottom-row and second-column A1
// shapes, quantified over all I; nullopt when the twist does not match the
// shape. Asserted equal to is_mds on their shapes in the tests.
std::optional<bool> mds_shortcut_row(const TGRSInstance& inst, const Bounds& b = {});
std::optional<bool> mds_shortcut_col(const TGRSInstance& inst, const Bounds& b = {});

}  // namespace tgrs

#endif
