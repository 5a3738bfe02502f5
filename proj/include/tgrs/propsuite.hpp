#ifndef TGRS_PROPSUITE_HPP
#define TGRS_PROPSUITE_HPP

#include <functional>
#include <random>

#include "tgrs/criteria.hpp"

namespace tgrs {

using Rng = std::mt19937_64;

FieldElement random_element(const Field& f, Rng& rng);
FieldElement random_nonzero(const Field& f, Rng& rng);
std::vector<FieldElement> random_distinct(const Field& f, size_t n, Rng& rng);

// Evaluation data with random distinct alpha. When normalized is set, v is
// drawn with v_i^2 = lambda u_i (the condition (i) of the theorems): always
// possible in characteristic 2; in odd characteristic alpha is redrawn until
// the quadratic character of u is constant. Predicate, when given, filters
// alpha by its sigma vector (rejection sampling).
EvalData random_eval(const Field& f, size_t n, Rng& rng, bool normalized,
                     const std::function<bool(const EvalData&)>& predicate = {});

// Unconstrained random instances (valid shapes, arbitrary v and eta).
TGRSInstance random_a1_instance(const Field& f, size_t n, size_t k, Rng& rng, bool normalized_v);
TGRSInstance random_a2_instance(const Field& f, size_t n, size_t k, Rng& rng, bool normalized_v);

// Instances engineered to satisfy the applicable theorem case, so the "true"
// branch of the checkers gets exercised. Each construction is independently
// validated by G G^T = 0 inside the differential suite.
std::optional<TGRSInstance> aimed_so_a1_instance(const Field& f, size_t n, size_t k, Rng& rng);
std::optional<TGRSInstance> aimed_so_a2_instance(const Field& f, size_t n, size_t k, Rng& rng);

struct SuiteResult {
    size_t checked = 0;
    size_t positives = 0;  // instances where the examined property's "true" side fired
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

using SoChecker = std::function<bool(const TGRSInstance&)>;

// Criterion-vs-GG^T differential suite over the given fields, n in [6, 12]
// clipped to the field size. counts are per twist family. A custom checker
// substitutes for check_so (used by the mutation self-test).
SuiteResult run_so_differential(const std::vector<const Field*>& fields, size_t count_a1, size_t count_a2,
                                uint64_t seed, const SoChecker& checker = {});

// G1 H1^T = 0, G2 H2^T = 0 and rank(H) = n-k on random valid instances.
SuiteResult run_parity_check_suite(const std::vector<const Field*>& fields, size_t count_per_family, uint64_t seed);

// is_mds == (min_distance == n-k+1) == (all k x k generator minors nonzero).
SuiteResult run_mds_equivalence_suite(const std::vector<const Field*>& fields, size_t count, uint64_t seed);

// reduce_leading_coeff(., t) == lambda_t for all t on random point sets, plus
// the complete-homogeneous brute force for small n, t.
SuiteResult run_lambda_suite(const std::vector<const Field*>& fields, size_t count, uint64_t seed);

// column-dependency min distance == exhaustive enumeration wherever q^k fits.
SuiteResult run_distance_oracle_suite(const std::vector<const Field*>& fields, size_t count, uint64_t seed,
                                      uint64_t enum_cap = 1ull << 20);

// Table-1 verdict grid: every Gamma-shape row and n-to-k relation, engineered
// condition-true families for the checkmark rows and shaped random families
// for the cross rows.
SuiteResult run_table1_sweep(uint64_t seed);

// brute-force complete homogeneous symmetric polynomial h_t(alpha), the
// independent oracle for lambda_t
FieldElement complete_homogeneous(const std::vector<FieldElement>& alpha, size_t t);

}  // namespace tgrs

#endif
