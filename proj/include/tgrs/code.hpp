#ifndef TGRS_CODE_HPP
#define TGRS_CODE_HPP

#include <optional>

#include "tgrs/fla.hpp"

namespace tgrs {

// Search limits for the exponential-time oracles. Every paper instance sits far
// below the defaults.
struct Bounds {
    size_t max_n = 20;                      // length cap for subset searches
    uint64_t max_enumeration = 1ull << 22;  // cap on q^k for full codeword enumeration
    uint64_t max_subsets = 2000000;         // cap on C(n,k) for the MDS witness loop
};

// [n,k] linear code given by a full-rank generator matrix.
class LinearCode {
  public:
    explicit LinearCode(MatrixGF gen);

    const Field& field() const { return gen_.field(); }
    size_t n() const noexcept { return gen_.cols(); }
    size_t k() const noexcept { return gen_.rows(); }
    const MatrixGF& gen() const noexcept { return gen_; }

    LinearCode dual() const;  // generator = canonical kernel basis
    bool contains(const MatrixGF& word) const;

  private:
    MatrixGF gen_;
};

bool is_self_orthogonal(const LinearCode& c);  // gen * gen^T = 0
bool is_self_dual(const LinearCode& c);
size_t hull_dim(const LinearCode& c);  // dim(C ∩ C^perp)

// Smallest w such that some w columns of a parity-check matrix are dependent.
// The parity check used is the dual's canonical generator, independent of any
// TGRS-specific formula.
int min_distance(const LinearCode& c, const Bounds& b = {});

// Independent oracle: exhaustive codeword enumeration. BoundExceeded when q^k
// is over the cap.
int min_distance_by_enumeration(const LinearCode& c, const Bounds& b = {});

enum class MdsClass { MDS, AMDS, NMDS, Other };
std::string mds_class_name(MdsClass m);

struct QuantumParams {
    size_t n;
    size_t kq;  // n - 2k
    int dq;     // wt(C^perp \ C)
    bool saturates_singleton;  // kq == n - 2 dq + 2
};

struct CodeReport {
    size_t n, k;
    int d;
    int singleton_defect;
    MdsClass mds_class;
    bool self_orthogonal;
    bool self_dual;
    size_t hull_dim;
    size_t dual_k;
    int dual_d;
    int dual_defect;
    std::optional<QuantumParams> quantum;
};

CodeReport classify(const LinearCode& c, const Bounds& b = {});

// Lemma-style derivation [[n, n-2k, wt(C^perp \ C)]] from a strictly
// self-orthogonal code. NotSelfOrthogonal / QuantumUndefinedForSelfDual.
QuantumParams quantum_derive(const LinearCode& c, const Bounds& b = {});

// wt(C^perp \ C) for C strictly inside C^perp. Exposed for direct testing.
int weight_of_dual_minus_code(const LinearCode& c, const Bounds& b = {});

// Ascending-order k-subset iterator over {0, ..., n-1}.
class Combinations {
  public:
    Combinations(size_t n, size_t k);
    bool next(std::vector<size_t>& out);  // false when exhausted

  private:
    size_t n_, k_;
    std::vector<size_t> state_;
    bool first_ = true;
};

uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace tgrs

#endif
