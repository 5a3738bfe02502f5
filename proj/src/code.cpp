#include "tgrs/code.hpp"

#include <algorithm>

namespace tgrs {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Combinations::Combinations(size_t n, size_t k) : n_(n), k_(k) {
    state_.resize(k);
    for (size_t i = 0; i < k; ++i) state_[i] = i;
}

bool Combinations::next(std::vector<size_t>& out) {
    if (k_ > n_) return false;
    if (first_) {
        first_ = false;
        out = state_;
        return true;
    }
    size_t i = k_;
    while (i-- > 0) {
        if (state_[i] + 1 <= n_ - k_ + i) {
            ++state_[i];
            for (size_t j = i + 1; j < k_; ++j) state_[j] = state_[j - 1] + 1;
            out = state_;
            return true;
        }
    }
    return false;
}

LinearCode::LinearCode(MatrixGF gen) : gen_(std::move(gen)) {
    if (gen_.rows() > gen_.cols()) fail("DimensionMismatch", "k must not exceed n");
    if (rank(gen_) != gen_.rows()) fail("RankDeficient", "generator matrix is not full rank");
}

LinearCode LinearCode::dual() const {
    MatrixGF kb = kernel(gen_);
    if (kb.rows() == 0) fail("DimensionMismatch", "dual of the full space has dimension 0");
    return LinearCode(kb);
}

bool LinearCode::contains(const MatrixGF& word) const {
    if (word.rows() != 1 || word.cols() != n()) fail("DimensionMismatch", "membership test needs a length-n row");
    return rank(gen_.stack_rows(word)) == k();
}

bool is_self_orthogonal(const LinearCode& c) { return (c.gen() * c.gen().transpose()).is_zero(); }

bool is_self_dual(const LinearCode& c) { return c.n() == 2 * c.k() && is_self_orthogonal(c); }

size_t hull_dim(const LinearCode& c) {
    MatrixGF dg = kernel(c.gen());
    if (dg.rows() == 0) return 0;
    return c.n() - rank(c.gen().stack_rows(dg));
}

int min_distance(const LinearCode& c, const Bounds& b) {
    if (c.n() > b.max_n) fail("BoundExceeded", "length exceeds the subset-search cap");
    if (c.k() == c.n()) return 1;  // full space
    MatrixGF h = c.dual().gen();
    size_t n = c.n();
    size_t limit = n - c.k() + 1;  // Singleton guarantees a dependency by here
    for (size_t w = 1; w <= limit; ++w) {
        Combinations comb(n, w);
        std::vector<size_t> idx;
        while (comb.next(idx)) {
            if (rank(h.select_cols(idx)) < w) return static_cast<int>(w);
        }
    }
    fail("BoundExceeded", "no column dependency found up to the Singleton bound");
}

int min_distance_by_enumeration(const LinearCode& c, const Bounds& b) {
    const Field& f = c.field();
    uint64_t total = 1;
    for (size_t i = 0; i < c.k(); ++i) {
        total *= f.size();
        if (total > b.max_enumeration) fail("BoundExceeded", "q^k exceeds the enumeration cap");
    }
    size_t n = c.n(), k = c.k();
    const MatrixGF& g = c.gen();
    std::vector<uint32_t> msg(k, 0);
    std::vector<uint32_t> word(n, 0);
    int best = static_cast<int>(n) + 1;
    // odometer over messages; the word is updated only for the digits that move
    for (uint64_t it = 1; it < total; ++it) {
        size_t pos = 0;
        while (true) {
            uint32_t old = msg[pos];
            uint32_t nxt = (old + 1) % f.size();
            msg[pos] = nxt;
            uint32_t delta = f.sub(nxt, old);
            for (size_t j = 0; j < n; ++j) {
                uint32_t gij = g.packed_at(pos, j);
                if (gij) word[j] = f.add(word[j], f.mul(delta, gij));
            }
            if (nxt != 0) break;
            ++pos;
        }
        int w = 0;
        for (size_t j = 0; j < n; ++j)
            if (word[j]) ++w;
        if (w < best) best = w;
    }
    return best;
}

// Coefficient rows y (over the dual generator) whose words y*Gd vanish outside the support set.
static MatrixGF dual_words_supported_in(const MatrixGF& dual_gen, const std::vector<size_t>& support) {
    size_t n = dual_gen.cols();
    std::vector<bool> in_s(n, false);
    for (size_t j : support) in_s[j] = true;
    std::vector<size_t> complement;
    for (size_t j = 0; j < n; ++j)
        if (!in_s[j]) complement.push_back(j);
    if (complement.empty()) return MatrixGF::identity(dual_gen.field(), dual_gen.rows());
    return kernel(dual_gen.select_cols(complement).transpose());
}

int weight_of_dual_minus_code(const LinearCode& c, const Bounds& b) {
    if (!is_self_orthogonal(c)) fail("NotSelfOrthogonal", "wt(C^perp \\ C) requires C inside C^perp");
    if (c.n() == 2 * c.k()) fail("QuantumUndefinedForSelfDual", "C^perp \\ C is empty for a self-dual code");
    LinearCode dual = c.dual();
    int d_primal = min_distance(c, b);
    int d_dual = min_distance(dual, b);
    // a minimum-weight dual word cannot lie in C when C's words are all heavier
    if (d_primal > d_dual) return d_dual;
    const Field& f = c.field();
    size_t n = c.n();
    auto full_support_outside_c = [&](const MatrixGF& z, const std::vector<size_t>& idx) {
        for (size_t j : idx)
            if (z.packed_at(0, j) == 0) return false;
        return !c.contains(z);
    };
    for (size_t w = static_cast<size_t>(d_dual); w <= n; ++w) {
        bool skipped_large_space = false;
        Combinations comb(n, w);
        std::vector<size_t> idx;
        while (comb.next(idx)) {
            MatrixGF ks = dual_words_supported_in(dual.gen(), idx);
            size_t dim = ks.rows();
            if (dim == 0) continue;
            if (dim > 2) {
                skipped_large_space = true;
                continue;
            }
            if (dim == 1) {
                if (full_support_outside_c(ks.row(0) * dual.gen(), idx)) return static_cast<int>(w);
            } else {
                // projective enumeration: y0 + t*y1 for all t, then y1 alone
                for (uint32_t t = 0; t < f.size(); ++t) {
                    MatrixGF y(f, 1, ks.cols());
                    for (size_t j = 0; j < ks.cols(); ++j)
                        y.set_packed(0, j, f.add(ks.packed_at(0, j), f.mul(t, ks.packed_at(1, j))));
                    if (full_support_outside_c(y * dual.gen(), idx)) return static_cast<int>(w);
                }
                if (full_support_outside_c(ks.row(1) * dual.gen(), idx)) return static_cast<int>(w);
            }
        }
        if (skipped_large_space)
            fail("UnsupportedInstance", "support subspace of dimension > 2 at weight " + std::to_string(w));
    }
    fail("UnsupportedInstance", "no dual word outside C found");
}

QuantumParams quantum_derive(const LinearCode& c, const Bounds& b) {
    if (!is_self_orthogonal(c)) fail("NotSelfOrthogonal", "quantum derivation requires a self-orthogonal code");
    if (c.n() == 2 * c.k()) fail("QuantumUndefinedForSelfDual", "n = 2k leaves no dual words outside C");
    QuantumParams q;
    q.n = c.n();
    q.kq = c.n() - 2 * c.k();
    q.dq = weight_of_dual_minus_code(c, b);
    q.saturates_singleton = (q.kq == q.n - 2 * static_cast<size_t>(q.dq) + 2);
    return q;
}

std::string mds_class_name(MdsClass m) {
    switch (m) {
        case MdsClass::MDS: return "MDS";
        case MdsClass::AMDS: return "AMDS";
        case MdsClass::NMDS: return "NMDS";
        default: return "other";
    }
}

CodeReport classify(const LinearCode& c, const Bounds& b) {
    CodeReport r{};
    r.n = c.n();
    r.k = c.k();
    r.d = min_distance(c, b);
    r.singleton_defect = static_cast<int>(r.n - r.k + 1) - r.d;
    if (c.k() < c.n()) {
        LinearCode dual = c.dual();
        r.dual_k = dual.k();
        r.dual_d = min_distance(dual, b);
        r.dual_defect = static_cast<int>(r.n - r.dual_k + 1) - r.dual_d;
    } else {
        r.dual_k = 0;
        r.dual_d = 0;
        r.dual_defect = 0;
    }
    if (r.singleton_defect == 0)
        r.mds_class = MdsClass::MDS;
    else if (r.singleton_defect == 1 && r.dual_defect == 1)
        r.mds_class = MdsClass::NMDS;
    else if (r.singleton_defect == 1)
        r.mds_class = MdsClass::AMDS;
    else
        r.mds_class = MdsClass::Other;
    r.self_orthogonal = is_self_orthogonal(c);
    r.self_dual = r.self_orthogonal && c.n() == 2 * c.k();
    r.hull_dim = hull_dim(c);
    return r;
}

}  // namespace tgrs
