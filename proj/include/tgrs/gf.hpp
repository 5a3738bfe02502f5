#ifndef TGRS_GF_HPP
#define TGRS_GF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tgrs {

// Error with a stable machine-readable code ("NotIrreducible", "FieldMismatch", ...).
// The CLI maps codes to exit statuses; tests match on them.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

[[noreturn]] void fail(const std::string& code, const std::string& msg);

class Field;

// Element of a finite field GF(p^h). The value is the coefficient vector of the
// residue class, packed in base p with the constant term as least significant digit.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const Field* f, uint32_t packed) : f_(f), v_(packed) {}

    const Field& field() const;
    bool valid() const noexcept { return f_ != nullptr; }
    uint32_t packed() const noexcept { return v_; }
    std::vector<uint32_t> coeffs() const;
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement pow(long long e) const;
    FieldElement inverse() const;
    FieldElement square() const { return *this * *this; }

    // "b^e" when the field has a registered primitive element, coefficient list otherwise
    std::string str() const;

  private:
    const Field* f_ = nullptr;
    uint32_t v_ = 0;
};

// Immutable finite field GF(p^h) with exp/log tables over a generator.
// Instances are interned: Field::get returns a reference that stays valid for
// the lifetime of the process, so elements can hold plain pointers.
class Field {
  public:
    // modulus: ascending coefficients of a monic degree-h irreducible over GF(p);
    // empty selects the lexicographically smallest one. primitive: packed
    // coefficients of a designated generator; empty means "none registered"
    // (an internal generator is still found for the tables).
    static const Field& get(uint32_t p, uint32_t h, const std::vector<uint32_t>& modulus = {},
                            const std::vector<uint32_t>& primitive = {});

    uint32_t characteristic() const noexcept { return p_; }
    uint32_t degree() const noexcept { return h_; }
    uint32_t size() const noexcept { return q_; }
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }
    bool has_designated_primitive() const noexcept { return designated_; }
    FieldElement generator() const { return FieldElement(this, gen_); }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, q_ > 1 ? 1u : 0u); }
    FieldElement from_packed(uint32_t v) const;
    FieldElement from_coeffs(const std::vector<uint32_t>& c) const;
    FieldElement from_int(long long c) const;  // constant c mod p
    FieldElement gen_pow(long long e) const;   // generator^e

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, long long e) const;

    // discrete log with respect to the table generator
    uint32_t dlog(uint32_t a) const;

    // quadratic character a^((q-1)/2) = 1; CharTwo in characteristic 2
    bool is_square(FieldElement a) const;
    // canonical square root: char 2 uses a^(2^(h-1)); odd char Tonelli-Shanks,
    // returning the lexicographically smaller of {r, -r} (ascending coeff order)
    FieldElement sqrt(FieldElement a) const;

    std::string element_str(uint32_t v) const;
    std::string name() const;  // e.g. "GF(2^3)"

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(uint32_t p, uint32_t h, std::vector<uint32_t> modulus, std::vector<uint32_t> primitive);

    uint32_t mul_poly(uint32_t a, uint32_t b) const;  // table-free schoolbook, used during setup
    uint32_t pow_poly(uint32_t a, uint64_t e) const;
    bool lex_less(uint32_t a, uint32_t b) const;  // ascending-coeff lexicographic order

    uint32_t p_, h_, q_;
    std::vector<uint32_t> modulus_;
    uint32_t gen_ = 0;
    bool designated_ = false;
    std::vector<uint32_t> exp_;  // exp_[i] = gen^i, i in [0, q-1)
    std::vector<uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
    std::vector<uint32_t> pw_;   // pw_[i] = p^i
};

// Dense univariate polynomial over a Field, trailing zeros stripped.
// degree() of the zero polynomial is -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Field& f) : f_(&f) {}
    Polynomial(const Field& f, std::vector<uint32_t> packed_coeffs);
    Polynomial(const Field& f, const std::vector<FieldElement>& coeffs);
    static Polynomial x_pow(const Field& f, size_t n);  // monomial x^n
    static Polynomial from_roots(const Field& f, const std::vector<FieldElement>& roots);

    const Field& field() const;
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    FieldElement coeff(size_t i) const;
    FieldElement leading() const;
    const std::vector<uint32_t>& packed_coeffs() const noexcept { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator%(const Polynomial& o) const;
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const;
    Polynomial derivative() const;
    FieldElement eval(const FieldElement& x) const;
    std::string str(const std::string& var = "x") const;

  private:
    void strip();
    const Field* f_ = nullptr;
    std::vector<uint32_t> c_;
};

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);  // monic gcd
Polynomial poly_powmod(const Polynomial& base, uint64_t e, const Polynomial& mod);
bool poly_squarefree(const Polynomial& g);  // gcd(g, g') constant (and g' != 0)

// Ring homomorphism GF(p^h) -> GF(p^H), h | H, sending the residue class of x
// to a chosen root of the subfield modulus in the superfield.
class Embedding {
  public:
    static std::vector<FieldElement> modulus_roots(const Field& sub, const Field& sup);
    static Embedding make(const Field& sub, const Field& sup);  // smallest root, lex order
    static Embedding with_root(const Field& sub, const Field& sup, FieldElement root);

    const Field& sub() const { return *sub_; }
    const Field& sup() const { return *sup_; }
    FieldElement root() const { return root_; }
    FieldElement map(const FieldElement& a) const;
    Polynomial map(const Polynomial& g) const;

  private:
    Embedding(const Field* sub, const Field* sup, FieldElement root);
    void verify_homomorphism() const;
    const Field* sub_;
    const Field* sup_;
    FieldElement root_;
};

// All distinct roots of g in its own field, found by exhaustive evaluation.
// FieldTooLarge beyond the configured cap. Sorted by packed value.
std::vector<FieldElement> poly_roots(const Polynomial& g);

struct SplittingResult {
    const Field* field;  // GF(p^(t*m)), smallest extension where g splits
    Embedding emb;       // base field into the splitting field
    std::vector<FieldElement> roots;
    uint32_t steps;  // the multiplier m
};

// Smallest m with g splitting over GF(p^(t*m)), tested via x^(q^m) = x (mod g).
// NotSquarefree if gcd(g, g') != 1; SplittingFieldTooLarge past the size cap.
SplittingResult splitting_field(const Polynomial& g, const std::vector<uint32_t>& field_modulus = {},
                                const std::vector<uint32_t>& field_primitive = {});

// Global field-size cap (elements); default 2^20, overridable via TGRS_MAX_FIELD.
uint64_t field_size_cap();
void set_field_size_cap(uint64_t cap);

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);

}  // namespace tgrs

#endif
