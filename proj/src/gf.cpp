#include "tgrs/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace tgrs {

void fail(const std::string& code, const std::string& msg) { throw Error(code, msg); }

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

static uint64_t g_field_cap = 0;

uint64_t field_size_cap() {
    if (g_field_cap == 0) {
        g_field_cap = 1u << 20;
        if (const char* env = std::getenv("TGRS_MAX_FIELD")) {
            char* end = nullptr;
            uint64_t v = std::strtoull(env, &end, 10);
            if (end != env && v >= 2) g_field_cap = v;
        }
    }
    return g_field_cap;
}

void set_field_size_cap(uint64_t cap) { g_field_cap = cap; }

/* ---------- bootstrap polynomial arithmetic over GF(p), coefficients as ints ---------- */

namespace {

using IVec = std::vector<uint32_t>;

void istrip(IVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IVec imul(const IVec& a, const IVec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    IVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
    istrip(r);
    return r;
}

uint32_t iinv_mod(uint32_t a, uint32_t p) {
    // extended Euclid on small ints
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

IVec imod(IVec a, const IVec& m, uint32_t p) {
    istrip(a);
    uint32_t lead_inv = iinv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        uint64_t c = uint64_t(a.back()) * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = c * m[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        istrip(a);
        if (a.empty()) break;
    }
    return a;
}

IVec imulmod(const IVec& a, const IVec& b, const IVec& m, uint32_t p) { return imod(imul(a, b, p), m, p); }

IVec ipowmod(IVec base, uint64_t e, const IVec& m, uint32_t p) {
    IVec r{1};
    base = imod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = imulmod(r, base, m, p);
        base = imulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

IVec igcd(IVec a, IVec b, uint32_t p) {
    istrip(a);
    istrip(b);
    while (!b.empty()) {
        IVec r = imod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint32_t li = iinv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<uint32_t>(uint64_t(c) * li % p);
    }
    return a;
}

// Rabin test: f of degree h monic is irreducible over GF(p) iff x^(p^h) = x (mod f)
// and gcd(x^(p^(h/r)) - x, f) = 1 for every prime r | h.
bool irreducible_over_gfp(const IVec& f, uint32_t p) {
    size_t h = f.size() - 1;
    if (h == 0) return false;
    if (h == 1) return true;
    IVec x{0, 1};
    auto frob_iterate = [&](size_t m) {
        IVec t = imod(x, f, p);
        for (size_t i = 0; i < m; ++i) t = ipowmod(t, p, f, p);
        return t;
    };
    IVec xqh = frob_iterate(h);
    if (xqh != imod(x, f, p)) return false;
    for (uint64_t r : prime_factors(h)) {
        IVec t = frob_iterate(h / r);
        // t - x
        IVec diff = t;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        istrip(diff);
        IVec g = igcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

/* ---------- Field ---------- */

FieldElement Field::from_packed(uint32_t v) const {
    if (v >= q_) fail("BadElement", "packed value out of range");
    return FieldElement(this, v);
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > h_) fail("BadElement", "too many coefficients for " + name());
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) fail("BadElement", "coefficient not reduced mod p");
        v = v * p_ + c[i];
    }
    return FieldElement(this, v);
}

FieldElement Field::from_int(long long c) const {
    long long r = c % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return FieldElement(this, static_cast<uint32_t>(r));
}

FieldElement Field::gen_pow(long long e) const {
    if (q_ == 2) return one();
    long long m = static_cast<long long>(q_ - 1);
    long long r = e % m;
    if (r < 0) r += m;
    return FieldElement(this, exp_[static_cast<size_t>(r)]);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t r = 0;
    for (uint32_t i = 0; i < h_; ++i) {
        uint32_t da = (a / pw_[i]) % p_;
        uint32_t db = (b / pw_[i]) % p_;
        r += ((da + db) % p_) * pw_[i];
    }
    return r;
}

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t r = 0;
    for (uint32_t i = 0; i < h_; ++i) {
        uint32_t da = (a / pw_[i]) % p_;
        r += ((p_ - da) % p_) * pw_[i];
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = uint64_t(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[static_cast<size_t>(e)];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero in " + name());
    uint32_t e = log_[a];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow(uint32_t a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        fail("DivisionByZero", "negative power of zero");
    }
    long long m = static_cast<long long>(q_ - 1);
    if (m == 0) return 1;  // GF(2): only nonzero element is 1
    long long r = (static_cast<long long>(log_[a]) * (e % m)) % m;
    if (r < 0) r += m;
    return exp_[static_cast<size_t>(r)];
}

uint32_t Field::dlog(uint32_t a) const {
    if (a == 0) fail("DivisionByZero", "discrete log of zero");
    return log_[a];
}

bool Field::is_square(FieldElement a) const {
    if (p_ == 2) fail("CharTwo", "every element of " + name() + " is a square");
    if (a.packed() == 0) return true;
    return pow(a.packed(), (q_ - 1) / 2) == 1;
}

bool Field::lex_less(uint32_t a, uint32_t b) const {
    for (uint32_t i = 0; i < h_; ++i) {
        uint32_t da = (a / pw_[i]) % p_;
        uint32_t db = (b / pw_[i]) % p_;
        if (da != db) return da < db;
    }
    return false;
}

FieldElement Field::sqrt(FieldElement a) const {
    if (&a.field() != this) fail("FieldMismatch", "sqrt argument from another field");
    uint32_t av = a.packed();
    if (av == 0) return zero();
    if (p_ == 2) return FieldElement(this, pow(av, static_cast<long long>(q_ / 2)));
    if (!is_square(a)) fail("NotASquare", a.str() + " is not a square in " + name());
    // Tonelli-Shanks: q - 1 = 2^s * m with m odd
    uint32_t s = 0;
    uint64_t m = q_ - 1;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }
    uint32_t r, t, c;
    if (s == 1) {
        r = pow(av, static_cast<long long>((q_ + 1) / 4));
    } else {
        uint32_t z = 0;
        for (uint32_t cand = 1; cand < q_; ++cand) {
            if (pow(cand, (q_ - 1) / 2) != 1) {
                z = cand;
                break;
            }
        }
        uint32_t big_m = s;
        c = pow(z, static_cast<long long>(m));
        t = pow(av, static_cast<long long>(m));
        r = pow(av, static_cast<long long>((m + 1) / 2));
        while (t != 1) {
            uint32_t i = 0;
            uint32_t tt = t;
            while (tt != 1) {
                tt = mul(tt, tt);
                ++i;
            }
            uint32_t b = c;
            for (uint32_t j = 0; j + i + 1 < big_m; ++j) b = mul(b, b);
            big_m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    uint32_t other = neg(r);
    return FieldElement(this, lex_less(r, other) ? r : other);
}

uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
    // schoolbook multiply of packed coefficient vectors, reduced by the modulus
    std::vector<uint32_t> prod(2 * h_, 0);
    for (uint32_t i = 0; i < h_; ++i) {
        uint32_t da = (a / pw_[i]) % p_;
        if (!da) continue;
        for (uint32_t j = 0; j < h_; ++j) {
            uint32_t db = (b / pw_[j]) % p_;
            prod[i + j] = (prod[i + j] + da * db) % p_;
        }
    }
    for (size_t d = 2 * h_; d-- > h_;) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < h_; ++i) {
            uint32_t sub = c * modulus_[i] % p_;
            prod[d - h_ + i] = (prod[d - h_ + i] + p_ - sub) % p_;
        }
    }
    uint32_t r = 0;
    for (uint32_t i = h_; i-- > 0;) r = r * p_ + prod[i];
    return r;
}

uint32_t Field::pow_poly(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1;
    }
    return r;
}

Field::Field(uint32_t p, uint32_t h, std::vector<uint32_t> modulus, std::vector<uint32_t> primitive) : p_(p), h_(h) {
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (h < 1) fail("BadDegree", "extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > field_size_cap()) fail("FieldTooLarge", "GF(" + std::to_string(p) + "^" + std::to_string(h) + ") exceeds the field-size cap");
    }
    q_ = static_cast<uint32_t>(q);
    pw_.resize(h + 1);
    pw_[0] = 1;
    for (uint32_t i = 1; i <= h; ++i) pw_[i] = pw_[i - 1] * p;

    if (!modulus.empty()) {
        if (modulus.size() != h + 1 || modulus.back() != 1) fail("BadModulus", "modulus must be monic of degree h");
        for (uint32_t c : modulus)
            if (c >= p) fail("BadModulus", "modulus coefficient not reduced mod p");
        IVec f(modulus.begin(), modulus.end());
        if (!irreducible_over_gfp(f, p)) fail("NotIrreducible", "modulus factors over GF(" + std::to_string(p) + ")");
        modulus_ = std::move(modulus);
    } else {
        // lexicographically smallest monic irreducible: scan low-coefficient tuples
        for (uint32_t low = 0;; ++low) {
            if (low >= q_) fail("NotIrreducible", "no irreducible modulus found");
            IVec f(h + 1, 0);
            uint32_t t = low;
            for (uint32_t i = 0; i < h; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[h] = 1;
            if (irreducible_over_gfp(f, p)) {
                modulus_.assign(f.begin(), f.end());
                break;
            }
        }
    }

    // generator for the exp/log tables: the designated primitive if given, else
    // the first element (by packed value) of order q-1
    auto order_ok = [&](uint32_t g) {
        if (g == 0) return false;
        if (q_ == 2) return g == 1;
        if (pow_poly(g, q_ - 1) != 1) return false;
        for (uint64_t r : prime_factors(q_ - 1))
            if (pow_poly(g, (q_ - 1) / r) == 1) return false;
        return true;
    };
    if (!primitive.empty()) {
        uint32_t g = 0;
        for (size_t i = primitive.size(); i-- > 0;) {
            if (primitive[i] >= p) fail("BadElement", "primitive coefficient not reduced");
            g = g * p + primitive[i];
        }
        if (!order_ok(g)) fail("NotPrimitive", "designated element does not generate the multiplicative group");
        gen_ = g;
        designated_ = true;
    } else {
        for (uint32_t g = (q_ == 2 ? 1u : 2u);; ++g) {
            if (g >= q_) fail("NotPrimitive", "no generator found");
            if (order_ok(g)) {
                gen_ = g;
                break;
            }
        }
    }

    exp_.resize(q_ - 1 > 0 ? q_ - 1 : 1);
    log_.assign(q_, 0);
    uint32_t cur = 1;
    bool gen_is_x = (h_ > 1 && gen_ == p_);
    for (uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        if (gen_is_x) {
            // multiply by x: shift digits, reduce the overflow against the modulus
            uint64_t t = uint64_t(cur) * p_;
            uint32_t carry = static_cast<uint32_t>(t / pw_[h_]);
            uint32_t base = static_cast<uint32_t>(t % pw_[h_]);
            if (carry) {
                uint32_t r = 0;
                for (uint32_t d = h_; d-- > 0;) {
                    uint32_t db = (base / pw_[d]) % p_;
                    uint32_t sub = carry * modulus_[d] % p_;
                    r = r * p_ + (db + p_ - sub) % p_;
                }
                base = r;
            }
            cur = base;
        } else {
            cur = mul_poly(cur, gen_);
        }
    }
    if (q_ > 2 && cur != 1) fail("NotPrimitive", "generator order check failed");
    if (q_ == 2) {
        exp_[0] = 1;
        log_[1] = 0;
    }
}

const Field& Field::get(uint32_t p, uint32_t h, const std::vector<uint32_t>& modulus,
                        const std::vector<uint32_t>& primitive) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>, std::vector<uint32_t>>,
                    std::unique_ptr<Field>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, h, modulus, primitive);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto f = std::unique_ptr<Field>(new Field(p, h, modulus, primitive));
        it = cache.emplace(std::move(key), std::move(f)).first;
    }
    return *it->second;
}

std::string Field::element_str(uint32_t v) const {
    if (v == 0) return "0";
    if (designated_) {
        uint32_t e = log_[v];
        if (e == 0) return "b^0";
        return "b^" + std::to_string(e);
    }
    std::ostringstream os;
    os << "[";
    for (uint32_t i = 0; i < h_; ++i) {
        if (i) os << ",";
        os << (v / pw_[i]) % p_;
    }
    os << "]";
    return os.str();
}

std::string Field::name() const {
    if (h_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(h_) + ")";
}

/* ---------- FieldElement ---------- */

const Field& FieldElement::field() const {
    if (!f_) fail("FieldMismatch", "uninitialized field element");
    return *f_;
}

std::vector<uint32_t> FieldElement::coeffs() const {
    const Field& f = field();
    std::vector<uint32_t> c(f.degree());
    uint32_t v = v_;
    for (auto& d : c) {
        d = v % f.characteristic();
        v /= f.characteristic();
    }
    return c;
}

static void check_same(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) fail("FieldMismatch", "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(f_, f_->add(v_, o.v_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(f_, f_->sub(v_, o.v_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(f_, f_->mul(v_, o.v_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(f_, f_->div(v_, o.v_));
}

FieldElement FieldElement::operator-() const { return FieldElement(f_, field().neg(v_)); }

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(*this, o);
    return v_ == o.v_;
}

FieldElement FieldElement::pow(long long e) const { return FieldElement(f_, field().pow(v_, e)); }

FieldElement FieldElement::inverse() const { return FieldElement(f_, field().inv(v_)); }

std::string FieldElement::str() const { return field().element_str(v_); }

/* ---------- Polynomial ---------- */

Polynomial::Polynomial(const Field& f, std::vector<uint32_t> packed_coeffs) : f_(&f), c_(std::move(packed_coeffs)) {
    for (uint32_t v : c_)
        if (v >= f.size()) fail("BadElement", "packed coefficient out of range");
    strip();
}

Polynomial::Polynomial(const Field& f, const std::vector<FieldElement>& coeffs) : f_(&f) {
    c_.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (&e.field() != &f) fail("FieldMismatch", "polynomial coefficient from another field");
        c_.push_back(e.packed());
    }
    strip();
}

Polynomial Polynomial::x_pow(const Field& f, size_t n) {
    std::vector<uint32_t> c(n + 1, 0);
    c[n] = 1;
    return Polynomial(f, std::move(c));
}

Polynomial Polynomial::from_roots(const Field& f, const std::vector<FieldElement>& roots) {
    Polynomial r(f, std::vector<uint32_t>{1});
    for (const auto& a : roots) {
        if (&a.field() != &f) fail("FieldMismatch", "root from another field");
        Polynomial lin(f, std::vector<uint32_t>{f.neg(a.packed()), 1});
        r = r * lin;
    }
    return r;
}

const Field& Polynomial::field() const {
    if (!f_) fail("FieldMismatch", "uninitialized polynomial");
    return *f_;
}

void Polynomial::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement Polynomial::coeff(size_t i) const {
    const Field& f = field();
    if (i >= c_.size()) return f.zero();
    return FieldElement(&f, c_[i]);
}

FieldElement Polynomial::leading() const {
    if (is_zero()) return field().zero();
    return FieldElement(f_, c_.back());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (f_ != o.f_) fail("FieldMismatch", "polynomials over different fields");
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t a = i < c_.size() ? c_[i] : 0;
        uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        r[i] = f_->add(a, b);
    }
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (f_ != o.f_) fail("FieldMismatch", "polynomials over different fields");
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t a = i < c_.size() ? c_[i] : 0;
        uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        r[i] = f_->sub(a, b);
    }
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (f_ != o.f_) fail("FieldMismatch", "polynomials over different fields");
    if (is_zero() || o.is_zero()) return Polynomial(*f_);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Polynomial(*f_, std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& o) const {
    if (f_ != o.f_) fail("FieldMismatch", "polynomials over different fields");
    if (o.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    std::vector<uint32_t> rem = c_;
    std::vector<uint32_t> quo;
    int dq = degree() - o.degree();
    if (dq < 0) return {Polynomial(*f_), *this};
    quo.assign(dq + 1, 0);
    uint32_t lead_inv = f_->inv(o.c_.back());
    for (int d = degree(); d >= o.degree();) {
        uint32_t c = f_->mul(rem[d], lead_inv);
        size_t shift = d - o.degree();
        quo[shift] = c;
        for (size_t i = 0; i < o.c_.size(); ++i) rem[shift + i] = f_->sub(rem[shift + i], f_->mul(c, o.c_[i]));
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        d = static_cast<int>(rem.size()) - 1;
    }
    return {Polynomial(*f_, std::move(quo)), Polynomial(*f_, std::move(rem))};
}

Polynomial Polynomial::operator%(const Polynomial& o) const { return divmod(o).second; }

bool Polynomial::operator==(const Polynomial& o) const { return f_ == o.f_ && c_ == o.c_; }

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    uint32_t li = f_->inv(c_.back());
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], li);
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial(field());
    std::vector<uint32_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        uint32_t scale = static_cast<uint32_t>(i % f_->characteristic());
        uint32_t v = 0;
        for (uint32_t j = 0; j < scale; ++j) v = f_->add(v, c_[i]);
        r[i - 1] = v;
    }
    return Polynomial(*f_, std::move(r));
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    const Field& f = field();
    if (&x.field() != &f) fail("FieldMismatch", "evaluation point from another field");
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x.packed()), c_[i]);
    return FieldElement(&f, acc);
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = f_->element_str(c_[i]);
        if (i == 0) {
            os << cs;
        } else {
            if (c_[i] != 1) os << cs << " ";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Polynomial poly_powmod(const Polynomial& base, uint64_t e, const Polynomial& mod) {
    Polynomial r(base.field(), std::vector<uint32_t>{1});
    Polynomial b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

bool poly_squarefree(const Polynomial& g) {
    Polynomial d = g.derivative();
    if (d.is_zero()) return false;
    return poly_gcd(g, d).degree() == 0;
}

/* ---------- roots and splitting fields ---------- */

std::vector<FieldElement> poly_roots(const Polynomial& g) {
    const Field& f = g.field();
    if (g.is_zero()) fail("BadElement", "root finding on the zero polynomial");
    if (f.size() > field_size_cap()) fail("FieldTooLarge", "exhaustive root search beyond the cap");
    std::vector<FieldElement> roots;
    for (uint32_t v = 0; v < f.size(); ++v) {
        FieldElement x(&f, v);
        if (g.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

/* ---------- Embedding ---------- */

Embedding::Embedding(const Field* sub, const Field* sup, FieldElement root) : sub_(sub), sup_(sup), root_(root) {
    verify_homomorphism();
}

std::vector<FieldElement> Embedding::modulus_roots(const Field& sub, const Field& sup) {
    if (sub.characteristic() != sup.characteristic()) fail("FieldMismatch", "embedding needs equal characteristic");
    if (sup.degree() % sub.degree() != 0) fail("FieldMismatch", "subfield degree must divide superfield degree");
    // the subfield modulus, coefficients lifted to the prime subfield of sup
    std::vector<uint32_t> lifted;
    for (uint32_t c : sub.modulus()) lifted.push_back(c);  // constants embed as themselves
    Polynomial m(sup, lifted);
    return poly_roots(m);
}

Embedding Embedding::make(const Field& sub, const Field& sup) {
    auto roots = modulus_roots(sub, sup);
    if (roots.empty()) fail("FieldMismatch", "subfield modulus has no root in " + sup.name());
    return Embedding(&sub, &sup, roots.front());
}

Embedding Embedding::with_root(const Field& sub, const Field& sup, FieldElement root) {
    return Embedding(&sub, &sup, root);
}

void Embedding::verify_homomorphism() const {
    // root must satisfy the subfield modulus
    std::vector<uint32_t> lifted(sub_->modulus().begin(), sub_->modulus().end());
    Polynomial m(*sup_, lifted);
    if (!m.eval(root_).is_zero()) fail("FieldMismatch", "embedding root does not satisfy the subfield modulus");
    // spot-check multiplicativity and additivity on a deterministic sample
    uint32_t step = std::max<uint32_t>(1, sub_->size() / 7);
    for (uint32_t a = 1; a < sub_->size(); a += step) {
        for (uint32_t b = 1; b < sub_->size(); b += step) {
            FieldElement fa(sub_, a), fb(sub_, b);
            if (map(fa * fb) != map(fa) * map(fb)) fail("FieldMismatch", "embedding is not multiplicative");
            if (map(fa + fb) != map(fa) + map(fb)) fail("FieldMismatch", "embedding is not additive");
        }
    }
}

FieldElement Embedding::map(const FieldElement& a) const {
    if (&a.field() != sub_) fail("FieldMismatch", "embedding argument not in the subfield");
    FieldElement acc = sup_->zero();
    auto c = a.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * root_ + sup_->from_int(c[i]);
    return acc;
}

Polynomial Embedding::map(const Polynomial& g) const {
    std::vector<FieldElement> c;
    for (int i = 0; i <= g.degree(); ++i) c.push_back(map(g.coeff(i)));
    return Polynomial(*sup_, c);
}

SplittingResult splitting_field(const Polynomial& g, const std::vector<uint32_t>& field_modulus,
                                const std::vector<uint32_t>& field_primitive) {
    const Field& base = g.field();
    if (g.degree() < 1) fail("BadElement", "splitting field of a constant");
    Polynomial d = g.derivative();
    if (d.is_zero() || poly_gcd(g, d).degree() != 0) fail("NotSquarefree", "gcd(g, g') != 1");
    uint64_t q0 = base.size();
    Polynomial gm = g.monic();
    Polynomial x = Polynomial::x_pow(base, 1);
    Polynomial frob = x % gm;
    uint32_t m = 0;
    uint64_t size = 1;
    for (;;) {
        ++m;
        size *= q0;
        if (size > field_size_cap()) fail("SplittingFieldTooLarge", "splitting field exceeds the field-size cap");
        frob = poly_powmod(frob, q0, gm);
        if (frob == x % gm) break;
    }
    const Field& ext = Field::get(base.characteristic(), base.degree() * m, field_modulus, field_primitive);
    Embedding emb = Embedding::make(base, ext);
    Polynomial lifted = emb.map(gm);
    auto roots = poly_roots(lifted);
    if (roots.size() != static_cast<size_t>(gm.degree()))
        fail("NotSquarefree", "polynomial does not split with distinct roots in the computed field");
    return SplittingResult{&ext, emb, std::move(roots), m};
}

}  // namespace tgrs
