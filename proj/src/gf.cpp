#include "qpart/gf.hpp"

#include <algorithm>

namespace qpart::gf {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t e,
                          std::optional<std::vector<Elem>> modulus) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw FieldError("extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 16)) throw FieldError("field order exceeds 2^16");
    }

    FieldSpec F;
    F.p_ = p;
    F.e_ = e;
    F.q_ = static_cast<std::uint32_t>(q);

    if (e == 1) {
        if (modulus) {
            auto m = poly_trim(*modulus);
            if (m.size() != 2 || m[1] != 1)
                throw FieldError("modulus for a prime field must be monic of degree 1");
        }
        F.modulus_ = {0, 1};  // identity placeholder, arithmetic is mod p
        return F;
    }

    FieldSpec prime = FieldSpec::make(p, 1);
    if (modulus) {
        auto m = poly_trim(*modulus);
        if (m.size() != e + 1 || m.back() != 1)
            throw FieldError("modulus must be monic of degree e");
        for (Elem c : m)
            if (c >= p) throw FieldError("modulus coefficients must lie in GF(p)");
        if (!poly_is_irreducible(prime, m))
            throw ReducibleModulus("modulus is reducible over GF(p)");
        F.modulus_ = std::move(m);
    } else {
        F.modulus_ = least_irreducible(prime, e);
    }
    F.build_tables();
    return F;
}

Elem FieldSpec::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Elem FieldSpec::neg(Elem a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return (p_ - a) % p_;
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

Elem FieldSpec::mul_poly(Elem a, Elem b) const {
    // schoolbook product of the base-p digit polynomials, reduced mod modulus
    std::vector<Elem> da = decode(a), db = decode(b);
    std::vector<Elem> acc(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j) acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
    // reduce by the monic modulus
    for (std::size_t k = acc.size(); k-- > e_;) {
        Elem c = acc[k];
        if (c == 0) continue;
        acc[k] = 0;
        for (std::uint32_t j = 0; j < e_; ++j) {
            Elem sub = (c * modulus_[j]) % p_;
            acc[k - e_ + j] = (acc[k - e_ + j] + p_ - sub) % p_;
        }
    }
    acc.resize(e_);
    return encode(acc);
}

void FieldSpec::build_tables() {
    // find a multiplicative generator, then fill log/antilog
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    for (Elem g = 2; g < q_; ++g) {
        Elem x = 1;
        std::uint32_t ord = 0;
        do {
            x = mul_poly(x, g);
            ++ord;
        } while (x != 1);
        if (ord == q_ - 1) {
            x = 1;
            for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                exp_[i] = x;
                exp_[i + q_ - 1] = x;
                log_[x] = i;
                x = mul_poly(x, g);
            }
            return;
        }
    }
    throw FieldError("no generator found");  // unreachable for true prime powers
}

Elem FieldSpec::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return (a * b) % p_;
    return exp_[log_[a] + log_[b]];
}

Elem FieldSpec::inv(Elem a) const {
    if (a == 0) throw ZeroInverse("inverse of zero");
    if (e_ == 1) return pow(a, p_ - 2);
    return exp_[(q_ - 1) - log_[a]];
}

Elem FieldSpec::pow(Elem a, std::uint64_t k) const {
    Elem r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::vector<Elem> FieldSpec::decode(Elem a) const {
    std::vector<Elem> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem FieldSpec::encode(std::span<const Elem> coeffs) const {
    Elem r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        Elem c = i < coeffs.size() ? coeffs[i] : 0;
        r += c * mult;
        mult *= p_;
    }
    return r;
}

// --- polynomials -------------------------------------------------------------

std::vector<Elem> poly_trim(std::vector<Elem> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

std::vector<Elem> poly_mul(const FieldSpec& F, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return poly_trim(std::move(r));
}

std::vector<Elem> poly_mod(const FieldSpec& F, std::span<const Elem> a, std::span<const Elem> g) {
    std::vector<Elem> r(a.begin(), a.end());
    r = poly_trim(std::move(r));
    std::vector<Elem> gg(g.begin(), g.end());
    gg = poly_trim(std::move(gg));
    Elem lead_inv = F.inv(gg.back());
    while (r.size() >= gg.size() && !r.empty()) {
        Elem c = F.mul(r.back(), lead_inv);
        std::size_t shift = r.size() - gg.size();
        for (std::size_t j = 0; j < gg.size(); ++j)
            r[shift + j] = F.sub(r[shift + j], F.mul(c, gg[j]));
        r = poly_trim(std::move(r));
    }
    return r;
}

bool poly_is_irreducible(const FieldSpec& F, std::span<const Elem> f) {
    std::vector<Elem> ff(f.begin(), f.end());
    ff = poly_trim(std::move(ff));
    if (ff.size() < 2) return false;
    std::size_t deg = ff.size() - 1;
    if (deg == 1) return true;
    const std::uint32_t q = F.q();
    // all monic divisor candidates of degree 1..deg/2, low-to-high odometer
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::vector<Elem> g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_mod(F, ff, g).empty()) return false;
            std::size_t i = 0;
            while (i < d && g[i] == q - 1) g[i++] = 0;
            if (i == d) break;
            ++g[i];
        }
    }
    return true;
}

std::vector<Elem> least_irreducible(const FieldSpec& F, std::uint32_t degree) {
    const std::uint32_t q = F.q();
    std::vector<Elem> g(degree + 1, 0);
    g[degree] = 1;
    while (true) {
        if (poly_is_irreducible(F, g)) return g;
        std::uint32_t i = 0;
        while (i < degree && g[i] == q - 1) g[i++] = 0;
        if (i == degree) throw FieldError("no irreducible polynomial found");
        ++g[i];
    }
}

// --- extension over an arbitrary base ---------------------------------------

ExtField::ExtField(FieldSpec base, std::uint32_t degree)
    : base_(std::move(base)), degree_(degree) {
    if (degree < 1) throw FieldError("extension degree must be >= 1");
    modulus_ = least_irreducible(base_, degree);
}

ExtField::Elt ExtField::one() const {
    Elt r(degree_, 0);
    r[0] = 1;
    return r;
}

ExtField::Elt ExtField::monomial(std::uint32_t k) const {
    std::vector<Elem> f(k + 1, 0);
    f[k] = 1;
    auto r = poly_mod(base_, f, modulus_);
    r.resize(degree_, 0);
    return r;
}

ExtField::Elt ExtField::add(const Elt& a, const Elt& b) const {
    Elt r(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtField::Elt ExtField::mul(const Elt& a, const Elt& b) const {
    auto prod = poly_mul(base_, a, b);
    auto r = prod.empty() ? std::vector<Elem>{} : poly_mod(base_, prod, modulus_);
    r.resize(degree_, 0);
    return r;
}

bool ExtField::is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](Elem c) { return c == 0; });
}

}  // namespace qpart::gf
