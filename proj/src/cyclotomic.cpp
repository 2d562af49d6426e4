#include "llcw/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace llcw {

long power_long(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

long mobius(long n) {
    long r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

long mod_pow(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = (long)((__int128)r * b % m);
        b = (long)((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

namespace {

using Poly = std::vector<mpz_class>; // coefficient vector, index = degree

Poly x_pow_minus_1(long n) {
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division, divisor monic-leading assumed nonzero
Poly poly_div_exact(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long db = (long)b.size() - 1;
    while ((long)a.size() - 1 >= db && !a.empty()) {
        long da = (long)a.size() - 1;
        mpz_class c = a[da] / b[db];
        q[da - db] = c;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw consistency_error("cyclotomic polynomial division not exact");
    return q;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
Poly cyclotomic_poly(long n) {
    Poly num = x_pow_minus_1(n);
    for (long d : divisors(n)) {
        if (d == n) continue;
        num = poly_div_exact(num, cyclotomic_poly(d));
    }
    return num;
}

} // namespace

std::shared_ptr<const CycloConfig> CycloConfig::make(long p, long f, long D) {
    if (p < 2 || f < 1 || D < 1) throw config_error("bad cyclotomic configuration");
    auto cfg = std::shared_ptr<CycloConfig>(new CycloConfig());
    cfg->p_ = p;
    cfg->f_ = f;
    cfg->D_ = D;
    cfg->q_ = power_long(p, f);
    long M = std::lcm(p, 8L);
    for (long d = 1; d <= D; ++d) {
        long o = power_long(cfg->q_, d) - 1;
        if (o >= 1) M = std::lcm(M, o);
        if (M > 200000) throw config_error("conductor M too large; lower D");
    }
    cfg->M_ = M;
    cfg->phi_ = cyclotomic_poly(M);
    cfg->deg_ = (long)cfg->phi_.size() - 1;
    // monomial reduction table: x^e mod Phi_M for all e < M
    long deg = cfg->deg_;
    cfg->pow_red_.resize(M);
    std::vector<mpz_class> cur(deg, 0);
    cur[0] = 1;
    for (long e = 0; e < M; ++e) {
        cfg->pow_red_[e] = cur;
        // multiply by x
        mpz_class top = cur[deg - 1];
        for (long i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (long i = 0; i < deg; ++i) cur[i] -= top * cfg->phi_[i];
        }
    }
    return cfg;
}

const std::vector<mpz_class>& CycloConfig::monomial(long e) const {
    e %= M_;
    if (e < 0) e += M_;
    return pow_red_[e];
}

Cyclo::Cyclo(ConfigPtr cfg) : cfg_(std::move(cfg)), c_(cfg_->deg(), 0) {}

Cyclo::Cyclo(ConfigPtr cfg, const mpq_class& r) : Cyclo(std::move(cfg)) {
    c_[0] = r;
}

Cyclo Cyclo::zeta_pow(ConfigPtr cfg, long e) {
    Cyclo z(cfg);
    const auto& mono = cfg->monomial(e);
    for (long i = 0; i < cfg->deg(); ++i) z.c_[i] = mpq_class(mono[i]);
    return z;
}

void Cyclo::check_same(const Cyclo& o) const {
    if (cfg_.get() != o.cfg_.get())
        throw precondition_error("cyclotomic operands from different configurations");
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational(mpq_class* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    check_same(o);
    Cyclo r(cfg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    check_same(o);
    Cyclo r(cfg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r(cfg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    check_same(o);
    long deg = cfg_->deg();
    std::vector<mpq_class> conv(2 * deg - 1, 0);
    for (long i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    Cyclo r(cfg_);
    for (long i = 0; i < deg; ++i) r.c_[i] = conv[i];
    for (long e = deg; e < 2 * deg - 1; ++e) {
        if (conv[e] == 0) continue;
        const auto& mono = cfg_->monomial(e);
        for (long i = 0; i < deg; ++i)
            if (mono[i] != 0) r.c_[i] += conv[e] * mono[i];
    }
    return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
    check_same(o);
    return c_ == o.c_;
}

Cyclo Cyclo::conj() const {
    Cyclo r(cfg_);
    long M = cfg_->M();
    for (long k = 0; k < cfg_->deg(); ++k) {
        if (c_[k] == 0) continue;
        const auto& mono = cfg_->monomial(k == 0 ? 0 : M - k);
        for (long i = 0; i < cfg_->deg(); ++i)
            if (mono[i] != 0) r.c_[i] += c_[k] * mono[i];
    }
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw precondition_error("division by zero in Q(zeta_M)");
    // extended Euclid in Q[x] between this and Phi_M
    using QP = std::vector<mpq_class>;
    auto qtrim = [](QP& a) { while (!a.empty() && a.back() == 0) a.pop_back(); };
    auto deg_of = [](const QP& a) { return (long)a.size() - 1; };
    long deg = cfg_->deg();
    QP a(deg + 1);
    // a = Phi_M
    {
        // reconstruct Phi from monomial table: x^deg mod Phi = -(Phi - x^deg)
        const auto& m = cfg_->monomial(deg);
        for (long i = 0; i < deg; ++i) a[i] = -mpq_class(m[i]);
        a[deg] = 1;
    }
    QP b(c_.begin(), c_.end());
    qtrim(b);
    QP s0{}, s1{mpq_class(1)}; // coefficients of b in the combination
    // invariant: s_i * b == r_i  (mod Phi)
    QP r0 = a, r1 = b;
    while (true) {
        qtrim(r1);
        if (r1.empty()) throw consistency_error("element shares a factor with Phi_M");
        if (deg_of(r1) == 0) break;
        // divide r0 by r1
        QP quo(deg_of(r0) >= deg_of(r1) ? deg_of(r0) - deg_of(r1) + 1 : 0, 0);
        QP rem = r0;
        qtrim(rem);
        while (!rem.empty() && deg_of(rem) >= deg_of(r1)) {
            long shift = deg_of(rem) - deg_of(r1);
            mpq_class c = rem.back() / r1.back();
            quo[shift] += c;
            for (long i = 0; i <= deg_of(r1); ++i) rem[shift + i] -= c * r1[i];
            qtrim(rem);
        }
        // new s = s0 - quo*s1
        QP ns(std::max(s0.size(), quo.size() + s1.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
        for (size_t i = 0; i < quo.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) ns[i + j] -= quo[i] * s1[j];
        qtrim(ns);
        r0 = r1; r1 = rem;
        s0 = s1; s1 = ns;
    }
    mpq_class lead = r1[0];
    Cyclo inv(cfg_);
    // inv = s1 / lead reduced mod Phi
    for (size_t e = 0; e < s1.size(); ++e) {
        if (s1[e] == 0) continue;
        mpq_class c = s1[e] / lead;
        const auto& mono = cfg_->monomial((long)e);
        for (long i = 0; i < deg; ++i)
            if (mono[i] != 0) inv.c_[i] += c * mpq_class(mono[i]);
    }
    if (!((*this * inv) == Cyclo(cfg_, 1)))
        throw consistency_error("cyclotomic inverse check failed");
    return inv;
}

std::complex<double> Cyclo::embed() const {
    std::complex<double> r = 0;
    const double two_pi = 6.283185307179586476925287;
    for (long k = 0; k < cfg_->deg(); ++k) {
        if (c_[k] == 0) continue;
        double t = two_pi * (double)k / (double)cfg_->M();
        r += c_[k].get_d() * std::complex<double>(std::cos(t), std::sin(t));
    }
    return r;
}

} // namespace llcw
