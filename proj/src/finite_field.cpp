#include "llcw/finite_field.hpp"

#include <numeric>

#include "llcw/cyclotomic.hpp"

namespace llcw {

namespace {

// dense polynomial helpers over F_p, coefficient vectors, index = degree
using P = std::vector<long>;

void ptrim(P& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }

P pmulmod(const P& a, const P& b, const P& mod, long p) {
    if (a.empty() || b.empty()) return {};
    P c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce by mod (monic)
    long dm = (long)mod.size() - 1;
    for (long d = (long)c.size() - 1; d >= dm; --d) {
        long t = c[d] % p;
        if (t) {
            for (long i = 0; i <= dm; ++i)
                c[d - dm + i] = ((c[d - dm + i] - t * mod[i]) % p + p * p) % p;
        }
    }
    c.resize(dm);
    ptrim(c);
    return c;
}

P ppowmod(P base, long e, const P& mod, long p) {
    P r{1};
    while (e > 0) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

P pgcd(P a, P b, long p) {
    ptrim(a); ptrim(b);
    while (!b.empty()) {
        // a mod b
        long db = (long)b.size() - 1;
        long lead_inv = 1;
        for (long t = 1; t < p; ++t)
            if (t * b[db] % p == 1) { lead_inv = t; break; }
        P r = a;
        ptrim(r);
        while ((long)r.size() - 1 >= db && !r.empty()) {
            long dr = (long)r.size() - 1;
            long c = r[dr] * lead_inv % p;
            for (long i = 0; i <= db; ++i)
                r[dr - db + i] = ((r[dr - db + i] - c * b[i]) % p + p * p) % p;
            ptrim(r);
        }
        a = b;
        b = r;
    }
    return a;
}

bool irreducible(const P& g, long p) {
    long m = (long)g.size() - 1;
    if (m == 1) return true; // any monic linear polynomial

    // x^{p^m} == x mod g
    P x{0, 1};
    P xe = x;
    for (long i = 0; i < m; ++i) xe = ppowmod(xe, p, g, p);
    P diff = xe;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
    // gcd(x^{p^{m/l}} - x, g) = 1 for prime l | m
    for (long l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        bool is_prime = true;
        for (long t = 2; t * t <= l; ++t)
            if (l % t == 0) { is_prime = false; break; }
        if (!is_prime) continue;
        P xf = x;
        for (long i = 0; i < m / l; ++i) xf = ppowmod(xf, p, g, p);
        P d = xf;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        ptrim(d);
        P gg = pgcd(g, d, p);
        if ((long)gg.size() - 1 != 0) return false;
    }
    return true;
}

long encode(const P& a, long p, long m) {
    long v = 0;
    for (long i = m - 1; i >= 0; --i) v = v * p + (i < (long)a.size() ? a[i] : 0);
    return v;
}

P decode(long v, long p, long m) {
    P a(m, 0);
    for (long i = 0; i < m; ++i) { a[i] = v % p; v /= p; }
    ptrim(a);
    return a;
}

} // namespace

std::shared_ptr<const ResidueTower> ResidueTower::make(long p, long f, long Dfield) {
    auto tw = std::shared_ptr<ResidueTower>(new ResidueTower());
    tw->p_ = p;
    tw->f_ = f;
    tw->D_ = Dfield;
    tw->q_ = power_long(p, f);
    tw->m_ = f * Dfield;
    tw->Q_ = power_long(p, tw->m_);
    if (tw->Q_ > 1000000) throw config_error("residue tower too large");
    long m = tw->m_;
    // smallest monic irreducible of degree m over F_p
    P g;
    for (long low = 0; low < power_long(p, m); ++low) {
        g = decode(low, p, m);
        g.resize(m + 1, 0);
        g[m] = 1;
        if (irreducible(g, p)) break;
        g.clear();
    }
    if (g.empty()) throw consistency_error("no irreducible polynomial found");
    tw->modulus_.assign(g.begin(), g.end());
    // find a generator of the full multiplicative group
    long Q = tw->Q_;
    auto ord_facs = divisors(Q - 1);
    std::vector<long> prime_facs;
    {
        long n = Q - 1;
        for (long t = 2; t * t <= n; ++t)
            if (n % t == 0) { prime_facs.push_back(t); while (n % t == 0) n /= t; }
        if (n > 1) prime_facs.push_back(n);
    }
    long gen_enc = (Q == 2) ? 1 : 0; // F_2^x is trivial; 1 generates it
    for (long cand = 2; cand < Q && !gen_enc; ++cand) {
        P c = decode(cand, p, m);
        bool ok = true;
        for (long l : prime_facs) {
            P e = ppowmod(c, (Q - 1) / l, g, p);
            if ((long)e.size() == 1 && e[0] == 1) { ok = false; break; }
        }
        if (ok) { gen_enc = cand; break; }
    }
    if (!gen_enc) throw consistency_error("no generator found");
    tw->exp_.resize(Q - 1);
    tw->log_.assign(Q, -1);
    P cur{1};
    P gp = decode(gen_enc, p, m);
    for (long i = 0; i < Q - 1; ++i) {
        long e = encode(cur, p, m);
        tw->exp_[i] = e;
        tw->log_[e] = i;
        cur = pmulmod(cur, gp, g, p);
    }
    if (encode(cur, p, m) != 1) throw consistency_error("generator order check failed");
    return tw;
}

long ResidueTower::add(long x, long y) const {
    long r = 0, mul = 1;
    for (long i = 0; i < m_; ++i) {
        long xd = x % p_, yd = y % p_;
        x /= p_; y /= p_;
        r += ((xd + yd) % p_) * mul;
        mul *= p_;
    }
    return r;
}

long ResidueTower::neg(long x) const {
    long r = 0, mul = 1;
    for (long i = 0; i < m_; ++i) {
        long xd = x % p_;
        x /= p_;
        r += ((p_ - xd) % p_) * mul;
        mul *= p_;
    }
    return r;
}

long ResidueTower::mul(long x, long y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[(log_[x] + log_[y]) % (Q_ - 1)];
}

long ResidueTower::inv(long x) const {
    if (x == 0) throw precondition_error("inverse of zero in residue field");
    return exp_[(Q_ - 1 - log_[x]) % (Q_ - 1)];
}

long ResidueTower::pow(long x, long e) const {
    if (x == 0) {
        if (e <= 0) throw precondition_error("0^e with e <= 0");
        return 0;
    }
    long n = Q_ - 1;
    long le = (log_[x] % n) * (e % n) % n;
    le = ((le % n) + n) % n;
    return exp_[le];
}

long ResidueTower::from_int(long c) const {
    long r = c % p_;
    if (r < 0) r += p_;
    return r; // constant polynomial digit
}

long ResidueTower::gen(long e) const {
    if (e < 1 || D_ % e != 0) throw precondition_error("subfield level must divide Dfield");
    long sub = power_long(q_, e) - 1;
    return exp_[(Q_ - 1) / sub % (Q_ - 1)];
}

long ResidueTower::gen_pow(long e, long t) const {
    long sub = power_long(q_, e) - 1;
    long step = (Q_ - 1) / sub;
    long idx = step * (((t % sub) + sub) % sub) % (Q_ - 1);
    return exp_[idx];
}

long ResidueTower::log(long e, long x) const {
    if (x == 0) throw precondition_error("log of zero");
    long sub = power_long(q_, e) - 1;
    long step = (Q_ - 1) / sub;
    long l = log_[x];
    if (l % step != 0) throw precondition_error("element not in requested subfield");
    return (l / step) % sub;
}

bool ResidueTower::in_subfield(long e, long x) const {
    if (x == 0) return true;
    long sub = power_long(q_, e) - 1;
    long step = (Q_ - 1) / sub;
    return log_[x] % step == 0;
}

std::vector<long> ResidueTower::subfield_elements(long e) const {
    std::vector<long> v{0};
    long sub = power_long(q_, e) - 1;
    for (long t = 0; t < sub; ++t) v.push_back(gen_pow(e, t));
    return v;
}

long ResidueTower::trace(long d, long e, long x) const {
    if (d % e != 0) throw precondition_error("trace requires e | d");
    long r = 0, cur = x;
    for (long i = 0; i < d / e; ++i) {
        r = add(r, cur);
        cur = pow(cur, power_long(q_, e));
    }
    return r;
}

long ResidueTower::norm(long d, long e, long x) const {
    if (d % e != 0) throw precondition_error("norm requires e | d");
    long r = 1, cur = x;
    for (long i = 0; i < d / e; ++i) {
        r = mul(r, cur);
        cur = pow(cur, power_long(q_, e));
    }
    return r;
}

long ResidueTower::trace_to_prime(long x) const {
    long r = 0, cur = x;
    for (long i = 0; i < m_; ++i) {
        r = add(r, cur);
        cur = pow(cur, p_);
    }
    // r is a constant polynomial
    if (r >= p_) throw consistency_error("absolute trace not in prime field");
    return r;
}

} // namespace llcw
