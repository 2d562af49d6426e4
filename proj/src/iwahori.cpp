#include "llcw/iwahori.hpp"

#include <algorithm>

namespace llcw {

namespace {

long two_val(long p) { return p == 2 ? 1 : 0; }

// integer Gram matrix entry of the family's bilinear form
long form_int(GroupFamily fam, long n, long i, long j) {
    long N = matrix_size(fam, n);
    switch (fam) {
        case GroupFamily::SOOdd:
            return j == N - 1 - i ? (i % 2 == 0 ? 1 : -1) : 0;
        case GroupFamily::SOOddBT:
            if (i == n && j == n) return 2;
            return j == N - 1 - i ? 1 : 0;
        case GroupFamily::SOEven:
            return j == N - 1 - i ? 1 : 0;
        default:
            throw precondition_error("GL_N carries no bilinear form");
    }
}

long vp_int(long v, long p) {
    if (v < 0) v = -v;
    long w = 0;
    while (v % p == 0) { v /= p; ++w; }
    return w;
}

} // namespace

long matrix_size(GroupFamily fam, long n) {
    switch (fam) {
        case GroupFamily::GLN: return n;
        case GroupFamily::SOOdd:
        case GroupFamily::SOOddBT: return 2 * n + 1;
        case GroupFamily::SOEven: return 2 * n;
    }
    throw precondition_error("unknown family");
}

long shape_bound(GroupFamily fam, long n, long p, long i, long j, FiltLevel level) {
    long N = matrix_size(fam, n);
    if (i == j) throw precondition_error("shape_bound is for off-diagonal entries");
    long t = two_val(p);
    long b = 0;
    switch (fam) {
        case GroupFamily::GLN:
            b = i < j ? 0 : 1;
            if (level == FiltLevel::IPlusPlus) {
                if (j == i + 1) b = 1;
                if (i == N - 1 && j == 0) b = 2;
            }
            return b;
        case GroupFamily::SOOdd:
            if (i < n && j < n) b = i < j ? 0 : 1;
            else if (i < n && j == n) b = 0;
            else if (i < n) b = -t;              // (1/2) O
            else if (i == n && j < n) b = 1 + t; // 2 p
            else if (i == n) b = 0;
            else if (j < n) b = 1 + t;           // 2 p
            else if (j == n) b = 1 + t;          // 2 p
            else b = i < j ? 0 : 1;
            if (level == FiltLevel::IPlusPlus) {
                if (j == i + 1) b += 1;
                if ((i == 2 * n - 1 && j == 0) || (i == 2 * n && j == 1)) b += 1;
            }
            return b;
        case GroupFamily::SOOddBT:
            if (i < n && j < n) b = i < j ? 0 : 1;
            else if (i < n && j == n) b = t;     // 2 O
            else if (i < n) b = 0;
            else if (i == n && j < n) b = 1;
            else if (i == n) b = 0;
            else if (j < n) b = 1;
            else if (j == n) b = 1 + t;          // 2 p
            else b = i < j ? 0 : 1;
            if (level == FiltLevel::IPlusPlus) {
                if (j == i + 1) b += 1;
                if ((i == 2 * n - 1 && j == 0) || (i == 2 * n && j == 1)) b += 1;
            }
            return b;
        case GroupFamily::SOEven: {
            auto top = [&](long x) { return x <= n - 2; };
            auto mid = [&](long x) { return x == n - 1 || x == n; };
            if (top(i) && top(j)) b = i < j ? 0 : 1;
            else if (top(i)) b = 0;
            else if (mid(i) && top(j)) b = 1;
            else if (mid(i) && mid(j)) b = level == FiltLevel::I ? 0 : 1;
            else if (mid(i)) b = 0;
            else b = top(j) || mid(j) ? 1 : (i < j ? 0 : 1);
            if (level == FiltLevel::IPlusPlus) {
                bool coord = (j == i + 1 && !(i == n - 1 && j == n)) ||
                             (i == n - 2 && j == n) || (i == n - 1 && j == n + 1);
                if (coord) b += 1;
                if ((i == 2 * n - 2 && j == 0) || (i == 2 * n - 1 && j == 1)) b += 1;
            }
            return b;
        }
    }
    throw precondition_error("unknown family");
}

PadicMatrix form_matrix(const PadicRing& R, GroupFamily fam, long n) {
    long N = matrix_size(fam, n);
    PadicMatrix J = PadicMatrix::zeros(R, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            if (long v = form_int(fam, n, i, j))
                J.at(i, j) = PadicNum::from_int(R, v);
    return J;
}

bool orthogonality_holds(const PadicMatrix& g, const PadicMatrix& J, long Kp) {
    return g.transpose().mul(J).mul(g).congruent(J, Kp);
}

bool membership(const PadicMatrix& g, GroupFamily fam, long n, FiltLevel level) {
    const PadicRing& R = *g.R;
    long N = matrix_size(fam, n);
    if (g.N != N) throw precondition_error("matrix size does not match family");
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            if (i != j) {
                if (!g.at(i, j).val_at_least(shape_bound(fam, n, R.p, i, j, level)))
                    return false;
                continue;
            }
            bool so_even_mid = fam == GroupFamily::SOEven && (i == n - 1 || i == n);
            if (level == FiltLevel::I) {
                if (!g.at(i, i).val_at_least(0)) return false;
                if (!so_even_mid && g.at(i, i).residue_at(0) == 0) return false;
            } else {
                PadicNum d = g.at(i, i).sub(PadicNum::from_int(R, 1));
                if (!d.val_at_least(1)) return false;
            }
        }
    return true;
}

std::vector<long> affine_quotient(const PadicMatrix& g, GroupFamily fam, long n) {
    const PadicRing& R = *g.R;
    if (!membership(g, fam, n, FiltLevel::IPlus))
        throw precondition_error("affine quotient needs an element of I+");
    std::vector<long> out;
    switch (fam) {
        case GroupFamily::GLN:
            for (long i = 0; i + 1 < n; ++i) out.push_back(g.at(i, i + 1).residue_at(0));
            out.push_back(g.at(n - 1, 0).residue_at(1));
            return out;
        case GroupFamily::SOOdd: {
            for (long i = 0; i < n; ++i) out.push_back(g.at(i, i + 1).residue_at(0));
            PadicNum half = PadicNum::from_rational(R, mpq_class(1, 2));
            out.push_back(g.at(2 * n - 1, 0).mul(half).residue_at(1));
            return out;
        }
        case GroupFamily::SOEven:
            for (long i = 0; i + 1 < n; ++i) out.push_back(g.at(i, i + 1).residue_at(0));
            out.push_back(g.at(n - 2, n).residue_at(0));
            out.push_back(g.at(2 * n - 2, 0).residue_at(1));
            return out;
        default:
            throw precondition_error("no affine quotient for this family");
    }
}

ScalarExt affine_generic_char(const Context& ctx, const PadicMatrix& g,
                              GroupFamily fam, long n, const AffineCharParams& pr) {
    const PadicRing& R = *g.R;
    if (ctx.p != R.p) throw precondition_error("context and ring disagree on p");
    auto coords = affine_quotient(g, fam, n);
    const auto& k = *R.res;
    std::vector<long> w(coords.size(), k.one());
    w.back() = k.gen_pow(1, pr.a_exp);
    if (fam == GroupFamily::SOEven && pr.kappa % 2 != 0 && R.p != 2)
        w[coords.size() - 2] = k.gen_pow(1, 1); // eps = the fixed non-square
    long sum = k.zero();
    for (size_t i = 0; i < coords.size(); ++i) sum = k.add(sum, k.mul(w[i], coords[i]));
    return ctx.root(ctx.p, k.trace_to_prime(sum));
}

PadicMatrix basis_change(const PadicRing& R, long n) {
    long N = 2 * n + 1;
    PadicMatrix X = PadicMatrix::zeros(R, N);
    for (long i = 0; i < N; ++i) {
        long d = i < n ? ((n - i) % 2 == 1 ? -2 : 2) : 1;
        X.at(i, i) = PadicNum::from_int(R, d);
    }
    return X;
}

PadicMatrix conjugate_to_bt(const PadicMatrix& g, long n) {
    const PadicRing& R = *g.R;
    PadicMatrix h = PadicMatrix::zeros(R, g.N);
    for (long i = 0; i < g.N; ++i)
        for (long j = 0; j < g.N; ++j) {
            long di = i < n ? ((n - i) % 2 == 1 ? -2 : 2) : 1;
            long dj = j < n ? ((n - j) % 2 == 1 ? -2 : 2) : 1;
            h.at(i, j) = g.at(i, j)
                             .mul(PadicNum::from_int(R, di))
                             .mul(PadicNum::from_rational(R, mpq_class(1, dj)));
        }
    return h;
}

PadicMatrix conjugate_from_bt(const PadicMatrix& h, long n) {
    const PadicRing& R = *h.R;
    PadicMatrix g = PadicMatrix::zeros(R, h.N);
    for (long i = 0; i < h.N; ++i)
        for (long j = 0; j < h.N; ++j) {
            long di = i < n ? ((n - i) % 2 == 1 ? -2 : 2) : 1;
            long dj = j < n ? ((n - j) % 2 == 1 ? -2 : 2) : 1;
            g.at(i, j) = h.at(i, j)
                             .mul(PadicNum::from_int(R, dj))
                             .mul(PadicNum::from_rational(R, mpq_class(1, di)));
        }
    return g;
}

PadicMatrix phi_gl(const PadicRing& R, long N, long a_exp) {
    PadicMatrix M = PadicMatrix::zeros(R, N);
    for (long i = 0; i + 1 < N; ++i) M.at(i, i + 1) = PadicNum::from_int(R, 1);
    long ainv = R.res->gen_pow(1, -a_exp);
    M.at(N - 1, 0) = PadicNum::teichmuller(R, ainv, 1);
    return M;
}

PadicMatrix phi_so_odd(const PadicRing& R, long n, long a_exp) {
    long N = 2 * n + 1;
    PadicMatrix M = PadicMatrix::zeros(R, N);
    long a = R.res->gen_pow(1, a_exp), ainv = R.res->gen_pow(1, -a_exp);
    PadicNum half = PadicNum::from_rational(R, mpq_class(1, 2));
    PadicNum m1 = PadicNum::from_int(R, -1);
    // multiplicative lifts keep the corner product [a][a^{-1}] exactly 1
    M.at(0, N - 1) =
        PadicNum::teichmuller(R, a, -1).mul(half).mul(m1); // -a 2^{-1} pi^{-1}
    for (long i = 1; i < N - 1; ++i) M.at(i, i) = m1;
    M.at(N - 1, 0) =
        PadicNum::teichmuller(R, ainv, 1).mul(PadicNum::from_int(R, -2));
    return M;
}

PadicMatrix phi_so_even(const PadicRing& R, long n, long alpha_k, long beta_k) {
    long N = 2 * n;
    PadicMatrix M = PadicMatrix::zeros(R, N);
    const auto& k = *R.res;
    PadicNum bp = PadicNum::teichmuller(R, beta_k, 1); // beta pi
    M.at(N - 1, 0) = bp;
    M.at(0, N - 1) = bp.inv();
    for (long i = 1; i <= n - 2; ++i) M.at(i, i) = PadicNum::from_int(R, 1);
    for (long i = n + 1; i <= N - 2; ++i) M.at(i, i) = PadicNum::from_int(R, 1);
    M.at(n - 1, n) = PadicNum::teichmuller(R, k.inv(alpha_k), 0);
    M.at(n, n - 1) = PadicNum::teichmuller(R, alpha_k, 0);
    return M;
}

PadicMatrix g_chi_so_even(const PadicRing& R, long n, long kappa, long a_exp) {
    const auto& k = *R.res;
    long alpha = R.p == 2 ? k.one() : k.gen_pow(1, kappa % 2 == 0 ? 0 : 1);
    long beta = k.neg(k.gen_pow(1, -a_exp));
    return phi_so_even(R, n, alpha, beta);
}

SymMono SymMono::mul(const SymMono& o) const {
    if (is_zero() || o.is_zero()) return SymMono{};
    return SymMono{c * o.c, ea + o.ea, eal + o.eal, ebe + o.ebe, epi + o.epi};
}

SymMono SymMono::add(const SymMono& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (ea != o.ea || eal != o.eal || ebe != o.ebe || epi != o.epi)
        throw consistency_error("sum of incompatible symbolic monomials");
    SymMono r = *this;
    r.c += o.c;
    if (r.c == 0) return SymMono{};
    return r;
}

bool SymMono::operator==(const SymMono& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return c == o.c && ea == o.ea && eal == o.eal && ebe == o.ebe && epi == o.epi;
}

SymMatrix SymMatrix::identity(long N) {
    SymMatrix M;
    M.N = N;
    M.m.assign(N * N, SymMono{});
    for (long i = 0; i < N; ++i) M.at(i, i) = SymMono{1, 0, 0, 0, 0};
    return M;
}

SymMatrix SymMatrix::mul(const SymMatrix& o) const {
    SymMatrix M;
    M.N = N;
    M.m.assign(N * N, SymMono{});
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            SymMono s;
            for (long k = 0; k < N; ++k) s = s.add(at(i, k).mul(o.at(k, j)));
            M.at(i, j) = s;
        }
    return M;
}

bool SymMatrix::operator==(const SymMatrix& o) const {
    if (N != o.N) return false;
    for (long i = 0; i < N * N; ++i)
        if (!(m[i] == o.m[i])) return false;
    return true;
}

SymMatrix sym_phi_gl(long N) {
    SymMatrix M;
    M.N = N;
    M.m.assign(N * N, SymMono{});
    for (long i = 0; i + 1 < N; ++i) M.at(i, i + 1) = SymMono{1, 0, 0, 0, 0};
    M.at(N - 1, 0) = SymMono{1, -1, 0, 0, 1}; // pi a^{-1}
    return M;
}

SymMatrix sym_phi_so_odd(long n) {
    long N = 2 * n + 1;
    SymMatrix M;
    M.N = N;
    M.m.assign(N * N, SymMono{});
    M.at(0, N - 1) = SymMono{mpq_class(-1, 2), 1, 0, 0, -1}; // -a 2^{-1} pi^{-1}
    for (long i = 1; i < N - 1; ++i) M.at(i, i) = SymMono{-1, 0, 0, 0, 0};
    M.at(N - 1, 0) = SymMono{-2, -1, 0, 0, 1}; // -a^{-1} 2 pi
    return M;
}

SymMatrix sym_phi_so_even(long n) {
    long N = 2 * n;
    SymMatrix M;
    M.N = N;
    M.m.assign(N * N, SymMono{});
    M.at(0, N - 1) = SymMono{1, 0, 0, -1, -1}; // (beta pi)^{-1}
    for (long i = 1; i <= n - 2; ++i) M.at(i, i) = SymMono{1, 0, 0, 0, 0};
    for (long i = n + 1; i <= N - 2; ++i) M.at(i, i) = SymMono{1, 0, 0, 0, 0};
    M.at(n - 1, n) = SymMono{1, 0, -1, 0, 0};
    M.at(n, n - 1) = SymMono{1, 0, 1, 0, 0};
    M.at(N - 1, 0) = SymMono{1, 0, 0, 1, 1}; // beta pi
    return M;
}

ElementOrderReport element_orders(long bound) {
    ElementOrderReport rep;
    rep.gl_ok = rep.so_odd_ok = rep.so_even_ok = true;
    for (long N = 1; N <= bound; ++N) {
        SymMatrix phi = sym_phi_gl(N);
        SymMatrix pw = SymMatrix::identity(N);
        for (long i = 0; i < N; ++i) pw = pw.mul(phi);
        SymMatrix target = SymMatrix::identity(N);
        for (long i = 0; i < N; ++i) target.at(i, i) = SymMono{1, -1, 0, 0, 1};
        if (!(pw == target)) rep.gl_ok = false;
    }
    for (long n = 1; n <= bound; ++n) {
        SymMatrix phi = sym_phi_so_odd(n);
        if (!(phi.mul(phi) == SymMatrix::identity(2 * n + 1))) rep.so_odd_ok = false;
    }
    for (long n = 2; n <= bound; ++n) {
        SymMatrix phi = sym_phi_so_even(n);
        if (!(phi.mul(phi) == SymMatrix::identity(2 * n))) rep.so_even_ok = false;
    }
    return rep;
}

IwahoriSampler::IwahoriSampler(const PadicRing& R, GroupFamily fam, long n,
                               unsigned long seed)
    : R_(&R), fam_(fam), n_(n), N_(matrix_size(fam, n)), rng_(seed) {}

PadicNum IwahoriSampler::random_val_ge(long b) {
    const PadicRing& R = *R_;
    std::uniform_int_distribution<long> digit(0, R.p - 1);
    std::vector<std::vector<long>> dg(R.f, std::vector<long>(R.range(), 0));
    for (long i = 0; i < R.f; ++i)
        for (long t = std::max(b, R.low); t < R.K; ++t)
            dg[i][t - R.low] = digit(rng_);
    return PadicNum::from_digits(R, dg);
}

PadicNum IwahoriSampler::random_unit(bool pro_p) {
    const PadicRing& R = *R_;
    // random unit, or 1 + (random with valuation >= 1) for the pro-p torus
    PadicNum tail = random_val_ge(1);
    if (pro_p) return PadicNum::from_int(R, 1).add(tail);
    std::uniform_int_distribution<long> pick(0, R.res->q() - 2);
    long u = R.res->gen_pow(1, pick(rng_));
    return PadicNum::lift_residue(R, u, 0).add(tail);
}

PadicMatrix IwahoriSampler::torus(bool pro_p) {
    const PadicRing& R = *R_;
    PadicMatrix M = PadicMatrix::identity(R, N_);
    if (fam_ == GroupFamily::GLN) {
        for (long i = 0; i < N_; ++i) M.at(i, i) = random_unit(pro_p);
        return M;
    }
    long half = N_ / 2;
    for (long i = 0; i < half; ++i) {
        PadicNum u = random_unit(pro_p);
        M.at(i, i) = u;
        M.at(N_ - 1 - i, N_ - 1 - i) = u.inv();
    }
    return M;
}

PadicMatrix IwahoriSampler::eichler(long i, long j, const PadicNum& c) const {
    const PadicRing& R = *R_;
    GroupFamily fam = fam_;
    long N = N_, s_i = N - 1 - i, s_j = N - 1 - j;
    if (i == s_i) throw precondition_error("Eichler base vector must be isotropic");
    if (j == i || j == s_i) throw precondition_error("Eichler vectors must be orthogonal");
    PadicMatrix M = PadicMatrix::identity(R, N);
    long Jsi = form_int(fam, n_, s_i, i);
    long Jsj = form_int(fam, n_, s_j, j);
    M.at(j, s_i) = M.at(j, s_i).add(c.mul(PadicNum::from_int(R, Jsi)));
    M.at(i, s_j) = M.at(i, s_j).sub(c.mul(PadicNum::from_int(R, Jsj)));
    long Jjj = form_int(fam, n_, j, j);
    if (Jjj != 0) {
        PadicNum q = PadicNum::from_rational(R, mpq_class(Jjj, 2));
        M.at(i, s_i) = M.at(i, s_i).sub(
            c.mul(c).mul(q).mul(PadicNum::from_int(R, Jsi)));
    }
    return M;
}

PadicMatrix IwahoriSampler::sample(FiltLevel level) {
    const PadicRing& R = *R_;
    if (level == FiltLevel::IPlusPlus)
        throw precondition_error("sampler supports levels I and I+");
    if (fam_ == GroupFamily::SOOdd) {
        // sample for the Bruhat-Tits form and change basis
        IwahoriSampler bt(R, GroupFamily::SOOddBT, n_, rng_());
        return conjugate_from_bt(bt.sample(level), n_);
    }
    std::uniform_int_distribution<int> coin(0, 3);
    PadicMatrix M = torus(level != FiltLevel::I);
    if (fam_ == GroupFamily::GLN) {
        for (long i = 0; i < N_; ++i)
            for (long j = 0; j < N_; ++j) {
                if (i == j || coin(rng_) == 0) continue;
                PadicMatrix E = PadicMatrix::identity(R, N_);
                E.at(i, j) = random_val_ge(shape_bound(fam_, n_, R.p, i, j, level));
                M = M.mul(E);
            }
        return M;
    }
    long mid = fam_ == GroupFamily::SOOddBT ? n_ : -1;
    for (long i = 0; i < N_; ++i) {
        if (i == mid) continue;
        long s_i = N_ - 1 - i;
        for (long j = 0; j < N_; ++j) {
            if (j == i || j == s_i || coin(rng_) == 0) continue;
            long s_j = N_ - 1 - j;
            long b1 = shape_bound(fam_, n_, R.p, j, s_i, level);
            long b2 = shape_bound(fam_, n_, R.p, i, s_j, level) -
                      vp_int(form_int(fam_, n_, s_j, j), R.p);
            long b = std::max(b1, b2);
            if (j == mid) {
                long b3 = shape_bound(fam_, n_, R.p, i, s_i, level);
                b = std::max(b, (b3 + 1) / 2);
            }
            M = M.mul(eichler(i, j, random_val_ge(std::max(b, 0L))));
        }
    }
    return M;
}

} // namespace llcw
