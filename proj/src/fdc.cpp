#include "llcw/fdc.hpp"

#include <algorithm>

#include "llcw/errors.hpp"

namespace llcw {

namespace {

long char_count(FDCFamily family) {
    switch (family) {
        case FDCFamily::SOOdd: return 0;
        case FDCFamily::SOEvenP2: return 1;
        case FDCFamily::SOEvenOddP: return 2;
    }
    throw precondition_error("unknown family");
}

mpz_class zpow(long base, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)base, (unsigned long)e);
    return r;
}

} // namespace

mpz_class FDCRhs::value(long q) const {
    if (two_exp < 0) throw precondition_error("negative 2-exponent has no integer value");
    return zpow(2, two_exp) * zpow(q, q_exp);
}

FDCRhs fdc_rhs(FDCFamily family, long n, long r) {
    switch (family) {
        case FDCFamily::SOOdd: return {r, n * n + n};
        case FDCFamily::SOEvenP2: return {r - 1, n * n};
        case FDCFamily::SOEvenOddP: return {r - 2, n * n};
    }
    throw precondition_error("unknown family");
}

bool fdc_identity_holds(FDCFamily family, long n, long q, long r,
                        const std::vector<long>& e, long artin) {
    if (artin < 0) return false;
    FDCRhs rhs = fdc_rhs(family, n, r);
    long c = rhs.two_exp;
    if (c < 0) return false; // |S-bar| = 2^c must be a group order
    long k = (long)e.size();
    long sum_e = 0;
    mpz_class prod = 1;
    for (long ei : e) {
        if (ei < 1) return false;
        sum_e += ei;
        mpz_class t = 1 + zpow(q, ei);
        prod *= t * t;
    }
    mpz_class lhs = zpow(2, 2 * k) * zpow(q, 2 * sum_e + artin);
    mpz_class right = zpow(2, 2 * c) * zpow(q, 2 * rhs.q_exp) * prod;
    return lhs == right;
}

std::vector<long> admissible_exponents(long q, long bound) {
    std::vector<long> out;
    for (long e = 1; e <= bound; ++e) {
        mpz_class t = 1 + zpow(q, e);
        while (t % 2 == 0) t /= 2;
        if (t == 1) out.push_back(e);
    }
    return out;
}

namespace {

void search_multisets(FDCFamily family, long n, long q, long r,
                      const std::vector<long>& adm, long k, size_t start,
                      std::vector<long>& cur, std::vector<FDCSolution>& out) {
    if ((long)cur.size() == k) {
        // solve for artin by stripping powers of q from rhs / lhs0
        FDCRhs rhs = fdc_rhs(family, n, r);
        long sum_e = 0;
        mpz_class prod = 1;
        for (long ei : cur) {
            sum_e += ei;
            mpz_class t = 1 + zpow(q, ei);
            prod *= t * t;
        }
        mpz_class right = zpow(2, 2 * rhs.two_exp) * zpow(q, 2 * rhs.q_exp) * prod;
        mpz_class den = zpow(2, 2 * k) * zpow(q, 2 * sum_e);
        if (right % den != 0) return;
        mpz_class t = right / den;
        long artin = 0;
        while (t % q == 0) {
            t /= q;
            ++artin;
        }
        if (t != 1) return;
        if (!fdc_identity_holds(family, n, q, r, cur, artin))
            throw consistency_error("solver produced a non-solution");
        out.push_back({r, cur, artin});
        return;
    }
    for (size_t i = start; i < adm.size(); ++i) {
        cur.push_back(adm[i]);
        search_multisets(family, n, q, r, adm, k, i, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FDCSolution> solve_constraints(FDCFamily family, long n, long q) {
    if (n < 1 || q < 2) throw precondition_error("need n >= 1 and q >= 2");
    long chars = char_count(family);
    auto adm = admissible_exponents(q, 2 * n * n);
    std::vector<FDCSolution> out;
    for (long r = chars; r <= n; ++r) {
        // middle induced constituents contribute r - chars forced exponents;
        // the wild constituent may or may not contribute one more
        for (long extra = 0; extra <= 1; ++extra) {
            long k = r - chars + extra;
            std::vector<long> cur;
            search_multisets(family, n, q, r, adm, k, 0, cur, out);
        }
    }
    for (auto& s : out) std::sort(s.e.begin(), s.e.end());
    std::sort(out.begin(), out.end(), [](const FDCSolution& a, const FDCSolution& b) {
        return std::tie(a.r, a.artin, a.e) < std::tie(b.r, b.artin, b.e);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FDCSolution& a, const FDCSolution& b) {
                              return a.r == b.r && a.artin == b.artin && a.e == b.e;
                          }),
              out.end());
    return out;
}

FormalDegree formal_degree(FDCFamily family, long n) {
    switch (family) {
        case FDCFamily::SOOdd: return {mpq_class(1), n * n + n};
        case FDCFamily::SOEvenP2: return {mpq_class(1), n * n};
        case FDCFamily::SOEvenOddP: return {mpq_class(1, 2), n * n};
    }
    throw precondition_error("unknown family");
}

} // namespace llcw
