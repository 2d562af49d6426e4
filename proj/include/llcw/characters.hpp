#ifndef LLCW_CHARACTERS_HPP
#define LLCW_CHARACTERS_HPP

#include <array>
#include <memory>
#include <vector>

#include "llcw/finite_field.hpp"
#include "llcw/scalar.hpp"

namespace llcw {

/// Everything the workbench needs to talk about one local field F with
/// residue field k = F_q: the cyclotomic value ring, the residue tower, and
/// the fixed non-square epsilon (eps := 1 when p = 2).
struct Context {
    ConfigPtr cfg;
    TowerPtr tower;
    long p = 0, f = 0, q = 0;
    long eps = 0; // element of k^x in tower encoding

    static Context make(long p, long f, long D = 2, long Dfield = 4);

    ScalarExt one() const { return ScalarExt::from_rational(cfg, 1); }
    ScalarExt rational(const mpq_class& r) const { return ScalarExt::from_rational(cfg, r); }
    ScalarExt root(long order, long e) const { return ScalarExt::root_of_unity(cfg, order, e); }
    ScalarExt sqrt_q() const { return ScalarExt::sqrt_q(cfg); }
    /// image of an integer in k (residue mod p)
    long k_of_int(long c) const { return tower->from_int(c); }
};

/// psi_d on F_{q^d}: x -> zeta_p^{lift(Tr to F_p)(x)}. Frobenius invariant.
struct AdditiveChar {
    const Context* ctx;
    long d = 1;
    ScalarExt value(long x) const;
};

/// chi_j on F_{q^d}^x with chi_j(gen_d^t) = zeta_{q^d-1}^{jt}.
struct MultChar {
    const Context* ctx = nullptr;
    long d = 1;
    long j = 0; // index mod q^d - 1

    long modulus() const { return power_long(ctx->q, d) - 1; }
    long order() const;
    bool is_trivial() const { return j % modulus() == 0; }
    MultChar times(const MultChar& o) const;
    MultChar inverse_char() const;
    ScalarExt value(long x) const; // x nonzero in F_{q^d}
    /// restriction to F_{q^e}^x, e | d: index j*(q^d-1)/(q^e-1) mod q^e-1
    MultChar restrict_to(long e) const;
};

/// Tamely ramified character of E^x, E/F unramified of degree d: a character
/// of the residue units plus a root-of-unity value at the fixed uniformizer.
struct TameCharacter {
    MultChar unit_part;
    long uv_order = 1; // uniformizer value = zeta_{uv_order}^{uv_exp}
    long uv_exp = 0;

    long d() const { return unit_part.d; }
    ScalarExt value_at_pi() const;
    /// value at u * pi^v for a unit with residue u
    ScalarExt value(long u, long v) const;
    bool is_unramified() const { return unit_part.is_trivial(); }
    bool is_trivial() const;
    bool is_quadratic() const;
    TameCharacter times(const TameCharacter& o) const;
    TameCharacter inverse_char() const;
    TameCharacter square() const { return times(*this); }
    bool same_as(const TameCharacter& o) const;

    static TameCharacter make(const Context& ctx, long d, long j, long uv_order, long uv_exp);
    static TameCharacter trivial(const Context& ctx, long d = 1);
};

/// The four quadratic characters of F^x for p != 2.
struct QuadCharKit {
    TameCharacter trivial, unram, ram_plus, ram_minus; // ram_plus has value +1 at pi
    static QuadCharKit make(const Context& ctx);
    std::array<const TameCharacter*, 4> all() const {
        return {&trivial, &unram, &ram_plus, &ram_minus};
    }
};

/// phi with trivial unit part and phi(pi) = zeta (zeta = +-1).
TameCharacter solve_unramified_quadratic(const Context& ctx, long a_exp, long zeta);

/// The unique ramified quadratic phi_2 of F^x with
/// phi_2(a^{-1} pi) = zeta * phi_2(-4 eps^kappa); p != 2 only.
TameCharacter solve_ramified_quadratic(const Context& ctx, long a_exp, long zeta, long kappa);

} // namespace llcw

#endif
