#ifndef LLCW_TAME_REPS_HPP
#define LLCW_TAME_REPS_HPP

#include "llcw/local_factors.hpp"

namespace llcw {

enum class SelfDualType { None, Orthogonal, Symplectic };

/// Ind_{W_E}^{W_F} chi for E/F unramified of degree d, chi tame with unit
/// index j mod q^d - 1 and chi(pi) = value_at_pi (+-1 when self-dual).
struct TameInducedRep {
    long d = 2;
    long j = 0;
    long value_at_pi = 1;

    long e() const { return d / 2; }

    static TameInducedRep make(const Context& ctx, long d, long j, long value_at_pi);
};

struct TameClassification {
    bool regular = false;
    bool self_dual = false;
    SelfDualType type = SelfDualType::None;
};

/// Regularity = full Galois orbit of j under multiplication by q mod q^d - 1;
/// self-duality = j q^{d/2} == -j (d even) with value_at_pi^2 = 1; type by the
/// restriction to the index-2 subfield: trivial -> orthogonal, the nontrivial
/// unramified quadratic -> symplectic.
TameClassification classify_tame(const Context& ctx, long d, long j, long value_at_pi);

/// Independent determinant oracle: Ind chi is symplectic iff det(Ind chi) =
/// (nontrivial unramified quadratic) * chi|_{F^x} is trivial (d even).
SelfDualType classify_by_determinant(const Context& ctx, long d, long j,
                                     long value_at_pi);

struct SymExtL {
    LaurentRat L_sym2, L_ext2;
};

/// Sym^2 / wedge^2 L-factors of a self-dual tame induced rep: the factor on
/// the side matching the type is (1 + X^e)^{-1} when chi^2 != 1, else 1.
SymExtL sym_ext_L(const Context& ctx, const TameInducedRep& rep);

/// The group of unramified characters omega with omega(pi)^d = 1.
std::vector<TameCharacter> unramified_twist_fixers(const Context& ctx, long d);

} // namespace llcw

#endif
