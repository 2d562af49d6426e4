#include "llcw/tame_reps.hpp"

namespace llcw {

namespace {

long orbit_size(long j, long q, long m) {
    long cur = ((j % m) + m) % m;
    long start = cur;
    long size = 0;
    do {
        cur = cur * q % m;
        ++size;
    } while (cur != start);
    return size;
}

bool self_dual_index(long j, long q, long d, long m) {
    if (d % 2 != 0) return ((2 * j) % m + m) % m == 0; // chi^g = chi^{-1} forces order 2
    long qe = power_long(q, d / 2) % m;
    return ((j * qe + j) % m + m) % m == 0;
}

} // namespace

TameInducedRep TameInducedRep::make(const Context& ctx, long d, long j,
                                    long value_at_pi) {
    long m = power_long(ctx.q, d) - 1;
    j = ((j % m) + m) % m;
    if (self_dual_index(j, ctx.q, d, m) && value_at_pi != 1 && value_at_pi != -1)
        throw precondition_error("self-dual rep needs value at pi in {+-1}");
    return TameInducedRep{d, j, value_at_pi};
}

TameClassification classify_tame(const Context& ctx, long d, long j, long value_at_pi) {
    long m = power_long(ctx.q, d) - 1;
    j = ((j % m) + m) % m;
    TameClassification out;
    out.regular = orbit_size(j, ctx.q, m) == d;
    out.self_dual = self_dual_index(j, ctx.q, d, m) &&
                    value_at_pi * value_at_pi == 1;
    if (!out.self_dual || d % 2 != 0) return out;
    // restriction to the degree-e subfield units: index j mod q^e - 1
    long me = power_long(ctx.q, d / 2) - 1;
    bool unit_trivial = j % me == 0;
    if (unit_trivial && value_at_pi == 1) out.type = SelfDualType::Orthogonal;
    else if (unit_trivial && value_at_pi == -1) out.type = SelfDualType::Symplectic;
    return out;
}

SelfDualType classify_by_determinant(const Context& ctx, long d, long j,
                                     long value_at_pi) {
    if (d % 2 != 0) return SelfDualType::None;
    long m = power_long(ctx.q, d) - 1;
    j = ((j % m) + m) % m;
    if (!self_dual_index(j, ctx.q, d, m) || value_at_pi * value_at_pi != 1)
        return SelfDualType::None;
    // det(Ind 1) is the nontrivial unramified quadratic (d even); the transfer
    // of chi to F^x keeps value_at_pi and restricts the unit index mod q - 1
    long mF = ctx.q - 1;
    bool res_unit_trivial = mF == 0 || j % mF == 0;
    long det_at_pi = -value_at_pi; // mu_ur(pi) * chi(pi)
    bool det_trivial = res_unit_trivial && det_at_pi == 1;
    return det_trivial ? SelfDualType::Symplectic : SelfDualType::Orthogonal;
}

SymExtL sym_ext_L(const Context& ctx, const TameInducedRep& rep) {
    auto cls = classify_tame(ctx, rep.d, rep.j, rep.value_at_pi);
    if (!cls.self_dual || cls.type == SelfDualType::None)
        throw precondition_error("sym_ext_L needs a self-dual even-degree rep");
    long m = power_long(ctx.q, rep.d) - 1;
    bool chi_self_dual = (2 * rep.j) % m == 0 && rep.value_at_pi * rep.value_at_pi == 1;
    LaurentRat nontrivial = LaurentRat::one(ctx.cfg);
    if (!chi_self_dual) {
        LaurentPoly den = LaurentPoly::constant(ctx.one());
        den.add_term(rep.e(), ctx.one());
        nontrivial = LaurentRat(LaurentPoly::constant(ctx.one()), den);
    }
    SymExtL out{LaurentRat::one(ctx.cfg), LaurentRat::one(ctx.cfg)};
    if (cls.type == SelfDualType::Orthogonal) out.L_ext2 = nontrivial;
    else out.L_sym2 = nontrivial;
    return out;
}

std::vector<TameCharacter> unramified_twist_fixers(const Context& ctx, long d) {
    std::vector<TameCharacter> v;
    for (long k = 0; k < d; ++k) v.push_back(TameCharacter::make(ctx, 1, 0, d, k));
    return v;
}

} // namespace llcw
