#ifndef LLCW_LLC_HPP
#define LLCW_LLC_HPP

#include <string>

#include "llcw/rs_gamma.hpp"

namespace llcw {

enum class ConstituentType { Symplectic, Orthogonal };

/// Wild constituent: the L-parameter of a self-dual GL simple supercuspidal.
struct GLLift {
    long m = 0; // dimension
    GLSSCParams lift;
    long swan = 1;
};

/// Tame constituent: a quadratic character of F^x.
struct TameQuadratic {
    TameCharacter chi;
    long swan = 0;
};

struct ParameterConstituent {
    std::variant<GLLift, TameQuadratic> rep;
    ConstituentType type = ConstituentType::Orthogonal;

    long dim() const {
        return std::holds_alternative<GLLift>(rep) ? std::get<GLLift>(rep).m : 1;
    }
    long swan() const {
        return std::holds_alternative<GLLift>(rep) ? std::get<GLLift>(rep).swan : 0;
    }
};

enum class SOFamily { Odd, EvenP2, EvenOddP };

struct ParameterDecomposition {
    SOFamily family;
    long n = 0;
    std::vector<ParameterConstituent> constituents; // wild first, then unram, then ram

    long dim_total() const;
    long swan_total() const;
};

ParameterDecomposition llc(const Context& ctx, const SOOddParams& g);
ParameterDecomposition llc(const Context& ctx, const SOEvenParams& g);

/// Checks gamma(SO side) = product of constituent gammas for every tame tau
/// with tau(pi) of order <= uv_order_bound, all unit parts.
struct GammaProductReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
GammaProductReport verify_gamma_product(const Context& ctx, const SOOddParams& g,
                                        long uv_order_bound = 8);
GammaProductReport verify_gamma_product(const Context& ctx, const SOEvenParams& g,
                                        long uv_order_bound = 8);

/// Structural invariants of a decomposition: dimension sum, Swan total,
/// pairwise distinctness, determinant data, lift self-duality.
/// Throws consistency_error on violation.
void det_and_type_check(const Context& ctx, const ParameterDecomposition& dec);

struct LPacketData {
    long num_constituents = 0;
    long s_bar = 1;       // |S-bar_phi|
    long packet_size = 1;
};
LPacketData lpacket_data(const ParameterDecomposition& dec);

/// Independent consistency of the SO-even p != 2 lift data:
/// zeta * eta == zeta' and b == a' with eta = q^{-1/2} G(omega_0, psi)
/// omega_0(-1) xi and b = (-1)^n 4 a eps^kappa; also G^2 = omega_0(-1) q.
bool appendix_consistency(const Context& ctx, const SOEvenParams& g);

} // namespace llcw

#endif
