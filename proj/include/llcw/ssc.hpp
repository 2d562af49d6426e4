#ifndef LLCW_SSC_HPP
#define LLCW_SSC_HPP

#include <variant>
#include <vector>

#include "llcw/characters.hpp"

namespace llcw {

/// Simple supercuspidal class of GL_N: pi^{GL_N}_{omega, a, zeta}.
struct GLSSCParams {
    long N = 1;
    long omega_j = 0;   // character of k^x
    long a_exp = 0;     // a = gen^a_exp in k^x
    ScalarExt zeta;     // root of unity
};

/// pi^{SO_{2n+1}}_{a, zeta}
struct SOOddParams {
    long n = 1;
    long a_exp = 0;
    long zeta = 1; // +-1
};

/// pi^{SO_{2n}}_{xi, kappa, a, zeta}; p = 2 forces xi = 1, kappa = 0
struct SOEvenParams {
    long n = 2;
    long xi = 1;    // +-1
    long kappa = 0; // alpha = eps^kappa
    long a_exp = 0;
    long zeta = 1; // +-1
};

SOEvenParams make_so_even(const Context& ctx, long n, long xi, long kappa, long a_exp,
                          long zeta);

GLSSCParams theta_dual(const Context& ctx, const GLSSCParams& g);
bool is_self_dual(const Context& ctx, const GLSSCParams& g);
bool gl_params_equal(const Context& ctx, const GLSSCParams& x, const GLSSCParams& y);

std::vector<GLSSCParams> enumerate_gl(const Context& ctx, long N, long zeta_order_bound);
std::vector<SOOddParams> enumerate_so_odd(const Context& ctx, long n);
std::vector<SOEvenParams> enumerate_so_even(const Context& ctx, long n);

/// Parameter dictionaries of the other papers' conventions. The alternative
/// uniformizer pi' is carried as its unit multiplier: pi' = u * pi, u = gen^u_exp.
enum class DictSource { AL16, Adr16, AK21, Oi19 };

struct DictParams {
    DictSource src;
    long n_or_N = 0;
    long u_exp = 0;       // pi' = gen^{u_exp} * pi (AL16 / Adr16 / AK21)
    long omega_j = 0;     // AL16, AK21
    ScalarExt zeta_gl;    // AL16
    long zeta_pm = 1;     // SO families
    long alpha_exp = 0;   // AK21: alpha, must be 1 or eps
    long a_exp = 0;       // Oi19
};

using CanonicalParams = std::variant<GLSSCParams, SOOddParams, SOEvenParams>;

CanonicalParams dict_convert(const Context& ctx, const DictParams& d);
DictParams dict_convert_back(const Context& ctx, DictSource src, const CanonicalParams& c);

} // namespace llcw

#endif
