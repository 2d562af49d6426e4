#ifndef LLCW_JSON_IO_HPP
#define LLCW_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "llcw/fdc.hpp"
#include "llcw/llc.hpp"
#include "llcw/tame_reps.hpp"
#include "llcw/verify.hpp"

namespace llcw {

using Json = nlohmann::ordered_json;

/// Exact serialization: root-of-unity form {order, exponent} when the value
/// is one, otherwise the full coefficient vector over Q(zeta_M) with the
/// sqrt(q) component.
Json scalar_to_json(const ScalarExt& z);

Json laurent_to_json(const LaurentRat& r);
/// Renders c1 q^{a1 - b1 s} + ... (num) / (den), X = q^{-s}.
std::string laurent_pretty(const LaurentRat& r);

/// {family:"GL"|"SO_odd"|"SO_even", n_or_N, omega_j, a_exp, zeta, xi, kappa}
Json params_to_json(const Context& ctx, const CanonicalParams& c);
CanonicalParams params_from_json(const Context& ctx, const Json& j);

Json decomposition_to_json(const Context& ctx, const ParameterDecomposition& dec);

Json suite_report_to_json(const SuiteReport& rep, bool list_instances);

Json fdc_to_json(FDCFamily fam, long n, long q);

Json tame_verdict_to_json(const Context& ctx, long d, long j, long value_at_pi);

} // namespace llcw

#endif
