#include "llcw/json_io.hpp"

#include <numeric>
#include <sstream>

namespace llcw {

namespace {

std::string q_str(const mpq_class& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Json cyclo_coeffs(const Cyclo& c) {
    Json a = Json::array();
    for (const auto& r : c.coeffs()) a.push_back(q_str(r));
    return a;
}

/// root-of-unity exponent k mod M reduced to {order, exponent}
Json root_json(long M, long k) {
    k = ((k % M) + M) % M;
    long g = std::gcd(k, M);
    long order = k == 0 ? 1 : M / g;
    return Json{{"order", order}, {"exponent", k == 0 ? 0 : k / g}};
}

long pm_of_scalar(const ScalarExt& z) {
    auto r = z.as_root_of_unity(2);
    if (!r) throw consistency_error("expected a sign");
    return *r == 0 ? 1 : -1;
}

std::string pretty_coeff(const ScalarExt& c, long xpow) {
    long M = c.config()->M();
    std::ostringstream os;
    if (auto m = c.as_unit_monomial(M)) {
        Json rt = root_json(m->root_order, m->root_exp);
        long ord = rt["order"].get<long>(), ex = rt["exponent"].get<long>();
        bool printed = false;
        if (ord == 1) {
            if (m->sqrt_pow == 0 && m->q_pow == 0 && xpow == 0) {
                os << "1";
                printed = true;
            }
        } else if (ord == 2) {
            os << "-";
        } else {
            os << "zeta_" << ord << "^" << ex;
            printed = true;
        }
        // combine q^{q_pow + sqrt_pow/2} with X^xpow = q^{-xpow s}
        long num2 = 2 * m->q_pow + m->sqrt_pow; // exponent times 2
        if (num2 != 0 || xpow != 0) {
            if (printed) os << " ";
            os << "q^{";
            if (num2 != 0) {
                if (num2 % 2 == 0) os << num2 / 2;
                else os << num2 << "/2";
            }
            if (xpow != 0) {
                if (num2 != 0) os << (xpow > 0 ? " - " : " + ");
                else if (xpow > 0) os << "-";
                long ax = xpow > 0 ? xpow : -xpow;
                if (ax != 1) os << ax;
                os << "s";
            }
            os << "}";
            printed = true;
        }
        if (!printed) os << "1";
        return os.str();
    }
    os << "(" << scalar_to_json(c).dump() << ")";
    if (xpow != 0) os << " q^{" << -xpow << "s}";
    return os.str();
}

std::string pretty_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [xpow, c] : p.terms()) {
        if (!first) os << " + ";
        os << pretty_coeff(c, xpow);
        first = false;
    }
    return os.str();
}

Json poly_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [xpow, c] : p.terms())
        terms.push_back(Json{{"xpow", xpow}, {"coeff", scalar_to_json(c)}});
    return terms;
}

} // namespace

Json scalar_to_json(const ScalarExt& z) {
    long M = z.config()->M();
    if (auto m = z.as_unit_monomial(M)) {
        Json j = root_json(m->root_order, m->root_exp);
        if (m->sqrt_pow != 0) j["sqrt_q_pow"] = m->sqrt_pow;
        if (m->q_pow != 0) j["q_pow"] = m->q_pow;
        return j;
    }
    return Json{{"M", M}, {"a", cyclo_coeffs(z.a())}, {"b", cyclo_coeffs(z.b())}};
}

Json laurent_to_json(const LaurentRat& r) {
    return Json{{"num", poly_json(r.num())}, {"den", poly_json(r.den())}};
}

std::string laurent_pretty(const LaurentRat& r) {
    std::string num = pretty_poly(r.num());
    std::string den = pretty_poly(r.den());
    if (den == "1") return num;
    return "(" + num + ") / (" + den + ")";
}

Json params_to_json(const Context& ctx, const CanonicalParams& c) {
    (void)ctx;
    if (std::holds_alternative<GLSSCParams>(c)) {
        const auto& g = std::get<GLSSCParams>(c);
        return Json{{"family", "GL"},
                    {"n_or_N", g.N},
                    {"omega_j", g.omega_j},
                    {"a_exp", g.a_exp},
                    {"zeta", scalar_to_json(g.zeta)}};
    }
    if (std::holds_alternative<SOOddParams>(c)) {
        const auto& g = std::get<SOOddParams>(c);
        return Json{{"family", "SO_odd"},
                    {"n_or_N", g.n},
                    {"a_exp", g.a_exp},
                    {"zeta", g.zeta}};
    }
    const auto& g = std::get<SOEvenParams>(c);
    return Json{{"family", "SO_even"}, {"n_or_N", g.n},   {"xi", g.xi},
                {"kappa", g.kappa},    {"a_exp", g.a_exp}, {"zeta", g.zeta}};
}

CanonicalParams params_from_json(const Context& ctx, const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n_or_N"))
        throw config_error("params JSON needs family and n_or_N");
    std::string fam = j.at("family").get<std::string>();
    long n = j.at("n_or_N").get<long>();
    auto get_long = [&](const char* key, long dflt, bool required) {
        if (!j.contains(key)) {
            if (required) throw config_error(std::string("missing field ") + key);
            return dflt;
        }
        return j.at(key).get<long>();
    };
    if (fam == "GL") {
        GLSSCParams g;
        g.N = n;
        g.omega_j = get_long("omega_j", 0, false);
        g.a_exp = get_long("a_exp", 0, true);
        const Json& z = j.at("zeta");
        g.zeta = ctx.root(z.at("order").get<long>(), z.at("exponent").get<long>());
        return g;
    }
    if (fam == "SO_odd") {
        SOOddParams g;
        g.n = n;
        g.a_exp = get_long("a_exp", 0, true);
        g.zeta = get_long("zeta", 1, true);
        if (g.zeta != 1 && g.zeta != -1) throw config_error("zeta must be +-1");
        return g;
    }
    if (fam == "SO_even") {
        long zeta = get_long("zeta", 1, true);
        if (zeta != 1 && zeta != -1) throw config_error("zeta must be +-1");
        return make_so_even(ctx, n, get_long("xi", 1, false),
                            get_long("kappa", 0, false), get_long("a_exp", 0, true),
                            zeta);
    }
    throw config_error("unknown family: " + fam);
}

Json decomposition_to_json(const Context& ctx, const ParameterDecomposition& dec) {
    (void)ctx;
    Json cons = Json::array();
    for (const auto& c : dec.constituents) {
        Json e;
        if (std::holds_alternative<GLLift>(c.rep)) {
            const auto& l = std::get<GLLift>(c.rep);
            e = Json{{"kind", "gl_lift"},
                     {"m", l.m},
                     {"omega_j", l.lift.omega_j},
                     {"a_exp", l.lift.a_exp},
                     {"zeta", scalar_to_json(l.lift.zeta)}};
        } else {
            const auto& t = std::get<TameQuadratic>(c.rep);
            e = Json{{"kind", "quad"},
                     {"unramified", t.chi.is_unramified()},
                     {"value_at_pi", pm_of_scalar(t.chi.value_at_pi())}};
        }
        e["type"] = c.type == ConstituentType::Symplectic ? "symplectic"
                                                          : "orthogonal";
        e["swan"] = c.swan();
        cons.push_back(e);
    }
    auto pk = lpacket_data(dec);
    return Json{{"family", dec.family == SOFamily::Odd       ? "SO_odd"
                           : dec.family == SOFamily::EvenP2  ? "SO_even_p2"
                                                             : "SO_even_odd_p"},
                {"n", dec.n},
                {"constituents", cons},
                {"dim_total", dec.dim_total()},
                {"swan_total", dec.swan_total()},
                {"packet_size", pk.packet_size}};
}

Json suite_report_to_json(const SuiteReport& rep, bool list_instances) {
    Json j{{"suite", rep.suite},
           {"checked", rep.checked},
           {"failures", rep.failures()},
           {"ok", rep.ok()}};
    if (list_instances) {
        Json recs = Json::array();
        for (const auto& r : rep.records) {
            Json e{{"instance", r.instance}, {"checked", r.checked}, {"ok", r.ok}};
            if (!r.ok) e["detail"] = r.detail;
            recs.push_back(e);
        }
        j["records"] = recs;
    } else {
        Json fails = Json::array();
        for (const auto& r : rep.records)
            if (!r.ok)
                fails.push_back(Json{{"instance", r.instance}, {"detail", r.detail}});
        if (!fails.empty()) j["failed_records"] = fails;
    }
    return j;
}

Json fdc_to_json(FDCFamily fam, long n, long q) {
    auto sols = solve_constraints(fam, n, q);
    Json arr = Json::array();
    for (const auto& s : sols)
        arr.push_back(Json{{"r", s.r}, {"e", s.e}, {"artin", s.artin}});
    Json j{{"family", fam == FDCFamily::SOOdd       ? "SO_odd"
                      : fam == FDCFamily::SOEvenP2  ? "SO_even_p2"
                                                    : "SO_even_odd_p"},
           {"n", n},
           {"q", q}};
    if (sols.size() == 1) {
        j["r"] = sols[0].r;
        j["artin"] = sols[0].artin;
    }
    j["solutions"] = arr;
    return j;
}

Json tame_verdict_to_json(const Context& ctx, long d, long j, long value_at_pi) {
    auto cl = classify_tame(ctx, d, j, value_at_pi);
    Json out{{"d", d},
             {"j", j},
             {"value_at_pi", value_at_pi},
             {"regular", cl.regular},
             {"self_dual", cl.self_dual},
             {"type", cl.type == SelfDualType::Orthogonal   ? "orthogonal"
                      : cl.type == SelfDualType::Symplectic ? "symplectic"
                                                            : "none"}};
    if (cl.self_dual) {
        auto det_type = classify_by_determinant(ctx, d, j, value_at_pi);
        out["determinant_type"] = det_type == SelfDualType::Orthogonal
                                      ? "orthogonal"
                                      : det_type == SelfDualType::Symplectic
                                            ? "symplectic"
                                            : "none";
    }
    if (cl.regular && cl.self_dual) {
        auto rep = TameInducedRep::make(ctx, d, j, value_at_pi);
        auto L = sym_ext_L(ctx, rep);
        out["L_sym2"] = laurent_pretty(L.L_sym2);
        out["L_ext2"] = laurent_pretty(L.L_ext2);
    }
    return out;
}

} // namespace llcw
