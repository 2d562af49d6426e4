#ifndef LLCW_LAURENT_HPP
#define LLCW_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "llcw/scalar.hpp"

namespace llcw {

/// Laurent polynomial in X = q^{-s} over ScalarExt.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(ConfigPtr cfg) : cfg_(std::move(cfg)) {}

    static LaurentPoly constant(const ScalarExt& c);
    static LaurentPoly monomial(const ScalarExt& c, long xpow);

    const ConfigPtr& config() const { return cfg_; }
    const std::map<long, ScalarExt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long min_deg() const; // throws on zero
    long max_deg() const;

    void add_term(long xpow, const ScalarExt& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const ScalarExt& c) const;
    bool operator==(const LaurentPoly& o) const;

    /// formal substitution X -> c * X^k (k may be negative, nonzero)
    LaurentPoly substitute(const ScalarExt& c, long k) const;

    /// exact division; nullopt if the divisor does not divide this exactly or
    /// a required leading-coefficient inverse does not exist
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  private:
    ConfigPtr cfg_;
    std::map<long, ScalarExt> t_; // xpow -> coeff, coeffs nonzero
};

/// Rational function num/den in X over ScalarExt. Equality is exact
/// (cross multiplication, so representative choice never matters).
class LaurentRat {
  public:
    LaurentRat() = default;
    LaurentRat(LaurentPoly num, LaurentPoly den);

    static LaurentRat from_poly(LaurentPoly p);
    static LaurentRat constant(const ScalarExt& c);
    static LaurentRat monomial(const ScalarExt& c, long xpow);
    static LaurentRat one(ConfigPtr cfg);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    LaurentRat operator+(const LaurentRat& o) const;
    LaurentRat operator-(const LaurentRat& o) const;
    LaurentRat operator*(const LaurentRat& o) const;
    LaurentRat operator*(const ScalarExt& c) const;
    LaurentRat reciprocal() const;
    LaurentRat operator/(const LaurentRat& o) const { return *this * o.reciprocal(); }
    bool operator==(const LaurentRat& o) const;
    bool operator!=(const LaurentRat& o) const { return !(*this == o); }

    LaurentRat substitute(const ScalarExt& c, long k) const;

  private:
    void normalize();
    LaurentPoly num_, den_;
};

/// Assertion that a rational function is literally c * X^k.
struct MonomialForm {
    ScalarExt coeff;
    long xpow = 0;

    LaurentRat as_rat() const { return LaurentRat::monomial(coeff, xpow); }
    /// extract from a LaurentRat; throws consistency_error if not a monomial
    static MonomialForm of(const LaurentRat& r);
};

} // namespace llcw

#endif
