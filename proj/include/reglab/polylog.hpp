#pragma once

#include <optional>
#include <vector>

#include "reglab/rational.hpp"
#include "reglab/series.hpp"

namespace reglab {

/// Argument for the dilogarithm family: a p-adic number or the point at
/// infinity.
struct PadicOrInf {
    bool inf = false;
    PadicNumber v;

    static PadicOrInf infinity() { return {true, PadicNumber()}; }
    static PadicOrInf finite(const PadicNumber& x) { return {false, x}; }
};

enum class Route { direct_series, inversion, reflection, convention };

const char* route_name(Route r);

struct ColemanValue {
    PadicNumber value;
    Route route;
};

/// Li_2(z) = sum z^n/n^2 on v(z) > 0, extended by the inversion and
/// reflection identities; 0 at 0 and infinity by convention.
ColemanValue li2(const PadicOrInf& z, const PadicConfig& cfg);
/// L_2 = Li_2 + log(z)log(1-z), 0 at 0 and infinity.
ColemanValue ltwo(const PadicOrInf& z, const PadicConfig& cfg);
/// L_2^mod = Li_2 + (1/2) log(z)log(1-z), 0 at 0, 1 and infinity.
ColemanValue lmod2(const PadicOrInf& z, const PadicConfig& cfg);

/// num / prod (z-b)^k with an unfactored numerator; the shape rational
/// pieces of a ColemanExpression.
struct RationalPiece {
    Polynomial num = Polynomial::constant(1);
    std::map<Rat, int> den;  // center -> order >= 1

    static RationalPiece one() { return {}; }
    static RationalPiece from_poly(const Polynomial& q) { return {q, {}}; }
    static RationalPiece pole(const Rat& c, const Rat& b, int k) {
        return {Polynomial::constant(c), {{b, k}}};
    }
    static RationalPiece of(const RationalFunction& f);
    bool is_one() const { return den.empty() && num.degree() == 0 && num.coeff(0) == 1; }
    QValue eval(const ProjPoint& y) const;
};

/// Closed-form combination of rationals, logs, products of two logs, and
/// dilogarithms; the target algebra of the antiderivative engine.
class ColemanExpression {
  public:
    enum class Shape { rational, log, loglog, ltwo, constant };

    struct Term {
        Shape shape;
        PadicNumber coeff;
        RationalPiece mult;          // rational / log / ltwo multiplier
        RationalFunction arg1;       // log argument, loglog first, ltwo argument
        RationalFunction arg2;       // loglog second, ltwo: 1 - argument
    };

    ColemanExpression() = default;

    static ColemanExpression zero() { return {}; }
    static ColemanExpression constant(const PadicNumber& c);
    static ColemanExpression rational(const PadicNumber& coeff, const RationalPiece& r);
    static ColemanExpression log_term(const PadicNumber& coeff, const RationalFunction& arg,
                                      const RationalPiece& mult = RationalPiece::one());
    static ColemanExpression loglog_term(const PadicNumber& coeff, const RationalFunction& a1,
                                         const RationalFunction& a2);
    static ColemanExpression ltwo_term(const PadicNumber& coeff, const RationalFunction& mu,
                                       const std::optional<RationalFunction>& one_minus_mu = std::nullopt,
                                       const RationalPiece& mult = RationalPiece::one());
    // log(f) as a single term; L2mod(f) as L2(f) - (1/2) log(f) log(1-f).
    static ColemanExpression log_of(const PadicNumber& coeff, const RationalFunction& f);
    static ColemanExpression lmod_of(const PadicNumber& coeff, const RationalFunction& f,
                                     const std::optional<RationalFunction>& one_minus = std::nullopt);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    ColemanExpression operator+(const ColemanExpression& o) const;
    ColemanExpression operator-(const ColemanExpression& o) const;
    ColemanExpression scaled(const PadicNumber& c) const;

  private:
    std::vector<Term> terms_;
};

/// Linear combination c0 + sum c_i log(z - a_i): the log side of the
/// integrands the engine accepts.
struct LogCombination {
    PadicNumber constant;
    std::vector<std::pair<PadicNumber, Rat>> logs;  // coefficient, root a

    static LogCombination of_log(const RationalFunction& f, const PadicConfig& cfg);
    static LogCombination only_constant(const PadicNumber& c) { return {c, {}}; }
    bool trivial() const;
};

/// Closed-form antiderivative of (c0 + sum c_i log(z-a_i)) * psi dz, built
/// from partial fractions, d L2(u) = log(u) dlog(1-u), and integration by
/// parts.  Every emitted L2/log shape carries no hidden constant.
ColemanExpression dilog_integrate(const LogCombination& L, const RationalForm& psi,
                                  const PadicConfig& cfg);

/// Antiderivative of a plain rational form as an expression
/// (rational pieces plus residue logs).
ColemanExpression antiderivative_expression(const RationalForm& w, const PadicConfig& cfg);

/// integral of E * psi dz where E contains rational/log/constant terms only.
ColemanExpression integrate_expression_times_form(const ColemanExpression& E,
                                                  const RationalForm& psi,
                                                  const PadicConfig& cfg);

/// Optional alternate local parameter t with standard = c * t * u(t).
struct ParamChoice {
    PadicNumber scale;
    LaurentSeries unit;  // u, with u(0) = 1
};

/// Local expansion of a ColemanExpression around a center of P^1 in the
/// standard parameter (z - y, or 1/z at infinity), optionally rewritten in
/// an alternate parameter.  L2 shapes expand through their differential,
/// with the constant pinned by the constant-term conventions.
LogLaurent expand_expression(const ColemanExpression& E, const ProjPoint& y,
                             const PadicConfig& cfg,
                             const std::optional<ParamChoice>& param = std::nullopt);

/// Expansion helpers shared with the geometry layer.
LaurentSeries expand_rational_piece(const RationalPiece& r, const ProjPoint& y,
                                    const PadicConfig& cfg);
LogLaurent expand_log_of_rational(const RationalFunction& f, const ProjPoint& y,
                                  const PadicConfig& cfg);
LaurentSeries expand_dlog(const RationalFunction& f, const ProjPoint& y, const PadicConfig& cfg);
// Leading coefficient of f at y with respect to the standard parameter.
Rat leading_coeff_at(const RationalFunction& f, const ProjPoint& y);

/// Pointwise value at a regular point.
PadicNumber eval_expr(const ColemanExpression& E, const ProjPoint& y, const PadicConfig& cfg);

/// Constant term of the local expansion at y.
PadicNumber constant_term_at(const ColemanExpression& E, const ProjPoint& y,
                             const PadicConfig& cfg,
                             const std::optional<ParamChoice>& param = std::nullopt);

PadicNumber qvalue_to_padic(const QValue& v, const PadicConfig& cfg);
PadicOrInf qvalue_to_arg(const QValue& v, const PadicConfig& cfg);

}  // namespace reglab
