#pragma once

#include <string>
#include <vector>

#include "reglab/p1geom.hpp"

namespace reglab {

/// One summand c * [g]_2 (x) f.  1 - g is factored once at construction.
struct SymbolTerm {
    Rat c;
    RationalFunction g;
    RationalFunction f;
    RationalFunction one_minus_g;
};

struct SymbolElement {
    std::vector<SymbolTerm> terms;

    void add(const Rat& c, const RationalFunction& g, const RationalFunction& f);
    // All functions whose zeros and poles must be removed from the wide open.
    std::vector<RationalFunction> support_functions() const;
};

/// Exact holomorphic-on-U data for the regulator formulas: an exact
/// rational 1-form omega = d(F) together with its chosen antiderivative
/// F_omega (zero polynomial constant term).
struct Omega {
    RationalForm form;
    std::vector<RationalPiece> F_pieces;

    static Omega exact(const RationalForm& w);
    static Omega zero() { return Omega{RationalForm(), {}}; }

    bool is_zero() const { return form.is_zero(); }
    // psi * F_omega as an exact form.
    RationalForm times_F(const RationalForm& psi) const;
    QValue F_at(const ProjPoint& y) const;
    ColemanExpression F_expr(const PadicConfig& cfg) const;
    // Points that must be removed for omega to be holomorphic on U.
    std::vector<ProjPoint> pole_points() const;
};

/// True iff every g_i, 1-g_i, f_i is invertible on U (constants must be
/// p-adic units; zeros and poles must be removed points).
bool check_special_units(const SymbolElement& alpha, const WideOpen& U, const PadicConfig& cfg);

/// Exact linear-algebra test of sum c_i (1-g_i) (x) (g_i /\ f_i) = 0.
bool check_ocond(const SymbolElement& alpha);
/// The tilde variant: sum c_i (1-g_i) /\ g_i /\ f_i = 0.
bool check_ocond_tilde(const SymbolElement& alpha);

/// Necessary numeric conditions for the boundary map to vanish, reported
/// per point of the union of the divisors of the f_i.
struct CcondPoint {
    ProjPoint x;
    bool unverifiable = false;   // some g_i(x) outside the reachable locus
    PadicNumber lmod_sum;        // sum c_i ord_x(f_i) L2mod(g_i(x))
    bool lmod_zero = false;
    bool wedge_zero = false;     // sum c_i ord_x(f_i) (1-g_i(x)) /\ g_i(x) = 0
};
std::vector<CcondPoint> check_ccond_numeric(const SymbolElement& alpha, const PadicConfig& cfg);

/// Wide open on which all the data of (alpha, omega) lives.
WideOpen wide_open_for(const SymbolElement& alpha, const Omega& omega, const PadicConfig& cfg);

struct RegReport {
    PadicNumber value;
    std::vector<std::pair<std::string, PadicNumber>> locals;  // label -> local value
    long nonzero_locals() const;
};

/// Triple-index engine: sum_i c_i <log f_i, log g_i; int F_omega dlog(1-g_i)>_gl.
RegReport regmap_thm3(const SymbolElement& alpha, const Omega& omega, const WideOpen& U,
                      const PadicConfig& cfg);

/// Divisor engine: sum_i c_i (2 int_(f_i) L2(g_i) omega
///                            - 2 sum_y ord_y(f_i) F_omega(y) L2mod(g_i(y))).
RegReport regmap_thm2(const SymbolElement& alpha, const Omega& omega, const WideOpen& U,
                      const PadicConfig& cfg);

/// The holomorphic formula without the correction sum.
RegReport regmap_thm1(const SymbolElement& alpha, const Omega& omega, const WideOpen& U,
                      const PadicConfig& cfg);

/// Antisymmetrized triple-index engine, coefficient 2/3.
RegReport regmap_thm4a(const SymbolElement& alpha, const Omega& omega, const WideOpen& U,
                       const PadicConfig& cfg);

/// Antisymmetrized divisor engine, coefficient 2/3.
RegReport regmap_thm4b(const SymbolElement& alpha, const Omega& omega, const WideOpen& U,
                       const PadicConfig& cfg);

}  // namespace reglab
