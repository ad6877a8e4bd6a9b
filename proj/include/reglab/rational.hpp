#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reglab/errors.hpp"

namespace reglab {

using Rat = mpq_class;

/// Dense polynomial over Q, used for the exact side of the geometry.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rat& a) { return Polynomial({a}); }
    static Polynomial linear(const Rat& a) { return Polynomial({-a, 1}); }  // z - a
    static Polynomial z() { return Polynomial({0, 1}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(long i) const {
        return (i < 0 || i >= static_cast<long>(c_.size())) ? Rat(0) : c_[i];
    }
    Rat lead() const { return is_zero() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& a) const;
    Polynomial derivative() const;
    Rat eval(const Rat& x) const;

    // Quotient and remainder by a nonzero divisor.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const;

    // Taylor coefficients around z = center (exact, full length).
    std::vector<Rat> taylor(const Rat& center) const;

    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Factors a polynomial into linear factors over Q via the rational root
/// theorem; throws "requires splitting field" when a non-linear factor
/// remains.
struct SplitFactors {
    Rat lead;
    std::map<Rat, int> roots;  // root -> multiplicity
};
SplitFactors split_poly(const Polynomial& f);

/// Point of P^1(Q).
struct ProjPoint {
    bool inf = false;
    Rat a;  // meaningful when !inf

    static ProjPoint infinity() { return {true, Rat(0)}; }
    static ProjPoint finite(const Rat& v) { return {false, v}; }
    bool operator<(const ProjPoint& o) const {
        if (inf != o.inf) return !inf && o.inf;  // finite points first
        if (inf) return false;
        return a < o.a;
    }
    bool operator==(const ProjPoint& o) const { return inf == o.inf && (inf || a == o.a); }
    std::string to_string() const;
};

/// Value of a rational function at a point of P^1.
struct QValue {
    bool inf = false;
    Rat v;
    bool is_zero() const { return !inf && v == 0; }
    bool is_one() const { return !inf && v == 1; }
};

/// Nonzero rational function over Q kept in split factored form:
/// lead * prod (z - a)^{m_a} with m_a in Z \ {0}.
class RationalFunction {
  public:
    RationalFunction() : lead_(1) {}  // the constant 1
    static RationalFunction constant(const Rat& c);
    static RationalFunction z() { return linear(Rat(0)); }
    static RationalFunction linear(const Rat& a);  // z - a
    static RationalFunction from_factors(const Rat& lead, std::map<Rat, int> factors);
    // Factor both polynomials; common roots cancel.
    static RationalFunction from_fraction(const Polynomial& num, const Polynomial& den);
    static RationalFunction from_poly(const Polynomial& f) {
        return from_fraction(f, Polynomial::constant(1));
    }
    // (az + b) / (cz + d), ad - bc != 0
    static RationalFunction mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

    const Rat& lead() const { return lead_; }
    const std::map<Rat, int>& factors() const { return fac_; }
    bool is_constant() const { return fac_.empty(); }
    Rat constant_value() const;

    long degree_num() const;
    long degree_den() const;
    // ord at a point of P^1 (at infinity: deg den - deg num).
    long ord_at(const ProjPoint& y) const;

    QValue eval(const ProjPoint& y) const;

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;
    RationalFunction scaled(const Rat& c) const;

    // 1 - f, refactored; throws when the numerator does not split over Q.
    RationalFunction one_minus() const;
    // f - c, refactored.
    RationalFunction minus_constant(const Rat& c) const;

    Polynomial numerator_poly() const;
    Polynomial denominator_poly() const;

    bool operator==(const RationalFunction& o) const {
        return lead_ == o.lead_ && fac_ == o.fac_;
    }

    std::string to_string() const;

  private:
    Rat lead_;
    std::map<Rat, int> fac_;  // root -> signed multiplicity, never 0
};

/// Rational 1-form r(z) dz in partial-fraction normal form:
/// (polynomial + sum over centers b of sum_k c_{b,k} (z-b)^{-k}) dz.
class RationalForm {
  public:
    RationalForm() = default;

    static RationalForm from_rational(const RationalFunction& f);
    static RationalForm dlog(const RationalFunction& f);
    static RationalForm from_num_den(const Polynomial& num, const Rat& den_lead,
                                     const std::map<Rat, int>& den_factors);

    bool is_zero() const { return poly_.is_zero() && poles_.empty(); }
    const Polynomial& poly() const { return poly_; }
    const std::map<Rat, std::map<int, Rat>>& poles() const { return poles_; }

    RationalForm operator+(const RationalForm& o) const;
    RationalForm scaled(const Rat& a) const;
    // (this) * f, re-decomposed.
    RationalForm times(const RationalFunction& f) const;
    // (this) * num / prod (z-b)^k, re-decomposed.
    RationalForm times_fraction(const Polynomial& num, const std::map<Rat, int>& den_factors) const;

    Rat residue_at(const Rat& b) const;
    std::map<Rat, Rat> residues() const;  // finite residues
    Rat residue_at_infinity() const;      // = -(sum of finite residues)
    bool is_exact() const;

    // Reassemble as numerator over the factored denominator.
    void as_fraction(Polynomial& num, std::map<Rat, int>& den_factors) const;

  private:
    Polynomial poly_;
    std::map<Rat, std::map<int, Rat>> poles_;
    void prune();
};

/// Antiderivative of a RationalForm, split into its elementary pieces:
/// d(poly + sum pole_parts) + sum log_coeffs[b] dlog(z-b) recovers the form.
struct FormAntiderivative {
    Polynomial poly;                           // constant term 0
    std::map<Rat, std::map<int, Rat>> poles;   // center -> j -> coeff of (z-center)^{-j}
    std::map<Rat, Rat> logs;                   // center -> coefficient of log(z-center)
};
FormAntiderivative integrate_rational_form(const RationalForm& w);

// Reduction of a rational number mod p as a point of P^1(F_p):
// negative valuation lands on infinity.
struct Reduction {
    bool inf = false;
    long res = 0;
    bool operator==(const Reduction& o) const { return inf == o.inf && (inf || res == o.res); }
    bool operator<(const Reduction& o) const { return inf != o.inf ? (!inf && o.inf) : res < o.res; }
};
Reduction reduce_mod_p(const Rat& a, long p);
Reduction reduce_point(const ProjPoint& y, long p);

long padic_val_q(const Rat& a, long p);  // valuation of a nonzero rational

// Factorization of a nonzero rational into primes (sign discarded):
// |a| = prod p^e.  Trial division; throws when a factor exceeds the bound.
std::map<long, long> factor_rational(const Rat& a);

Rat parse_rat(const std::string& s);

}  // namespace reglab
