#pragma once

#include <map>
#include <utility>
#include <vector>

#include "reglab/padic.hpp"

namespace reglab {

// Window bounds. Exponents below lo are structurally zero (Laurent series
// are finite to the left); exponents at or above hi are unknown, not zero.
inline constexpr long kWinMax = 1L << 30;
inline constexpr long kWinMin = -kWinMax;

inline long win_add(long a, long b) {
    if (a >= kWinMax || b >= kWinMax) return kWinMax;
    if (a <= kWinMin || b <= kWinMin) return kWinMin;
    long s = a + b;
    if (s >= kWinMax) return kWinMax;
    if (s <= kWinMin) return kWinMin;
    return s;
}

/// Truncated Laurent series over Q_p.  Sparse coefficient storage; absent
/// in-window coefficients are exactly zero.
class LaurentSeries {
  public:
    explicit LaurentSeries(long prime = 0) : prime_(prime), lo_(kWinMin), hi_(kWinMax) {}

    static LaurentSeries zero(long prime) { return LaurentSeries(prime); }
    static LaurentSeries monomial(const PadicNumber& c, long exp);
    static LaurentSeries constant(const PadicNumber& c) { return monomial(c, 0); }

    long prime() const { return prime_; }
    long lo() const { return lo_; }
    long hi() const { return hi_; }
    const std::map<long, PadicNumber>& coeffs() const { return c_; }

    bool empty() const { return c_.empty(); }
    // Exactly the zero series, known everywhere.
    bool is_exact_zero() const { return c_.empty() && lo_ <= kWinMin / 2 && hi_ >= kWinMax / 2; }
    // No in-window coefficient distinguishable from zero.
    bool is_zero_at_precision() const;

    // Order of the smallest provably nonzero coefficient; requires one.
    long order() const;

    void set_window(long lo, long hi);
    LaurentSeries restricted(long lo, long hi) const;

    // Reads a coefficient; exponents >= hi are a window error.
    PadicNumber coefficient(long n) const;
    void set_coeff(long n, const PadicNumber& v);

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled(const PadicNumber& c) const;
    LaurentSeries negated() const;
    LaurentSeries shifted(long k) const;  // multiply by z^k

    LaurentSeries derivative() const;
    // Termwise antiderivative; the caller must have removed the z^{-1} term.
    LaurentSeries antiderivative() const;

    // Multiplicative inverse; the order coefficient must be provably nonzero.
    // Produces at most `width` coefficients.
    LaurentSeries inverse(long width) const;

    // log(1 + x) for a series x with order >= 1.
    static LaurentSeries log1p(const LaurentSeries& x);

    std::string to_string() const;

  private:
    long prime_;
    std::map<long, PadicNumber> c_;
    long lo_, hi_;
};

/// Element of K((z))[log z]: components[i] is the coefficient of log^i z.
class LogLaurent {
  public:
    explicit LogLaurent(long prime = 0) : prime_(prime) {}
    LogLaurent(const LaurentSeries& f) : prime_(f.prime()) {
        comps_.push_back(f);
        normalize();
    }

    static LogLaurent zero(long prime) { return LogLaurent(prime); }
    static LogLaurent log_z(const PadicConfig& cfg);  // the function log z
    static LogLaurent from_components(std::vector<LaurentSeries> comps);

    long prime() const { return prime_; }
    long log_degree() const { return static_cast<long>(comps_.size()) - 1; }
    const std::vector<LaurentSeries>& components() const { return comps_; }
    // Component by log power; absent components are exactly zero.
    LaurentSeries component(long i) const;

    bool is_zero_at_precision() const;

    LogLaurent operator+(const LogLaurent& o) const;
    LogLaurent operator-(const LogLaurent& o) const;
    LogLaurent operator*(const LogLaurent& o) const;
    LogLaurent scaled(const PadicNumber& c) const;
    LogLaurent negated() const;

    // Constant offset if this function is a constant on its window.
    std::optional<PadicNumber> as_constant() const;

    std::string to_string() const;

  private:
    void normalize();
    long prime_;
    std::vector<LaurentSeries> comps_;
};

/// A differential F dz with F in K((z))[log z].
struct LogForm {
    LogLaurent coef;

    LogForm operator+(const LogForm& o) const { return {coef + o.coef}; }
    LogForm operator-(const LogForm& o) const { return {coef - o.coef}; }
    LogForm scaled(const PadicNumber& c) const { return {coef.scaled(c)}; }
};

/// d(sum f_i log^i z) = sum (f_i' + (i+1) f_{i+1}/z) log^i z dz.
LogForm differential(const LogLaurent& F);

/// The unique antiderivative with constant term zero; dz/z integrates to
/// log z, higher log powers by descending integration by parts.
LogLaurent integrate_form(const LogForm& w);

/// Residue of a meromorphic form (log degree zero).
PadicNumber residue(const LogForm& w);

/// c_z: constant coefficient of the log-degree-0 component.
PadicNumber constant_term(const LogLaurent& F);

/// Membership in A'_log = Mer + K log z, with the log z coefficient.
struct AlogPrime {
    bool ok;
    PadicNumber alpha;
};
AlogPrime in_alog_prime(const LogLaurent& F);

/// Rewrites F under the substitution z -> c * z * u(z), u a unit power
/// series with u(0) = 1; log z picks up log c + log u(z).
LogLaurent reparametrize(const LogLaurent& F, const PadicNumber& c, const LaurentSeries& u,
                         const PadicConfig& cfg);

// res F dG for meromorphic F, G (series arguments, window checked).
PadicNumber residue_f_dg(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace reglab
