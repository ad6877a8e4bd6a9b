#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reglab/errors.hpp"

namespace reglab {

// Saturating "absolute precision" arithmetic. kPrecInf marks structurally
// exact values (e.g. the zero coefficients of a polynomial).
inline constexpr long kPrecInf = 1L << 40;

inline long prec_add(long a, long b) {
    if (a >= kPrecInf || b >= kPrecInf) return kPrecInf;
    long s = a + b;
    return s >= kPrecInf ? kPrecInf : s;
}
inline long prec_min(long a, long b) { return a < b ? a : b; }

/// An element of Q_p with tracked absolute precision: the value is known
/// modulo p^prec.  A nonzero value is stored as p^val * unit with the unit
/// kept modulo p^(prec - val); a "zero" carries only the modulus it is known
/// to vanish to.  Arithmetic never reports more precision than the operands
/// justify.
class PadicNumber {
  public:
    PadicNumber() : prime_(0), zero_(true), val_(0), prec_(0) {}

    static PadicNumber zero(long prime, long prec) {
        PadicNumber x;
        x.prime_ = prime;
        x.zero_ = true;
        x.prec_ = prec;
        return x;
    }

    static PadicNumber from_integer(long prime, const mpz_class& n, long abs_prec);
    static PadicNumber from_long(long prime, long n, long abs_prec) {
        return from_integer(prime, mpz_class(n), abs_prec);
    }
    static PadicNumber from_rational(long prime, const mpq_class& q, long abs_prec);
    // Assembles p^val * unit directly; unit must not be divisible by p.
    static PadicNumber from_unit(long prime, long val, const mpz_class& unit, long abs_prec);

    long prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    long precision() const { return prec_; }

    // Valuation of a provably nonzero value.
    long valuation() const {
        if (zero_) throw_window("insufficient precision", "valuation of a value indistinguishable from 0");
        return val_;
    }
    // Largest k such that the value is provably in p^k Z_p.
    long provable_valuation() const { return zero_ ? prec_ : val_; }
    bool is_unit() const { return !zero_ && val_ == 0; }

    // Unit part modulo p^(prec - val).
    const mpz_class& unit() const { return unit_; }

    // Base-p digits of the unit part, least significant first.
    std::vector<long> digits() const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
    PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
    PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }
    PadicNumber& operator/=(const PadicNumber& o) { return *this = *this / o; }

    PadicNumber pow(long e) const;
    PadicNumber mul_long(long c) const;
    PadicNumber div_long(long c) const;

    // Forgets information beyond p^prec.
    PadicNumber truncated(long prec) const;

    // True when the two values cannot be told apart at the shared precision.
    bool indistinguishable(const PadicNumber& o) const { return (*this - o).is_zero(); }

    std::string to_string() const;

  private:
    void normalize();

    long prime_;
    bool zero_;
    long val_;        // meaningful only when !zero_
    mpz_class unit_;  // in (0, p^(prec_-val_)), not divisible by p
    long prec_;       // absolute precision exponent
};

inline long discrepancy_valuation(const PadicNumber& a, const PadicNumber& b) {
    return (a - b).provable_valuation();
}

/// Prime, working precision, branch of log, and default series truncation.
struct PadicConfig {
    long p = 7;
    long N = 20;
    PadicNumber log_branch;  // declared value of log(p)
    long T = 64;             // default truncation window is (-T, T)

    PadicConfig() : log_branch(PadicNumber::zero(7, 20)) { validate(); }
    PadicConfig(long p_, long N_, long T_ = 64)
        : p(p_), N(N_), log_branch(PadicNumber::zero(p_, N_)), T(T_) {
        validate();
    }

    void validate() const;

    PadicNumber zero() const { return PadicNumber::zero(p, N); }
    PadicNumber integer(long n) const { return PadicNumber::from_long(p, n, N); }
    PadicNumber integer(const mpz_class& n) const { return PadicNumber::from_integer(p, n, N); }
    PadicNumber rational(const mpq_class& q) const { return PadicNumber::from_rational(p, q, N); }
    PadicNumber rational(long num, long den) const {
        return rational(mpq_class(num, den));
    }
};

/// Teichmuller representative: the unique (p-1)-st root of unity congruent
/// to x mod p, at the precision of x.
PadicNumber teichmuller(const PadicNumber& x);

/// Branch-dependent p-adic logarithm.  With x = p^v * w * <x> (w a
/// Teichmuller root, <x> = 1 mod p) returns v*log_branch + log<x>.
PadicNumber padic_log(const PadicNumber& x, const PadicConfig& cfg);

/// Exponential, defined for v(x) >= 1 (p odd).
PadicNumber padic_exp(const PadicNumber& x);

}  // namespace reglab
