#include "reglab/padic.hpp"

#include <algorithm>
#include <sstream>

namespace reglab {

namespace {

mpz_class pow_p(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

long remove_p(mpz_class& n, long p) {
    if (n == 0) return 0;
    mpz_class q, r;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

void PadicConfig::validate() const {
    if (p < 3 || !is_prime(p)) throw_parse("invalid prime", "p must be an odd prime");
    if (N < 1) throw_parse("invalid precision", "N must be >= 1");
    if (!log_branch.is_zero() && log_branch.valuation() < 0)
        throw_parse("invalid log branch", "log p must have valuation >= 0");
}

void PadicNumber::normalize() {
    if (zero_) {
        unit_ = 0;
        val_ = 0;
        return;
    }
    bool exact = prec_ >= kPrecInf;
    long rel = exact ? kPrecInf : prec_ - val_;
    if (rel <= 0) {
        // Nothing about the unit survives at this precision.
        zero_ = true;
        unit_ = 0;
        val_ = 0;
        return;
    }
    if (!exact) {
        mpz_class mod = pow_p(prime_, rel);
        mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
    }
    if (unit_ == 0) {
        zero_ = true;
        val_ = 0;
        return;
    }
    long shift = remove_p(unit_, prime_);
    if (shift > 0) {
        val_ += shift;
        if (val_ >= prec_) {
            zero_ = true;
            unit_ = 0;
            val_ = 0;
        }
    }
}

PadicNumber PadicNumber::from_unit(long prime, long val, const mpz_class& unit, long abs_prec) {
    PadicNumber x;
    x.prime_ = prime;
    x.zero_ = false;
    x.val_ = val;
    x.unit_ = unit;
    x.prec_ = abs_prec;
    x.normalize();
    return x;
}

PadicNumber PadicNumber::from_integer(long prime, const mpz_class& n, long abs_prec) {
    if (n == 0) return zero(prime, abs_prec);
    return from_unit(prime, 0, n, abs_prec);
}

PadicNumber PadicNumber::from_rational(long prime, const mpq_class& q, long abs_prec) {
    if (q == 0) return zero(prime, abs_prec);
    mpz_class num = q.get_num(), den = q.get_den();
    long v = remove_p(num, prime) - remove_p(den, prime);
    if (abs_prec >= kPrecInf) {
        if (den == 1)  // exact integers keep an exact representation
            return from_unit(prime, v, num, kPrecInf);
        throw_parse("invalid precision", "cannot represent a non-integer rational exactly");
    }
    long rel = abs_prec - v;
    if (rel <= 0) return zero(prime, abs_prec);
    mpz_class mod = pow_p(prime, rel);
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw_parse("invalid rational", "denominator not invertible");
    return from_unit(prime, v, num * deninv, abs_prec);
}

std::vector<long> PadicNumber::digits() const {
    std::vector<long> d;
    if (zero_) return d;
    mpz_class u = unit_;
    long rel = prec_ - val_;
    for (long i = 0; i < rel && i < 256; ++i) {
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(prime_));
        d.push_back(r.get_si());
        u = q;
        if (u == 0 && i + 1 >= rel) break;
    }
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    PadicNumber r = *this;
    r.unit_ = -r.unit_;
    r.normalize();
    return r;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (prime_ != o.prime_) throw_parse("prime mismatch");
    long prec = prec_min(prec_, o.prec_);
    if (zero_ && o.zero_) return zero(prime_, prec);
    if (zero_) return o.truncated(prec);
    if (o.zero_) return truncated(prec);
    long v = std::min(val_, o.val_);
    mpz_class a = unit_ * pow_p(prime_, val_ - v);
    mpz_class b = o.unit_ * pow_p(prime_, o.val_ - v);
    return from_unit(prime_, v, a + b, prec);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (prime_ != o.prime_) throw_parse("prime mismatch");
    // x known mod p^Mx => x*y known mod p^min(Mx + v(y), My + v(x)).
    if (zero_ || o.zero_) {
        long va = zero_ ? prec_ : val_;
        long vb = o.zero_ ? o.prec_ : o.val_;
        long pa = prec_add(prec_, vb), pb = prec_add(o.prec_, va);
        return zero(prime_, prec_min(pa, pb));
    }
    long prec = prec_min(prec_add(prec_, o.val_), prec_add(o.prec_, val_));
    return from_unit(prime_, val_ + o.val_, unit_ * o.unit_, prec);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
    if (prime_ != o.prime_) throw_parse("prime mismatch");
    if (o.zero_) throw_window("insufficient precision", "division by a value indistinguishable from 0");
    if (zero_) return zero(prime_, prec_add(prec_, -o.val_));
    long ra = prec_ >= kPrecInf ? kPrecInf : prec_ - val_;
    long rb = o.prec_ >= kPrecInf ? kPrecInf : o.prec_ - o.val_;
    long rel = prec_min(ra, rb);
    if (rel >= kPrecInf) throw_parse("invalid precision", "exact division has no finite representation");
    long v = val_ - o.val_;
    mpz_class mod = pow_p(prime_, rel);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), o.unit_.get_mpz_t(), mod.get_mpz_t());
    return from_unit(prime_, v, unit_ * inv, v + rel);
}

PadicNumber PadicNumber::pow(long e) const {
    if (e == 0) return from_integer(prime_, 1, zero_ ? prec_ : prec_ - val_);
    PadicNumber base = e > 0 ? *this : from_integer(prime_, 1, kPrecInf) / *this;
    long n = e > 0 ? e : -e;
    PadicNumber acc = base;
    --n;
    PadicNumber sq = base;
    while (n > 0) {
        // plain left-to-right is fine at fixture sizes
        acc = acc * sq;
        --n;
    }
    return acc;
}

PadicNumber PadicNumber::mul_long(long c) const {
    return *this * from_integer(prime_, c, kPrecInf);
}

PadicNumber PadicNumber::div_long(long c) const {
    if (c == 0) throw_window("insufficient precision", "division by zero constant");
    return *this / from_integer(prime_, c, kPrecInf);
}

PadicNumber PadicNumber::truncated(long prec) const {
    if (prec >= prec_) return *this;
    PadicNumber r = *this;
    r.prec_ = prec;
    r.normalize();
    return r;
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << prime_ << "^" << prec_ << ")";
        return os.str();
    }
    auto d = digits();
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    os << " *" << prime_ << "^" << val_ << " + O(" << prime_ << "^" << prec_ << ")";
    return os.str();
}

PadicNumber teichmuller(const PadicNumber& x) {
    if (x.is_zero() || x.valuation() != 0) throw_parse("not a unit", "Teichmuller lift needs valuation 0");
    long p = x.prime();
    long rel = x.precision();
    if (rel >= kPrecInf) throw_parse("invalid precision", "Teichmuller lift needs a finite precision");
    mpz_class mod = pow_p(p, rel);
    mpz_class w = x.unit() % mod;
    // w <- w^p converges to the (p-1)-st root of unity; one step per digit.
    for (long i = 0; i + 1 < rel; ++i)
        mpz_powm_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
    return PadicNumber::from_unit(p, 0, w, rel);
}

PadicNumber padic_log(const PadicNumber& x, const PadicConfig& cfg) {
    if (x.is_zero()) throw_window("insufficient precision", "log of a value indistinguishable from 0");
    long p = x.prime();
    long v = x.valuation();
    long rel = x.precision() >= kPrecInf ? cfg.N : x.precision() - v;
    PadicNumber unit = PadicNumber::from_unit(p, 0, x.unit(), rel);
    PadicNumber w = teichmuller(unit);
    PadicNumber one_unit = unit / w;  // = 1 mod p
    PadicNumber y = one_unit - PadicNumber::from_long(p, 1, kPrecInf);

    PadicNumber acc = PadicNumber::zero(p, one_unit.precision());
    if (!y.is_zero()) {
        long vy = y.valuation();
        long target = y.precision();
        PadicNumber power = y;
        long k = 1;
        for (;;) {
            PadicNumber term = power.div_long(k);
            acc = (k % 2 == 1) ? acc + term : acc - term;
            ++k;
            // v(y^k / k) >= k*vy - log_p(k); stop once provably below target.
            long logk = 0;
            for (long t = k; t >= p; t /= p) ++logk;
            if (k * vy - logk >= target) break;
            power = power * y;
        }
    }
    if (v != 0) acc = acc + cfg.log_branch.mul_long(v);
    return acc;
}

PadicNumber padic_exp(const PadicNumber& x) {
    long p = x.prime();
    if (x.is_zero()) {
        // exp(0 + O(p^M)) = 1 + O(p^M)
        return PadicNumber::from_long(p, 1, x.precision());
    }
    if (x.valuation() < 1) throw_parse("outside convergence domain", "exp needs valuation >= 1");
    long vx = x.valuation();
    long target = x.precision();
    PadicNumber acc = PadicNumber::from_long(p, 1, kPrecInf);
    PadicNumber term = PadicNumber::from_long(p, 1, kPrecInf);
    long k = 0;
    for (;;) {
        ++k;
        term = (term * x).div_long(k);
        acc = acc + term;
        // v(x^k/k!) >= k*vx - (k-1)/(p-1); the right side is increasing in k
        // for p odd, so once it clears the target every later term does too.
        if (k * vx * (p - 1) - (k - 1) >= target * (p - 1)) break;
    }
    return acc.truncated(target);
}

}  // namespace reglab
