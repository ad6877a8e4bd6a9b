#include "reglab/rational.hpp"

#include <algorithm>
#include <sstream>

namespace reglab {

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rat& a) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= a;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& d) const {
    if (d.is_zero()) throw_parse("division by zero polynomial");
    std::vector<Rat> rem = c_;
    long dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rat> quo(degree() - dd + 1, Rat(0));
    for (long i = degree(); i >= dd; --i) {
        Rat f = rem[i] / d.lead();
        if (f == 0) continue;
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::vector<Rat> Polynomial::taylor(const Rat& center) const {
    // Repeated synthetic division by (z - center).
    std::vector<Rat> work = c_;
    std::vector<Rat> out;
    if (work.empty()) return {Rat(0)};
    for (size_t k = 0; k < c_.size(); ++k) {
        Rat rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            Rat t = work[i] + rem * center;
            work[i] = rem;
            rem = t;
        }
        out.push_back(rem);
        if (!work.empty()) work.erase(work.begin());
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    return os.str();
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs{1};
    if (n == 0) return divs;
    mpz_class rest = n;
    std::vector<std::pair<mpz_class, long>> fac;
    for (mpz_class d = 2; d * d <= rest && d < 2000000; ++d) {
        if (rest % d == 0) {
            long e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            fac.push_back({d, e});
        }
    }
    if (rest > 1) {
        if (rest > 4000000000000LL)
            throw_parse("requires splitting field", "root search bound exceeded");
        fac.push_back({rest, 1});
    }
    for (auto& [pd, e] : fac) {
        size_t sz = divs.size();
        mpz_class pw = 1;
        for (long i = 1; i <= e; ++i) {
            pw *= pd;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

}  // namespace

SplitFactors split_poly(const Polynomial& f) {
    if (f.is_zero()) throw_parse("requires splitting field", "zero polynomial has no factorization");
    SplitFactors out;
    out.lead = f.lead();
    if (f.degree() == 0) return out;

    // Clear denominators to an integer polynomial.
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) den = den / gcd(den, c.get_den()) * c.get_den();
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) ic.push_back(c.get_num() * (den / c.get_den()));

    // Strip roots at 0.
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) out.roots[Rat(0)] = static_cast<int>(low);
    std::vector<mpz_class> w(ic.begin() + low, ic.end());

    auto eval_at = [&](const Rat& r) {
        Rat acc = 0;
        for (size_t i = w.size(); i-- > 0;) acc = acc * r + Rat(w[i]);
        return acc;
    };
    auto deflate = [&](const Rat& r) {
        // w <- w / (z - r) over Q, then clear denominators again.
        std::vector<Rat> q(w.size() - 1, Rat(0));
        Rat carry = Rat(w.back());
        for (size_t i = w.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = Rat(w[i]) + carry * r;
        }
        mpz_class d2 = 1;
        for (auto& c : q) d2 = d2 / gcd(d2, c.get_den()) * c.get_den();
        w.clear();
        for (auto& c : q) w.push_back(c.get_num() * (d2 / c.get_den()));
    };

    while (w.size() > 1) {
        if (w.size() == 2) {  // linear: root = -c0/c1
            Rat r(-w[0], w[1]);
            r.canonicalize();
            out.roots[r] += 1;
            break;
        }
        bool found = false;
        auto ps = divisors_of(w.front());
        auto qs = divisors_of(w.back());
        for (const auto& pn : ps) {
            for (const auto& qn : qs) {
                for (int sgn = 0; sgn < 2 && !found; ++sgn) {
                    Rat r = sgn ? Rat(-pn, qn) : Rat(pn, qn);
                    r.canonicalize();
                    if (eval_at(r) == 0) {
                        out.roots[r] += 1;
                        deflate(r);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw_parse("requires splitting field", "irreducible factor of degree >= 2");
    }
    return out;
}

std::string ProjPoint::to_string() const { return inf ? "inf" : a.get_str(); }

RationalFunction RationalFunction::constant(const Rat& c) {
    if (c == 0) throw_parse("invalid rational function", "the zero function is excluded");
    RationalFunction f;
    f.lead_ = c;
    return f;
}

RationalFunction RationalFunction::linear(const Rat& a) {
    RationalFunction f;
    f.fac_[a] = 1;
    return f;
}

RationalFunction RationalFunction::from_factors(const Rat& lead, std::map<Rat, int> factors) {
    if (lead == 0) throw_parse("invalid rational function", "zero leading coefficient");
    RationalFunction f;
    f.lead_ = lead;
    for (auto& [r, m] : factors)
        if (m != 0) f.fac_[r] = m;
    return f;
}

RationalFunction RationalFunction::from_fraction(const Polynomial& num, const Polynomial& den) {
    if (num.is_zero()) throw_parse("invalid rational function", "zero numerator");
    if (den.is_zero()) throw_parse("invalid rational function", "zero denominator");
    SplitFactors n = split_poly(num), d = split_poly(den);
    RationalFunction f;
    f.lead_ = n.lead / d.lead;
    for (auto& [r, m] : n.roots) f.fac_[r] += m;
    for (auto& [r, m] : d.roots) f.fac_[r] -= m;
    std::erase_if(f.fac_, [](const auto& kv) { return kv.second == 0; });
    return f;
}

RationalFunction RationalFunction::mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (a * d - b * c == 0) throw_parse("invalid rational function", "degenerate Mobius map");
    return from_fraction(Polynomial({b, a}), Polynomial({d, c}));
}

Rat RationalFunction::constant_value() const {
    if (!is_constant()) throw_parse("invalid rational function", "not a constant");
    return lead_;
}

long RationalFunction::degree_num() const {
    long d = 0;
    for (auto& [r, m] : fac_)
        if (m > 0) d += m;
    return d;
}

long RationalFunction::degree_den() const {
    long d = 0;
    for (auto& [r, m] : fac_)
        if (m < 0) d -= m;
    return d;
}

long RationalFunction::ord_at(const ProjPoint& y) const {
    if (y.inf) return degree_den() - degree_num();
    auto it = fac_.find(y.a);
    return it == fac_.end() ? 0 : it->second;
}

QValue RationalFunction::eval(const ProjPoint& y) const {
    long o = ord_at(y);
    if (o > 0) return {false, Rat(0)};
    if (o < 0) return {true, Rat(0)};
    Rat acc = lead_;
    if (y.inf) {
        // equal degrees: limit is lead (factors (z-a) all tend to 1 ratio-wise)
        return {false, acc};
    }
    for (auto& [r, m] : fac_) {
        Rat base = y.a - r;
        for (long i = 0; i < (m > 0 ? m : -m); ++i) acc = m > 0 ? acc * base : acc / base;
    }
    return {false, acc};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction f;
    f.lead_ = lead_ * o.lead_;
    f.fac_ = fac_;
    for (auto& [r, m] : o.fac_) {
        f.fac_[r] += m;
        if (f.fac_[r] == 0) f.fac_.erase(r);
    }
    return f;
}

RationalFunction RationalFunction::inverse() const {
    RationalFunction f;
    f.lead_ = Rat(1) / lead_;
    for (auto& [r, m] : fac_) f.fac_[r] = -m;
    return f;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction();
    RationalFunction base = e > 0 ? *this : inverse();
    RationalFunction acc = base;
    for (long i = 1; i < (e > 0 ? e : -e); ++i) acc = acc * base;
    return acc;
}

RationalFunction RationalFunction::scaled(const Rat& c) const {
    if (c == 0) throw_parse("invalid rational function", "zero scaling");
    RationalFunction f = *this;
    f.lead_ *= c;
    return f;
}

Polynomial RationalFunction::numerator_poly() const {
    Polynomial num = Polynomial::constant(lead_);
    for (auto& [r, m] : fac_)
        for (long i = 0; i < m; ++i) num = num * Polynomial::linear(r);
    return num;
}

Polynomial RationalFunction::denominator_poly() const {
    Polynomial den = Polynomial::constant(1);
    for (auto& [r, m] : fac_)
        for (long i = 0; i < -m; ++i) den = den * Polynomial::linear(r);
    return den;
}

RationalFunction RationalFunction::minus_constant(const Rat& c) const {
    Polynomial num = numerator_poly(), den = denominator_poly();
    return from_fraction(num - den.scaled(c), den);
}

RationalFunction RationalFunction::one_minus() const {
    Polynomial num = numerator_poly(), den = denominator_poly();
    return from_fraction(den - num, den);
}

std::string RationalFunction::to_string() const {
    std::ostringstream os;
    os << lead_.get_str();
    for (auto& [r, m] : fac_) os << " (z-" << r.get_str() << ")^" << m;
    return os.str();
}

void RationalForm::prune() {
    for (auto it = poles_.begin(); it != poles_.end();) {
        std::erase_if(it->second, [](const auto& kv) { return kv.second == 0; });
        it = it->second.empty() ? poles_.erase(it) : std::next(it);
    }
}

RationalForm RationalForm::from_num_den(const Polynomial& num, const Rat& den_lead,
                                        const std::map<Rat, int>& den_factors) {
    RationalForm w;
    if (num.is_zero()) return w;
    Polynomial den = Polynomial::constant(den_lead);
    for (auto& [b, k] : den_factors)
        for (int i = 0; i < k; ++i) den = den * Polynomial::linear(b);
    auto [quo, rem] = num.divrem(den);
    w.poly_ = quo;
    if (rem.is_zero()) return w;

    for (auto& [b, k] : den_factors) {
        // Taylor-expand rem / (den / (z-b)^k) around b to order k-1.
        Polynomial rest = Polynomial::constant(den_lead);
        for (auto& [b2, k2] : den_factors) {
            int reps = (b2 == b) ? 0 : k2;
            for (int i = 0; i < reps; ++i) rest = rest * Polynomial::linear(b2);
        }
        std::vector<Rat> tn = rem.taylor(b);
        std::vector<Rat> td = rest.taylor(b);
        tn.resize(std::max<size_t>(tn.size(), k), Rat(0));
        td.resize(std::max<size_t>(td.size(), k), Rat(0));
        // invert td as a power series to order k-1
        std::vector<Rat> inv(k, Rat(0));
        inv[0] = Rat(1) / td[0];
        for (int j = 1; j < k; ++j) {
            Rat s = 0;
            for (int i = 1; i <= j; ++i) s += td[i] * inv[j - i];
            inv[j] = -s / td[0];
        }
        for (int j = 0; j < k; ++j) {
            Rat cj = 0;
            for (int i = 0; i <= j; ++i) cj += tn[i] * inv[j - i];
            if (cj != 0) w.poles_[b][k - j] = cj;
        }
    }
    w.prune();
    return w;
}

RationalForm RationalForm::from_rational(const RationalFunction& f) {
    std::map<Rat, int> den;
    for (auto& [r, m] : f.factors())
        if (m < 0) den[r] = -m;
    Polynomial num = f.numerator_poly();
    return from_num_den(num, Rat(1), den);
}

RationalForm RationalForm::dlog(const RationalFunction& f) {
    RationalForm w;
    for (auto& [r, m] : f.factors())
        if (m != 0) w.poles_[r][1] = Rat(m);
    w.prune();
    return w;
}

RationalForm RationalForm::operator+(const RationalForm& o) const {
    RationalForm w = *this;
    w.poly_ = w.poly_ + o.poly_;
    for (auto& [b, mp] : o.poles_)
        for (auto& [k, c] : mp) w.poles_[b][k] += c;
    w.prune();
    return w;
}

RationalForm RationalForm::scaled(const Rat& a) const {
    RationalForm w;
    if (a == 0) return w;
    w.poly_ = poly_.scaled(a);
    w.poles_ = poles_;
    for (auto& [b, mp] : w.poles_)
        for (auto& [k, c] : mp) c *= a;
    return w;
}

void RationalForm::as_fraction(Polynomial& num, std::map<Rat, int>& den_factors) const {
    den_factors.clear();
    for (auto& [b, mp] : poles_) den_factors[b] = mp.rbegin()->first;
    Polynomial den = Polynomial::constant(1);
    for (auto& [b, k] : den_factors)
        for (int i = 0; i < k; ++i) den = den * Polynomial::linear(b);
    num = poly_ * den;
    for (auto& [b, mp] : poles_) {
        for (auto& [k, c] : mp) {
            Polynomial part = Polynomial::constant(c);
            for (auto& [b2, k2] : den_factors) {
                int reps = (b2 == b) ? k2 - k : k2;
                for (int i = 0; i < reps; ++i) part = part * Polynomial::linear(b2);
            }
            num = num + part;
        }
    }
}

RationalForm RationalForm::times(const RationalFunction& f) const {
    std::map<Rat, int> fden;
    for (auto& [r, m] : f.factors())
        if (m < 0) fden[r] = -m;
    return times_fraction(f.numerator_poly(), fden);
}

RationalForm RationalForm::times_fraction(const Polynomial& fnum,
                                          const std::map<Rat, int>& fden) const {
    if (is_zero() || fnum.is_zero()) return RationalForm();
    Polynomial num;
    std::map<Rat, int> den;
    as_fraction(num, den);
    num = num * fnum;
    for (auto& [b, k] : fden) den[b] += k;
    return from_num_den(num, Rat(1), den);
}

Rat RationalForm::residue_at(const Rat& b) const {
    auto it = poles_.find(b);
    if (it == poles_.end()) return Rat(0);
    auto jt = it->second.find(1);
    return jt == it->second.end() ? Rat(0) : jt->second;
}

std::map<Rat, Rat> RationalForm::residues() const {
    std::map<Rat, Rat> r;
    for (auto& [b, mp] : poles_) {
        auto jt = mp.find(1);
        if (jt != mp.end() && jt->second != 0) r[b] = jt->second;
    }
    return r;
}

Rat RationalForm::residue_at_infinity() const {
    Rat s = 0;
    for (auto& [b, r] : residues()) s += r;
    return -s;
}

bool RationalForm::is_exact() const {
    return residues().empty();
}

FormAntiderivative integrate_rational_form(const RationalForm& w) {
    FormAntiderivative F;
    std::vector<Rat> pc(w.poly().coeffs().size() + 1, Rat(0));
    for (size_t i = 0; i < w.poly().coeffs().size(); ++i)
        pc[i + 1] = w.poly().coeffs()[i] / Rat(static_cast<long>(i + 1));
    F.poly = Polynomial(std::move(pc));
    for (auto& [b, mp] : w.poles()) {
        for (auto& [k, c] : mp) {
            if (k == 1)
                F.logs[b] += c;
            else
                F.poles[b][k - 1] += c / Rat(1 - k);
        }
    }
    return F;
}

long padic_val_q(const Rat& a, long p) {
    if (a == 0) throw_parse("invalid valuation", "valuation of zero");
    long v = 0;
    mpz_class n = a.get_num(), d = a.get_den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
        --v;
    }
    return v;
}

Reduction reduce_mod_p(const Rat& a, long p) {
    if (a == 0) return {false, 0};
    if (padic_val_q(a, p) < 0) return {true, 0};
    mpz_class n = a.get_num() % p, d = a.get_den() % p, inv;
    if (n < 0) n += p;
    if (d < 0) d += p;
    mpz_class mod(p);
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    mpz_class r = (n * inv) % p;
    return {false, r.get_si()};
}

Reduction reduce_point(const ProjPoint& y, long p) {
    if (y.inf) return {true, 0};
    return reduce_mod_p(y.a, p);
}

std::map<long, long> factor_rational(const Rat& a) {
    if (a == 0) throw_parse("invalid factorization", "zero has no factorization");
    std::map<long, long> out;
    for (int side = 0; side < 2; ++side) {
        mpz_class n = abs(side == 0 ? a.get_num() : a.get_den());
        long sgn = side == 0 ? 1 : -1;
        for (mpz_class d = 2; d * d <= n && d < 2000000; ++d) {
            while (n % d == 0) {
                out[d.get_si()] += sgn;
                n /= d;
            }
        }
        if (n > 1) {
            if (n >= 2000000L * 2000000L)
                throw_parse("condition check requires split factorizations", "prime factor too large");
            out[n.get_si()] += sgn;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (...) {
        throw_parse("invalid rational literal", s);
    }
}

}  // namespace reglab
