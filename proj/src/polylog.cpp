#include "reglab/polylog.hpp"

namespace reglab {

const char* route_name(Route r) {
    switch (r) {
        case Route::direct_series: return "direct-series";
        case Route::inversion: return "inversion";
        case Route::reflection: return "reflection";
        case Route::convention: return "convention";
    }
    return "?";
}

namespace {

enum class Disc { at_zero, at_one, at_infinity, near_zero, near_one, near_infinity, unreachable };

Disc classify(const PadicOrInf& z) {
    if (z.inf) return Disc::at_infinity;
    if (z.v.is_zero()) return Disc::at_zero;
    long v = z.v.valuation();
    if (v > 0) return Disc::near_zero;
    if (v < 0) return Disc::near_infinity;
    PadicNumber zm1 = z.v - PadicNumber::from_long(z.v.prime(), 1, kPrecInf);
    if (zm1.is_zero()) return Disc::at_one;
    if (zm1.valuation() > 0) return Disc::near_one;
    return Disc::unreachable;
}

PadicNumber one_minus(const PadicNumber& z) {
    return PadicNumber::from_long(z.prime(), 1, kPrecInf) - z;
}

// sum z^n / n^2 with the exact tail bound v(z^n/n^2) >= n v(z) - 2 log_p n.
PadicNumber li2_series(const PadicNumber& z, const PadicConfig& cfg) {
    long p = cfg.p;
    long vz = z.valuation();
    long target = z.precision();
    PadicNumber acc = PadicNumber::zero(p, kPrecInf);
    PadicNumber power = PadicNumber::from_long(p, 1, kPrecInf);
    long n = 0;
    for (;;) {
        ++n;
        power = power * z;
        acc = acc + power.div_long(n).div_long(n);
        long logn = 0;
        for (long t = n + 1; t >= p; t /= p) ++logn;
        if ((n + 1) * vz - 2 * logn >= target) break;
    }
    return acc.truncated(target);
}

}  // namespace

ColemanValue li2(const PadicOrInf& z, const PadicConfig& cfg) {
    long p = cfg.p;
    switch (classify(z)) {
        case Disc::at_zero:
        case Disc::at_infinity:
            return {PadicNumber::zero(p, cfg.N), Route::convention};
        case Disc::at_one:
            throw_unreachable("outside series-reachable locus", "Li_2 is undefined at 1");
        case Disc::near_zero:
            return {li2_series(z.v, cfg), Route::direct_series};
        case Disc::near_one: {
            // Li_2(z) = -Li_2(1-z) - log(z) log(1-z)
            PadicNumber w = one_minus(z.v);
            PadicNumber val = -li2_series(w, cfg) - padic_log(z.v, cfg) * padic_log(w, cfg);
            return {val, Route::reflection};
        }
        case Disc::near_infinity: {
            // Li_2(z) = (1/2)log^2 z - L_2(1/z) - log(z)log(1-z)
            PadicNumber inv = PadicNumber::from_long(p, 1, kPrecInf) / z.v;
            PadicNumber l2inv = ltwo(PadicOrInf::finite(inv), cfg).value;
            PadicNumber lz = padic_log(z.v, cfg);
            PadicNumber val = (lz * lz).div_long(2) - l2inv - lz * padic_log(one_minus(z.v), cfg);
            return {val, Route::inversion};
        }
        default:
            throw_unreachable("outside series-reachable locus", "reduction not in {0, 1, inf}");
    }
}

ColemanValue ltwo(const PadicOrInf& z, const PadicConfig& cfg) {
    long p = cfg.p;
    switch (classify(z)) {
        case Disc::at_zero:
        case Disc::at_infinity:
            return {PadicNumber::zero(p, cfg.N), Route::convention};
        case Disc::at_one:
            // L_2(z) = -Li_2(1-z), so the value at 1 is -Li_2(0) = 0.
            return {PadicNumber::zero(p, cfg.N), Route::reflection};
        case Disc::near_zero: {
            PadicNumber val = li2_series(z.v, cfg) + padic_log(z.v, cfg) * padic_log(one_minus(z.v), cfg);
            return {val, Route::direct_series};
        }
        case Disc::near_one: {
            PadicNumber val = -li2_series(one_minus(z.v), cfg);
            return {val, Route::reflection};
        }
        case Disc::near_infinity: {
            // L_2(z) + L_2(1/z) = (1/2) log^2 z
            PadicNumber inv = PadicNumber::from_long(p, 1, kPrecInf) / z.v;
            PadicNumber lz = padic_log(z.v, cfg);
            PadicNumber val = (lz * lz).div_long(2) - ltwo(PadicOrInf::finite(inv), cfg).value;
            return {val, Route::inversion};
        }
        default:
            throw_unreachable("outside series-reachable locus", "reduction not in {0, 1, inf}");
    }
}

ColemanValue lmod2(const PadicOrInf& z, const PadicConfig& cfg) {
    long p = cfg.p;
    switch (classify(z)) {
        case Disc::at_zero:
        case Disc::at_one:
        case Disc::at_infinity:
            return {PadicNumber::zero(p, cfg.N), Route::convention};
        case Disc::near_zero: {
            PadicNumber val =
                li2_series(z.v, cfg) + (padic_log(z.v, cfg) * padic_log(one_minus(z.v), cfg)).div_long(2);
            return {val, Route::direct_series};
        }
        case Disc::near_one: {
            // L2mod(z) = -L2mod(1-z)
            PadicNumber w = one_minus(z.v);
            PadicNumber val = -(li2_series(w, cfg) + (padic_log(w, cfg) * padic_log(z.v, cfg)).div_long(2));
            return {val, Route::reflection};
        }
        case Disc::near_infinity: {
            // L2mod(z) = -L2mod(1/z)
            PadicNumber inv = PadicNumber::from_long(p, 1, kPrecInf) / z.v;
            return {-lmod2(PadicOrInf::finite(inv), cfg).value, Route::inversion};
        }
        default:
            throw_unreachable("outside series-reachable locus", "reduction not in {0, 1, inf}");
    }
}

RationalPiece RationalPiece::of(const RationalFunction& f) {
    RationalPiece r;
    r.num = f.numerator_poly();
    for (auto& [b, m] : f.factors())
        if (m < 0) r.den[b] = -m;
    return r;
}

QValue RationalPiece::eval(const ProjPoint& y) const {
    if (y.inf) {
        long dden = 0;
        for (auto& [b, k] : den) dden += k;
        long dnum = num.degree();
        if (dnum > dden) return {true, Rat(0)};
        if (dnum < dden) return {false, Rat(0)};
        return {false, num.lead()};
    }
    Rat d = 1;
    for (auto& [b, k] : den)
        for (int i = 0; i < k; ++i) d *= (y.a - b);
    Rat n = num.eval(y.a);
    if (d == 0) {
        if (n == 0) throw_parse("invalid rational piece", "0/0 evaluation; cancel first");
        return {true, Rat(0)};
    }
    return {false, n / d};
}

ColemanExpression ColemanExpression::constant(const PadicNumber& c) {
    ColemanExpression e;
    if (!(c.is_zero() && c.precision() >= kPrecInf))
        e.terms_.push_back({Shape::constant, c, RationalPiece::one(), {}, {}});
    return e;
}

ColemanExpression ColemanExpression::rational(const PadicNumber& coeff, const RationalPiece& r) {
    ColemanExpression e;
    if (!(coeff.is_zero() && coeff.precision() >= kPrecInf))
        e.terms_.push_back({Shape::rational, coeff, r, {}, {}});
    return e;
}

ColemanExpression ColemanExpression::log_term(const PadicNumber& coeff, const RationalFunction& arg,
                                              const RationalPiece& mult) {
    ColemanExpression e;
    if (!(coeff.is_zero() && coeff.precision() >= kPrecInf))
        e.terms_.push_back({Shape::log, coeff, mult, arg, {}});
    return e;
}

ColemanExpression ColemanExpression::loglog_term(const PadicNumber& coeff, const RationalFunction& a1,
                                                 const RationalFunction& a2) {
    ColemanExpression e;
    if (!(coeff.is_zero() && coeff.precision() >= kPrecInf))
        e.terms_.push_back({Shape::loglog, coeff, RationalPiece::one(), a1, a2});
    return e;
}

ColemanExpression ColemanExpression::ltwo_term(const PadicNumber& coeff, const RationalFunction& mu,
                                               const std::optional<RationalFunction>& one_minus_mu,
                                               const RationalPiece& mult) {
    ColemanExpression e;
    if (coeff.is_zero() && coeff.precision() >= kPrecInf) return e;
    RationalFunction om = one_minus_mu ? *one_minus_mu : mu.one_minus();
    e.terms_.push_back({Shape::ltwo, coeff, mult, mu, om});
    return e;
}

ColemanExpression ColemanExpression::log_of(const PadicNumber& coeff, const RationalFunction& f) {
    return log_term(coeff, f);
}

ColemanExpression ColemanExpression::lmod_of(const PadicNumber& coeff, const RationalFunction& f,
                                             const std::optional<RationalFunction>& one_minus) {
    RationalFunction om = one_minus ? *one_minus : f.one_minus();
    ColemanExpression e = ltwo_term(coeff, f, om);
    return e + loglog_term(-coeff.div_long(2), f, om);
}

ColemanExpression ColemanExpression::operator+(const ColemanExpression& o) const {
    ColemanExpression e = *this;
    e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
    return e;
}

ColemanExpression ColemanExpression::operator-(const ColemanExpression& o) const {
    return *this + o.scaled(PadicNumber::from_long(
                       o.terms_.empty() ? (terms_.empty() ? 2 : terms_.front().coeff.prime())
                                        : o.terms_.front().coeff.prime(),
                       -1, kPrecInf));
}

ColemanExpression ColemanExpression::scaled(const PadicNumber& c) const {
    ColemanExpression e;
    if (c.is_zero() && c.precision() >= kPrecInf) return e;
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.coeff = t.coeff * c;
    return e;
}

bool LogCombination::trivial() const {
    if (!(constant.is_zero() && constant.precision() >= kPrecInf)) return false;
    for (auto& [c, a] : logs)
        if (!(c.is_zero() && c.precision() >= kPrecInf)) return false;
    return true;
}

LogCombination LogCombination::of_log(const RationalFunction& f, const PadicConfig& cfg) {
    LogCombination L;
    L.constant = padic_log(cfg.rational(f.lead()), cfg);
    for (auto& [a, m] : f.factors())
        L.logs.push_back({PadicNumber::from_long(cfg.p, m, kPrecInf), a});
    return L;
}

ColemanExpression antiderivative_expression(const RationalForm& w, const PadicConfig& cfg) {
    FormAntiderivative F = integrate_rational_form(w);
    ColemanExpression E;
    PadicNumber one = PadicNumber::from_long(cfg.p, 1, kPrecInf);
    if (!F.poly.is_zero())
        E = E + ColemanExpression::rational(one, RationalPiece::from_poly(F.poly));
    for (auto& [b, mp] : F.poles)
        for (auto& [j, c] : mp)
            E = E + ColemanExpression::rational(one, RationalPiece::pole(c, b, j));
    for (auto& [b, c] : F.logs)
        E = E + ColemanExpression::log_term(cfg.rational(c), RationalFunction::linear(b));
    return E;
}

ColemanExpression dilog_integrate(const LogCombination& L, const RationalForm& psi,
                                  const PadicConfig& cfg) {
    ColemanExpression E;
    PadicNumber one = PadicNumber::from_long(cfg.p, 1, kPrecInf);
    if (psi.is_zero()) return E;
    if (!(L.constant.is_zero() && L.constant.precision() >= kPrecInf))
        E = E + antiderivative_expression(psi, cfg).scaled(L.constant);

    // Split psi into its simple-pole part and a rationally integrable rest.
    RationalForm rest = psi;
    std::map<Rat, Rat> simple = psi.residues();
    {
        RationalForm sub;
        for (auto& [b, r] : simple) sub = sub + RationalForm::dlog(RationalFunction::linear(b)).scaled(r);
        rest = rest + sub.scaled(Rat(-1));
    }
    FormAntiderivative R = integrate_rational_form(rest);

    for (auto& [c, a] : L.logs) {
        if (c.is_zero() && c.precision() >= kPrecInf) continue;
        // simple poles: the dilogarithmic core
        for (auto& [b, r] : simple) {
            PadicNumber w = c * cfg.rational(r);
            if (b == a) {
                E = E + ColemanExpression::loglog_term(w.div_long(2), RationalFunction::linear(a),
                                                       RationalFunction::linear(a));
                continue;
            }
            // int log(z-a) dz/(z-b) = log(b-a) log(1-u) + L2(u), u = (z-a)/(b-a)
            Rat s = b - a;
            RationalFunction u = RationalFunction::linear(a).scaled(Rat(1) / s);
            RationalFunction omu = RationalFunction::linear(b).scaled(Rat(-1) / s);
            PadicNumber logba = padic_log(cfg.rational(s), cfg);
            E = E + ColemanExpression::log_term(w * logba, omu);
            E = E + ColemanExpression::ltwo_term(w, u, omu);
        }
        // integrable rest: int log(z-a) dR = log(z-a) R - int R dz/(z-a)
        bool rest_trivial = R.poly.is_zero() && R.poles.empty();
        if (!rest_trivial) {
            RationalForm back;  // R(z) dz/(z-a), re-decomposed
            {
                Polynomial num = R.poly;
                std::map<Rat, int> den{{a, 1}};
                for (auto& [b, mp] : R.poles) {
                    long kmax = mp.rbegin()->first;
                    den[b] += kmax;
                }
                // assemble numerator of R over the common denominator excluding (z-a)
                Polynomial acc = Polynomial();
                Polynomial denpoly = Polynomial::constant(1);
                for (auto& [b, k] : den) {
                    int reps = k - (b == a ? 1 : 0);
                    for (int i = 0; i < reps; ++i) denpoly = denpoly * Polynomial::linear(b);
                }
                acc = R.poly * denpoly;
                for (auto& [b, mp] : R.poles) {
                    for (auto& [j, cc] : mp) {
                        Polynomial part = Polynomial::constant(cc);
                        for (auto& [b2, k2] : den) {
                            int reps = (k2 - (b2 == a ? 1 : 0)) - (b2 == b ? j : 0);
                            for (int i = 0; i < reps; ++i) part = part * Polynomial::linear(b2);
                        }
                        acc = acc + part;
                    }
                }
                back = RationalForm::from_num_den(acc, Rat(1), den);
            }
            if (!R.poly.is_zero())
                E = E + ColemanExpression::log_term(c, RationalFunction::linear(a),
                                                    RationalPiece::from_poly(R.poly));
            for (auto& [b, mp] : R.poles)
                for (auto& [j, cc] : mp)
                    E = E + ColemanExpression::log_term(c, RationalFunction::linear(a),
                                                        RationalPiece::pole(cc, b, j));
            E = E + antiderivative_expression(back, cfg).scaled(-c);
        }
    }
    return E;
}

ColemanExpression integrate_expression_times_form(const ColemanExpression& E,
                                                  const RationalForm& psi,
                                                  const PadicConfig& cfg) {
    ColemanExpression out;
    for (const auto& t : E.terms()) {
        switch (t.shape) {
            case ColemanExpression::Shape::constant:
                out = out + antiderivative_expression(psi, cfg).scaled(t.coeff);
                break;
            case ColemanExpression::Shape::rational:
                out = out + antiderivative_expression(psi.times_fraction(t.mult.num, t.mult.den), cfg)
                                .scaled(t.coeff);
                break;
            case ColemanExpression::Shape::log: {
                RationalForm scaled_form = psi.times_fraction(t.mult.num, t.mult.den);
                out = out + dilog_integrate(LogCombination::of_log(t.arg1, cfg), scaled_form, cfg)
                                .scaled(t.coeff);
                break;
            }
            default:
                throw_parse("unsupported integrand",
                            "only rational, log and constant terms may multiply a form here");
        }
    }
    return out;
}

namespace {

// Expansion of 1/(z-b) in the standard parameter at y (finite y != b).
LaurentSeries geometric_inverse(const Rat& shift, const PadicConfig& cfg) {
    // 1/(s + shift), shift != 0
    LaurentSeries lin(cfg.p);
    lin.set_coeff(0, cfg.rational(shift));
    lin.set_coeff(1, cfg.integer(1));
    lin.set_window(0, cfg.T);
    return lin.inverse(cfg.T);
}

}  // namespace

LaurentSeries expand_rational_piece(const RationalPiece& r, const ProjPoint& y,
                                    const PadicConfig& cfg) {
    long p = cfg.p;
    LaurentSeries out(p);
    if (r.num.is_zero()) return out;
    if (!y.inf) {
        auto tay = r.num.taylor(y.a);
        for (size_t j = 0; j < tay.size(); ++j)
            if (tay[j] != 0) out.set_coeff(static_cast<long>(j), cfg.rational(tay[j]));
        long shift = 0;
        for (auto& [b, k] : r.den) {
            if (b == y.a) {
                shift -= k;
                continue;
            }
            LaurentSeries inv = geometric_inverse(y.a - b, cfg);
            for (int i = 0; i < k; ++i) out = out * inv;
        }
        if (shift != 0) out = out.shifted(shift);
        return out;
    }
    // at infinity: z = 1/w
    long d = r.num.degree();
    for (long j = 0; j <= d; ++j)
        if (r.num.coeff(j) != 0) out.set_coeff(d - j, cfg.rational(r.num.coeff(j)));
    out = out.shifted(-d);
    for (auto& [b, k] : r.den) {
        // 1/(1/w - b) = w / (1 - b w)
        LaurentSeries lin(p);
        lin.set_coeff(0, cfg.integer(1));
        if (b != 0) lin.set_coeff(1, cfg.rational(-b));
        lin.set_window(0, cfg.T);
        LaurentSeries inv = b == 0 ? LaurentSeries::constant(cfg.integer(1)) : lin.inverse(cfg.T);
        for (int i = 0; i < k; ++i) out = (out * inv).shifted(1);
    }
    return out;
}

Rat leading_coeff_at(const RationalFunction& f, const ProjPoint& y) {
    if (y.inf) return f.lead();
    Rat acc = f.lead();
    for (auto& [b, m] : f.factors()) {
        if (b == y.a) continue;
        Rat base = y.a - b;
        for (long i = 0; i < (m > 0 ? m : -m); ++i) acc = m > 0 ? acc * base : acc / base;
    }
    return acc;
}

LogLaurent expand_log_of_rational(const RationalFunction& f, const ProjPoint& y,
                                  const PadicConfig& cfg) {
    long p = cfg.p;
    LaurentSeries deg0(p);   // power series part
    long logcoef = 0;        // multiple of log z_e
    PadicNumber constant = padic_log(cfg.rational(f.lead()), cfg);
    for (auto& [b, m] : f.factors()) {
        if (!y.inf) {
            if (b == y.a) {
                logcoef += m;
                continue;
            }
            Rat base = y.a - b;
            constant = constant + padic_log(cfg.rational(base), cfg).mul_long(m);
            LaurentSeries x = LaurentSeries::monomial(cfg.rational(Rat(1) / base), 1);
            x.set_window(1, cfg.T);
            deg0 = deg0 + LaurentSeries::log1p(x).scaled(PadicNumber::from_long(p, m, kPrecInf));
        } else {
            // log(z - b) = -log w + log(1 - b w)
            logcoef += -m;
            if (b != 0) {
                LaurentSeries x = LaurentSeries::monomial(cfg.rational(-b), 1);
                x.set_window(1, cfg.T);
                deg0 = deg0 + LaurentSeries::log1p(x).scaled(PadicNumber::from_long(p, m, kPrecInf));
            }
        }
    }
    deg0 = deg0 + LaurentSeries::constant(constant);
    std::vector<LaurentSeries> comps{deg0};
    if (logcoef != 0)
        comps.push_back(LaurentSeries::constant(PadicNumber::from_long(p, logcoef, kPrecInf)));
    return LogLaurent::from_components(std::move(comps));
}

LaurentSeries expand_dlog(const RationalFunction& f, const ProjPoint& y, const PadicConfig& cfg) {
    long p = cfg.p;
    LaurentSeries acc(p);
    for (auto& [b, m] : f.factors()) {
        PadicNumber mm = PadicNumber::from_long(p, m, kPrecInf);
        if (!y.inf) {
            if (b == y.a) {
                acc = acc + LaurentSeries::monomial(mm, -1);
            } else {
                acc = acc + geometric_inverse(y.a - b, cfg).scaled(mm);
            }
        } else {
            // dlog(z-b) = -dw/(w (1 - b w))
            LaurentSeries t(p);
            if (b == 0) {
                t = LaurentSeries::monomial(PadicNumber::from_long(p, -1, kPrecInf), -1);
            } else {
                LaurentSeries lin(p);
                lin.set_coeff(0, cfg.integer(1));
                lin.set_coeff(1, cfg.rational(-b));
                lin.set_window(0, cfg.T);
                t = lin.inverse(cfg.T).shifted(-1).scaled(PadicNumber::from_long(p, -1, kPrecInf));
            }
            acc = acc + t.scaled(mm);
        }
    }
    return acc;
}

namespace {

// Expansion of L_2(mu) at y through d L_2(mu) = log(mu) dlog(1-mu), with the
// constant term pinned by the constant-term conventions: 0 at mu(y) = 0,
// (1/2) log^2 of the leading coefficient at mu(y) = infinity, the pointwise
// value otherwise.
LogLaurent expand_ltwo_shape(const RationalFunction& mu, const RationalFunction& omu,
                             const ProjPoint& y, const PadicConfig& cfg) {
    LogLaurent logmu = expand_log_of_rational(mu, y, cfg);
    LaurentSeries dl = expand_dlog(omu, y, cfg);
    LogForm w{logmu * LogLaurent(dl)};
    LogLaurent X = integrate_form(w);
    QValue v = mu.eval(y);
    PadicNumber C = PadicNumber::zero(cfg.p, kPrecInf);
    if (v.inf) {
        PadicNumber lbar = padic_log(cfg.rational(leading_coeff_at(mu, y)), cfg);
        C = (lbar * lbar).div_long(2);
    } else if (v.v != 0) {
        C = ltwo(PadicOrInf::finite(cfg.rational(v.v)), cfg).value;
    }
    return X + LogLaurent(LaurentSeries::constant(C));
}

}  // namespace

LogLaurent expand_expression(const ColemanExpression& E, const ProjPoint& y,
                             const PadicConfig& cfg, const std::optional<ParamChoice>& param) {
    long p = cfg.p;
    LogLaurent acc(p);
    for (const auto& t : E.terms()) {
        LogLaurent piece(p);
        switch (t.shape) {
            case ColemanExpression::Shape::constant:
                piece = LogLaurent(LaurentSeries::constant(PadicNumber::from_long(p, 1, kPrecInf)));
                break;
            case ColemanExpression::Shape::rational:
                piece = LogLaurent(expand_rational_piece(t.mult, y, cfg));
                break;
            case ColemanExpression::Shape::log:
                piece = expand_log_of_rational(t.arg1, y, cfg);
                if (!t.mult.is_one()) piece = piece * LogLaurent(expand_rational_piece(t.mult, y, cfg));
                break;
            case ColemanExpression::Shape::loglog:
                piece = expand_log_of_rational(t.arg1, y, cfg) * expand_log_of_rational(t.arg2, y, cfg);
                break;
            case ColemanExpression::Shape::ltwo:
                piece = expand_ltwo_shape(t.arg1, t.arg2, y, cfg);
                if (!t.mult.is_one()) piece = piece * LogLaurent(expand_rational_piece(t.mult, y, cfg));
                break;
        }
        acc = acc + piece.scaled(t.coeff);
    }
    if (param) acc = reparametrize(acc, param->scale, param->unit, cfg);
    return acc;
}

PadicNumber constant_term_at(const ColemanExpression& E, const ProjPoint& y,
                             const PadicConfig& cfg, const std::optional<ParamChoice>& param) {
    return constant_term(expand_expression(E, y, cfg, param));
}

PadicNumber qvalue_to_padic(const QValue& v, const PadicConfig& cfg) {
    if (v.inf) throw_unreachable("fixture not evaluable", "infinite value where a number is required");
    return cfg.rational(v.v);
}

PadicOrInf qvalue_to_arg(const QValue& v, const PadicConfig& cfg) {
    if (v.inf) return PadicOrInf::infinity();
    return PadicOrInf::finite(cfg.rational(v.v));
}

PadicNumber eval_expr(const ColemanExpression& E, const ProjPoint& y, const PadicConfig& cfg) {
    long p = cfg.p;
    PadicNumber acc = PadicNumber::zero(p, kPrecInf);
    auto log_at = [&](const RationalFunction& f) {
        QValue v = f.eval(y);
        if (v.inf || v.v == 0)
            throw_unreachable("fixture not evaluable", "log evaluated at a zero or pole");
        return padic_log(cfg.rational(v.v), cfg);
    };
    for (const auto& t : E.terms()) {
        PadicNumber val = PadicNumber::zero(p, kPrecInf);
        switch (t.shape) {
            case ColemanExpression::Shape::constant:
                val = PadicNumber::from_long(p, 1, kPrecInf);
                break;
            case ColemanExpression::Shape::rational:
                val = qvalue_to_padic(t.mult.eval(y), cfg);
                break;
            case ColemanExpression::Shape::log:
                val = log_at(t.arg1) * qvalue_to_padic(t.mult.eval(y), cfg);
                break;
            case ColemanExpression::Shape::loglog:
                val = log_at(t.arg1) * log_at(t.arg2);
                break;
            case ColemanExpression::Shape::ltwo:
                val = ltwo(qvalue_to_arg(t.arg1.eval(y), cfg), cfg).value *
                      qvalue_to_padic(t.mult.eval(y), cfg);
                break;
        }
        acc = acc + val * t.coeff;
    }
    return acc;
}

}  // namespace reglab
