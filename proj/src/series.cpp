#include "reglab/series.hpp"

#include <algorithm>
#include <sstream>

namespace reglab {

LaurentSeries LaurentSeries::monomial(const PadicNumber& c, long exp) {
    LaurentSeries s(c.prime());
    s.set_coeff(exp, c);
    return s;
}

bool LaurentSeries::is_zero_at_precision() const {
    for (auto& [n, v] : c_)
        if (!v.is_zero()) return false;
    return true;
}

long LaurentSeries::order() const {
    for (auto& [n, v] : c_)
        if (!v.is_zero()) return n;
    throw_window("insufficient precision", "order of a series indistinguishable from 0");
}

void LaurentSeries::set_window(long lo, long hi) {
    lo_ = lo;
    hi_ = hi;
    std::erase_if(c_, [&](const auto& kv) { return kv.first < lo_ || kv.first >= hi_; });
}

LaurentSeries LaurentSeries::restricted(long lo, long hi) const {
    LaurentSeries s = *this;
    s.set_window(std::max(lo, lo_), std::min(hi, hi_));
    return s;
}

PadicNumber LaurentSeries::coefficient(long n) const {
    if (n >= hi_) throw_window("window exhausted", "coefficient beyond the reliable range");
    auto it = c_.find(n);
    if (it != c_.end()) return it->second;
    return PadicNumber::zero(prime_, kPrecInf);
}

void LaurentSeries::set_coeff(long n, const PadicNumber& v) {
    if (v.is_zero() && v.precision() >= kPrecInf) {
        c_.erase(n);
        return;
    }
    c_[n] = v;
    if (n < lo_) lo_ = n;
    if (n >= hi_) hi_ = n + 1;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    LaurentSeries r(prime_);
    r.lo_ = std::min(lo_, o.lo_);
    r.hi_ = std::min(hi_, o.hi_);
    if (r.hi_ <= r.lo_) throw_window("window exhausted", "empty window in addition");
    for (auto& [n, v] : c_)
        if (n < r.hi_) r.c_[n] = v;
    for (auto& [n, v] : o.c_) {
        if (n >= r.hi_) continue;
        auto it = r.c_.find(n);
        if (it == r.c_.end())
            r.c_[n] = v;
        else
            it->second = it->second + v;
    }
    std::erase_if(r.c_, [](const auto& kv) { return kv.second.is_zero() && kv.second.precision() >= kPrecInf; });
    return r;
}

LaurentSeries LaurentSeries::negated() const {
    LaurentSeries r = *this;
    for (auto& [n, v] : r.c_) v = -v;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o.negated(); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return LaurentSeries(prime_);
    LaurentSeries r(prime_);
    r.lo_ = win_add(lo_, o.lo_);
    r.hi_ = std::min(win_add(hi_, o.lo_), win_add(o.hi_, lo_));
    if (r.hi_ <= r.lo_) throw_window("window exhausted", "empty window in multiplication");
    for (auto& [i, a] : c_) {
        for (auto& [j, b] : o.c_) {
            long n = i + j;
            if (n >= r.hi_) continue;
            auto prod = a * b;
            auto it = r.c_.find(n);
            if (it == r.c_.end())
                r.c_[n] = prod;
            else
                it->second = it->second + prod;
        }
    }
    std::erase_if(r.c_, [](const auto& kv) { return kv.second.is_zero() && kv.second.precision() >= kPrecInf; });
    return r;
}

LaurentSeries LaurentSeries::scaled(const PadicNumber& c) const {
    if (c.is_zero() && c.precision() >= kPrecInf) return LaurentSeries(prime_);
    LaurentSeries r = *this;
    for (auto& [n, v] : r.c_) v = v * c;
    std::erase_if(r.c_, [](const auto& kv) { return kv.second.is_zero() && kv.second.precision() >= kPrecInf; });
    return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries r(prime_);
    r.lo_ = win_add(lo_, k);
    r.hi_ = win_add(hi_, k);
    for (auto& [n, v] : c_) r.c_[n + k] = v;
    return r;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r(prime_);
    r.lo_ = win_add(lo_, -1);
    r.hi_ = win_add(hi_, -1);
    for (auto& [n, v] : c_) {
        if (n == 0) continue;
        r.c_[n - 1] = v.mul_long(n);
    }
    return r;
}

LaurentSeries LaurentSeries::antiderivative() const {
    LaurentSeries r(prime_);
    r.lo_ = win_add(lo_, 1);
    r.hi_ = win_add(hi_, 1);
    for (auto& [n, v] : c_) {
        if (n == -1) throw_window("window exhausted", "termwise antiderivative of z^-1");
        r.c_[n + 1] = v.div_long(n + 1);
    }
    return r;
}

LaurentSeries LaurentSeries::inverse(long width) const {
    if (is_zero_at_precision())
        throw_window("insufficient precision", "inverse of a series indistinguishable from 0");
    long m = order();
    PadicNumber a0 = coefficient(m);
    long avail = hi_ >= kWinMax ? width : hi_ - m;
    long w = std::min(width, avail);
    if (w <= 0) throw_window("window exhausted", "no coefficients available for inversion");
    // b = 1/a with ord(b) = -m: b_{-m+j} from the convolution recurrence.
    LaurentSeries r(prime_);
    r.lo_ = -m;
    r.hi_ = -m + w;
    std::vector<PadicNumber> b(w, PadicNumber::zero(prime_, kPrecInf));
    PadicNumber one = PadicNumber::from_long(prime_, 1, kPrecInf);
    b[0] = one / a0;
    for (long j = 1; j < w; ++j) {
        PadicNumber s = PadicNumber::zero(prime_, kPrecInf);
        for (long i = 1; i <= j; ++i) {
            PadicNumber ai = coefficient(m + i);
            if (ai.is_zero() && ai.precision() >= kPrecInf) continue;
            s = s + ai * b[j - i];
        }
        b[j] = (-s) / a0;
    }
    for (long j = 0; j < w; ++j) r.set_coeff(-m + j, b[j]);
    r.lo_ = -m;
    r.hi_ = -m + w;
    return r;
}

LaurentSeries LaurentSeries::log1p(const LaurentSeries& x) {
    if (x.is_zero_at_precision()) {
        LaurentSeries r(x.prime());
        if (!x.empty()) r.set_window(x.lo(), x.hi());
        return r;
    }
    if (x.order() < 1) throw_parse("invalid series argument", "log1p needs order >= 1");
    long width = x.hi() >= kWinMax ? kWinMax : x.hi();
    LaurentSeries acc(x.prime());
    LaurentSeries pw = x;
    long k = 1;
    for (;;) {
        LaurentSeries term = pw.scaled(PadicNumber::from_long(x.prime(), k % 2 == 1 ? 1 : -1, kPrecInf))
                                 .scaled(PadicNumber::from_long(x.prime(), 1, kPrecInf).div_long(k));
        acc = acc + term;
        ++k;
        if (k * x.order() >= width) break;
        pw = pw * x;
    }
    if (width < kWinMax) acc.set_window(acc.lo(), width);
    return acc;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    os << "[";
    for (auto& [n, v] : c_) os << " z^" << n << "*(" << v.to_string() << ")";
    os << " ] win[" << (lo_ <= kWinMin / 2 ? -999 : lo_) << "," << (hi_ >= kWinMax / 2 ? 999 : hi_) << ")";
    return os.str();
}

void LogLaurent::normalize() {
    while (!comps_.empty() && comps_.back().empty() && comps_.back().is_exact_zero()) comps_.pop_back();
}

LogLaurent LogLaurent::log_z(const PadicConfig& cfg) {
    LogLaurent F(cfg.p);
    F.comps_.push_back(LaurentSeries::zero(cfg.p));
    F.comps_.push_back(LaurentSeries::constant(cfg.integer(1)));
    return F;
}

LogLaurent LogLaurent::from_components(std::vector<LaurentSeries> comps) {
    LogLaurent F(comps.empty() ? 0 : comps.front().prime());
    F.comps_ = std::move(comps);
    F.normalize();
    return F;
}

LaurentSeries LogLaurent::component(long i) const {
    if (i < 0 || i >= static_cast<long>(comps_.size())) return LaurentSeries::zero(prime_);
    return comps_[i];
}

bool LogLaurent::is_zero_at_precision() const {
    for (auto& f : comps_)
        if (!f.is_zero_at_precision()) return false;
    return true;
}

LogLaurent LogLaurent::operator+(const LogLaurent& o) const {
    LogLaurent r(prime_ ? prime_ : o.prime_);
    size_t n = std::max(comps_.size(), o.comps_.size());
    for (size_t i = 0; i < n; ++i) r.comps_.push_back(component(i) + o.component(i));
    r.normalize();
    return r;
}

LogLaurent LogLaurent::negated() const {
    LogLaurent r(prime_);
    for (auto& f : comps_) r.comps_.push_back(f.negated());
    return r;
}

LogLaurent LogLaurent::operator-(const LogLaurent& o) const { return *this + o.negated(); }

LogLaurent LogLaurent::operator*(const LogLaurent& o) const {
    LogLaurent r(prime_ ? prime_ : o.prime_);
    if (comps_.empty() || o.comps_.empty()) return r;
    r.comps_.assign(comps_.size() + o.comps_.size() - 1, LaurentSeries::zero(prime_));
    for (size_t i = 0; i < comps_.size(); ++i)
        for (size_t j = 0; j < o.comps_.size(); ++j)
            r.comps_[i + j] = r.comps_[i + j] + comps_[i] * o.comps_[j];
    r.normalize();
    return r;
}

LogLaurent LogLaurent::scaled(const PadicNumber& c) const {
    LogLaurent r(prime_);
    for (auto& f : comps_) r.comps_.push_back(f.scaled(c));
    r.normalize();
    return r;
}

std::optional<PadicNumber> LogLaurent::as_constant() const {
    PadicNumber val = PadicNumber::zero(prime_, kPrecInf);
    for (size_t i = 0; i < comps_.size(); ++i) {
        for (auto& [n, v] : comps_[i].coeffs()) {
            if (i == 0 && n == 0) {
                val = v;
                continue;
            }
            if (!v.is_zero()) return std::nullopt;
        }
    }
    // the constant must actually be readable
    if (!comps_.empty() && comps_[0].hi() <= 0) return std::nullopt;
    return val;
}

std::string LogLaurent::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < comps_.size(); ++i)
        os << "log^" << i << ": " << comps_[i].to_string() << "\n";
    return os.str();
}

LogForm differential(const LogLaurent& F) {
    long p = F.prime();
    long d = F.log_degree();
    std::vector<LaurentSeries> out;
    for (long i = 0; i <= d; ++i) {
        LaurentSeries g = F.component(i).derivative();
        if (i + 1 <= d) g = g + F.component(i + 1).shifted(-1).scaled(PadicNumber::from_long(p, i + 1, kPrecInf));
        out.push_back(g);
    }
    return {LogLaurent::from_components(std::move(out))};
}

LogLaurent integrate_form(const LogForm& w) {
    long p = w.coef.prime();
    long d = w.coef.log_degree();
    std::vector<LaurentSeries> acc(static_cast<size_t>(d) + 2, LaurentSeries::zero(p));
    LaurentSeries carry = LaurentSeries::zero(p);  // correction flowing down one log degree
    for (long i = d; i >= 0; --i) {
        LaurentSeries gi = w.coef.component(i) + carry;
        PadicNumber c = gi.coefficient(-1);
        if (!(c.is_zero() && c.precision() >= kPrecInf)) {
            // c z^{-1} log^i dz integrates to c/(i+1) log^{i+1}
            acc[i + 1] = acc[i + 1] + LaurentSeries::constant(c.div_long(i + 1));
            LaurentSeries m = LaurentSeries::monomial(c, -1);
            m.set_window(gi.lo(), gi.hi());
            gi = gi - m;
            gi.set_coeff(-1, PadicNumber::zero(p, kPrecInf));
        }
        LaurentSeries G(p);
        {
            // termwise antiderivative of gi (no z^{-1} term left)
            G.set_window(win_add(gi.lo(), 1), win_add(gi.hi(), 1));
            for (auto& [n, v] : gi.coeffs()) {
                if (n == -1) continue;  // exactly cancelled above
                G.set_coeff(n + 1, v.div_long(n + 1));
            }
            G.set_window(win_add(gi.lo(), 1), win_add(gi.hi(), 1));
        }
        acc[i] = acc[i] + G;
        if (i > 0) carry = G.shifted(-1).scaled(PadicNumber::from_long(p, -i, kPrecInf));
    }
    LogLaurent R = LogLaurent::from_components(std::move(acc));
    PadicNumber c0 = constant_term(R);
    return R - LogLaurent(LaurentSeries::constant(c0));
}

PadicNumber residue(const LogForm& w) {
    for (long i = 1; i <= w.coef.log_degree(); ++i)
        if (!w.coef.component(i).is_zero_at_precision())
            throw_parse("not meromorphic", "residue of a form with positive log degree");
    return w.coef.component(0).coefficient(-1);
}

PadicNumber constant_term(const LogLaurent& F) {
    return F.component(0).coefficient(0);
}

AlogPrime in_alog_prime(const LogLaurent& F) {
    long p = F.prime();
    PadicNumber alpha = PadicNumber::zero(p, kPrecInf);
    if (F.log_degree() >= 2) {
        for (long i = 2; i <= F.log_degree(); ++i)
            if (!F.component(i).is_zero_at_precision()) return {false, alpha};
    }
    if (F.log_degree() >= 1) {
        const LaurentSeries f1 = F.component(1);
        for (auto& [n, v] : f1.coeffs())
            if (n != 0 && !v.is_zero()) return {false, alpha};
        if (f1.hi() > 0) alpha = f1.coefficient(0);
    }
    return {true, alpha};
}

LogLaurent reparametrize(const LogLaurent& F, const PadicNumber& c, const LaurentSeries& u,
                         const PadicConfig& cfg) {
    long p = cfg.p;
    if (c.is_zero()) throw_parse("invalid substitution", "scale must be nonzero");
    PadicNumber one = PadicNumber::from_long(p, 1, kPrecInf);
    if (!u.coefficient(0).indistinguishable(one))
        throw_parse("invalid substitution", "unit series must be 1 at z = 0");

    long width = cfg.T;
    LaurentSeries u1 = u;
    if (u1.hi() >= kWinMax) u1.set_window(u1.lo(), width);
    LaurentSeries uinv = u1.inverse(width);

    // A = log c + log u(z), a log-degree-0 series
    LaurentSeries delta = u1 - LaurentSeries::constant(one);
    LaurentSeries A = LaurentSeries::log1p(delta) + LaurentSeries::constant(padic_log(c, cfg));

    // substitute the meromorphic components: sum a_n c^n z^n u^n
    auto subst = [&](const LaurentSeries& f) {
        LaurentSeries out(p);
        if (f.empty()) {
            out = f;
            return out;
        }
        long f_lo = f.coeffs().begin()->first;
        long wlimit = std::min(f.hi(), win_add(f_lo, std::min(width, u1.hi() - u1.lo())));
        out.set_window(f.lo(), wlimit);
        bool any = false;
        long prev_n = 0;
        LaurentSeries upow(p);
        for (auto& [n, a] : f.coeffs()) {
            if (!any) {
                upow = LaurentSeries::constant(one);
                long k = n;
                const LaurentSeries& base = k >= 0 ? u1 : uinv;
                for (long i = 0; i < (k >= 0 ? k : -k); ++i) upow = upow * base;
                any = true;
            } else {
                const LaurentSeries& base = n > prev_n ? u1 : uinv;
                for (long i = 0; i < std::abs(n - prev_n); ++i) upow = upow * base;
            }
            prev_n = n;
            LaurentSeries term = upow.scaled(a * c.pow(n)).shifted(n);
            out = out + term.restricted(kWinMin, wlimit);
        }
        out.set_window(out.lo(), wlimit);
        return out;
    };

    long d = F.log_degree();
    // binomials C(i, j)
    std::vector<std::vector<long>> C(d + 1, std::vector<long>(d + 1, 0));
    for (long i = 0; i <= d; ++i) {
        C[i][0] = 1;
        for (long j = 1; j <= i; ++j) C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0);
    }
    LogLaurent out(p);
    std::vector<LaurentSeries> comps(static_cast<size_t>(d) + 1, LaurentSeries::zero(p));
    std::vector<LaurentSeries> Apow{LaurentSeries::constant(one)};
    for (long k = 1; k <= d; ++k) Apow.push_back(Apow.back() * A);
    for (long i = 0; i <= d; ++i) {
        LaurentSeries fi = subst(F.component(i));
        if (fi.is_exact_zero()) continue;
        for (long j = 0; j <= i; ++j) {
            LaurentSeries t = fi.scaled(PadicNumber::from_long(p, C[i][j], kPrecInf)) * Apow[i - j];
            comps[j] = comps[j] + t;
        }
    }
    return LogLaurent::from_components(std::move(comps));
}

PadicNumber residue_f_dg(const LaurentSeries& f, const LaurentSeries& g) {
    // res f dg = sum_j j g_j f_{-j}; provable only if the cross terms beyond
    // either window are structurally zero.
    long p = f.prime();
    bool g_tail_ok = g.hi() >= kWinMax / 2 || f.lo() > -g.hi();
    bool f_tail_ok = f.hi() >= kWinMax / 2 || g.lo() > -f.hi();
    if (!g_tail_ok || !f_tail_ok)
        throw_window("window exhausted", "residue of product not provable on these windows");
    PadicNumber acc = PadicNumber::zero(p, kPrecInf);
    for (auto& [j, gj] : g.coeffs()) {
        if (j == 0) continue;
        PadicNumber fj = f.coefficient(-j);
        if (fj.is_zero() && fj.precision() >= kPrecInf) continue;
        acc = acc + (fj * gj).mul_long(j);
    }
    return acc;
}

}  // namespace reglab
