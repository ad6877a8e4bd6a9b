#include "reglab/index.hpp"

namespace reglab {

namespace {

struct Decomp {
    PadicNumber alpha;   // coefficient of log z
    LaurentSeries mero;  // log-degree-0 part
};

Decomp decompose(const LogLaurent& F, const char* role) {
    auto chk = in_alog_prime(F);
    if (!chk.ok) throw_parse("not in A-prime", role);
    return {chk.alpha, F.component(0)};
}

bool provably_zero_scalar(const PadicNumber& a) {
    return a.is_zero() && a.precision() >= kPrecInf;
}

}  // namespace

PadicNumber double_index(const LogLaurent& F, const LogLaurent& G) {
    Decomp dF = decompose(F, "double index, first argument");
    Decomp dG = decompose(G, "double index, second argument");
    // <F,G> = beta c(f) + res f dg - alpha c(g), with <log z, log z> = 0.
    PadicNumber acc = residue_f_dg(dF.mero, dG.mero);
    if (!provably_zero_scalar(dG.alpha)) acc = acc + dG.alpha * dF.mero.coefficient(0);
    if (!provably_zero_scalar(dF.alpha)) acc = acc - dF.alpha * dG.mero.coefficient(0);
    return acc;
}

PadicNumber residue_of_differential(const LogLaurent& F) {
    auto chk = in_alog_prime(F);
    if (!chk.ok) throw_parse("not in A-prime", "residue of differential");
    return chk.alpha;
}

namespace {

LogForm product_form(const LogLaurent& R, const LogLaurent& S) {
    return LogForm{R * differential(S).coef};
}

LogLaurent canonical_integral(const LogLaurent& R, const LogLaurent& S) {
    return integrate_form(product_form(R, S));
}

// Offset of a user integral from the canonical one; must be a constant.
PadicNumber constant_offset(const LogLaurent& user, const LogLaurent& canonical) {
    auto diff = user - canonical;
    auto c = diff.as_constant();
    if (!c) throw_parse("invalid auxiliary integral", "offset from canonical data is not constant");
    return *c;
}

void validate_integral(const LogLaurent& I, const LogLaurent& R, const LogLaurent& S,
                       const char* which) {
    LogForm expect = product_form(R, S);
    LogForm got = differential(I);
    LogLaurent diff = got.coef - expect.coef;
    if (!diff.is_zero_at_precision())
        throw_parse("invalid auxiliary integral", which);
}

// One slot of the trilinear expansion: a pure multiple of log z or a
// meromorphic series.
struct Atom {
    bool is_log;
    PadicNumber alpha;   // when is_log
    LaurentSeries mero;  // when !is_log
    long prime;

    LogLaurent as_loglaurent() const {
        if (!is_log) return LogLaurent(mero);
        return LogLaurent::from_components(
            {LaurentSeries::zero(prime), LaurentSeries::constant(alpha)});
    }
    bool vanishes() const {
        return is_log ? provably_zero_scalar(alpha) : mero.is_exact_zero();
    }
};

// Triple index of one expansion term with canonical (pint) integrals on the
// designated directions (B dC), (A dC), (A dB); partners are forced.
PadicNumber atom_index(const Atom& A, const Atom& B, const Atom& C) {
    if (A.vanishes() || B.vanishes() || C.vanishes())
        return PadicNumber::zero(A.prime, kPrecInf);
    if (A.is_log && B.is_log && C.is_log)
        return PadicNumber::zero(A.prime, kPrecInf);  // <log z, log z; log z> = 0

    LogLaurent La = A.as_loglaurent(), Lb = B.as_loglaurent(), Lc = C.as_loglaurent();
    if (!B.is_log)  // reduction to the double index
        return double_index(La, canonical_integral(Lb, Lc));
    if (!A.is_log)  // symmetry, then reduction
        return double_index(Lb, canonical_integral(La, Lc));
    // C meromorphic: <A,B;C> = -<A,C;B> - <B,C;A>, each via the reduction,
    // with the forced partner integrals I_{CdB} = BC - pint(B dC) etc.
    LogLaurent I_CdB = Lb * Lc - canonical_integral(Lb, Lc);
    LogLaurent I_CdA = La * Lc - canonical_integral(La, Lc);
    return (double_index(La, I_CdB) + double_index(Lb, I_CdA)).mul_long(-1);
}

PadicNumber canonical_triple(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H) {
    long p = F.prime();
    Decomp dF = decompose(F, "triple index, F");
    Decomp dG = decompose(G, "triple index, G");
    Decomp dH = decompose(H, "triple index, H");
    Atom slots[3][2] = {
        {{true, dF.alpha, LaurentSeries(p), p}, {false, PadicNumber(), dF.mero, p}},
        {{true, dG.alpha, LaurentSeries(p), p}, {false, PadicNumber(), dG.mero, p}},
        {{true, dH.alpha, LaurentSeries(p), p}, {false, PadicNumber(), dH.mero, p}},
    };
    PadicNumber acc = PadicNumber::zero(p, kPrecInf);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                acc = acc + atom_index(slots[0][a], slots[1][b], slots[2][c]);
    return acc;
}

}  // namespace

PadicNumber canonical_triple_index(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H) {
    return canonical_triple(F, G, H);
}

PadicNumber offset_from_canonical(const LogLaurent& I, const LogLaurent& R, const LogLaurent& S) {
    validate_integral(I, R, S, "integral does not match its form");
    return constant_offset(I, canonical_integral(R, S));
}

TripleData make_triple_data(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H,
                            const std::optional<LogLaurent>& I_GdH,
                            const std::optional<LogLaurent>& I_FdH,
                            const std::optional<LogLaurent>& I_FdG) {
    for (auto [fn, role] : {std::pair<const LogLaurent*, const char*>{&F, "F"}, {&G, "G"}, {&H, "H"}})
        if (!in_alog_prime(*fn).ok) throw_parse("not in A-prime", role);

    TripleData d{F, G, H, LogLaurent(F.prime()), LogLaurent(F.prime()), LogLaurent(F.prime()),
                 LogLaurent(F.prime()), LogLaurent(F.prime()), LogLaurent(F.prime()),
                 PadicNumber::zero(F.prime(), kPrecInf), PadicNumber::zero(F.prime(), kPrecInf)};

    LogLaurent can_GdH = canonical_integral(G, H);
    LogLaurent can_FdH = canonical_integral(F, H);
    LogLaurent can_FdG = canonical_integral(F, G);

    if (I_GdH) {
        validate_integral(*I_GdH, G, H, "I_GdH does not integrate G dH");
        d.I_GdH = *I_GdH;
        d.C_GdH = constant_offset(*I_GdH, can_GdH);
    } else {
        d.I_GdH = can_GdH;
    }
    if (I_FdH) {
        validate_integral(*I_FdH, F, H, "I_FdH does not integrate F dH");
        d.I_FdH = *I_FdH;
        d.C_FdH = constant_offset(*I_FdH, can_FdH);
    } else {
        d.I_FdH = can_FdH;
    }
    if (I_FdG) {
        validate_integral(*I_FdG, F, G, "I_FdG does not integrate F dG");
        d.I_FdG = *I_FdG;
    } else {
        d.I_FdG = can_FdG;
    }
    d.I_HdG = G * H - d.I_GdH;
    d.I_HdF = F * H - d.I_FdH;
    d.I_GdF = F * G - d.I_FdG;
    return d;
}

PadicNumber triple_index(const TripleData& data) {
    PadicNumber value = canonical_triple(data.F, data.G, data.H);
    // change-of-constant corrections relative to the canonical choices
    if (!(data.C_GdH.is_zero() && data.C_GdH.precision() >= kPrecInf))
        value = value - data.C_GdH * residue_of_differential(data.F);
    if (!(data.C_FdH.is_zero() && data.C_FdH.precision() >= kPrecInf))
        value = value - data.C_FdH * residue_of_differential(data.G);
    return value;
}

PadicNumber triple_index_simple_pole(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H,
                                     const LogLaurent& I_FdH, const LogLaurent& I_GdH) {
    for (auto [fn, role] : {std::pair<const LogLaurent*, const char*>{&F, "F"}, {&G, "G"}, {&H, "H"}}) {
        Decomp dx = decompose(*fn, role);
        for (auto& [n, v] : dx.mero.coeffs())
            if (n < 0 && !v.is_zero())
                throw_parse("not simple-pole", role);
    }
    validate_integral(I_FdH, F, H, "I_FdH does not integrate F dH");
    validate_integral(I_GdH, G, H, "I_GdH does not integrate G dH");
    PadicNumber resF = residue_of_differential(F);
    PadicNumber resG = residue_of_differential(G);
    PadicNumber resH = residue_of_differential(H);
    return constant_term(F) * constant_term(G) * resH - resF * constant_term(I_GdH) -
           resG * constant_term(I_FdH);
}

}  // namespace reglab
