#include "reglab/p1geom.hpp"

#include <algorithm>

namespace reglab {

Divisor divisor_of(const RationalFunction& f) {
    Divisor D;
    for (auto& [a, m] : f.factors()) D.mult[ProjPoint::finite(a)] = m;
    long at_inf = f.degree_den() - f.degree_num();
    if (at_inf != 0) D.mult[ProjPoint::infinity()] = at_inf;
    return D;
}

bool WideOpen::has_end(const ProjPoint& y) const {
    return std::find(ends.begin(), ends.end(), y) != ends.end();
}

WideOpen wide_open_ends(const std::vector<RationalFunction>& functions, const PadicConfig& cfg,
                        const std::vector<ProjPoint>& extra) {
    WideOpen U;
    U.prime = cfg.p;
    std::map<ProjPoint, Reduction> pts;
    for (auto& f : functions)
        for (auto& [y, m] : divisor_of(f).mult) pts.emplace(y, reduce_point(y, cfg.p));
    for (auto& y : extra) pts.emplace(y, reduce_point(y, cfg.p));
    std::map<Reduction, ProjPoint> seen;
    for (auto& [y, r] : pts) {
        auto [it, fresh] = seen.emplace(r, y);
        if (!fresh)
            throw_parse("residue disc collision",
                        y.to_string() + " and " + it->second.to_string() + " reduce equally");
        U.ends.push_back(y);
    }
    std::sort(U.ends.begin(), U.ends.end());
    return U;
}

LogLaurent expand_at_end(const ColemanExpression& E, const ProjPoint& end, const PadicConfig& cfg) {
    return expand_expression(E, end, cfg);
}

ColemanExpression rational_antiderivative(const RationalForm& eta, const PadicConfig& cfg) {
    return antiderivative_expression(eta, cfg);
}

PadicNumber global_triple_index(const GlobalTripleInput& in, const WideOpen& U,
                                const PadicConfig& cfg, std::vector<EndValue>* breakdown) {
    PadicNumber total = PadicNumber::zero(cfg.p, kPrecInf);
    if (breakdown) breakdown->clear();
    for (const auto& e : U.ends) {
        LogLaurent F = expand_at_end(in.F, e, cfg);
        LogLaurent G = expand_at_end(in.G, e, cfg);
        LogLaurent H = expand_at_end(in.H, e, cfg);
        for (const auto* fn : {&F, &G, &H})
            if (!in_alog_prime(*fn).ok)
                throw_parse("not A-prime on end", e.to_string());
        PadicNumber local = canonical_triple_index(F, G, H);
        PadicNumber res_dF = residue_of_differential(F);
        PadicNumber res_dG = residue_of_differential(G);
        if (!res_dF.is_zero()) {
            PadicNumber C = offset_from_canonical(expand_at_end(in.I_GdH, e, cfg), G, H);
            if (in.shift_GdH) C = C + *in.shift_GdH;
            local = local - C * res_dF;
        } else if (in.shift_GdH) {
            // correction is zero regardless of the shift
        }
        if (!res_dG.is_zero()) {
            PadicNumber C = offset_from_canonical(expand_at_end(in.I_FdH, e, cfg), F, H);
            if (in.shift_FdH) C = C + *in.shift_FdH;
            local = local - C * res_dG;
        }
        if (breakdown) breakdown->push_back({e, local});
        total = total + local;
    }
    return total;
}

}  // namespace reglab
