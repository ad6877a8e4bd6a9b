#pragma once

#include <string>
#include <vector>

#include "reglab/index.hpp"
#include "reglab/polylog.hpp"

namespace reglab {

/// Finite formal sum of points of P^1(Q).
struct Divisor {
    std::map<ProjPoint, long> mult;

    long degree() const {
        long d = 0;
        for (auto& [y, m] : mult) d += m;
        return d;
    }
    long at(const ProjPoint& y) const {
        auto it = mult.find(y);
        return it == mult.end() ? 0 : it->second;
    }
};

/// Zeros minus poles, including the point at infinity; always degree 0.
Divisor divisor_of(const RationalFunction& f);

/// P^1 minus closed discs around finitely many points with pairwise
/// distinct reductions mod p.  Each removed point carries one annulus end
/// with the standard parameter (z - a, or 1/z at infinity).
struct WideOpen {
    long prime = 0;
    std::vector<ProjPoint> ends;  // sorted removed points
    bool has_end(const ProjPoint& y) const;
};

/// Builds the wide open whose removed set is the union of the divisor
/// supports of `functions` plus `extra` points; fails on reduction
/// collisions.
WideOpen wide_open_ends(const std::vector<RationalFunction>& functions, const PadicConfig& cfg,
                        const std::vector<ProjPoint>& extra = {});

/// Local expansion of an expression at an annulus end in its standard
/// parameter.
LogLaurent expand_at_end(const ColemanExpression& E, const ProjPoint& end, const PadicConfig& cfg);

/// Antiderivative of a split rational 1-form: rational pieces plus
/// residue logs.
ColemanExpression rational_antiderivative(const RationalForm& eta, const PadicConfig& cfg);

/// Global triple index input: three functions on the wide open together
/// with globally chosen auxiliary integrals (one closed-form expression
/// restricted to every end).  The value never depends on the integral of
/// F dG, so none is carried; shift_* add a global constant to the
/// corresponding auxiliary integral.
struct GlobalTripleInput {
    ColemanExpression F, G, H;
    ColemanExpression I_GdH, I_FdH;
    std::optional<PadicNumber> shift_GdH, shift_FdH;
};

struct EndValue {
    ProjPoint end;
    PadicNumber value;
};

/// Sum over all ends of the local triple index with globally consistent
/// auxiliary data.  The constant offset of an auxiliary integral is only
/// evaluated at ends where the matching residue is nonzero.
PadicNumber global_triple_index(const GlobalTripleInput& in, const WideOpen& U,
                                const PadicConfig& cfg, std::vector<EndValue>* breakdown = nullptr);

}  // namespace reglab
