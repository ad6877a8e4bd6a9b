#pragma once

#include <optional>

#include "reglab/series.hpp"

namespace reglab {

/// The unique antisymmetric bilinear form on A'_log extending res F dG.
PadicNumber double_index(const LogLaurent& F, const LogLaurent& G);

/// Three functions in A'_log together with chosen integrals I_{RdS} for the
/// pairs (G,H), (F,H), (F,G); the partners I_{SdR} = RS - I_{RdS} are forced.
/// Construction validates d I = R dS, which pins each choice to the
/// canonical one up to a constant.
struct TripleData {
    LogLaurent F, G, H;
    LogLaurent I_GdH, I_FdH, I_FdG;
    LogLaurent I_HdG, I_HdF, I_GdF;   // forced partners
    PadicNumber C_GdH, C_FdH;          // constant offsets from canonical data
};

/// Builds TripleData with canonical integrals (the unique ones with zero
/// constant term; log-log pairs get (alpha beta / 2) log^2 z) unless an
/// override is supplied.  Overrides must integrate the right form.
TripleData make_triple_data(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H,
                            const std::optional<LogLaurent>& I_GdH = std::nullopt,
                            const std::optional<LogLaurent>& I_FdH = std::nullopt,
                            const std::optional<LogLaurent>& I_FdG = std::nullopt);

/// The triple index: trilinear, symmetric in (F,G), reduces to the double
/// index when a slot is meromorphic, and obeys the change-of-constant rules.
/// Computed by the recipe on the canonical decomposition plus the constant
/// corrections; the value never depends on I_{FdG}.
PadicNumber triple_index(const TripleData& data);

/// Constant-term expression, valid when dF, dG, dH have at most simple
/// poles: c(F) c(G) res dH - res dF * c(I_GdH) - res dG * c(I_FdH).
PadicNumber triple_index_simple_pole(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H,
                                     const LogLaurent& I_FdH, const LogLaurent& I_GdH);

/// res dF for F in A'_log (equals the log z coefficient).
PadicNumber residue_of_differential(const LogLaurent& F);

/// Triple index computed with the canonical zero-constant-term data.
PadicNumber canonical_triple_index(const LogLaurent& F, const LogLaurent& G, const LogLaurent& H);

/// Validates d I = R dS and returns the constant offset of I from the
/// canonical integral of R dS.
PadicNumber offset_from_canonical(const LogLaurent& I, const LogLaurent& R, const LogLaurent& S);

}  // namespace reglab
