#pragma once

#include "tametilt/registry.hpp"
#include "tametilt/types.hpp"

#include <set>
#include <vector>

namespace tametilt {

// Reduce a 1-based mouth index into [1, rank].
int norm_index(int index, int rank);

// Validate and normalize against a registry. Both throw on unknown tubes,
// bad lengths, or (for check_point) points placed in no tube.
QuasiSimpleRef check_qs(const TubeRegistry& reg, QuasiSimpleRef s);
RegPoint check_point(const TubeRegistry& reg, RegPoint p);

// tau shifts the mouth index by -1 around the tube and preserves regular
// length; tau_inv shifts by +1. The generic point has no translate here.
QuasiSimpleRef tau_qs(const TubeRegistry& reg, const QuasiSimpleRef& s);
QuasiSimpleRef tau_inv_qs(const TubeRegistry& reg, const QuasiSimpleRef& s);
RegPoint tau(const TubeRegistry& reg, const RegPoint& p);
RegPoint tau_inv(const TubeRegistry& reg, const RegPoint& p);

// Regular composition series of a finite point, socle first, top last.
QuasiSimpleRef socle(const TubeRegistry& reg, const RegPoint& p);
QuasiSimpleRef top(const TubeRegistry& reg, const RegPoint& p);
std::vector<QuasiSimpleRef> comp_factors(const TubeRegistry& reg, const RegPoint& p);

// The triangular region under a finite point of length m < rank.
std::set<RegPoint> wing(const TubeRegistry& reg, const RegPoint& p);
bool in_wing(const TubeRegistry& reg, const RegPoint& x, const RegPoint& vertex);

// Hom/Ext between points. Supported Hom pairs: (Finite,Finite),
// (Finite,Pruefer), (Pruefer,Finite) and (Adic,Finite); Ext pairs are the
// ones reducible via ext(x,y) = hom(y, tau x) plus (Pruefer,Adic).
HomResult hom_dim(const TubeRegistry& reg, const RegPoint& x, const RegPoint& y);
HomResult ext_dim(const TubeRegistry& reg, const RegPoint& x, const RegPoint& y);

} // namespace tametilt
