#pragma once

// Big Witt vectors W_S(R) over a finite truncation set S.
//
// Coordinates follow the convention in which the Witt vector a = (a_s)
// corresponds to the unit power series prod_s (1 - a_s t^s), so that Witt
// addition is multiplication of series and the Teichmueller lift [a] is 1 - a t.
// The ghost map is w(a)_s = sum_{d | s} d * a_d^{s/d}.

#include <cstdint>
#include <vector>

#include "wittlab/ring.hpp"
#include "wittlab/series.hpp"
#include "wittlab/truncation_set.hpp"

namespace wittlab {

class WittVector {
public:
    /// One coordinate per element of `truncation`, in increasing order.
    WittVector(TruncationSet truncation, RingPtr ring, std::vector<RingElement> coords);

    static WittVector zero(const TruncationSet& s, const RingPtr& ring);
    static WittVector one(const TruncationSet& s, const RingPtr& ring);

    const TruncationSet& truncation() const { return truncation_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<RingElement>& coords() const { return coords_; }
    /// Coordinate a_s; throws if s is not in the truncation set.
    const RingElement& coord(std::uint32_t s) const;

    bool is_zero() const;
    bool operator==(const WittVector& o) const;
    bool operator!=(const WittVector& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    TruncationSet truncation_;
    RingPtr ring_;
    std::vector<RingElement> coords_;
};

struct GhostVector {
    TruncationSet truncation;
    std::vector<RingElement> components;

    bool operator==(const GhostVector& o) const
    {
        return truncation == o.truncation && components == o.components;
    }
};

namespace witt {

/// How an operation is evaluated.
///  - Series: unit power series arithmetic; needs S = {1..m}.
///  - Universal: cached integral universal polynomials, specialised; any S.
///  - GhostLift: lift to the torsion-free cover, work in ghost coordinates,
///    invert the ghost map there and reduce back. Independent of the others.
///  - Auto: Series when S is full, Universal otherwise.
enum class Route { Auto, Series, Universal, GhostLift };

GhostVector ghost(const WittVector& x);

/// Ghost components of coordinates indexed by `s`.
std::vector<RingElement> ghost_components(const TruncationSet& s, const std::vector<RingElement>& coords);
/// Inverse of the ghost map over a torsion-free ring (exact division).
std::vector<RingElement> ghost_inverse(const TruncationSet& s, const std::vector<RingElement>& ghost);

WittVector add(const WittVector& x, const WittVector& y, Route route = Route::Auto);
WittVector negate(const WittVector& x, Route route = Route::Auto);
WittVector subtract(const WittVector& x, const WittVector& y, Route route = Route::Auto);
WittVector multiply(const WittVector& x, const WittVector& y, Route route = Route::Auto);
/// n * x in the additive group.
WittVector integer_multiple(const mpz_class& n, const WittVector& x);
WittVector power(const WittVector& x, std::uint64_t e);

WittVector teichmuller(const RingElement& a, const TruncationSet& s);

/// F_r : W_S -> W_{S/r}.
WittVector frobenius(std::uint32_t r, const WittVector& x, Route route = Route::Auto);
/// V_r : W_{S/r} -> W_S. Requires x.truncation() == target.quotient(r).
WittVector verschiebung(std::uint32_t r, const WittVector& x, const TruncationSet& target);
/// V_r : W_m -> W_{rm+r-1} for a full truncation set.
WittVector verschiebung(std::uint32_t r, const WittVector& x);
/// Restriction W_S -> W_T, T a subset of S.
WittVector restrict_to(const WittVector& x, const TruncationSet& target);

/// prod (1 - a_n t^n) mod t^{m+1}; needs S = {1..m}.
TruncatedSeries to_series(const WittVector& x);
WittVector from_series(const TruncatedSeries& f);

/// Applies the canonical ring map coordinatewise (e.g. Z -> F_p).
WittVector map_ring(const WittVector& x, const RingPtr& target);
/// Same coordinates viewed over the torsion-free cover.
WittVector lift(const WittVector& x);

} // namespace witt
} // namespace wittlab
