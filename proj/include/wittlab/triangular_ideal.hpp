#pragma once

// Ideals (u(t), y_1 - g(t)) in R[t, y_1] with u in 1 + tR[t], used to check
// axiom (v) of a restricted Witt-complex on the cycles delta tau([a]).
// Equality of two such ideals over a domain: u == u' and u | g - g'.

#include <optional>
#include <string>

#include "wittlab/series.hpp"

namespace wittlab {

struct TriangularIdeal {
    UPoly u;
    UPoly g;

    const RingPtr& ring() const { return u.ring(); }
    std::string to_string() const;
};

/// Same ideal; decided by comparing t-generators and reducing g - g' by u.
bool same_ideal(const TriangularIdeal& a, const TriangularIdeal& b);

namespace ideals {

/// (u, 1 - t y_1) with u = 1 + t v rewritten as (u, y_1 + v): t is a unit
/// modulo u with inverse -v.
TriangularIdeal solve_for_y(const UPoly& u);

/// delta applied to the cycle Gamma_(u): restrict to G_m minus {1}, which
/// removes every factor (1 - t) of u, then pass to the ideal (u, 1 - t y_1).
/// Empty when nothing is left.
std::optional<TriangularIdeal> delta(const UPoly& u);

/// Pushforward along t -> t^r. The t-generator becomes the norm
/// prod (1 - alpha^r t) of u, obtained as F_r of the Witt vector of u;
/// g must not depend on t.
TriangularIdeal pushforward(std::uint32_t r, const TriangularIdeal& i);

/// Gamma_(p) ^ Spec R[t, y_1]/I: the external product over R (x) R followed
/// by pullback along the diagonal Spec R -> Spec R (x) R.
TriangularIdeal wedge_with_cycle(const UPoly& p, const TriangularIdeal& i);

} // namespace ideals

struct AxiomVReport {
    RingElement a;
    std::uint32_t r;
    /// F_r delta tau([a]); empty means the zero cycle.
    std::optional<TriangularIdeal> lhs;
    /// tau([a]^{r-1}) delta tau([a]).
    std::optional<TriangularIdeal> rhs;
    /// (1 - a^r t, y_1 - a), or empty when a is 0 or 1.
    std::optional<TriangularIdeal> expected;
    bool both_zero;
    bool passed;
};

AxiomVReport axiom_v_check(const RingElement& a, std::uint32_t r);

} // namespace wittlab
