#pragma once

// The Gamma-cycle model of TH^1(R, 1; m) for a UFD R.
//
// A cycle Gamma_(p) is the divisor of p(t) in Spec R[t], with p(0) = 1 so that
// it misses {t = 0}. Formal sums are kept as lists of (generator, multiplicity).
// The class of a sum in TH^1(R, 1; m) is recorded by its normal form: the
// unique (a_1..a_m) with prod p_i^{n_i} == prod (1 - a_n t^n) mod t^{m+1}.
// Moduli are on the TH side throughout: TH^q(X, n; m) = CH^q(X[1]|D_{m+1}, n-1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/series.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

struct CycleTerm {
    UPoly generator;
    mpz_class multiplicity;
};

/// Formal Z-linear combination of Gamma_(p) at a fixed modulus.
class GammaChain {
public:
    /// Throws PreconditionError unless the ring is a UFD and every generator
    /// has constant term 1. Equal generators are merged.
    GammaChain(RingPtr ring, std::uint32_t modulus, std::vector<CycleTerm> terms);

    static GammaChain empty(const RingPtr& ring, std::uint32_t modulus);
    /// Gamma_{a,n} = Gamma_(1 - a t^n).
    static GammaChain one_term(const RingElement& a, std::uint32_t n, std::uint32_t modulus,
                               const mpz_class& multiplicity = 1);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t modulus() const { return modulus_; }
    const std::vector<CycleTerm>& terms() const { return terms_; }
    bool is_empty() const { return terms_.empty(); }

    GammaChain operator+(const GammaChain& o) const;
    GammaChain operator-() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::uint32_t modulus_;
    std::vector<CycleTerm> terms_;
};

/// Element of TH^1(R, 1; m) in normal form.
class GammaCycleClass {
public:
    GammaCycleClass(RingPtr ring, std::uint32_t modulus, std::vector<RingElement> normal_form);

    static GammaCycleClass zero(const RingPtr& ring, std::uint32_t modulus);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t modulus() const { return modulus_; }
    /// a_1..a_m
    const std::vector<RingElement>& normal_form() const { return normal_form_; }
    bool is_zero() const;

    /// The one-term cycles Gamma_{a_n, n} whose sum has this class.
    GammaChain representative() const;
    /// prod (1 - a_n t^n), the generator of the single cycle representing the class.
    UPoly generator() const;

    bool operator==(const GammaCycleClass& o) const;
    bool operator!=(const GammaCycleClass& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::uint32_t modulus_;
    std::vector<RingElement> normal_form_;
};

namespace cycles {

void require_ufd(const RingPtr& ring);

/// Class of a formal sum: multiply out generators mod t^{m+1} and factor.
GammaCycleClass class_of(const GammaChain& chain);

/// tau(p) for p in 1 + tR[t]; factors with n > m are dropped.
GammaCycleClass tau(const UPoly& p, std::uint32_t modulus);
/// tau_R on W_m(R): the class of prod (1 - a_n t^n).
GammaCycleClass tau(const WittVector& x);
/// Inverse of tau on normal forms.
WittVector to_witt(const GammaCycleClass& x);

GammaCycleClass add(const GammaCycleClass& x, const GammaCycleClass& y);
GammaCycleClass negate(const GammaCycleClass& x);
GammaCycleClass subtract(const GammaCycleClass& x, const GammaCycleClass& y);

/// Gamma_{a,u} ^ Gamma_{b,v} as a chain: gcd(u,v) * Gamma_{a^{v/w} b^{u/w}, uv/w}.
GammaChain wedge_one_term(const RingElement& a, std::uint32_t u, const RingElement& b, std::uint32_t v,
                          std::uint32_t modulus);
/// Bilinear extension of the pairwise rule.
GammaCycleClass wedge(const GammaCycleClass& x, const GammaCycleClass& y);

/// Target modulus of F_r from modulus M: m with M = r(m+1) - 1; throws otherwise.
std::uint32_t frobenius_target(std::uint32_t r, std::uint32_t modulus);
/// rm + r - 1
std::uint32_t verschiebung_target(std::uint32_t r, std::uint32_t modulus);

/// F_r(Gamma_{a,n}) = s * Gamma_{a^{r/s}, n/s}, s = gcd(r, n).
GammaCycleClass frobenius(std::uint32_t r, const GammaCycleClass& x);
/// V_r(Gamma_{a,n}) = Gamma_{a, rn}, modulus m -> rm + r - 1.
GammaCycleClass verschiebung(std::uint32_t r, const GammaCycleClass& x);
/// Restriction from modulus m + 1 to m.
GammaCycleClass restrict_one(const GammaCycleClass& x);
/// Iterated restriction down to `modulus`.
GammaCycleClass restrict_to(const GammaCycleClass& x, std::uint32_t modulus);

/// Action of W_m(k) on classes over R, k the coefficient ring of R: embed the
/// coordinates of w into R and wedge.
GammaCycleClass scalar_action(const WittVector& w, const GammaCycleClass& x);

struct CheckResult {
    std::string name;
    bool passed;
};

struct TauReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Verifies that tau intertwines the Witt operations (evaluated along `route`)
/// with the cycle operations on x, y in W_m(R). Frobenius and Verschiebung
/// use r, with F_r checked on the largest modulus of the form r(k+1)-1 <= m.
TauReport tau_compat_check(const WittVector& x, const WittVector& y, std::uint32_t r,
                           witt::Route route = witt::Route::GhostLift);

/// The 2-cycle Gamma in Spec R[t] x box cut out by y_1 = 1 - t^n f(t), with its faces.
struct BoundingCycle {
    std::uint32_t modulus;
    std::uint32_t n;
    /// Defining polynomial y_1 - (1 - t^n f(t)) in R[t, y_1].
    RingElement equation;
    /// Face y_1 = 0.
    GammaChain face_zero;
    /// Face y_1 = infinity.
    GammaChain face_infinity;
    /// Order of vanishing of 1 - y_1 along t = 0 on Gamma; at least n.
    std::uint32_t vanishing_order;
    /// n >= m + 1, which gives the modulus condition for this family.
    bool modulus_certificate;
};

BoundingCycle bounding_cycle(std::uint32_t modulus, std::uint32_t n, const UPoly& f);

/// Witness that a chain at modulus 0 bounds: C = sum n_i V(p_i(t y)) in the
/// (A^1, {0, 1}) model of the box. Its face y = 1 is the chain itself and its
/// face y = 0 is empty because p_i(0) = 1.
struct Mod1Witness {
    /// Ring R[t, y] holding the components.
    RingPtr ring;
    std::vector<std::pair<RingElement, mpz_class>> components;
    GammaChain face_one;
    GammaChain face_zero;
};

Mod1Witness mod1_collapse_witness(const GammaChain& x);

/// R[t] or R[t, y_1] with the new variables appended after those of R.
RingPtr adjoin_variables(const RingPtr& ring, const std::vector<std::string>& names);
/// p(t) as an element of `target`, t being variable `index`.
RingElement to_multivariate(const UPoly& p, const RingPtr& target, std::size_t index);
/// Inverse of to_multivariate for elements that involve only variable `index`
/// and the variables of `ring`.
UPoly to_univariate(const RingElement& e, const RingPtr& ring, std::size_t index);

} // namespace cycles
} // namespace wittlab
