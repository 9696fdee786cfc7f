#include "wittlab/triangular_ideal.hpp"

#include "wittlab/cycles.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {

std::string TriangularIdeal::to_string() const
{
    return "(" + u.to_string() + ", y1 - (" + (g.is_zero() ? std::string("0") : g.to_string()) + "))";
}

bool same_ideal(const TriangularIdeal& a, const TriangularIdeal& b)
{
    if (!same_ring(a.ring(), b.ring()))
        throw DescriptorMismatch("ideals over different rings");
    if (!a.ring()->is_domain())
        throw PreconditionError("ideal comparison by pseudo-division needs a domain");
    // Both t-generators have constant term 1, so each generates its
    // elimination ideal uniquely.
    return a.u == b.u && (a.g - b.g).pseudo_remainder(a.u).is_zero();
}

namespace ideals {

namespace {

/// Witt vector of a unit polynomial of degree d in W_{order}.
WittVector as_witt(const UPoly& p, std::size_t order)
{
    return witt::from_series(TruncatedSeries::from_poly(p, order));
}

UPoly norm_series_poly(const WittVector& x) { return witt::to_series(x).to_poly(); }

} // namespace

TriangularIdeal solve_for_y(const UPoly& u)
{
    if (u.is_zero() || !u.coeff(0).is_one())
        throw PreconditionError("t-generator must lie in 1 + tR[t]");
    std::vector<RingElement> v;
    for (long k = 1; k <= u.degree(); ++k)
        v.push_back(-u.coeff(static_cast<std::size_t>(k)));
    return TriangularIdeal{u, UPoly(u.ring(), std::move(v))};
}

std::optional<TriangularIdeal> delta(const UPoly& u)
{
    UPoly rest = u;
    const auto one = RingElement::one(u.ring());
    while (rest.degree() > 0 && rest.evaluate(one).is_zero())
        rest = rest.divide_by_one_minus_t();
    if (rest.degree() <= 0)
        return std::nullopt;
    return solve_for_y(rest);
}

TriangularIdeal pushforward(std::uint32_t r, const TriangularIdeal& i)
{
    if (i.g.degree() > 0)
        throw PreconditionError("pushforward along t -> t^r needs y_1 - g with g constant");
    const auto d = static_cast<std::size_t>(i.u.degree());
    if (d == 0)
        throw PreconditionError("pushforward of the unit ideal");
    const auto f = witt::frobenius(r, as_witt(i.u, r * d), witt::Route::Series);
    return TriangularIdeal{norm_series_poly(f), i.g};
}

TriangularIdeal wedge_with_cycle(const UPoly& p, const TriangularIdeal& i)
{
    const auto& ring = i.ring();
    if (!same_ring(p.ring(), ring))
        throw DescriptorMismatch("cycle and ideal over different rings");

    // R (x) R over the prime ring: the variables doubled.
    RingPtr tensor = ring;
    std::vector<RingElement> first, second, diagonal;
    if (ring->num_variables() > 0) {
        std::vector<std::string> names = ring->variables();
        for (const auto& v : ring->variables())
            names.push_back(v + "'");
        tensor = Ring::polynomial(ring->scalar_ring(), names);
        const std::size_t n = ring->num_variables();
        for (std::size_t k = 0; k < n; ++k) {
            first.push_back(RingElement::variable(tensor, k));
            second.push_back(RingElement::variable(tensor, n + k));
        }
        for (std::size_t k = 0; k < 2 * n; ++k)
            diagonal.push_back(RingElement::variable(ring, k % n));
    }
    auto iota = [&](const std::vector<RingElement>& images) {
        return [&, images](const RingElement& c) { return images.empty() ? c : c.substitute(tensor, images); };
    };
    auto delta_star = [&](const RingElement& c) { return diagonal.empty() ? c : c.substitute(ring, diagonal); };

    const UPoly p1 = p.map(tensor, iota(first));
    const UPoly u2 = i.u.map(tensor, iota(second));
    const UPoly g2 = i.g.map(tensor, iota(second));

    // The t-generator of the external product is the Witt product of the two
    // generators, which has degree deg p * deg u.
    const auto order = static_cast<std::size_t>(p.degree() * i.u.degree());
    UPoly product = UPoly::constant(RingElement::one(tensor));
    if (order > 0) {
        product = norm_series_poly(witt::multiply(as_witt(p1, order), as_witt(u2, order), witt::Route::Series));
    }
    return TriangularIdeal{product.map(ring, delta_star), g2.map(ring, delta_star)};
}

} // namespace ideals

AxiomVReport axiom_v_check(const RingElement& a, std::uint32_t r)
{
    if (r == 0)
        throw PreconditionError("axiom (v) needs r >= 1");
    const auto& ring = a.ring();
    cycles::require_ufd(ring);
    const auto s1 = TruncationSet::full(1);
    const auto teich = witt::teichmuller(a, s1);
    const UPoly gamma_a = witt::to_series(teich).to_poly();

    AxiomVReport rep{a, r, std::nullopt, std::nullopt, std::nullopt, false, false};
    const auto d = ideals::delta(gamma_a);
    if (d) {
        rep.lhs = ideals::pushforward(r, *d);
        const UPoly gamma_pow = witt::to_series(witt::power(teich, r - 1)).to_poly();
        rep.rhs = ideals::wedge_with_cycle(gamma_pow, *d);
    }
    if (!a.is_zero() && !a.is_one())
        rep.expected = TriangularIdeal{UPoly::one_minus(a.pow(r), 1), UPoly::constant(a)};

    rep.both_zero = !rep.lhs && !rep.rhs;
    if (rep.both_zero)
        rep.passed = !rep.expected;
    else
        rep.passed = rep.lhs && rep.rhs && rep.expected && same_ideal(*rep.lhs, *rep.rhs) &&
                     same_ideal(*rep.lhs, *rep.expected);
    return rep;
}

} // namespace wittlab
