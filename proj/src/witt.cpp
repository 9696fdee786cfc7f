#include "wittlab/witt.hpp"

#include <numeric>

#include "wittlab/universal.hpp"

namespace wittlab {

WittVector::WittVector(TruncationSet truncation, RingPtr ring, std::vector<RingElement> coords)
    : truncation_(std::move(truncation)), ring_(std::move(ring)), coords_(std::move(coords))
{
    if (coords_.size() != truncation_.size())
        throw PreconditionError("Witt vector over " + truncation_.to_string() + " needs " +
                                std::to_string(truncation_.size()) + " coordinates, got " +
                                std::to_string(coords_.size()));
    for (const auto& c : coords_)
        if (!same_ring(c.ring(), ring_))
            throw DescriptorMismatch("Witt coordinate outside " + ring_->name());
}

WittVector WittVector::zero(const TruncationSet& s, const RingPtr& ring)
{
    return WittVector(s, ring, std::vector<RingElement>(s.size(), RingElement::zero(ring)));
}

WittVector WittVector::one(const TruncationSet& s, const RingPtr& ring)
{
    return witt::teichmuller(RingElement::one(ring), s);
}

const RingElement& WittVector::coord(std::uint32_t s) const
{
    auto i = truncation_.index_of(s);
    if (!i)
        throw PreconditionError("index " + std::to_string(s) + " not in " + truncation_.to_string());
    return coords_[*i];
}

bool WittVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const RingElement& c) { return c.is_zero(); });
}

bool WittVector::operator==(const WittVector& o) const
{
    return truncation_ == o.truncation_ && same_ring(ring_, o.ring_) && coords_ == o.coords_;
}

std::string WittVector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out += (i ? ", " : "") + coords_[i].to_string();
    return out + ") in W_" + truncation_.to_string() + "(" + ring_->name() + ")";
}

namespace witt {

namespace {

void check_compatible(const WittVector& x, const WittVector& y)
{
    if (x.truncation() != y.truncation())
        throw DescriptorMismatch("truncation mismatch: " + x.truncation().to_string() + " vs " +
                                 y.truncation().to_string());
    if (!same_ring(x.ring(), y.ring()))
        throw DescriptorMismatch("ring mismatch: " + x.ring()->name() + " vs " + y.ring()->name());
}

Route resolve(Route route, const TruncationSet& s)
{
    if (route == Route::Auto)
        return s.is_full() ? Route::Series : Route::Universal;
    if (route == Route::Series && !s.is_full())
        throw PreconditionError("series route needs a full truncation set, got " + s.to_string());
    return route;
}

/// f <- f * (1 - c t^n) mod t^{m+1}, in place.
void mul_one_minus(std::vector<RingElement>& f, const RingElement& c, std::size_t n)
{
    const std::size_t m = f.size() - 1;
    for (std::size_t k = m; k >= n; --k) {
        if (!f[k - n].is_zero())
            f[k] -= c * f[k - n];
        if (k == n)
            break;
    }
}

WittVector from_coeffs(const RingPtr& ring, std::vector<RingElement> f)
{
    const std::size_t m = f.size() - 1;
    return from_series(TruncatedSeries(ring, m, std::move(f)));
}

WittVector ghost_lift_binary(const WittVector& x, const WittVector& y, bool product)
{
    const auto& s = x.truncation();
    auto gx = ghost_components(s, lift(x).coords());
    auto gy = ghost_components(s, lift(y).coords());
    for (std::size_t i = 0; i < gx.size(); ++i)
        gx[i] = product ? gx[i] * gy[i] : gx[i] + gy[i];
    return map_ring(WittVector(s, x.ring()->torsion_free_cover(), ghost_inverse(s, gx)), x.ring());
}

} // namespace

std::vector<RingElement> ghost_components(const TruncationSet& s, const std::vector<RingElement>& coords)
{
    const auto& el = s.elements();
    std::vector<RingElement> out;
    out.reserve(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
        RingElement acc = RingElement::zero(coords[i].ring());
        for (std::size_t j = 0; j <= i; ++j)
            if (el[i] % el[j] == 0 && !coords[j].is_zero())
                acc += coords[j].pow(el[i] / el[j]).scaled(el[j]);
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<RingElement> ghost_inverse(const TruncationSet& s, const std::vector<RingElement>& ghost)
{
    const auto& el = s.elements();
    std::vector<RingElement> a;
    a.reserve(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
        RingElement acc = ghost[i];
        for (std::size_t j = 0; j < i; ++j)
            if (el[i] % el[j] == 0 && !a[j].is_zero())
                acc -= a[j].pow(el[i] / el[j]).scaled(el[j]);
        a.push_back(acc.divexact(el[i]));
    }
    return a;
}

GhostVector ghost(const WittVector& x)
{
    return GhostVector{x.truncation(), ghost_components(x.truncation(), x.coords())};
}

WittVector add(const WittVector& x, const WittVector& y, Route route)
{
    check_compatible(x, y);
    switch (resolve(route, x.truncation())) {
    case Route::Series: {
        const std::size_t m = x.truncation().max();
        return from_series(series_mul_truncated(to_series(x), to_series(y), m));
    }
    case Route::Universal:
        return universal::specialise(*universal::get(universal::Operation::Add, x.truncation()), x, &y);
    case Route::GhostLift:
        return ghost_lift_binary(x, y, false);
    case Route::Auto:
        break;
    }
    throw InvariantError("unresolved route");
}

WittVector negate(const WittVector& x, Route route)
{
    switch (resolve(route, x.truncation())) {
    case Route::Series:
        return from_series(to_series(x).inverse());
    case Route::Universal:
        return universal::specialise(*universal::get(universal::Operation::Negate, x.truncation()), x);
    case Route::GhostLift: {
        auto g = ghost_components(x.truncation(), lift(x).coords());
        for (auto& c : g)
            c = -c;
        return map_ring(WittVector(x.truncation(), x.ring()->torsion_free_cover(), ghost_inverse(x.truncation(), g)),
                        x.ring());
    }
    case Route::Auto:
        break;
    }
    throw InvariantError("unresolved route");
}

WittVector subtract(const WittVector& x, const WittVector& y, Route route)
{
    return add(x, negate(y, route), route);
}

WittVector multiply(const WittVector& x, const WittVector& y, Route route)
{
    check_compatible(x, y);
    switch (resolve(route, x.truncation())) {
    case Route::Series: {
        // Bilinear expansion over one-term vectors V_u[a]:
        // (1 - a t^u) * (1 - b t^v) = (1 - a^{v/w} b^{u/w} t^{uv/w})^w, w = gcd(u, v).
        const auto& ring = x.ring();
        const std::uint32_t m = x.truncation().max();
        std::vector<RingElement> f(m + 1, RingElement::zero(ring));
        f[0] = RingElement::one(ring);
        for (std::uint32_t u = 1; u <= m; ++u) {
            const auto& a = x.coords()[u - 1];
            if (a.is_zero())
                continue;
            for (std::uint32_t v = 1; v <= m; ++v) {
                const auto& b = y.coords()[v - 1];
                if (b.is_zero())
                    continue;
                const std::uint32_t w = std::gcd(u, v);
                const std::uint64_t l = std::uint64_t{u} * v / w;
                if (l > m)
                    continue;
                const RingElement c = a.pow(v / w) * b.pow(u / w);
                for (std::uint32_t k = 0; k < w; ++k)
                    mul_one_minus(f, c, l);
            }
        }
        return from_coeffs(ring, std::move(f));
    }
    case Route::Universal:
        return universal::specialise(*universal::get(universal::Operation::Multiply, x.truncation()), x, &y);
    case Route::GhostLift:
        return ghost_lift_binary(x, y, true);
    case Route::Auto:
        break;
    }
    throw InvariantError("unresolved route");
}

WittVector integer_multiple(const mpz_class& n, const WittVector& x)
{
    if (x.truncation().is_full())
        return from_series(to_series(x).pow(n));
    WittVector base = n < 0 ? negate(x) : x;
    mpz_class k = abs(n);
    WittVector result = WittVector::zero(x.truncation(), x.ring());
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            result = add(result, base);
        k >>= 1;
        if (k != 0)
            base = add(base, base);
    }
    return result;
}

WittVector power(const WittVector& x, std::uint64_t e)
{
    WittVector result = WittVector::one(x.truncation(), x.ring());
    WittVector base = x;
    while (e) {
        if (e & 1)
            result = multiply(result, base);
        e >>= 1;
        if (e)
            base = multiply(base, base);
    }
    return result;
}

WittVector teichmuller(const RingElement& a, const TruncationSet& s)
{
    std::vector<RingElement> c(s.size(), RingElement::zero(a.ring()));
    c[0] = a;
    return WittVector(s, a.ring(), std::move(c));
}

WittVector frobenius(std::uint32_t r, const WittVector& x, Route route)
{
    if (r == 0)
        throw PreconditionError("Frobenius index must be positive");
    const TruncationSet target = x.truncation().quotient(r);
    switch (resolve(route, x.truncation())) {
    case Route::Series: {
        // F_r(1 - a t^n) = (1 - a^{r/s} t^{n/s})^s, s = gcd(r, n).
        const auto& ring = x.ring();
        const std::uint32_t mt = target.max();
        std::vector<RingElement> f(mt + 1, RingElement::zero(ring));
        f[0] = RingElement::one(ring);
        for (std::uint32_t n = 1; n <= x.truncation().max(); ++n) {
            const auto& a = x.coords()[n - 1];
            if (a.is_zero())
                continue;
            const std::uint32_t s = std::gcd(r, n);
            if (n / s > mt)
                continue;
            const RingElement c = a.pow(r / s);
            for (std::uint32_t k = 0; k < s; ++k)
                mul_one_minus(f, c, n / s);
        }
        return from_coeffs(ring, std::move(f));
    }
    case Route::Universal:
        return universal::specialise(*universal::get(universal::Operation::Frobenius, x.truncation(), r), x);
    case Route::GhostLift: {
        const auto& src = x.truncation();
        auto g = ghost_components(src, lift(x).coords());
        std::vector<RingElement> gt;
        for (auto s : target.elements())
            gt.push_back(g[*src.index_of(r * s)]);
        return map_ring(WittVector(target, x.ring()->torsion_free_cover(), ghost_inverse(target, gt)), x.ring());
    }
    case Route::Auto:
        break;
    }
    throw InvariantError("unresolved route");
}

WittVector verschiebung(std::uint32_t r, const WittVector& x, const TruncationSet& target)
{
    if (r == 0)
        throw PreconditionError("Verschiebung index must be positive");
    if (target.quotient(r) != x.truncation())
        throw PreconditionError("Verschiebung V_" + std::to_string(r) + " from " + x.truncation().to_string() +
                                " cannot land in " + target.to_string());
    std::vector<RingElement> c;
    c.reserve(target.size());
    for (auto s : target.elements())
        c.push_back(s % r == 0 ? x.coord(s / r) : RingElement::zero(x.ring()));
    return WittVector(target, x.ring(), std::move(c));
}

WittVector verschiebung(std::uint32_t r, const WittVector& x)
{
    if (!x.truncation().is_full())
        throw PreconditionError("implicit Verschiebung target needs a full truncation set");
    if (r == 0)
        throw PreconditionError("Verschiebung index must be positive");
    const std::uint32_t m = x.truncation().max();
    return verschiebung(r, x, TruncationSet::full(r * m + r - 1));
}

WittVector restrict_to(const WittVector& x, const TruncationSet& target)
{
    const auto plan = restrict_plan(x.truncation(), target);
    std::vector<RingElement> c;
    c.reserve(plan.kept.size());
    for (auto i : plan.kept)
        c.push_back(x.coords()[i]);
    return WittVector(target, x.ring(), std::move(c));
}

TruncatedSeries to_series(const WittVector& x)
{
    if (!x.truncation().is_full())
        throw PreconditionError("series form needs a full truncation set, got " + x.truncation().to_string());
    return series_rebuild(x.ring(), x.coords());
}

WittVector from_series(const TruncatedSeries& f)
{
    if (f.order() == 0)
        throw PreconditionError("W_0 is not a supported truncation");
    const auto m = static_cast<std::uint32_t>(f.order());
    return WittVector(TruncationSet::full(m), f.ring(), series_factor(f, m));
}

WittVector map_ring(const WittVector& x, const RingPtr& target)
{
    std::vector<RingElement> c;
    c.reserve(x.coords().size());
    for (const auto& a : x.coords())
        c.push_back(a.reduce_to(target));
    return WittVector(x.truncation(), target, std::move(c));
}

WittVector lift(const WittVector& x)
{
    std::vector<RingElement> c;
    c.reserve(x.coords().size());
    for (const auto& a : x.coords())
        c.push_back(a.lift());
    return WittVector(x.truncation(), x.ring()->torsion_free_cover(), std::move(c));
}

} // namespace witt
} // namespace wittlab
