#include "wittlab/cycles.hpp"

#include <algorithm>
#include <numeric>

namespace wittlab {

namespace {

bool has_unit_constant(const UPoly& p) { return !p.is_zero() && p.coeff(0).is_one(); }

} // namespace

GammaChain::GammaChain(RingPtr ring, std::uint32_t modulus, std::vector<CycleTerm> terms)
    : ring_(std::move(ring)), modulus_(modulus)
{
    cycles::require_ufd(ring_);
    for (auto& t : terms) {
        if (!same_ring(t.generator.ring(), ring_))
            throw DescriptorMismatch("cycle generator over " + t.generator.ring()->name() + " in a chain over " +
                                     ring_->name());
        if (!has_unit_constant(t.generator))
            throw PreconditionError("cycle generator " + t.generator.to_string() +
                                    " must have constant term 1 (the cycle would meet t = 0)");
        if (t.multiplicity == 0 || t.generator.degree() == 0)
            continue;
        auto it = std::find_if(terms_.begin(), terms_.end(),
                               [&](const CycleTerm& e) { return e.generator == t.generator; });
        if (it == terms_.end())
            terms_.push_back(std::move(t));
        else if ((it->multiplicity += t.multiplicity) == 0)
            terms_.erase(it);
    }
}

GammaChain GammaChain::empty(const RingPtr& ring, std::uint32_t modulus) { return GammaChain(ring, modulus, {}); }

GammaChain GammaChain::one_term(const RingElement& a, std::uint32_t n, std::uint32_t modulus,
                                const mpz_class& multiplicity)
{
    if (n == 0)
        throw PreconditionError("Gamma_{a,n} needs n >= 1");
    return GammaChain(a.ring(), modulus, {CycleTerm{UPoly::one_minus(a, n), multiplicity}});
}

GammaChain GammaChain::operator+(const GammaChain& o) const
{
    if (!same_ring(ring_, o.ring_) || modulus_ != o.modulus_)
        throw DescriptorMismatch("cannot add chains over different rings or moduli");
    auto terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return GammaChain(ring_, modulus_, std::move(terms));
}

GammaChain GammaChain::operator-() const
{
    auto terms = terms_;
    for (auto& t : terms)
        t.multiplicity = -t.multiplicity;
    return GammaChain(ring_, modulus_, std::move(terms));
}

std::string GammaChain::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        out += (i ? " + " : "") + terms_[i].multiplicity.get_str() + "*Gamma(" + terms_[i].generator.to_string() + ")";
    return out;
}

GammaCycleClass::GammaCycleClass(RingPtr ring, std::uint32_t modulus, std::vector<RingElement> normal_form)
    : ring_(std::move(ring)), modulus_(modulus), normal_form_(std::move(normal_form))
{
    cycles::require_ufd(ring_);
    if (normal_form_.size() != modulus_)
        throw PreconditionError("normal form at modulus " + std::to_string(modulus_) + " needs " +
                                std::to_string(modulus_) + " coefficients, got " + std::to_string(normal_form_.size()));
    for (const auto& a : normal_form_)
        if (!same_ring(a.ring(), ring_))
            throw DescriptorMismatch("normal form coefficient outside " + ring_->name());
}

GammaCycleClass GammaCycleClass::zero(const RingPtr& ring, std::uint32_t modulus)
{
    return GammaCycleClass(ring, modulus, std::vector<RingElement>(modulus, RingElement::zero(ring)));
}

bool GammaCycleClass::is_zero() const
{
    return std::all_of(normal_form_.begin(), normal_form_.end(), [](const RingElement& a) { return a.is_zero(); });
}

GammaChain GammaCycleClass::representative() const
{
    std::vector<CycleTerm> terms;
    for (std::uint32_t n = 1; n <= modulus_; ++n)
        if (!normal_form_[n - 1].is_zero())
            terms.push_back(CycleTerm{UPoly::one_minus(normal_form_[n - 1], n), 1});
    return GammaChain(ring_, modulus_, std::move(terms));
}

UPoly GammaCycleClass::generator() const { return series_rebuild_poly(ring_, normal_form_); }

bool GammaCycleClass::operator==(const GammaCycleClass& o) const
{
    return same_ring(ring_, o.ring_) && modulus_ == o.modulus_ && normal_form_ == o.normal_form_;
}

std::string GammaCycleClass::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < normal_form_.size(); ++i)
        out += (i ? ", " : "") + normal_form_[i].to_string();
    return out + "] in TH^1(" + ring_->name() + ", 1; " + std::to_string(modulus_) + ")";
}

namespace cycles {

void require_ufd(const RingPtr& ring)
{
    if (!ring->is_ufd())
        throw PreconditionError("the Gamma-cycle model needs a UFD; " + ring->name() + " is not one");
}

GammaCycleClass class_of(const GammaChain& chain)
{
    const auto& ring = chain.ring();
    const std::uint32_t m = chain.modulus();
    if (m == 0)
        return GammaCycleClass(ring, 0, {});
    auto f = TruncatedSeries::one(ring, m);
    for (const auto& t : chain.terms())
        f = series_mul_truncated(f, TruncatedSeries::from_poly(t.generator, m).pow(t.multiplicity), m);
    return GammaCycleClass(ring, m, series_factor(f, m));
}

GammaCycleClass tau(const UPoly& p, std::uint32_t modulus)
{
    return class_of(GammaChain(p.ring(), modulus, {CycleTerm{p, 1}}));
}

GammaCycleClass tau(const WittVector& x)
{
    if (!x.truncation().is_full())
        throw PreconditionError("tau is defined on W_m, not on W_" + x.truncation().to_string());
    return GammaCycleClass(x.ring(), x.truncation().max(), x.coords());
}

WittVector to_witt(const GammaCycleClass& x)
{
    if (x.modulus() == 0)
        throw PreconditionError("W_0 is not a supported truncation");
    return WittVector(TruncationSet::full(x.modulus()), x.ring(), x.normal_form());
}

namespace {

void check_compatible(const GammaCycleClass& x, const GammaCycleClass& y)
{
    if (!same_ring(x.ring(), y.ring()))
        throw DescriptorMismatch("ring mismatch: " + x.ring()->name() + " vs " + y.ring()->name());
    if (x.modulus() != y.modulus())
        throw DescriptorMismatch("modulus mismatch: " + std::to_string(x.modulus()) + " vs " +
                                 std::to_string(y.modulus()));
}

} // namespace

GammaCycleClass add(const GammaCycleClass& x, const GammaCycleClass& y)
{
    check_compatible(x, y);
    return class_of(x.representative() + y.representative());
}

GammaCycleClass negate(const GammaCycleClass& x) { return class_of(-x.representative()); }

GammaCycleClass subtract(const GammaCycleClass& x, const GammaCycleClass& y)
{
    check_compatible(x, y);
    return class_of(x.representative() + -y.representative());
}

GammaChain wedge_one_term(const RingElement& a, std::uint32_t u, const RingElement& b, std::uint32_t v,
                          std::uint32_t modulus)
{
    const std::uint32_t w = std::gcd(u, v);
    const std::uint64_t l = std::uint64_t{u} * v / w;
    if (l > modulus)
        return GammaChain::empty(a.ring(), modulus);
    return GammaChain::one_term(a.pow(v / w) * b.pow(u / w), static_cast<std::uint32_t>(l), modulus, w);
}

GammaCycleClass wedge(const GammaCycleClass& x, const GammaCycleClass& y)
{
    check_compatible(x, y);
    const std::uint32_t m = x.modulus();
    std::vector<CycleTerm> terms;
    for (std::uint32_t u = 1; u <= m; ++u) {
        const auto& a = x.normal_form()[u - 1];
        if (a.is_zero())
            continue;
        for (std::uint32_t v = 1; v <= m; ++v) {
            const auto& b = y.normal_form()[v - 1];
            if (b.is_zero())
                continue;
            const auto part = wedge_one_term(a, u, b, v, m);
            terms.insert(terms.end(), part.terms().begin(), part.terms().end());
        }
    }
    return class_of(GammaChain(x.ring(), m, std::move(terms)));
}

std::uint32_t frobenius_target(std::uint32_t r, std::uint32_t modulus)
{
    if (r == 0)
        throw PreconditionError("Frobenius index must be positive");
    if ((modulus + 1) % r != 0 || (modulus + 1) / r < 2)
        throw PreconditionError("F_" + std::to_string(r) + " maps modulus r(m+1)-1 to m >= 1; modulus " +
                                std::to_string(modulus) + " is not of that form");
    return (modulus + 1) / r - 1;
}

std::uint32_t verschiebung_target(std::uint32_t r, std::uint32_t modulus)
{
    if (r == 0)
        throw PreconditionError("Verschiebung index must be positive");
    return r * modulus + r - 1;
}

GammaCycleClass frobenius(std::uint32_t r, const GammaCycleClass& x)
{
    const std::uint32_t m = frobenius_target(r, x.modulus());
    std::vector<CycleTerm> terms;
    for (std::uint32_t n = 1; n <= x.modulus(); ++n) {
        const auto& a = x.normal_form()[n - 1];
        if (a.is_zero())
            continue;
        const std::uint32_t s = std::gcd(r, n);
        terms.push_back(CycleTerm{UPoly::one_minus(a.pow(r / s), n / s), s});
    }
    return class_of(GammaChain(x.ring(), m, std::move(terms)));
}

GammaCycleClass verschiebung(std::uint32_t r, const GammaCycleClass& x)
{
    const std::uint32_t m = verschiebung_target(r, x.modulus());
    std::vector<CycleTerm> terms;
    for (std::uint32_t n = 1; n <= x.modulus(); ++n)
        if (!x.normal_form()[n - 1].is_zero())
            terms.push_back(CycleTerm{UPoly::one_minus(x.normal_form()[n - 1], r * n), 1});
    return class_of(GammaChain(x.ring(), m, std::move(terms)));
}

GammaCycleClass restrict_one(const GammaCycleClass& x)
{
    if (x.modulus() < 2)
        throw PreconditionError("restriction maps modulus m+1 to m >= 1; got modulus " + std::to_string(x.modulus()));
    return class_of(GammaChain(x.ring(), x.modulus() - 1, x.representative().terms()));
}

GammaCycleClass restrict_to(const GammaCycleClass& x, std::uint32_t modulus)
{
    if (modulus == 0 || modulus > x.modulus())
        throw PreconditionError("cannot restrict modulus " + std::to_string(x.modulus()) + " to " +
                                std::to_string(modulus));
    GammaCycleClass out = x;
    while (out.modulus() > modulus)
        out = restrict_one(out);
    return out;
}

GammaCycleClass scalar_action(const WittVector& w, const GammaCycleClass& x)
{
    if (!w.truncation().is_full() || w.truncation().max() < x.modulus())
        throw PreconditionError("scalar W_S needs S = {1..n} with n >= " + std::to_string(x.modulus()));
    std::vector<RingElement> coords;
    for (std::uint32_t n = 1; n <= x.modulus(); ++n)
        coords.push_back(w.coords()[n - 1].embed_into(x.ring()));
    return wedge(GammaCycleClass(x.ring(), x.modulus(), std::move(coords)), x);
}

bool TauReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

TauReport tau_compat_check(const WittVector& x, const WittVector& y, std::uint32_t r, witt::Route route)
{
    TauReport report;
    const auto tx = tau(x), ty = tau(y);
    const std::uint32_t m = tx.modulus();
    report.checks.push_back({"add", tau(witt::add(x, y, route)) == add(tx, ty)});
    report.checks.push_back({"mul", tau(witt::multiply(x, y, route)) == wedge(tx, ty)});
    report.checks.push_back({"neg", tau(witt::negate(x, route)) == negate(tx)});
    report.checks.push_back({"round_trip", to_witt(tx) == x && tau(witt::to_series(x).to_poly(), m) == tx &&
                                               tau(tx.generator(), m) == tx});
    report.checks.push_back({"verschiebung", tau(witt::verschiebung(r, x)) == verschiebung(r, tx)});
    if ((m + 1) / r >= 2) {
        const std::uint32_t src = r * ((m + 1) / r) - 1;
        const auto xs = witt::restrict_to(x, TruncationSet::full(src));
        report.checks.push_back({"frobenius", tau(witt::frobenius(r, xs, route)) == frobenius(r, tau(xs))});
    }
    if (m >= 2)
        report.checks.push_back(
            {"restriction", tau(witt::restrict_to(x, TruncationSet::full(m - 1))) == restrict_one(tx)});
    return report;
}

RingPtr adjoin_variables(const RingPtr& ring, const std::vector<std::string>& names)
{
    for (const auto& n : names)
        if (std::find(ring->variables().begin(), ring->variables().end(), n) != ring->variables().end())
            throw PreconditionError("ring " + ring->name() + " already has a variable named " + n);
    return Ring::polynomial(ring, names);
}

RingElement to_multivariate(const UPoly& p, const RingPtr& target, std::size_t index)
{
    RingElement out = RingElement::zero(target);
    const auto t = RingElement::variable(target, index);
    RingElement power = RingElement::one(target);
    for (long k = 0; k <= p.degree(); ++k) {
        out += p.coeff(static_cast<std::size_t>(k)).embed_into(target) * power;
        power *= t;
    }
    return out;
}

UPoly to_univariate(const RingElement& e, const RingPtr& ring, std::size_t index)
{
    const std::size_t base_vars = ring->num_variables();
    std::vector<std::vector<Term>> buckets;
    for (const auto& term : e.terms()) {
        for (std::size_t i = base_vars; i < term.exponents.size(); ++i)
            if (i != index && term.exponents[i] != 0)
                throw PreconditionError("polynomial involves more than one extra variable");
        const auto k = term.exponents[index];
        if (buckets.size() <= k)
            buckets.resize(k + 1);
        buckets[k].push_back(Term{Monomial(term.exponents.begin(), term.exponents.begin() + static_cast<long>(base_vars)),
                                  term.coeff});
    }
    std::vector<RingElement> coeffs;
    for (auto& b : buckets)
        coeffs.push_back(RingElement::from_terms(ring, std::move(b)));
    return UPoly(ring, std::move(coeffs));
}

namespace {

/// Images of the variables of `big` under y_{index} -> value, others fixed.
std::vector<RingElement> substitution(const RingPtr& big, std::size_t index, const RingElement& value)
{
    std::vector<RingElement> images;
    for (std::size_t i = 0; i < big->num_variables(); ++i)
        images.push_back(i == index ? value : RingElement::variable(big, i));
    return images;
}

/// The cycle V(p) in Spec R[t] for a polynomial with unit constant term,
/// with the sign fixed so the constant term is 1.
GammaChain divisor(const UPoly& p, std::uint32_t modulus)
{
    if (p.is_zero())
        throw InvariantError("face is not a divisor");
    if (p.degree() == 0)
        return GammaChain::empty(p.ring(), modulus);
    if (p.coeff(0) == -RingElement::one(p.ring()))
        return GammaChain(p.ring(), modulus, {CycleTerm{-p, 1}});
    return GammaChain(p.ring(), modulus, {CycleTerm{p, 1}});
}

} // namespace

BoundingCycle bounding_cycle(std::uint32_t modulus, std::uint32_t n, const UPoly& f)
{
    const auto& ring = f.ring();
    require_ufd(ring);
    if (n <= modulus)
        throw PreconditionError("modulus violation: y_1 = 1 - t^n f(t) has modulus m only for n >= m+1 (n = " +
                                std::to_string(n) + ", m = " + std::to_string(modulus) + ")");
    if (f.is_zero())
        throw PreconditionError("bounding cycle needs f != 0");
    const auto big = adjoin_variables(ring, {"t", "y1"});
    const std::size_t it = ring->num_variables(), iy = it + 1;
    const auto t = RingElement::variable(big, it), y1 = RingElement::variable(big, iy);
    const auto one = RingElement::one(big);
    const RingElement equation = y1 - (one - t.pow(n) * to_multivariate(f, big, it));

    // Face y_1 = 0: substitute into the equation.
    const auto at_zero = equation.substitute(big, substitution(big, iy, RingElement::zero(big)));
    const auto face0 = divisor(to_univariate(at_zero, ring, it), modulus);

    // Face y_1 = infinity: in [y_1 : w] the equation is A(t) y_1 + B(t) w and
    // w = 0 leaves A(t) = 0, A being the coefficient of the top power of y_1.
    std::uint32_t top = 0;
    for (const auto& term : equation.terms())
        top = std::max(top, term.exponents[iy]);
    std::vector<Term> lead;
    for (const auto& term : equation.terms())
        if (term.exponents[iy] == top) {
            auto e = term.exponents;
            e[iy] = 0;
            lead.push_back(Term{std::move(e), term.coeff});
        }
    const auto face_inf = divisor(to_univariate(RingElement::from_terms(big, std::move(lead)), ring, it), modulus);

    std::uint32_t order = n;
    for (long k = 0; k <= f.degree() && f.coeff(static_cast<std::size_t>(k)).is_zero(); ++k)
        ++order;
    return BoundingCycle{modulus, n, equation, face0, face_inf, order, n >= modulus + 1};
}

Mod1Witness mod1_collapse_witness(const GammaChain& x)
{
    if (x.modulus() != 0)
        throw PreconditionError("the mod-1 collapse applies at modulus 0 (D_1) only; got modulus " +
                                std::to_string(x.modulus()));
    const auto& ring = x.ring();
    const auto big = adjoin_variables(ring, {"t", "y"});
    const std::size_t it = ring->num_variables(), iy = it + 1;
    const auto t = RingElement::variable(big, it), y = RingElement::variable(big, iy);

    Mod1Witness w{big, {}, GammaChain::empty(ring, 0), GammaChain::empty(ring, 0)};
    for (const auto& term : x.terms()) {
        // p(t) -> p(t y)
        const auto p = to_multivariate(term.generator, big, it);
        const auto c = p.substitute(big, substitution(big, it, t * y));
        w.components.emplace_back(c, term.multiplicity);
        for (auto [value, face] : {std::pair{RingElement::one(big), &w.face_one},
                                   std::pair{RingElement::zero(big), &w.face_zero}}) {
            const auto restricted = to_univariate(c.substitute(big, substitution(big, iy, value)), ring, it);
            auto d = divisor(restricted, 0);
            std::vector<CycleTerm> scaled;
            for (const auto& dt : d.terms())
                scaled.push_back(CycleTerm{dt.generator, dt.multiplicity * term.multiplicity});
            *face = *face + GammaChain(ring, 0, std::move(scaled));
        }
    }
    return w;
}

} // namespace cycles
} // namespace wittlab
