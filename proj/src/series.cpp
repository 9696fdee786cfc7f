#include "wittlab/series.hpp"

namespace wittlab {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(RingPtr ring, std::vector<RingElement> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (!same_ring(c.ring(), ring_))
            throw DescriptorMismatch("polynomial coefficient outside " + ring_->name());
    trim();
}

UPoly UPoly::constant(const RingElement& c)
{
    return UPoly(c.ring(), {c});
}

UPoly UPoly::monomial(const RingElement& c, std::size_t n)
{
    std::vector<RingElement> v(n + 1, RingElement::zero(c.ring()));
    v[n] = c;
    return UPoly(c.ring(), std::move(v));
}

UPoly UPoly::one_minus(const RingElement& c, std::size_t n)
{
    if (n == 0)
        throw PreconditionError("1 - c*t^n needs n >= 1");
    return constant(RingElement::one(c.ring())) - monomial(c, n);
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

RingElement UPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(ring_);
}

UPoly UPoly::operator-() const
{
    return map(ring_, [](const RingElement& c) { return -c; });
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    if (!same_ring(a.ring_, b.ring_))
        throw DescriptorMismatch("polynomial ring mismatch");
    std::vector<RingElement> out;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(a.coeff(i) + b.coeff(i));
    return UPoly(a.ring_, std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    return a + (-b);
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (!same_ring(a.ring_, b.ring_))
        throw DescriptorMismatch("polynomial ring mismatch");
    if (a.is_zero() || b.is_zero())
        return UPoly(a.ring_);
    std::vector<RingElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement::zero(a.ring_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (!b.coeffs_[j].is_zero())
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(a.ring_, std::move(out));
}

UPoly UPoly::pow(std::uint64_t e) const
{
    UPoly result = constant(RingElement::one(ring_));
    UPoly base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

UPoly UPoly::truncated(std::size_t m) const
{
    std::vector<RingElement> out(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), m + 1));
    return UPoly(ring_, std::move(out));
}

RingElement UPoly::evaluate(const RingElement& at) const
{
    RingElement acc = RingElement::zero(ring_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

UPoly UPoly::pseudo_remainder(const UPoly& d) const
{
    if (d.is_zero())
        throw PreconditionError("pseudo-remainder by zero polynomial");
    UPoly r = *this;
    const RingElement lead = d.coeffs_.back();
    const auto dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        const auto shift = static_cast<std::size_t>(r.degree() - dd);
        const RingElement lr = r.coeffs_.back();
        // lead*r - lr * t^shift * d kills the leading term.
        UPoly scaled = r.map(ring_, [&](const RingElement& c) { return c * lead; });
        r = scaled - monomial(lr, shift) * d;
    }
    return r;
}

UPoly UPoly::divide_by_one_minus_t() const
{
    // this = (1 - t) q  <=>  q_k = sum_{i<=k} c_i, and the full sum vanishes.
    if (is_zero())
        return *this;
    std::vector<RingElement> q;
    RingElement acc = RingElement::zero(ring_);
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        acc += coeffs_[k];
        q.push_back(acc);
    }
    if (!(acc + coeffs_.back()).is_zero())
        throw PreconditionError("(1 - t) does not divide " + to_string());
    return UPoly(ring_, std::move(q));
}

bool UPoly::operator==(const UPoly& o) const
{
    return same_ring(ring_, o.ring_) && coeffs_ == o.coeffs_;
}

std::string UPoly::to_string(const std::string& var) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        std::string c = coeffs_[i].to_string();
        if (coeffs_[i].terms().size() > 1)
            c = "(" + c + ")";
        std::string term;
        if (i == 0)
            term = c;
        else {
            const std::string power = var + (i > 1 ? "^" + std::to_string(i) : "");
            term = c == "1" ? power : (c == "-1" ? "-" + power : c + "*" + power);
        }
        if (!out.empty()) {
            if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        } else {
            out = term;
        }
    }
    return out;
}

// ---------------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(RingPtr ring, std::size_t order, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), order_(order), coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (!same_ring(c.ring(), ring_))
            throw DescriptorMismatch("series coefficient outside " + ring_->name());
    coeffs_.resize(std::min(coeffs_.size(), order_ + 1), RingElement::zero(ring_));
    while (coeffs_.size() < order_ + 1)
        coeffs_.push_back(RingElement::zero(ring_));
    if (!coeffs_[0].is_one())
        throw PreconditionError("unit series must have constant term 1, got " + coeffs_[0].to_string());
}

TruncatedSeries TruncatedSeries::one(const RingPtr& ring, std::size_t order)
{
    return TruncatedSeries(ring, order, {RingElement::one(ring)});
}

TruncatedSeries TruncatedSeries::from_poly(const UPoly& p, std::size_t order)
{
    return TruncatedSeries(p.ring(), order, p.truncated(order).coeffs());
}

TruncatedSeries TruncatedSeries::inverse() const
{
    // g = 1/f: g_0 = 1, g_k = -sum_{i=1}^{k} f_i g_{k-i}.
    std::vector<RingElement> g;
    g.reserve(order_ + 1);
    g.push_back(RingElement::one(ring_));
    for (std::size_t k = 1; k <= order_; ++k) {
        RingElement acc = RingElement::zero(ring_);
        for (std::size_t i = 1; i <= k; ++i)
            if (!coeffs_[i].is_zero())
                acc += coeffs_[i] * g[k - i];
        g.push_back(-acc);
    }
    return TruncatedSeries(ring_, order_, std::move(g));
}

TruncatedSeries TruncatedSeries::pow(const mpz_class& e) const
{
    if (e < 0)
        return inverse().pow(-e);
    TruncatedSeries result = one(ring_, order_);
    TruncatedSeries base = *this;
    mpz_class k = e;
    while (k != 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            result = series_mul_truncated(result, base, order_);
        k >>= 1;
        if (k != 0)
            base = series_mul_truncated(base, base, order_);
    }
    return result;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t m) const
{
    return TruncatedSeries(ring_, m, coeffs_);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const
{
    return same_ring(ring_, o.ring_) && order_ == o.order_ && coeffs_ == o.coeffs_;
}

TruncatedSeries series_mul_truncated(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t m)
{
    if (!same_ring(f.ring(), g.ring()))
        throw DescriptorMismatch("series ring mismatch");
    if (f.order() < m || g.order() < m)
        throw PreconditionError("series order below requested truncation");
    std::vector<RingElement> out(m + 1, RingElement::zero(f.ring()));
    for (std::size_t i = 0; i <= m; ++i) {
        const auto& a = f.coeff(i);
        if (a.is_zero())
            continue;
        for (std::size_t j = 0; i + j <= m; ++j)
            if (!g.coeff(j).is_zero())
                out[i + j] += a * g.coeff(j);
    }
    return TruncatedSeries(f.ring(), m, std::move(out));
}

std::vector<RingElement> series_factor(const TruncatedSeries& f, std::size_t m)
{
    if (f.order() < m)
        throw PreconditionError("series order below requested factor count");
    std::vector<RingElement> g(f.coeffs().begin(), f.coeffs().begin() + static_cast<long>(m + 1));
    std::vector<RingElement> a;
    a.reserve(m);
    for (std::size_t n = 1; n <= m; ++n) {
        // g lies in 1 + t^n R[t]; peel off (1 - a_n t^n).
        RingElement an = -g[n];
        if (!an.is_zero()) {
            // g / (1 - a t^n): q_k = g_k + a q_{k-n}
            for (std::size_t k = n; k <= m; ++k)
                g[k] += an * g[k - n];
            if (!g[n].is_zero())
                throw InvariantError("series_factor: nonzero remainder at degree " + std::to_string(n));
        }
        a.push_back(std::move(an));
    }
    return a;
}

TruncatedSeries series_rebuild(const RingPtr& ring, const std::vector<RingElement>& a)
{
    const std::size_t m = a.size();
    std::vector<RingElement> f(m + 1, RingElement::zero(ring));
    f[0] = RingElement::one(ring);
    for (std::size_t n = 1; n <= m; ++n) {
        const auto& an = a[n - 1];
        if (an.is_zero())
            continue;
        for (std::size_t k = m; k >= n; --k)
            if (!f[k - n].is_zero())
                f[k] -= an * f[k - n];
    }
    return TruncatedSeries(ring, m, std::move(f));
}

UPoly series_rebuild_poly(const RingPtr& ring, const std::vector<RingElement>& a)
{
    UPoly p = UPoly::constant(RingElement::one(ring));
    for (std::size_t n = 1; n <= a.size(); ++n)
        if (!a[n - 1].is_zero())
            p = p * UPoly::one_minus(a[n - 1], n);
    return p;
}

} // namespace wittlab
