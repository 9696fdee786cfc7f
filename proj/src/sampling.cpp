#include "wittlab/sampling.hpp"

#include <limits>

namespace wittlab {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do
        v = engine_();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

mpz_class Sampler::below(const mpz_class& n)
{
    if (n <= 0)
        throw PreconditionError("below() needs a positive bound");
    if (n.fits_slong_p())
        return mpz_class(static_cast<long>(uniform(0, n.get_si() - 1)));
    // Rejection sampling on enough 64-bit words to cover n.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    mpz_class v;
    do {
        v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t word = engine_();
            mpz_class part;
            mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
            v = (v << 64) + part;
        }
        v >>= words * 64 - bits;
    } while (v >= n);
    return v;
}

RingElement Sampler::scalar(const RingPtr& ring)
{
    if (ring->torsion_free())
        return RingElement::from_integer(ring, uniform(-9, 9));
    return RingElement::from_integer(ring, below(ring->modulus()));
}

RingElement Sampler::element(const RingPtr& ring)
{
    if (!ring->is_polynomial())
        return scalar(ring);
    const auto scalars = ring->scalar_ring();
    const std::size_t nv = ring->num_variables();
    std::vector<Term> terms;
    const auto count = uniform(0, 3);
    for (std::int64_t k = 0; k < count; ++k) {
        Monomial e(nv, 0);
        auto degree = uniform(0, 2);
        for (std::int64_t d = 0; d < degree && nv > 0; ++d)
            ++e[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(nv) - 1))];
        terms.push_back(Term{std::move(e), scalar(scalars).constant_term()});
    }
    return RingElement::from_terms(ring, std::move(terms));
}

RingElement Sampler::nonzero_element(const RingPtr& ring)
{
    for (;;) {
        auto a = element(ring);
        if (!a.is_zero())
            return a;
    }
}

WittVector Sampler::witt(const TruncationSet& s, const RingPtr& ring)
{
    std::vector<RingElement> c;
    c.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        c.push_back(element(ring));
    return WittVector(s, ring, std::move(c));
}

WittVector Sampler::sparse_witt(const TruncationSet& s, const RingPtr& ring)
{
    std::vector<RingElement> c;
    c.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        c.push_back(coin() ? element(ring) : RingElement::zero(ring));
    return WittVector(s, ring, std::move(c));
}

UPoly Sampler::unit_poly(const RingPtr& ring, std::size_t degree)
{
    std::vector<RingElement> c{RingElement::one(ring)};
    for (std::size_t i = 1; i <= degree; ++i)
        c.push_back(element(ring));
    return UPoly(ring, std::move(c));
}

} // namespace wittlab
