#include <doctest.h>

#include <map>

#include "wittlab/ring.hpp"
#include "wittlab/sampling.hpp"
#include "wittlab/series.hpp"
#include "wittlab/truncation_set.hpp"

using namespace wittlab;

namespace {

RingElement Zc(long v) { return RingElement::from_integer(Ring::integers(), v); }

// Evaluation of a polynomial over Z at an integer point, written without the
// library's substitution so it can serve as an oracle.
mpz_class eval_at(const RingElement& p, const std::vector<long>& point)
{
    mpz_class acc = 0;
    for (const auto& t : p.terms()) {
        mpz_class m = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), mpz_class(point[i]).get_mpz_t(), t.exponents[i]);
            m *= pw;
        }
        acc += m;
    }
    return acc;
}

std::vector<RingElement> series_product_naive(const std::vector<RingElement>& a, std::size_t m,
                                              const RingPtr& ring)
{
    // Expands prod (1 - a_n t^n) by repeated full polynomial multiplication.
    std::vector<RingElement> f{RingElement::one(ring)};
    for (std::size_t n = 1; n <= a.size(); ++n) {
        std::vector<RingElement> g(f.size() + n, RingElement::zero(ring));
        for (std::size_t i = 0; i < f.size(); ++i) {
            g[i] += f[i];
            g[i + n] -= f[i] * a[n - 1];
        }
        f = std::move(g);
    }
    f.resize(m + 1, RingElement::zero(ring));
    return f;
}

} // namespace

TEST_CASE("ring descriptors parse and name canonically")
{
    for (const char* name : {"Z", "Z/6", "fp:7", "fp:5[x,y]", "Z[x]", "Z/4[t]"})
        CHECK(Ring::parse(name)->name() == name);
    CHECK(Ring::parse("F_7")->name() == "fp:7");
    CHECK(Ring::parse("zmod:9")->name() == "Z/9");
    CHECK_THROWS_AS(Ring::prime_field(6), PreconditionError);
    CHECK_THROWS_AS(Ring::parse("Q"), SchemaError);
    CHECK(Ring::integers()->torsion_free());
    CHECK(Ring::parse("Z[x,y]")->torsion_free());
    CHECK_FALSE(Ring::parse("fp:5[x]")->torsion_free());
    CHECK(Ring::parse("fp:5[x]")->is_ufd());
    CHECK_FALSE(Ring::parse("Z/6")->is_ufd());
    CHECK(Ring::polynomial(Ring::parse("Z[x]"), {"y"})->name() == "Z[x,y]");
}

TEST_CASE("modular arithmetic agrees with machine integers")
{
    auto f7 = Ring::prime_field(7);
    CHECK(RingElement::from_integer(f7, 3) + RingElement::from_integer(f7, 5) == RingElement::from_integer(f7, 1));

    Sampler rng(11);
    for (long n : {2L, 6L, 9L, 12L}) {
        auto r = Ring::integers_mod(n);
        for (int k = 0; k < 100; ++k) {
            long a = rng.uniform(-50, 50), b = rng.uniform(-50, 50);
            auto A = RingElement::from_integer(r, a), B = RingElement::from_integer(r, b);
            auto canon = [n](long v) { return ((v % n) + n) % n; };
            CHECK((A + B).constant_term() == canon(a + b));
            CHECK((A - B).constant_term() == canon(a - b));
            CHECK((A * B).constant_term() == canon(a * b));
            CHECK(A.pow(5).constant_term() == canon(canon(a) * canon(a) % n * canon(a) % n * canon(a) % n * canon(a)));
        }
    }
}

TEST_CASE("integer arithmetic")
{
    Sampler rng(3);
    for (int k = 0; k < 50; ++k) {
        auto x = Zc(rng.uniform(-1000, 1000));
        CHECK((x * Zc(0)).is_zero());
    }
    CHECK(Zc(-3).pow(3) == Zc(-27));
    CHECK(Zc(2).pow(100).constant_term() == mpz_class("1267650600228229401496703205376"));
    CHECK_THROWS_AS(Zc(1) + RingElement::one(Ring::prime_field(5)), DescriptorMismatch);
}

TEST_CASE("polynomial arithmetic")
{
    auto zx = Ring::parse("Z[x]");
    auto x = RingElement::variable(zx, 0);
    auto one = RingElement::one(zx);
    CHECK((one + x) * (one - x) == one - x * x);
    CHECK((one + x) * (one - x) == RingElement::from_terms(zx, {{{0}, 1}, {{2}, -1}}));

    auto zxy = Ring::parse("Z[x,y]");
    Sampler rng(5);
    for (int k = 0; k < 100; ++k) {
        auto p = rng.element(zxy), q = rng.element(zxy);
        for (const std::vector<long>& pt : {std::vector<long>{2, -3}, {0, 5}, {7, 1}}) {
            CHECK(eval_at(p * q, pt) == eval_at(p, pt) * eval_at(q, pt));
            CHECK(eval_at(p + q, pt) == eval_at(p, pt) + eval_at(q, pt));
            CHECK(eval_at(p.pow(3), pt) == eval_at(p, pt) * eval_at(p, pt) * eval_at(p, pt));
        }
    }

    auto f5x = Ring::parse("fp:5[x]");
    auto y = RingElement::variable(f5x, 0);
    auto s = RingElement::from_integer(f5x, 1) + y;
    CHECK(s.pow(5) == RingElement::from_integer(f5x, 1) + y.pow(5));
}

TEST_CASE("terms stay sorted without zero coefficients")
{
    auto r = Ring::parse("fp:3[x,y]");
    auto p = RingElement::from_terms(r, {{{1, 0}, 2}, {{0, 0}, 3}, {{0, 1}, 1}, {{1, 0}, 1}, {{2, 0}, 6}});
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0].exponents == Monomial{0, 1});
    auto q = RingElement::from_terms(r, {{{2, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{0, 0}, 1}});
    for (std::size_t i = 1; i < q.terms().size(); ++i)
        CHECK(grlex_less(q.terms()[i - 1].exponents, q.terms()[i].exponents));
}

TEST_CASE("ring laws on random triples")
{
    Sampler rng(17);
    for (const char* name : {"Z", "Z/6", "fp:7", "fp:5[x,y]", "Z[x]", "Z/4[t]"}) {
        auto r = Ring::parse(name);
        auto zero = RingElement::zero(r), one = RingElement::one(r);
        for (int k = 0; k < 60; ++k) {
            auto a = rng.element(r), b = rng.element(r), c = rng.element(r);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK((a + (-a)).is_zero());
        }
    }
}

TEST_CASE("reduction, lifting and embedding")
{
    auto z = Ring::integers();
    auto f5 = Ring::prime_field(5);
    CHECK(Zc(-3).reduce_to(f5) == RingElement::from_integer(f5, 2));
    CHECK(RingElement::from_integer(f5, 4).lift() == Zc(4));
    auto f5x = Ring::parse("fp:5[x]");
    CHECK(RingElement::from_integer(f5, 3).embed_into(f5x) == RingElement::from_integer(f5x, 3));
    CHECK(Ring::parse("fp:5[x]")->torsion_free_cover()->name() == "Z[x]");
    CHECK(Ring::parse("Z/6")->torsion_free_cover()->name() == "Z");
    CHECK_THROWS(RingElement::from_integer(Ring::integers_mod(6), 1).reduce_to(Ring::integers_mod(4)));
    CHECK(z->name() == "Z");
}

TEST_CASE("series multiplication")
{
    auto z = Ring::integers();
    auto f = TruncatedSeries::from_poly(UPoly::one_minus(Zc(1), 1), 2);
    auto sq = series_mul_truncated(f, f, 2);
    CHECK(sq.coeffs() == std::vector<RingElement>{Zc(1), Zc(-2), Zc(1)});
    CHECK(series_mul_truncated(f, TruncatedSeries::one(z, 2), 2) == f);
    for (std::size_t m = 1; m <= 8; ++m) {
        std::vector<RingElement> geo(m + 1, Zc(1));
        auto g = TruncatedSeries(z, m, geo);
        auto p = series_mul_truncated(TruncatedSeries::from_poly(UPoly::one_minus(Zc(1), 1), m), g, m);
        CHECK(p == TruncatedSeries::one(z, m));
        CHECK(g.inverse() == TruncatedSeries::from_poly(UPoly::one_minus(Zc(1), 1), m));
    }
    CHECK_THROWS_AS(TruncatedSeries(z, 2, {Zc(2), Zc(1)}), PreconditionError);
}

TEST_CASE("series factorization")
{
    auto z = Ring::integers();
    auto f = TruncatedSeries(z, 2, {Zc(1), Zc(-2), Zc(1)});
    CHECK(series_factor(f, 2) == std::vector<RingElement>{Zc(2), Zc(-1)});
    for (std::size_t n = 1; n <= 5; ++n) {
        auto g = TruncatedSeries::from_poly(UPoly::one_minus(Zc(7), n), 6);
        auto a = series_factor(g, 6);
        for (std::size_t k = 1; k <= 6; ++k)
            CHECK(a[k - 1] == (k == n ? Zc(7) : Zc(0)));
    }

    Sampler rng(23);
    for (const char* name : {"fp:5", "Z", "fp:5[x]", "Z/6"}) {
        auto r = Ring::parse(name);
        for (int k = 0; k < 200; ++k) {
            const auto m = static_cast<std::size_t>(rng.uniform(1, 10));
            std::vector<RingElement> c{RingElement::one(r)};
            for (std::size_t i = 1; i <= m; ++i)
                c.push_back(rng.element(r));
            TruncatedSeries s(r, m, c);
            auto a = series_factor(s, m);
            CHECK(series_product_naive(a, m, r) == s.coeffs());
            CHECK(series_rebuild(r, a) == s);
            CHECK(series_factor(series_rebuild(r, a), m) == a);
        }
    }
}

TEST_CASE("univariate polynomial helpers")
{
    auto z = Ring::integers();
    UPoly p(z, {Zc(1), Zc(-1)});
    UPoly q(z, {Zc(2), Zc(3), Zc(1)});
    CHECK((p * q).divide_by_one_minus_t() == q);
    CHECK_THROWS((q).divide_by_one_minus_t());
    CHECK((p * q).pseudo_remainder(q).is_zero());
    CHECK(q.evaluate(Zc(2)) == Zc(12));
    CHECK(p.pow(3).degree() == 3);
}

TEST_CASE("truncation sets")
{
    CHECK(TruncationSet::full(1).elements() == std::vector<std::uint32_t>{1});
    CHECK(TruncationSet::full(6).elements() == std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(TruncationSet::full(0), PreconditionError);
    for (std::uint32_t m = 1; m <= 100; ++m) {
        auto s = TruncationSet::full(m);
        for (auto e : s.elements())
            for (std::uint32_t d = 1; d <= e; ++d)
                if (e % d == 0)
                    CHECK(s.contains(d));
    }
    CHECK_THROWS_AS(TruncationSet({1, 4}), PreconditionError);
    CHECK_THROWS_AS(TruncationSet({}), PreconditionError);

    for (std::uint32_t m = 1; m <= 6; ++m)
        CHECK(TruncationSet::full(2 * m + 1).quotient(2) == TruncationSet::full(m));
    TruncationSet s({1, 2, 3, 4, 6, 12});
    CHECK(s.quotient(1) == s);
    CHECK(s.quotient(3).elements() == std::vector<std::uint32_t>{1, 2, 4});
    CHECK_THROWS_AS(s.quotient(5), PreconditionError);
    CHECK_FALSE(s.try_quotient(5).has_value());

    auto plan = restrict_plan(TruncationSet::full(4), TruncationSet::full(3));
    CHECK(plan.dropped == std::vector<std::uint32_t>{4});
    CHECK(restrict_plan(s, s).is_identity());
    CHECK(restrict_plan(TruncationSet({1, 2, 4}), TruncationSet({1, 2})).dropped == std::vector<std::uint32_t>{4});
    CHECK_THROWS_AS(restrict_plan(TruncationSet({1, 2}), TruncationSet({1, 3})), PreconditionError);

    Sampler rng(29);
    for (int k = 0; k < 200; ++k) {
        // Random divisor-closed set: divisor closure of a few random generators.
        std::vector<std::uint32_t> el;
        for (int g = 0; g < 3; ++g) {
            auto n = static_cast<std::uint32_t>(rng.uniform(1, 60));
            for (std::uint32_t d = 1; d <= n; ++d)
                if (n % d == 0)
                    el.push_back(d);
        }
        TruncationSet t(el);
        auto r = static_cast<std::uint32_t>(rng.uniform(1, 12));
        auto q = static_cast<std::uint32_t>(rng.uniform(1, 12));
        auto lhs = t.try_quotient(r);
        auto direct = t.try_quotient(r * q);
        if (lhs) {
            auto twice = lhs->try_quotient(q);
            CHECK(twice.has_value() == direct.has_value());
            if (twice && direct)
                CHECK(*twice == *direct);
        } else {
            CHECK_FALSE(direct.has_value());
        }
    }
}
