#include "wittlab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace wittlab {

namespace {

std::uint64_t degree_of(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

mpz_class parse_positive(const std::string& text, const std::string& whole)
{
    mpz_class value;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || value.set_str(text, 10) != 0)
        throw SchemaError("bad ring description '" + whole + "'");
    return value;
}

} // namespace

mpz_class gcd(const mpz_class& a, const mpz_class& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_probable_prime(const mpz_class& n)
{
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// ---------------------------------------------------------------- Ring

RingPtr Ring::integers()
{
    static const RingPtr z = [] {
        std::shared_ptr<Ring> r(new Ring());
        return r;
    }();
    return z;
}

RingPtr Ring::integers_mod(const mpz_class& n)
{
    if (n < 2)
        throw PreconditionError("Z/n requires n >= 2");
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = r->scalar_kind_ = Kind::IntegersModN;
    r->modulus_ = n;
    r->domain_ = is_probable_prime(n);
    return r;
}

RingPtr Ring::prime_field(const mpz_class& p)
{
    if (!is_probable_prime(p))
        throw PreconditionError("F_p requires p prime, got " + p.get_str());
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = r->scalar_kind_ = Kind::PrimeField;
    r->modulus_ = p;
    r->domain_ = true;
    return r;
}

RingPtr Ring::polynomial(const RingPtr& base, std::vector<std::string> variables)
{
    if (variables.empty())
        throw PreconditionError("polynomial ring needs at least one variable");
    std::vector<std::string> all = base->variables_;
    all.insert(all.end(), variables.begin(), variables.end());
    std::set<std::string> seen;
    for (const auto& v : all) {
        if (v.empty() || v.find_first_of(",[]^*+- ") != std::string::npos)
            throw PreconditionError("bad variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw PreconditionError("duplicate variable '" + v + "'");
    }
    std::shared_ptr<Ring> r(new Ring());
    r->kind_ = Kind::Polynomial;
    r->scalar_kind_ = base->scalar_kind_;
    r->modulus_ = base->modulus_;
    r->variables_ = std::move(all);
    r->domain_ = base->domain_;
    return r;
}

RingPtr Ring::scalar_ring() const
{
    switch (scalar_kind_) {
    case Kind::Integers:
        return integers();
    case Kind::IntegersModN:
        return integers_mod(modulus_);
    case Kind::PrimeField:
        return prime_field(modulus_);
    case Kind::Polynomial:
        break;
    }
    throw InvariantError("scalar kind cannot be Polynomial");
}

RingPtr Ring::torsion_free_cover() const
{
    if (variables_.empty())
        return integers();
    return polynomial(integers(), variables_);
}

std::string Ring::name() const
{
    std::string base;
    switch (scalar_kind_) {
    case Kind::Integers:
        base = "Z";
        break;
    case Kind::IntegersModN:
        base = "Z/" + modulus_.get_str();
        break;
    case Kind::PrimeField:
        base = "fp:" + modulus_.get_str();
        break;
    case Kind::Polynomial:
        throw InvariantError("scalar kind cannot be Polynomial");
    }
    if (variables_.empty())
        return base;
    base += "[";
    for (std::size_t i = 0; i < variables_.size(); ++i)
        base += (i ? "," : "") + variables_[i];
    return base + "]";
}

RingPtr Ring::parse(const std::string& text_in)
{
    const std::string text = trim(text_in);
    std::string head = text;
    std::vector<std::string> vars;
    if (auto open = text.find('['); open != std::string::npos) {
        if (text.back() != ']')
            throw SchemaError("bad ring description '" + text + "'");
        head = trim(text.substr(0, open));
        std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
        std::string v;
        while (std::getline(ss, v, ','))
            vars.push_back(trim(v));
    }
    RingPtr base;
    if (head == "Z" || head == "ZZ")
        base = integers();
    else if (head.rfind("Z/", 0) == 0)
        base = integers_mod(parse_positive(head.substr(2), text));
    else if (head.rfind("zmod:", 0) == 0)
        base = integers_mod(parse_positive(head.substr(5), text));
    else if (head.rfind("fp:", 0) == 0)
        base = prime_field(parse_positive(head.substr(3), text));
    else if (head.rfind("F_", 0) == 0)
        base = prime_field(parse_positive(head.substr(2), text));
    else
        throw SchemaError("unknown ring '" + text + "'");
    return vars.empty() ? base : polynomial(base, vars);
}

bool Ring::operator==(const Ring& other) const
{
    return kind_ == other.kind_ && scalar_kind_ == other.scalar_kind_ && modulus_ == other.modulus_ &&
           variables_ == other.variables_;
}

void Ring::reduce(mpz_class& value) const
{
    if (modulus_ != 0)
        mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- RingElement

bool grlex_less(const Monomial& a, const Monomial& b)
{
    auto da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da < db;
    return a < b;
}

RingElement RingElement::zero(const RingPtr& ring)
{
    return RingElement(ring, {});
}

RingElement RingElement::one(const RingPtr& ring)
{
    return from_integer(ring, 1);
}

RingElement RingElement::from_integer(const RingPtr& ring, const mpz_class& value)
{
    mpz_class c = value;
    ring->reduce(c);
    if (c == 0)
        return zero(ring);
    return RingElement(ring, {Term{Monomial(ring->num_variables(), 0), std::move(c)}});
}

RingElement RingElement::variable(const RingPtr& ring, std::size_t index)
{
    if (index >= ring->num_variables())
        throw PreconditionError("variable index out of range in " + ring->name());
    Monomial m(ring->num_variables(), 0);
    m[index] = 1;
    return from_terms(ring, {Term{std::move(m), 1}});
}

RingElement RingElement::from_terms(const RingPtr& ring, std::vector<Term> terms)
{
    for (const auto& t : terms)
        if (t.exponents.size() != ring->num_variables())
            throw PreconditionError("monomial arity does not match " + ring->name());
    RingElement e(ring, std::move(terms));
    e.canonicalise();
    return e;
}

void RingElement::canonicalise()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(a.exponents, b.exponents); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exponents == t.exponents)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::vector<Term> kept;
    kept.reserve(out.size());
    for (auto& t : out) {
        ring_->reduce(t.coeff);
        if (t.coeff != 0)
            kept.push_back(std::move(t));
    }
    terms_ = std::move(kept);
}

void RingElement::check_same(const RingElement& other) const
{
    if (!same_ring(ring_, other.ring_))
        throw DescriptorMismatch("ring mismatch: " + ring_->name() + " vs " + other.ring_->name());
}

bool RingElement::is_one() const
{
    return terms_.size() == 1 && terms_[0].coeff == 1 && degree_of(terms_[0].exponents) == 0;
}

bool RingElement::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0);
}

mpz_class RingElement::constant_term() const
{
    if (!terms_.empty() && degree_of(terms_[0].exponents) == 0)
        return terms_[0].coeff;
    return 0;
}

std::uint64_t RingElement::total_degree() const
{
    return terms_.empty() ? 0 : degree_of(terms_.back().exponents);
}

RingElement RingElement::operator-() const
{
    RingElement r = *this;
    for (auto& t : r.terms_) {
        t.coeff = -t.coeff;
        ring_->reduce(t.coeff);
    }
    return r;
}

RingElement& RingElement::operator+=(const RingElement& rhs)
{
    check_same(rhs);
    if (rhs.terms_.empty())
        return *this;
    if (ring_->num_variables() == 0) {
        mpz_class c = constant_term() + rhs.constant_term();
        ring_->reduce(c);
        terms_.clear();
        if (c != 0)
            terms_.push_back(Term{{}, std::move(c)});
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && grlex_less(a->exponents, b->exponents))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || grlex_less(b->exponents, a->exponents)) {
            out.push_back(*b++);
        } else {
            mpz_class c = a->coeff + b->coeff;
            ring_->reduce(c);
            if (c != 0)
                out.push_back(Term{std::move(a->exponents), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs)
{
    return *this += -rhs;
}

RingElement operator*(const RingElement& lhs, const RingElement& rhs)
{
    lhs.check_same(rhs);
    const auto& ring = lhs.ring_;
    if (lhs.terms_.empty() || rhs.terms_.empty())
        return RingElement::zero(ring);
    if (ring->num_variables() == 0) {
        mpz_class c = lhs.terms_[0].coeff * rhs.terms_[0].coeff;
        ring->reduce(c);
        return RingElement::from_integer(ring, c);
    }
    const std::size_t nv = ring->num_variables();
    std::vector<Term> prod;
    prod.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            Monomial m(nv);
            for (std::size_t i = 0; i < nv; ++i)
                m[i] = a.exponents[i] + b.exponents[i];
            prod.push_back(Term{std::move(m), a.coeff * b.coeff});
        }
    }
    RingElement r(ring, std::move(prod));
    r.canonicalise();
    return r;
}

RingElement& RingElement::operator*=(const RingElement& rhs)
{
    *this = *this * rhs;
    return *this;
}

RingElement RingElement::pow(std::uint64_t exponent) const
{
    RingElement result = one(ring_);
    RingElement base = *this;
    while (exponent) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

RingElement RingElement::scaled(const mpz_class& factor) const
{
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.coeff *= factor;
    return from_terms(ring_, std::move(t));
}

RingElement RingElement::divexact(const mpz_class& d) const
{
    if (!ring_->torsion_free())
        throw PreconditionError("exact integer division needs a torsion-free ring");
    if (d == 0)
        throw PreconditionError("division by zero");
    RingElement r = *this;
    for (auto& t : r.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t()))
            throw InvariantError("inexact division of " + to_string() + " by " + d.get_str());
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

RingElement RingElement::lift() const
{
    return RingElement(ring_->torsion_free_cover(), terms_);
}

RingElement RingElement::reduce_to(const RingPtr& target) const
{
    if (target->variables() != ring_->variables())
        throw DescriptorMismatch("cannot reduce " + ring_->name() + " into " + target->name());
    if (ring_->modulus() != 0 && (target->modulus() == 0 || !mpz_divisible_p(ring_->modulus().get_mpz_t(),
                                                                             target->modulus().get_mpz_t())))
        throw DescriptorMismatch("no canonical map " + ring_->name() + " -> " + target->name());
    return from_terms(target, terms_);
}

RingElement RingElement::embed_into(const RingPtr& target) const
{
    if (target->modulus() != ring_->modulus() || target->scalar_kind() != ring_->scalar_kind())
        throw DescriptorMismatch("cannot embed " + ring_->name() + " into " + target->name());
    const auto& tv = target->variables();
    std::vector<std::size_t> position;
    for (const auto& v : ring_->variables()) {
        auto it = std::find(tv.begin(), tv.end(), v);
        if (it == tv.end())
            throw DescriptorMismatch("cannot embed " + ring_->name() + " into " + target->name());
        position.push_back(static_cast<std::size_t>(it - tv.begin()));
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(tv.size(), 0);
        for (std::size_t i = 0; i < position.size(); ++i)
            m[position[i]] = t.exponents[i];
        out.push_back(Term{std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
}

RingElement RingElement::substitute(const RingPtr& target, std::span<const RingElement> images) const
{
    if (images.size() != ring_->num_variables())
        throw PreconditionError("substitution needs one image per variable");
    for (const auto& im : images)
        if (!same_ring(im.ring(), target))
            throw DescriptorMismatch("substitution image outside target ring");
    RingElement result = zero(target);
    std::vector<std::vector<RingElement>> powers(images.size());
    for (const auto& t : terms_) {
        RingElement term = from_integer(target, t.coeff);
        for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i) {
            const auto e = t.exponents[i];
            if (e == 0)
                continue;
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(one(target));
            while (pw.size() <= e)
                pw.push_back(pw.back() * images[i]);
            term *= pw[e];
        }
        result += term;
    }
    return result;
}

bool RingElement::operator==(const RingElement& other) const
{
    if (!same_ring(ring_, other.ring_))
        return false;
    if (terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != other.terms_[i].coeff || terms_[i].exponents != other.terms_[i].exponents)
            return false;
    return true;
}

std::string RingElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    const auto& vars = ring_->variables();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpz_class c = it->coeff;
        const bool constant = degree_of(it->exponents) == 0;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (it->exponents[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars[i];
            if (it->exponents[i] > 1)
                mono += "^" + std::to_string(it->exponents[i]);
        }
        if (constant)
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + "*" + mono;
    }
    return out;
}

} // namespace wittlab
