#pragma once

// Exact commutative rings: Z, Z/n, F_p and multivariate polynomial rings over
// those. A Ring is an immutable descriptor shared between its elements;
// RingElement is a value type carrying a pointer to its descriptor.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittlab/errors.hpp"

namespace wittlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    enum class Kind { Integers, IntegersModN, PrimeField, Polynomial };

    static RingPtr integers();
    /// Z/n for n >= 2.
    static RingPtr integers_mod(const mpz_class& n);
    /// F_p; throws PreconditionError if p is not prime.
    static RingPtr prime_field(const mpz_class& p);
    /// base[variables]. A polynomial base is flattened: (Z[x])[y] == Z[x,y].
    static RingPtr polynomial(const RingPtr& base, std::vector<std::string> variables);

    Kind kind() const { return kind_; }
    /// Kind of the coefficient ring (never Polynomial).
    Kind scalar_kind() const { return scalar_kind_; }
    /// Coefficient modulus; 0 when coefficients are integers.
    const mpz_class& modulus() const { return modulus_; }
    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t num_variables() const { return variables_.size(); }

    bool is_polynomial() const { return kind_ == Kind::Polynomial; }
    bool torsion_free() const { return modulus_ == 0; }
    /// Integral domain. Every supported domain is also a UFD.
    bool is_domain() const { return domain_; }
    bool is_ufd() const { return domain_; }

    /// The coefficient ring (this ring itself when it has no variables).
    RingPtr scalar_ring() const;
    /// Z or Z[same variables]: the ring every element lifts to.
    RingPtr torsion_free_cover() const;

    /// Canonical name: "Z", "Z/6", "fp:7", "fp:5[x,y]".
    std::string name() const;
    /// Parses the names produced by name(), plus "zmod:n" and "F_p".
    static RingPtr parse(const std::string& text);

    bool operator==(const Ring& other) const;

    /// Brings an integer into canonical residue form.
    void reduce(mpz_class& value) const;

private:
    Ring() = default;

    Kind kind_ = Kind::Integers;
    Kind scalar_kind_ = Kind::Integers;
    mpz_class modulus_ = 0;
    std::vector<std::string> variables_;
    bool domain_ = true;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

using Monomial = std::vector<std::uint32_t>;

struct Term {
    Monomial exponents;
    mpz_class coeff;
};

/// Graded lexicographic order on exponent vectors of equal length.
bool grlex_less(const Monomial& a, const Monomial& b);

class RingElement {
public:
    static RingElement zero(const RingPtr& ring);
    static RingElement one(const RingPtr& ring);
    static RingElement from_integer(const RingPtr& ring, const mpz_class& value);
    static RingElement variable(const RingPtr& ring, std::size_t index);
    /// Terms may be unsorted, repeated or zero; they are canonicalised.
    static RingElement from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    /// Sorted ascending in grlex order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Coefficient of the unit monomial.
    mpz_class constant_term() const;
    std::uint64_t total_degree() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);
    friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
    friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
    friend RingElement operator*(const RingElement& lhs, const RingElement& rhs);

    RingElement pow(std::uint64_t exponent) const;
    RingElement scaled(const mpz_class& factor) const;
    /// Exact division of every coefficient by d. Only valid over torsion-free rings.
    RingElement divexact(const mpz_class& d) const;

    /// Same coefficients viewed in the torsion-free cover.
    RingElement lift() const;
    /// Image under the canonical map into `target`, which must have the same
    /// variables and a coefficient modulus dividing ours (or ours being 0).
    RingElement reduce_to(const RingPtr& target) const;
    /// Coefficient-ring constants embed into polynomial rings over them.
    RingElement embed_into(const RingPtr& target) const;

    /// Ring homomorphism defined by the images of the variables.
    RingElement substitute(const RingPtr& target, std::span<const RingElement> images) const;

    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    RingElement(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
    void check_same(const RingElement& other) const;
    void canonicalise();

    RingPtr ring_;
    std::vector<Term> terms_;
};

mpz_class gcd(const mpz_class& a, const mpz_class& b);
bool is_probable_prime(const mpz_class& n);

} // namespace wittlab
