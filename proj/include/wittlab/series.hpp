#pragma once

// Univariate polynomials in t over a Ring, and unit power series
// 1 + t*R[[t]] truncated mod t^{m+1}. The additive group of W_m(R) is the
// multiplicative group of the latter.

#include <cstdint>
#include <vector>

#include "wittlab/ring.hpp"

namespace wittlab {

class UPoly {
public:
    explicit UPoly(RingPtr ring) : ring_(std::move(ring)) {}
    UPoly(RingPtr ring, std::vector<RingElement> coeffs);

    static UPoly constant(const RingElement& c);
    /// c * t^n
    static UPoly monomial(const RingElement& c, std::size_t n);
    /// 1 - c*t^n
    static UPoly one_minus(const RingElement& c, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }
    RingElement coeff(std::size_t i) const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly pow(std::uint64_t e) const;
    UPoly truncated(std::size_t m) const;
    RingElement evaluate(const RingElement& at) const;
    /// Applies a ring map to every coefficient.
    template <class F>
    UPoly map(const RingPtr& target, F&& f) const
    {
        std::vector<RingElement> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(f(c));
        return UPoly(target, std::move(out));
    }

    /// Pseudo-remainder of *this by d: lc(d)^k * this = q*d + r with deg r < deg d.
    UPoly pseudo_remainder(const UPoly& d) const;
    /// Exact division by (1 - t); throws if (1 - t) does not divide.
    UPoly divide_by_one_minus_t() const;

    bool operator==(const UPoly& o) const;
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    RingPtr ring_;
    std::vector<RingElement> coeffs_;
};

/// Element of 1 + t*R[t] mod t^{m+1}: constant term 1, order m.
class TruncatedSeries {
public:
    /// coeffs = [c_0, ..., c_k]; padded or truncated to order m. c_0 must be 1.
    TruncatedSeries(RingPtr ring, std::size_t order, std::vector<RingElement> coeffs);
    static TruncatedSeries one(const RingPtr& ring, std::size_t order);
    static TruncatedSeries from_poly(const UPoly& p, std::size_t order);

    const RingPtr& ring() const { return ring_; }
    std::size_t order() const { return order_; }
    /// Always order()+1 entries.
    const std::vector<RingElement>& coeffs() const { return coeffs_; }
    const RingElement& coeff(std::size_t i) const { return coeffs_.at(i); }
    UPoly to_poly() const { return UPoly(ring_, coeffs_); }

    TruncatedSeries inverse() const;
    TruncatedSeries pow(const mpz_class& e) const;
    TruncatedSeries with_order(std::size_t m) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::size_t order_;
    std::vector<RingElement> coeffs_;
};

/// Product reduced mod t^{m+1}. Both factors need constant term 1 and order >= m.
TruncatedSeries series_mul_truncated(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t m);

/// The unique (a_1..a_m) with f == prod_{n<=m} (1 - a_n t^n) mod t^{m+1}.
std::vector<RingElement> series_factor(const TruncatedSeries& f, std::size_t m);

/// prod_{n=1}^{m} (1 - a_n t^n) mod t^{m+1}, with m = a.size().
TruncatedSeries series_rebuild(const RingPtr& ring, const std::vector<RingElement>& a);

/// The same product as a polynomial, without truncation.
UPoly series_rebuild_poly(const RingPtr& ring, const std::vector<RingElement>& a);

} // namespace wittlab
