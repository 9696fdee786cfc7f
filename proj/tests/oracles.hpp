#pragma once

// Independent oracles shared by the unit tests and the acceptance suite.

#include <random>
#include <vector>

#include "wittlab/chain_complex.hpp"
#include "wittlab/witt.hpp"

namespace wittlab::oracles {

// Exact determinant by fraction-free elimination.
inline mpz_class bareiss_det(IntMatrix a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Invariant factors from determinantal divisors: D_k = gcd of the k x k minors,
// d_k = D_k / D_{k-1}; the rank is the largest k with D_k != 0.
inline std::vector<mpz_class> oracle_invariants(const IntMatrix& m)
{
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        mpz_class g = 0;
        for (const auto& r : rs) {
            for (const auto& c : cs) {
                IntMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor.at(i, j) = m.at(r[i], c[j]);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), bareiss_det(minor).get_mpz_t());
                if (g == 1)
                    break;
            }
            if (g == 1)
                break;
        }
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline std::vector<HomologyGroup> oracle_homology(const std::vector<std::size_t>& ranks, const std::vector<IntMatrix>& d)
{
    const std::size_t top = ranks.size() - 1;
    std::vector<std::vector<mpz_class>> inv(top + 2);
    for (std::size_t n = 1; n <= top; ++n)
        inv[n] = oracle_invariants(d[n - 1]);
    std::vector<HomologyGroup> out;
    for (std::size_t n = 0; n <= top; ++n) {
        HomologyGroup h;
        const std::size_t rank_out = n >= 1 ? inv[n].size() : 0;
        const std::size_t rank_in = n + 1 <= top ? inv[n + 1].size() : 0;
        h.free_rank = ranks[n] - rank_out - rank_in;
        if (n + 1 <= top)
            for (const auto& f : inv[n + 1])
                if (f != 1)
                    h.torsion.push_back(f);
        out.push_back(h);
    }
    return out;
}

struct RandomComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> d;
};

inline bool entries_within(const IntMatrix& m, long bound)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (abs(m.at(i, j)) > bound)
                return false;
    return true;
}

// Direct sum of pieces Z --c--> Z and Z, then elementary basis changes that
// keep every entry in [-5, 5].
inline RandomComplex random_complex(std::mt19937_64& rng)
{
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    RandomComplex c;
    const std::size_t top = static_cast<std::size_t>(uni(1, 4));
    c.ranks.assign(top + 1, 0);
    struct Piece {
        std::size_t degree;
        long c;
    };
    std::vector<Piece> pieces;
    for (std::size_t n = 0; n <= top; ++n) {
        while (c.ranks[n] < 8 && uni(0, 3) != 0) {
            if (n >= 1 && c.ranks[n - 1] < 8 && uni(0, 1)) {
                pieces.push_back({n, uni(-5, 5)});
                ++c.ranks[n];
                ++c.ranks[n - 1];
            } else {
                pieces.push_back({n, 0});
                ++c.ranks[n];
            }
        }
    }
    for (std::size_t n = 1; n <= top; ++n)
        c.d.emplace_back(c.ranks[n - 1], c.ranks[n]);
    // A piece with c == 0 leaves its generators free.
    std::vector<std::size_t> next(top + 1, 0);
    for (const auto& p : pieces) {
        if (p.degree >= 1 && p.c != 0)
            c.d[p.degree - 1].at(next[p.degree - 1]++, next[p.degree]) = p.c;
        ++next[p.degree];
    }
    for (int step = 0; step < 40; ++step) {
        const auto n = static_cast<std::size_t>(uni(0, static_cast<long>(top)));
        if (c.ranks[n] < 2)
            continue;
        const auto i = static_cast<std::size_t>(uni(0, static_cast<long>(c.ranks[n]) - 1));
        auto j = static_cast<std::size_t>(uni(0, static_cast<long>(c.ranks[n]) - 2));
        if (j >= i)
            ++j;
        const long k = uni(0, 1) ? 1 : -1;
        // New coordinates x' = E x with E = 1 + k e_ij: columns of d_n change
        // by E^{-1}, rows of d_{n+1} by E.
        auto saved = c.d;
        if (n >= 1)
            c.d[n - 1].add_col_multiple(j, i, -k);
        if (n + 1 <= top)
            c.d[n].add_row_multiple(i, j, k);
        bool ok = true;
        for (const auto& m : c.d)
            ok = ok && entries_within(m, 5);
        if (!ok)
            c.d = std::move(saved);
    }
    return c;
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps)
{
    auto m = IntMatrix::identity(n);
    if (n < 2)
        return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const auto i = pick(rng), j = pick(rng);
        if (i != j)
            m.add_row_multiple(i, j, coef(rng));
        else
            m.negate_row(i);
    }
    return m;
}

/// Ghost components sum_{d | s} d a_d^{s/d}, evaluated straight from the coordinates.
inline std::vector<RingElement> direct_ghost(const WittVector& x)
{
    std::vector<RingElement> out;
    for (auto s : x.truncation().elements()) {
        auto acc = RingElement::zero(x.ring());
        for (auto d : x.truncation().elements())
            if (s % d == 0)
                acc = acc + RingElement::from_integer(x.ring(), d) * x.coord(d).pow(s / d);
        out.push_back(acc);
    }
    return out;
}

} // namespace wittlab::oracles
