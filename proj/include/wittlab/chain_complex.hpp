#pragma once

// Bounded chain complexes of finitely generated free abelian groups and their
// homology via Smith normal form.

#include <string>
#include <vector>

#include "wittlab/int_matrix.hpp"

namespace wittlab {

struct HomologyGroup {
    std::size_t free_rank = 0;
    /// Invariant factors greater than 1, in divisibility order.
    std::vector<mpz_class> torsion;

    bool operator==(const HomologyGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
    /// "Z^2 + Z/2 + Z/6", or "0".
    std::string to_string() const;
};

class ChainComplex {
public:
    /// ranks[n] = rank C_n for n = 0..N; boundaries[n-1] is d_n : C_n -> C_{n-1},
    /// a ranks[n-1] x ranks[n] matrix. Throws InvariantError unless d d = 0.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    std::size_t top_degree() const { return ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    /// d_n for 1 <= n <= top_degree().
    const IntMatrix& d(std::size_t n) const;
    const std::vector<IntMatrix>& boundaries() const { return boundaries_; }

    /// H_n = ker d_n / im d_{n+1}, with d_0 = 0 and d_{N+1} = 0.
    HomologyGroup homology(std::size_t n) const;
    std::vector<HomologyGroup> homology() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
};

} // namespace wittlab
