#pragma once

// Finitely presented cubical abelian groups C_0..C_N, free on chosen bases,
// with faces d_i^e (e in {0, inf}), degeneracies s_i and optionally the
// extended structure map mu^* coming from mu : 2 -> 1. All structure maps are
// integer matrices acting on column vectors:
//   face(n, i, e)   : C_n     -> C_{n-1},  1 <= i <= n
//   degeneracy(n, i): C_{n-1} -> C_n,      1 <= i <= n
//   extension(n)    : C_n     -> C_{n+1},  1 <= n <= N-1
// The cubical identities are verified at construction.

#include <optional>
#include <utility>
#include <vector>

#include "wittlab/chain_complex.hpp"

namespace wittlab {

enum class Face { Zero, Infinity };

class CubicalGroup {
public:
    /// faces[n-1][i-1] = {d_i^0, d_i^inf} on C_n. degeneracies is either empty
    /// or has degeneracies[n-1][i-1] = s_i : C_{n-1} -> C_n. extension is
    /// either empty or has extension[n-1] = mu_n^* for n = 1..N-1.
    CubicalGroup(std::vector<std::size_t> ranks, std::vector<std::vector<std::pair<IntMatrix, IntMatrix>>> faces,
                 std::vector<std::vector<IntMatrix>> degeneracies = {}, std::vector<IntMatrix> extension = {});

    std::size_t top_level() const { return ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const IntMatrix& face(std::size_t n, std::size_t i, Face e) const;
    bool has_degeneracies() const { return !degeneracies_.empty(); }
    const IntMatrix& degeneracy(std::size_t n, std::size_t i) const;
    bool has_extension() const { return !extension_.empty(); }
    const IntMatrix& extension(std::size_t n) const;

    /// sum_{i=1}^n (-1)^i (d_i^inf - d_i^0) : C_n -> C_{n-1}
    IntMatrix boundary(std::size_t n) const;
    ChainComplex full_complex() const;

    /// C_n modulo the span of all degeneracies. Requires that span to be a
    /// direct summand so the quotient stays free; throws PreconditionError
    /// otherwise.
    ChainComplex nondegenerate_complex() const;

    struct Normalized {
        ChainComplex complex;
        /// inclusion[n] : N_n -> C_n
        std::vector<IntMatrix> inclusion;
    };
    /// N_n = elements killed by every d_i^0 and by d_i^inf for i >= 2, with
    /// differential -d_1^inf (the restriction of the full boundary).
    Normalized normalized_subcomplex() const;

private:
    void check_identities() const;

    std::vector<std::size_t> ranks_;
    std::vector<std::vector<std::pair<IntMatrix, IntMatrix>>> faces_;
    std::vector<std::vector<IntMatrix>> degeneracies_;
    std::vector<IntMatrix> extension_;
};

struct NormalizationComparison {
    std::vector<HomologyGroup> normalized;
    std::vector<HomologyGroup> nondegenerate;
    /// Degrees 0..compared-1 are compared; the top level is left out because
    /// cycles there are not yet divided by boundaries from the missing level.
    std::size_t compared = 0;
    bool agree = true;
};

NormalizationComparison compare_normalization(const CubicalGroup& c);

} // namespace wittlab
