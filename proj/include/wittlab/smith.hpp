#pragma once

// Smith normal form over Z: M = U * D * V with U, V unimodular and D diagonal
// with d_1 | d_2 | ... | d_r, d_i > 0. The inverses of U and V are tracked
// alongside so kernels, images and sections can be read off directly.

#include "wittlab/int_matrix.hpp"

namespace wittlab {

struct SmithForm {
    IntMatrix U, U_inv;
    IntMatrix D;
    IntMatrix V, V_inv;
    /// Nonzero diagonal entries of D, in order.
    std::vector<mpz_class> invariants;

    std::size_t rank() const { return invariants.size(); }
};

/// With track = false only D and the invariants are filled in.
SmithForm smith_normal_form(const IntMatrix& m, bool track = true);

/// Rank over Q, via the Smith form.
std::size_t rank(const IntMatrix& m);

} // namespace wittlab
