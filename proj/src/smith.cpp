#include "wittlab/smith.hpp"

#include "wittlab/errors.hpp"

namespace wittlab {

namespace {

// Invariant kept throughout: M == U * A * V, U * U_inv == I, V * V_inv == I.
class Reducer {
public:
    Reducer(const IntMatrix& m, bool track)
        : a(m), track_(track)
    {
        if (track_) {
            u = u_inv = IntMatrix::identity(m.rows());
            v = v_inv = IntMatrix::identity(m.cols());
        }
    }

    // A <- E A with E: row i += c row j. U <- U E^{-1}, U_inv <- E U_inv.
    void row_add(std::size_t i, std::size_t j, const mpz_class& c)
    {
        a.add_row_multiple(i, j, c);
        if (track_) {
            u.add_col_multiple(j, i, -c);
            u_inv.add_row_multiple(i, j, c);
        }
    }

    // A <- A F with F: col i += c col j. V <- F^{-1} V, V_inv <- V_inv F.
    void col_add(std::size_t i, std::size_t j, const mpz_class& c)
    {
        a.add_col_multiple(i, j, c);
        if (track_) {
            v.add_row_multiple(j, i, -c);
            v_inv.add_col_multiple(i, j, c);
        }
    }

    void row_swap(std::size_t i, std::size_t j)
    {
        a.swap_rows(i, j);
        if (track_) {
            u.swap_cols(i, j);
            u_inv.swap_rows(i, j);
        }
    }

    void col_swap(std::size_t i, std::size_t j)
    {
        a.swap_cols(i, j);
        if (track_) {
            v.swap_rows(i, j);
            v_inv.swap_cols(i, j);
        }
    }

    void row_negate(std::size_t i)
    {
        a.negate_row(i);
        if (track_) {
            u.negate_col(i);
            u_inv.negate_row(i);
        }
    }

    // Moves the entry of least absolute value in the block [t.., t..] to (t, t).
    bool place_pivot(std::size_t t)
    {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        mpz_class best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                const auto& x = a.at(i, j);
                if (x == 0)
                    continue;
                if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                    found = true;
                    best = x;
                    bi = i;
                    bj = j;
                    if (best == 1 || best == -1)
                        goto done;
                }
            }
    done:
        if (!found)
            return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    // Clears row and column t; returns false if a smaller remainder appeared
    // and the pivot has to be chosen again.
    bool clear(std::size_t t)
    {
        const mpz_class p = a.at(t, t);
        mpz_class q;
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (a.at(i, t) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), p.get_mpz_t());
            row_add(i, t, -q);
            if (a.at(i, t) != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (a.at(t, j) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), p.get_mpz_t());
            col_add(j, t, -q);
            if (a.at(t, j) != 0)
                clean = false;
        }
        return clean;
    }

    // Finds an entry of the trailing block not divisible by the pivot and
    // folds its row into row t.
    bool enforce_divisibility(std::size_t t)
    {
        const mpz_class& p = a.at(t, t);
        for (std::size_t i = t + 1; i < a.rows(); ++i)
            for (std::size_t j = t + 1; j < a.cols(); ++j)
                if (a.at(i, j) != 0 && !mpz_divisible_p(a.at(i, j).get_mpz_t(), p.get_mpz_t())) {
                    row_add(t, i, 1);
                    return false;
                }
        return true;
    }

    IntMatrix a, u, u_inv, v, v_inv;

private:
    bool track_;
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool track)
{
    Reducer red(m, track);
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::vector<mpz_class> invariants;
    for (std::size_t t = 0; t < limit; ++t) {
        if (!red.place_pivot(t))
            break;
        for (;;) {
            if (!red.clear(t)) {
                red.place_pivot(t);
                continue;
            }
            if (red.enforce_divisibility(t))
                break;
        }
        if (red.a.at(t, t) < 0)
            red.row_negate(t);
        invariants.push_back(red.a.at(t, t));
    }
    return SmithForm{std::move(red.u), std::move(red.u_inv), std::move(red.a), std::move(red.v), std::move(red.v_inv),
                     std::move(invariants)};
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m, false).rank(); }

} // namespace wittlab
