#include "wittlab/cubical.hpp"

#include "wittlab/errors.hpp"
#include "wittlab/smith.hpp"

namespace wittlab {

namespace {

void expect_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& what)
{
    if (m.rows() != rows || m.cols() != cols)
        throw PreconditionError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void expect_equal(const IntMatrix& a, const IntMatrix& b, const std::string& identity)
{
    if (a != b)
        throw PreconditionError("cubical identity fails: " + identity);
}

std::string idx(std::size_t n, std::size_t i) { return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")"; }

} // namespace

CubicalGroup::CubicalGroup(std::vector<std::size_t> ranks,
                           std::vector<std::vector<std::pair<IntMatrix, IntMatrix>>> faces,
                           std::vector<std::vector<IntMatrix>> degeneracies, std::vector<IntMatrix> extension)
    : ranks_(std::move(ranks)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)),
      extension_(std::move(extension))
{
    if (ranks_.empty())
        throw PreconditionError("cubical group needs level 0");
    const std::size_t top = top_level();
    if (faces_.size() != top)
        throw PreconditionError("faces needed for levels 1.." + std::to_string(top));
    for (std::size_t n = 1; n <= top; ++n) {
        if (faces_[n - 1].size() != n)
            throw PreconditionError("level " + std::to_string(n) + " needs " + std::to_string(n) + " face pairs");
        for (std::size_t i = 1; i <= n; ++i) {
            expect_shape(faces_[n - 1][i - 1].first, ranks_[n - 1], ranks_[n], "face d^0" + idx(n, i));
            expect_shape(faces_[n - 1][i - 1].second, ranks_[n - 1], ranks_[n], "face d^inf" + idx(n, i));
        }
    }
    if (!degeneracies_.empty()) {
        if (degeneracies_.size() != top)
            throw PreconditionError("degeneracies needed for levels 1.." + std::to_string(top));
        for (std::size_t n = 1; n <= top; ++n) {
            if (degeneracies_[n - 1].size() != n)
                throw PreconditionError("level " + std::to_string(n) + " needs " + std::to_string(n) + " degeneracies");
            for (std::size_t i = 1; i <= n; ++i)
                expect_shape(degeneracies_[n - 1][i - 1], ranks_[n], ranks_[n - 1], "degeneracy" + idx(n, i));
        }
    }
    if (!extension_.empty()) {
        if (degeneracies_.empty())
            throw PreconditionError("an extended structure needs degeneracies");
        if (extension_.size() != (top > 0 ? top - 1 : 0))
            throw PreconditionError("extension maps needed for levels 1.." + std::to_string(top - 1));
        for (std::size_t n = 1; n + 1 <= top; ++n)
            expect_shape(extension_[n - 1], ranks_[n + 1], ranks_[n], "extension mu_" + std::to_string(n));
    }
    check_identities();
}

const IntMatrix& CubicalGroup::face(std::size_t n, std::size_t i, Face e) const
{
    if (n == 0 || n > top_level() || i == 0 || i > n)
        throw PreconditionError("no face " + idx(n, i));
    const auto& p = faces_[n - 1][i - 1];
    return e == Face::Zero ? p.first : p.second;
}

const IntMatrix& CubicalGroup::degeneracy(std::size_t n, std::size_t i) const
{
    if (degeneracies_.empty() || n == 0 || n > top_level() || i == 0 || i > n)
        throw PreconditionError("no degeneracy " + idx(n, i));
    return degeneracies_[n - 1][i - 1];
}

const IntMatrix& CubicalGroup::extension(std::size_t n) const
{
    if (extension_.empty() || n == 0 || n >= top_level())
        throw PreconditionError("no extension map mu_" + std::to_string(n));
    return extension_[n - 1];
}

void CubicalGroup::check_identities() const
{
    const std::size_t top = top_level();
    const Face eps[] = {Face::Zero, Face::Infinity};
    for (std::size_t n = 2; n <= top; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                for (auto e : eps)
                    for (auto f : eps)
                        expect_equal(face(n - 1, i, e) * face(n, j, f), face(n - 1, j - 1, f) * face(n, i, e),
                                     "d_i d_j = d_{j-1} d_i at " + idx(n, i) + " j=" + std::to_string(j));
    if (!has_degeneracies())
        return;
    for (std::size_t n = 1; n <= top; ++n) {
        const auto id = IntMatrix::identity(ranks_[n - 1]);
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n; ++i)
                for (auto e : eps) {
                    const auto lhs = face(n, i, e) * degeneracy(n, j);
                    if (i == j)
                        expect_equal(lhs, id, "d_i s_i = id at " + idx(n, i));
                    else if (i < j)
                        expect_equal(lhs, degeneracy(n - 1, j - 1) * face(n - 1, i, e),
                                     "d_i s_j = s_{j-1} d_i at " + idx(n, i) + " j=" + std::to_string(j));
                    else
                        expect_equal(lhs, degeneracy(n - 1, j) * face(n - 1, i - 1, e),
                                     "d_i s_j = s_j d_{i-1} at " + idx(n, i) + " j=" + std::to_string(j));
                }
        if (n + 1 <= top)
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n + 1; ++j)
                    expect_equal(degeneracy(n + 1, j) * degeneracy(n, i), degeneracy(n + 1, i) * degeneracy(n, j - 1),
                                 "s_j s_i = s_i s_{j-1} at " + idx(n, i) + " j=" + std::to_string(j));
    }
    if (!has_extension())
        return;
    for (std::size_t n = 1; n + 1 <= top; ++n) {
        const auto& mu = extension(n);
        const auto id = IntMatrix::identity(ranks_[n]);
        const auto at_inf = degeneracy(n, n) * face(n, n, Face::Infinity);
        for (std::size_t k : {n, n + 1}) {
            expect_equal(face(n + 1, k, Face::Zero) * mu, id, "d^0 mu = id at n=" + std::to_string(n));
            expect_equal(face(n + 1, k, Face::Infinity) * mu, at_inf,
                         "d^inf mu = s_n d_n^inf at n=" + std::to_string(n));
        }
        for (std::size_t i = 1; i < n; ++i)
            for (auto e : eps)
                expect_equal(face(n + 1, i, e) * mu, extension(n - 1) * face(n, i, e),
                             "d_i mu_n = mu_{n-1} d_i at " + idx(n, i));
        for (std::size_t j = 1; j < n; ++j)
            expect_equal(mu * degeneracy(n, j), degeneracy(n + 1, j) * extension(n - 1),
                         "mu_n s_j = s_j mu_{n-1} at " + idx(n, j));
        expect_equal(mu * degeneracy(n, n), degeneracy(n + 1, n + 1) * degeneracy(n, n),
                     "mu_n s_n = s_{n+1} s_n at n=" + std::to_string(n));
    }
}

IntMatrix CubicalGroup::boundary(std::size_t n) const
{
    if (n == 0 || n > top_level())
        throw PreconditionError("no boundary at level " + std::to_string(n));
    IntMatrix d(ranks_[n - 1], ranks_[n]);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto term = face(n, i, Face::Infinity) - face(n, i, Face::Zero);
        d = i % 2 ? d - term : d + term;
    }
    return d;
}

ChainComplex CubicalGroup::full_complex() const
{
    std::vector<IntMatrix> d;
    for (std::size_t n = 1; n <= top_level(); ++n)
        d.push_back(boundary(n));
    return ChainComplex(ranks_, std::move(d));
}

ChainComplex CubicalGroup::nondegenerate_complex() const
{
    if (!has_degeneracies())
        return full_complex();
    const std::size_t top = top_level();
    // projection[n] : C_n -> Q_n, section[n] : Q_n -> C_n, degenerate[n] spans the image.
    std::vector<IntMatrix> projection, section, degenerate;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= top; ++n) {
        if (n == 0) {
            projection.push_back(IntMatrix::identity(ranks_[0]));
            section.push_back(IntMatrix::identity(ranks_[0]));
            degenerate.push_back(IntMatrix(ranks_[0], 0));
            ranks.push_back(ranks_[0]);
            continue;
        }
        std::vector<IntMatrix> parts;
        for (std::size_t i = 1; i <= n; ++i)
            parts.push_back(degeneracy(n, i));
        auto image = IntMatrix::hstack(parts, ranks_[n]);
        const auto snf = smith_normal_form(image);
        for (const auto& f : snf.invariants)
            if (f != 1)
                throw PreconditionError("degenerate elements at level " + std::to_string(n) +
                                        " do not span a direct summand (invariant factor " + f.get_str() +
                                        "); the quotient is not free");
        const std::size_t rho = snf.rank();
        projection.push_back(snf.U_inv.block(rho, ranks_[n], 0, ranks_[n]));
        section.push_back(snf.U.block(0, ranks_[n], rho, ranks_[n]));
        degenerate.push_back(std::move(image));
        ranks.push_back(ranks_[n] - rho);
    }
    std::vector<IntMatrix> d;
    for (std::size_t n = 1; n <= top; ++n) {
        const auto b = boundary(n);
        if (!(projection[n - 1] * b * degenerate[n]).is_zero())
            throw InvariantError("boundary does not preserve degenerate elements at level " + std::to_string(n));
        d.push_back(projection[n - 1] * b * section[n]);
    }
    return ChainComplex(std::move(ranks), std::move(d));
}

CubicalGroup::Normalized CubicalGroup::normalized_subcomplex() const
{
    const std::size_t top = top_level();
    std::vector<IntMatrix> basis, left_inverse;
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= top; ++n) {
        if (n == 0) {
            basis.push_back(IntMatrix::identity(ranks_[0]));
            left_inverse.push_back(IntMatrix::identity(ranks_[0]));
            ranks.push_back(ranks_[0]);
            continue;
        }
        std::vector<IntMatrix> parts;
        for (std::size_t i = 1; i <= n; ++i)
            parts.push_back(face(n, i, Face::Zero));
        for (std::size_t i = 2; i <= n; ++i)
            parts.push_back(face(n, i, Face::Infinity));
        const auto snf = smith_normal_form(IntMatrix::vstack(parts, ranks_[n]));
        const std::size_t rho = snf.rank();
        basis.push_back(snf.V_inv.block(0, ranks_[n], rho, ranks_[n]));
        left_inverse.push_back(snf.V.block(rho, ranks_[n], 0, ranks_[n]));
        ranks.push_back(ranks_[n] - rho);
    }
    std::vector<IntMatrix> d;
    for (std::size_t n = 1; n <= top; ++n) {
        const auto image = -(face(n, 1, Face::Infinity) * basis[n]);
        const auto dn = left_inverse[n - 1] * image;
        if (basis[n - 1] * dn != image)
            throw InvariantError("d_1^inf does not map N_" + std::to_string(n) + " into N_" + std::to_string(n - 1));
        d.push_back(dn);
    }
    return Normalized{ChainComplex(std::move(ranks), std::move(d)), std::move(basis)};
}

NormalizationComparison compare_normalization(const CubicalGroup& c)
{
    NormalizationComparison out;
    out.normalized = c.normalized_subcomplex().complex.homology();
    out.nondegenerate = c.nondegenerate_complex().homology();
    out.compared = c.top_level();
    for (std::size_t n = 0; n < out.compared; ++n)
        if (out.normalized[n] != out.nondegenerate[n])
            out.agree = false;
    return out;
}

} // namespace wittlab
