#include "wittlab/chain_complex.hpp"

#include "wittlab/errors.hpp"
#include "wittlab/smith.hpp"

namespace wittlab {

std::string HomologyGroup::to_string() const
{
    std::string out;
    if (free_rank > 0)
        out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion)
        out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return out.empty() ? "0" : out;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    if (ranks_.empty())
        throw PreconditionError("chain complex needs at least degree 0");
    if (boundaries_.size() != ranks_.size() - 1)
        throw PreconditionError("chain complex with " + std::to_string(ranks_.size()) + " levels needs " +
                                std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                                std::to_string(boundaries_.size()));
    for (std::size_t n = 1; n < ranks_.size(); ++n) {
        const auto& m = boundaries_[n - 1];
        if (m.rows() != ranks_[n - 1] || m.cols() != ranks_[n])
            throw PreconditionError("d_" + std::to_string(n) + " must be " + std::to_string(ranks_[n - 1]) + "x" +
                                    std::to_string(ranks_[n]) + ", got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    }
    for (std::size_t n = 2; n < ranks_.size(); ++n)
        if (!(boundaries_[n - 2] * boundaries_[n - 1]).is_zero())
            throw InvariantError("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
}

const IntMatrix& ChainComplex::d(std::size_t n) const
{
    if (n == 0 || n > top_degree())
        throw PreconditionError("no boundary d_" + std::to_string(n));
    return boundaries_[n - 1];
}

HomologyGroup ChainComplex::homology(std::size_t n) const
{
    if (n > top_degree())
        throw PreconditionError("degree " + std::to_string(n) + " above the top of the complex");
    const std::size_t out_rank = n == 0 ? 0 : rank(d(n));
    HomologyGroup h;
    std::size_t in_rank = 0;
    if (n < top_degree()) {
        const auto snf = smith_normal_form(d(n + 1), false);
        in_rank = snf.rank();
        for (const auto& f : snf.invariants)
            if (f != 1)
                h.torsion.push_back(f);
    }
    h.free_rank = ranks_[n] - out_rank - in_rank;
    return h;
}

std::vector<HomologyGroup> ChainComplex::homology() const
{
    std::vector<HomologyGroup> out;
    for (std::size_t n = 0; n <= top_degree(); ++n)
        out.push_back(homology(n));
    return out;
}

} // namespace wittlab
