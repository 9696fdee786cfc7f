#include "wittlab/truncation_set.hpp"

#include <algorithm>

namespace wittlab {

TruncationSet::TruncationSet(std::vector<std::uint32_t> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty())
        throw PreconditionError("truncation set must be nonempty");
    if (elements_.front() == 0)
        throw PreconditionError("truncation set elements must be positive");
    for (auto s : elements_)
        for (std::uint32_t d = 1; d * d <= s; ++d)
            if (s % d == 0 && (!contains(d) || !contains(s / d)))
                throw PreconditionError("not divisor-closed: " + std::to_string(s) + " in set but divisor " +
                                        std::to_string(contains(d) ? s / d : d) + " missing");
}

TruncationSet TruncationSet::full(std::uint32_t m)
{
    if (m == 0)
        throw PreconditionError("full truncation set needs m >= 1");
    std::vector<std::uint32_t> v(m);
    for (std::uint32_t i = 0; i < m; ++i)
        v[i] = i + 1;
    return TruncationSet(std::move(v));
}

TruncationSet TruncationSet::p_typical(std::uint32_t p, std::uint32_t k)
{
    if (p < 2)
        throw PreconditionError("p-typical truncation set needs p >= 2");
    std::vector<std::uint32_t> v{1};
    for (std::uint32_t i = 0; i < k; ++i)
        v.push_back(v.back() * p);
    return TruncationSet(std::move(v));
}

bool TruncationSet::contains(std::uint32_t s) const
{
    return std::binary_search(elements_.begin(), elements_.end(), s);
}

std::optional<std::size_t> TruncationSet::index_of(std::uint32_t s) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
    if (it == elements_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool TruncationSet::subset_of(const TruncationSet& other) const
{
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

std::optional<TruncationSet> TruncationSet::try_quotient(std::uint32_t r) const
{
    if (r == 0)
        throw PreconditionError("quotient index must be positive");
    std::vector<std::uint32_t> q;
    for (auto s : elements_)
        if (s % r == 0)
            q.push_back(s / r);
    if (q.empty())
        return std::nullopt;
    return TruncationSet(std::move(q));
}

TruncationSet TruncationSet::quotient(std::uint32_t r) const
{
    auto q = try_quotient(r);
    if (!q)
        throw PreconditionError("empty quotient " + to_string() + "/" + std::to_string(r));
    return *q;
}

std::string TruncationSet::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i)
        out += (i ? "," : "") + std::to_string(elements_[i]);
    return out + "}";
}

RestrictionPlan restrict_plan(const TruncationSet& source, const TruncationSet& target)
{
    if (!target.subset_of(source))
        throw PreconditionError("restriction target " + target.to_string() + " is not a subset of " +
                                source.to_string());
    RestrictionPlan plan;
    for (auto t : target.elements())
        plan.kept.push_back(*source.index_of(t));
    for (auto s : source.elements())
        if (!target.contains(s))
            plan.dropped.push_back(s);
    return plan;
}

} // namespace wittlab
