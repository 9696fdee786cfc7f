#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittlab/errors.hpp"

namespace wittlab {

/// Finite nonempty set of positive integers closed under taking divisors.
class TruncationSet {
public:
    /// Sorts and deduplicates; throws PreconditionError unless divisor-closed.
    explicit TruncationSet(std::vector<std::uint32_t> elements);

    /// {1, ..., m}
    static TruncationSet full(std::uint32_t m);
    /// {1, p, p^2, ..., p^k}
    static TruncationSet p_typical(std::uint32_t p, std::uint32_t k);

    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::uint32_t max() const { return elements_.back(); }
    bool contains(std::uint32_t s) const;
    /// Position of s among the sorted elements.
    std::optional<std::size_t> index_of(std::uint32_t s) const;
    /// True when the set is {1, ..., max()}.
    bool is_full() const { return elements_.size() == elements_.back(); }
    bool subset_of(const TruncationSet& other) const;

    /// {s : r*s in S}. Throws PreconditionError when empty (r not in S).
    TruncationSet quotient(std::uint32_t r) const;
    std::optional<TruncationSet> try_quotient(std::uint32_t r) const;

    bool operator==(const TruncationSet& o) const { return elements_ == o.elements_; }
    bool operator!=(const TruncationSet& o) const { return elements_ != o.elements_; }

    std::string to_string() const;

private:
    std::vector<std::uint32_t> elements_;
};

/// Coordinate projection W_S -> W_T for T a subset of S.
struct RestrictionPlan {
    /// For each element of T, its index in S.
    std::vector<std::size_t> kept;
    /// Elements of S outside T.
    std::vector<std::uint32_t> dropped;

    bool is_identity() const { return dropped.empty(); }
};

RestrictionPlan restrict_plan(const TruncationSet& source, const TruncationSet& target);

} // namespace wittlab
