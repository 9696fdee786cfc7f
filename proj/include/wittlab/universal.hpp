#pragma once

// Universal Witt polynomials. For a truncation set S the coordinates of
// x + y, x * y, -x and F_r(x) are integral polynomials in the coordinates of
// x and y. They are computed once over Z[x_s, y_s] through the ghost map
// (injective there) and specialised into any ring; naturality of W_S makes
// the specialisation correct over torsion rings where the ghost map is not
// injective.
//
// Results are memoised in-process. When WITTLAB_CACHE_DIR is set they are also
// written to and read from that directory as JSON.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "wittlab/witt.hpp"

namespace wittlab::universal {

enum class Operation { Add, Multiply, Negate, Frobenius };

const char* to_string(Operation op);

struct Polynomials {
    Operation op;
    std::uint32_t r = 1;
    TruncationSet source;
    TruncationSet target;
    /// Z[x_s] or Z[x_s, y_s], variables named x<s> then y<s>.
    RingPtr ring;
    /// One polynomial per element of `target`.
    std::vector<RingElement> coordinates;
};

/// Thread-safe; concurrent readers, serialised insertion.
std::shared_ptr<const Polynomials> get(Operation op, const TruncationSet& s, std::uint32_t r = 1);

/// Evaluates the polynomials at the coordinates of x (and y for binary ops).
WittVector specialise(const Polynomials& p, const WittVector& x, const WittVector* y = nullptr);

/// Computes without consulting any cache.
Polynomials compute(Operation op, const TruncationSet& s, std::uint32_t r = 1);

std::optional<std::filesystem::path> cache_dir();
void clear_memory_cache();

} // namespace wittlab::universal
