#ifndef ALCOVE_DD_HPP
#define ALCOVE_DD_HPP

// Double description method over the integers.

#include "alcove/exactq.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace alcove::dd {

/// Raised when an intermediate ray set outgrows the configured cap. Distinct
/// from every mathematical error so callers can report "resource capped".
class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxRays = 1'000'000;

/// kDefaultMaxRays unless ALCOVE_MAX_DD_RAYS is set to a positive integer.
std::size_t default_max_rays();

struct Options {
    std::size_t max_rays = default_max_rays();
};

/// Extreme rays (primitive integer vectors) of the pointed cone
/// { z : row . z >= 0 for every row }. Rows are inserted in the given order;
/// the rows must have full column rank.
std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows,
                                        const Options& options = {});

} // namespace alcove::dd

#endif // ALCOVE_DD_HPP
