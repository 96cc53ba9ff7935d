#ifndef LIEQUIV_CATALOG_HPP
#define LIEQUIV_CATALOG_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liequiv/algebra.hpp"
#include "liequiv/metric.hpp"

namespace liequiv {

struct CatalogEntry {
    std::string name;
    std::string parameters;  ///< e.g. "alpha1 alpha2 alpha3"
    std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Built-in algebra + metric families:
///   so3 (α1, α2, α3 ≠ 0)     diag(α1, α2, α3) on [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
///   g4 (α > 0)               [e1,e2]=e3, [e1,e3]=e4 with the null-frame Lorentz metric
///   rh3xr (α > 0, 0 ≤ β < 1) [e1,e3]=e1, [e2,e3]=e2
///   heisenberg3 ()           [e1,e2]=e3, identity metric
///   abelian (n ≥ 1)          zero brackets, identity metric
/// Throws InvalidArgument for an unknown name or out-of-range parameters.
std::pair<LieAlgebra, MetricMatrix> catalog(const std::string& name,
                                            std::span<const Rational> params);

}  // namespace liequiv

#endif
