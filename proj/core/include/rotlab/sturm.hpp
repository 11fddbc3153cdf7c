#pragma once

/**
 * @file sturm.hpp
 * @brief Exact real-root isolation for univariate rational polynomials.
 *
 * The Sturm chain counts distinct real roots in an interval; bisection plus
 * a monic integer-root test then either pins a root down to an exact
 * rational or to an open isolating interval with rational endpoints.
 */

#include <optional>
#include <vector>

#include "rotlab/unipoly.hpp"

namespace rotlab {

struct RealRoot {
    /// Set iff the root is rational; then lo == hi == *exact.
    std::optional<Rational> exact;
    /// Open isolating interval lo < root < hi (degenerate for exact roots).
    Rational lo;
    Rational hi;
};

class SturmChain {
public:
    explicit SturmChain(const UniPoly& squarefree);
    /// Number of distinct real roots in the open interval (a, b); requires
    /// that neither endpoint is a root.
    int count_roots(const Rational& a, const Rational& b) const;
    int variations(const Rational& x) const;

private:
    std::vector<UniPoly> chain_;
};

/// All distinct real roots of f (any multiplicities), sorted increasing.
/// Rational roots are identified exactly; irrational roots come with an
/// isolating interval. f must be nonzero.
std::vector<RealRoot> isolate_real_roots(const UniPoly& f);

/// Cauchy bound: all real roots lie in (-B, B).
Rational cauchy_root_bound(const UniPoly& f);

} // namespace rotlab
