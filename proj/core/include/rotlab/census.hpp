#pragma once

/**
 * @file census.hpp
 * @brief Rotation census of a point set.
 *
 * Every ordered quadruple (a, b, a', b') with distinct pairs and
 * |ab| = |a'b'| > 0 induces the rotation mapping a to a' and b to b'. The
 * census enumerates the quadruples class by class, deduplicates rotations by
 * their exact (p, q) key, and recovers each multiplicity k from the
 * quadruple count c = k(k-1). Ordered convention throughout: a rotation of
 * multiplicity k accounts for exactly k(k-1) quadruples, and
 * sum_i |E_i|(|E_i|-1) counts the quadruples overall, so the two sides of
 * the census identity match with no extra constant.
 *
 * The identity never arises from a quadruple (its pairs would coincide); it
 * is appended only on request. Half-turn rotations are kept and flagged
 * chart_excluded so the N_k tables stay complete.
 */

#include <map>
#include <vector>

#include "rotlab/lift.hpp"
#include "rotlab/motion.hpp"
#include "rotlab/point.hpp"

namespace rotlab {

/// Ordered pairs of distinct points grouped by exact squared distance.
class DistanceClasses {
public:
    using Pair = std::pair<int, int>; // indices into the point set
    using Map = std::map<Rational, std::vector<Pair>>;

    explicit DistanceClasses(Map classes) : classes_(std::move(classes)) {}

    const Map& classes() const { return classes_; }
    int count() const { return static_cast<int>(classes_.size()); }

    /// Number of ordered quadruples: sum_i |E_i| (|E_i| - 1).
    long long quadruple_count() const;

private:
    Map classes_;
};

DistanceClasses distance_classes(const PointSet& s);

/// sum_i |E_i| (|E_i| - 1), the size of the quadruple set K.
long long k_size(const PointSet& s);

/// (s(s-1) - x)^2 / x; the census satisfies k_size >= this for x >= 1.
Rational h1_quadruple_lower_bound(long long s, long long x);

enum class MotionClass { Joint, Flat, Low };

const char* to_string(MotionClass c);

struct CensusEntry {
    Rotation rotation;
    long long multiplicity = 0;    // k
    long long quadruple_count = 0; // c = k(k-1); 0 for an appended identity
    MotionClass classification = MotionClass::Low;
    bool chart_excluded = false;
};

struct CensusOptions {
    bool include_identity = false;
    /// 0 means: ROTLAB_WORKERS if set, else hardware concurrency.
    int workers = 0;
    /// Re-derive k by direct application of each rotation: every entry when
    /// s <= 12, a deterministic sample above.
    bool verify_multiplicities = true;
};

class RotationCensus {
public:
    RotationCensus(std::vector<CensusEntry> entries, long long s, long long x,
                   long long ksize, bool identity_included);

    /// Entries sorted by canonical rotation key.
    const std::vector<CensusEntry>& entries() const { return entries_; }
    bool identity_included() const { return identity_included_; }

    long long point_count() const { return s_; }
    long long distance_class_count() const { return x_; }
    long long quadruple_count() const { return ksize_; }

    long long joint_count() const;
    long long flat_count() const;
    long long chart_excluded_count() const;

    const CensusEntry* find(const Rotation& t) const;

private:
    std::vector<CensusEntry> entries_;
    long long s_ = 0;
    long long x_ = 0;
    long long ksize_ = 0;
    bool identity_included_ = false;
};

RotationCensus rotation_census(const PointSet& s, const CensusOptions& options = {});

/// |{a in S : t(a) in S}| by direct exact application.
long long multiplicity(const Rotation& t, const PointSet& s);

/// Low when multiplicity < 3; Joint when the source set contains three
/// non-collinear points; Flat otherwise.
MotionClass classify(const Rotation& t, const PointSet& s);

/// The source set A_t = {a in S : t(a) in S}.
std::vector<PlanarPoint> source_set(const Rotation& t, const PointSet& s);

/// (N_k, N_{>=k}) histograms keyed by multiplicity.
std::pair<std::map<long long, long long>, std::map<long long, long long>>
nk_tables(const RotationCensus& census);

/// Exact incidence count I(P, C).
long long incidences(const std::vector<Rotation>& rotations,
                     const std::vector<HParabola>& parabolas);

/// Accounting of I(P, C) against sum of multiplicities when C is the full
/// parabola family of S: incidences are lost exactly where t(a) = -a.
struct IncidenceCrossCheck {
    long long incidence_count = 0;
    long long multiplicity_sum = 0;
    long long degenerate_losses = 0;
};

IncidenceCrossCheck incidence_cross_check(const std::vector<Rotation>& rotations,
                                          const PointSet& s);

/// Worker count resolution used by the census: explicit option, else the
/// ROTLAB_WORKERS environment variable, else hardware concurrency.
int resolve_worker_count(int requested);

} // namespace rotlab
