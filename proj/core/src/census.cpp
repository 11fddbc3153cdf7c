#include "rotlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace rotlab {

long long DistanceClasses::quadruple_count() const {
    long long total = 0;
    for (const auto& [d, pairs] : classes_) {
        const long long e = static_cast<long long>(pairs.size());
        total += e * (e - 1);
    }
    return total;
}

DistanceClasses distance_classes(const PointSet& s) {
    DistanceClasses::Map classes;
    const int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            classes[squared_distance(s[i], s[j])].push_back({i, j});
        }
    }
    return DistanceClasses(std::move(classes));
}

long long k_size(const PointSet& s) {
    return distance_classes(s).quadruple_count();
}

Rational h1_quadruple_lower_bound(long long s, long long x) {
    if (x < 1) throw Error("h1_quadruple_lower_bound: x must be >= 1");
    const Rational num = sq(Rational(s) * Rational(s - 1) - Rational(x));
    return num / Rational(x);
}

const char* to_string(MotionClass c) {
    switch (c) {
        case MotionClass::Joint: return "joint";
        case MotionClass::Flat: return "flat";
        case MotionClass::Low: return "low";
    }
    return "?";
}

namespace {

// Sorted-vector membership; cheaper to build than a node-based set and the
// census queries it heavily.
class PointIndex {
public:
    explicit PointIndex(const PointSet& s) : pts_(s.points().begin(), s.points().end()) {
        std::sort(pts_.begin(), pts_.end());
    }
    bool contains(const PlanarPoint& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }

private:
    std::vector<PlanarPoint> pts_;
};

long long recover_multiplicity(long long c) {
    // k(k-1) = c
    long long k = static_cast<long long>((1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(c))) / 2.0);
    for (long long cand : {k - 1, k, k + 1}) {
        if (cand >= 2 && cand * (cand - 1) == c) return cand;
    }
    throw IntegralityViolation("census: quadruple count " + std::to_string(c) +
                               " is not of the form k(k-1)");
}

MotionClass classify_sources(const std::vector<PlanarPoint>& sources) {
    if (sources.size() < 3) return MotionClass::Low;
    const PlanarPoint& p0 = sources[0];
    const PlanarPoint& p1 = sources[1];
    for (std::size_t i = 2; i < sources.size(); ++i) {
        if (!collinear(p0, p1, sources[i])) return MotionClass::Joint;
    }
    return MotionClass::Flat;
}

} // namespace

std::vector<PlanarPoint> source_set(const Rotation& t, const PointSet& s) {
    const PointIndex index(s);
    std::vector<PlanarPoint> sources;
    for (const auto& p : s) {
        if (index.contains(apply_rotation(t, p))) sources.push_back(p);
    }
    return sources;
}

long long multiplicity(const Rotation& t, const PointSet& s) {
    const PointIndex index(s);
    long long k = 0;
    for (const auto& p : s) {
        if (index.contains(apply_rotation(t, p))) ++k;
    }
    return k;
}

MotionClass classify(const Rotation& t, const PointSet& s) {
    return classify_sources(source_set(t, s));
}

int resolve_worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ROTLAB_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

RotationCensus::RotationCensus(std::vector<CensusEntry> entries, long long s, long long x,
                               long long ksize, bool identity_included)
    : entries_(std::move(entries)), s_(s), x_(x), ksize_(ksize),
      identity_included_(identity_included) {}

long long RotationCensus::joint_count() const {
    long long n = 0;
    for (const auto& e : entries_)
        if (e.classification == MotionClass::Joint) ++n;
    return n;
}

long long RotationCensus::flat_count() const {
    long long n = 0;
    for (const auto& e : entries_)
        if (e.classification == MotionClass::Flat) ++n;
    return n;
}

long long RotationCensus::chart_excluded_count() const {
    long long n = 0;
    for (const auto& e : entries_)
        if (e.chart_excluded) ++n;
    return n;
}

const CensusEntry* RotationCensus::find(const Rotation& t) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), t,
        [](const CensusEntry& e, const Rotation& key) { return e.rotation < key; });
    if (it != entries_.end() && it->rotation == t) return &*it;
    return nullptr;
}

RotationCensus rotation_census(const PointSet& s, const CensusOptions& options) {
    const DistanceClasses classes = distance_classes(s);
    const long long ksize = classes.quadruple_count();

    // Work unit: one outer ordered pair of one class, matched against every
    // other pair of its class. Units are dealt round-robin so the merge is a
    // plain commutative sum and the result is worker-count independent.
    struct Unit {
        const std::vector<DistanceClasses::Pair>* pairs;
        std::size_t outer;
    };
    std::vector<Unit> units;
    for (const auto& [d, pairs] : classes.classes()) {
        if (pairs.size() < 2) continue;
        for (std::size_t i = 0; i < pairs.size(); ++i) units.push_back({&pairs, i});
    }

    const int workers = std::max(1, std::min<int>(resolve_worker_count(options.workers),
                                                  static_cast<int>(units.size() ? units.size() : 1)));

    std::vector<std::map<Rotation, long long>> partial(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        auto& mine = partial[static_cast<std::size_t>(w)];
        for (std::size_t u = static_cast<std::size_t>(w); u < units.size();
             u += static_cast<std::size_t>(workers)) {
            const auto& pairs = *units[u].pairs;
            const auto& [ia, ib] = pairs[units[u].outer];
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                if (j == units[u].outer) continue;
                const auto& [ia2, ib2] = pairs[j];
                const Rotation t = rotation_from_two_pairs(s[static_cast<std::size_t>(ia)],
                                                           s[static_cast<std::size_t>(ib)],
                                                           s[static_cast<std::size_t>(ia2)],
                                                           s[static_cast<std::size_t>(ib2)]);
                ++mine[t];
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::map<Rotation, long long> merged;
    for (auto& part : partial) {
        for (const auto& [rot, c] : part) merged[rot] += c;
        part.clear();
    }

    std::vector<CensusEntry> entries;
    entries.reserve(merged.size() + 1);
    long long csum = 0;
    for (const auto& [rot, c] : merged) {
        CensusEntry e;
        e.rotation = rot;
        e.quadruple_count = c;
        e.multiplicity = recover_multiplicity(c);
        e.chart_excluded = rot.is_half_turn_frame();
        e.classification = e.multiplicity >= 3 ? classify(rot, s) : MotionClass::Low;
        csum += c;
        entries.push_back(std::move(e));
    }
    if (csum != ksize)
        throw IntegralityViolation("census: quadruple conservation failed: " +
                                   std::to_string(csum) + " != " + std::to_string(ksize));

    if (options.verify_multiplicities) {
        const std::size_t stride = s.size() <= 12 ? 1 : std::max<std::size_t>(1, entries.size() / 64);
        for (std::size_t i = 0; i < entries.size(); i += stride) {
            const long long direct = multiplicity(entries[i].rotation, s);
            if (direct != entries[i].multiplicity)
                throw IntegralityViolation(
                    "census: recovered k=" + std::to_string(entries[i].multiplicity) +
                    " disagrees with direct multiplicity " + std::to_string(direct));
        }
    }

    if (options.include_identity) {
        CensusEntry e;
        e.rotation = Rotation();
        e.multiplicity = static_cast<long long>(s.size());
        e.quadruple_count = 0; // the identity arises from no quadruple
        e.chart_excluded = false;
        e.classification = classify(e.rotation, s);
        const auto pos = std::lower_bound(
            entries.begin(), entries.end(), e.rotation,
            [](const CensusEntry& a, const Rotation& key) { return a.rotation < key; });
        entries.insert(pos, std::move(e));
    }

    return RotationCensus(std::move(entries), static_cast<long long>(s.size()),
                          classes.count(), ksize, options.include_identity);
}

std::pair<std::map<long long, long long>, std::map<long long, long long>>
nk_tables(const RotationCensus& census) {
    std::map<long long, long long> nk;
    for (const auto& e : census.entries()) ++nk[e.multiplicity];
    std::map<long long, long long> ngeq;
    long long suffix = 0;
    for (auto it = nk.rbegin(); it != nk.rend(); ++it) {
        suffix += it->second;
        ngeq[it->first] = suffix;
    }
    return {std::move(nk), std::move(ngeq)};
}

long long incidences(const std::vector<Rotation>& rotations,
                     const std::vector<HParabola>& parabolas) {
    long long count = 0;
    for (const auto& t : rotations)
        for (const auto& h : parabolas)
            if (incident(t, h)) ++count;
    return count;
}

IncidenceCrossCheck incidence_cross_check(const std::vector<Rotation>& rotations,
                                          const PointSet& s) {
    IncidenceCrossCheck out;
    const PointIndex index(s);
    for (const auto& t : rotations) {
        for (const auto& a : s) {
            const PlanarPoint image = apply_rotation(t, a);
            if (!index.contains(image)) continue;
            ++out.multiplicity_sum;
            if (image == -a) ++out.degenerate_losses; // h_{a,-a} does not exist
            else ++out.incidence_count;
        }
    }
    return out;
}

} // namespace rotlab
