#include "rotlab/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rotlab/census.hpp"
#include "rotlab/experiment.hpp"
#include "rotlab/fit.hpp"
#include "rotlab/generators.hpp"
#include "rotlab/io.hpp"
#include "rotlab/lift.hpp"
#include "rotlab/surface.hpp"
#include "rotlab/tripoly.hpp"

namespace rotlab {

namespace {

struct Checker {
    VerifyReport* report;
    void operator()(bool ok, const std::string& what) {
        ++report->checks;
        if (!ok) {
            if (report->failures.size() < 50) report->failures.push_back(what);
            else if (report->failures.size() == 50)
                report->failures.push_back("... further failures suppressed");
        }
    }
};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rational rational(long num_range = 12, long den_range = 6) {
        const long d = integer(1, den_range);
        return Rational(integer(-num_range * d, num_range * d), d);
    }
    PlanarPoint point() { return {rational(), rational()}; }
    PlanarPoint nonzero_point() {
        for (;;) {
            PlanarPoint p = point();
            if (!p.is_zero()) return p;
        }
    }
    /// Exact unit vector excluding (-1, 0).
    PlanarPoint unit() { return rational_unit_vector(rational()); }
    Rotation rotation() { return Rotation(unit(), point()); }
    HParabola parabola() {
        for (;;) {
            PlanarPoint a = point(), b = point();
            if (b != -a) return HParabola(a, b);
        }
    }
};

using Builder = Rotation (*)(const PlanarPoint&, const PlanarPoint&, const PlanarPoint&,
                             const PlanarPoint&);

// Deliberately wrong: flips the sign of the translation solve.
Rotation broken_builder(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& a2,
                        const PlanarPoint& b2) {
    const Rotation good = rotation_from_two_pairs(a, b, a2, b2);
    return Rotation(good.p(), a2 + cmul(good.p(), a));
}

void run_core(Rng& rng, long long cases, Checker check, bool negative_control) {
    const Builder build = negative_control ? &broken_builder : &rotation_from_two_pairs;
    for (long long i = 0; i < cases; ++i) {
        PlanarPoint a = rng.point(), b = rng.point();
        while (b == a) b = rng.point();
        const Rotation truth = rng.rotation();
        const PlanarPoint a2 = apply_rotation(truth, a);
        const PlanarPoint b2 = apply_rotation(truth, b);
        const Rotation rebuilt = build(a, b, a2, b2);
        check(apply_rotation(rebuilt, a) == a2, "core: round trip lost a -> a'");
        check(apply_rotation(rebuilt, b) == b2, "core: round trip lost b -> b'");
        check(rebuilt == truth, "core: canonical key differs from acting rotation");

        const Rotation other = rng.rotation();
        const Rotation comp = compose(other, rebuilt);
        check(apply_rotation(comp, a) == apply_rotation(other, apply_rotation(rebuilt, a)),
              "core: rotation composition mismatch");
        check(squared_distance(a2, b2) == squared_distance(a, b),
              "core: rotation does not preserve distance");

        const AntiRotation anti(rng.unit(), rng.point());
        check(squared_distance(apply_anti_rotation(anti, a), apply_anti_rotation(anti, b)) ==
                  squared_distance(a, b),
              "core: anti-rotation does not preserve distance");
        const AntiRotation ra = compose(rebuilt, anti);
        check(apply_anti_rotation(ra, a) == apply_rotation(rebuilt, apply_anti_rotation(anti, a)),
              "core: rotation o anti-rotation composition mismatch");
        const Rotation aa = compose(anti, anti);
        check(apply_rotation(aa, a) == apply_anti_rotation(anti, apply_anti_rotation(anti, a)),
              "core: anti o anti composition mismatch");

        // Key equality must coincide with equal action on two non-collinear
        // probes.
        const Rotation different(rebuilt.p(), rebuilt.q() + PlanarPoint{Rational(1), Rational(0)});
        check(apply_rotation(different, a) != apply_rotation(rebuilt, a) ||
                  apply_rotation(different, b) != apply_rotation(rebuilt, b),
              "core: distinct keys act identically");
    }
}

void run_lift(Rng& rng, long long cases, Checker check) {
    for (long long i = 0; i < cases; ++i) {
        const Rotation t = rng.rotation();
        // Forced-incident and random parabolas exercise both directions of
        // the chart equivalence.
        HParabola h = rng.parabola();
        if (i % 2 == 0) {
            const PlanarPoint a = rng.point();
            const PlanarPoint b = apply_rotation(t, a);
            if (b != -a) h = HParabola(a, b);
        }
        const XYZPoint l = lift_rotation(t);
        const bool chart_on =
            h.x_at(l.z) == l.x && h.y_at(l.z) == l.y;
        check(chart_on == incident(t, h), "lift: chart incidence disagrees with action");

        const DualPlane dual = dualize_rotation(t);
        check(dual.contains(dualize_parabola(h)) == incident(t, h),
              "lift: duality does not preserve incidence");

        // Claim 1.4 equivalence at a common rotation.
        PlanarPoint a = rng.point(), c = rng.point(), e = rng.point();
        if (i % 3 == 0) {
            // Force a collinear triple.
            const PlanarPoint dir = rng.nonzero_point();
            c = a + dir;
            e = a + scale(rng.rational(), dir);
        }
        std::set<PlanarPoint> sources{a, c, e};
        if (sources.size() == 3) {
            const PlanarPoint ia = apply_rotation(t, a);
            const PlanarPoint ic = apply_rotation(t, c);
            const PlanarPoint ie = apply_rotation(t, e);
            if (ia != -a && ic != -c && ie != -e) {
                const HParabola ha(a, ia), hc(c, ic), he(e, ie);
                const Rational det = tangent_determinant(tangent_direction(ha, t),
                                                         tangent_direction(hc, t),
                                                         tangent_direction(he, t));
                check(det.is_zero() == collinear(a, c, e),
                      "lift: tangent determinant vs collinearity mismatch");
                if (a != c)
                    check(tangent_direction(ha, t) != tangent_direction(hc, t),
                          "lift: distinct parabolas share a tangent");
            }
        }

        // Pairwise intersection law on a constructed pair.
        PlanarPoint pa = rng.point(), pc = rng.point();
        if (pa != pc) {
            const PlanarPoint pb = apply_rotation(t, pa), pd = apply_rotation(t, pc);
            if (pb != -pa && pd != -pc) {
                const HParabola h1(pa, pb), h2(pc, pd);
                if (h1 != h2) {
                    const auto meet = parabola_intersection(h1, h2);
                    check(meet.has_value(), "lift: constructed intersection missing");
                    if (meet) {
                        check(incident(*meet, h1) && incident(*meet, h2),
                              "lift: intersection not incident to both");
                        check(*meet == t, "lift: intersection differs from builder");
                    }
                }
            }
        }
    }
}

void run_census(Rng& rng, long long cases, Checker check) {
    const long long sets = std::max<long long>(1, cases / 10);
    for (long long i = 0; i < sets; ++i) {
        const int s = static_cast<int>(rng.integer(3, 8));
        const PointSet pts =
            random_points(s, static_cast<std::uint64_t>(rng.integer(0, 1 << 30)), 6, 3);
        CensusOptions opts;
        opts.workers = 1;
        const RotationCensus census = rotation_census(pts, opts);

        long long csum = 0;
        for (const auto& e : census.entries()) {
            csum += e.multiplicity * (e.multiplicity - 1);
            check(e.quadruple_count == e.multiplicity * (e.multiplicity - 1),
                  "census: c != k(k-1)");
            check(multiplicity(e.rotation, pts) == e.multiplicity,
                  "census: direct multiplicity disagrees");
            if (e.multiplicity >= 3 && !e.chart_excluded) {
                // Classification must agree with the tangent-determinant test.
                const auto sources = source_set(e.rotation, pts);
                bool any_noncoplanar = false;
                for (std::size_t x = 0; x < sources.size() && !any_noncoplanar; ++x)
                    for (std::size_t y = x + 1; y < sources.size() && !any_noncoplanar; ++y)
                        for (std::size_t z = y + 1; z < sources.size(); ++z) {
                            const PlanarPoint& a = sources[x];
                            const PlanarPoint& c = sources[y];
                            const PlanarPoint& e2 = sources[z];
                            const PlanarPoint ia = apply_rotation(e.rotation, a);
                            const PlanarPoint ic = apply_rotation(e.rotation, c);
                            const PlanarPoint ie = apply_rotation(e.rotation, e2);
                            if (ia == -a || ic == -c || ie == -e2) continue;
                            const HParabola ha(a, ia), hc(c, ic), he(e2, ie);
                            if (!tangent_determinant(tangent_direction(ha, e.rotation),
                                                     tangent_direction(hc, e.rotation),
                                                     tangent_direction(he, e.rotation))
                                     .is_zero()) {
                                any_noncoplanar = true;
                                break;
                            }
                        }
                check(any_noncoplanar == (e.classification == MotionClass::Joint),
                      "census: classification disagrees with tangent test");
            }
        }
        check(csum == k_size(pts), "census: quadruple identity failed");
        if (census.distance_class_count() >= 1) {
            check(Rational(census.quadruple_count()) >=
                      h1_quadruple_lower_bound(census.point_count(),
                                               census.distance_class_count()),
                  "census: H1 inequality violated");
        }

        CensusOptions two = opts;
        two.workers = 2;
        check(census_to_json_text(rotation_census(pts, two)) == census_to_json_text(census),
              "census: output differs across worker counts");
    }
}

void run_surfaces(Rng& rng, long long cases, Checker check) {
    for (long long i = 0; i < cases; ++i) {
        Rotation tau = rng.rotation();
        PlanarPoint a = rng.point();
        PlanarPoint d = rng.nonzero_point();

        // Regenerate until the five probe family members are non-degenerate.
        bool usable = false;
        while (!usable) {
            usable = true;
            try {
                const SpecialSurface probe = surface_from_rotation_line(tau, a, d);
                for (long t = -2; t <= 2; ++t) probe.family_member(Rational(t));
            } catch (const Error&) {
                usable = false;
                tau = rng.rotation();
                a = rng.point();
                d = rng.nonzero_point();
            }
        }
        const SpecialSurface sigma = surface_from_rotation_line(tau, a, d);

        const Rational z0 = z_of(tau);
        const auto [q1, q2] = direction_quadratics(sigma.provenance().d, sigma.provenance().d_img);
        check(eval_quad(q1, z0).is_zero() && eval_quad(q2, z0).is_zero(),
              "surfaces: Q1(Z0) or Q2(Z0) nonzero");
        const PlanarPoint v = sigma.provenance().d_img;
        check((sigma.e1().eval(z0) * v.x + sigma.e2().eval(z0) * v.y).is_zero(),
              "surfaces: endpoint relation violated");
        check(sigma.free_cubic().divisible_by(UniPoly({Rational(1), Rational(0), Rational(1)})),
              "surfaces: free term not divisible by Z^2+1");

        for (long t = -2; t <= 2; ++t)
            check(contains_parabola(sigma, sigma.family_member(Rational(t))),
                  "surfaces: family member not contained");

        // Characterization through the anti-rotation, both directions.
        const AntiRotation phi = anti_rotation_of(sigma);
        for (int probe = 0; probe < 5; ++probe) {
            const PlanarPoint c = rng.point();
            const PlanarPoint img = apply_anti_rotation(phi, c);
            if (img != -c)
                check(contains_parabola(sigma, HParabola(c, img)),
                      "surfaces: phi image pair not contained");
            const PlanarPoint wrong = img + rng.nonzero_point();
            if (wrong != -c)
                check(!contains_parabola(sigma, HParabola(c, wrong)),
                      "surfaces: non-phi pair contained");
        }

        // Mutual intersection of contained parabolas, and opposite
        // orientation of matched triangles.
        const HParabola m1 = sigma.family_member(Rational(1));
        const HParabola m2 = sigma.family_member(Rational(2));
        if (m1 != m2) {
            const auto meet = parabola_intersection(m1, m2);
            check(meet.has_value(), "surfaces: contained parabolas do not intersect");
        }
        const PlanarPoint t1 = rng.point(), t2 = rng.point(), t3 = rng.point();
        if (!collinear(t1, t2, t3)) {
            const Rational before = orientation(t1, t2, t3);
            const Rational after = orientation(apply_anti_rotation(phi, t1),
                                               apply_anti_rotation(phi, t2),
                                               apply_anti_rotation(phi, t3));
            check(before == -after, "surfaces: anti-rotation does not flip orientation");
        }

        // Crossing bound on a non-contained parabola.
        for (int tries = 0; tries < 4; ++tries) {
            const HParabola h = rng.parabola();
            const CrossingResult cr = crossings(sigma, h);
            if (cr.contained) continue;
            check(cr.roots.size() <= 3, "surfaces: more than three crossings");
            for (const auto& root : cr.roots) {
                if (!root.exact) continue;
                const XYZPoint pt = h.point_at(*root.exact);
                check(sigma.eval(pt).is_zero(), "surfaces: rational crossing not on surface");
            }
            break;
        }

        // A second flat rotation on the surface reproduces it.
        const PlanarPoint c1 = rng.point();
        const PlanarPoint c2 = rng.point();
        const PlanarPoint i1 = apply_anti_rotation(phi, c1);
        const PlanarPoint i2 = apply_anti_rotation(phi, c2);
        if (c1 != c2 && i1 != -c1 && i2 != -c2 && i1 != i2) {
            const HParabola h1(c1, i1), h2(c2, i2);
            if (h1 != h2) {
                const auto meet = parabola_intersection(h1, h2);
                check(meet.has_value(), "surfaces: contained pair without intersection");
                if (meet && !meet->is_half_turn_frame()) {
                    try {
                        const SpecialSurface rebuilt =
                            surface_from_rotation_line(*meet, c1, c2 - c1);
                        check(rebuilt.same_surface(sigma),
                              "surfaces: rebuilt surface differs");
                        check(surface_param(rebuilt) == surface_param(sigma),
                              "surfaces: surface params differ");
                    } catch (const HalfTurnDegenerate&) {
                        // skip; the rebuilt rotation was a half-turn case
                    }
                }
            }
        }
        check(surface_param(sigma) == surface_param(sigma), "surfaces: param not idempotent");
    }
}

void run_polymethod(Rng& rng, long long cases, Checker check) {
    for (long long i = 0; i < cases; ++i) {
        // Fit soundness on a handful of random points.
        std::set<std::pair<std::pair<Rational, Rational>, Rational>> seen;
        std::vector<XYZPoint> pts;
        const int m = static_cast<int>(rng.integer(1, 12));
        while (static_cast<int>(pts.size()) < m) {
            XYZPoint p{rng.rational(), rng.rational(), rng.rational()};
            if (seen.insert({{p.x, p.y}, p.z}).second) pts.push_back(p);
        }
        const TriPoly fitted = fit_vanishing(pts);
        check(!fitted.is_zero(), "polymethod: fit returned zero");
        check(fitted.degree() <= fit_degree_for(pts.size()), "polymethod: fit degree too high");
        for (const auto& p : pts)
            check(fitted.eval(p).is_zero(), "polymethod: fit does not vanish");

        // 2d+1 rule: nine samples of a parabola force vanishing on it.
        const HParabola h = rng.parabola();
        std::vector<XYZPoint> samples;
        std::set<Rational> zs;
        while (samples.size() < 9) {
            const Rational z = rng.rational(8, 4);
            if (zs.insert(z).second) samples.push_back(h.point_at(z));
        }
        const TriPoly on_parabola = fit_vanishing(samples);
        check(2 * on_parabola.degree() + 1 <= 9, "polymethod: sample count too small");
        check(vanishes_on_parabola(on_parabola, h),
              "polymethod: 2d+1 rule failed");

        // Degree bound for Pi.
        const TriPoly pi_p = pi_operator(fitted);
        if (fitted.degree() >= 2)
            check(pi_p.degree() <= 3 * fitted.degree() - 4, "polymethod: deg Pi > 3d-4");

        // Product rule on the zero set of a random linear f.
        const Rational fa = rng.rational(), fb = rng.rational(), fc = rng.rational();
        if (!fa.is_zero() || !fb.is_zero() || !fc.is_zero()) {
            TriPoly f = TriPoly::monomial(fa, 1, 0, 0) + TriPoly::monomial(fb, 0, 1, 0) +
                        TriPoly::monomial(fc, 0, 0, 1) + TriPoly::constant(rng.rational());
            XYZPoint tau{rng.rational(), rng.rational(), Rational(0)};
            if (!fc.is_zero()) {
                tau.z = -(f.coeff(0, 0, 0) + fa * tau.x + fb * tau.y) / fc;
            } else if (!fb.is_zero()) {
                tau.z = rng.rational();
                tau.y = -(f.coeff(0, 0, 0) + fa * tau.x + fc * tau.z) / fb;
            } else {
                tau.z = rng.rational();
                tau.x = -(f.coeff(0, 0, 0) + fb * tau.y + fc * tau.z) / fa;
            }
            check(f.eval(tau).is_zero(), "polymethod: sampled point not on {f=0}");
            const TriPoly g = fitted; // arbitrary nonzero polynomial
            const Rational lhs = pi_operator(f * g).eval(tau);
            const Rational g3 = g.eval(tau) * g.eval(tau) * g.eval(tau);
            const Rational rhs = g3 * pi_operator(f).eval(tau);
            check(lhs == rhs, "polymethod: product rule violated");
        }

        // Special-form round trip through a freshly built surface.
        try {
            const SpecialSurface sigma =
                surface_from_rotation_line(rng.rotation(), rng.point(), rng.nonzero_point());
            const TriPoly sp = to_polynomial(sigma);
            check(pi_operator(sp).is_zero(), "polymethod: Pi of special polynomial nonzero");
            const auto form = is_special_form(sp);
            check(form.has_value(), "polymethod: special form not recognized");
            if (form)
                check(cross({form->lam, form->mu}, {sigma.lam(), sigma.mu()}).is_zero(),
                      "polymethod: recovered (lam:mu) not proportional");
        } catch (const HalfTurnDegenerate&) {
        }

        // Flatness necessary condition at a constructed flat configuration:
        // three parabolas through one rotation, nine samples each (enough
        // for the fitted degree), then Pi must vanish at the rotation.
        if (i % 5 == 0) {
            const Rotation tau = rng.rotation();
            const Rational z0 = z_of(tau);
            const PlanarPoint a = rng.point();
            const PlanarPoint dir = rng.nonzero_point();
            std::vector<XYZPoint> flat_pts;
            bool ok = true;
            for (long t = 0; t < 3 && ok; ++t) {
                const PlanarPoint src = a + scale(Rational(t), dir);
                const PlanarPoint dst = apply_rotation(tau, src);
                if (dst == -src) {
                    ok = false;
                    break;
                }
                const HParabola hp(src, dst);
                // Distinct parabolas share only the point at z0; skipping it
                // keeps all 27 samples distinct.
                int collected = 0;
                for (long j = 1; collected < 9; ++j) {
                    const Rational z(j);
                    if (z == z0) continue;
                    flat_pts.push_back(hp.point_at(z));
                    ++collected;
                }
            }
            if (ok) {
                const TriPoly p = fit_vanishing(flat_pts);
                check(pi_operator(p).eval(lift_rotation(tau)).is_zero(),
                      "polymethod: Pi(p) nonzero at flat rotation");
            }
        }
    }
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"core",     "lift",       "census",
                                                   "surfaces", "polymethod", "all"};
    return names;
}

VerifyReport verify_suite(const std::string& name, const VerifyOptions& options) {
    VerifyReport report;
    report.suite = name;
    report.cases = options.cases;
    Checker check{&report};
    Rng rng(options.seed);

    const bool all = name == "all";
    bool known = all;
    if (all || name == "core") {
        run_core(rng, options.cases, check, options.negative_control);
        known = true;
    }
    if (all || name == "lift") {
        run_lift(rng, options.cases, check);
        known = true;
    }
    if (all || name == "census") {
        run_census(rng, options.cases, check);
        known = true;
    }
    if (all || name == "surfaces") {
        run_surfaces(rng, options.cases, check);
        known = true;
    }
    if (all || name == "polymethod") {
        run_polymethod(rng, options.cases, check);
        known = true;
    }
    if (!known) throw Error("verify_suite: unknown suite '" + name + "'");
    return report;
}

std::string format_verify_report(const VerifyReport& report) {
    std::string out = "suite " + report.suite + ": " + std::to_string(report.checks) +
                      " checks over " + std::to_string(report.cases) + " cases -> " +
                      (report.passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& f : report.failures) out += "  failure: " + f + "\n";
    return out;
}

} // namespace rotlab
