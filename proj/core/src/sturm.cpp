#include "rotlab/sturm.hpp"

#include <algorithm>
#include <deque>

namespace rotlab {

namespace {

// Positive rescale to integer coefficients; unlike primitive_integer this
// never flips signs, so it is safe for Sturm chain elements.
UniPoly positive_primitive(const UniPoly& p) {
    if (p.is_zero()) return p;
    Integer l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    Integer g(0);
    std::vector<Rational> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = p.coeffs()[i] * Rational(l);
        g = gcd(g, r[i].num());
    }
    g = abs(g);
    const Rational ginv = Rational(g).reciprocal();
    for (auto& c : r) c = c * ginv;
    return UniPoly(std::move(r));
}

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

} // namespace

SturmChain::SturmChain(const UniPoly& squarefree) {
    chain_.push_back(positive_primitive(squarefree));
    UniPoly d = squarefree.derivative();
    if (d.is_zero()) return;
    chain_.push_back(positive_primitive(d));
    for (;;) {
        UniPoly r;
        chain_[chain_.size() - 2].divmod(chain_.back(), nullptr, &r);
        if (r.is_zero()) break;
        chain_.push_back(positive_primitive(-r));
    }
}

int SturmChain::variations(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
        const int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
}

Rational cauchy_root_bound(const UniPoly& f) {
    const Rational lead = abs(f.leading());
    Rational m(0);
    for (int i = 0; i < f.degree(); ++i)
        m = std::max(m, abs(f.coeff(i)));
    return Rational(1) + m / lead;
}

namespace {

// Exactly one simple root of g lies in (lo, hi); g(lo), g(hi) != 0. Decide
// whether it is rational, by narrowing until the scaled interval admits at
// most one integer candidate for the monicized polynomial.
RealRoot pin_down(const UniPoly& g, Rational lo, Rational hi) {
    UniPoly gi = positive_primitive(g);
    if (gi.leading().sign() < 0) gi = -gi;
    const Rational lead(gi.leading());

    const int slo = g.eval(lo).sign();
    while ((hi - lo) * lead >= Rational(1)) {
        const Rational m = (lo + hi) / Rational(2);
        const int sm = g.eval(m).sign();
        if (sm == 0) return RealRoot{m, m, m};
        if (sm == slo) lo = m;
        else hi = m;
    }
    // W = lead * Z maps the root to a root of a monic integer polynomial,
    // whose rational roots are integers.
    const Integer w = floor_of(lo * lead) + 1;
    const Rational cand = Rational(w) / lead;
    if (lo < cand && cand < hi && g.eval(cand).is_zero())
        return RealRoot{cand, cand, cand};
    return RealRoot{std::nullopt, lo, hi};
}

void collect_roots(const UniPoly& squarefree, std::vector<RealRoot>* out) {
    const int d = squarefree.degree();
    if (d <= 0) return;
    if (d == 1) {
        const Rational r = -squarefree.coeff(0) / squarefree.coeff(1);
        out->push_back(RealRoot{r, r, r});
        return;
    }
    const Rational bound = cauchy_root_bound(squarefree);
    const SturmChain chain(squarefree);

    struct Span { Rational lo, hi; int count; };
    std::deque<Span> work;
    const int total = chain.count_roots(-bound, bound);
    if (total == 0) return;
    work.push_back({-bound, bound, total});

    while (!work.empty()) {
        Span s = work.front();
        work.pop_front();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out->push_back(pin_down(squarefree, s.lo, s.hi));
            continue;
        }
        const Rational m = (s.lo + s.hi) / Rational(2);
        if (squarefree.eval(m).is_zero()) {
            // Bisection landed on a rational root: record it and carve out a
            // window around it that contains no other root, so the remaining
            // spans keep non-root endpoints.
            out->push_back(RealRoot{m, m, m});
            Rational delta = (s.hi - s.lo) / Rational(4);
            Rational ml = m - delta, mr = m + delta;
            while (squarefree.eval(ml).is_zero() || squarefree.eval(mr).is_zero() ||
                   chain.count_roots(ml, mr) > 1) {
                delta = delta / Rational(2);
                ml = m - delta;
                mr = m + delta;
            }
            work.push_back({s.lo, ml, chain.count_roots(s.lo, ml)});
            work.push_back({mr, s.hi, chain.count_roots(mr, s.hi)});
            continue;
        }
        const int left = chain.count_roots(s.lo, m);
        work.push_back({s.lo, m, left});
        work.push_back({m, s.hi, s.count - left});
    }
}

} // namespace

std::vector<RealRoot> isolate_real_roots(const UniPoly& f) {
    if (f.is_zero()) throw Error("isolate_real_roots: zero polynomial");
    std::vector<RealRoot> roots;
    collect_roots(f.squarefree_part(), &roots);
    std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) {
        return (a.exact ? *a.exact : a.lo) < (b.exact ? *b.exact : b.lo);
    });
    return roots;
}

} // namespace rotlab
