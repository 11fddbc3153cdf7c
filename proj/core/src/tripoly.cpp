#include "rotlab/tripoly.hpp"

#include <algorithm>

namespace rotlab {

TriPoly TriPoly::monomial(const Rational& c, int i, int j, int k) {
    TriPoly p;
    if (!c.is_zero()) p.terms_[{i, j, k}] = c;
    return p;
}

TriPoly TriPoly::variable(int axis) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    TriPoly p;
    p.terms_[e] = Rational(1);
    return p;
}

int TriPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

Rational TriPoly::coeff(int i, int j, int k) const {
    const auto it = terms_.find({i, j, k});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TriPoly::add_term(const Exponent& e, const Rational& c) {
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TriPoly TriPoly::operator-() const {
    TriPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

TriPoly TriPoly::scaled(const Rational& s) const {
    TriPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
    TriPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        }
    }
    return r;
}

Rational TriPoly::eval(const XYZPoint& pt) const {
    // Cache powers up to the needed exponent per variable.
    auto powers = [](const Rational& v, int maxe) {
        std::vector<Rational> p(static_cast<std::size_t>(maxe) + 1, Rational(1));
        for (int i = 1; i <= maxe; ++i)
            p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * v;
        return p;
    };
    int mx = 0, my = 0, mz = 0;
    for (const auto& [e, c] : terms_) {
        mx = std::max(mx, e[0]);
        my = std::max(my, e[1]);
        mz = std::max(mz, e[2]);
    }
    const auto px = powers(pt.x, mx), py = powers(pt.y, my), pz = powers(pt.z, mz);
    Rational acc(0);
    for (const auto& [e, c] : terms_)
        acc += c * px[static_cast<std::size_t>(e[0])] * py[static_cast<std::size_t>(e[1])] *
               pz[static_cast<std::size_t>(e[2])];
    return acc;
}

TriPoly TriPoly::partial(int axis) const {
    TriPoly r;
    const auto ax = static_cast<std::size_t>(axis);
    for (const auto& [e, c] : terms_) {
        if (e[ax] == 0) continue;
        Exponent d = e;
        d[ax] -= 1;
        r.add_term(d, c * Rational(e[ax]));
    }
    return r;
}

std::array<Rational, 3> TriPoly::gradient_at(const XYZPoint& pt) const {
    return {partial(0).eval(pt), partial(1).eval(pt), partial(2).eval(pt)};
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* names = "XYZ";
    for (const auto& [e, c] : terms_) {
        const Rational a = abs(c);
        const bool any_var = e[0] + e[1] + e[2] > 0;
        std::string term;
        if (a != Rational(1) || !any_var) term = a.to_string();
        for (int v = 0; v < 3; ++v) {
            const int exp = e[static_cast<std::size_t>(v)];
            if (exp == 0) continue;
            if (!term.empty()) term += "*";
            term += names[v];
            if (exp > 1) term += "^" + std::to_string(exp);
        }
        if (out.empty()) out = (c.sign() < 0 ? "-" : "") + term;
        else out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out;
}

TriPoly pi_operator(const TriPoly& p) {
    const TriPoly px = p.partial(0);
    const TriPoly py = p.partial(1);
    const TriPoly pxx = px.partial(0);
    const TriPoly pxy = px.partial(1);
    const TriPoly pyy = py.partial(1);
    return py * py * pxx - (px * py * pxy).scaled(Rational(2)) + px * px * pyy;
}

UniPoly compose_with_parabola(const TriPoly& p, const HParabola& h) {
    const UniPoly xp = h.x_poly();
    const UniPoly yp = h.y_poly();

    // Group terms by X exponent, then by Y exponent, and evaluate by Horner
    // in each variable.
    int max_i = 0;
    for (const auto& [e, c] : p.terms()) max_i = std::max(max_i, e[0]);

    UniPoly acc;
    for (int i = max_i; i >= 0; --i) {
        int max_j = 0;
        for (const auto& [e, c] : p.terms())
            if (e[0] == i) max_j = std::max(max_j, e[1]);
        UniPoly slice;
        for (int j = max_j; j >= 0; --j) {
            UniPoly zpart;
            for (const auto& [e, c] : p.terms()) {
                if (e[0] != i || e[1] != j) continue;
                zpart = zpart + UniPoly::monomial(c, e[2]);
            }
            slice = slice * yp + zpart;
        }
        acc = acc * xp + slice;
    }
    return acc;
}

bool is_critical_parabola(const TriPoly& p, const HParabola& h) {
    if (!vanishes_on_parabola(p, h)) return false;
    for (int axis = 0; axis < 3; ++axis)
        if (!vanishes_on_parabola(p.partial(axis), h)) return false;
    return true;
}

namespace {

UniPoly quad_to_poly(const QuadCoeffs& q) {
    return UniPoly({q[2], q[1], q[0]});
}

} // namespace

std::optional<SpecialForm> is_special_form(const TriPoly& p) {
    // Structure: X and Y appear linearly, never together, and only with
    // Z-degree <= 1; the free part has degree <= 3.
    Rational a1(0), a0(0); // coefficient of X: a1 Z + a0
    Rational b1(0), b0(0); // coefficient of Y: b1 Z + b0
    UniPoly free_part;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] == 1 && e[1] == 0 && e[2] <= 1) {
            (e[2] == 1 ? a1 : a0) = c;
        } else if (e[0] == 0 && e[1] == 1 && e[2] <= 1) {
            (e[2] == 1 ? b1 : b0) = c;
        } else if (e[0] == 0 && e[1] == 0 && e[2] <= 3) {
            free_part = free_part + UniPoly::monomial(c, e[2]);
        } else {
            return std::nullopt;
        }
    }

    // E2 = mu Z - lam multiplies X; -E1 = -(lam Z + mu) multiplies Y.
    const Rational mu = a1;
    const Rational lam = -a0;
    if (lam.is_zero() && mu.is_zero()) return std::nullopt;
    if (b1 != -lam || b0 != -mu) return std::nullopt;

    // The free term must be -(Z^2+1) L(Z) with
    // L = (mu Z + lam) a_1 - (lam Z - mu) a_2 + (mu Z - lam) b_1 - (lam Z + mu) b_2;
    // fixing b = 0 leaves an always-solvable 2x2 system for a.
    const UniPoly z2p1({Rational(1), Rational(0), Rational(1)});
    if (!free_part.divisible_by(z2p1)) return std::nullopt;
    const UniPoly m = free_part.exact_div(z2p1); // degree <= 1
    const Rational m1 = m.coeff(1), m0 = m.coeff(0);
    const Rational det = sq(lam) + sq(mu);
    const PlanarPoint a{(mu * (-m1) + lam * (-m0)) / det,
                        (-lam * (-m1) + mu * (-m0)) / det};
    const PlanarPoint b{Rational(0), Rational(0)};

    SpecialForm out;
    out.lam = lam;
    out.mu = mu;
    out.q3 = {a.x + b.x, Rational(2) * a.y, b.x - a.x};
    out.q4 = {a.y + b.y, Rational(-2) * a.x, b.y - a.y};

    // Reconstruct and compare exactly.
    const UniPoly e1({mu, lam});
    const UniPoly e2({-lam, mu});
    const UniPoly rebuilt = e1 * quad_to_poly(out.q4) - e2 * quad_to_poly(out.q3);
    if (rebuilt != free_part) return std::nullopt;
    return out;
}

TriPoly to_polynomial(const SpecialSurface& sigma) {
    TriPoly p;
    p = p + TriPoly::monomial(sigma.mu(), 1, 0, 1);       // mu XZ
    p = p + TriPoly::monomial(-sigma.lam(), 1, 0, 0);     // -lam X
    p = p + TriPoly::monomial(-sigma.lam(), 0, 1, 1);     // -lam YZ
    p = p + TriPoly::monomial(-sigma.mu(), 0, 1, 0);      // -mu Y
    for (int k = 0; k <= 3; ++k)
        p = p + TriPoly::monomial(sigma.free_cubic().coeff(k), 0, 0, k);
    return p;
}

std::vector<TriPolyTerm> tripoly_terms(const TriPoly& p) {
    std::vector<TriPolyTerm> out;
    out.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms())
        out.push_back({e[0], e[1], e[2], c});
    return out;
}

TriPoly tripoly_from_terms(const std::vector<TriPolyTerm>& terms) {
    TriPoly p;
    for (const auto& t : terms)
        p = p + TriPoly::monomial(t.coeff, t.i, t.j, t.k);
    return p;
}

} // namespace rotlab
