#include "rotlab/unipoly.hpp"

#include <algorithm>

namespace rotlab {

UniPoly UniPoly::monomial(Rational c, int k) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& z) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& d, UniPoly* q, UniPoly* r) const {
    if (d.is_zero()) throw Error("UniPoly: division by zero polynomial");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot;
    const int dd = d.degree();
    const Rational lead_inv = d.leading().reciprocal();
    int rd = degree();
    if (rd >= dd) quot.assign(static_cast<std::size_t>(rd - dd) + 1, Rational(0));
    while (rd >= dd) {
        const Rational f = rem[static_cast<std::size_t>(rd)] * lead_inv;
        quot[static_cast<std::size_t>(rd - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(rd - dd + i)] -= f * d.c_[static_cast<std::size_t>(i)];
        rem.pop_back();
        rd = static_cast<int>(rem.size()) - 1;
        while (rd >= 0 && rem[static_cast<std::size_t>(rd)].is_zero()) {
            rem.pop_back();
            --rd;
        }
    }
    if (q) *q = UniPoly(std::move(quot));
    if (r) *r = UniPoly(std::move(rem));
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    UniPoly q, r;
    divmod(d, &q, &r);
    if (!r.is_zero()) throw Error("UniPoly: inexact division");
    return q;
}

bool UniPoly::divisible_by(const UniPoly& d) const {
    UniPoly r;
    divmod(d, nullptr, &r);
    return r.is_zero();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r;
        a.divmod(b, nullptr, &r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().reciprocal());
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() <= 1) return *this;
    const UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return exact_div(g);
}

UniPoly UniPoly::primitive_integer() const {
    if (is_zero()) return *this;
    Integer l(1);
    for (const auto& c : c_) l = lcm(l, c.den());
    Integer g(0);
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * Rational(l);
        g = ::gcd(g, r[i].num());
    }
    g = ::abs(g);
    if (r.back().sign() < 0) g = -g;
    const Rational ginv = Rational(g).reciprocal();
    for (auto& c : r) c = c * ginv;
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        const Rational a = abs(c);
        const bool unit = (a == Rational(1)) && i > 0;
        if (!unit) out += a.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace rotlab
