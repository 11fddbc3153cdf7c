#include "rotlab/fit.hpp"

#include <algorithm>
#include <set>

namespace rotlab {

namespace {

long long binom3(long long n) { return n * (n - 1) * (n - 2) / 6; }

std::vector<TriPoly::Exponent> monomials_up_to(int degree) {
    std::vector<TriPoly::Exponent> out;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j)
            for (int k = 0; i + j + k <= degree; ++k)
                out.push_back({i, j, k});
    std::sort(out.begin(), out.end());
    return out;
}

Integer int_pow(const Integer& base, int e) {
    Integer r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

int fit_degree_for(std::size_t point_count) {
    int d = 0;
    while (binom3(static_cast<long long>(d) + 3) <= static_cast<long long>(point_count)) ++d;
    return d;
}

TriPoly fit_vanishing(const std::vector<XYZPoint>& points) {
    const std::size_t m = points.size();
    if (m == 0) throw Error("fit_vanishing: no points");
    if (m > kMaxFitPoints)
        throw CapacityExceeded("fit_vanishing: " + std::to_string(m) + " points exceeds cap of " +
                               std::to_string(kMaxFitPoints));
    {
        std::set<std::pair<std::pair<Rational, Rational>, Rational>> seen;
        for (const auto& p : points)
            if (!seen.insert({{p.x, p.y}, p.z}).second)
                throw Error("fit_vanishing: duplicate point");
    }

    const int degree = fit_degree_for(m);
    const auto monos = monomials_up_to(degree);
    const std::size_t cols = monos.size();

    // Evaluation matrix, row-scaled to integers: clearing each point's
    // denominators turns the monomial row into integer values
    // num_x^i num_y^j num_z^k * (denominator cofactors).
    std::vector<std::vector<Integer>> a(m, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < m; ++r) {
        const Integer nx = points[r].x.num(), dx = points[r].x.den();
        const Integer ny = points[r].y.num(), dy = points[r].y.den();
        const Integer nz = points[r].z.num(), dz = points[r].z.den();
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& [i, j, k] = monos[c];
            a[r][c] = int_pow(nx, i) * int_pow(dx, degree - i) *
                      int_pow(ny, j) * int_pow(dy, degree - j) *
                      int_pow(nz, k) * int_pow(dz, degree - k);
        }
    }

    // Fraction-free (Bareiss) elimination with full pivoting; the pivot is
    // the smallest nonzero entry by bit size, which keeps growth down.
    std::vector<std::size_t> colperm(cols);
    for (std::size_t c = 0; c < cols; ++c) colperm[c] = c;
    Integer prev_pivot(1);
    std::size_t rank = 0;
    for (; rank < m && rank < cols; ++rank) {
        std::size_t best_r = m, best_c = cols;
        std::size_t best_bits = 0;
        for (std::size_t r = rank; r < m; ++r) {
            for (std::size_t c = rank; c < cols; ++c) {
                const Integer& v = a[r][colperm[c]];
                if (v == 0) continue;
                const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
                if (best_r == m || bits < best_bits) {
                    best_r = r;
                    best_c = c;
                    best_bits = bits;
                }
            }
        }
        if (best_r == m) break; // remaining block is zero
        std::swap(a[rank], a[best_r]);
        std::swap(colperm[rank], colperm[best_c]);

        const Integer pivot = a[rank][colperm[rank]];
        for (std::size_t r = rank + 1; r < m; ++r) {
            const Integer factor = a[r][colperm[rank]];
            if (factor == 0 && pivot == prev_pivot) continue;
            for (std::size_t c = rank; c < cols; ++c) {
                Integer v = pivot * a[r][colperm[c]] - factor * a[rank][colperm[c]];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                a[r][colperm[c]] = v;
            }
        }
        prev_pivot = pivot;
    }

    // rank < cols always (the system is underdetermined by construction of
    // the degree); free variable = first non-pivot column.
    std::vector<Rational> x(cols, Rational(0));
    x[colperm[rank]] = Rational(1);
    for (std::size_t i = rank; i-- > 0;) {
        Rational acc(0);
        for (std::size_t c = i + 1; c < cols; ++c) {
            if (x[colperm[c]].is_zero()) continue;
            acc += Rational(a[i][colperm[c]]) * x[colperm[c]];
        }
        x[colperm[i]] = -acc / Rational(a[i][colperm[i]]);
    }

    TriPoly p;
    for (std::size_t c = 0; c < cols; ++c) {
        if (x[c].is_zero()) continue;
        p = p + TriPoly::monomial(x[c], monos[c][0], monos[c][1], monos[c][2]);
    }

    if (p.is_zero()) throw Error("fit_vanishing: produced the zero polynomial");
    for (const auto& pt : points)
        if (!p.eval(pt).is_zero())
            throw Error("fit_vanishing: fitted polynomial does not vanish on an input point");
    return p;
}

} // namespace rotlab
