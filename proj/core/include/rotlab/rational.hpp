#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalar.
 *
 * Every coordinate in this library is a Rational. The representation is
 * GMP's canonical mpq: always in lowest terms, denominator > 0, zero stored
 * as 0/1. Canonical form is unique per value, so operator== doubles as exact
 * value equality and the (num, den) pair can serve as a hash/ordering key.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

#include "rotlab/errors.hpp"

namespace rotlab {

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(Integer(std::to_string(n))) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den)
        : Rational(Integer(num), Integer(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const Integer num() const { return v_.get_num(); }
    const Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), NoCanon{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), NoCanon{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), NoCanon{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_), NoCanon{});
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) < 0; }
    bool operator<=(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) <= 0; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    Rational reciprocal() const {
        if (is_zero()) throw Error("Rational: reciprocal of zero");
        return Rational(v_.get_den(), v_.get_num());
    }

    double to_double() const { return v_.get_d(); }

    /// "n" when the value is an integer, "n/d" otherwise (d > 0, lowest terms).
    std::string to_string() const;

    /// Strict inverse of to_string. Rejects empty input, "1/0", stray
    /// characters and embedded whitespace; tolerates a non-reduced "2/4".
    static Rational from_string(const std::string& text);

    /// Total bit size of numerator and denominator; used for pivot selection
    /// in exact elimination.
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    }

    std::size_t hash() const;

private:
    struct NoCanon {};
    // mpq arithmetic on canonical operands yields canonical results.
    Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational sq(const Rational& r) { return r * r; }

/// True iff r is the square of a rational; if so, *root is set to the
/// non-negative square root.
bool rational_sqrt(const Rational& r, Rational* root);

} // namespace rotlab

template <>
struct std::hash<rotlab::Rational> {
    std::size_t operator()(const rotlab::Rational& r) const noexcept {
        return r.hash();
    }
};
