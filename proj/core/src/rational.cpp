#include "rotlab/rational.hpp"

#include <cctype>

namespace rotlab {

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool parse_integer_token(const std::string& s, std::size_t begin, std::size_t end,
                         bool allow_sign, Integer* out) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (allow_sign && (s[i] == '-' || s[i] == '+')) {
        ++i;
        if (i >= end) return false;
    }
    for (std::size_t j = i; j < end; ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    }
    *out = Integer(s.substr(begin, end - begin));
    return true;
}

} // namespace

Rational Rational::from_string(const std::string& text) {
    const std::size_t slash = text.find('/');
    Integer num, den(1);
    if (slash == std::string::npos) {
        if (!parse_integer_token(text, 0, text.size(), true, &num))
            throw Error("Rational: malformed literal '" + text + "'");
    } else {
        if (!parse_integer_token(text, 0, slash, true, &num) ||
            !parse_integer_token(text, slash + 1, text.size(), false, &den))
            throw Error("Rational: malformed literal '" + text + "'");
        if (den == 0)
            throw Error("Rational: zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

std::size_t Rational::hash() const {
    auto mix = [](std::size_t seed, std::size_t x) {
        return seed ^ (x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    };
    auto hash_mpz = [&](const mpz_class& z) {
        std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x51ab;
        const std::size_t limbs = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < limbs; ++i)
            h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
        return h;
    };
    return mix(hash_mpz(v_.get_num()), hash_mpz(v_.get_den()));
}

bool rational_sqrt(const Rational& r, Rational* root) {
    if (r.sign() < 0) return false;
    const Integer n = r.num(), d = r.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(d.get_mpz_t()) == 0)
        return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(sn, sd);
    return true;
}

} // namespace rotlab
