#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"

namespace virc1 {

// Exact rational scalar. Everything in this library is exact; there is no
// floating point on any computational path.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a" with optional sign. Decimal notation is rejected so
// that no precision is ever lost at an input boundary.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    if (text.find('.') != std::string::npos)
        throw ParseError("decimal notation rejected, use \"a/b\": " + text);
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
        throw ParseError("malformed rational literal: " + text);
    auto digits_ok = [](const std::string& s, bool sign_ok) {
        std::size_t i = 0;
        if (sign_ok && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw ParseError("malformed rational literal: " + text);
    Rat r;
    if (r.set_str(num + "/" + den, 10) != 0) throw ParseError("malformed rational literal: " + text);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// True iff 2r is an integer, i.e. r lies on the half-integer grid (1/2)Z.
inline bool is_half_integer(const Rat& r) {
    Rat two_r = 2 * r;
    two_r.canonicalize();
    return is_integer(two_r);
}

// True iff r is in (1/2)N0: a nonnegative half-integer.
inline bool is_half_natural(const Rat& r) { return r >= 0 && is_half_integer(r); }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + rat_str(r));
    if (!r.get_num().fits_slong_p()) throw DomainError("integer out of machine range: " + rat_str(r));
    return r.get_num().get_si();
}

// Exact square root within the nonnegative rationals, when it exists.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat root(sn, sd);
    root.canonicalize();
    return root;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline Rat binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

}  // namespace virc1
