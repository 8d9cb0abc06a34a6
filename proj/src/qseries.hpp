#pragma once

#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace virc1 {

// Truncated formal power series in t with exact rational coefficients.
//
// A QSeries is exact through its order N and silent beyond it: operations
// never extrapolate, and arithmetic results carry the minimum order of the
// operands. Stored form is canonical: no zero coefficients, all exponents
// in [0, order].
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(long order) : order_(check_order(order)) {}
    QSeries(long order, std::map<long, Rat> coeffs);

    long order() const { return order_; }
    const std::map<long, Rat>& coefficients() const { return coeffs_; }

    Rat coefficient(long n) const;  // throws ExponentOutOfRange outside [0, order]
    bool is_zero() const { return coeffs_.empty(); }
    // Lowest stored exponent; meaningless on the zero series.
    long lowest_exponent() const;

    void set(long n, const Rat& value);
    void add_to(long n, const Rat& value);

    QSeries truncated(long new_order) const;
    // Multiply by t^k (k >= 0); exponents above the order fall off the end,
    // and the known range does not change.
    QSeries shifted_up(long k) const;

    static QSeries constant(const Rat& value, long order);
    static QSeries one(long order) { return constant(Rat(1), order); }
    static QSeries zero(long order) { return QSeries(order); }

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    std::string str(const std::string& var = "t") const;

private:
    static long check_order(long order);
    long order_ = 0;
    std::map<long, Rat> coeffs_;
};

// Euler generating function of integer partitions, prod_n (1-t^n)^{-1},
// through order N. Coefficients are the partition counts p(0..N).
QSeries partition_series(long order);

// prod_{n=1..N} (1 - t^n) truncated at order N; exact inverse of
// partition_series through the common order.
QSeries euler_product(long order);

// A character: t^offset times an integer-exponent series. The offset is an
// exact rational, so ground state energies h = q^2 stay exact.
class CharSeries {
public:
    CharSeries() = default;
    CharSeries(Rat offset, QSeries body) : offset_(std::move(offset)), body_(std::move(body)) {}

    const Rat& offset() const { return offset_; }
    const QSeries& body() const { return body_; }
    long order() const { return body_.order(); }
    bool is_zero() const { return body_.is_zero(); }

    // Canonical form: the body has a nonzero constant term (the lowest term
    // is absorbed into the offset). The zero series canonicalizes to offset 0.
    CharSeries canonical() const;

    // Coefficient of t^e with e an absolute (possibly rational) exponent.
    Rat coefficient_at(const Rat& e) const;

    // Rebase both operands to the smaller offset and combine bodies; the
    // result order is the honest exactness bound after shifting. Throws
    // IncompatibleOffsets when the offsets differ by a non-integer.
    static CharSeries combine(const CharSeries& a, const CharSeries& b, int sign);

    friend CharSeries operator+(const CharSeries& a, const CharSeries& b) {
        return combine(a, b, +1);
    }
    friend CharSeries operator-(const CharSeries& a, const CharSeries& b) {
        return combine(a, b, -1);
    }

    // Equality of canonical forms, term by term through the common order.
    friend bool operator==(const CharSeries& a, const CharSeries& b);

    std::string str() const;

private:
    Rat offset_ = Rat(0);
    QSeries body_;
};

// Two-variable truncated series in z (Cartan charge, integer Laurent
// exponents) and t (energy level). Houses Tr z^{Q3_0} t^{L0}-type data.
// The z-window |m| <= floor(sqrt(N)) is derived from the t-order: the
// grading bound n >= m^2 makes larger charges invisible below order N.
class BiSeries {
public:
    explicit BiSeries(long t_order);

    long t_order() const { return t_order_; }
    long z_window() const { return z_window_; }
    const std::map<std::pair<long, long>, Rat>& coefficients() const { return coeffs_; }

    Rat coefficient(long m, long n) const;
    void add_to(long m, long n, const Rat& value);

    // True iff every stored term satisfies the grading bound n >= m^2.
    bool grading_bound_holds() const;

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.t_order_ == b.t_order_ && a.coeffs_ == b.coeffs_;
    }

private:
    long t_order_;
    long z_window_;
    std::map<std::pair<long, long>, Rat> coeffs_;
};

}  // namespace virc1
