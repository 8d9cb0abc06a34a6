#include "qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace virc1 {

long QSeries::check_order(long order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return order;
}

QSeries::QSeries(long order, std::map<long, Rat> coeffs) : order_(check_order(order)) {
    for (auto& [n, c] : coeffs) {
        if (n < 0 || n > order_) throw ExponentOutOfRange("exponent outside [0, order]");
        if (c != 0) coeffs_.emplace(n, std::move(c));
    }
}

Rat QSeries::coefficient(long n) const {
    if (n < 0 || n > order_)
        throw ExponentOutOfRange("coefficient " + std::to_string(n) + " outside [0, " +
                                 std::to_string(order_) + "]");
    const auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

long QSeries::lowest_exponent() const {
    if (coeffs_.empty()) throw DomainError("zero series has no lowest exponent");
    return coeffs_.begin()->first;
}

void QSeries::set(long n, const Rat& value) {
    if (n < 0 || n > order_) throw ExponentOutOfRange("exponent outside [0, order]");
    if (value == 0)
        coeffs_.erase(n);
    else
        coeffs_[n] = value;
}

void QSeries::add_to(long n, const Rat& value) {
    if (n < 0 || n > order_) throw ExponentOutOfRange("exponent outside [0, order]");
    auto [it, inserted] = coeffs_.emplace(n, value);
    if (!inserted) it->second += value;
    if (it->second == 0) coeffs_.erase(it);
}

QSeries QSeries::truncated(long new_order) const {
    QSeries r(std::min(order_, check_order(new_order)));
    for (const auto& [n, c] : coeffs_)
        if (n <= r.order_) r.coeffs_.emplace(n, c);
    return r;
}

QSeries QSeries::shifted_up(long k) const {
    if (k < 0) throw DomainError("shift must be nonnegative");
    QSeries r(order_);
    for (const auto& [n, c] : coeffs_)
        if (n + k <= order_) r.coeffs_.emplace(n + k, c);
    return r;
}

QSeries QSeries::constant(const Rat& value, long order) {
    QSeries r(order);
    if (value != 0) r.coeffs_.emplace(0, value);
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (const auto& [n, c] : a.coeffs_)
        if (n <= r.order_) r.add_to(n, c);
    for (const auto& [n, c] : b.coeffs_)
        if (n <= r.order_) r.add_to(n, c);
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(order_);
    for (const auto& [n, c] : coeffs_) r.coeffs_.emplace(n, -c);
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (const auto& [n, c] : a.coeffs_) {
        if (n > r.order_) break;
        for (const auto& [m, d] : b.coeffs_) {
            if (n + m > r.order_) break;
            r.add_to(n + m, c * d);
        }
    }
    return r;
}

std::string QSeries::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [n, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        if (n == 0)
            out << rat_str(c);
        else if (c == 1)
            out << var << "^" << n;
        else
            out << rat_str(c) << "*" << var << "^" << n;
    }
    return out.str();
}

QSeries partition_series(long order) {
    // Coin-change recurrence over part sizes; p(n) lands at t^n.
    QSeries r = QSeries::one(order);
    std::vector<Rat> p(static_cast<std::size_t>(order) + 1, Rat(0));
    p[0] = 1;
    for (long part = 1; part <= order; ++part)
        for (long n = part; n <= order; ++n) p[n] += p[n - part];
    for (long n = 1; n <= order; ++n) r.set(n, p[n]);
    return r;
}

QSeries euler_product(long order) {
    QSeries r = QSeries::one(order);
    for (long n = 1; n <= order; ++n) {
        QSeries factor = QSeries::one(order);
        factor.set(n, Rat(-1));
        r = r * factor;
    }
    return r;
}

CharSeries CharSeries::canonical() const {
    if (body_.is_zero()) return CharSeries(Rat(0), QSeries::zero(body_.order()));
    const long low = body_.lowest_exponent();
    if (low == 0) return *this;
    QSeries shifted(body_.order() - low);
    for (const auto& [n, c] : body_.coefficients()) shifted.set(n - low, c);
    return CharSeries(offset_ + low, shifted);
}

Rat CharSeries::coefficient_at(const Rat& e) const {
    const Rat rel = e - offset_;
    if (!is_integer(rel))
        throw ExponentOutOfRange("exponent " + rat_str(e) + " not on the offset grid of " +
                                 rat_str(offset_));
    const long n = to_long(rel);
    return body_.coefficient(n);  // throws ExponentOutOfRange outside [0, order]
}

CharSeries CharSeries::combine(const CharSeries& a, const CharSeries& b, int sign) {
    const Rat gap = a.offset_ - b.offset_;
    if (!is_integer(gap))
        throw IncompatibleOffsets("offsets " + rat_str(a.offset_) + " and " + rat_str(b.offset_) +
                                  " differ by a non-integer");
    const Rat base = std::min(a.offset_, b.offset_);
    const long shift_a = to_long(a.offset_ - base);
    const long shift_b = to_long(b.offset_ - base);
    // Shifting a body up by k keeps it exact through order + k.
    const long order = std::min(a.order() + shift_a, b.order() + shift_b);
    QSeries body(order);
    for (const auto& [n, c] : a.body_.coefficients())
        if (n + shift_a <= order) body.add_to(n + shift_a, c);
    for (const auto& [n, c] : b.body_.coefficients())
        if (n + shift_b <= order) body.add_to(n + shift_b, sign > 0 ? c : Rat(-c));
    return CharSeries(base, body);
}

bool operator==(const CharSeries& a, const CharSeries& b) {
    const CharSeries ca = a.canonical();
    const CharSeries cb = b.canonical();
    if (ca.is_zero() && cb.is_zero()) return true;
    if (ca.is_zero() != cb.is_zero()) return false;
    if (ca.offset() != cb.offset()) return false;
    const long order = std::min(ca.order(), cb.order());
    for (long n = 0; n <= order; ++n)
        if (ca.body().coefficient(n) != cb.body().coefficient(n)) return false;
    return true;
}

std::string CharSeries::str() const {
    if (is_zero()) return "0";
    return "t^(" + rat_str(offset_) + ") * (" + body_.str() + ")";
}

BiSeries::BiSeries(long t_order) : t_order_(t_order) {
    if (t_order < 0) throw DomainError("t-order must be nonnegative");
    z_window_ = static_cast<long>(std::sqrt(static_cast<double>(t_order)));
    while (z_window_ * z_window_ > t_order) --z_window_;
    while ((z_window_ + 1) * (z_window_ + 1) <= t_order) ++z_window_;
}

Rat BiSeries::coefficient(long m, long n) const {
    const auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void BiSeries::add_to(long m, long n, const Rat& value) {
    if (n < 0 || n > t_order_) throw ExponentOutOfRange("t-exponent outside [0, t_order]");
    if (m < -z_window_ || m > z_window_) throw WindowExceeded("z-exponent outside the window");
    auto [it, inserted] = coeffs_.emplace(std::make_pair(m, n), value);
    if (!inserted) it->second += value;
    if (it->second == 0) coeffs_.erase(it);
}

bool BiSeries::grading_bound_holds() const {
    for (const auto& [key, c] : coeffs_) {
        (void)c;
        if (key.second < key.first * key.first) return false;
    }
    return true;
}

}  // namespace virc1
