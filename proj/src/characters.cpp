#include "characters.hpp"

#include <algorithm>
#include <sstream>

namespace virc1 {

SectorLabel SectorLabel::from_h(const Rat& h) {
    if (h < 0) throw DomainError("ground state energy must be nonnegative, got " + rat_str(h));
    SectorLabel label;
    label.h = h;
    const auto root = rat_sqrt(h);
    if (root && is_half_natural(*root)) {
        label.degenerate = true;
        label.s = *root;
    } else {
        label.s = Rat(0);
    }
    return label;
}

std::string SectorLabel::str() const {
    std::string out = "[h=" + rat_str(h) + "]";
    if (degenerate) out += " (degenerate, s=" + rat_str(s) + ")";
    return out;
}

long FusionResult::total_multiplicity() const {
    long total = 0;
    for (const auto& s : summands) total += s.multiplicity;
    return total;
}

std::string FusionResult::str() const {
    if (summands.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& s : summands) {
        if (!first) out << " \xE2\x8A\x95 ";  // U+2295 circled plus
        first = false;
        if (s.multiplicity != 1) out << s.multiplicity << "*";
        out << "[h=" << rat_str(s.sector.h) << "]";
    }
    if (tail_unresolved) out << " \xE2\x8A\x95 ...";
    return out.str();
}

SectorLabel classify(const Charge& q) {
    SectorLabel label;
    label.h = q.q * q.q;
    label.degenerate = is_half_integer(q.q);
    label.s = label.degenerate ? Rat(abs(q.q)) : Rat(0);
    return label;
}

CharSeries virasoro_char(const SectorLabel& label, long order) {
    QSeries body = partition_series(order);
    if (label.degenerate) {
        // (1 - t^{(s+1)^2 - s^2}) p(t) = (1 - t^{2s+1}) p(t)
        const long gap = to_long(2 * label.s + 1);
        QSeries factor = QSeries::one(order);
        if (gap <= order) factor.set(gap, Rat(-1));
        body = factor * body;
    }
    return CharSeries(label.h, body);
}

BiSeries vacuum_affine_char(long order) {
    BiSeries out(order);
    const QSeries p = partition_series(order);
    for (long j = 0; j * j <= order; ++j) {
        for (long m = -j; m <= j; ++m) {
            for (const auto& [n, c] : p.coefficients()) {
                if (n + j * j <= order) out.add_to(m, n + j * j, c);
                if (n + (j + 1) * (j + 1) <= order) out.add_to(m, n + (j + 1) * (j + 1), -c);
            }
        }
    }
    return out;
}

CharSeries cartan_slice(const BiSeries& b, long nu) {
    if (nu < 0 || nu > b.z_window())
        throw WindowExceeded("slice " + std::to_string(nu) + " outside z-window " +
                             std::to_string(b.z_window()));
    QSeries body(b.t_order());
    for (const auto& [key, c] : b.coefficients())
        if (key.first == -nu) body.add_to(key.second, c);
    return CharSeries(Rat(0), body);
}

CharSeries twisted_char(const Charge& q_total, long nu, long order) {
    if (nu < 0) throw DomainError("nu must be nonnegative");
    if (order < 0) throw DomainError("order must be nonnegative");
    const Rat q = q_total.q;
    const Rat shifted_offset = (q - nu) * (q - nu);
    const CharSeries closed(shifted_offset, partition_series(order));

    // Slice route: take the z^{-nu} part of the vacuum character, then apply
    // the energy shift t^{q^2} and the substitution z -> t^{2q} (which on the
    // slice contributes t^{-2 q nu}). Exact through order - nu^2.
    if (nu * nu <= order) {
        const CharSeries slice = cartan_slice(vacuum_affine_char(order), nu);
        const CharSeries substituted(q * q - 2 * q * nu + slice.offset(), slice.body());
        if (!(substituted == closed))
            throw Error("twisted character self-check failed at q=" + rat_str(q) +
                        ", nu=" + std::to_string(nu));
    }
    return closed;
}

FusionResult decompose(const CharSeries& input) {
    const CharSeries c = input.canonical();
    FusionResult result;
    result.verified_order = c.order();
    if (c.is_zero()) return result;

    const auto s0_root = rat_sqrt(c.offset());
    const bool degenerate_offset = s0_root && is_half_natural(*s0_root);

    if (!degenerate_offset) {
        // Continuum offset: the only admissible content is the single
        // irreducible with body p(t).
        const QSeries p = partition_series(c.order());
        for (long n = 0; n <= c.order(); ++n) {
            if (c.body().coefficient(n) != p.coefficient(n))
                throw NotDecomposable("body differs from the continuum character",
                                      rat_str(c.body().coefficient(n)) + "*t^" + std::to_string(n) +
                                          " (expected " + rat_str(p.coefficient(n)) + ")");
        }
        result.summands.push_back({SectorLabel::from_h(c.offset()), 1});
        return result;
    }

    const Rat s0 = *s0_root;
    // Strip the p(t) factor: every degenerate character is
    // t^{s^2}(1 - t^{2s+1}) p(t), so body / p(t) telescopes to +-t^e pairs.
    QSeries reduced = c.body() * euler_product(c.order());
    while (!reduced.is_zero()) {
        const long e = reduced.lowest_exponent();
        const Rat coeff = reduced.coefficient(e);
        const Rat h = c.offset() + e;
        const auto s_root = rat_sqrt(h);
        if (!s_root || !is_half_natural(*s_root) || !is_integer(*s_root - s0))
            throw NotDecomposable("residual term at a non-tower exponent",
                                  rat_str(coeff) + "*t^" + std::to_string(e) + " (h=" + rat_str(h) +
                                      ")");
        if (coeff < 0 || !is_integer(coeff))
            throw NotDecomposable("residual leading coefficient is not a positive integer",
                                  rat_str(coeff) + "*t^" + std::to_string(e));
        const Rat s = *s_root;
        reduced.add_to(e, -coeff);
        const Rat upper = (s + 1) * (s + 1) - c.offset();
        if (to_long(upper) <= c.order()) reduced.add_to(to_long(upper), coeff);
        result.summands.push_back({SectorLabel::from_h(h), to_long(coeff)});
    }
    result.tail_unresolved = true;
    result.tail_from = c.offset() + c.order() + 1;
    return result;
}

FusionResult fuse(const Charge& q1, const Charge& q2) {
    if (!is_half_natural(q1.q))
        throw DomainError("fusion requires q1 in (1/2)N0, got " + rat_str(q1.q));
    if (is_half_integer(q2.q))
        throw DomainError("fusion requires a continuum q2 (2*q2 not an integer), got " +
                          rat_str(q2.q) +
                          "; the rule is established only in the degenerate x continuum regime");
    FusionResult result;
    const long two_q1 = to_long(2 * q1.q);
    for (long nu = 0; nu <= two_q1; ++nu) {
        const Rat root = q1.q + q2.q - nu;
        const Rat h = root * root;
        auto it = std::find_if(result.summands.begin(), result.summands.end(),
                               [&](const FusionResult::Summand& s) { return s.sector.h == h; });
        if (it != result.summands.end())
            ++it->multiplicity;
        else
            result.summands.push_back({SectorLabel::from_h(h), 1});
    }
    return result;
}

MixtureWeights mixture_weights(const Charge& q1, const Rat& r) {
    if (!is_half_natural(q1.q))
        throw DomainError("mixture weights require q1 in (1/2)N0, got " + rat_str(q1.q));
    if (r < 0 || r > 1) throw DomainError("r must lie in [0, 1], got " + rat_str(r));
    MixtureWeights out{q1.q, r, {}};
    const long n = to_long(2 * q1.q);
    const Rat one_minus_r = 1 - r;
    for (long nu = 0; nu <= n; ++nu) {
        const Rat w = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(nu)) *
                      rat_pow(one_minus_r, static_cast<unsigned long>(n - nu)) *
                      rat_pow(r, static_cast<unsigned long>(nu));
        out.weights.push_back(w);
    }
    return out;
}

Rat product_state_energy(const Charge& q1, const Charge& q2, long nu) {
    if (!is_half_natural(q1.q))
        throw DomainError("product states require q1 in (1/2)N0, got " + rat_str(q1.q));
    if (nu < 0 || Rat(nu) > 2 * q1.q)
        throw DomainError("nu must lie in [0, 2*q1], got " + std::to_string(nu));
    const Rat total = q1.q + q2.q;
    return total * total - 2 * nu * q2.q;
}

}  // namespace virc1
