#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "rational.hpp"

namespace virc1 {

// A charge q. Any exact rational; q and -q label the same sector.
struct Charge {
    Rat q;
};

// Superselection sector label: ground state energy h >= 0, with the
// degenerate/continuum dichotomy. Degenerate means h = s^2 for some
// s in (1/2)N0, equivalently 4h is the square of an integer.
struct SectorLabel {
    Rat h;
    bool degenerate = false;
    Rat s;  // meaningful only when degenerate; s = sqrt(h) in (1/2)N0

    static SectorLabel from_h(const Rat& h);

    friend bool operator==(const SectorLabel& a, const SectorLabel& b) {
        return a.h == b.h;  // degenerate/s are derived from h
    }
    friend bool operator<(const SectorLabel& a, const SectorLabel& b) { return a.h < b.h; }

    std::string str() const;
};

// A multiset of sector labels with multiplicities: the output of the fusion
// rule or of a character decomposition. verified_order is the order through
// which a character identity certifies the result (0 if purely formulaic).
struct FusionResult {
    struct Summand {
        SectorLabel sector;
        long multiplicity = 1;
    };
    std::vector<Summand> summands;
    long verified_order = 0;
    // Truncation can never certify absence of sectors above the order; the
    // flag records that the degenerate tower may continue past tail_from.
    bool tail_unresolved = false;
    std::optional<Rat> tail_from;

    long total_multiplicity() const;
    std::string str() const;
};

// Convex weights of the product-state decomposition: the group element
// enters only through r = |k2|^2, with |k1|^2 = 1 - r.
struct MixtureWeights {
    Rat q1;
    Rat r;
    std::vector<Rat> weights;  // indexed by nu = 0..2*q1
};

// Sector classification of a charge: h = q^2, degenerate iff 2q is integer.
SectorLabel classify(const Charge& q);

// c=1 Virasoro character of a sector, through order N:
//   continuum h:      t^h p(t)
//   degenerate s^2:   t^{s^2} (1 - t^{2s+1}) p(t)
CharSeries virasoro_char(const SectorLabel& label, long order);

// Two-variable vacuum character of the affine theory,
//   sum_{j>=0} sum_{m=-j..j} z^m (t^{j^2} - t^{(j+1)^2}) p(t),
// truncated at t-order N. The z-window is floor(sqrt(N)).
BiSeries vacuum_affine_char(long order);

// Collects the z^{-nu} terms of a BiSeries into a CharSeries with offset 0.
// For the vacuum character this telescopes to t^{nu^2} p(t).
CharSeries cartan_slice(const BiSeries& b, long nu);

// Character of the charge -nu subspace under the shifted Hamiltonian
// L0 + 2q Q3_0 + q^2: offset (q - nu)^2, body p(t). Computed through the
// slice-and-substitute route and cross-checked against the closed form on
// every call.
CharSeries twisted_char(const Charge& q_total, long nu, long order);

// Greedy decomposition of a character into degenerate irreducibles (or the
// single continuum irreducible matching its offset). Throws NotDecomposable
// with the offending term as witness if a residual cannot be a tower head.
FusionResult decompose(const CharSeries& c);

// Fusion of a degenerate sector [q1^2], q1 in (1/2)N0, with a continuum
// sector [q2^2], 2*q2 not integer:
//   [q1^2] x [q2^2] = sum_{nu=0..2q1} [(q1 + q2 - nu)^2].
// Coincident energies merge into multiplicity. Throws DomainError outside
// the degenerate x continuum regime, where the rule is not established.
FusionResult fuse(const Charge& q1, const Charge& q2);

// Binomial mixture weights: weight_nu = C(2q1, nu) (1-r)^{2q1-nu} r^nu.
MixtureWeights mixture_weights(const Charge& q1, const Rat& r);

// Energy of the nu-lowered product state: (q1 + q2)^2 - 2 nu q2.
Rat product_state_energy(const Charge& q1, const Charge& q2, long nu);

}  // namespace virc1
