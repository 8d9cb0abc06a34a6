#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qseries.hpp"
#include "rational.hpp"

namespace virc1 {

// Basis state of the charge-lattice boson Fock space: a momentum m (the
// Cartan charge, eigenvalue of Q3_0) and an oscillator partition. The
// oscillators b_n obey [b_n, b_m] = (n/2) delta_{n+m,0}, so every matrix
// element below is an exact rational. Energy is m^2 + |partition|.
struct FockState {
    long momentum = 0;
    std::vector<long> partition;  // parts in descending order

    long level() const;
    long energy() const { return momentum * momentum + level(); }

    auto operator<=>(const FockState&) const = default;

    std::string str() const;
};

// Finite exact-rational linear combination of basis states, truncated at a
// fixed energy cutoff. Operations that would create terms above the cutoff
// throw CutoffExceeded instead of silently truncating.
class FockVector {
public:
    explicit FockVector(long cutoff);

    static FockVector vacuum(long cutoff);
    static FockVector basis_state(FockState state, long cutoff);

    long cutoff() const { return cutoff_; }
    const std::map<FockState, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long max_energy() const;  // -1 on the zero vector

    void add_term(const FockState& state, const Rat& coeff);

    friend FockVector operator+(const FockVector& a, const FockVector& b);
    friend FockVector operator-(const FockVector& a, const FockVector& b);
    friend FockVector operator*(const Rat& scalar, const FockVector& v);
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    long cutoff_;
    std::map<FockState, Rat> terms_;
};

// All basis states with |momentum| <= charge_window and energy <= cutoff,
// in canonical order.
std::vector<FockState> enumerate_basis(long charge_window, long cutoff);

// Cartan current modes Q3_n = b_n (b_0 acts as the momentum).
FockVector q3_apply(long n, const FockVector& v);

// Ladder current modes Q+-_n, realized as modes of the lattice vertex
// operators exp(+-2 sum b_{-k} z^k / k) exp(-+2 sum b_k z^{-k} / k) with the
// momentum shift m -> m +- 1 and z-extraction index offset by 2m. The
// cocycle sign is trivial here (even momentum lattice); the commutator
// suite certifies the convention.
FockVector qpm_apply(int sign, long n, const FockVector& v);

// Virasoro modes as the oscillator bilinear L_n = sum_j :b_{n-j} b_j:.
FockVector l_apply(long n, const FockVector& v);

// Shifted generators L_n + 2q Q3_n + q^2 delta_{n,0}.
FockVector deformed_l_apply(const Rat& q, long n, const FockVector& v);

// Sugawara form (1/3) sum_j :(Q3 Q3 + (Q+ Q- + Q- Q+)/2):_j, normal ordered
// by mode index. Agreement with l_apply is a verified property, not an
// input; see the tests.
FockVector sugawara_l_apply(long n, const FockVector& v);

// (Q-_{-2q1})^nu applied to the vacuum: charge -nu, energy 2*q1*nu,
// vanishing exactly when nu > 2q1.
FockVector lowered_vector(const Rat& q1, long nu, long cutoff);

// Exact pairing with b_n^dagger = b_{-n}; basis states are orthogonal with
// norm^2 = prod_k (k/2)^{r_k} r_k!.
Rat inner_product(const FockVector& a, const FockVector& b);

// Character of the charge-C subspace under the shifted Hamiltonian
// L0 + 2q Q3_0 + q^2, assembled by applying the operator to every basis
// state and collecting eigenvalues: offset (q+C)^2, body counts by level.
CharSeries graded_dimension(long charge, const Rat& q, long cutoff);

// Stateless descriptor of a mode operator; lets harness code iterate over
// operator families uniformly.
struct ModeOp {
    enum class Kind { Q3, Qplus, Qminus, L, DeformedL };
    Kind kind = Kind::Q3;
    long index = 0;
    Rat q;  // only for DeformedL

    FockVector apply(const FockVector& v) const;
    std::string str() const;

    auto operator<=>(const ModeOp&) const = default;
};

}  // namespace virc1
