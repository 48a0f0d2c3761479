#pragma once

// Mukai calculus for K3 surfaces: the extended H^0 + H^2 + H^4 lattice with
// its pairing, Chern-character classes, Euler pairings, moduli dimensions,
// and the lattice-level mirror construction (standardize an isotropic class,
// then pass to its perp-mod-span Hodge structure).

#include "mirrorcalc/eichler.hpp"
#include "mirrorcalc/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace mirrorcalc::mukai {

using lat::Isometry;
using lat::Lattice;
using lat::LatVec;

// Class (alpha, beta, gamma) in H^0 + H^2 + H^4.
struct MukaiVector {
    Int alpha;
    IVec beta;
    Int gamma;
};

struct ChernInput {
    Int rank;
    IVec c1;
    Int c2;
};

// Rational period Omega = re + i*im over a designated lattice.
struct PeriodPoint {
    QVec re;
    QVec im;

    void validate(const Lattice& l) const {
        if (static_cast<int>(re.size()) != l.rank || static_cast<int>(im.size()) != l.rank)
            throw std::invalid_argument("period: component length does not match lattice rank");
        Rat rr = lat::pair_q(l, re, re);
        Rat ii = lat::pair_q(l, im, im);
        Rat ri = lat::pair_q(l, re, im);
        if (rr != ii || ri != 0)
            throw std::invalid_argument("period: Omega does not pair to zero with itself");
        if (rr + ii <= 0)
            throw std::invalid_argument("period: Omega pairs nonpositively with its conjugate");
    }
};

// Full Mukai lattice: slot 0 carries H^0, slots 1..r the H^2 lattice, slot
// r+1 carries H^4; the H^0/H^4 plane pairs by -1 (so <v,w> = b.b' - ac' - ca').
struct MukaiLattice {
    Lattice h2;
    Lattice full;
    int r = 0;
};

inline MukaiLattice make_mukai_lattice(const Lattice& h2) {
    h2.validate();
    for (int i = 0; i < h2.rank; ++i)
        if (h2.gram(i, i) % 2 != 0)
            throw std::invalid_argument("mukai lattice: H^2 lattice must be even");
    MukaiLattice ml;
    ml.h2 = h2;
    ml.r = h2.rank;
    Lattice& f = ml.full;
    f.rank = h2.rank + 2;
    f.gram = IMat(f.rank, f.rank);
    f.gram(0, f.rank - 1) = -1;
    f.gram(f.rank - 1, 0) = -1;
    for (int i = 0; i < h2.rank; ++i)
        for (int j = 0; j < h2.rank; ++j) f.gram(1 + i, 1 + j) = h2.gram(i, j);
    f.even = true;
    f.unimodular = h2.unimodular;
    if (!h2.labels.empty()) {
        f.labels.push_back("h0");
        f.labels.insert(f.labels.end(), h2.labels.begin(), h2.labels.end());
        f.labels.push_back("h4");
    }
    return ml;
}

// The K3 case: H^2 = U^3 + E8(-1)^2, full rank 24.
inline MukaiLattice mukai_k3() { return make_mukai_lattice(lat::k3_h2_lattice()); }

inline LatVec to_full(const MukaiLattice& ml, const MukaiVector& v) {
    if (static_cast<int>(v.beta.size()) != ml.r)
        throw std::invalid_argument("mukai vector: beta length does not match the H^2 lattice");
    LatVec out(ml.r + 2);
    out[0] = v.alpha;
    for (int i = 0; i < ml.r; ++i) out[1 + i] = v.beta[i];
    out[ml.r + 1] = v.gamma;
    return out;
}

inline MukaiVector from_full(const MukaiLattice& ml, const LatVec& x) {
    if (static_cast<int>(x.size()) != ml.r + 2)
        throw std::invalid_argument("mukai vector: full coordinate length mismatch");
    MukaiVector v;
    v.alpha = x[0];
    v.beta.assign(x.begin() + 1, x.end() - 1);
    v.gamma = x[ml.r + 1];
    return v;
}

inline Int mukai_pair(const MukaiLattice& ml, const MukaiVector& v, const MukaiVector& w) {
    return lat::pair(ml.full, to_full(ml, v), to_full(ml, w));
}

// v(E) = (rank, c1, rank + c1^2/2 - c2).
inline MukaiVector mukai_vector(const MukaiLattice& ml, const ChernInput& x) {
    if (static_cast<int>(x.c1.size()) != ml.r)
        throw std::invalid_argument("mukai_vector: c1 length does not match the H^2 lattice");
    Int sq = lat::pair(ml.h2, x.c1, x.c1);
    if (sq % 2 != 0)
        throw std::invalid_argument("mukai_vector: c1 has odd self-pairing; the H^2 lattice is not even");
    return {x.rank, x.c1, x.rank + sq / 2 - x.c2};
}

// Riemann-Roch: chi(E,F) = -<v(E), v(F)>.
inline Int euler_pairing(const MukaiLattice& ml, const MukaiVector& v, const MukaiVector& w) {
    return -mukai_pair(ml, v, w);
}

// Moduli of simple sheaves with class v: dimension <v,v> + 2 = 2 - chi(v,v).
inline Int moduli_dimension(const MukaiLattice& ml, const MukaiVector& v) {
    LatVec x = to_full(ml, v);
    if (is_zero_vec(x)) throw std::invalid_argument("moduli_dimension: zero Mukai vector");
    return lat::pair(ml.full, x, x) + 2;
}

// Isometry carrying v to the standard class (0,0,1).
inline Isometry mirror_map_vector(const MukaiLattice& ml, const MukaiVector& v) {
    LatVec t = lat::unit_vec(ml.full.rank, ml.full.rank - 1);
    return lat::isotropic_to_standard(ml.full, to_full(ml, v), t);
}

struct MirrorHodge {
    Lattice lattice;    // v-perp / v
    PeriodPoint period; // image of Omega in the quotient basis
};

// The mirror weight-two Hodge structure: quotient lattice v-perp/v together
// with the image of a period orthogonal to v.
inline MirrorHodge mirror_hodge_structure(const MukaiLattice& ml, const PeriodPoint& omega,
                                          const MukaiVector& v) {
    omega.validate(ml.full);
    const int n = ml.full.rank;
    if (omega.re[0] != 0 || omega.re[n - 1] != 0 || omega.im[0] != 0 || omega.im[n - 1] != 0)
        throw std::invalid_argument("mirror_hodge_structure: Omega must lie in H^2 (zero H^0/H^4 parts)");
    LatVec vf = to_full(ml, v);
    QVec vq = to_rational(vf);
    if (lat::pair_q(ml.full, omega.re, vq) != 0 || lat::pair_q(ml.full, omega.im, vq) != 0)
        throw std::invalid_argument("mirror_hodge_structure: Omega is not orthogonal to v");

    lat::IsotropicQuotient q = lat::quotient_by_isotropic(ml.full, vf);

    // coordinates of Omega in the (lift, v) basis of v-perp
    IMat b(q.lift.rows() + 1, n);
    for (int i = 0; i < q.lift.rows(); ++i)
        for (int j = 0; j < n; ++j) b(i, j) = q.lift(i, j);
    for (int j = 0; j < n; ++j) b(q.lift.rows(), j) = vf[j];
    QMat bt = to_rational(b.transpose());
    auto xre = solve_q(bt, omega.re);
    auto xim = solve_q(bt, omega.im);
    if (!xre || !xim)
        throw std::logic_error("mirror_hodge_structure: period does not lie in v-perp");

    PeriodPoint out;
    out.re.assign(xre->begin(), xre->end() - 1);
    out.im.assign(xim->begin(), xim->end() - 1);
    out.validate(q.quotient);
    return {q.quotient, out};
}

} // namespace mirrorcalc::mukai
