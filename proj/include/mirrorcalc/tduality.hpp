#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorcalc/lattice.hpp"

// Sub-torus calculus on T^n = R^n / Z^n: pure cycles fibering over a base,
// their duals on the mirror torus, and the induced Leray-type grading.

namespace mirrorcalc::tor {

using lat::Lattice;
using lat::Sublattice;

// A cycle sweeping the sub-torus spanned by fiber_lattice over a base of
// dimension base_dim, with covering multiplicity tracked separately so the
// lattice itself stays saturated.
struct PureCycle {
    int n = 0;                // dimension of the ambient torus
    Sublattice fiber_lattice; // saturated subgroup of Z^n
    int base_dim = 0;
    Int multiplicity = 1;

    void validate() const {
        if (n < 1) throw std::invalid_argument("pure cycle: torus dimension must be positive");
        if (fiber_lattice.ambient.rank != n)
            throw std::invalid_argument("pure cycle: fiber lattice does not live in Z^n");
        if (!(fiber_lattice.ambient.gram == IMat::identity(n)))
            throw std::invalid_argument("pure cycle: ambient must be the standard torus lattice");
        if (base_dim < 0 || fiber_lattice.rank() + base_dim != n)
            throw std::invalid_argument("pure cycle: fiber rank plus base dimension must equal n");
        if (multiplicity < 1)
            throw std::invalid_argument("pure cycle: multiplicity must be positive");
        if (!lat::is_saturated(fiber_lattice))
            throw std::invalid_argument("pure cycle: fiber lattice must be saturated");
    }
};

// Cohomology class on the dual torus supported on dual_lattice in (Z^n)*.
struct DualClass {
    int degree = 0;
    Sublattice dual_lattice;
    Int rank_hint = 1; // sheaf rank carried along the dual cycle

    void validate() const {
        if (dual_lattice.ambient.rank < 1)
            throw std::invalid_argument("dual class: torus dimension must be positive");
        if (degree != 2 * dual_lattice.rank())
            throw std::invalid_argument("dual class: degree must be twice the support rank");
        if (rank_hint < 1)
            throw std::invalid_argument("dual class: rank hint must be positive");
    }
};

// Ann(S) = { phi in (Z^n)* : phi(S) = 0 }. Saturation of the input is part of
// the contract: a finite-index sublattice has the same annihilator as its
// saturation, so the drop in information must be made explicit by the caller.
inline Sublattice annihilator(const Sublattice& s) {
    const int n = s.ambient.rank;
    if (!lat::is_saturated(s))
        throw std::invalid_argument("annihilator: sublattice must be saturated");
    IMat ker = integer_kernel(s.basis); // rows phi with s.basis * phi^T = 0
    return Sublattice{lat::standard_zn(n), ker};
}

inline Sublattice double_dual(const Sublattice& s) { return annihilator(annihilator(s)); }

// Fiber codimension: the level of the cycle in the Leray filtration of the
// fibration T^n -> base.
inline int leray_level(const PureCycle& w) {
    w.validate();
    return w.base_dim;
}

// T-duality on pure cycles: the fiber sub-torus is replaced by its annihilator
// on the dual torus, the base direction becomes cohomological degree, and the
// covering multiplicity reappears as the rank of the dual sheaf.
inline DualClass t_dual_cycle(const PureCycle& w) {
    w.validate();
    DualClass d;
    d.degree = 2 * w.base_dim;
    d.dual_lattice = annihilator(w.fiber_lattice);
    d.rank_hint = w.multiplicity;
    d.validate();
    return d;
}

// Degree bound coming from the Leray spectral sequence: a cycle of level k can
// only hit cohomology in degrees <= 2k.
inline bool leray_filtration_check(const std::vector<PureCycle>& cycles,
                                   const std::vector<DualClass>& images) {
    if (cycles.size() != images.size())
        throw std::invalid_argument("leray check: cycle and image lists are misaligned");
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        images[i].validate();
        if (images[i].degree > 2 * leray_level(cycles[i])) return false;
    }
    return true;
}

} // namespace mirrorcalc::tor
