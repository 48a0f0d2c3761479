#pragma once

// Isometries of even unimodular lattices: Eichler transvections and the
// reduction moving a primitive isotropic vector onto a chosen coordinate
// vector of a hyperbolic plane.

#include "mirrorcalc/lattice.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mirrorcalc::lat {

struct Isometry {
    IMat m;

    LatVec operator()(const LatVec& v) const { return mat_vec(m, v); }
};

inline bool is_isometry(const Lattice& l, const IMat& m) {
    if (m.rows() != l.rank || m.cols() != l.rank) return false;
    return m.transpose() * l.gram * m == l.gram;
}

// Eichler transvection x -> x + <x,u>c - <x,c>u - (c^2/2)<x,u>u for isotropic
// u orthogonal to c. Integral whenever c^2 is even.
inline IMat transvection(const Lattice& l, const LatVec& u, const LatVec& c) {
    if (pair(l, u, u) != 0)
        throw std::invalid_argument("transvection: u must be isotropic");
    if (pair(l, u, c) != 0)
        throw std::invalid_argument("transvection: c must be orthogonal to u");
    Int cc = pair(l, c, c);
    if (cc % 2 != 0)
        throw std::invalid_argument("transvection: c has odd square, map is not integral");
    Int half = cc / 2;
    IVec gu = mat_vec(l.gram, u);
    IVec gc = mat_vec(l.gram, c);
    IMat m = IMat::identity(l.rank);
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j)
            m(i, j) += c[i] * gu[j] - u[i] * gc[j] - half * u[i] * gu[j];
    return m;
}

// A hyperbolic plane sitting in coordinates: slots i < j with zero squares,
// pairing +-1 with each other and zero against every other slot.
struct HyperbolicPlane {
    int i = -1;
    int j = -1;
    int sign = 0; // gram(i, j)
};

inline std::vector<HyperbolicPlane> find_hyperbolic_planes(const Lattice& l) {
    std::vector<HyperbolicPlane> out;
    std::vector<bool> used(l.rank, false);
    for (int i = 0; i < l.rank; ++i) {
        if (used[i] || l.gram(i, i) != 0) continue;
        for (int j = i + 1; j < l.rank; ++j) {
            if (used[j] || l.gram(j, j) != 0) continue;
            Int p = l.gram(i, j);
            if (p != 1 && p != -1) continue;
            bool isolated = true;
            for (int k = 0; k < l.rank && isolated; ++k) {
                if (k == i || k == j) continue;
                if (l.gram(i, k) != 0 || l.gram(j, k) != 0) isolated = false;
            }
            if (!isolated) continue;
            out.push_back({i, j, p == 1 ? 1 : -1});
            used[i] = used[j] = true;
            break;
        }
    }
    return out;
}

namespace detail {

// U+U as 2x2 integer matrices: a vector with plane coefficients
// (a1, b1, a2, b2) in normalized bases e1,f1,e2,f2 (each <e,f>=1) maps to
// X = [[a1, -a2], [b2, b1]], and det X is half its square. Left/right
// multiplication by SL2(Z) preserves det, so each pair (A, B) gives an
// isometry of the plane span; these lie in the subgroup generated by
// Eichler transvections between the two planes.
struct PlaneFrame {
    std::array<int, 4> slot;  // e1, f1, e2, f2
    std::array<Int, 4> sgn;   // normalized basis = sgn * unit(slot)
};

inline IMat to_x(const std::array<Int, 4>& c) {
    return IMat{{c[0], -c[2]}, {c[3], c[1]}};
}

inline std::array<Int, 4> from_x(const IMat& x) {
    return {x(0, 0), x(1, 1), -x(0, 1), x(1, 0)};
}

inline std::array<Int, 4> plane_coeffs(const PlaneFrame& fr, const LatVec& v) {
    std::array<Int, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = fr.sgn[k] * v[fr.slot[k]];
    return c;
}

// Full-rank matrix acting by X -> A X B on the planes, identity elsewhere.
inline IMat plane_move(int n, const PlaneFrame& fr, const IMat& a, const IMat& b) {
    IMat p(4, 4);
    for (int k = 0; k < 4; ++k) {
        std::array<Int, 4> unit{Int(0), Int(0), Int(0), Int(0)};
        unit[k] = 1;
        std::array<Int, 4> img = from_x(a * to_x(unit) * b);
        for (int i = 0; i < 4; ++i) p(i, k) = img[i];
    }
    IMat m = IMat::identity(n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(fr.slot[i], fr.slot[j]) = fr.sgn[i] * p(i, j) * fr.sgn[j];
    return m;
}

// Smith form of a 2x2 matrix with both transforms in SL2(Z): flips the sign
// of the second row/column as needed, which at most negates d2.
inline void snf2_sl2(const IMat& x, IMat& a, IMat& b) {
    SnfResult f = smith_normal_form(x);
    a = f.u;
    b = f.v;
    if (det_int(a) < 0) {
        a(1, 0) = -a(1, 0);
        a(1, 1) = -a(1, 1);
    }
    if (det_int(b) < 0) {
        b(0, 1) = -b(0, 1);
        b(1, 1) = -b(1, 1);
    }
}

} // namespace detail

// Moves a primitive isotropic v onto t, where t is (up to sign) a coordinate
// vector of a hyperbolic plane and a second coordinate plane exists. Returns
// g with g(v) = t and g preserving the pairing.
inline Isometry isotropic_to_standard(const Lattice& l, const LatVec& v, const LatVec& t) {
    check_vec(l, v, "isotropic_to_standard");
    check_vec(l, t, "isotropic_to_standard");
    {
        Int d = det_int(l.gram);
        if (d != 1 && d != -1)
            throw std::invalid_argument(
                "isotropic_to_standard: orbit construction fails on non-unimodular input");
    }
    for (int i = 0; i < l.rank; ++i)
        if (l.gram(i, i) % 2 != 0)
            throw std::invalid_argument("isotropic_to_standard: lattice must be even");
    if (is_zero_vec(v) || !is_primitive(v) || !is_isotropic(l, v))
        throw std::invalid_argument("isotropic_to_standard: v must be primitive isotropic");
    if (is_zero_vec(t) || !is_primitive(t) || !is_isotropic(l, t))
        throw std::invalid_argument("isotropic_to_standard: t must be primitive isotropic");

    // t must be a signed unit vector on a slot of some coordinate plane
    int t_slot = -1;
    Int t_sign(0);
    for (int i = 0; i < l.rank; ++i) {
        if (t[i] == 0) continue;
        if (t_slot >= 0 || (t[i] != 1 && t[i] != -1)) { t_slot = -2; break; }
        t_slot = i;
        t_sign = t[i];
    }
    if (t_slot < 0)
        throw std::invalid_argument(
            "isotropic_to_standard: t is not a coordinate vector of a hyperbolic plane");

    auto planes = find_hyperbolic_planes(l);
    int p1 = -1, p2 = -1;
    for (std::size_t k = 0; k < planes.size(); ++k)
        if (planes[k].i == t_slot || planes[k].j == t_slot) { p1 = static_cast<int>(k); break; }
    if (p1 < 0)
        throw std::invalid_argument(
            "isotropic_to_standard: t is not a coordinate vector of a hyperbolic plane");
    for (std::size_t k = 0; k < planes.size(); ++k)
        if (static_cast<int>(k) != p1) { p2 = static_cast<int>(k); break; }
    if (p2 < 0)
        throw std::invalid_argument(
            "isotropic_to_standard: needs a second coordinate hyperbolic plane");

    detail::PlaneFrame fr;
    fr.slot[0] = t_slot;
    fr.slot[1] = planes[p1].i == t_slot ? planes[p1].j : planes[p1].i;
    fr.slot[2] = planes[p2].i;
    fr.slot[3] = planes[p2].j;
    fr.sgn[0] = t_sign;
    fr.sgn[1] = t_sign * planes[p1].sign;
    fr.sgn[2] = 1;
    fr.sgn[3] = planes[p2].sign;

    std::vector<int> kslots;
    for (int i = 0; i < l.rank; ++i)
        if (i != fr.slot[0] && i != fr.slot[1] && i != fr.slot[2] && i != fr.slot[3])
            kslots.push_back(i);

    const int n = l.rank;
    IMat g = IMat::identity(n);
    LatVec w = v;
    auto move_planes = [&]() {
        IMat a(2, 2), b(2, 2);
        detail::snf2_sl2(detail::to_x(detail::plane_coeffs(fr, w)), a, b);
        IMat m = detail::plane_move(n, fr, a, b);
        g = m * g;
        w = mat_vec(m, w);
    };
    auto transvect = [&](const LatVec& u, const LatVec& c) {
        IMat m = transvection(l, u, c);
        g = m * g;
        w = mat_vec(m, w);
    };

    // clear the second plane's coefficients
    move_planes();

    // is there anything left outside the planes?
    bool rest = false;
    for (int k : kslots)
        if (w[k] != 0) { rest = true; break; }

    if (rest) {
        // write the divisor of the orthogonal part into the e2 slot
        IVec gw = mat_vec(l.gram, w);
        IVec vals(kslots.size());
        for (std::size_t i = 0; i < kslots.size(); ++i) vals[i] = gw[kslots[i]];
        VecGcd bez = vector_ext_gcd(vals);
        if (bez.g == 0) throw std::logic_error("isotropic_to_standard: degenerate orthogonal block");
        LatVec cstar(n, Int(0));
        for (std::size_t i = 0; i < kslots.size(); ++i) cstar[kslots[i]] = -bez.coeffs[i];
        LatVec e2(n, Int(0));
        e2[fr.slot[2]] = fr.sgn[2];
        transvect(e2, cstar);

        // fold the divisor into the first plane; primitivity makes the pivot 1
        move_planes();
        if (fr.sgn[0] * w[fr.slot[0]] != 1)
            throw std::logic_error(
                "isotropic_to_standard: orbit construction fails on non-unimodular input");

        // kill the orthogonal part; isotropy clears the f1 slot with it
        LatVec mc(n, Int(0));
        for (int k : kslots) mc[k] = -w[k];
        LatVec f1(n, Int(0));
        f1[fr.slot[1]] = fr.sgn[1];
        transvect(f1, mc);
    }

    if (w != t || !is_isometry(l, g))
        throw std::logic_error("isotropic_to_standard: reduction did not reach the target");
    return {g};
}

} // namespace mirrorcalc::lat
