#pragma once

// Integral lattices with symmetric bilinear forms: the value types and the
// sublattice calculus (saturation, orthogonal complements, isotropic
// quotients, hyperbolic partners).

#include "mirrorcalc/linalg.hpp"
#include "mirrorcalc/normal_form.hpp"
#include "mirrorcalc/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorcalc::lat {

using LatVec = IVec;

struct Lattice {
    int rank = 0;
    IMat gram;                       // symmetric rank x rank
    std::vector<std::string> labels; // optional, size rank when present
    bool even = false;
    bool unimodular = false;

    void validate() const {
        if (gram.rows() != rank || gram.cols() != rank)
            throw std::invalid_argument("lattice: gram shape does not match rank");
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                if (gram(i, j) != gram(j, i))
                    throw std::invalid_argument("lattice: gram matrix is not symmetric");
        if (!labels.empty() && static_cast<int>(labels.size()) != rank)
            throw std::invalid_argument("lattice: label count does not match rank");
        if (even)
            for (int i = 0; i < rank; ++i)
                if (gram(i, i) % 2 != 0)
                    throw std::invalid_argument("lattice: even flag but odd diagonal entry");
        if (unimodular) {
            Int d = det_int(gram);
            if (d != 1 && d != -1)
                throw std::invalid_argument("lattice: unimodular flag but |det| != 1");
        }
    }
};

inline void check_vec(const Lattice& l, const LatVec& v, const char* who) {
    if (static_cast<int>(v.size()) != l.rank)
        throw std::invalid_argument(std::string(who) + ": vector length does not match lattice rank");
}

inline Int pair(const Lattice& l, const LatVec& u, const LatVec& v) {
    check_vec(l, u, "pair");
    check_vec(l, v, "pair");
    Int s(0);
    for (int i = 0; i < l.rank; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < l.rank; ++j)
            if (l.gram(i, j) != 0 && v[j] != 0) s += u[i] * l.gram(i, j) * v[j];
    }
    return s;
}

inline Rat pair_q(const Lattice& l, const QVec& u, const QVec& v) {
    if (static_cast<int>(u.size()) != l.rank || static_cast<int>(v.size()) != l.rank)
        throw std::invalid_argument("pair: vector length does not match lattice rank");
    Rat s(0);
    for (int i = 0; i < l.rank; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < l.rank; ++j)
            if (l.gram(i, j) != 0 && v[j] != 0) s += u[i] * Rat(l.gram(i, j)) * v[j];
    }
    return s;
}

inline bool is_primitive(const LatVec& v) {
    if (is_zero_vec(v)) throw std::invalid_argument("is_primitive: zero vector");
    Int g(0);
    for (const Int& x : v) g = gcd_int(g, x);
    return g == 1;
}

inline bool is_isotropic(const Lattice& l, const LatVec& v) {
    return pair(l, v, v) == 0;
}

// A sublattice of a fixed ambient lattice, held as a Hermite-reduced basis
// so equal sublattices compare equal.
struct Sublattice {
    Lattice ambient;
    IMat basis; // rows are basis vectors, full row rank, Hermite form

    int rank() const { return basis.rows(); }
};

inline Sublattice make_sublattice(const Lattice& ambient, const IMat& rows) {
    if (rows.cols() != ambient.rank)
        throw std::invalid_argument("sublattice: basis vectors do not live in the ambient lattice");
    HnfResult h = hermite_normal_form(rows);
    if (h.rank != rows.rows())
        throw std::invalid_argument("sublattice: basis rows are dependent");
    IMat b(h.rank, rows.cols());
    for (int i = 0; i < h.rank; ++i)
        for (int j = 0; j < rows.cols(); ++j) b(i, j) = h.h(i, j);
    return {ambient, b};
}

inline bool is_saturated(const Sublattice& s) {
    SnfResult f = smith_normal_form(s.basis);
    if (f.rank != s.basis.rows())
        throw std::invalid_argument("sublattice: basis rows are dependent");
    for (int i = 0; i < f.rank; ++i)
        if (f.d(i, i) != 1) return false;
    return true;
}

// Saturation: (Q-span of S) ∩ Z^n. Basis rows come from the inverse Smith
// column transform, then get Hermite-canonicalized.
inline Sublattice saturate(const Sublattice& s) {
    SnfResult f = smith_normal_form(s.basis);
    if (f.rank != s.basis.rows())
        throw std::invalid_argument("saturate: basis rows are dependent");
    IMat vinv = unimodular_inverse(f.v);
    IMat rows(f.rank, s.ambient.rank);
    for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < s.ambient.rank; ++j) rows(i, j) = vinv(i, j);
    return make_sublattice(s.ambient, rows);
}

inline void check_same_ambient(const Sublattice& a, const Sublattice& b, const char* who) {
    if (a.ambient.rank != b.ambient.rank || !(a.ambient.gram == b.ambient.gram))
        throw std::invalid_argument(std::string(who) + ": ambient lattices differ");
}

// Subgroup generated by both; not saturated in general.
inline Sublattice sum_sublattices(const Sublattice& a, const Sublattice& b) {
    check_same_ambient(a, b, "sum_sublattices");
    const int n = a.ambient.rank;
    IMat stacked(a.rank() + b.rank(), n);
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < n; ++j) stacked(i, j) = a.basis(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < n; ++j) stacked(a.rank() + i, j) = b.basis(i, j);
    HnfResult h = hermite_normal_form(stacked);
    IMat rows(h.rank, n);
    for (int i = 0; i < h.rank; ++i)
        for (int j = 0; j < n; ++j) rows(i, j) = h.h(i, j);
    return Sublattice{a.ambient, rows};
}

// A ∩ B via the kernel of the stacked relation matrix: x = α A = β B.
inline Sublattice intersect_sublattices(const Sublattice& a, const Sublattice& b) {
    check_same_ambient(a, b, "intersect_sublattices");
    const int n = a.ambient.rank, ra = a.rank(), rb = b.rank();
    IMat rel(n, ra + rb); // columns: basis vectors of A, then of B
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < ra; ++i) rel(j, i) = a.basis(i, j);
        for (int i = 0; i < rb; ++i) rel(j, ra + i) = -b.basis(i, j);
    }
    IMat ker = integer_kernel(rel); // rows (α | β) with α A = β B
    IMat rows(ker.rows(), n);
    for (int i = 0; i < ker.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            Int s(0);
            for (int t = 0; t < ra; ++t) s += ker(i, t) * a.basis(t, j);
            rows(i, j) = s;
        }
    return make_sublattice(a.ambient, rows);
}

// { x : <x, v> = 0 }, always saturated.
inline Sublattice orthogonal_complement(const Lattice& l, const LatVec& v) {
    check_vec(l, v, "orthogonal_complement");
    if (is_zero_vec(v)) throw std::invalid_argument("orthogonal_complement: zero vector");
    IMat w(1, l.rank);
    IVec gv = mat_vec(l.gram, v);
    for (int j = 0; j < l.rank; ++j) w(0, j) = gv[j];
    IMat k = integer_kernel(w);
    return Sublattice{l, k};
}

struct IsotropicQuotient {
    Lattice quotient;  // v-perp / v with the induced form
    IMat lift;         // rows: ambient representatives of the quotient basis
    LatVec v;
};

// v-perp modulo v for a primitive isotropic v. The lift rows, together with
// v itself, form a basis of v-perp.
inline IsotropicQuotient quotient_by_isotropic(const Lattice& l, const LatVec& v) {
    check_vec(l, v, "quotient_by_isotropic");
    if (is_zero_vec(v)) throw std::invalid_argument("quotient_by_isotropic: zero vector");
    if (!is_primitive(v)) throw std::invalid_argument("quotient_by_isotropic: vector is not primitive");
    if (!is_isotropic(l, v)) throw std::invalid_argument("quotient_by_isotropic: vector is not isotropic");

    Sublattice c = orthogonal_complement(l, v);
    const int rc = c.rank();

    // fast path: v is (up to sign) one of the complement basis rows
    int hit = -1;
    for (int i = 0; i < rc && hit < 0; ++i) {
        bool plus = true, minus = true;
        for (int j = 0; j < l.rank; ++j) {
            if (c.basis(i, j) != v[j]) plus = false;
            if (c.basis(i, j) != -v[j]) minus = false;
        }
        if (plus || minus) hit = i;
    }

    IMat lift(rc - 1, l.rank);
    if (hit >= 0) {
        for (int i = 0, k = 0; i < rc; ++i) {
            if (i == hit) continue;
            for (int j = 0; j < l.rank; ++j) lift(k, j) = c.basis(i, j);
            ++k;
        }
    } else {
        // coordinates of v in the complement basis (integral: c is saturated)
        auto x = solve_q(to_rational(c.basis.transpose()), to_rational(v));
        if (!x) throw std::logic_error("quotient_by_isotropic: v not in its own orthogonal complement");
        IVec xi(rc);
        for (int i = 0; i < rc; ++i) {
            if (!is_integer((*x)[i]))
                throw std::logic_error("quotient_by_isotropic: non-integral coordinates in saturated complement");
            xi[i] = numer((*x)[i]);
        }
        IMat w = complete_to_basis(xi); // first row = xi
        IMat nb = w * c.basis;          // first row = v
        for (int i = 1; i < rc; ++i)
            for (int j = 0; j < l.rank; ++j) lift(i - 1, j) = nb(i, j);
    }

    Lattice q;
    q.rank = rc - 1;
    q.gram = IMat(rc - 1, rc - 1);
    for (int i = 0; i < rc - 1; ++i)
        for (int j = 0; j < rc - 1; ++j) q.gram(i, j) = pair(l, lift.row(i), lift.row(j));
    q.even = l.even;
    q.unimodular = l.unimodular;
    if (!l.labels.empty() && hit >= 0) {
        for (int i = 0; i < rc - 1; ++i) {
            // keep coordinate labels when lift rows are plain unit vectors
            int unit = -1;
            bool is_unit = true;
            for (int j = 0; j < l.rank && is_unit; ++j) {
                if (lift(i, j) == 0) continue;
                if ((lift(i, j) == 1 || lift(i, j) == -1) && unit < 0) unit = j;
                else is_unit = false;
            }
            if (is_unit && unit >= 0) q.labels.push_back(l.labels[unit]);
            else { q.labels.clear(); break; }
        }
    }
    q.validate();
    return {q, lift, v};
}

// Some w with <v, w> = 1. Errors when the pairing values of v are not coprime.
inline LatVec find_dual_partner(const Lattice& l, const LatVec& v) {
    check_vec(l, v, "find_dual_partner");
    if (is_zero_vec(v)) throw std::invalid_argument("find_dual_partner: zero vector");
    IVec gv = mat_vec(l.gram, v);
    VecGcd e = vector_ext_gcd(gv);
    if (e.g != 1)
        throw std::invalid_argument("find_dual_partner: pairing values of v generate "
                                    + e.g.str() + "Z, not Z");
    return e.coeffs;
}

// ---- standard lattices -------------------------------------------------

inline Lattice lattice_U() {
    Lattice l;
    l.rank = 2;
    l.gram = IMat{{Int(0), Int(1)}, {Int(1), Int(0)}};
    l.even = true;
    l.unimodular = true;
    return l;
}

// Hyperbolic-type plane with pairing -1 between the two generators; this is
// the H^0/H^4 block of the K3 Mukai pairing.
inline Lattice lattice_mukai_plane() {
    Lattice l;
    l.rank = 2;
    l.gram = IMat{{Int(0), Int(-1)}, {Int(-1), Int(0)}};
    l.even = true;
    l.unimodular = true;
    return l;
}

inline Lattice lattice_E8(int sign) {
    // E8 Cartan matrix (bonds 1-3-4-5-6-7-8 with node 2 hanging off node 4).
    static const int cartan[8][8] = {
        { 2,  0, -1,  0,  0,  0,  0,  0},
        { 0,  2,  0, -1,  0,  0,  0,  0},
        {-1,  0,  2, -1,  0,  0,  0,  0},
        { 0, -1, -1,  2, -1,  0,  0,  0},
        { 0,  0,  0, -1,  2, -1,  0,  0},
        { 0,  0,  0,  0, -1,  2, -1,  0},
        { 0,  0,  0,  0,  0, -1,  2, -1},
        { 0,  0,  0,  0,  0,  0, -1,  2}};
    if (sign != 1 && sign != -1) throw std::invalid_argument("lattice_E8: sign must be +1 or -1");
    Lattice l;
    l.rank = 8;
    l.gram = IMat(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) l.gram(i, j) = Int(sign * cartan[i][j]);
    l.even = true;
    l.unimodular = true;
    return l;
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    Lattice l;
    l.rank = a.rank + b.rank;
    l.gram = IMat(l.rank, l.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) l.gram(i, j) = a.gram(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) l.gram(a.rank + i, a.rank + j) = b.gram(i, j);
    l.even = a.even && b.even;
    l.unimodular = a.unimodular && b.unimodular;
    if (!a.labels.empty() && !b.labels.empty()) {
        l.labels = a.labels;
        l.labels.insert(l.labels.end(), b.labels.begin(), b.labels.end());
    }
    return l;
}

// Z^n with the standard dot product (ambient for the torus calculus).
inline Lattice standard_zn(int n) {
    Lattice l;
    l.rank = n;
    l.gram = IMat::identity(n);
    l.unimodular = true;
    return l;
}

// U^3 + E8(-1)^2: the K3 second-cohomology lattice.
inline Lattice k3_h2_lattice() {
    Lattice l = direct_sum(lattice_U(), direct_sum(lattice_U(), lattice_U()));
    l = direct_sum(l, direct_sum(lattice_E8(-1), lattice_E8(-1)));
    return l;
}

inline LatVec unit_vec(int n, int slot, Int value = Int(1)) {
    LatVec v(n, Int(0));
    v[slot] = value;
    return v;
}

} // namespace mirrorcalc::lat
