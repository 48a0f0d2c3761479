#pragma once

// Gromov-Witten data on a graded space: the symmetric trilinear tensors per
// effective class, their validity axioms, the induced degree-raising maps,
// and the quantum product.

#include "mirrorcalc/graded.hpp"
#include "mirrorcalc/series.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirrorcalc::avhs {

using ser::SeriesMat;
using ser::TruncatedSeries;

struct EffectiveClass {
    std::vector<int> exponents;

    int degree() const {
        int s = 0;
        for (int e : exponents) s += e;
        return s;
    }

    void validate(int r) const {
        if (static_cast<int>(exponents.size()) != r)
            throw std::invalid_argument("effective class: exponent count must match the framing rank");
        bool nz = false;
        for (int e : exponents) {
            if (e < 0) throw std::invalid_argument("effective class: negative exponent");
            if (e != 0) nz = true;
        }
        if (!nz) throw std::invalid_argument("effective class: the zero class is not effective");
    }

    friend bool operator==(const EffectiveClass& a, const EffectiveClass& b) {
        return a.exponents == b.exponents;
    }
};

// symmetric trilinear tensor on flattened basis indices; entries are stored
// under sorted keys and conflicting duplicates are kept for diagnostics
class TrilinearMap {
public:
    void add(int a, int b, int c, const Rat& v) {
        std::array<int, 3> k = canon(a, b, c);
        auto it = vals_.find(k);
        if (it == vals_.end()) {
            if (v != 0) vals_.emplace(k, v);
        } else if (it->second != v) {
            std::ostringstream os;
            os << "conflicting values for entry (" << k[0] << "," << k[1] << "," << k[2] << "): "
               << rat_to_string(it->second) << " vs " << rat_to_string(v);
            conflicts_.push_back(os.str());
        }
    }

    Rat get(int a, int b, int c) const {
        auto it = vals_.find(canon(a, b, c));
        return it == vals_.end() ? Rat(0) : it->second;
    }

    const std::map<std::array<int, 3>, Rat>& entries() const { return vals_; }
    const std::vector<std::string>& conflicts() const { return conflicts_; }
    bool empty() const { return vals_.empty(); }

private:
    static std::array<int, 3> canon(int a, int b, int c) {
        std::array<int, 3> k{a, b, c};
        std::sort(k.begin(), k.end());
        return k;
    }

    std::map<std::array<int, 3>, Rat> vals_;
    std::vector<std::string> conflicts_;
};

struct GWData {
    GradedSpace space;
    int r = 0; // framing rank, must equal dim H^{1,1}
    TrilinearMap classical;
    std::vector<std::pair<EffectiveClass, TrilinearMap>> invariants;
    std::vector<std::pair<EffectiveClass, QMat>> gammas; // optional, precomputed
    int cutoff = 0;
};

// shape-level checks; violations are malformed input, not math verdicts
inline void check_shape(const GWData& g) {
    g.space.validate();
    int h11 = g.space.n >= 1 ? g.space.dims[1] : 0;
    if (g.r != h11)
        throw std::invalid_argument("gw data: framing rank must equal dim H^{1,1}");
    if (g.cutoff < 0) throw std::invalid_argument("gw data: negative cutoff");
    const int t = g.space.total();
    auto check_indices = [&](const TrilinearMap& m, const char* who) {
        for (const auto& [k, v] : m.entries()) {
            (void)v;
            for (int idx : k)
                if (idx < 0 || idx >= t)
                    throw std::invalid_argument(std::string("gw data: ") + who
                                                + " entry index out of range");
        }
    };
    check_indices(g.classical, "classical");
    for (std::size_t i = 0; i < g.invariants.size(); ++i) {
        g.invariants[i].first.validate(g.r);
        check_indices(g.invariants[i].second, "invariant");
        for (std::size_t j = 0; j < i; ++j)
            if (g.invariants[j].first == g.invariants[i].first)
                throw std::invalid_argument("gw data: duplicate effective class");
    }
    for (const auto& [eta, m] : g.gammas) {
        eta.validate(g.r);
        if (m.rows() != t || m.cols() != t)
            throw std::invalid_argument("gw data: precomputed map has wrong shape");
    }
}

// classical trilinear value with the unit-slot convention built in:
// a pairing when one slot is the identity class
inline Rat classical_value(const GWData& g, int a, int b, int c) {
    if (a == 0) return g.space.pairing(b, c);
    if (b == 0) return g.space.pairing(a, c);
    if (c == 0) return g.space.pairing(a, b);
    return g.classical.get(a, b, c);
}

struct PhiReport {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void fail(std::string msg) {
        ok = false;
        diagnostics.push_back(std::move(msg));
    }
};

// The validity axioms: symmetry (no conflicting duplicates), the degree
// constraint deg A + deg B + deg C = n, unit-slot normalization (classical
// entries with the identity reproduce the pairing; quantum ones vanish), and
// for every eta the divisor relation on degree-one test classes: the ratio
// phi_eta(A,B,C)/(eta.C) must not depend on C, and entries with eta.C = 0
// must vanish.
inline PhiReport validate_phi_report(const GWData& g) {
    check_shape(g);
    PhiReport rep;
    const GradedSpace& sp = g.space;
    const int n = sp.n;

    for (const std::string& c : g.classical.conflicts())
        rep.fail("classical tensor not symmetric: " + c);
    for (const auto& [k, v] : g.classical.entries()) {
        int ds = sp.degree_of(k[0]) + sp.degree_of(k[1]) + sp.degree_of(k[2]);
        if (ds != n) {
            std::ostringstream os;
            os << "classical entry (" << k[0] << "," << k[1] << "," << k[2]
               << ") violates the degree constraint (degrees sum to " << ds << ", not " << n << ")";
            rep.fail(os.str());
            continue;
        }
        if (k[0] == 0 && v != sp.pairing(k[1], k[2])) {
            std::ostringstream os;
            os << "classical entry (0," << k[1] << "," << k[2]
               << ") must equal the pairing " << rat_to_string(sp.pairing(k[1], k[2]));
            rep.fail(os.str());
        }
    }

    for (const auto& [eta, phi] : g.invariants) {
        std::ostringstream tag;
        tag << "class (";
        for (std::size_t i = 0; i < eta.exponents.size(); ++i)
            tag << (i ? "," : "") << eta.exponents[i];
        tag << ")";

        for (const std::string& c : phi.conflicts())
            rep.fail(tag.str() + ": tensor not symmetric: " + c);
        for (const auto& [k, v] : phi.entries()) {
            int ds = sp.degree_of(k[0]) + sp.degree_of(k[1]) + sp.degree_of(k[2]);
            if (ds != n) {
                std::ostringstream os;
                os << tag.str() << ": entry (" << k[0] << "," << k[1] << "," << k[2]
                   << ") violates the degree constraint";
                rep.fail(os.str());
                continue;
            }
            if (k[0] == 0 && v != 0) {
                std::ostringstream os;
                os << tag.str() << ": entry with the identity class must vanish, got "
                   << rat_to_string(v);
                rep.fail(os.str());
            }
        }

        // divisor relation over the degree-one basis
        if (n < 1) continue;
        const int off1 = sp.offset(1);
        const int t = sp.total();
        for (int a = 0; a < t; ++a) {
            for (int b = a; b < t; ++b) {
                if (sp.degree_of(a) + sp.degree_of(b) != n - 1) continue;
                bool have = false;
                Rat ref(0);
                int ref_c = -1;
                for (int j = 0; j < g.r; ++j) {
                    int cidx = off1 + j;
                    Rat val = phi.get(a, b, cidx);
                    if (eta.exponents[j] == 0) {
                        if (val != 0) {
                            std::ostringstream os;
                            os << tag.str() << ": entry (" << a << "," << b << "," << cidx
                               << ") must vanish since the class misses that divisor";
                            rep.fail(os.str());
                        }
                        continue;
                    }
                    Rat ratio = val / Rat(eta.exponents[j]);
                    if (!have) {
                        have = true;
                        ref = ratio;
                        ref_c = cidx;
                    } else if (ratio != ref) {
                        std::ostringstream os;
                        os << tag.str() << ": value for (" << a << "," << b
                           << ") depends on the degree-one test class (C=" << ref_c << " gives "
                           << rat_to_string(ref) << ", C=" << cidx << " gives "
                           << rat_to_string(ratio) << ")";
                        rep.fail(os.str());
                    }
                }
            }
        }
    }
    return rep;
}

inline bool validate_phi(const GWData& g) { return validate_phi_report(g).ok; }

// cup product of two basis classes, coordinates in the flattened space,
// recovered from the classical tensor by inverting the pairing
inline QVec cup(const GWData& g, int a, int b) {
    const GradedSpace& sp = g.space;
    QVec out(sp.total(), Rat(0));
    if (a == 0) { out[b] = 1; return out; }
    if (b == 0) { out[a] = 1; return out; }
    int l = sp.degree_of(a) + sp.degree_of(b);
    if (l > sp.n) return out;
    int dim = sp.dims[l];
    QVec rhs(dim);
    const int offc = sp.offset(sp.n - l);
    for (int j = 0; j < dim; ++j) rhs[j] = classical_value(g, a, b, offc + j);
    auto pinv = inverse_q(sp.pairings[l].transpose());
    if (!pinv) throw std::invalid_argument("cup: degenerate pairing");
    QVec x = mat_vec(*pinv, rhs);
    for (int i = 0; i < dim; ++i) out[sp.offset(l) + i] = x[i];
    return out;
}

// matrix of cup product with the j-th degree-one generator
inline QMat ad_matrix(const GWData& g, int j) {
    const GradedSpace& sp = g.space;
    if (sp.n < 1 || j < 0 || j >= g.r)
        throw std::invalid_argument("ad_matrix: direction out of range");
    const int t = sp.total();
    const int e = sp.offset(1) + j;
    QMat m(t, t);
    for (int k = 0; k < t; ++k) {
        QVec col = cup(g, e, k);
        for (int i = 0; i < t; ++i) m(i, k) = col[i];
    }
    return m;
}

// degree-raising map of an effective class: Gamma(A).B = phi(A,B,C)/(eta.C)
inline QMat gamma_from_phi(const GWData& g, const EffectiveClass& eta) {
    const GradedSpace& sp = g.space;
    eta.validate(g.r);
    for (const auto& [e, m] : g.gammas)
        if (e == eta) return m;

    const TrilinearMap* phi = nullptr;
    for (const auto& [e, m] : g.invariants)
        if (e == eta) { phi = &m; break; }

    const int t = sp.total();
    QMat out(t, t);
    if (!phi) return out;

    int cj = -1;
    for (int j = 0; j < g.r; ++j)
        if (eta.exponents[j] != 0) { cj = j; break; }
    if (cj < 0) throw std::invalid_argument("gamma_from_phi: class pairs to zero with every divisor");
    const int cidx = sp.offset(1) + cj;
    const Rat ec(eta.exponents[cj]);

    for (int a = 0; a < t; ++a) {
        int l = sp.degree_of(a) + 1;
        if (l > sp.n) continue;
        int dim = sp.dims[l];
        const int offb = sp.offset(sp.n - l);
        QVec rhs(dim);
        bool nz = false;
        for (int j = 0; j < dim; ++j) {
            rhs[j] = phi->get(a, offb + j, cidx) / ec;
            if (rhs[j] != 0) nz = true;
        }
        if (!nz) continue;
        auto pinv = inverse_q(sp.pairings[l].transpose());
        if (!pinv) throw std::invalid_argument("gamma_from_phi: degenerate pairing");
        QVec x = mat_vec(*pinv, rhs);
        for (int i = 0; i < dim; ++i) out(sp.offset(l) + i, a) = x[i];
    }
    return out;
}

// quantum product of two basis classes: series-valued coordinates, with
// (A*B).C = (A cup B).C + sum_eta phi_eta(A,B,C) q^eta
inline std::vector<TruncatedSeries> quantum_product(const GWData& g, int a, int b, int d) {
    const GradedSpace& sp = g.space;
    const int t = sp.total();
    std::vector<TruncatedSeries> out(t, TruncatedSeries(g.r, d));
    int l = sp.degree_of(a) + sp.degree_of(b);
    if (l > sp.n) return out;

    QVec cab = cup(g, a, b);
    for (int i = 0; i < t; ++i)
        if (cab[i] != 0) out[i] += TruncatedSeries::constant(g.r, d, cab[i]);

    const int dim = sp.dims[l];
    const int offc = sp.offset(sp.n - l);
    auto pinv = inverse_q(sp.pairings[l].transpose());
    if (!pinv) throw std::invalid_argument("quantum_product: degenerate pairing");
    for (const auto& [eta, phi] : g.invariants) {
        if (eta.degree() > d) continue;
        QVec rhs(dim);
        bool nz = false;
        for (int j = 0; j < dim; ++j) {
            rhs[j] = phi.get(a, b, offc + j);
            if (rhs[j] != 0) nz = true;
        }
        if (!nz) continue;
        QVec x = mat_vec(*pinv, rhs);
        for (int i = 0; i < dim; ++i)
            if (x[i] != 0)
                out[sp.offset(l) + i].add_term(eta.exponents, x[i]);
    }
    return out;
}

struct AssocReport {
    bool ok = true;
    std::string first_failure;
};

// (A*B)*C = A*(B*C) over the whole basis, to degree d
inline AssocReport associativity_report(const GWData& g, int d) {
    const GradedSpace& sp = g.space;
    const int t = sp.total();
    std::vector<std::vector<TruncatedSeries>> star(static_cast<std::size_t>(t) * t);
    auto star_of = [&](int a, int b) -> const std::vector<TruncatedSeries>& {
        auto& slot = star[static_cast<std::size_t>(std::min(a, b)) * t + std::max(a, b)];
        if (slot.empty()) slot = quantum_product(g, a, b, d);
        return slot;
    };

    AssocReport rep;
    for (int a = 0; a < t && rep.ok; ++a)
        for (int b = a; b < t && rep.ok; ++b)
            for (int c = b; c < t && rep.ok; ++c) {
                std::vector<TruncatedSeries> lhs(t, TruncatedSeries(g.r, d));
                std::vector<TruncatedSeries> rhs(t, TruncatedSeries(g.r, d));
                const auto& ab = star_of(a, b);
                const auto& bc = star_of(b, c);
                for (int m = 0; m < t; ++m) {
                    if (!ab[m].is_zero()) {
                        const auto& mc = star_of(m, c);
                        for (int i = 0; i < t; ++i)
                            if (!mc[i].is_zero()) lhs[i] += ab[m] * mc[i];
                    }
                    if (!bc[m].is_zero()) {
                        const auto& am = star_of(a, m);
                        for (int i = 0; i < t; ++i)
                            if (!am[i].is_zero()) rhs[i] += bc[m] * am[i];
                    }
                }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails on basis triple (" << a << "," << b << "," << c << ")";
                    for (int i = 0; i < t; ++i) {
                        if (lhs[i] == rhs[i]) continue;
                        TruncatedSeries diff = lhs[i] - rhs[i];
                        const auto& [expo, coeff] = *diff.terms().begin();
                        os << "; component " << i << " differs by " << rat_to_string(coeff)
                           << " at monomial q^(";
                        for (std::size_t k = 0; k < expo.size(); ++k)
                            os << (k ? "," : "") << expo[k];
                        os << ")";
                        break;
                    }
                    rep.ok = false;
                    rep.first_failure = os.str();
                }
            }
    return rep;
}

inline bool associativity_check(const GWData& g, int d) { return associativity_report(g, d).ok; }

} // namespace mirrorcalc::avhs
