#pragma once

// The logarithmic A-model connection built from GW data, flatness and
// Griffiths checks, presentations of variations with filtrations, and gauge
// equivalence of presentations under logarithmic coordinate changes.

#include "mirrorcalc/gw.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mirrorcalc::avhs {

// N_j(q) = ad(e^j) + sum_eta e^j(eta) * (q^eta/(1-q^eta)) * Gamma_eta
inline SeriesMat connection_operator(const GWData& g, int j, int d) {
    if (j < 0 || j >= g.r) throw std::invalid_argument("connection_operator: direction out of range");
    SeriesMat n = SeriesMat::from_constant(ad_matrix(g, j), g.r, d);
    for (const auto& [eta, phi] : g.invariants) {
        (void)phi;
        if (eta.exponents[j] == 0 || eta.degree() > d) continue;
        TruncatedSeries cover =
            TruncatedSeries::geometric(g.r, d, eta.exponents).scaled(Rat(eta.exponents[j]));
        QMat gm = gamma_from_phi(g, eta);
        for (int a = 0; a < gm.rows(); ++a)
            for (int b = 0; b < gm.cols(); ++b)
                if (gm(a, b) != 0) n(a, b) += cover.scaled(gm(a, b));
    }
    return n;
}

// boundary value of the connection: cup product with the j-th generator
inline QMat residue(const GWData& g, int j) { return ad_matrix(g, j); }

struct FlatnessReport {
    bool ok = true;
    std::string first_failure;
};

// curvature components theta_i(N_j) - theta_j(N_i) + [N_i, N_j] to degree d
inline FlatnessReport flatness_report(const GWData& g, int d) {
    FlatnessReport rep;
    if (g.r <= 1) return rep;
    std::vector<SeriesMat> ops;
    ops.reserve(g.r);
    for (int j = 0; j < g.r; ++j) ops.push_back(connection_operator(g, j, d));
    for (int i = 0; i < g.r && rep.ok; ++i)
        for (int j = i + 1; j < g.r && rep.ok; ++j) {
            SeriesMat curv = ops[j].theta(i) - ops[i].theta(j) + ops[i] * ops[j] - ops[j] * ops[i];
            if (!curv.is_zero()) {
                rep.ok = false;
                rep.first_failure = "curvature component (" + std::to_string(i) + ","
                                    + std::to_string(j) + ") does not vanish";
            }
        }
    return rep;
}

inline bool flatness_check(const GWData& g, int d) { return flatness_report(g, d).ok; }

// a variation presented by per-direction logarithmic operators and a
// decreasing filtration; `sub` optionally designates a sub-variation
struct ConnectionPresentation {
    int total = 0;
    int nvars = 0;
    int cutoff = 0;
    std::vector<SeriesMat> ops;   // size nvars, each total x total
    std::vector<QMat> filtration; // filtration[p] rows span the p-th level
    std::optional<QMat> sub;      // rows span a designated sub-variation

    void check_shape() const {
        if (static_cast<int>(ops.size()) != nvars)
            throw std::invalid_argument("presentation: need one operator per direction");
        for (const auto& n : ops)
            if (n.rows != total || n.cols != total || n.nvars != nvars || n.cutoff != cutoff)
                throw std::invalid_argument("presentation: operator shape mismatch");
        for (const auto& f : filtration)
            if (f.cols() != total)
                throw std::invalid_argument("presentation: filtration vectors have wrong length");
        if (sub && sub->cols() != total)
            throw std::invalid_argument("presentation: sub-variation vectors have wrong length");
    }
};

// A-model presentation: connection operators plus the degree filtration
// E^p = span of degrees <= n - p
inline ConnectionPresentation build_presentation(const GWData& g, int d) {
    const GradedSpace& sp = g.space;
    ConnectionPresentation p;
    p.total = sp.total();
    p.nvars = g.r;
    p.cutoff = d;
    for (int j = 0; j < g.r; ++j) p.ops.push_back(connection_operator(g, j, d));
    for (int lvl = 0; lvl <= sp.n; ++lvl) {
        int keep = sp.offset(sp.n - lvl) + sp.dims[sp.n - lvl]; // degrees <= n - lvl
        QMat f(keep, p.total);
        for (int i = 0; i < keep; ++i) f(i, i) = 1;
        p.filtration.push_back(f);
    }
    return p;
}

namespace detail {

// monomial -> coefficient vector view of a series vector
inline std::map<ser::Expo, QVec> collect_coeffs(const std::vector<TruncatedSeries>& v) {
    std::map<ser::Expo, QVec> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const auto& [e, c] : v[i].terms()) {
            auto it = out.find(e);
            if (it == out.end())
                it = out.emplace(e, QVec(v.size(), Rat(0))).first;
            it->second[i] = c;
        }
    return out;
}

inline bool series_vec_in_span(const std::vector<TruncatedSeries>& v, const Rref& span) {
    for (const auto& [e, coeffs] : collect_coeffs(v)) {
        (void)e;
        if (!in_row_space(span, coeffs)) return false;
    }
    return true;
}

// coordinates of a series vector in the row basis S (columns = basis vectors)
inline std::optional<std::vector<TruncatedSeries>>
series_vec_coords(const std::vector<TruncatedSeries>& v, const QMat& s_t, int nvars, int cutoff) {
    std::vector<TruncatedSeries> out(s_t.cols(), TruncatedSeries(nvars, cutoff));
    for (const auto& [e, coeffs] : collect_coeffs(v)) {
        auto x = solve_q(s_t, coeffs);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < x->size(); ++i)
            if ((*x)[i] != 0) out[i].add_term(e, (*x)[i]);
    }
    return out;
}

// express the action of a series matrix on the span of S in S-coordinates
inline std::optional<SeriesMat> restrict_to_span(const SeriesMat& n, const QMat& s_from,
                                                 const QMat& s_to) {
    QMat st = s_to.transpose();
    SeriesMat out(s_to.rows(), s_from.rows(), n.nvars, n.cutoff);
    for (int k = 0; k < s_from.rows(); ++k) {
        auto img = n.apply(s_from.row(k));
        auto coords = series_vec_coords(img, st, n.nvars, n.cutoff);
        if (!coords) return std::nullopt;
        for (int i = 0; i < s_to.rows(); ++i) out(i, k) = (*coords)[i];
    }
    return out;
}

} // namespace detail

struct GriffithsReport {
    bool ok = true;
    std::string first_failure;
};

// transversality: N_j(q) F^p inside F^{p-1} tensor series, and nesting
inline GriffithsReport griffiths_report(const ConnectionPresentation& p) {
    p.check_shape();
    GriffithsReport rep;
    const int levels = static_cast<int>(p.filtration.size());
    for (int lvl = 1; lvl < levels; ++lvl) {
        Rref prev = rref(p.filtration[lvl - 1]);
        for (int i = 0; i < p.filtration[lvl].rows(); ++i)
            if (!in_row_space(prev, p.filtration[lvl].row(i))) {
                rep.ok = false;
                rep.first_failure =
                    "filtration does not nest at level " + std::to_string(lvl);
                return rep;
            }
        for (int j = 0; j < p.nvars; ++j)
            for (int i = 0; i < p.filtration[lvl].rows(); ++i) {
                auto img = p.ops[j].apply(p.filtration[lvl].row(i));
                if (!detail::series_vec_in_span(img, prev)) {
                    rep.ok = false;
                    rep.first_failure = "operator " + std::to_string(j)
                                        + " leaves level " + std::to_string(lvl)
                                        + " outside level " + std::to_string(lvl - 1);
                    return rep;
                }
            }
    }
    return rep;
}

inline bool griffiths_check(const ConnectionPresentation& p) { return griffiths_report(p).ok; }

namespace detail {

struct CoreCheckInput {
    std::vector<SeriesMat> ops_a;      // already in A coordinates
    std::vector<SeriesMat> ops_b;      // pulled back, B coordinates
    std::vector<QMat> filt_a;
    std::vector<QMat> filt_b;
    SeriesMat gauge;                   // maps A coordinates to B coordinates
};

inline bool core_gauge_check(const CoreCheckInput& in, std::string* why) {
    for (std::size_t i = 0; i < in.ops_a.size(); ++i) {
        SeriesMat lhs = in.gauge.theta(static_cast<int>(i)) + in.ops_b[i] * in.gauge
                        - in.gauge * in.ops_a[i];
        if (!lhs.is_zero()) {
            if (why) *why = "gauge does not intertwine the operators in direction "
                            + std::to_string(i);
            return false;
        }
    }
    if (in.filt_a.size() != in.filt_b.size())
        throw std::invalid_argument("gauge check: filtration level counts differ");
    for (std::size_t p = 0; p < in.filt_a.size(); ++p) {
        if (in.filt_a[p].rows() != in.filt_b[p].rows()) {
            if (why) *why = "filtration level " + std::to_string(p) + " has mismatched dimensions";
            return false;
        }
        Rref target = rref(in.filt_b[p]);
        for (int i = 0; i < in.filt_a[p].rows(); ++i) {
            auto img = in.gauge.apply(in.filt_a[p].row(i));
            if (!series_vec_in_span(img, target)) {
                if (why) *why = "gauge does not carry filtration level " + std::to_string(p)
                                + " into its counterpart";
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

struct VhsCompareReport {
    bool ok = true;
    std::string first_failure;
};

// Does the gauge carry PA onto PB pulled back along the coordinate map?
// The coordinate map must be logarithmic: each phi_j = q_{pi(j)} * unit with
// pi a permutation, so that dlog-frames pull back to dlog-frames.
inline VhsCompareReport vhs_isomorphism_report(const ConnectionPresentation& pa,
                                               const ConnectionPresentation& pb,
                                               const SeriesMat& gauge,
                                               const std::vector<TruncatedSeries>& coord_map) {
    pa.check_shape();
    pb.check_shape();
    if (pa.total != pb.total || pa.nvars != pb.nvars || pa.cutoff != pb.cutoff)
        throw std::invalid_argument("vhs compare: presentations have incompatible shapes");
    const int nv = pa.nvars;
    const int cut = pa.cutoff;
    if (gauge.rows != pa.total || gauge.cols != pa.total || gauge.nvars != nv
        || gauge.cutoff != cut)
        throw std::invalid_argument("vhs compare: gauge shape mismatch");
    if (static_cast<int>(coord_map.size()) != nv)
        throw std::invalid_argument("vhs compare: coordinate map arity mismatch");

    // factor each phi_j as q_{pi(j)} * unit
    std::vector<int> pi(nv, -1);
    std::vector<TruncatedSeries> units;
    std::vector<bool> used(nv, false);
    for (int j = 0; j < nv; ++j) {
        const TruncatedSeries& f = coord_map[j];
        if (f.nvars() != nv || f.cutoff() != cut)
            throw std::invalid_argument("vhs compare: coordinate map shape mismatch");
        if (f.eval0() != 0)
            throw std::invalid_argument("vhs compare: coordinate map must vanish at the origin");
        int var = -1;
        for (int i = 0; i < nv; ++i) {
            ser::Expo lin(nv, 0);
            lin[i] = 1;
            if (f.coeff(lin) == 0) continue;
            bool divisible = true;
            for (const auto& [e, c] : f.terms()) {
                (void)c;
                if (e[i] == 0) { divisible = false; break; }
            }
            if (divisible) { var = i; break; }
        }
        if (var < 0 || used[var])
            throw std::invalid_argument("vhs compare: coordinate map is not an invertible "
                                        "logarithmic (monomial times unit) change of variables");
        used[var] = true;
        pi[j] = var;
        units.push_back(f.divide_by_var(var));
    }

    if (!inverse_q(gauge.eval0()))
        throw std::invalid_argument("vhs compare: gauge is not invertible at the origin");

    // pull back the B operators: Ntilde_i = sum_j N^B_j(phi) * (theta_i phi_j / phi_j)
    std::vector<SeriesMat> subbed;
    subbed.reserve(nv);
    for (int j = 0; j < nv; ++j) subbed.push_back(pb.ops[j].subst(coord_map));
    std::vector<SeriesMat> pulled;
    for (int i = 0; i < nv; ++i) {
        SeriesMat acc(pa.total, pa.total, nv, cut);
        for (int j = 0; j < nv; ++j) {
            TruncatedSeries ratio = units[j].theta(i) * units[j].inverse();
            if (pi[j] == i) ratio += TruncatedSeries::constant(nv, cut, Rat(1));
            if (ratio.is_zero()) continue;
            SeriesMat term = subbed[j];
            for (auto& s : term.data) s = s * ratio;
            acc = acc + term;
        }
        pulled.push_back(acc);
    }

    VhsCompareReport rep;
    if (pa.sub.has_value() != pb.sub.has_value())
        throw std::invalid_argument("vhs compare: sub-variation designated on only one side");

    if (!pa.sub) {
        detail::CoreCheckInput in{pa.ops, pulled, pa.filtration, pb.filtration, gauge};
        std::string why;
        if (!detail::core_gauge_check(in, &why)) {
            rep.ok = false;
            rep.first_failure = why;
        }
        return rep;
    }

    // restrict everything to the designated sub-variations
    const QMat& sa = *pa.sub;
    const QMat& sb = *pb.sub;
    if (sa.rows() != sb.rows()) {
        rep.ok = false;
        rep.first_failure = "designated sub-variations have different dimensions";
        return rep;
    }
    if (rank_q(sa) != sa.rows() || rank_q(sb) != sb.rows())
        throw std::invalid_argument("vhs compare: sub-variation spanning sets are dependent");

    detail::CoreCheckInput in;
    for (int j = 0; j < nv; ++j) {
        auto ra = detail::restrict_to_span(pa.ops[j], sa, sa);
        if (!ra)
            throw std::invalid_argument("vhs compare: sub-variation is not invariant under the "
                                        "first presentation");
        auto rb = detail::restrict_to_span(pb.ops[j], sb, sb);
        if (!rb)
            throw std::invalid_argument("vhs compare: sub-variation is not invariant under the "
                                        "second presentation");
        in.ops_a.push_back(*ra);
    }
    for (int i = 0; i < nv; ++i) {
        auto rp = detail::restrict_to_span(pulled[i], sb, sb);
        if (!rp)
            throw std::invalid_argument("vhs compare: sub-variation is not invariant under the "
                                        "second presentation");
        in.ops_b.push_back(*rp);
    }
    {
        auto rg = detail::restrict_to_span(gauge, sa, sb);
        if (!rg) {
            rep.ok = false;
            rep.first_failure = "gauge does not carry the designated sub-variation into its "
                                "counterpart";
            return rep;
        }
        in.gauge = *rg;
    }
    auto restrict_filt = [&](const std::vector<QMat>& filt, const QMat& s) {
        std::vector<QMat> out;
        QMat st = s.transpose();
        for (const auto& f : filt) {
            QMat meet = intersect_row_spaces(f, s);
            QMat coords(meet.rows(), s.rows());
            for (int i = 0; i < meet.rows(); ++i) {
                auto x = solve_q(st, meet.row(i));
                if (!x) throw std::logic_error("vhs compare: intersection left the span");
                for (int j = 0; j < s.rows(); ++j) coords(i, j) = (*x)[j];
            }
            out.push_back(coords);
        }
        return out;
    };
    in.filt_a = restrict_filt(pa.filtration, sa);
    in.filt_b = restrict_filt(pb.filtration, sb);

    std::string why;
    if (!detail::core_gauge_check(in, &why)) {
        rep.ok = false;
        rep.first_failure = why;
    }
    return rep;
}

inline bool vhs_isomorphism_check(const ConnectionPresentation& pa, const ConnectionPresentation& pb,
                                  const SeriesMat& gauge,
                                  const std::vector<TruncatedSeries>& coord_map) {
    return vhs_isomorphism_report(pa, pb, gauge, coord_map).ok;
}

} // namespace mirrorcalc::avhs
