#pragma once

// JSON surface for every typed value: exact round-trips (rationals as
// canonical "p/q" strings, integers as numbers while they fit in 64 bits and
// decimal strings beyond), invariants verified at load with named errors, and
// byte-deterministic report emission.

#include <json.hpp>

#include "mirrorcalc/connection.hpp"
#include "mirrorcalc/gw.hpp"
#include "mirrorcalc/mukai.hpp"
#include "mirrorcalc/tduality.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mirrorcalc::io {

using json = nlohmann::ordered_json;

struct InvariantError : std::invalid_argument {
    std::string invariant;
    InvariantError(std::string name, const std::string& detail)
        : std::invalid_argument("invariant violation: " + name
                                + (detail.empty() ? "" : " (" + detail + ")")),
          invariant(std::move(name)) {}
};

// ---- scalars ----

inline json to_json_int(const Int& x) {
    static const Int lo(std::numeric_limits<std::int64_t>::min());
    static const Int hi(std::numeric_limits<std::int64_t>::max());
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

inline Int json_to_int(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            throw std::invalid_argument(where + ": cannot parse integer '" + s + "'");
        }
    }
    throw std::invalid_argument(where + ": expected an integer (number or decimal string)");
}

inline json to_json_rat(const Rat& x) { return rat_to_string(x); }

inline Rat json_to_rat(const json& j, const std::string& where) {
    if (j.is_number_unsigned() || j.is_number_integer()) return Rat(json_to_int(j, where));
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    throw std::invalid_argument(where + ": expected a rational (integer or \"p/q\" string)");
}

// bounded int for ranks, dimensions, indices
inline int json_to_small(const json& j, const std::string& where) {
    Int v = json_to_int(j, where);
    if (v < -1000000 || v > 1000000)
        throw std::invalid_argument(where + ": value out of range");
    return v.convert_to<int>();
}

// ---- vectors and matrices (row-major arrays of arrays) ----

inline json to_json_ivec(const IVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_json_int(x));
    return a;
}

inline IVec json_to_ivec(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
    IVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(json_to_int(x, where));
    return v;
}

inline json to_json_qvec(const QVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_json_rat(x));
    return a;
}

inline QVec json_to_qvec(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
    QVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(json_to_rat(x, where));
    return v;
}

inline json to_json_imat(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_json_int(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline IMat json_to_imat(const json& j, const std::string& where, int expect_cols = -1) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of rows");
    const int rows = static_cast<int>(j.size());
    if (rows == 0) {
        if (expect_cols < 0)
            throw std::invalid_argument(where + ": cannot infer the width of an empty matrix");
        return IMat(0, expect_cols);
    }
    if (!j[0].is_array()) throw std::invalid_argument(where + ": rows must be arrays");
    const int cols = static_cast<int>(j[0].size());
    if (expect_cols >= 0 && cols != expect_cols)
        throw std::invalid_argument(where + ": unexpected row length");
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument(where + ": ragged rows");
        for (int c = 0; c < cols; ++c) m(i, c) = json_to_int(j[i][c], where);
    }
    return m;
}

inline json to_json_qmat(const QMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(to_json_rat(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline QMat json_to_qmat(const json& j, const std::string& where, int expect_cols = -1) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of rows");
    const int rows = static_cast<int>(j.size());
    if (rows == 0) {
        if (expect_cols < 0)
            throw std::invalid_argument(where + ": cannot infer the width of an empty matrix");
        return QMat(0, expect_cols);
    }
    if (!j[0].is_array()) throw std::invalid_argument(where + ": rows must be arrays");
    const int cols = static_cast<int>(j[0].size());
    if (expect_cols >= 0 && cols != expect_cols)
        throw std::invalid_argument(where + ": unexpected row length");
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument(where + ": ragged rows");
        for (int c = 0; c < cols; ++c) m(i, c) = json_to_rat(j[i][c], where);
    }
    return m;
}

// ---- truncated series ----

inline json to_json_series(const ser::TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({json(e), to_json_rat(c)}));
    return terms;
}

inline ser::TruncatedSeries json_to_series(const json& j, int nvars, int cutoff,
                                           const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of terms");
    ser::TruncatedSeries s(nvars, cutoff);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array())
            throw std::invalid_argument(where + ": each term must be [[exponents], coefficient]");
        ser::Expo e;
        for (const auto& x : t[0]) e.push_back(json_to_small(x, where));
        s.add_term(e, json_to_rat(t[1], where));
    }
    return s;
}

inline json to_json_series_mat(const ser::SeriesMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(to_json_series(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline ser::SeriesMat json_to_series_mat(const json& j, int nvars, int cutoff,
                                         const std::string& where) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw std::invalid_argument(where + ": expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    ser::SeriesMat m(rows, cols, nvars, cutoff);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument(where + ": ragged rows");
        for (int c = 0; c < cols; ++c) m(i, c) = json_to_series(j[i][c], nvars, cutoff, where);
    }
    return m;
}

// ---- typed values ----

inline json to_json(const lat::Lattice& l) {
    json j;
    j["type"] = "lattice";
    j["rank"] = l.rank;
    j["gram"] = to_json_imat(l.gram);
    if (!l.labels.empty()) j["labels"] = l.labels;
    j["even"] = l.even;
    j["unimodular"] = l.unimodular;
    return j;
}

inline lat::Lattice parse_lattice(const json& j) {
    if (!j.contains("gram")) throw std::invalid_argument("lattice: missing \"gram\"");
    lat::Lattice l;
    l.gram = json_to_imat(j.at("gram"), "lattice gram",
                          j.contains("rank") ? json_to_small(j.at("rank"), "lattice rank") : -1);
    l.rank = j.contains("rank") ? json_to_small(j.at("rank"), "lattice rank") : l.gram.rows();
    if (l.gram.rows() != l.rank || l.gram.cols() != l.rank)
        throw InvariantError("gram shape", "matrix must be rank x rank");
    for (int a = 0; a < l.rank; ++a)
        for (int b = a + 1; b < l.rank; ++b)
            if (l.gram(a, b) != l.gram(b, a))
                throw InvariantError("gram symmetric", "entry (" + std::to_string(a) + ","
                                                           + std::to_string(b)
                                                           + ") differs from its transpose");
    if (j.contains("labels")) {
        if (!j.at("labels").is_array())
            throw std::invalid_argument("lattice labels: expected an array of strings");
        for (const auto& s : j.at("labels")) {
            if (!s.is_string())
                throw std::invalid_argument("lattice labels: expected an array of strings");
            l.labels.push_back(s.get<std::string>());
        }
        if (static_cast<int>(l.labels.size()) != l.rank)
            throw InvariantError("label count", "one label per basis vector");
    }
    l.even = j.value("even", false);
    l.unimodular = j.value("unimodular", false);
    if (l.even)
        for (int a = 0; a < l.rank; ++a)
            if (l.gram(a, a) % 2 != 0) throw InvariantError("even diagonal", "odd self-pairing");
    if (l.unimodular) {
        Int d = det_int(l.gram);
        if (d != 1 && d != -1) throw InvariantError("unimodular determinant", "|det| != 1");
    }
    l.validate();
    return l;
}

inline json to_json(const mukai::MukaiVector& v) {
    json j;
    j["type"] = "mukai_vector";
    j["alpha"] = to_json_int(v.alpha);
    j["beta"] = to_json_ivec(v.beta);
    j["gamma"] = to_json_int(v.gamma);
    return j;
}

inline mukai::MukaiVector parse_mukai_vector(const json& j) {
    mukai::MukaiVector v;
    if (!j.contains("alpha") || !j.contains("beta") || !j.contains("gamma"))
        throw std::invalid_argument("mukai vector: needs \"alpha\", \"beta\", \"gamma\"");
    v.alpha = json_to_int(j.at("alpha"), "mukai alpha");
    v.beta = json_to_ivec(j.at("beta"), "mukai beta");
    v.gamma = json_to_int(j.at("gamma"), "mukai gamma");
    return v;
}

inline json to_json(const mukai::PeriodPoint& p) {
    json j;
    j["type"] = "period";
    j["re"] = to_json_qvec(p.re);
    j["im"] = to_json_qvec(p.im);
    return j;
}

inline mukai::PeriodPoint parse_period(const json& j) {
    mukai::PeriodPoint p;
    if (!j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("period: needs \"re\" and \"im\"");
    p.re = json_to_qvec(j.at("re"), "period re");
    p.im = json_to_qvec(j.at("im"), "period im");
    if (p.re.size() != p.im.size())
        throw InvariantError("period shape", "re and im must have equal length");
    return p;
}

inline json trilinear_to_json(const avhs::TrilinearMap& m) {
    json a = json::array();
    for (const auto& [k, v] : m.entries())
        a.push_back(json::array({k[0], k[1], k[2], to_json_rat(v)}));
    return a;
}

inline avhs::TrilinearMap json_to_trilinear(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of entries");
    avhs::TrilinearMap m;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument(where + ": each entry must be [a, b, c, value]");
        m.add(json_to_small(e[0], where), json_to_small(e[1], where), json_to_small(e[2], where),
              json_to_rat(e[3], where));
    }
    if (!m.conflicts().empty())
        throw std::invalid_argument(where + ": conflicting duplicate entries: "
                                    + m.conflicts().front());
    return m;
}

inline json to_json(const avhs::GWData& g) {
    json j;
    j["type"] = "gw_data";
    j["dimension"] = g.space.n;
    j["graded_dims"] = g.space.dims;
    if (!g.space.labels.empty()) j["labels"] = g.space.labels;
    json ps = json::array();
    for (const auto& p : g.space.pairings) ps.push_back(to_json_qmat(p));
    j["pairings"] = std::move(ps);
    j["framing_rank"] = g.r;
    j["cutoff"] = g.cutoff;
    j["classical"] = trilinear_to_json(g.classical);
    json inv = json::array();
    for (const auto& [eta, phi] : g.invariants) {
        json e;
        e["eta"] = eta.exponents;
        e["phi"] = trilinear_to_json(phi);
        inv.push_back(std::move(e));
    }
    j["invariants"] = std::move(inv);
    if (!g.gammas.empty()) {
        json gs = json::array();
        for (const auto& [eta, m] : g.gammas) {
            json e;
            e["eta"] = eta.exponents;
            e["matrix"] = to_json_qmat(m);
            gs.push_back(std::move(e));
        }
        j["gammas"] = std::move(gs);
    }
    return j;
}

inline avhs::GWData parse_gw(const json& j) {
    avhs::GWData g;
    for (const char* key : {"dimension", "graded_dims", "pairings", "framing_rank", "cutoff"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("gw data: missing \"") + key + "\"");
    g.space.n = json_to_small(j.at("dimension"), "gw dimension");
    if (!j.at("graded_dims").is_array())
        throw std::invalid_argument("gw graded_dims: expected an array");
    for (const auto& d : j.at("graded_dims"))
        g.space.dims.push_back(json_to_small(d, "gw graded_dims"));
    if (j.contains("labels"))
        for (const auto& s : j.at("labels")) {
            if (!s.is_string()) throw std::invalid_argument("gw labels: expected strings");
            g.space.labels.push_back(s.get<std::string>());
        }
    if (!j.at("pairings").is_array())
        throw std::invalid_argument("gw pairings: expected an array of matrices");
    if (static_cast<int>(g.space.dims.size()) != g.space.n + 1)
        throw std::invalid_argument("gw graded_dims: need one dimension per degree");
    {
        const auto& parr = j.at("pairings");
        if (static_cast<int>(parr.size()) != g.space.n + 1)
            throw std::invalid_argument("gw pairings: need one matrix per degree");
        for (int l = 0; l <= g.space.n; ++l)
            g.space.pairings.push_back(
                json_to_qmat(parr[l], "gw pairing " + std::to_string(l),
                             g.space.dims[g.space.n - l]));
    }
    g.r = json_to_small(j.at("framing_rank"), "gw framing_rank");
    g.cutoff = json_to_small(j.at("cutoff"), "gw cutoff");
    if (j.contains("classical")) g.classical = json_to_trilinear(j.at("classical"), "gw classical");
    if (j.contains("invariants")) {
        if (!j.at("invariants").is_array())
            throw std::invalid_argument("gw invariants: expected an array");
        for (const auto& e : j.at("invariants")) {
            if (!e.is_object() || !e.contains("eta") || !e.contains("phi"))
                throw std::invalid_argument("gw invariants: each entry needs \"eta\" and \"phi\"");
            avhs::EffectiveClass eta;
            for (const auto& x : e.at("eta")) eta.exponents.push_back(json_to_small(x, "gw eta"));
            g.invariants.emplace_back(std::move(eta),
                                      json_to_trilinear(e.at("phi"), "gw invariant phi"));
        }
    }
    if (j.contains("gammas")) {
        if (!j.at("gammas").is_array()) throw std::invalid_argument("gw gammas: expected an array");
        const int t = g.space.total();
        for (const auto& e : j.at("gammas")) {
            if (!e.is_object() || !e.contains("eta") || !e.contains("matrix"))
                throw std::invalid_argument("gw gammas: each entry needs \"eta\" and \"matrix\"");
            avhs::EffectiveClass eta;
            for (const auto& x : e.at("eta")) eta.exponents.push_back(json_to_small(x, "gw eta"));
            g.gammas.emplace_back(std::move(eta), json_to_qmat(e.at("matrix"), "gw gamma", t));
        }
    }
    avhs::check_shape(g);
    return g;
}

inline json to_json(const avhs::ConnectionPresentation& p) {
    json j;
    j["type"] = "presentation";
    j["total"] = p.total;
    j["nvars"] = p.nvars;
    j["cutoff"] = p.cutoff;
    json ops = json::array();
    for (const auto& n : p.ops) ops.push_back(to_json_series_mat(n));
    j["ops"] = std::move(ops);
    json filt = json::array();
    for (const auto& f : p.filtration) filt.push_back(to_json_qmat(f));
    j["filtration"] = std::move(filt);
    if (p.sub) j["sub"] = to_json_qmat(*p.sub);
    return j;
}

inline avhs::ConnectionPresentation parse_presentation(const json& j) {
    avhs::ConnectionPresentation p;
    for (const char* key : {"total", "nvars", "cutoff", "ops", "filtration"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("presentation: missing \"") + key + "\"");
    p.total = json_to_small(j.at("total"), "presentation total");
    p.nvars = json_to_small(j.at("nvars"), "presentation nvars");
    p.cutoff = json_to_small(j.at("cutoff"), "presentation cutoff");
    if (p.total < 1) throw std::invalid_argument("presentation: total must be positive");
    if (p.nvars < 0 || p.cutoff < 0)
        throw std::invalid_argument("presentation: negative shape");
    if (!j.at("ops").is_array())
        throw std::invalid_argument("presentation ops: expected an array");
    for (const auto& n : j.at("ops"))
        p.ops.push_back(json_to_series_mat(n, p.nvars, p.cutoff, "presentation op"));
    if (!j.at("filtration").is_array())
        throw std::invalid_argument("presentation filtration: expected an array");
    for (const auto& f : j.at("filtration"))
        p.filtration.push_back(json_to_qmat(f, "presentation filtration", p.total));
    if (j.contains("sub") && !j.at("sub").is_null())
        p.sub = json_to_qmat(j.at("sub"), "presentation sub", p.total);
    p.check_shape();
    return p;
}

inline json to_json(const tor::PureCycle& w) {
    json j;
    j["type"] = "pure_cycle";
    j["n"] = w.n;
    j["fiber_basis"] = to_json_imat(w.fiber_lattice.basis);
    j["k"] = w.base_dim;
    j["multiplicity"] = to_json_int(w.multiplicity);
    return j;
}

inline tor::PureCycle parse_cycle(const json& j) {
    for (const char* key : {"n", "fiber_basis", "k"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("pure cycle: missing \"") + key + "\"");
    tor::PureCycle w;
    w.n = json_to_small(j.at("n"), "cycle n");
    if (w.n < 1) throw std::invalid_argument("pure cycle: torus dimension must be positive");
    IMat basis = json_to_imat(j.at("fiber_basis"), "cycle fiber_basis", w.n);
    w.fiber_lattice = lat::make_sublattice(lat::standard_zn(w.n), basis);
    w.base_dim = json_to_small(j.at("k"), "cycle k");
    if (j.contains("multiplicity"))
        w.multiplicity = json_to_int(j.at("multiplicity"), "cycle multiplicity");
    w.validate();
    return w;
}

inline json to_json(const avhs::HodgeDiamond& d) {
    json j;
    j["type"] = "hodge_diamond";
    j["dimension"] = d.n;
    j["h"] = to_json_imat(d.h);
    return j;
}

inline avhs::HodgeDiamond parse_diamond(const json& j) {
    if (!j.contains("dimension") || !j.contains("h"))
        throw std::invalid_argument("hodge diamond: needs \"dimension\" and \"h\"");
    avhs::HodgeDiamond d;
    d.n = json_to_small(j.at("dimension"), "diamond dimension");
    d.h = json_to_imat(j.at("h"), "diamond h", d.n + 1);
    d.validate();
    return d;
}

// ---- dispatch ----

using TypedValue = std::variant<lat::Lattice, mukai::MukaiVector, mukai::PeriodPoint,
                                avhs::GWData, avhs::ConnectionPresentation, tor::PureCycle>;

inline json to_json_value(const TypedValue& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

inline TypedValue from_json_any(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("input: expected a JSON object");
    std::string t = j.value("type", "");
    if (t.empty()) {
        if (j.contains("gram")) t = "lattice";
        else if (j.contains("alpha") && j.contains("gamma")) t = "mukai_vector";
        else if (j.contains("re") && j.contains("im")) t = "period";
        else if (j.contains("graded_dims")) t = "gw_data";
        else if (j.contains("ops")) t = "presentation";
        else if (j.contains("fiber_basis")) t = "pure_cycle";
        else throw std::invalid_argument("input: cannot recognize the value type from its keys");
    }
    if (t == "lattice") return parse_lattice(j);
    if (t == "mukai_vector") return parse_mukai_vector(j);
    if (t == "period") return parse_period(j);
    if (t == "gw_data") return parse_gw(j);
    if (t == "presentation") return parse_presentation(j);
    if (t == "pure_cycle") return parse_cycle(j);
    throw std::invalid_argument("input: unrecognized type '" + t + "'");
}

// syntax errors propagate from the JSON parser with line/column positions
inline json parse_json_text(const std::string& text) { return json::parse(text); }

inline TypedValue parse_input(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_any(parse_json_text(buf.str()));
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

inline TypedValue parse_input_file(const std::string& path) {
    return from_json_any(parse_json_text(read_file(path)));
}

inline std::string emit(const json& j) { return j.dump(2) + "\n"; }

// ---- value equality (round-trip checks) ----

inline bool same(const lat::Lattice& a, const lat::Lattice& b) {
    return a.rank == b.rank && a.gram == b.gram && a.labels == b.labels && a.even == b.even
           && a.unimodular == b.unimodular;
}

inline bool same(const mukai::MukaiVector& a, const mukai::MukaiVector& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
}

inline bool same(const mukai::PeriodPoint& a, const mukai::PeriodPoint& b) {
    return a.re == b.re && a.im == b.im;
}

inline bool same(const avhs::GWData& a, const avhs::GWData& b) {
    if (a.space.n != b.space.n || a.space.dims != b.space.dims
        || a.space.labels != b.space.labels || a.r != b.r || a.cutoff != b.cutoff)
        return false;
    if (a.space.pairings.size() != b.space.pairings.size()) return false;
    for (std::size_t i = 0; i < a.space.pairings.size(); ++i)
        if (!(a.space.pairings[i] == b.space.pairings[i])) return false;
    if (!(a.classical.entries() == b.classical.entries())) return false;
    if (a.invariants.size() != b.invariants.size()) return false;
    for (std::size_t i = 0; i < a.invariants.size(); ++i)
        if (!(a.invariants[i].first == b.invariants[i].first)
            || !(a.invariants[i].second.entries() == b.invariants[i].second.entries()))
            return false;
    if (a.gammas.size() != b.gammas.size()) return false;
    for (std::size_t i = 0; i < a.gammas.size(); ++i)
        if (!(a.gammas[i].first == b.gammas[i].first) || !(a.gammas[i].second == b.gammas[i].second))
            return false;
    return true;
}

inline bool same(const avhs::ConnectionPresentation& a, const avhs::ConnectionPresentation& b) {
    if (a.total != b.total || a.nvars != b.nvars || a.cutoff != b.cutoff) return false;
    if (a.ops.size() != b.ops.size() || a.filtration.size() != b.filtration.size()) return false;
    for (std::size_t i = 0; i < a.ops.size(); ++i)
        if (!(a.ops[i] == b.ops[i])) return false;
    for (std::size_t i = 0; i < a.filtration.size(); ++i)
        if (!(a.filtration[i] == b.filtration[i])) return false;
    if (a.sub.has_value() != b.sub.has_value()) return false;
    if (a.sub && !(*a.sub == *b.sub)) return false;
    return true;
}

inline bool same(const tor::PureCycle& a, const tor::PureCycle& b) {
    return a.n == b.n && a.fiber_lattice.basis == b.fiber_lattice.basis
           && a.base_dim == b.base_dim && a.multiplicity == b.multiplicity;
}

inline bool same_value(const TypedValue& a, const TypedValue& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return same(x, std::get<T>(b));
        },
        a);
}

// ---- run reports ----

enum class Format { text, machine };

inline std::optional<Format> format_from_string(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "machine") return Format::machine;
    return std::nullopt;
}

struct RunReport {
    std::string command;                                      // echo of the invocation
    std::vector<std::pair<std::string, std::string>> inputs;  // (source, digest)
    std::vector<std::pair<std::string, bool>> checks;         // invariant checks performed
    json results = json::object();
};

inline std::string digest_hex(const std::string& bytes) {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << fnv1a(bytes);
    return os.str();
}

inline std::string emit_report(const RunReport& r, Format f) {
    if (f == Format::machine) {
        json j;
        j["command"] = r.command;
        json ins = json::array();
        for (const auto& [src, dig] : r.inputs) {
            json e;
            e["source"] = src;
            e["digest"] = dig;
            ins.push_back(std::move(e));
        }
        j["inputs"] = std::move(ins);
        json chk = json::array();
        for (const auto& [name, pass] : r.checks) {
            json e;
            e["name"] = name;
            e["pass"] = pass;
            chk.push_back(std::move(e));
        }
        j["checks"] = std::move(chk);
        j["results"] = r.results;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    for (const auto& [src, dig] : r.inputs) os << "input: " << src << " fnv1a:" << dig << "\n";
    for (const auto& [name, pass] : r.checks)
        os << "check: " << name << " " << (pass ? "pass" : "fail") << "\n";
    for (const auto& [key, val] : r.results.items())
        os << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    return os.str();
}

} // namespace mirrorcalc::io
