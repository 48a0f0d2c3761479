// Command-line front end: every run parses exact JSON inputs, dispatches to
// the library, and prints a deterministic report. Exit codes: 0 success,
// 1 negative mathematical verdict, 2 input or usage error.

#include <CLI11.hpp>

#include "mirrorcalc/eichler.hpp"
#include "mirrorcalc/io.hpp"
#include "mirrorcalc/weight.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace mc = mirrorcalc;
using mc::Int;
using mc::io::json;
using mc::io::RunReport;

namespace {

struct Opts {
    std::string in;
    std::string format = "text";
    std::string v, w, t, c1;
    std::string rank = "0", c2 = "0";
    int degree = -1;
    int dir = 0;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else
            cur.push_back(c);
    }
    out.push_back(trim(cur));
    return out;
}

Int int_token(const std::string& s) {
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse integer '" + s + "'");
    }
}

mc::IVec ivec_from_string(const std::string& s) {
    mc::IVec v;
    for (const auto& tok : split_commas(s)) v.push_back(int_token(tok));
    return v;
}

// "alpha,mu,gamma" (mu = the first isotropic H^2 basis direction) or a full
// list of r+2 integers
mc::mukai::MukaiVector mukai_vec_from_string(const mc::mukai::MukaiLattice& ml,
                                             const std::string& s) {
    auto toks = split_commas(s);
    if (toks.size() == 3 && toks[1] == "mu") {
        mc::mukai::MukaiVector v;
        v.alpha = int_token(toks[0]);
        v.gamma = int_token(toks[2]);
        v.beta.assign(ml.r, Int(0));
        v.beta[0] = 1;
        return v;
    }
    if (static_cast<int>(toks.size()) == ml.r + 2) {
        mc::lat::LatVec full;
        for (const auto& tok : toks) full.push_back(int_token(tok));
        return mc::mukai::from_full(ml, full);
    }
    throw std::invalid_argument("mukai vector: expected \"alpha,mu,gamma\" or "
                                + std::to_string(ml.r + 2) + " comma-separated integers");
}

mc::io::Format format_of(const Opts& o) {
    auto f = mc::io::format_from_string(o.format);
    if (!f) throw std::invalid_argument("unknown format '" + o.format + "'");
    return *f;
}

// input file -> typed value, recording the digest in the report
mc::io::TypedValue load_input(const Opts& o, RunReport& rep) {
    if (o.in.empty()) throw std::invalid_argument("missing required --in file");
    std::string bytes = mc::io::read_file(o.in);
    rep.inputs.emplace_back(o.in, mc::io::digest_hex(bytes));
    mc::io::TypedValue v = mc::io::from_json_any(mc::io::parse_json_text(bytes));
    rep.checks.emplace_back("input invariants verified", true);
    return v;
}

json load_raw(const Opts& o, RunReport& rep) {
    if (o.in.empty()) throw std::invalid_argument("missing required --in file");
    std::string bytes = mc::io::read_file(o.in);
    rep.inputs.emplace_back(o.in, mc::io::digest_hex(bytes));
    return mc::io::parse_json_text(bytes);
}

template <class T>
T& expect(mc::io::TypedValue& v, const char* what) {
    if (!std::holds_alternative<T>(v))
        throw std::invalid_argument(std::string("input is not a ") + what);
    return std::get<T>(v);
}

int finish(RunReport& rep, const Opts& o, bool verdict_ok = true) {
    bool checks_ok = true;
    for (const auto& [name, pass] : rep.checks) {
        (void)name;
        checks_ok = checks_ok && pass;
    }
    std::cout << mc::io::emit_report(rep, format_of(o));
    return verdict_ok && checks_ok ? 0 : 1;
}

int effective_degree(const Opts& o, const mc::avhs::GWData& g) {
    return o.degree >= 0 ? o.degree : g.cutoff;
}

// ---- lattice group ----

int run_lattice_pair(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& l = expect<mc::lat::Lattice>(val, "lattice");
    Int p = mc::lat::pair(l, ivec_from_string(o.v), ivec_from_string(o.w));
    rep.results["pair"] = mc::io::to_json_int(p);
    return finish(rep, o);
}

int run_lattice_snf(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& l = expect<mc::lat::Lattice>(val, "lattice");
    mc::SnfResult s = mc::smith_normal_form(l.gram);
    json diag = json::array();
    for (int i = 0; i < s.rank; ++i) diag.push_back(mc::io::to_json_int(s.d(i, i)));
    rep.checks.emplace_back("transforms reproduce the normal form", s.u * l.gram * s.v == s.d);
    rep.results["rank"] = s.rank;
    rep.results["d"] = std::move(diag);
    return finish(rep, o);
}

int run_lattice_complement(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& l = expect<mc::lat::Lattice>(val, "lattice");
    mc::lat::LatVec v = ivec_from_string(o.v);
    mc::lat::Sublattice c = mc::lat::orthogonal_complement(l, v);
    bool zero = true;
    for (int i = 0; i < c.rank(); ++i) {
        mc::lat::LatVec row(l.rank);
        for (int j = 0; j < l.rank; ++j) row[j] = c.basis(i, j);
        zero = zero && mc::lat::pair(l, row, v) == 0;
    }
    rep.checks.emplace_back("complement pairs to zero with v", zero);
    rep.checks.emplace_back("complement is saturated", mc::lat::is_saturated(c));
    rep.results["rank"] = c.rank();
    rep.results["basis"] = mc::io::to_json_imat(c.basis);
    return finish(rep, o);
}

int run_lattice_quotient(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& l = expect<mc::lat::Lattice>(val, "lattice");
    mc::lat::IsotropicQuotient q = mc::lat::quotient_by_isotropic(l, ivec_from_string(o.v));
    bool ok = true;
    try {
        q.quotient.validate();
    } catch (const std::exception&) {
        ok = false;
    }
    rep.checks.emplace_back("quotient invariants verified", ok);
    rep.results["rank"] = q.quotient.rank;
    rep.results["gram"] = mc::io::to_json_imat(q.quotient.gram);
    rep.results["lift"] = mc::io::to_json_imat(q.lift);
    return finish(rep, o);
}

int run_lattice_standardize(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& l = expect<mc::lat::Lattice>(val, "lattice");
    mc::lat::LatVec v = ivec_from_string(o.v);
    mc::lat::LatVec t;
    if (!o.t.empty())
        t = ivec_from_string(o.t);
    else {
        auto planes = mc::lat::find_hyperbolic_planes(l);
        if (planes.empty())
            throw std::invalid_argument("standardize: lattice has no coordinate hyperbolic plane");
        t = mc::lat::unit_vec(l.rank, planes[0].i);
    }
    mc::lat::Isometry g = mc::lat::isotropic_to_standard(l, v, t);
    rep.checks.emplace_back("isometry preserves the gram matrix", mc::lat::is_isometry(l, g.m));
    rep.checks.emplace_back("isometry carries v to the target", g(v) == t);
    rep.results["g"] = mc::io::to_json_imat(g.m);
    return finish(rep, o);
}

// ---- mukai group (the K3 Mukai lattice) ----

int run_mukai_vec(const Opts& o, RunReport rep) {
    mc::mukai::MukaiLattice ml = mc::mukai::mukai_k3();
    mc::mukai::ChernInput ci{int_token(o.rank), ivec_from_string(o.c1), int_token(o.c2)};
    mc::mukai::MukaiVector v = mc::mukai::mukai_vector(ml, ci);
    rep.results["vector"] = mc::io::to_json(v);
    rep.results["self_pairing"] = mc::io::to_json_int(mc::mukai::mukai_pair(ml, v, v));
    return finish(rep, o);
}

int run_mukai_chi(const Opts& o, RunReport rep) {
    mc::mukai::MukaiLattice ml = mc::mukai::mukai_k3();
    Int chi = mc::mukai::euler_pairing(ml, mukai_vec_from_string(ml, o.v),
                                       mukai_vec_from_string(ml, o.w));
    rep.results["chi"] = mc::io::to_json_int(chi);
    return finish(rep, o);
}

int run_mukai_dim(const Opts& o, RunReport rep) {
    mc::mukai::MukaiLattice ml = mc::mukai::mukai_k3();
    Int d = mc::mukai::moduli_dimension(ml, mukai_vec_from_string(ml, o.v));
    rep.results["dimension"] = mc::io::to_json_int(d);
    return finish(rep, o);
}

int run_mukai_mirror(const Opts& o, RunReport rep) {
    mc::mukai::MukaiLattice ml = mc::mukai::mukai_k3();
    mc::mukai::MukaiVector v = mukai_vec_from_string(ml, o.v);
    mc::lat::Isometry g = mc::mukai::mirror_map_vector(ml, v);
    mc::lat::LatVec target = mc::lat::unit_vec(ml.full.rank, ml.full.rank - 1);
    rep.checks.emplace_back("isometry preserves the Mukai pairing",
                            mc::lat::is_isometry(ml.full, g.m));
    rep.checks.emplace_back("isometry carries v to (0,0,1)",
                            g(mc::mukai::to_full(ml, v)) == target);
    rep.results["g"] = mc::io::to_json_imat(g.m);
    return finish(rep, o);
}

int run_mukai_hodge(const Opts& o, RunReport rep) {
    mc::mukai::MukaiLattice ml = mc::mukai::mukai_k3();
    auto val = load_input(o, rep);
    auto& p = expect<mc::mukai::PeriodPoint>(val, "period");
    mc::mukai::MukaiVector v = mukai_vec_from_string(ml, o.v);
    mc::mukai::MirrorHodge mh = mc::mukai::mirror_hodge_structure(ml, p, v);
    mc::Rat rr = mc::lat::pair_q(mh.lattice, mh.period.re, mh.period.re);
    mc::Rat ii = mc::lat::pair_q(mh.lattice, mh.period.im, mh.period.im);
    mc::Rat ri = mc::lat::pair_q(mh.lattice, mh.period.re, mh.period.im);
    rep.checks.emplace_back("mirror period pairs to zero with itself", rr == ii && ri == 0);
    rep.checks.emplace_back("mirror period pairs positively with its conjugate", rr + ii > 0);
    rep.results["rank"] = mh.lattice.rank;
    rep.results["gram"] = mc::io::to_json_imat(mh.lattice.gram);
    rep.results["re"] = mc::io::to_json_qvec(mh.period.re);
    rep.results["im"] = mc::io::to_json_qvec(mh.period.im);
    return finish(rep, o);
}

// ---- qcoh group ----

int run_qcoh_validate(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& g = expect<mc::avhs::GWData>(val, "gw_data");
    mc::avhs::PhiReport pr = mc::avhs::validate_phi_report(g);
    rep.results["valid"] = pr.ok;
    if (!pr.ok) {
        json d = json::array();
        for (const auto& msg : pr.diagnostics) d.push_back(msg);
        rep.results["diagnostics"] = std::move(d);
    }
    return finish(rep, o, pr.ok);
}

int run_qcoh_flat(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& g = expect<mc::avhs::GWData>(val, "gw_data");
    int d = effective_degree(o, g);
    mc::avhs::FlatnessReport fr = mc::avhs::flatness_report(g, d);
    rep.results["degree"] = d;
    rep.results["flat"] = fr.ok;
    if (!fr.ok) rep.results["first_failure"] = fr.first_failure;
    return finish(rep, o, fr.ok);
}

int run_qcoh_assoc(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& g = expect<mc::avhs::GWData>(val, "gw_data");
    int d = effective_degree(o, g);
    mc::avhs::AssocReport ar = mc::avhs::associativity_report(g, d);
    rep.results["degree"] = d;
    rep.results["associative"] = ar.ok;
    if (!ar.ok) rep.results["first_failure"] = ar.first_failure;
    return finish(rep, o, ar.ok);
}

int run_qcoh_residues(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& g = expect<mc::avhs::GWData>(val, "gw_data");
    int d = effective_degree(o, g);
    bool match = true;
    json out = json::array();
    for (int j = 0; j < g.r; ++j) {
        mc::QMat m = mc::avhs::residue(g, j);
        match = match && mc::avhs::connection_operator(g, j, d).eval0() == m;
        out.push_back(mc::io::to_json_qmat(m));
    }
    rep.checks.emplace_back("residues match the connection at q=0", match);
    rep.results["residues"] = std::move(out);
    return finish(rep, o);
}

int run_qcoh_weights(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& g = expect<mc::avhs::GWData>(val, "gw_data");
    if (o.dir < 0 || o.dir >= g.r)
        throw std::invalid_argument("--dir must name a degree-one basis direction");
    mc::QMat n = mc::avhs::ad_matrix(g, o.dir);
    mc::avhs::WeightFiltration wf = mc::avhs::weight_filtration(n, g.space.n);
    bool nested = true, shifts = true;
    mc::QMat nt = n.transpose();
    for (int k = wf.lo; k <= wf.hi; ++k) {
        if (k > wf.lo) nested = nested && mc::row_space_contained(wf.level(k - 1), wf.level(k));
        shifts = shifts && mc::row_space_contained(wf.level(k) * nt, wf.level(k - 2));
    }
    rep.checks.emplace_back("levels increase", nested);
    rep.checks.emplace_back("operator shifts the filtration by two", shifts);
    rep.results["center"] = wf.center;
    rep.results["lo"] = wf.lo;
    rep.results["hi"] = wf.hi;
    json dims = json::array(), levels = json::array();
    for (int k = wf.lo; k <= wf.hi; ++k) {
        dims.push_back(wf.dim(k));
        levels.push_back(mc::io::to_json_qmat(wf.level(k)));
    }
    rep.results["dims"] = std::move(dims);
    rep.results["levels"] = std::move(levels);
    return finish(rep, o);
}

int run_qcoh_griffiths(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    mc::avhs::ConnectionPresentation p;
    if (std::holds_alternative<mc::avhs::GWData>(val)) {
        const auto& g = std::get<mc::avhs::GWData>(val);
        p = mc::avhs::build_presentation(g, effective_degree(o, g));
    } else
        p = expect<mc::avhs::ConnectionPresentation>(val, "gw_data or presentation");
    mc::avhs::GriffithsReport gr = mc::avhs::griffiths_report(p);
    rep.results["transversal"] = gr.ok;
    if (!gr.ok) rep.results["first_failure"] = gr.first_failure;
    return finish(rep, o, gr.ok);
}

int run_qcoh_compare(const Opts& o, RunReport rep) {
    json j = load_raw(o, rep);
    for (const char* key : {"a", "b", "gauge", "coords"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("compare job: missing \"") + key + "\"");
    mc::avhs::ConnectionPresentation pa = mc::io::parse_presentation(j.at("a"));
    mc::avhs::ConnectionPresentation pb = mc::io::parse_presentation(j.at("b"));
    rep.checks.emplace_back("input invariants verified", true);
    mc::ser::SeriesMat gauge =
        mc::io::json_to_series_mat(j.at("gauge"), pa.nvars, pa.cutoff, "compare gauge");
    if (!j.at("coords").is_array())
        throw std::invalid_argument("compare job: \"coords\" must be an array of series");
    std::vector<mc::ser::TruncatedSeries> coords;
    for (const auto& c : j.at("coords"))
        coords.push_back(mc::io::json_to_series(c, pa.nvars, pa.cutoff, "compare coords"));
    mc::avhs::VhsCompareReport vr = mc::avhs::vhs_isomorphism_report(pa, pb, gauge, coords);
    rep.results["equivalent"] = vr.ok;
    if (!vr.ok) rep.results["first_failure"] = vr.first_failure;
    return finish(rep, o, vr.ok);
}

// ---- tori group ----

bool annihilates(const mc::lat::Sublattice& s, const mc::lat::Sublattice& ann) {
    for (int i = 0; i < ann.rank(); ++i)
        for (int k = 0; k < s.rank(); ++k) {
            Int acc(0);
            for (int j = 0; j < s.ambient.rank; ++j) acc += ann.basis(i, j) * s.basis(k, j);
            if (acc != 0) return false;
        }
    return true;
}

int run_tori_ann(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& w = expect<mc::tor::PureCycle>(val, "pure_cycle");
    mc::lat::Sublattice a = mc::tor::annihilator(w.fiber_lattice);
    rep.checks.emplace_back("annihilator pairs to zero with the fiber",
                            annihilates(w.fiber_lattice, a));
    rep.checks.emplace_back("rank complementarity",
                            a.rank() + w.fiber_lattice.rank() == w.n);
    rep.results["rank"] = a.rank();
    rep.results["basis"] = mc::io::to_json_imat(a.basis);
    return finish(rep, o);
}

int run_tori_dual(const Opts& o, RunReport rep) {
    auto val = load_input(o, rep);
    auto& w = expect<mc::tor::PureCycle>(val, "pure_cycle");
    mc::tor::DualClass d = mc::tor::t_dual_cycle(w);
    rep.checks.emplace_back("degree is twice the support rank",
                            d.degree == 2 * d.dual_lattice.rank());
    rep.checks.emplace_back("dual support annihilates the fiber",
                            annihilates(w.fiber_lattice, d.dual_lattice));
    rep.results["degree"] = d.degree;
    rep.results["dual_basis"] = mc::io::to_json_imat(d.dual_lattice.basis);
    rep.results["rank_hint"] = mc::io::to_json_int(d.rank_hint);
    return finish(rep, o);
}

mc::tor::DualClass dual_class_from_json(const json& j) {
    for (const char* key : {"n", "degree", "dual_basis"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("dual class: missing \"") + key + "\"");
    int n = mc::io::json_to_small(j.at("n"), "dual class n");
    mc::tor::DualClass d;
    d.degree = mc::io::json_to_small(j.at("degree"), "dual class degree");
    d.dual_lattice = mc::lat::make_sublattice(
        mc::lat::standard_zn(n), mc::io::json_to_imat(j.at("dual_basis"), "dual basis", n));
    if (j.contains("rank_hint"))
        d.rank_hint = mc::io::json_to_int(j.at("rank_hint"), "dual class rank_hint");
    d.validate();
    return d;
}

int run_tori_leray(const Opts& o, RunReport rep) {
    json j = load_raw(o, rep);
    if (j.contains("cycles")) { // paired job: check the degree bound
        if (!j.contains("images") || !j.at("cycles").is_array() || !j.at("images").is_array())
            throw std::invalid_argument("leray job: needs \"cycles\" and \"images\" arrays");
        std::vector<mc::tor::PureCycle> cycles;
        std::vector<mc::tor::DualClass> images;
        for (const auto& c : j.at("cycles")) cycles.push_back(mc::io::parse_cycle(c));
        for (const auto& d : j.at("images")) images.push_back(dual_class_from_json(d));
        rep.checks.emplace_back("input invariants verified", true);
        bool ok = mc::tor::leray_filtration_check(cycles, images);
        json levels = json::array();
        for (const auto& c : cycles) levels.push_back(mc::tor::leray_level(c));
        rep.results["levels"] = std::move(levels);
        rep.results["bounded"] = ok;
        return finish(rep, o, ok);
    }
    mc::tor::PureCycle w = mc::io::parse_cycle(j);
    rep.checks.emplace_back("input invariants verified", true);
    rep.results["level"] = mc::tor::leray_level(w);
    return finish(rep, o);
}

// ---- mirrortest group ----

int run_mirrortest_hodge(const Opts& o, RunReport rep) {
    json j = load_raw(o, rep);
    if (!j.contains("x") || !j.contains("y"))
        throw std::invalid_argument("mirror test: needs diamonds \"x\" and \"y\"");
    mc::avhs::HodgeDiamond x = mc::io::parse_diamond(j.at("x"));
    mc::avhs::HodgeDiamond y = mc::io::parse_diamond(j.at("y"));
    rep.checks.emplace_back("input invariants verified", true);
    bool ok = mc::avhs::topological_mirror_test(x, y);
    rep.results["mirror"] = ok;
    return finish(rep, o, ok);
}

} // namespace

int main(int argc, char** argv) {
    Opts o;
    std::function<int()> action;

    std::string echo = "mirrorcalc";
    for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];

    RunReport base;
    base.command = echo;

    CLI::App app{"exact calculator for lattice-level mirror symmetry"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", o.in, "input JSON file")->required();
        cmd->add_option("--format", o.format, "report format: text|machine");
        return cmd;
    };
    auto bind = [&](CLI::App* cmd, int (*fn)(const Opts&, RunReport)) {
        cmd->callback([&o, &action, &base, fn] { action = [&o, &base, fn] { return fn(o, base); }; });
    };

    CLI::App* lattice = app.add_subcommand("lattice", "integer lattice calculus");
    lattice->require_subcommand(1);
    {
        auto* c = common(lattice->add_subcommand("pair", "pair two vectors"), true);
        c->add_option("--v", o.v, "first vector, comma-separated")->required();
        c->add_option("--w", o.w, "second vector, comma-separated")->required();
        bind(c, run_lattice_pair);
    }
    {
        auto* c = common(lattice->add_subcommand("snf", "Smith normal form of the gram matrix"),
                         true);
        bind(c, run_lattice_snf);
    }
    {
        auto* c = common(lattice->add_subcommand("complement", "orthogonal complement of v"), true);
        c->add_option("--v", o.v, "vector, comma-separated")->required();
        bind(c, run_lattice_complement);
    }
    {
        auto* c = common(lattice->add_subcommand("quotient", "v-perp modulo v"), true);
        c->add_option("--v", o.v, "primitive isotropic vector")->required();
        bind(c, run_lattice_quotient);
    }
    {
        auto* c = common(lattice->add_subcommand("standardize",
                                                 "isometry carrying v to a standard slot"),
                         true);
        c->add_option("--v", o.v, "primitive isotropic vector")->required();
        c->add_option("--t", o.t, "target vector (default: first hyperbolic slot)");
        bind(c, run_lattice_standardize);
    }

    CLI::App* mk = app.add_subcommand("mukai", "K3 Mukai lattice calculus");
    mk->require_subcommand(1);
    {
        auto* c = common(mk->add_subcommand("vec", "Mukai vector of a sheaf class"), false);
        c->add_option("--rank", o.rank, "sheaf rank")->required();
        c->add_option("--c1", o.c1, "first Chern class, 22 integers")->required();
        c->add_option("--c2", o.c2, "second Chern number")->required();
        bind(c, run_mukai_vec);
    }
    {
        auto* c = common(mk->add_subcommand("chi", "Euler pairing of two classes"), false);
        c->add_option("--v", o.v, "first Mukai vector")->required();
        c->add_option("--w", o.w, "second Mukai vector")->required();
        bind(c, run_mukai_chi);
    }
    {
        auto* c = common(mk->add_subcommand("dim", "moduli dimension of a class"), false);
        c->add_option("--v", o.v, "Mukai vector")->required();
        bind(c, run_mukai_dim);
    }
    {
        auto* c = common(mk->add_subcommand("mirror", "isometry carrying v to (0,0,1)"), false);
        c->add_option("--v", o.v, "primitive isotropic Mukai vector")->required();
        bind(c, run_mukai_mirror);
    }
    {
        auto* c = common(mk->add_subcommand("hodge", "mirror weight-two Hodge structure"), true);
        c->add_option("--v", o.v, "primitive isotropic Mukai vector")->required();
        bind(c, run_mukai_hodge);
    }

    CLI::App* qc = app.add_subcommand("qcoh", "quantum connection calculus");
    qc->require_subcommand(1);
    {
        auto* c = common(qc->add_subcommand("validate", "check the correlation-function axioms"),
                         true);
        bind(c, run_qcoh_validate);
    }
    {
        auto* c = common(qc->add_subcommand("flat", "curvature of the quantum connection"), true);
        c->add_option("--degree", o.degree, "series truncation degree");
        bind(c, run_qcoh_flat);
    }
    {
        auto* c = common(qc->add_subcommand("assoc", "associativity of the quantum product"),
                         true);
        c->add_option("--degree", o.degree, "series truncation degree");
        bind(c, run_qcoh_assoc);
    }
    {
        auto* c = common(qc->add_subcommand("residues", "connection operators at q=0"), true);
        c->add_option("--degree", o.degree, "series truncation degree");
        bind(c, run_qcoh_residues);
    }
    {
        auto* c = common(qc->add_subcommand("weights", "monodromy weight filtration of ad(e)"),
                         true);
        c->add_option("--dir", o.dir, "degree-one direction index");
        bind(c, run_qcoh_weights);
    }
    {
        auto* c = common(qc->add_subcommand("griffiths", "transversality of the filtration"),
                         true);
        c->add_option("--degree", o.degree, "series truncation degree");
        bind(c, run_qcoh_griffiths);
    }
    {
        auto* c = common(qc->add_subcommand("compare", "gauge equivalence of two presentations"),
                         true);
        bind(c, run_qcoh_compare);
    }

    CLI::App* tori = app.add_subcommand("tori", "sub-torus cycles and their duals");
    tori->require_subcommand(1);
    {
        auto* c = common(tori->add_subcommand("ann", "annihilator of the fiber lattice"), true);
        bind(c, run_tori_ann);
    }
    {
        auto* c = common(tori->add_subcommand("dual", "T-dual class of a pure cycle"), true);
        bind(c, run_tori_dual);
    }
    {
        auto* c = common(tori->add_subcommand("leray", "Leray level / degree bound"), true);
        bind(c, run_tori_leray);
    }

    CLI::App* mt = app.add_subcommand("mirrortest", "topological mirror tests");
    mt->require_subcommand(1);
    {
        auto* c = common(mt->add_subcommand("hodge-numbers", "Hodge-number exchange test"), true);
        bind(c, run_mirrortest_hodge);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!action) {
        std::cerr << "error: no command selected\n";
        return 2;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
