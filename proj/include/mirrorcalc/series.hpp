#pragma once

// Multivariate formal power series truncated at a total-degree cutoff, with
// exact rational coefficients, plus matrices of such series. Everything is
// arithmetic in Q[q_1..q_r] / (total degree > D).

#include "mirrorcalc/linalg.hpp"
#include "mirrorcalc/numeric.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mirrorcalc::ser {

using Expo = std::vector<int>;

inline int total_degree(const Expo& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {
        if (nvars < 0 || cutoff < 0) throw std::invalid_argument("series: bad shape");
    }

    static TruncatedSeries constant(int nvars, int cutoff, const Rat& c) {
        TruncatedSeries s(nvars, cutoff);
        s.add_term(Expo(nvars, 0), c);
        return s;
    }

    static TruncatedSeries monomial(int nvars, int cutoff, const Expo& e, const Rat& c) {
        TruncatedSeries s(nvars, cutoff);
        s.add_term(e, c);
        return s;
    }

    // sum_{k >= 1} q^{k eta}: the expansion of q^eta / (1 - q^eta)
    static TruncatedSeries geometric(int nvars, int cutoff, const Expo& eta) {
        if (static_cast<int>(eta.size()) != nvars)
            throw std::invalid_argument("series: exponent length mismatch");
        int d = total_degree(eta);
        if (d <= 0) throw std::invalid_argument("series: geometric needs a positive-degree class");
        TruncatedSeries s(nvars, cutoff);
        Expo cur(nvars, 0);
        for (int k = 1; k * d <= cutoff; ++k) {
            for (int i = 0; i < nvars; ++i) cur[i] += eta[i];
            s.add_term(cur, Rat(1));
        }
        return s;
    }

    int nvars() const { return nvars_; }
    int cutoff() const { return cutoff_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("series: exponent length mismatch");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("series: negative exponent");
        if (c == 0 || total_degree(e) > cutoff_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) terms_.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat eval0() const { return coeff(Expo(nvars_, 0)); }
    bool is_zero() const { return terms_.empty(); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_shape(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_shape(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_shape(b);
        TruncatedSeries out(a.nvars_, a.cutoff_);
        for (const auto& [ea, ca] : a.terms_) {
            int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.cutoff_) continue;
                Expo e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries scaled(const Rat& c) const {
        TruncatedSeries out(nvars_, cutoff_);
        if (c == 0) return out;
        for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
        return out;
    }

    // q_j d/dq_j
    TruncatedSeries theta(int j) const {
        if (j < 0 || j >= nvars_) throw std::invalid_argument("series: variable out of range");
        TruncatedSeries out(nvars_, cutoff_);
        for (const auto& [e, v] : terms_)
            if (e[j] != 0) out.terms_.emplace(e, v * e[j]);
        return out;
    }

    // substitution q_j := phi[j]; each phi must have zero constant term
    TruncatedSeries subst(const std::vector<TruncatedSeries>& phi) const {
        if (static_cast<int>(phi.size()) != nvars_)
            throw std::invalid_argument("series: substitution arity mismatch");
        int out_vars = nvars_ == 0 ? 0 : phi[0].nvars_;
        int out_cut = cutoff_;
        for (const auto& p : phi) {
            if (p.nvars_ != out_vars || p.cutoff_ != cutoff_)
                throw std::invalid_argument("series: substitution shape mismatch");
            if (p.eval0() != 0)
                throw std::invalid_argument("series: substitution needs zero constant terms");
        }
        // memoized powers per variable
        std::vector<std::vector<TruncatedSeries>> pow(nvars_);
        for (int j = 0; j < nvars_; ++j) pow[j].push_back(constant(out_vars, out_cut, Rat(1)));
        auto power = [&](int j, int k) -> const TruncatedSeries& {
            while (static_cast<int>(pow[j].size()) <= k) pow[j].push_back(pow[j].back() * phi[j]);
            return pow[j][k];
        };
        TruncatedSeries out(out_vars, out_cut);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) > out_cut) continue; // phi has positive valuation
            TruncatedSeries term = constant(out_vars, out_cut, c);
            for (int j = 0; j < nvars_; ++j)
                if (e[j] != 0) term = term * power(j, e[j]);
            out += term;
        }
        return out;
    }

    // multiplicative inverse; needs a nonzero constant term
    TruncatedSeries inverse() const {
        Rat c0 = eval0();
        if (c0 == 0) throw std::invalid_argument("series: inverse of a non-unit");
        // u = c0 (1 + w); 1/u = (1/c0) sum (-w)^k
        TruncatedSeries w(nvars_, cutoff_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) > 0) w.add_term(e, -c / c0);
        TruncatedSeries out = constant(nvars_, cutoff_, Rat(1));
        TruncatedSeries acc = constant(nvars_, cutoff_, Rat(1));
        for (int k = 1; k <= cutoff_; ++k) {
            acc = acc * w;
            if (acc.is_zero()) break;
            out += acc;
        }
        return out.scaled(Rat(1) / c0);
    }

    // quotient by one variable; every monomial must contain it
    TruncatedSeries divide_by_var(int j) const {
        if (j < 0 || j >= nvars_) throw std::invalid_argument("series: variable out of range");
        TruncatedSeries out(nvars_, cutoff_);
        for (const auto& [e, c] : terms_) {
            if (e[j] == 0) throw std::invalid_argument("series: not divisible by the variable");
            Expo f = e;
            --f[j];
            out.terms_.emplace(f, c);
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.nvars_ == b.nvars_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

private:
    void check_shape(const TruncatedSeries& o) const {
        if (nvars_ != o.nvars_ || cutoff_ != o.cutoff_)
            throw std::invalid_argument("series: mixed shapes in arithmetic");
    }

    int nvars_ = 0;
    int cutoff_ = 0;
    std::map<Expo, Rat> terms_;
};

// dense matrix of truncated series, all with one shared shape
struct SeriesMat {
    int rows = 0;
    int cols = 0;
    int nvars = 0;
    int cutoff = 0;
    std::vector<TruncatedSeries> data;

    SeriesMat() = default;
    SeriesMat(int r, int c, int nv, int cut)
        : rows(r), cols(c), nvars(nv), cutoff(cut),
          data(static_cast<std::size_t>(r) * c, TruncatedSeries(nv, cut)) {}

    static SeriesMat from_constant(const QMat& m, int nvars, int cutoff) {
        SeriesMat out(m.rows(), m.cols(), nvars, cutoff);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                out(i, j) = TruncatedSeries::constant(nvars, cutoff, m(i, j));
        return out;
    }

    TruncatedSeries& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const TruncatedSeries& operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }

    QMat eval0() const {
        QMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).eval0();
        return m;
    }

    SeriesMat theta(int v) const {
        SeriesMat out(rows, cols, nvars, cutoff);
        for (std::size_t k = 0; k < data.size(); ++k) out.data[k] = data[k].theta(v);
        return out;
    }

    SeriesMat subst(const std::vector<TruncatedSeries>& phi) const {
        SeriesMat out;
        out.rows = rows;
        out.cols = cols;
        out.nvars = phi.empty() ? nvars : phi[0].nvars();
        out.cutoff = cutoff;
        out.data.reserve(data.size());
        for (const auto& s : data) out.data.push_back(s.subst(phi));
        return out;
    }

    bool is_zero() const {
        for (const auto& s : data)
            if (!s.is_zero()) return false;
        return true;
    }

    friend SeriesMat operator+(const SeriesMat& a, const SeriesMat& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("series mat: shape");
        SeriesMat out = a;
        for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] += b.data[k];
        return out;
    }
    friend SeriesMat operator-(const SeriesMat& a, const SeriesMat& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("series mat: shape");
        SeriesMat out = a;
        for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] -= b.data[k];
        return out;
    }
    friend SeriesMat operator*(const SeriesMat& a, const SeriesMat& b) {
        if (a.cols != b.rows || a.nvars != b.nvars || a.cutoff != b.cutoff)
            throw std::invalid_argument("series mat: shape");
        SeriesMat out(a.rows, b.cols, a.nvars, a.cutoff);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols; ++j) {
                    if (b(k, j).is_zero()) continue;
                    out(i, j) += a(i, k) * b(k, j);
                }
            }
        return out;
    }

    friend bool operator==(const SeriesMat& a, const SeriesMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.nvars == b.nvars
               && a.cutoff == b.cutoff && a.data == b.data;
    }

    // scale a series by this matrix applied to a constant vector
    std::vector<TruncatedSeries> apply(const QVec& v) const {
        if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("series mat: apply shape");
        std::vector<TruncatedSeries> out(rows, TruncatedSeries(nvars, cutoff));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (v[j] != 0) out[i] += (*this)(i, j).scaled(v[j]);
        return out;
    }
};

} // namespace mirrorcalc::ser
