#pragma once

// The (l,l)-graded cohomology model: dimensions per degree, perfect pairings
// between complementary degrees, flattened basis indexing, and the Hodge
// diamond with the topological mirror test.

#include "mirrorcalc/linalg.hpp"
#include "mirrorcalc/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorcalc::avhs {

// direct sum of H^{l,l} for l = 0..n with the intersection pairing
struct GradedSpace {
    int n = 0;
    std::vector<int> dims;     // size n+1
    std::vector<QMat> pairings; // pairings[l](i,j) = <l-basis i, (n-l)-basis j>
    std::vector<std::string> labels; // optional, flattened, size total()

    int total() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    int offset(int l) const {
        int t = 0;
        for (int k = 0; k < l; ++k) t += dims[k];
        return t;
    }

    int degree_of(int global) const {
        int t = 0;
        for (int l = 0; l <= n; ++l) {
            t += dims[l];
            if (global < t) return l;
        }
        throw std::out_of_range("graded space: basis index out of range");
    }

    int index_in_degree(int global) const { return global - offset(degree_of(global)); }

    Rat pairing(int ga, int gb) const {
        int la = degree_of(ga), lb = degree_of(gb);
        if (la + lb != n) return Rat(0);
        return pairings[la](ga - offset(la), gb - offset(lb));
    }

    void validate() const {
        if (n < 0 || static_cast<int>(dims.size()) != n + 1)
            throw std::invalid_argument("graded space: need dimensions for degrees 0..n");
        if (dims[0] != 1)
            throw std::invalid_argument("graded space: H^{0,0} must be one-dimensional");
        for (int d : dims)
            if (d < 0) throw std::invalid_argument("graded space: negative dimension");
        if (static_cast<int>(pairings.size()) != n + 1)
            throw std::invalid_argument("graded space: need one pairing per degree");
        for (int l = 0; l <= n; ++l) {
            if (dims[l] != dims[n - l])
                throw std::invalid_argument("graded space: perfect pairing needs matching "
                                            "complementary dimensions");
            const QMat& p = pairings[l];
            if (p.rows() != dims[l] || p.cols() != dims[n - l])
                throw std::invalid_argument("graded space: pairing shape mismatch");
            if (dims[l] > 0 && rank_q(p) != dims[l])
                throw std::invalid_argument("graded space: degenerate pairing");
            if (p.transpose() != pairings[n - l])
                throw std::invalid_argument("graded space: pairing must transpose across "
                                            "complementary degrees");
        }
        if (!labels.empty() && static_cast<int>(labels.size()) != total())
            throw std::invalid_argument("graded space: label count mismatch");
    }
};

struct HodgeDiamond {
    int n = 0;
    IMat h; // (n+1) x (n+1), h(p,q)

    void validate() const {
        if (h.rows() != n + 1 || h.cols() != n + 1)
            throw std::invalid_argument("hodge diamond: table must be (n+1) x (n+1)");
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                if (h(p, q) < 0) throw std::invalid_argument("hodge diamond: negative entry");
                if (h(p, q) != h(q, p))
                    throw std::invalid_argument("hodge diamond: h(p,q) != h(q,p)");
                if (h(p, q) != h(n - p, n - q))
                    throw std::invalid_argument("hodge diamond: h(p,q) != h(n-p,n-q)");
            }
    }
};

// h^{n-1,1}(X) = h^{1,1}(Y) and h^{1,1}(X) = h^{n-1,1}(Y)
inline bool topological_mirror_test(const HodgeDiamond& x, const HodgeDiamond& y) {
    if (x.n != y.n)
        throw std::invalid_argument("topological mirror test: dimension mismatch");
    if (x.n < 1) throw std::invalid_argument("topological mirror test: need dimension at least 1");
    x.validate();
    y.validate();
    return x.h(x.n - 1, 1) == y.h(1, 1) && x.h(1, 1) == y.h(y.n - 1, 1);
}

} // namespace mirrorcalc::avhs
