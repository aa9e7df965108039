#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ttla/rootsys.hpp"
#include "ttla/scalar.hpp"

namespace ttla {

// Sparse vector over the fixed basis of a SimpleLie (basis index -> Scalar).
using GVec = std::map<int, Scalar>;

inline GVec gvUnit(int idx, Scalar c = Scalar::one()) {
    GVec v;
    if (!c.isZero()) v[idx] = c;
    return v;
}

inline void gvAddTo(GVec& dst, const GVec& src, const Scalar& factor = Scalar::one()) {
    if (factor.isZero()) return;
    for (const auto& [i, c] : src) {
        Scalar t = dst.count(i) ? dst[i] + c * factor : c * factor;
        if (t.isZero()) dst.erase(i);
        else dst[i] = t;
    }
}

inline GVec gvScale(const GVec& v, const Scalar& f) {
    GVec r;
    gvAddTo(r, v, f);
    return r;
}

inline GVec gvAdd(const GVec& a, const GVec& b) {
    GVec r = a;
    gvAddTo(r, b);
    return r;
}

inline GVec gvNeg(const GVec& v) { return gvScale(v, Scalar(-1)); }

inline bool gvIsZero(const GVec& v) { return v.empty(); }

// Simple Lie algebra of type A_n / D_n with a Chevalley basis.
//
// Basis layout: indices [0, P) are E_alpha for the P positive roots,
// [P, 2P) are E_{-alpha} in matching order, [2P, 2P+rank) are the simple
// coroots h_i. Structure-constant signs come from the asymmetry function
// eps of the root system:
//   [E_a, E_b]   = eps(a,b) E_{a+b}      if a+b is a root
//   [E_a, E_-a]  = -h_a                  (h_a the coroot of a)
//   [h_i, E_a]   = (alpha_i|a) E_a,      [h_i, h_j] = 0.
// The Chevalley triple of a positive root a is (E_a, -E_{-a}, h_a); the
// invariant form is (E_a|E_{-a}) = -1, (h_i|h_j) = Cartan_ij, rest zero,
// i.e. the unique invariant form normalized by (theta|theta) = 2.
// Construction validates the Jacobi identity on all basis triples and the
// invariance of the form exactly.
class SimpleLie {
  public:
    SimpleLie(LieType type, int rank) : rs_(type, rank) {
        np_ = rs_.numPositive();
        dim_ = 2 * np_ + rank;
        buildTable();
        validate();
    }

    const RootSystem& roots() const { return rs_; }
    int dim() const { return dim_; }
    int rank() const { return rs_.rank(); }
    int numPositive() const { return np_; }

    bool isRootIndex(int idx) const { return idx < 2 * np_; }
    int hIndex(int i) const { return 2 * np_ + i; }

    // E_alpha for any root alpha (either sign).
    int eIndex(const RootVec& alpha) const { return rs_.rootIndex(alpha); }

    RootVec rootOfIndex(int idx) const { return rs_.rootByIndex(idx); }

    // Chevalley triple members for a positive (or any) root.
    GVec chevE(const RootVec& alpha) const { return gvUnit(eIndex(alpha)); }
    GVec chevF(const RootVec& alpha) const {
        RootVec neg = alpha;
        for (auto& c : neg) c = -c;
        return gvScale(gvUnit(eIndex(neg)), Scalar(-1));
    }
    // Coroot h_alpha = sum c_i h_i for alpha = sum c_i alpha_i (simply laced).
    GVec coroot(const RootVec& alpha) const {
        GVec v;
        for (int i = 0; i < rank(); ++i)
            if (alpha[i] != 0) v[hIndex(i)] = Scalar(alpha[i]);
        return v;
    }

    const GVec& bracketBasis(int i, int j) const { return table_[i][j]; }

    GVec bracket(const GVec& x, const GVec& y) const {
        GVec r;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y) gvAddTo(r, table_[i][j], ci * cj);
        return r;
    }

    Scalar formBasis(int i, int j) const {
        if (i < 2 * np_ && j < 2 * np_) {
            // (E_a | E_b) nonzero only for b = -a, value eps(a,-a) = -1
            int ia = (i < np_) ? i : i - np_;
            int ja = (j < np_) ? j : j - np_;
            if (ia == ja && ((i < np_) != (j < np_))) return Scalar(-1);
            return Scalar::zero();
        }
        if (i >= 2 * np_ && j >= 2 * np_)
            return Scalar(rs_.cartan()[i - 2 * np_][j - 2 * np_]);
        return Scalar::zero();
    }

    Scalar form(const GVec& x, const GVec& y) const {
        Scalar acc;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y) acc += ci * cj * formBasis(i, j);
        return acc;
    }

    // Weight of an ad-h eigenvector: eigenvalues under the simple coroots.
    // Throws if x is not homogeneous.
    std::vector<long> hWeight(const GVec& x) const {
        std::vector<long> w(rank(), 0);
        if (gvIsZero(x)) throw std::domain_error("weight of zero vector");
        for (int i = 0; i < rank(); ++i) {
            GVec bx = bracket(gvUnit(hIndex(i)), x);
            // solve bx = m*x for rational m: compare leading coefficients
            if (gvIsZero(bx)) {
                w[i] = 0;
                continue;
            }
            auto lead = x.begin();
            auto it = bx.find(lead->first);
            if (it == bx.end()) throw std::domain_error("not an ad-h eigenvector");
            Scalar m = it->second / lead->second;
            if (!(bx == gvScale(x, m)) || !m.isRational())
                throw std::domain_error("not an ad-h eigenvector");
            w[i] = ratToLong(m.toRat());
        }
        return w;
    }

    std::string basisName(int idx) const {
        if (idx >= 2 * np_) return "h" + std::to_string(idx - 2 * np_ + 1);
        RootVec r = rs_.rootByIndex(idx);
        std::ostringstream os;
        os << "e[";
        for (size_t k = 0; k < r.size(); ++k) {
            if (k) os << ",";
            os << r[k];
        }
        os << "]";
        return os.str();
    }

    std::string render(const GVec& v) const {
        if (v.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [i, c] : v) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.toString() << ")*" << basisName(i);
        }
        return os.str();
    }

  private:
    void buildTable() {
        table_.assign(dim_, std::vector<GVec>(dim_));
        auto setRR = [&](int i, int j) {
            RootVec a = rs_.rootByIndex(i), b = rs_.rootByIndex(j);
            RootVec sum(rank(), 0);
            bool zero = true;
            for (int k = 0; k < rank(); ++k) {
                sum[k] = a[k] + b[k];
                if (sum[k] != 0) zero = false;
            }
            if (zero) {
                table_[i][j] = gvScale(coroot(a), Scalar(-1));
            } else if (rs_.isRoot(sum)) {
                table_[i][j] = gvUnit(eIndex(sum), Scalar(rs_.eps(a, b)));
            }
        };
        for (int i = 0; i < 2 * np_; ++i)
            for (int j = 0; j < 2 * np_; ++j) setRR(i, j);
        for (int h = 0; h < rank(); ++h) {
            for (int j = 0; j < 2 * np_; ++j) {
                RootVec b = rs_.rootByIndex(j);
                long pair = rs_.dot(rs_.simpleRoot(h), b);
                if (pair != 0) {
                    table_[hIndex(h)][j] = gvUnit(j, Scalar(pair));
                    table_[j][hIndex(h)] = gvUnit(j, Scalar(-pair));
                }
            }
        }
    }

    void validate() const {
        // Chevalley sl2 relations per positive root.
        for (int k = 0; k < np_; ++k) {
            RootVec a = rs_.positiveRoots()[k];
            GVec e = chevE(a), f = chevF(a), h = coroot(a);
            if (!(bracket(e, f) == h)) throw std::logic_error("[e,f] != h");
            if (!(bracket(h, e) == gvScale(e, Scalar(2)))) throw std::logic_error("[h,e] != 2e");
            if (!(bracket(h, f) == gvScale(f, Scalar(-2)))) throw std::logic_error("[h,f] != -2f");
        }
        // Jacobi on all basis triples, exact.
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j) {
                // antisymmetry
                if (!(table_[i][j] == gvNeg(table_[j][i])))
                    throw std::logic_error("bracket not antisymmetric");
                for (int k = j; k < dim_; ++k) {
                    GVec s = bracket(table_[j][k], gvUnit(i));
                    gvAddTo(s, bracket(table_[k][i], gvUnit(j)));
                    gvAddTo(s, bracket(table_[i][j], gvUnit(k)));
                    if (!gvIsZero(s)) throw std::logic_error("Jacobi identity failed");
                }
            }
        // Form: symmetry and invariance ([x,y]|z) = (x|[y,z]) on basis triples.
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (!(formBasis(i, j) == formBasis(j, i)))
                    throw std::logic_error("form not symmetric");
                for (int k = 0; k < dim_; ++k) {
                    Scalar lhs = form(table_[i][j], gvUnit(k));
                    Scalar rhs = form(gvUnit(i), table_[j][k]);
                    if (!(lhs == rhs)) throw std::logic_error("form not invariant");
                }
            }
    }

    RootSystem rs_;
    int np_ = 0;
    int dim_ = 0;
    std::vector<std::vector<GVec>> table_;
};

}  // namespace ttla
