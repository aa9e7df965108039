#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "ttla/simplelie.hpp"

namespace ttla {

// Diagram automorphism of a SimpleLie: a Dynkin-diagram symmetry extended to
// the whole Chevalley basis. On simple generators mu(e_i) = e_{perm(i)},
// mu(f_i) = f_{perm(i)}, mu(h_i) = h_{perm(i)}; on the remaining root vectors
// the signs are propagated through iterated brackets from simple generators
// and then the automorphism property is re-checked on every basis pair.
class DiagramAut {
  public:
    DiagramAut(const SimpleLie& g, std::vector<int> perm) : g_(&g), perm_(std::move(perm)) {
        const auto& rs = g.roots();
        int n = rs.rank();
        if (static_cast<int>(perm_.size()) != n)
            throw std::domain_error("permutation size != rank");
        std::vector<int> seen(n, 0);
        for (int v : perm_) {
            if (v < 0 || v >= n || seen[v]++) throw std::domain_error("not a permutation");
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rs.cartan()[i][j] != rs.cartan()[perm_[i]][perm_[j]])
                    throw std::domain_error("permutation is not a diagram symmetry");
        order_ = 1;
        {
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::vector<int> cur = perm_;
            while (cur != p) {
                std::vector<int> nxt(n);
                for (int i = 0; i < n; ++i) nxt[i] = perm_[cur[i]];
                cur = nxt;
                ++order_;
                if (order_ > n + 1) throw std::logic_error("order computation ran away");
            }
        }
        buildSigns();
        verify();
    }

    const SimpleLie& algebra() const { return *g_; }
    int order() const { return order_; }
    int permute(int node) const { return perm_[node]; }

    RootVec mapRoot(const RootVec& a) const {
        RootVec r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) r[perm_[i]] = a[i];
        return r;
    }

    // Image of a basis vector: (target index, sign).
    std::pair<int, int> mapBasis(int idx) const { return images_[idx]; }

    GVec apply(const GVec& x) const {
        GVec r;
        for (const auto& [i, c] : x) {
            auto [j, s] = images_[i];
            gvAddTo(r, gvUnit(j), s < 0 ? -c : c);
        }
        return r;
    }

    GVec applyPower(const GVec& x, int k) const {
        k %= order_;
        if (k < 0) k += order_;
        GVec r = x;
        for (int t = 0; t < k; ++t) r = apply(r);
        return r;
    }

  private:
    void buildSigns() {
        const SimpleLie& g = *g_;
        const RootSystem& rs = g.roots();
        int np = g.numPositive();
        images_.assign(g.dim(), {-1, 0});
        for (int i = 0; i < rs.rank(); ++i)
            images_[g.hIndex(i)] = {g.hIndex(perm_[i]), 1};
        // positive roots by height; simple roots map with sign +1
        for (int k = 0; k < np; ++k) {
            const RootVec& gamma = rs.positiveRoots()[k];
            int ht = std::accumulate(gamma.begin(), gamma.end(), 0);
            int gi = rs.rootIndex(gamma);
            if (ht == 1) {
                images_[gi] = {rs.rootIndex(mapRoot(gamma)), 1};
                continue;
            }
            // find a simple alpha_i with gamma - alpha_i a positive root
            for (int i = 0; i < rs.rank(); ++i) {
                if (gamma[i] == 0) continue;
                RootVec beta = gamma;
                beta[i] -= 1;
                bool pos = true, zero = true;
                for (int c : beta) {
                    if (c < 0) pos = false;
                    if (c != 0) zero = false;
                }
                if (!pos || zero || !rs.isRoot(beta)) continue;
                RootVec ai = rs.simpleRoot(i);
                int sBeta = images_[rs.rootIndex(beta)].second;
                int sign = rs.eps(ai, beta) * rs.eps(mapRoot(ai), mapRoot(beta)) * sBeta;
                images_[gi] = {rs.rootIndex(mapRoot(gamma)), sign};
                break;
            }
            if (images_[gi].first < 0) throw std::logic_error("root has no BFS parent");
        }
        // negative root vectors carry the same sign as their positives
        for (int k = 0; k < np; ++k) {
            auto [posTarget, s] = images_[k];
            images_[np + k] = {posTarget + np, s};
        }
    }

    void verify() const {
        const SimpleLie& g = *g_;
        // mu^order = identity on every basis vector
        for (int i = 0; i < g.dim(); ++i) {
            GVec v = applyPower(gvUnit(i), order_);
            if (!(v == gvUnit(i))) throw std::logic_error("mu^r != id");
        }
        // bracket preservation and form preservation on all basis pairs
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j) {
                GVec lhs = apply(g.bracketBasis(i, j));
                GVec rhs = g.bracket(apply(gvUnit(i)), apply(gvUnit(j)));
                if (!(lhs == rhs)) throw std::logic_error("mu does not preserve brackets");
                Scalar fl = g.form(apply(gvUnit(i)), apply(gvUnit(j)));
                if (!(fl == g.formBasis(i, j))) throw std::logic_error("mu does not preserve form");
            }
    }

    const SimpleLie* g_;
    std::vector<int> perm_;
    int order_ = 1;
    std::vector<std::pair<int, int>> images_;
};

// The standard twist for each configured type (1-based node labels in docs):
//   A_n  : i <-> n+1-i                     (order 2)
//   D_n  : swap the fork tips n-1, n       (order 2)
//   D_4  : rotate the outer nodes 1->3->4->1 (order 3)
inline std::vector<int> standardTwistPerm(LieType type, int rank, int r) {
    std::vector<int> p(rank);
    std::iota(p.begin(), p.end(), 0);
    if (type == LieType::A) {
        if (r != 2) throw std::domain_error("type A twists have order 2");
        for (int i = 0; i < rank; ++i) p[i] = rank - 1 - i;
    } else if (type == LieType::D && r == 2) {
        std::swap(p[rank - 2], p[rank - 1]);
    } else if (type == LieType::D && r == 3) {
        if (rank != 4) throw std::domain_error("triality needs D4");
        p[0] = 2;  // 1 -> 3
        p[2] = 3;  // 3 -> 4
        p[3] = 0;  // 4 -> 1
    } else {
        throw std::domain_error("unsupported twist order");
    }
    return p;
}

}  // namespace ttla
