#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttla/rational.hpp"

namespace ttla {

// Root coordinates in the simple-root basis.
using RootVec = std::vector<int>;

enum class LieType { A, D };

inline char lieTypeChar(LieType t) { return t == LieType::A ? 'A' : 'D'; }

inline LieType lieTypeFromChar(char c) {
    if (c == 'A' || c == 'a') return LieType::A;
    if (c == 'D' || c == 'd') return LieType::D;
    throw std::domain_error(std::string("unsupported Lie type: ") + c);
}

// Simply-laced root system of type A_n or D_n.
//
// Node labels (0-based internally, 1-based in all rendered output):
//   A_n : path 1 - 2 - ... - n
//   D_n : path 1 - 2 - ... - (n-2), with both n-1 and n attached to n-2
// See docs/concordance.md for how these labels meet the twisted constructions.
class RootSystem {
  public:
    RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
        if (rank < 1) throw std::domain_error("rank must be positive");
        if (type == LieType::D && rank < 3)
            throw std::domain_error("type D needs rank >= 3");
        buildCartan();
        enumeratePositiveRoots();
        const int expected =
            type == LieType::A ? rank * (rank + 1) / 2 : rank * (rank - 1);
        if (static_cast<int>(positive_.size()) != expected)
            throw std::logic_error("positive root count mismatch");
        for (const auto& r : positive_)
            if (dot(r, r) != 2) throw std::logic_error("root of norm != 2");
    }

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<RootVec>& positiveRoots() const { return positive_; }
    int numPositive() const { return static_cast<int>(positive_.size()); }

    // (u|v) with u, v in simple-root coordinates; the Gram matrix equals the
    // Cartan matrix in the simply-laced normalization (alpha|alpha) = 2.
    long dot(const RootVec& u, const RootVec& v) const {
        long acc = 0;
        for (int i = 0; i < rank_; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < rank_; ++j) {
                if (v[j] == 0) continue;
                acc += static_cast<long>(u[i]) * v[j] * cartan_[i][j];
            }
        }
        return acc;
    }

    bool isRoot(const RootVec& v) const { return rootIndex_.count(v) > 0; }

    // Index of a root in the full list: positives first, then negatives in
    // matching order (index of -alpha = index of alpha + numPositive()).
    int rootIndex(const RootVec& v) const {
        auto it = rootIndex_.find(v);
        if (it == rootIndex_.end()) throw std::domain_error("not a root");
        return it->second;
    }

    RootVec rootByIndex(int idx) const {
        int np = numPositive();
        if (idx < 0 || idx >= 2 * np) throw std::domain_error("bad root index");
        if (idx < np) return positive_[idx];
        RootVec v = positive_[idx - np];
        for (auto& c : v) c = -c;
        return v;
    }

    // Frenkel-Kac style bimultiplicative asymmetry function on the root
    // lattice: eps(a,a) = -1 on roots, eps(a,b)eps(b,a) = (-1)^(a|b).
    int eps(const RootVec& u, const RootVec& v) const {
        long parity = 0;
        for (int i = 0; i < rank_; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < rank_; ++j) {
                if (v[j] == 0) continue;
                int eta;
                if (i == j) eta = 1;
                else if (i < j) eta = (cartan_[i][j] % 2 != 0) ? 1 : 0;
                else eta = 0;
                parity += static_cast<long>(u[i]) * v[j] * eta;
            }
        }
        return (parity % 2 == 0) ? 1 : -1;
    }

    RootVec simpleRoot(int i) const {
        RootVec v(rank_, 0);
        v[i] = 1;
        return v;
    }

    RootVec highestRoot() const {
        RootVec best = positive_.front();
        int bestHt = 0;
        for (const auto& r : positive_) {
            int ht = std::accumulate(r.begin(), r.end(), 0);
            if (ht > bestHt) {
                bestHt = ht;
                best = r;
            }
        }
        return best;
    }

    std::string name() const { return std::string(1, lieTypeChar(type_)) + std::to_string(rank_); }

  private:
    void buildCartan() {
        cartan_.assign(rank_, std::vector<int>(rank_, 0));
        for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
        auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
        if (type_ == LieType::A) {
            for (int i = 0; i + 1 < rank_; ++i) link(i, i + 1);
        } else {
            for (int i = 0; i + 1 < rank_ - 1; ++i) link(i, i + 1);
            link(rank_ - 3, rank_ - 1);
        }
    }

    void enumeratePositiveRoots() {
        std::vector<RootVec> frontier;
        for (int i = 0; i < rank_; ++i) {
            positive_.push_back(simpleRoot(i));
            frontier.push_back(simpleRoot(i));
        }
        std::map<RootVec, bool> seen;
        for (const auto& r : positive_) seen[r] = true;
        while (!frontier.empty()) {
            std::vector<RootVec> next;
            for (const auto& beta : frontier) {
                for (int i = 0; i < rank_; ++i) {
                    if (dot(beta, simpleRoot(i)) != -1) continue;
                    RootVec g = beta;
                    g[i] += 1;
                    if (!seen[g]) {
                        seen[g] = true;
                        positive_.push_back(g);
                        next.push_back(g);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(positive_.begin(), positive_.end(),
                  [&](const RootVec& a, const RootVec& b) {
                      int ha = std::accumulate(a.begin(), a.end(), 0);
                      int hb = std::accumulate(b.begin(), b.end(), 0);
                      if (ha != hb) return ha < hb;
                      return a < b;
                  });
        for (int k = 0; k < static_cast<int>(positive_.size()); ++k)
            rootIndex_[positive_[k]] = k;
        int np = numPositive();
        for (int k = 0; k < np; ++k) {
            RootVec neg = positive_[k];
            for (auto& c : neg) c = -c;
            rootIndex_[neg] = np + k;
        }
    }

    LieType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootVec> positive_;
    std::map<RootVec, int> rootIndex_;
};

}  // namespace ttla
