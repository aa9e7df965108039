#pragma once

#include <optional>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "ttla/graded.hpp"

namespace ttla {

// Laurent monomial t_1^{m_1} ... t_n^{m_n}.
using Mono = std::vector<int>;

inline Mono monoZero(int n) { return Mono(n, 0); }
inline Mono monoAdd(const Mono& a, const Mono& b) {
    Mono r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline bool monoIsZero(const Mono& m) {
    for (int v : m)
        if (v) return false;
    return true;
}

class TwistedToroidal;

// Element of the toroidal algebra T = L_n(g) + Z + D, kept in canonical form:
// the central coefficients at each monomial s != 0 are reduced modulo the
// Kahler relation sum_i s_i t^s K_i = 0 by eliminating the coordinate at the
// largest index j with s_j != 0.
class LieElement {
  public:
    struct LoopKey {
        int basis;
        Mono mono;
        bool operator<(const LoopKey& o) const {
            if (basis != o.basis) return basis < o.basis;
            return mono < o.mono;
        }
        bool operator==(const LoopKey& o) const { return basis == o.basis && mono == o.mono; }
    };
    struct CentKey {
        int i;  // 0-based: K_{i+1}
        Mono mono;
        bool operator<(const CentKey& o) const {
            if (mono != o.mono) return mono < o.mono;
            return i < o.i;
        }
        bool operator==(const CentKey& o) const { return i == o.i && mono == o.mono; }
    };

    LieElement() : ctx_(nullptr) {}
    explicit LieElement(const TwistedToroidal* ctx) : ctx_(ctx) {}

    const TwistedToroidal* context() const { return ctx_; }
    bool isZero() const { return loop_.empty() && cent_.empty() && der_.empty(); }

    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.loop_ == b.loop_ && a.cent_ == b.cent_ && a.der_ == b.der_;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    const std::map<LoopKey, Scalar>& loopTerms() const { return loop_; }
    const std::map<CentKey, Scalar>& centralTerms() const { return cent_; }
    const std::map<int, Scalar>& derivTerms() const { return der_; }

    void addLoop(int basis, const Mono& m, const Scalar& c) {
        if (c.isZero()) return;
        LoopKey k{basis, m};
        auto it = loop_.find(k);
        Scalar t = (it == loop_.end()) ? c : it->second + c;
        if (t.isZero()) {
            if (it != loop_.end()) loop_.erase(it);
        } else {
            loop_[k] = t;
        }
    }
    void addCentralRaw(int i, const Mono& m, const Scalar& c) {
        if (c.isZero()) return;
        CentKey k{i, m};
        auto it = cent_.find(k);
        Scalar t = (it == cent_.end()) ? c : it->second + c;
        if (t.isZero()) {
            if (it != cent_.end()) cent_.erase(it);
        } else {
            cent_[k] = t;
        }
    }
    void addDeriv(int j, const Scalar& c) {
        if (c.isZero()) return;
        auto it = der_.find(j);
        Scalar t = (it == der_.end()) ? c : it->second + c;
        if (t.isZero()) {
            if (it != der_.end()) der_.erase(it);
        } else {
            der_[j] = t;
        }
    }

    // Reduce every central monomial block modulo the Kahler relation.
    void canonicalize() {
        std::map<Mono, std::map<int, Scalar>> blocks;
        for (const auto& [k, c] : cent_) blocks[k.mono][k.i] = c;
        cent_.clear();
        for (auto& [mono, coeffs] : blocks) {
            if (!monoIsZero(mono)) {
                int pivot = -1;
                for (int j = static_cast<int>(mono.size()) - 1; j >= 0; --j)
                    if (mono[j] != 0) {
                        pivot = j;
                        break;
                    }
                auto it = coeffs.find(pivot);
                if (it != coeffs.end()) {
                    Scalar factor = it->second / Scalar(static_cast<long>(mono[pivot]));
                    for (int j = 0; j < static_cast<int>(mono.size()); ++j) {
                        if (mono[j] == 0) continue;
                        auto jt = coeffs.find(j);
                        Scalar cur = (jt == coeffs.end()) ? Scalar::zero() : jt->second;
                        coeffs[j] = cur - factor * Scalar(static_cast<long>(mono[j]));
                    }
                }
            }
            for (const auto& [i, c] : coeffs)
                if (!c.isZero()) cent_[CentKey{i, mono}] = c;
        }
    }

    LieElement& operator+=(const LieElement& o) {
        for (const auto& [k, c] : o.loop_) addLoop(k.basis, k.mono, c);
        for (const auto& [k, c] : o.cent_) addCentralRaw(k.i, k.mono, c);
        for (const auto& [j, c] : o.der_) addDeriv(j, c);
        canonicalize();
        if (!ctx_) ctx_ = o.ctx_;
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }

    LieElement scaled(const Scalar& f) const {
        LieElement r(ctx_);
        if (f.isZero()) return r;
        for (const auto& [k, c] : loop_) r.loop_[k] = c * f;
        for (const auto& [k, c] : cent_) r.cent_[k] = c * f;
        for (const auto& [j, c] : der_) r.der_[j] = c * f;
        return r;
    }
    friend LieElement operator-(const LieElement& a, const LieElement& b) {
        return a + b.scaled(Scalar(-1));
    }

    // g-part at a fixed monomial as a GVec.
    GVec loopAt(const Mono& m) const {
        GVec v;
        for (const auto& [k, c] : loop_)
            if (k.mono == m) v[k.basis] = c;
        return v;
    }
    std::vector<Mono> loopMonomials() const {
        std::vector<Mono> ms;
        for (const auto& [k, c] : loop_)
            if (ms.empty() || ms.back() != k.mono) {
                bool seen = false;
                for (const auto& m : ms) seen = seen || (m == k.mono);
                if (!seen) ms.push_back(k.mono);
            }
        return ms;
    }

  private:
    const TwistedToroidal* ctx_;
    std::map<LoopKey, Scalar> loop_;
    std::map<CentKey, Scalar> cent_;
    std::map<int, Scalar> der_;
};

// Weight functional in the basis {alpha_i (i in I0), delta_j, gamma_j}.
struct WeightFunctional {
    std::vector<Rat> alpha;
    std::vector<Rat> delta;
    std::vector<Rat> gamma;

    bool operator==(const WeightFunctional& o) const {
        return alpha == o.alpha && delta == o.delta && gamma == o.gamma;
    }
};

enum class RootClass { Positive, Negative, NullFamily, NotARoot };

struct RootClassification {
    RootClass cls = RootClass::NotARoot;
    bool imaginary = false;
};

// The ambient twisted toroidal algebra T(mu) for a fixed (g, mu, n); owns the
// finite-dimensional data and provides element constructors and the bracket.
class TwistedToroidal {
  public:
    TwistedToroidal(LieType type, int rank, int r, int nvars)
        : lie_(type, rank),
          mu_(lie_, standardTwistPerm(type, rank, r)),
          graded_(lie_, mu_),
          n_(nvars) {
        if (nvars < 1) throw std::domain_error("need at least one loop variable");
    }

    const SimpleLie& lie() const { return lie_; }
    const DiagramAut& mu() const { return mu_; }
    const GradedPieces& graded() const { return graded_; }
    int r() const { return graded_.r(); }
    int nvars() const { return n_; }

    LieElement zero() const { return LieElement(this); }

    LieElement loopTerm(const GVec& x, const Mono& m) const {
        requireMono(m);
        LieElement e(this);
        for (const auto& [i, c] : x) e.addLoop(i, m, c);
        return e;
    }
    LieElement central(int i, const Mono& m) const {  // t^m K_{i+1}
        requireMono(m);
        if (i < 0 || i >= n_) throw std::domain_error("central index out of range");
        LieElement e(this);
        e.addCentralRaw(i, m, Scalar::one());
        e.canonicalize();
        return e;
    }
    LieElement deriv(int j) const {
        if (j < 0 || j >= n_) throw std::domain_error("derivation index out of range");
        LieElement e(this);
        e.addDeriv(j, Scalar::one());
        return e;
    }
    // Monomial from t1-exponent and the tail exponents.
    Mono mono(int m1, const std::vector<int>& tail = {}) const {
        Mono m(n_, 0);
        m[0] = m1;
        for (size_t i = 0; i < tail.size() && i + 1 < static_cast<size_t>(n_); ++i)
            m[i + 1] = tail[i];
        return m;
    }

    // Affine generators of section 2.6.
    LieElement e0() const {
        if (graded_.isA2l()) return loopTerm(graded_.chevFTheta0(), mono(1));
        return loopTerm(graded_.thetaF(1), mono(1));
    }
    LieElement f0() const {
        if (graded_.isA2l()) return loopTerm(graded_.chevETheta0(), mono(-1));
        return loopTerm(graded_.thetaE(r() - 1), mono(-1));
    }
    LieElement h0() const { return bracket(e0(), f0()); }

    LieElement bracket(const LieElement& a, const LieElement& b) const {
        requireSameContext(a);
        requireSameContext(b);
        LieElement out(this);
        // loop x loop
        for (const auto& [ka, ca] : a.loopTerms()) {
            for (const auto& [kb, cb] : b.loopTerms()) {
                Scalar c = ca * cb;
                Mono m = monoAdd(ka.mono, kb.mono);
                const GVec& br = lie_.bracketBasis(ka.basis, kb.basis);
                for (const auto& [idx, coef] : br) out.addLoop(idx, m, c * coef);
                Scalar f = lie_.formBasis(ka.basis, kb.basis);
                if (!f.isZero()) {
                    Scalar cf = c * f;
                    for (int i = 0; i < n_; ++i) {
                        if (ka.mono[i] == 0) continue;
                        out.addCentralRaw(i, m, cf * Scalar(static_cast<long>(ka.mono[i])));
                    }
                }
            }
            // loop x deriv: [x ot t^m, d_j] = -m_j x ot t^m
            for (const auto& [j, cb] : b.derivTerms())
                out.addLoop(ka.basis, ka.mono,
                            ca * cb * Scalar(static_cast<long>(-ka.mono[j])));
        }
        for (const auto& [ja, ca] : a.derivTerms()) {
            for (const auto& [kb, cb] : b.loopTerms())
                out.addLoop(kb.basis, kb.mono,
                            ca * cb * Scalar(static_cast<long>(kb.mono[ja])));
            for (const auto& [kb, cb] : b.centralTerms())
                out.addCentralRaw(kb.i, kb.mono,
                                  ca * cb * Scalar(static_cast<long>(kb.mono[ja])));
        }
        for (const auto& [ka, ca] : a.centralTerms())
            for (const auto& [j, cb] : b.derivTerms())
                out.addCentralRaw(ka.i, ka.mono,
                                  ca * cb * Scalar(static_cast<long>(-ka.mono[j])));
        out.canonicalize();
        return out;
    }

    // mu-tilde: x ot t^s -> xi^{-s_1} mu(x) ot t^s, t^s K_i -> xi^{-s_1} t^s K_i.
    LieElement muTilde(const LieElement& x) const {
        requireSameContext(x);
        LieElement out(this);
        for (const auto& [k, c] : x.loopTerms()) {
            auto [tgt, sign] = mu_.mapBasis(k.basis);
            Scalar f = c * xiPow(-k.mono[0]);
            out.addLoop(tgt, k.mono, sign < 0 ? -f : f);
        }
        for (const auto& [k, c] : x.centralTerms())
            out.addCentralRaw(k.i, k.mono, c * xiPow(-k.mono[0]));
        for (const auto& [j, c] : x.derivTerms()) out.addDeriv(j, c);
        out.canonicalize();
        return out;
    }

    // Projection onto the mu-tilde fixed points (idempotent).
    LieElement projectTwisted(const LieElement& x) const {
        LieElement acc(this);
        LieElement cur = x;
        for (int k = 0; k < r(); ++k) {
            acc += cur;
            cur = muTilde(cur);
        }
        return acc.scaled(Scalar(static_cast<long>(r())).inverse());
    }

    bool inTwisted(const LieElement& x) const {
        for (const auto& m : x.loopMonomials()) {
            GVec g = x.loopAt(m);
            GVec img = mu_.apply(g);
            if (!(img == gvScale(g, xiPow(m[0])))) return false;
        }
        for (const auto& [k, c] : x.centralTerms())
            if (modFix(k.mono[0], r()) != 0) return false;
        return true;
    }

    // Explicit-form membership tests for the distinguished subalgebras.
    bool inTPlusSub(const LieElement& x) const {  // T^+(mu)
        if (!inTwisted(x)) return false;
        for (const auto& [k, c] : x.loopTerms())
            for (int j = 1; j < n_; ++j)
                if (k.mono[j] < 0) return false;
        if (!centralSpanCheck(x, /*tailNonneg=*/true)) return false;
        for (const auto& [j, c] : x.derivTerms())
            if (j != 0) return false;
        return true;
    }
    bool inTBar(const LieElement& x) const {  // T-bar(mu)
        if (!inTwisted(x)) return false;
        for (const auto& [j, c] : x.derivTerms())
            if (j != 0) return false;
        return true;
    }
    bool inTAff(const LieElement& x) const {  // T_aff(mu)
        if (!inTwisted(x)) return false;
        for (const auto& [k, c] : x.loopTerms())
            for (int j = 1; j < n_; ++j)
                if (k.mono[j] != 0) return false;
        for (const auto& [k, c] : x.centralTerms())
            if (k.i != 0 || !monoIsZero(k.mono)) return false;
        for (const auto& [j, c] : x.derivTerms())
            if (j != 0) return false;
        return true;
    }

    // Weight of an ad-homogeneous element; nullopt if not a weight vector.
    std::optional<WeightFunctional> weightOf(const LieElement& x) const {
        requireSameContext(x);
        if (x.isZero()) throw std::domain_error("weight of the zero element");
        int l = graded_.rank0();
        WeightFunctional w;
        w.alpha.assign(l, 0);
        w.delta.assign(n_, 0);
        w.gamma.assign(n_, 0);
        std::vector<Rat> fin(l);
        for (int i = 0; i < l; ++i) {
            auto m = eigenvalue(loopTerm(graded_.h0(i), mono(0)), x);
            if (!m) return std::nullopt;
            fin[i] = *m;
        }
        for (int j = 0; j < n_; ++j) {
            auto m = eigenvalue(deriv(j), x);
            if (!m) return std::nullopt;
            w.delta[j] = *m;
        }
        // central elements act trivially: gamma coordinates vanish; finite
        // part solves sum_j a_ij c_j = fin_i
        std::vector<std::vector<Rat>> M(l, std::vector<Rat>(l + 1));
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) M[i][j] = rat(graded_.cartan0()[i][j]);
            M[i][l] = fin[i];
        }
        for (int col = 0, row = 0; col < l; ++col) {
            int piv = -1;
            for (int i = row; i < l; ++i)
                if (!ttla::isZero(M[i][col])) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::logic_error("singular Cartan system");
            std::swap(M[piv], M[row]);
            Rat inv = 1 / M[row][col];
            for (int j2 = col; j2 <= l; ++j2) M[row][j2] *= inv;
            for (int i = 0; i < l; ++i) {
                if (i == row || ttla::isZero(M[i][col])) continue;
                Rat f = M[i][col];
                for (int j2 = col; j2 <= l; ++j2) M[i][j2] -= f * M[row][j2];
            }
            ++row;
        }
        for (int i = 0; i < l; ++i) w.alpha[i] = M[i][l];
        return w;
    }

    // <.|.> on h_{T(mu)}^* per the section 2.5 table.
    Rat formWeight(const WeightFunctional& a, const WeightFunctional& b) const {
        Rat acc = graded_.formWeights(a.alpha, b.alpha);
        for (int j = 0; j < n_; ++j)
            acc += a.delta[j] * b.gamma[j] + a.gamma[j] * b.delta[j];
        return acc;
    }

    RootClassification classifyWeight(const WeightFunctional& w) const {
        RootClassification res;
        for (const auto& g : w.gamma)
            if (!ttla::isZero(g)) return res;
        std::vector<long> m(n_);
        for (int j = 0; j < n_; ++j) {
            if (w.delta[j].get_den() != 1) return res;
            m[j] = ratToLong(w.delta[j]);
        }
        bool finiteZero = true;
        std::vector<long> c(graded_.rank0());
        for (int i = 0; i < graded_.rank0(); ++i) {
            if (w.alpha[i].get_den() != 1) return res;
            c[i] = ratToLong(w.alpha[i]);
            if (c[i] != 0) finiteZero = false;
        }
        bool mZero = true;
        for (long v : m)
            if (v) mZero = false;
        if (finiteZero) {
            if (mZero) return res;  // the zero functional is not a root
            res.imaginary = true;
            res.cls = (m[0] > 0)   ? RootClass::Positive
                      : (m[0] < 0) ? RootClass::Negative
                                   : RootClass::NullFamily;
            return res;
        }
        bool isShort = false, positive = false;
        bool isRoot = graded_.isRoot0(c, &isShort, &positive);
        long m1 = m[0];
        bool member = false;
        if (graded_.isA2l()) {
            if (isRoot) {
                member = true;  // alpha + delta_m, any m
            } else {
                // r*alpha + delta_m with alpha short, m1 not = 0 mod r
                std::vector<long> half(c);
                bool divisible = true;
                for (auto& v : half) {
                    if (v % r() != 0) divisible = false;
                    else v /= r();
                }
                bool hs = false, hp = false;
                if (divisible && graded_.isRoot0(half, &hs, &hp) && hs &&
                    modFix(m1, r()) != 0) {
                    member = true;
                    positive = hp;
                }
            }
        } else {
            if (isRoot && (modFix(m1, r()) == 0 || isShort)) member = true;
        }
        if (!member) return res;
        res.cls = (m1 > 0) ? RootClass::Positive
                  : (m1 < 0)
                      ? RootClass::Negative
                      : (positive ? RootClass::Positive : RootClass::Negative);
        return res;
    }

    RootClassification rootMembership(const LieElement& x) const {
        auto w = weightOf(x);
        if (!w) throw std::domain_error("not a weight vector");
        return classifyWeight(*w);
    }

    // Membership in the tail central span { t^s K_i : i >= 2 } (the center
    // part that kills Weyl highest weight vectors).
    bool inTailCenter(const LieElement& x) const {
        if (!x.loopTerms().empty() || !x.derivTerms().empty()) return false;
        std::map<Mono, std::map<int, Scalar>> blocks;
        for (const auto& [k, c] : x.centralTerms()) blocks[k.mono][k.i] = c;
        for (const auto& [s, coeffs] : blocks) {
            using Row = std::map<int, Scalar>;
            std::vector<Row> basis;
            auto reduceBy = [](Row& v, const std::vector<Row>& rows) {
                for (const auto& row : rows) {
                    auto it = v.find(row.begin()->first);
                    if (it == v.end()) continue;
                    Scalar f = it->second / row.begin()->second;
                    for (const auto& [i, c] : row) {
                        Scalar t = (v.count(i) ? v[i] : Scalar::zero()) - f * c;
                        if (t.isZero()) v.erase(i);
                        else v[i] = t;
                    }
                }
            };
            for (int i = 1; i < n_; ++i) {
                Row row;
                for (const auto& [k, c] : central(i, s).centralTerms()) row[k.i] = c;
                if (row.empty()) continue;
                reduceBy(row, basis);
                if (!row.empty()) basis.push_back(row);
                std::sort(basis.begin(), basis.end(),
                          [](const Row& a, const Row& b) {
                              return a.begin()->first < b.begin()->first;
                          });
            }
            Row target;
            for (const auto& [i, c] : coeffs)
                if (!c.isZero()) target[i] = c;
            reduceBy(target, basis);
            if (!target.empty()) return false;
        }
        return true;
    }

    struct Triangular {
        LieElement minus, zero, plus;
    };

    Triangular triangularPart(const LieElement& x) const {
        requireSameContext(x);
        if (!inTwisted(x)) throw std::domain_error("element is not in T(mu)");
        Triangular t{LieElement(this), LieElement(this), LieElement(this)};
        int np = lie_.numPositive();
        for (const auto& [k, c] : x.loopTerms()) {
            if (k.mono[0] > 0) t.plus.addLoop(k.basis, k.mono, c);
            else if (k.mono[0] < 0) t.minus.addLoop(k.basis, k.mono, c);
            else if (k.basis < np) t.plus.addLoop(k.basis, k.mono, c);
            else if (k.basis < 2 * np) t.minus.addLoop(k.basis, k.mono, c);
            else t.zero.addLoop(k.basis, k.mono, c);
        }
        for (const auto& [k, c] : x.centralTerms()) {
            if (k.mono[0] > 0) t.plus.addCentralRaw(k.i, k.mono, c);
            else if (k.mono[0] < 0) t.minus.addCentralRaw(k.i, k.mono, c);
            else t.zero.addCentralRaw(k.i, k.mono, c);
        }
        for (const auto& [j, c] : x.derivTerms()) t.zero.addDeriv(j, c);
        t.minus.canonicalize();
        t.zero.canonicalize();
        t.plus.canonicalize();
        return t;
    }

    std::string renderMono(const Mono& m) const {
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < n_; ++i) {
            if (m[i] == 0) continue;
            if (any) os << "*";
            any = true;
            os << "t" << (i + 1);
            if (m[i] != 1) os << "^" << m[i];
        }
        return any ? os.str() : "1";
    }

    std::string render(const LieElement& x) const {
        if (x.isZero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto sep = [&] {
            if (!first) os << " (+) ";
            first = false;
        };
        for (const auto& [k, c] : x.loopTerms()) {
            sep();
            os << "(" << c.toString() << ")*" << lie_.basisName(k.basis) << "(x)"
               << renderMono(k.mono);
        }
        for (const auto& [k, c] : x.centralTerms()) {
            sep();
            os << "(" << c.toString() << ")*" << renderMono(k.mono) << "K" << (k.i + 1);
        }
        for (const auto& [j, c] : x.derivTerms()) {
            sep();
            os << "(" << c.toString() << ")*d" << (j + 1);
        }
        return os.str();
    }

    nlohmann::json toJson(const LieElement& x) const {
        nlohmann::json loop = nlohmann::json::array();
        for (const auto& [k, c] : x.loopTerms())
            loop.push_back({{"basis", lie_.basisName(k.basis)},
                            {"mono", k.mono},
                            {"coeff", c.toString()}});
        nlohmann::json cent = nlohmann::json::array();
        for (const auto& [k, c] : x.centralTerms())
            cent.push_back({{"K", k.i + 1}, {"mono", k.mono}, {"coeff", c.toString()}});
        nlohmann::json der = nlohmann::json::array();
        for (const auto& [j, c] : x.derivTerms())
            der.push_back({{"d", j + 1}, {"coeff", c.toString()}});
        return {{"loop", loop}, {"central", cent}, {"deriv", der}};
    }

    Scalar xiPow(int k) const {
        int e = modFix(k, r());
        Scalar acc = Scalar::one();
        for (int t = 0; t < e; ++t) acc *= graded_.xi();
        return acc;
    }

  private:
    static int modFix(int a, int m) {
        int v = a % m;
        return v < 0 ? v + m : v;
    }

    void requireMono(const Mono& m) const {
        if (static_cast<int>(m.size()) != n_)
            throw std::domain_error("monomial has wrong number of variables");
    }
    void requireSameContext(const LieElement& x) const {
        if (x.context() && x.context() != this)
            throw std::domain_error("elements from different ambient algebras");
    }

    std::optional<Rat> eigenvalue(const LieElement& h, const LieElement& x) const {
        LieElement hx = bracket(h, x);
        if (hx.isZero()) return rat(0);
        // candidate from the leading term of x
        Scalar lambda;
        if (!x.loopTerms().empty()) {
            const auto& [k, c] = *x.loopTerms().begin();
            auto it = hx.loopTerms().find(k);
            if (it == hx.loopTerms().end()) return std::nullopt;
            lambda = it->second / c;
        } else if (!x.centralTerms().empty()) {
            const auto& [k, c] = *x.centralTerms().begin();
            auto it = hx.centralTerms().find(k);
            if (it == hx.centralTerms().end()) return std::nullopt;
            lambda = it->second / c;
        } else {
            return hx.isZero() ? std::optional<Rat>(rat(0)) : std::nullopt;
        }
        if (!(hx == x.scaled(lambda)) || !lambda.isRational()) return std::nullopt;
        return lambda.toRat();
    }

    // Central T^+-membership: per monomial, the canonical coefficient vector
    // must lie in the span (mod Kahler) of K_1 plus those K_i with s_i >= 1.
    bool centralSpanCheck(const LieElement& x, bool tailNonneg) const {
        std::map<Mono, std::map<int, Scalar>> blocks;
        for (const auto& [k, c] : x.centralTerms()) blocks[k.mono][k.i] = c;
        for (const auto& [s, coeffs] : blocks) {
            if (tailNonneg)
                for (int j = 1; j < n_; ++j)
                    if (s[j] < 0) return false;
            // allowed generators
            std::vector<LieElement> gens;
            gens.push_back(central(0, s));
            for (int i = 1; i < n_; ++i)
                if (s[i] >= 1) gens.push_back(central(i, s));
            // Gaussian membership test over the K coordinates at monomial s
            using Row = std::map<int, Scalar>;
            auto reduceBy = [](Row& v, const std::vector<Row>& basis) {
                for (const auto& row : basis) {
                    if (row.empty()) continue;
                    auto it = v.find(row.begin()->first);
                    if (it == v.end()) continue;
                    Scalar f = it->second / row.begin()->second;
                    for (const auto& [i, c] : row) {
                        Scalar t = (v.count(i) ? v[i] : Scalar::zero()) - f * c;
                        if (t.isZero()) v.erase(i);
                        else v[i] = t;
                    }
                }
            };
            std::vector<Row> basis;
            for (auto& g : gens) {
                Row row;
                for (const auto& [k, c] : g.centralTerms()) row[k.i] = c;
                reduceBy(row, basis);
                if (!row.empty()) basis.push_back(row);
                std::sort(basis.begin(), basis.end(), [](const Row& a, const Row& b) {
                    return a.begin()->first < b.begin()->first;
                });
            }
            Row target;
            for (const auto& [i, c] : coeffs)
                if (!c.isZero()) target[i] = c;
            {
                // block itself is canonical already (came from a canonical element)
                reduceBy(target, basis);
            }
            if (!target.empty()) return false;
        }
        return true;
    }

    SimpleLie lie_;
    DiagramAut mu_;
    GradedPieces graded_;
    int n_;
};

}  // namespace ttla
