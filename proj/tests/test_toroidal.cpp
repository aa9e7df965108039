#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ttla/toroidal.hpp"

using namespace ttla;

namespace {

// Random homogeneous element: a g_s basis vector tensored with a compatible
// monomial, or occasionally a central / derivation term.
LieElement randomHomogeneous(const TwistedToroidal& T, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<int> spick(0, T.r() - 1);
    std::uniform_int_distribution<int> box(-1, 1);
    int k = kind(rng);
    if (k < 7) {
        int s = spick(rng);
        const auto& basis = T.graded().pieceBasis(s);
        std::uniform_int_distribution<int> bpick(0, static_cast<int>(basis.size()) - 1);
        Mono m = monoZero(T.nvars());
        m[0] = s + T.r() * box(rng);
        for (int j = 1; j < T.nvars(); ++j) m[j] = box(rng);
        return T.loopTerm(basis[bpick(rng)], m);
    }
    if (k < 9) {
        Mono m = monoZero(T.nvars());
        m[0] = T.r() * box(rng);
        for (int j = 1; j < T.nvars(); ++j) m[j] = box(rng);
        std::uniform_int_distribution<int> ipick(0, T.nvars() - 1);
        return T.central(ipick(rng), m);
    }
    std::uniform_int_distribution<int> jpick(0, T.nvars() - 1);
    return T.deriv(jpick(rng));
}

}  // namespace

TEST_CASE("kahler relation and canonical central form") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    Mono s = T.mono(2, {1});
    // sum_i s_i t^s K_i = 0
    LieElement z = T.central(0, s).scaled(Scalar(2)) + T.central(1, s);
    CHECK(z.isZero());
    // canonicalization is idempotent under re-addition
    LieElement a = T.central(1, s);
    LieElement b = a + T.zero();
    CHECK(a == b);
    // t^0 K_i are untouched
    CHECK_FALSE(T.central(0, T.mono(0)).isZero());
}

TEST_CASE("toroidal bracket basics") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    const SimpleLie& g = T.lie();
    RootVec a1 = g.roots().simpleRoot(0);
    LieElement x = T.loopTerm(g.coroot(a1), T.mono(1));
    CHECK(T.bracket(x, x).isZero());
    // [h ot t1, h ot t1^-1] = (h|h) K_1 = 2 K_1
    LieElement y = T.loopTerm(g.coroot(a1), T.mono(-1));
    LieElement br = T.bracket(x, y);
    CHECK(br == T.central(0, T.mono(0)).scaled(Scalar(2)));
    // antisymmetry incl. central terms
    CHECK((T.bracket(y, x) + br).isZero());
    // derivations grade by exponents
    LieElement d1 = T.deriv(0);
    CHECK(T.bracket(d1, x) == x);
    LieElement kc = T.central(1, T.mono(2, {1}));
    CHECK(T.bracket(d1, kc) == kc.scaled(Scalar(2)));
    CHECK(T.bracket(T.deriv(1), kc) == kc);
}

TEST_CASE("jacobi on random homogeneous triples") {
    for (auto cfg : {std::tuple{LieType::A, 3, 2, 2}, std::tuple{LieType::D, 4, 3, 2},
                     std::tuple{LieType::A, 4, 2, 3}}) {
        TwistedToroidal T(std::get<0>(cfg), std::get<1>(cfg), std::get<2>(cfg),
                          std::get<3>(cfg));
        std::mt19937_64 rng(12345);
        int checked = 0;
        for (int trial = 0; trial < 220; ++trial) {
            LieElement x = randomHomogeneous(T, rng);
            LieElement y = randomHomogeneous(T, rng);
            LieElement z = randomHomogeneous(T, rng);
            LieElement s = T.bracket(T.bracket(x, y), z) + T.bracket(T.bracket(y, z), x) +
                           T.bracket(T.bracket(z, x), y);
            CHECK(s.isZero());
            ++checked;
        }
        REQUIRE(checked >= 200);
    }
}

TEST_CASE("twisted subalgebra closure and central triviality") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        LieElement x = randomHomogeneous(T, rng);
        LieElement y = randomHomogeneous(T, rng);
        REQUIRE(T.inTwisted(x));
        REQUIRE(T.inTwisted(y));
        CHECK(T.inTwisted(T.bracket(x, y)));
    }
    // [L,Z] = 0 = [Z,Z]
    LieElement k1 = T.central(0, T.mono(2, {1}));
    LieElement k2 = T.central(1, T.mono(0, {-1}));
    LieElement x = T.loopTerm(T.graded().e0(0), T.mono(0));
    CHECK(T.bracket(k1, k2).isZero());
    CHECK(T.bracket(x, k1).isZero());
}

TEST_CASE("twisted projection") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    const SimpleLie& g = T.lie();
    // already fixed -> unchanged
    LieElement fixed = T.loopTerm(T.graded().e0(0), T.mono(0, {1}));
    CHECK(T.projectTwisted(fixed) == fixed);
    // e_{alpha1} ot t1 projects to a mu-tilde fixed combination
    LieElement raw = T.loopTerm(g.chevE(g.roots().simpleRoot(0)), T.mono(1));
    LieElement p = T.projectTwisted(raw);
    CHECK_FALSE(p.isZero());
    CHECK(T.muTilde(p) == p);
    CHECK(T.inTwisted(p));
    CHECK(T.projectTwisted(p) == p);
}

TEST_CASE("weights and root membership") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    // e0(0) ot t2 has weight alpha_1 + delta_2
    LieElement x = T.loopTerm(T.graded().e0(0), T.mono(0, {1}));
    auto w = T.weightOf(x);
    REQUIRE(w.has_value());
    CHECK(w->alpha == std::vector<Rat>{rat(1), rat(0)});
    CHECK(w->delta == std::vector<Rat>{rat(0), rat(1)});
    CHECK(w->gamma == std::vector<Rat>{rat(0), rat(0)});
    CHECK(T.classifyWeight(*w).cls == RootClass::Positive);
    CHECK_FALSE(T.classifyWeight(*w).imaginary);

    // K_1 is a 0-functional for the adjoint action
    auto wk = T.weightOf(T.central(0, T.mono(0)));
    REQUIRE(wk.has_value());
    for (const auto& v : wk->alpha) CHECK(isZero(v));
    for (const auto& v : wk->delta) CHECK(isZero(v));

    // e0 + f0 is not homogeneous
    LieElement mixed = T.loopTerm(T.graded().e0(0), T.mono(0)) +
                       T.loopTerm(T.graded().f0(0), T.mono(0));
    CHECK_FALSE(T.weightOf(mixed).has_value());
    CHECK_THROWS_AS(T.weightOf(T.zero()), std::domain_error);

    // delta-type weights
    LieElement himg = T.loopTerm(T.graded().h0(0), T.mono(2, {0}));
    auto wi = T.weightOf(himg);
    REQUIRE(wi.has_value());
    auto ci = T.classifyWeight(*wi);
    CHECK(ci.cls == RootClass::Positive);
    CHECK(ci.imaginary);
    CHECK(isZero(T.formWeight(*wi, *wi)));

    // negatives mirror positives
    LieElement xf = T.loopTerm(T.graded().f0(0), T.mono(0, {1}));
    auto wf = T.weightOf(xf);
    REQUIRE(wf.has_value());
    CHECK(T.classifyWeight(*wf).cls == RootClass::Negative);

    // null family: delta_m with m1 = 0, m != 0
    LieElement hnull = T.loopTerm(T.graded().h0(0), T.mono(0, {1}));
    auto wn = T.weightOf(hnull);
    REQUIRE(wn.has_value());
    CHECK(T.classifyWeight(*wn).cls == RootClass::NullFamily);
}

TEST_CASE("every homogeneous basis element classifies as root or zero") {
    for (auto cfg : {std::tuple{LieType::A, 3, 2}, std::tuple{LieType::D, 4, 3},
                     std::tuple{LieType::A, 4, 2}}) {
        TwistedToroidal T(std::get<0>(cfg), std::get<1>(cfg), std::get<2>(cfg), 2);
        for (int s = 0; s < T.r(); ++s) {
            for (const auto& v : T.graded().pieceBasis(s)) {
                for (int shift : {-1, 0, 1}) {
                    Mono m = T.mono(s + T.r() * shift, {1});
                    LieElement x = T.loopTerm(v, m);
                    auto w = T.weightOf(x);
                    REQUIRE(w.has_value());
                    bool zeroWeight = true;
                    for (const auto& c : w->alpha) zeroWeight = zeroWeight && isZero(c);
                    for (const auto& c : w->delta) zeroWeight = zeroWeight && isZero(c);
                    if (zeroWeight) continue;
                    auto cls = T.classifyWeight(*w);
                    CHECK(cls.cls != RootClass::NotARoot);
                }
            }
        }
    }
}

TEST_CASE("affine generators and alpha_0") {
    for (auto cfg : {std::tuple{LieType::A, 3, 2}, std::tuple{LieType::D, 4, 3}}) {
        TwistedToroidal T(std::get<0>(cfg), std::get<1>(cfg), std::get<2>(cfg), 2);
        LieElement e0 = T.e0();
        auto w = T.weightOf(e0);
        REQUIRE(w.has_value());
        // weight(e0) = delta_1 - theta^0
        CHECK(w->delta[0] == rat(1));
        auto ts = T.graded().thetaSCoords();
        for (int i = 0; i < T.graded().rank0(); ++i) CHECK(w->alpha[i] == rat(-ts[i]));
        // h0 = [e0,f0] is Cartan-plus-central, fixed by mu-tilde
        LieElement h0 = T.h0();
        CHECK(T.inTwisted(h0));
        CHECK(T.bracket(h0, e0) == e0.scaled(Scalar(2)));
        CHECK(T.inTAff(e0));
        CHECK(T.inTAff(h0));
    }
}

TEST_CASE("triangular decomposition") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    const auto& gp = T.graded();
    // h0(0) ot t2 lies entirely in the zero part
    LieElement h = T.loopTerm(gp.h0(0), T.mono(0, {1}));
    auto t = T.triangularPart(h);
    CHECK(t.minus.isZero());
    CHECK(t.plus.isZero());
    CHECK(t.zero == h);
    // e0(0) is entirely positive
    LieElement e = T.loopTerm(gp.e0(0), T.mono(0));
    auto te = T.triangularPart(e);
    CHECK(te.plus == e);
    CHECK(te.minus.isZero());
    CHECK(te.zero.isZero());
    // parts sum back and membership tests
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        LieElement x = randomHomogeneous(T, rng);
        auto parts = T.triangularPart(x);
        CHECK(parts.minus + parts.zero + parts.plus == x);
    }
    // f(1)_ts ot t1 lies in T_aff+
    LieElement f1 = T.loopTerm(gp.thetaF(1), T.mono(1));
    CHECK(T.inTAff(f1));
    auto tf = T.triangularPart(f1);
    CHECK(tf.plus == f1);
    // T+ membership: tails must be nonnegative, K_i needs t_i >= 1
    CHECK(T.inTPlusSub(T.loopTerm(gp.e0(0), T.mono(-2, {1}))));
    CHECK_FALSE(T.inTPlusSub(T.loopTerm(gp.e0(0), T.mono(0, {-1}))));
    CHECK(T.inTPlusSub(T.central(0, T.mono(2, {0}))));
    CHECK(T.inTPlusSub(T.central(1, T.mono(2, {1}))));
    CHECK_FALSE(T.inTPlusSub(T.central(1, T.mono(2, {0}))));
    CHECK(T.inTBar(T.central(1, T.mono(2, {-3}))));
    // t2 K2 = 0 by the Kahler relation at s = (0,1); t2 K1 is the honest
    // nonzero central element outside T_aff
    CHECK(T.central(1, T.mono(0, {1})).isZero());
    CHECK_FALSE(T.inTAff(T.central(0, T.mono(0, {1}))));
    CHECK(T.inTPlusSub(T.deriv(0)));
    CHECK_FALSE(T.inTPlusSub(T.deriv(1)));
}

TEST_CASE("rendering and json round trip shape") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    LieElement x = T.loopTerm(T.graded().e0(0), T.mono(1, {2})) +
                   T.central(0, T.mono(0)) + T.deriv(1);
    std::string s = T.render(x);
    CHECK(s.find("K1") != std::string::npos);
    CHECK(s.find("d2") != std::string::npos);
    auto j = T.toJson(x);
    CHECK(j["loop"].size() + j["central"].size() + j["deriv"].size() >= 3);
    // determinism
    CHECK(T.render(x) == s);
}
