#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ttla/envelope.hpp"

using namespace ttla;

namespace {

// Independent oracle for the Garland coefficients: expand the product of
// truncated exponentials prod_j exp(-h_j u^j / j) directly in powers of u.
std::vector<PbwElement> garlandOracle(const PbwAlgebra& A, int S) {
    std::vector<PbwElement> series{PbwElement::one()};
    series.resize(S + 1);
    for (int s = 1; s <= S; ++s) series[s] = PbwElement();
    for (int j = 1; j <= S; ++j) {
        // exp(-h_j u^j / j) = sum_k (-1)^k h_j^k u^{jk} / (j^k k!)
        std::vector<PbwElement> factor(S + 1);
        factor[0] = PbwElement::one();
        Rat denom = 1;
        PbwElement hpow = PbwElement::one();
        for (int k = 1; j * k <= S; ++k) {
            denom *= rat(-j) * rat(k);
            hpow = A.mul(hpow, PbwElement::letter(ph(j)));
            factor[j * k] = hpow.scaled(1 / denom);
        }
        std::vector<PbwElement> next(S + 1);
        for (int a = 0; a <= S; ++a)
            for (int b = 0; a + b <= S; ++b)
                next[a + b] += A.mul(series[a], factor[b]);
        series = std::move(next);
    }
    return series;
}

}  // namespace

TEST_CASE("pbw straightening basics") {
    PbwAlgebra A;
    // x1 y0 = y0 x1 + h1
    PbwElement prod = A.mul(PbwElement::letter(px(1)), PbwElement::letter(py(0)));
    PbwElement expect;
    expect.addTerm({py(0), px(1)}, rat(1));
    expect.addTerm({ph(1)}, rat(1));
    CHECK(prod == expect);
    // 1 * a = a
    CHECK(A.mul(PbwElement::one(), prod) == prod);
    // h's commute
    CHECK(A.mul(PbwElement::letter(ph(1)), PbwElement::letter(ph(2))) ==
          A.mul(PbwElement::letter(ph(2)), PbwElement::letter(ph(1))));
}

TEST_CASE("pbw associativity on random products") {
    PbwAlgebra A({10, 10});
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> type(0, 2), deg(-2, 2), len(1, 3);
    auto randomElt = [&] {
        PbwElement e = PbwElement::one();
        int L = len(rng);
        for (int t = 0; t < L; ++t)
            e = A.mul(e, PbwElement::letter({type(rng), deg(rng)}));
        return e;
    };
    for (int trial = 0; trial < 40; ++trial) {
        PbwElement a = randomElt(), b = randomElt(), c = randomElt();
        CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
    }
}

TEST_CASE("bounds are hard errors") {
    PbwAlgebra A({3, 2});
    PbwElement w = A.mul(PbwElement::letter(py(0)),
                         A.mul(PbwElement::letter(py(0)), PbwElement::letter(py(0))));
    CHECK_THROWS_AS(A.mul(w, PbwElement::letter(py(0))), std::domain_error);
    CHECK_THROWS_AS(A.mul(PbwElement::letter(px(2)), PbwElement::letter(py(1))),
                    std::domain_error);
}

TEST_CASE("garland series coefficients") {
    PbwAlgebra A;
    auto p = A.garlandCoeffs(4);
    CHECK(p[0] == PbwElement::one());
    PbwElement p1;
    p1.addTerm({ph(1)}, rat(-1));
    CHECK(p[1] == p1);
    PbwElement p2;
    p2.addTerm({ph(1), ph(1)}, rat(1, 2));
    p2.addTerm({ph(2)}, rat(-1, 2));
    CHECK(p[2] == p2);
    // independent oracle: direct exponential-product expansion
    auto oracle = garlandOracle(A, 4);
    for (int s = 0; s <= 4; ++s) CHECK(p[s] == oracle[s]);
    // all coefficients live in the commuting h_a, a >= 1
    for (int s = 0; s <= 4; ++s)
        for (const auto& [w, c] : p[s].terms())
            for (const auto& l : w) {
                CHECK(l.type == 1);
                CHECK(l.deg >= 1);
            }
}

TEST_CASE("left ideal membership") {
    PbwAlgebra A;
    PbwElement a;
    a.addTerm({py(0), px(1)}, rat(1));
    CHECK(A.inLeftIdealX(a));
    PbwElement b;
    b.addTerm({ph(1), ph(2)}, rat(1));
    CHECK_FALSE(A.inLeftIdealX(b));
    // x1 y0 straightens to y0 x1 + h1: the h1 term escapes the ideal
    PbwElement c = A.mul(PbwElement::letter(px(1)), PbwElement::letter(py(0)));
    CHECK_FALSE(A.inLeftIdealX(c));
}

TEST_CASE("garland identities j=1,2,3") {
    PbwAlgebra A;
    for (int j = 1; j <= 3; ++j) {
        auto res = A.verifyGarland(j);
        INFO("j = " << j);
        CHECK(res.first);
        CHECK(res.second);
        // the unsigned plain-power rendering of the display fails
        CHECK_FALSE(res.printedFirst);
    }
}

TEST_CASE("garland j=1 residue by hand") {
    // x1 y0^2 = y0^2 x1 + 2 y0 h1 - 2 y1; dividing by 1! 2! and adding
    // y1 - y0 h1 leaves exactly (1/2) y0^2 x1, which is in the ideal.
    PbwAlgebra A;
    PbwElement lhs = A.mul(PbwElement::letter(px(1)),
                           A.pow(PbwElement::letter(py(0)), 2));
    PbwElement expect;
    expect.addTerm({py(0), py(0), px(1)}, rat(1));
    expect.addTerm({py(0), ph(1)}, rat(2));
    expect.addTerm({py(1)}, rat(-2));
    CHECK(lhs == expect);
}

TEST_CASE("sym_lambda") {
    // P = 1, a0 = 1, b = t2
    auto e1 = symLambda({1}, 0, {1});
    REQUIRE(e1.size() == 1);
    CHECK(e1.begin()->first == TensorMono{{1}});
    // a0 = 2: b ot 1 + 1 ot b
    auto e2 = symLambda({2}, 0, {1});
    CHECK(e2.size() == 2);
    CHECK(e2 == permuteBlock(e2, {2}, 0, {1, 0}));
    // multi-block invariance
    auto e3 = symLambda({2, 2}, 1, {0, 3});
    CHECK(e3 == permuteBlock(e3, {2, 2}, 1, {1, 0}));
    CHECK(e3 == permuteBlock(e3, {2, 2}, 0, {1, 0}));
    CHECK_THROWS_AS(symLambda({0, 1}, 0, {1}), std::domain_error);
}

TEST_CASE("sl2 loop transport") {
    TwistedToroidal T(LieType::A, 3, 2, 2);
    // alpha = theta_s, m = 1: the triple behind the affine node
    auto ts = T.graded().thetaSCoords();
    Sl2LoopTransport tr(T, ts, 1, T.mono(0, {1}));
    CHECK(tr.verifyRelations(2));
    // a finite root with m = 0
    std::vector<long> a1{1, 0};
    Sl2LoopTransport tr2(T, a1, 0, T.mono(0, {1}));
    CHECK(tr2.verifyRelations(2));
    // beta0-vee at m != 0 carries a K1 correction; the relations still close
    Sl2LoopTransport tr3(T, ts, -1, T.mono(0, {2}));
    CHECK(tr3.verifyRelations(1));
}
