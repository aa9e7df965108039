#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ttla/graded.hpp"

using namespace ttla;

namespace {

// Independent oracle: positive roots counted in the orthogonal-coordinate
// model (A_n: e_i - e_j inside R^{n+1}, i < j; D_n: e_i +- e_j, i < j).
int positiveRootCountOracle(LieType t, int n) {
    int count = 0;
    if (t == LieType::A) {
        for (int i = 0; i < n + 1; ++i)
            for (int j = i + 1; j < n + 1; ++j) ++count;
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) count += 2;
    }
    return count;
}

int dimOracle(LieType t, int n) { return n + 2 * positiveRootCountOracle(t, n); }

GVec randomElement(const SimpleLie& g, std::mt19937_64& rng, int terms = 3) {
    std::uniform_int_distribution<int> idx(0, g.dim() - 1);
    std::uniform_int_distribution<long> coef(-4, 4);
    GVec v;
    for (int t = 0; t < terms; ++t) gvAddTo(v, gvUnit(idx(rng)), Scalar(coef(rng)));
    return v;
}

}  // namespace

TEST_CASE("dimensions of simple algebras") {
    CHECK(dimOracle(LieType::A, 3) == 15);
    CHECK(dimOracle(LieType::D, 4) == 28);
    CHECK(SimpleLie(LieType::A, 3).dim() == 15);
    CHECK(SimpleLie(LieType::D, 4).dim() == 28);
    CHECK(SimpleLie(LieType::A, 4).dim() == dimOracle(LieType::A, 4));
    CHECK(SimpleLie(LieType::A, 5).dim() == dimOracle(LieType::A, 5));
    CHECK(SimpleLie(LieType::D, 5).dim() == dimOracle(LieType::D, 5));
    CHECK_THROWS_AS(SimpleLie(LieType::A, 0), std::domain_error);
}

TEST_CASE("chevalley relations and cocycle signs in A2") {
    SimpleLie g(LieType::A, 2);
    RootVec a1 = g.roots().simpleRoot(0), a2 = g.roots().simpleRoot(1);
    CHECK(g.bracket(g.chevE(a1), g.chevF(a1)) == g.coroot(a1));
    GVec x = g.chevE(a1);
    CHECK(gvIsZero(g.bracket(x, x)));
    // [e1, e2] = +- e_{a1+a2}; construction validates Jacobi exhaustively
    GVec b = g.bracket(g.chevE(a1), g.chevE(a2));
    RootVec sum{1, 1};
    REQUIRE(b.size() == 1);
    CHECK(b.begin()->first == g.eIndex(sum));
    Scalar c = b.begin()->second;
    CHECK((c == Scalar(1) || c == Scalar(-1)));
}

TEST_CASE("bilinear form normalization") {
    SimpleLie g(LieType::A, 3);
    RootVec theta = g.roots().highestRoot();
    // (theta|theta) = 2 via coroot: (h_t|h_t) = 2 and (e|f) = 1
    CHECK(g.form(g.coroot(theta), g.coroot(theta)) == Scalar(2));
    CHECK(g.form(g.chevE(theta), g.chevF(theta)) == Scalar::one());
}

TEST_CASE("random bilinearity and antisymmetry") {
    SimpleLie g(LieType::D, 4);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        GVec x = randomElement(g, rng), y = randomElement(g, rng);
        CHECK(g.bracket(x, y) == gvNeg(g.bracket(y, x)));
    }
}

TEST_CASE("diagram automorphisms") {
    SimpleLie a3(LieType::A, 3);
    DiagramAut mu(a3, standardTwistPerm(LieType::A, 3, 2));
    CHECK(mu.order() == 2);
    for (int i = 0; i < a3.dim(); ++i) CHECK(mu.applyPower(gvUnit(i), 2) == gvUnit(i));

    SimpleLie d4(LieType::D, 4);
    DiagramAut tri(d4, standardTwistPerm(LieType::D, 4, 3));
    CHECK(tri.order() == 3);  // bracket preservation checked in the constructor

    // a non-symmetry permutation must be rejected
    CHECK_THROWS_AS(DiagramAut(a3, std::vector<int>{1, 0, 2}), std::domain_error);

    // identity permutation builds, but the twisting pipeline rejects r = 1
    DiagramAut ident(a3, std::vector<int>{0, 1, 2});
    CHECK(ident.order() == 1);
    CHECK_THROWS_AS(GradedPieces(a3, ident), std::domain_error);
}

TEST_CASE("graded pieces A3 r=2") {
    SimpleLie g(LieType::A, 3);
    DiagramAut mu(g, standardTwistPerm(LieType::A, 3, 2));
    GradedPieces gp(g, mu);
    CHECK(gp.dimPiece(0) == 10);
    CHECK(gp.dimPiece(1) == 5);
    CHECK(gp.g0TypeLabel() == "C2");
    CHECK(gp.dimCartanPiece(0) == 2);
    CHECK(gp.dimCartanPiece(1) == 1);
    CHECK(gp.rank0() == 2);
    CHECK_FALSE(gp.isA2l());
    // fixed node is the second orbit representative
    CHECK_FALSE(gp.nodeFixed(0));
    CHECK(gp.nodeFixed(1));
}

TEST_CASE("graded pieces D4 r=3") {
    SimpleLie g(LieType::D, 4);
    DiagramAut mu(g, standardTwistPerm(LieType::D, 4, 3));
    GradedPieces gp(g, mu);
    CHECK(gp.dimPiece(0) == 14);
    CHECK(gp.dimPiece(1) == 7);
    CHECK(gp.dimPiece(2) == 7);
    CHECK(gp.g0TypeLabel() == "G2");
    CHECK(gp.dimCartanPiece(0) == 2);
    CHECK(gp.dimCartanPiece(1) == 1);
    CHECK(gp.dimCartanPiece(2) == 1);
}

TEST_CASE("graded pieces for the other acceptance types") {
    {
        SimpleLie g(LieType::A, 5);
        DiagramAut mu(g, standardTwistPerm(LieType::A, 5, 2));
        GradedPieces gp(g, mu);
        CHECK(gp.g0TypeLabel() == "C3");
        CHECK(gp.dimPiece(0) == 21);
        CHECK(gp.dimPiece(1) == 35 - 21);
    }
    {
        SimpleLie g(LieType::D, 5);
        DiagramAut mu(g, standardTwistPerm(LieType::D, 5, 2));
        GradedPieces gp(g, mu);
        CHECK(gp.g0TypeLabel() == "B4");
        CHECK(gp.dimPiece(0) == 36);
        CHECK(gp.dimCartanPiece(0) == 4);
        CHECK(gp.dimCartanPiece(1) == 1);
    }
    {
        SimpleLie g(LieType::A, 4);
        DiagramAut mu(g, standardTwistPerm(LieType::A, 4, 2));
        GradedPieces gp(g, mu);
        CHECK(gp.g0TypeLabel() == "B2");
        CHECK(gp.dimPiece(0) == 10);
        CHECK(gp.isA2l());
        CHECK(gp.nodeFolded(1));
        CHECK_THROWS_AS(gp.thetaE(0), std::domain_error);
    }
}

TEST_CASE("theta triples bracket and pairing tables") {
    for (auto cfg : {std::pair{LieType::A, 3}, std::pair{LieType::D, 4}}) {
        SimpleLie g(cfg.first, cfg.second);
        int r = (cfg.first == LieType::D) ? 3 : 2;
        DiagramAut mu(g, standardTwistPerm(cfg.first, cfg.second, r));
        GradedPieces gp(g, mu);  // constructor already validates the tables
        REQUIRE(gp.hasTheta());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                CHECK(g.bracket(gp.thetaE(i), gp.thetaF(j)) == gp.thetaH(i + j));
                Scalar p = g.form(gp.thetaE(r - i), gp.thetaF(j));
                CHECK(p == (i % r == j % r ? Scalar(r) : Scalar::zero()));
            }
        CHECK(gvIsZero(g.bracket(gp.thetaE(1), gp.thetaE(1))));
        // extremality: f^(1) lowest in g_1, e^(r-1) highest in g_{r-1}
        for (int i = 0; i < gp.rank0(); ++i) {
            CHECK(gvIsZero(g.bracket(gp.f0(i), gp.thetaF(1))));
            CHECK(gvIsZero(g.bracket(gp.e0(i), gp.thetaE(r - 1))));
        }
        CHECK_FALSE(gp.thetaFKilledByRaising());
        // highest short root of g0 in simple-root coordinates of g0
        auto ts = gp.thetaSCoords();
        bool isShort = false, positive = false;
        std::vector<long> c(ts.begin(), ts.end());
        CHECK(gp.isRoot0(c, &isShort, &positive));
        CHECK(isShort);
        CHECK(positive);
    }
}

TEST_CASE("mu eigenvalue structure of theta elements") {
    SimpleLie g(LieType::D, 4);
    DiagramAut mu(g, standardTwistPerm(LieType::D, 4, 3));
    GradedPieces gp(g, mu);
    Scalar xi = gp.xi();
    for (int j = 0; j < 3; ++j) {
        Scalar eig = Scalar::one();
        for (int t = 0; t < j; ++t) eig *= xi;
        CHECK(mu.apply(gp.thetaE(j)) == gvScale(gp.thetaE(j), eig));
    }
}
