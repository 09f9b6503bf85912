#include <gtest/gtest.h>

#include "immanant/random.hpp"
#include "immanant/second_immanant.hpp"
#include "oracles.hpp"

using namespace immanant;

namespace {

Graph complete(std::size_t n) {
    std::vector<VertexPair> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

const Graph kP3(3, {{0, 1}, {1, 2}});
const Digraph kArc(2, {{0, 1}});

/// Evaluates the oracle on xI - M at 0..k and checks p at each point.
void expect_matches_oracle(const IntPolynomial& p, const IntMatrix& m) {
    for (long x = -2; x <= static_cast<long>(m.size()) + 1; ++x)
        EXPECT_EQ(p.eval(x), oracle::permutation_d2(oracle::shifted(m, x))) << "x=" << x << "\n" << m;
}

}  // namespace

TEST(D2, Fixtures) {
    EXPECT_EQ(d2(IntMatrix{{1, 2}, {3, 4}}), 10);
    EXPECT_EQ(d2(IntMatrix(0)), -1);
    EXPECT_EQ(d2(IntMatrix{{7}}), 0);
    EXPECT_EQ(d2(IntMatrix{{0, 1}, {1, 0}}), 1);
    EXPECT_EQ(d2(IntMatrix::identity(3)), 2);
}

TEST(D2, TestOracleBoundaries) {
    EXPECT_EQ(oracle::permutation_d2(IntMatrix(0)), -1);
    EXPECT_EQ(oracle::permutation_d2(IntMatrix{{7}}), 0);
    EXPECT_EQ(oracle::permutation_d2(IntMatrix{{1, 2}, {3, 4}}), 10);
}

TEST(D2, LibraryOracle) {
    EXPECT_EQ(d2_oracle(IntMatrix{{0, 1}, {1, 0}}), 1);
    EXPECT_EQ(d2_oracle(IntMatrix::identity(3)), 2);
    EXPECT_THROW(d2_oracle(IntMatrix{{1}}), UnsupportedSize);
    EXPECT_THROW(d2_oracle(IntMatrix(10)), UnsupportedSize);
    EXPECT_THROW(d2_oracle(IntMatrix(5), 4), UnsupportedSize);
}

TEST(D2, MatchesOraclesOnSeededMatrices) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const IntMatrix m = random_matrix(RandomSpec{.n = 2 + seed % 6, .entry_lo = -9, .entry_hi = 9, .seed = seed});
        const BigInt v = d2(m);
        EXPECT_EQ(v, oracle::permutation_d2(m)) << m;
        EXPECT_EQ(v, d2_oracle(m)) << m;
    }
}

TEST(D2, SecondCharacter) {
    EXPECT_EQ(second_character({0, 1, 2}), 2);   // identity: 3 - 1
    EXPECT_EQ(second_character({1, 0, 2}), 0);   // transposition: -(1 - 1)
    EXPECT_EQ(second_character({1, 2, 0}), -1);  // 3-cycle: +(0 - 1)
    EXPECT_EQ(second_character({1, 0, 3, 2}), -1);
}

TEST(Tau, Fixtures) {
    EXPECT_EQ(tau(complete(2)), (IntPolynomial{1, 0, 1}));
    EXPECT_EQ(tau(kP3), (IntPolynomial{0, 0, 0, 2}));
    EXPECT_EQ(tau(complete(3)), (IntPolynomial{2, 0, 0, 2}));
    EXPECT_EQ(tau(Graph(0, {})), IntPolynomial::constant(-1));
    EXPECT_EQ(tau(Graph(1, {})), IntPolynomial{});
    EXPECT_EQ(second_immanantal_poly(adjacency_matrix(complete(2))), (IntPolynomial{1, 0, 1}));
}

TEST(Tau, MatchesOracleAndLeadingCoefficient) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(RandomSpec{.n = 1 + seed % 7, .seed = seed});
        const IntPolynomial t = tau(g);
        if (g.order() >= 2) {
            EXPECT_EQ(t.degree(), static_cast<long>(g.order()));
            EXPECT_EQ(t.leading(), static_cast<long>(g.order()) - 1);
        }
        expect_matches_oracle(t, adjacency_matrix(g));
    }
}

TEST(Tau, StrategiesAgree) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(RandomSpec{.n = 8 + seed, .seed = seed});
        const IntPolynomial t = tau(g, CharPolyStrategy::Interpolation);
        EXPECT_EQ(tau(g, CharPolyStrategy::FaddeevLeVerrier), t);
        EXPECT_EQ(tau(g, CharPolyStrategy::Modular), t);
        LinalgOptions opt;
        opt.modular_charpoly_threshold = 0;
        opt.threads = 3;
        EXPECT_EQ(tau(g, CharPolyStrategy::Auto, opt), t);
    }
}

TEST(Tau, IsInvariantUnderRelabeling) {
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}});
    // reverse labels
    std::vector<VertexPair> e;
    for (const auto& [u, v] : g.edges())
        e.emplace_back(4 - u, 4 - v);
    EXPECT_EQ(tau(g), tau(Graph(5, e)));
}

TEST(GPoly, SingleArcFixtures) {
    EXPECT_EQ(g_poly(kArc, ImmanantKind::g1()), (IntPolynomial{0, 0, 1}));
    EXPECT_EQ(g_poly(kArc, ImmanantKind::g2()), (IntPolynomial{0, -1, 1}));
    EXPECT_EQ(g_poly(kArc, ImmanantKind::g3()), (IntPolynomial{0, -1, 1}));
}

TEST(GPoly, KindMatrices) {
    const Digraph d(3, {{0, 1}, {2, 1}, {1, 0}});
    const IntMatrix a = adjacency_matrix(d), deg = in_degree_matrix(d);
    EXPECT_EQ(kind_matrix(d, ImmanantKind::g1()), a);
    EXPECT_EQ(kind_matrix(d, ImmanantKind::g2()), deg - a);
    EXPECT_EQ(kind_matrix(d, ImmanantKind::g3()), deg + a);
    EXPECT_EQ(ImmanantKind::g2().name(), "g2");
    EXPECT_THROW((ImmanantKind{2, 1}).validate(), ContractError);
}

TEST(GPoly, MatchesOracle) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Digraph d = random_digraph(RandomSpec{.n = 1 + seed % 6, .seed = seed});
        for (auto kind : {ImmanantKind::g1(), ImmanantKind::g2(), ImmanantKind::g3()})
            expect_matches_oracle(g_poly(d, kind), kind_matrix(d, kind));
    }
}

TEST(GPoly, SymmetricDigraphG1IsTau) {
    const Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
    std::vector<VertexPair> arcs;
    for (const auto& [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    EXPECT_EQ(g_poly(Digraph(4, arcs), ImmanantKind::g1()), tau(g));
}

TEST(Masks, SymmetricAndDirected) {
    const IntMatrix b{{1, 2, 3}, {2, 4, 5}, {3, 5, 6}};
    const IntMatrix mb = mask_symmetric(b, 0, 2);
    EXPECT_EQ(mb, (IntMatrix{{1, 2, 0}, {2, 4, 5}, {0, 5, 6}}));
    EXPECT_EQ(mask_symmetric(b, 1, 1)(1, 1), 0);
    EXPECT_THROW(mask_symmetric(IntMatrix{{0, 1}, {0, 0}}, 0, 1), ContractError);
    EXPECT_THROW(mask_symmetric(b, 0, 3), ContractError);

    const IntMatrix r{{1, 2}, {3, 4}};
    EXPECT_EQ(mask_directed(r, 1, 0), (IntMatrix{{1, 2}, {0, 4}}));
    // masking a zero entry is the identity
    EXPECT_EQ(mask_directed(mask_directed(r, 1, 0), 1, 0), mask_directed(r, 1, 0));
    EXPECT_THROW(mask_directed(r, 2, 0), ContractError);
}
