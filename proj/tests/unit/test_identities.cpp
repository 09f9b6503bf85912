#include <gtest/gtest.h>

#include <functional>

#include "immanant/identities.hpp"
#include "immanant/random.hpp"
#include "oracles.hpp"

using namespace immanant;

namespace {

const Graph kK2(2, {{0, 1}});
const Graph kP3(3, {{0, 1}, {1, 2}});
const Graph kK3(3, {{0, 1}, {0, 2}, {1, 2}});
const Digraph kArc(2, {{0, 1}});
const ImmanantKind kKinds[] = {ImmanantKind::g1(), ImmanantKind::g2(), ImmanantKind::g3()};

IntMatrix symmetric(std::size_t k, std::uint64_t seed) {
    return random_symmetric_matrix(RandomSpec{.n = k, .seed = seed});
}
IntMatrix general(std::size_t k, std::uint64_t seed) { return random_matrix(RandomSpec{.n = k, .seed = seed}); }

void expect_holds(const IdentityReport& r) {
    EXPECT_TRUE(r.holds) << to_json(r).dump();
}

}  // namespace

TEST(SymmetricMasks, Fixtures) {
    const IntMatrix a = adjacency_matrix(kK3);
    for (auto f : {verify_lemma_2_2, verify_lemma_2_3, verify_lemma_2_4, verify_eq3, verify_eq4})
        expect_holds(f(a, {}));

    const IntMatrix diag{{3, 0, 0}, {0, -2, 0}, {0, 0, 5}};
    expect_holds(verify_lemma_2_2(diag));
    expect_holds(verify_lemma_2_3(diag));

    const auto zero = verify_lemma_2_4(IntMatrix(4));
    expect_holds(zero);
    EXPECT_EQ(std::get<BigInt>(zero.lhs), 0);
    EXPECT_EQ(std::get<BigInt>(zero.rhs), 0);
}

TEST(SymmetricMasks, RejectBadInput) {
    EXPECT_THROW(verify_lemma_2_2(IntMatrix{{0, 1}, {0, 0}}), ContractError);
    EXPECT_THROW(verify_lemma_2_3(IntMatrix{{1}}), ContractError);
    EXPECT_THROW(verify_eq3(IntMatrix{{0, 1}, {2, 0}}), ContractError);
}

TEST(SymmetricMasks, SeededProperty) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const IntMatrix b = symmetric(2 + seed % 6, seed);
        expect_holds(verify_lemma_2_2(b));
        expect_holds(verify_lemma_2_3(b));
        expect_holds(verify_lemma_2_4(b));
        expect_holds(verify_eq3(b));
        expect_holds(verify_eq4(b));
    }
}

TEST(SymmetricMasks, LemmaTwoTwoMatchesIndependentDeterminants) {
    // recompute the right-hand side with the Laplace oracle
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const IntMatrix b = symmetric(2 + seed % 5, seed);
        const std::size_t k = b.size();
        BigInt rhs = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j) {
                IntMatrix m = b;
                m(i, j) = 0;
                m(j, i) = 0;
                rhs += oracle::laplace_det(m);
                if (i < j)
                    rhs += b(i, j) * b(i, j) * oracle::laplace_det(b.principal_minor(i, j));
            }
        const auto r = verify_lemma_2_2(b);
        EXPECT_EQ(std::get<BigInt>(r.rhs), rhs);
        EXPECT_EQ(std::get<BigInt>(r.lhs), BigInt(static_cast<long>(k * (k - 1) / 2)) * oracle::laplace_det(b));
    }
}

TEST(DirectedMasks, Fixtures) {
    const IntMatrix id = IntMatrix::identity(4);
    expect_holds(verify_lemma_3_2(id));
    expect_holds(verify_lemma_3_3(id));
    const IntMatrix diag{{2, 0, 0}, {0, -1, 0}, {0, 0, 4}};
    const auto c = verify_cor_3_4(diag);
    expect_holds(c);
    EXPECT_EQ(std::get<BigInt>(c.lhs), 0);
    expect_holds(verify_cor_3_4(IntMatrix(3)));
    EXPECT_EQ(std::get<BigInt>(verify_cor_3_4(IntMatrix(3)).rhs), 0);
    EXPECT_THROW(verify_lemma_3_2(IntMatrix{{1}}), ContractError);
}

TEST(DirectedMasks, SeededProperty) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const IntMatrix r = general(2 + seed % 6, seed);
        expect_holds(verify_lemma_3_2(r));
        expect_holds(verify_lemma_3_3(r));
        expect_holds(verify_cor_3_4(r));
        expect_holds(verify_eq13(r));
    }
}

TEST(DirectedMasks, DigraphMatrices) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Digraph d = random_digraph(RandomSpec{.n = 2 + seed % 5, .seed = seed});
        expect_holds(verify_lemma_3_2(adjacency_matrix(d)));
        expect_holds(verify_lemma_3_3(adjacency_matrix(d)));
        for (auto kind : kKinds) {
            // shifted kind matrices, entries are xI - eta D - alpha A at x = 2
            IntMatrix m = oracle::shifted(kind_matrix(d, kind), 2);
            expect_holds(verify_cor_3_4(m));
        }
    }
}

TEST(Eq13, EntrywiseValues) {
    const auto r = verify_eq13(IntMatrix{{1, 2}, {3, 4}});
    const auto& lhs = std::get<std::vector<BigInt>>(r.lhs);
    // det(R_00) = 0*4 - 6, det(R_01) = 4, det(R_10) = 4, det(R_11) = -6
    EXPECT_EQ(lhs, (std::vector<BigInt>{-6, 4, 4, -6}));
    expect_holds(r);
}

TEST(Lemma25, HandComputedFixtures) {
    const auto k2 = verify_lemma_2_5(kK2);
    expect_holds(k2);
    EXPECT_EQ(std::get<IntPolynomial>(k2.lhs), (IntPolynomial{-1, 0, 1}));

    const auto p3 = verify_lemma_2_5(kP3);
    expect_holds(p3);
    EXPECT_EQ(std::get<IntPolynomial>(p3.rhs), (IntPolynomial{0, 0, 0, 4}));
}

TEST(Lemma25, SeededGraphsBothRoutes) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(RandomSpec{.n = seed % 9, .seed = seed});
        expect_holds(verify_lemma_2_5(g));
        expect_holds(verify_lemma_2_5_masked(g));
        EXPECT_EQ(verify_lemma_2_5(g).rhs, verify_lemma_2_5_masked(g).rhs);
    }
}

TEST(DerivativeExpansion, SeededMatrices) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        expect_holds(verify_derivative_expansion(general(seed % 7, seed)));
        expect_holds(verify_derivative_expansion(adjacency_matrix(random_graph(RandomSpec{.n = 6, .seed = seed}))));
    }
}

TEST(Lemma35, SingleArcG2) {
    const auto r = verify_lemma_3_5(kArc, ImmanantKind::g2());
    expect_holds(r);
    EXPECT_EQ(std::get<IntPolynomial>(r.lhs), (IntPolynomial{0, 0, 1}));
}

TEST(Lemma35, EdgelessDigraphEq22) {
    for (std::size_t n = 0; n < 5; ++n)
        for (auto kind : kKinds) {
            const auto r = verify_eq22(Digraph(n, {}), kind);
            expect_holds(r);
            EXPECT_TRUE(std::get<IntPolynomial>(r.lhs).is_zero());
        }
}

TEST(Lemma35, SeededDigraphsAllKinds) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Digraph d = random_digraph(RandomSpec{.n = seed % 7, .seed = seed});
        for (auto kind : kKinds) {
            expect_holds(verify_lemma_3_5(d, kind));
            expect_holds(verify_lemma_3_5_masked(d, kind));
            expect_holds(verify_eq22(d, kind));
        }
    }
}

TEST(Reports, JsonShapeAndDescriptors) {
    auto r = verify_lemma_2_5(kK2);
    r.seed = 7;
    const auto j = to_json(r);
    EXPECT_EQ(j["identity"], "lemma-2.5");
    EXPECT_EQ(j["instance"], "graph6:A_");
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["holds"], true);
    EXPECT_EQ(j["lhs"]["coeffs"], nlohmann::json({"-1", "0", "1"}));
    EXPECT_EQ(describe(IntMatrix{{1, 2}, {3, 4}}), describe(IntMatrix{{1, 2}, {3, 4}}));
    EXPECT_NE(describe(IntMatrix{{1, 2}, {3, 4}}), describe(IntMatrix{{1, 2}, {3, 5}}));
    EXPECT_EQ(describe(kArc), "digraph6:&AO");
}

TEST(Reports, DetectsBrokenIdentity) {
    // the ODE operator with the wrong edge count must not match the deck sum
    const IntPolynomial t = tau(kP3);
    const IntPolynomial wrong = ode_operator(t, 3, 3);
    IntPolynomial rhs;
    for (const auto& e : edge_deck(kP3))
        rhs += tau(e.minus_edge) + tau(e.minus_endpoints);
    EXPECT_NE(wrong, rhs);
    EXPECT_EQ(ode_operator(t, 3, 2), rhs);
}
