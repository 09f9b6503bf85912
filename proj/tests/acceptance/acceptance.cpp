// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "immanant/immanant.hpp"
#include "oracles.hpp"

using namespace immanant;

namespace {

const std::string kData = IMMANANT_TEST_DATA;
const ImmanantKind kKinds[] = {ImmanantKind::g1(), ImmanantKind::g2(), ImmanantKind::g3()};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Collects the first few mismatches and counts checks.
class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 3)
                first_ << (failures_ > 1 ? "; " : "") << what();
        }
    }
    bool ok() const { return failures_ == 0 && checks_ > 0; }
    std::size_t checks() const { return checks_; }
    std::string failures() const {
        return std::to_string(failures_) + " failed" + (failures_ ? " (" + first_.str() + ")" : "");
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::ostringstream first_;
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

const std::vector<Graph>& graphs() {
    static const auto g = corpus::read_graph6_file(kData + "/graphs_upto7.g6");
    return g;
}

const std::vector<Digraph>& digraphs() {
    static const auto d = corpus::read_digraph6_file(kData + "/digraphs_upto4.d6");
    return d;
}

std::vector<Digraph> random_digraphs(std::size_t count, std::uint64_t base) {
    std::vector<Digraph> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_digraph(RandomSpec{.n = 2 + i % 6, .seed = base + i}));
    return out;
}

// 1
Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::size_t matrices = 0;
    for (std::uint64_t i = 0; i < 504; ++i, ++matrices) {
        const IntMatrix m = random_matrix(RandomSpec{.n = 2 + i % 7, .entry_lo = -9, .entry_hi = 9, .seed = 1000 + i});
        const BigInt v = d2(m);
        t.check(v == oracle::permutation_d2(m) && v == d2_oracle(m), [&] { return "seed " + std::to_string(1000 + i); });
    }
    std::size_t graph_points = 0;
    for (const auto& g : graphs()) {
        if (g.order() > 6)
            continue;
        const IntMatrix a = adjacency_matrix(g);
        for (long x = -2; x <= 2; ++x, ++graph_points) {
            const IntMatrix m = oracle::shifted(a, x);
            t.check(d2(m) == oracle::permutation_d2(m), [&] { return to_graph6(g) + " x=" + std::to_string(x); });
        }
    }
    const double s = seconds_since(t0);
    t.check(s < 120, [&] { return "runtime " + std::to_string(s) + " s"; });
    return {t.ok(), std::to_string(matrices) + " matrices k=2..8, " + std::to_string(graph_points) +
                        " graph evaluations n<=6; " + t.failures()};
}

// 2
Outcome determinant_cross_check() {
    Tally t;
    for (std::uint64_t i = 0; i < 504; ++i) {
        const IntMatrix m = random_matrix(RandomSpec{.n = 1 + i % 8, .entry_lo = -9, .entry_hi = 9, .seed = 2000 + i});
        const BigInt b = det_bareiss(m);
        t.check(b == det_crt(m) && b == oracle::laplace_det(m), [&] { return "seed " + std::to_string(2000 + i); });
    }
    for (std::uint64_t i = 0; i < 50; ++i) {
        const IntMatrix m = random_matrix(RandomSpec{.n = 64, .entry_lo = -9, .entry_hi = 9, .seed = 3000 + i});
        t.check(det_bareiss(m) == det_crt(m), [&] { return "k=64 seed " + std::to_string(3000 + i); });
    }
    return {t.ok(), "504 matrices k<=8 against Laplace, 50 matrices k=64; " + t.failures()};
}

// 3
Outcome identity_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    auto record = [&](const IdentityReport& r) {
        t.check(r.holds, [&] { return r.identity + " " + r.instance; });
    };
    for (std::uint64_t i = 0; i < 210; ++i) {
        const IntMatrix b = random_symmetric_matrix(RandomSpec{.n = 2 + i % 7, .seed = 4000 + i});
        record(verify_lemma_2_2(b));
        record(verify_lemma_2_3(b));
        record(verify_lemma_2_4(b));
        record(verify_eq3(b));
        record(verify_eq4(b));
    }
    for (std::uint64_t i = 0; i < 210; ++i) {
        const IntMatrix r = random_matrix(RandomSpec{.n = 2 + i % 7, .seed = 5000 + i});
        record(verify_lemma_3_2(r));
        record(verify_lemma_3_3(r));
        record(verify_cor_3_4(r));
        record(verify_eq13(r));
    }
    const double s = seconds_since(t0);
    t.check(s < 300, [&] { return "runtime " + std::to_string(s) + " s"; });
    return {t.ok(), "210 symmetric + 210 general matrices k=2..8, " + std::to_string(t.checks() - 1) +
                        " reports; " + t.failures()};
}

// 4
Outcome lemma_2_5_corpus() {
    Tally t;
    bool saw_k2 = false, saw_k1 = false;
    for (const auto& g : graphs()) {
        saw_k2 = saw_k2 || (g.order() == 2 && g.size() == 1);
        saw_k1 = saw_k1 || g.order() == 1;
        const auto r = verify_lemma_2_5(g);
        const auto rm = verify_lemma_2_5_masked(g);
        t.check(r.holds && rm.holds, [&] { return r.instance; });
    }
    // boundary values the K2 and K1 cases rest on
    t.check(saw_k2 && saw_k1, [] { return std::string("corpus lacks K2 or K1"); });
    t.check(d2(IntMatrix(0)) == -1 && oracle::permutation_d2(IntMatrix(0)) == -1,
            [] { return std::string("d2 of the empty matrix"); });
    t.check(d2(IntMatrix{{5}}) == 0, [] { return std::string("d2 of a 1x1 matrix"); });
    return {t.ok(), std::to_string(graphs().size()) + " graphs n<=7, deletion and masked routes; " + t.failures()};
}

// 5
Outcome lemma_3_5_digraphs() {
    Tally t;
    const auto randoms = random_digraphs(300, 6000);
    std::size_t instances = 0;
    for (const auto* set : {&digraphs(), &randoms})
        for (const auto& d : *set) {
            ++instances;
            for (auto kind : kKinds) {
                const auto a = verify_lemma_3_5(d, kind);
                const auto b = verify_lemma_3_5_masked(d, kind);
                const auto c = verify_eq22(d, kind);
                t.check(a.holds && b.holds && c.holds, [&] { return a.identity + " " + a.instance; });
            }
        }
    return {t.ok(), std::to_string(digraphs().size()) + " digraphs n<=4 + 300 random n=2..7, three kinds; " +
                        t.failures()};
}

// 6
Outcome round_trips() {
    Tally t;
    std::size_t undirected = 0, directed = 0;
    for (const auto& g : graphs()) {
        if (g.size() <= g.order())
            continue;
        ++undirected;
        const auto rep = reconstruct_tau(make_deck(g));
        t.check(rep.status == ReconstructionStatus::Complete && rep.polynomial == tau(g),
                [&] { return to_graph6(g); });
    }
    const auto randoms = random_digraphs(300, 7000);
    for (const auto* set : {&digraphs(), &randoms})
        for (const auto& d : *set) {
            if (d.size() <= d.order())
                continue;
            ++directed;
            for (auto kind : kKinds) {
                const auto rep = reconstruct_g(make_deck(d, kind));
                t.check(rep.status == ReconstructionStatus::Complete && rep.polynomial == g_poly(d, kind),
                        [&] { return to_digraph6(d) + " " + kind.name(); });
            }
        }
    return {t.ok(), std::to_string(undirected) + " graphs and " + std::to_string(directed) +
                        " digraphs (x3 kinds) with m>n; " + t.failures()};
}

// 7

void check_small_m(Tally& t, std::size_t n, std::size_t m, const ReconstructionReport& rep, const IntPolynomial& truth,
                   const std::string& name) {
    if (m == n) {
        t.check(rep.status == ReconstructionStatus::Unsupported, [&] { return name + " m=n"; });
        return;
    }
    const std::size_t free = n - m;
    bool ok = rep.status == ReconstructionStatus::Underdetermined && rep.underdetermined_index == free &&
              rep.diagnostics.at(free).rhs == 0;
    for (std::size_t j = 0; j <= n && ok; ++j)
        if (j != free)
            ok = rep.polynomial.coefficient(j) == truth.coefficient(j);
    t.check(ok, [&] { return name; });
}

Outcome small_m_behavior() {
    Tally t;
    std::size_t below = 0, equal = 0;
    for (const auto& g : graphs()) {
        if (g.size() == 0 || g.size() > g.order())
            continue;
        (g.size() == g.order() ? equal : below)++;
        check_small_m(t, g.order(), g.size(), reconstruct_tau(make_deck(g)), tau(g), to_graph6(g));
    }
    std::size_t dbelow = 0, dequal = 0;
    for (const auto& d : digraphs()) {
        if (d.size() == 0 || d.size() > d.order())
            continue;
        (d.size() == d.order() ? dequal : dbelow)++;
        for (auto kind : kKinds)
            check_small_m(t, d.order(), d.size(), reconstruct_g(make_deck(d, kind)), g_poly(d, kind),
                                to_digraph6(d) + " " + kind.name());
    }
    return {t.ok(), std::to_string(below) + " graphs with 1<=m<n, " + std::to_string(equal) + " with m=n; " +
                        std::to_string(dbelow) + " and " + std::to_string(dequal) + " digraphs; " + t.failures()};
}

// 8
Outcome fixtures() {
    Tally t;
    const Graph k2(2, {{0, 1}}), p3(3, {{0, 1}, {1, 2}}), k3(3, {{0, 1}, {0, 2}, {1, 2}});
    const Digraph arc(2, {{0, 1}});
    struct Case {
        std::string name;
        IntPolynomial value;
        IntPolynomial expected;
        IntMatrix matrix;
    };
    const std::vector<Case> cases = {
        {"tau(K2)", tau(k2), {1, 0, 1}, adjacency_matrix(k2)},
        {"tau(P3)", tau(p3), {0, 0, 0, 2}, adjacency_matrix(p3)},
        {"tau(K3)", tau(k3), {2, 0, 0, 2}, adjacency_matrix(k3)},
        {"g1(arc)", g_poly(arc, ImmanantKind::g1()), {0, 0, 1}, kind_matrix(arc, ImmanantKind::g1())},
        {"g2(arc)", g_poly(arc, ImmanantKind::g2()), {0, -1, 1}, kind_matrix(arc, ImmanantKind::g2())},
        {"g3(arc)", g_poly(arc, ImmanantKind::g3()), {0, -1, 1}, kind_matrix(arc, ImmanantKind::g3())},
    };
    for (const auto& c : cases) {
        // the frozen value must also agree with the oracle pointwise
        bool oracle_ok = true;
        for (long x = -3; x <= 4; ++x)
            oracle_ok = oracle_ok && c.expected.eval(x) == oracle::permutation_d2(oracle::shifted(c.matrix, x));
        t.check(c.value == c.expected && oracle_ok, [&] { return c.name + " = " + c.value.to_string(); });
    }
    return {t.ok(), "tau(K2), tau(P3), tau(K3), g1/g2/g3 of a single arc; " + t.failures()};
}

// 9
Outcome performance() {
    const Graph g = random_graph(RandomSpec{.n = 150, .p_num = 1, .p_den = 2, .seed = 150});
    std::vector<IntPolynomial> results;
    std::vector<double> times;
    for (std::size_t threads : {1u, 8u}) {
        LinalgOptions opt;
        opt.threads = threads;
        const auto t0 = std::chrono::steady_clock::now();
        results.push_back(tau(g, CharPolyStrategy::Auto, opt));
        times.push_back(seconds_since(t0));
    }
    const bool identical = results[0] == results[1];
    const bool fast = times[0] < 60 && times[1] < 60;
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=150 m=%zu: %.1f s with 1 thread, %.1f s with 8; degree %ld; %s", g.size(),
                  times[0], times[1], results[0].degree(), identical ? "bit-identical" : "OUTPUTS DIFFER");
    return {identical && fast && results[0].degree() == 150, buf};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", oracle_equivalence},
        {"determinant cross-check", determinant_cross_check},
        {"identity suite", identity_suite},
        {"lemma 2.5 on the n<=7 corpus", lemma_2_5_corpus},
        {"lemma 3.5 / eq 22 on digraphs", lemma_3_5_digraphs},
        {"deck round trips for m>n", round_trips},
        {"m<n and m=n reconstruction", small_m_behavior},
        {"known-value fixtures", fixtures},
        {"tau performance at n=150", performance},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        char time[32];
        std::snprintf(time, sizeof time, "%.1fs", seconds_since(t0));
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
                  << " (" << time << ")" << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
              << std::endl;
    return failed ? 1 : 0;
}
