#include <random>
#include <sstream>

#include "doctest.h"
#include "tww/gen.hpp"
#include "tww/io.hpp"
#include "tww/oracle.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

namespace {
ContractionSequence seq_of(int n, std::initializer_list<std::pair<int, int>> pairs) {
    ContractionSequence s;
    s.n = n;
    for (auto [a, b] : pairs) s.contract(a, b);
    return s;
}
}  // namespace

TEST_CASE("contract: red edge rule") {
    // x=0, y=1, a=2, b=3, c=4
    Graph twins{4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    Trigraph t(twins);
    int z = t.contract(0, 1);
    CHECK(z == 4);
    CHECK(t.colour(z, 2) == Colour::black);
    CHECK(t.colour(z, 3) == Colour::black);
    CHECK(t.max_red_degree() == 0);

    Graph g{5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}}};
    Trigraph h(g);
    z = h.contract(0, 1);
    CHECK(h.colour(z, 2) == Colour::red);
    CHECK(h.colour(z, 3) == Colour::black);
    CHECK(h.colour(z, 4) == Colour::red);
    CHECK(h.red_degree(z) == 2);
    CHECK(h.live_count() == 4);

    // x red to a, y black to a
    Graph r{5, {{0, 2}, {1, 2}, {0, 3}, {3, 4}}};
    Trigraph k(r);
    int w = k.contract(3, 4);  // makes 0 see a red edge: N(3)={0}, N(4)={}
    CHECK(k.colour(0, w) == Colour::red);
    int z2 = k.contract(0, 1);
    CHECK(k.colour(z2, 2) == Colour::black);
    CHECK(k.colour(z2, w) == Colour::red);
    CHECK_NOTHROW(k.recheck());

    CHECK_THROWS_AS(k.contract(0, 2), invariant_error);
    CHECK_THROWS_AS(k.contract(2, 2), invariant_error);
}

TEST_CASE("contract: provenance stays a partition") {
    Graph g{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
    Trigraph t(g, nullptr, true);
    int a = t.contract(0, 2);
    int b = t.contract(a, 4);
    int c = t.contract(1, 3);
    std::vector<int> all;
    for (int id : t.live_ids())
        for (int v : t.provenance(id)) all.push_back(v);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(t.provenance(b).size() == 3);
    CHECK(t.provenance(c).size() == 2);
}

TEST_CASE("verify_sequence") {
    Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    auto rep = verify_sequence(k4, seq_of(4, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(rep.width == 0);
    CHECK(rep.full);

    // (K2 + K2) joined completely with ... a cograph: complement of a perfect matching plus twins
    Graph cg{4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 1}, {2, 3}}};
    CHECK(verify_sequence(cg, seq_of(4, {{0, 1}, {2, 3}, {4, 5}})).width == 0);
    Graph joined{4, {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    CHECK(verify_sequence(joined, seq_of(4, {{0, 1}, {2, 3}, {4, 5}})).width == 0);

    Graph p4{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(exact_twinwidth(p4).width == 1);
    CHECK(verify_sequence(p4, seq_of(4, {{0, 2}, {4, 1}, {5, 3}})).width == 1);

    CHECK_THROWS_AS(verify_sequence(p4, seq_of(4, {{0, 0}})), invariant_error);
    ContractionSequence bad;
    bad.n = 4;
    bad.push({StepKind::contract, 0, 1, 7});
    CHECK_THROWS_AS(verify_sequence(p4, bad), invariant_error);
    CHECK_THROWS_AS(verify_sequence(p4, seq_of(4, {{0, 1}, {0, 2}})), invariant_error);

    std::vector<int> lev{0, 1, 2, 3};
    ContractionSequence dec;
    dec.n = 4;
    dec.decrease(1);
    VerifyOptions o;
    o.levels = &lev;
    CHECK_THROWS_AS(verify_sequence(p4, dec, o), invariant_error);
    ContractionSequence dec2;
    dec2.n = 4;
    dec2.decrease(3);
    CHECK_NOTHROW(verify_sequence(p4, dec2, o));
}

TEST_CASE("classify_step and min levels") {
    // y=1 at level 5 whose neighbours are on level 4
    Graph g{4, {{0, 2}, {1, 2}, {1, 3}}};
    std::vector<int> lev{4, 5, 4, 4};
    Trigraph t(g, &lev);
    CHECK(classify_step(t, {StepKind::contract, 2, 3, 4}) == StepClass::level_preserving);
    CHECK(classify_step(t, {StepKind::contract, 0, 1, 4}) == StepClass::level_respecting);
    std::vector<int> lev2{4, 5, 4, 6};
    Graph g2{4, {{0, 2}, {1, 2}, {1, 3}}};
    Trigraph t2(g2, &lev2);
    CHECK(classify_step(t2, {StepKind::contract, 0, 1, 4}) == StepClass::violation);
    CHECK(is_good_assignment(t));
    std::vector<int> far{0, 2};
    CHECK_FALSE(is_good_assignment(Trigraph(Graph{2, {{0, 1}}}, &far)));

    min_level_update(t, {StepKind::contract, 0, 1, 4});
    CHECK(t.level(4) == 4);
    CHECK(is_good_assignment(t));
}

TEST_CASE("min-level-respecting runs stay good") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        auto pg = gen_triangulation(12, it);
        auto lev = [&] {
            std::vector<int> d(pg.n, -1), q{0};
            d[0] = 0;
            for (size_t h = 0; h < q.size(); ++h)
                for (int x : pg.rot[q[h]])
                    if (d[pg.head(x)] < 0) {
                        d[pg.head(x)] = d[q[h]] + 1;
                        q.push_back(pg.head(x));
                    }
            return d;
        }();
        Trigraph t(graph_of(pg), &lev);
        for (int step = 0; step < 40 && t.live_count() > 1; ++step) {
            auto ids = t.live_ids();
            int a = ids[rng() % ids.size()], b = ids[rng() % ids.size()];
            Step s{StepKind::contract, a, b, t.next_id()};
            if (rng() % 4 == 0) s = {StepKind::decrease, a, -1, -1};
            if (a == b && s.kind == StepKind::contract) continue;
            if (classify_step(t, s) == StepClass::violation) continue;
            min_level_update(t, s);
            CHECK(is_good_assignment(t));
        }
    }
}

TEST_CASE("restrict_sequence") {
    Graph g{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
    auto s = seq_of(5, {{0, 1}, {2, 3}, {5, 6}, {7, 4}});
    std::vector<char> all(5, 1);
    auto r = restrict_sequence(5, s, all);
    CHECK(r.steps.size() == s.steps.size());
    for (size_t i = 0; i < r.steps.size(); ++i) CHECK(r.steps[i].x == s.steps[i].x);
    std::vector<char> one(5, 0);
    one[2] = 1;
    CHECK(restrict_sequence(5, s, one).steps.empty());
    std::vector<char> some{1, 0, 1, 0, 1};
    auto rs = restrict_sequence(5, s, some);
    CHECK(rs.n == 3);
    CHECK(rs.contractions() == 2);
    CHECK(verify_sequence(induced_subgraph(g, some), rs).full);
}

TEST_CASE("restriction never increases width on random planar graphs") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        auto pg = gen_triangulation(9, it);
        Graph g = graph_of(pg);
        ContractionSequence s;
        s.n = g.n;
        std::vector<int> live(g.n);
        for (int v = 0; v < g.n; ++v) live[v] = v;
        while (live.size() > 1) {
            size_t i = rng() % live.size(), j = rng() % (live.size() - 1);
            if (j >= i) ++j;
            int z = s.next_id();
            s.contract(live[i], live[j]);
            live.erase(live.begin() + std::max(i, j));
            live.erase(live.begin() + std::min(i, j));
            live.push_back(z);
        }
        std::vector<char> keep(g.n);
        for (auto& k : keep) k = rng() % 2;
        auto r = restrict_sequence(g.n, s, keep);
        CHECK(verify_sequence(induced_subgraph(g, keep), r).width <= verify_sequence(g, s).width);
    }
}

TEST_CASE("differential: incremental and dense verifiers agree") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 300; ++it) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g{n, {}};
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2) g.edges.push_back({a, b});
        ContractionSequence s;
        s.n = n;
        std::vector<int> live(n);
        for (int v = 0; v < n; ++v) live[v] = v;
        while (live.size() > 1) {
            size_t i = rng() % live.size(), j = rng() % (live.size() - 1);
            if (j >= i) ++j;
            int z = s.next_id();
            s.contract(live[i], live[j]);
            live.erase(live.begin() + std::max(i, j));
            live.erase(live.begin() + std::min(i, j));
            live.push_back(z);
        }
        VerifyOptions o;
        o.recheck_every = 1;
        CHECK(verify_sequence(g, s, o).per_step_max == reference_verify(g, s).per_step_max);
    }
}

TEST_CASE("io: round trips") {
    auto g = gen_triangulation(20, 4);
    std::stringstream ss;
    write_plane(ss, g, generator_comment("tri", 4, 20));
    auto h = read_plane(ss);
    CHECK(h.edges == g.edges);
    CHECK(h.rot == g.rot);
    CHECK(h.outer == g.outer);

    auto s = seq_of(4, {{0, 1}, {2, 3}, {4, 5}});
    s.decrease(6);
    std::stringstream q;
    write_sequence(q, s);
    auto t = read_sequence(q);
    CHECK(t.steps.size() == 4);
    CHECK(t.contractions() == 3);

    std::stringstream e("c hello\np edge 3 2\ne 0 1\ne 1 2\n");
    auto a = read_any_graph(e);
    CHECK_FALSE(a.plane);
    CHECK(a.g.edges.size() == 2);

    std::stringstream bad1("p plane 2 1\ne 0 0 1\nr 0 0\nr 1\nouter 0 0\n");
    CHECK_THROWS_AS(read_plane(bad1), format_error);
    std::stringstream bad2("p tww-seq 3 1\nk 0 1 5\n");
    CHECK_THROWS_AS(read_sequence(bad2), format_error);
    std::stringstream bad3("p edge 2 1\nx 0 1\n");
    CHECK_THROWS_AS(read_any_graph(bad3), format_error);
    std::stringstream bad4("p tww-seq 3 2\nk 0 1 3\n");
    CHECK_THROWS_AS(read_sequence(bad4), format_error);
}

TEST_CASE("generators are deterministic") {
    std::stringstream a, b;
    write_plane(a, gen_triangulation(300, 77));
    write_plane(b, gen_triangulation(300, 77));
    CHECK(a.str() == b.str());
    std::stringstream c, d;
    write_plane(c, gen_stacked_quadrangulation(300, 77));
    write_plane(d, gen_stacked_quadrangulation(300, 78));
    CHECK(c.str() != d.str());
}
