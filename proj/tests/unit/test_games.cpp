#include "doctest.h"

#include "vasseq/games.hpp"
#include "vasseq/random.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace vasseq;
using namespace vasseq::testing;

namespace
{

// Same trace language as adaptive_dup, but Duplicator has to commit on `a`.
Vass adaptive_spoiler()
{
    VassBuilder b(1);
    b.add_transition("s0", "a", {0}, "s1");
    b.add_transition("s1", "b", {0}, "s2");
    b.add_transition("s1", "c", {0}, "s3");
    b.set_initial("s0", {0});
    return all_states_accepting(b.build());
}

Vass adaptive_dup()
{
    VassBuilder b(1);
    b.add_transition("d0", "a", {0}, "d1");
    b.add_transition("d0", "a", {0}, "d2");
    b.add_transition("d1", "b", {0}, "d3");
    b.add_transition("d2", "c", {0}, "d3");
    b.set_initial("d0", {0});
    return all_states_accepting(b.build());
}

} // namespace

TEST_CASE("simulation games on the example reduction")
{
    const auto m = example_machine();
    const Vass a = build_a(m);
    const Vass b = build_b(m).b;

    auto g = simulates_bounded(a, b, 10);
    CHECK_FALSE(g.spoiler_wins);
    CHECK(g.depth == 10);

    g = simulates_bounded(b, a, 4);
    CHECK(g.spoiler_wins);
    CHECK(g.depth == 4);
    CHECK(g.witness == W("inc_1.z_2.z_2.h"));

    CHECK_FALSE(simulates_bounded(b, a, 3).spoiler_wins);

    const auto [ab, ba] = two_sided_bounded(a, b, 6);
    CHECK_FALSE(ab.spoiler_wins);
    CHECK(ba == GameVerdict{true, 4, W("inc_1.z_2.z_2.h")});
}

TEST_CASE("games where nobody wins")
{
    SUBCASE("machine whose final state is unreachable")
    {
        const auto m = loop_machine();
        const auto [ab, ba] = two_sided_bounded(build_a(m), build_b(m).b, 12);
        CHECK_FALSE(ab.spoiler_wins);
        CHECK_FALSE(ba.spoiler_wins);
    }
    SUBCASE("a VASS against itself")
    {
        Rng rng(5);
        for (int i = 0; i < 20; ++i) {
            const Vass v = random_vass(rng);
            CHECK_FALSE(simulates_bounded(v, v, 6).spoiler_wins);
        }
    }
    SUBCASE("Spoiler without moves loses")
    {
        VassBuilder stuck(1);
        stuck.add_letter("a");
        stuck.set_initial("x", {0});
        const Vass s = all_states_accepting(stuck.build());
        CHECK_FALSE(simulates_bounded(s, s, 3).spoiler_wins);
        CHECK_FALSE(simulates_bounded(s, adaptive_dup(), 0).spoiler_wins);
        CHECK(simulates_bounded(s, adaptive_dup(), 1) == GameVerdict{true, 1, W("a")});
    }
}

TEST_CASE("adaptive Spoiler win between trace-equal VASSs")
{
    const Vass s = adaptive_spoiler();
    const Vass d = adaptive_dup();
    // no single word separates them ...
    CHECK(oracle::trace_words(s, 4) == oracle::trace_words(d, 4));
    // ... yet Spoiler wins by choosing the second letter after Duplicator commits
    const auto g = simulates_bounded(d, s, 5);
    CHECK(g.spoiler_wins);
    CHECK(g.depth == 2);
    CHECK(g.witness == W("a.c"));
    CHECK_FALSE(simulates_bounded(s, d, 5).spoiler_wins);
    CHECK_FALSE(simulates_bounded(d, s, 1).spoiler_wins);
}

TEST_CASE("property: solver agrees with plain minimax")
{
    Rng rng(77);
    RandomVassShape shape;
    shape.max_states = 4;
    shape.extra_transitions = 3;
    for (int i = 0; i < 120; ++i) {
        const Vass x = random_vass(rng, shape);
        const Vass y = random_vass(rng, shape);
        const std::size_t depth = 4;
        const auto expected = oracle::spoiler_win_depth(x, y, depth);
        const auto g = simulates_bounded(x, y, depth);
        CAPTURE(i);
        CHECK(g.spoiler_wins == expected.has_value());
        if (expected) {
            CHECK(g.depth == *expected);
            CHECK(g.witness.size() == g.depth);
            CHECK(oracle::reads(y, y.initial(), g.witness));
        }
    }
}

TEST_CASE("property: depth monotonicity")
{
    Rng rng(78);
    for (int i = 0; i < 60; ++i) {
        const Vass x = random_vass(rng);
        const Vass y = random_vass(rng);
        const auto deep = simulates_bounded(x, y, 6);
        for (std::size_t k = 0; k <= 6; ++k) {
            const auto g = simulates_bounded(x, y, k);
            if (deep.spoiler_wins) {
                CHECK(g.spoiler_wins == (deep.depth <= k));
                if (g.spoiler_wins)
                    CHECK(g == deep);
            } else {
                CHECK_FALSE(g.spoiler_wins);
            }
        }
    }
}

TEST_CASE("property: witnesses of deterministic duplicators are language differences")
{
    Rng rng(79);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 40; ++i) {
        const Vass x = random_vass(rng);
        const Vass y = random_vass(rng);
        if (!is_deterministic(x))
            continue;
        ++checked;
        const auto g = simulates_bounded(x, y, 5);
        if (!g.spoiler_wins)
            continue;
        CHECK(oracle::reads(y, y.initial(), g.witness));
        CHECK_FALSE(oracle::reads(x, x.initial(), g.witness));
    }
    CHECK(checked > 10);
}

TEST_CASE("lemma_consistency")
{
    const auto r = build_b(example_machine());
    const auto ra = first_enabled_resolver(r.a);
    const auto rb = jancar_resolver(r);

    auto report = lemma_consistency(r.a, r.b, ra, rb, 6, 6);
    CHECK(report.consistent);
    CHECK(report.issues.empty());
    CHECK_FALSE(report.languages.equal);
    CHECK(report.languages.word == W("inc_1.z_2.z_2.h"));
    CHECK(report.games.second.spoiler_wins);
    CHECK(report.games.second.depth == 4);

    const auto loop = build_b(loop_machine());
    report = lemma_consistency(loop.a, loop.b, first_enabled_resolver(loop.a), jancar_resolver(loop), 8, 8);
    CHECK(report.consistent);
    CHECK(report.languages.equal);

    SUBCASE("resolvers must pass the history-determinism check")
    {
        const auto g = build_b(gadget_machine());
        CHECK_THROWS_AS(lemma_consistency(g.a, g.b, first_enabled_resolver(g.a), first_enabled_resolver(g.b), 6, 6),
                        PreconditionFailed);
    }
}

TEST_CASE("budget exhaustion")
{
    const auto r = build_b(loop_machine());
    SearchOptions tiny;
    tiny.node_budget = 5;
    CHECK_THROWS_AS(simulates_bounded(r.a, r.b, 10, tiny), ResourceBound);
}
