#include "doctest.h"

#include "vasseq/equivalence.hpp"
#include "vasseq/random.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace vasseq;
using namespace vasseq::testing;

TEST_CASE("trace comparison of the example reduction")
{
    const auto m = example_machine();
    const Vass a = build_a(m);
    const Vass b = build_b(m).b;

    auto v = trace_equal_bounded(a, b, 4);
    CHECK_FALSE(v.equal);
    CHECK(v.word == W("inc_1.z_2.z_2.h"));
    CHECK(v.in_first);
    CHECK(v.checked_up_to == 4);

    v = trace_equal_bounded(a, b, 3);
    CHECK(v.equal);
    CHECK(v.checked_up_to == 3);

    // symmetric, with the side flipped
    v = trace_equal_bounded(b, a, 8);
    CHECK_FALSE(v.equal);
    CHECK(v.word == W("inc_1.z_2.z_2.h"));
    CHECK_FALSE(v.in_first);

    CHECK(containment_bounded(b, a, 10).contained);
    const auto c = containment_bounded(a, b, 4);
    CHECK_FALSE(c.contained);
    CHECK(c.witness == W("inc_1.z_2.z_2.h"));
}

TEST_CASE("cover comparison")
{
    SUBCASE("empty word decides when the finals differ")
    {
        VassBuilder x(1);
        x.add_transition("p", "a", {1}, "p");
        x.set_initial("p", {0});
        x.add_final("p", {1});
        const Vass needs_one = x.build();
        const Vass trivially = needs_one.with_finals({Configuration{0, {0}}});
        const auto v = cover_equal_bounded(needs_one, trivially, 5);
        CHECK_FALSE(v.equal);
        CHECK(v.word.empty());
        CHECK_FALSE(v.in_first);
        CHECK(cover_equal_bounded(needs_one, needs_one, 5).equal);
        CHECK(containment_bounded(needs_one, trivially, 5, Semantics::Cover).contained);
        CHECK(containment_bounded(trivially, needs_one, 5, Semantics::Cover).witness == Word{});
        CHECK(trace_equal_bounded(needs_one, trivially, 5).equal);
    }
    SUBCASE("all-states-accepting makes cover and trace agree")
    {
        Rng rng(11);
        for (int i = 0; i < 30; ++i) {
            const Vass x = random_vass(rng);
            const Vass y = random_vass(rng);
            CHECK(cover_equal_bounded(x, y, 4) == trace_equal_bounded(x, y, 4));
        }
    }
}

TEST_CASE("joint alphabet")
{
    VassBuilder x(1), y(1);
    x.add_letter("b");
    x.add_letter("a");
    x.set_initial("p", {0});
    y.add_letter("c");
    y.add_letter("a");
    y.set_initial("p", {0});
    CHECK(joint_alphabet(x.build(), y.build()) == std::vector<std::string>{"b", "a", "c"});
}

TEST_CASE("property: product search agrees with brute force")
{
    Rng rng(12);
    for (int i = 0; i < 80; ++i) {
        const Vass x = random_vass(rng);
        const Vass y = random_vass(rng);
        const auto order = joint_alphabet(x, y);
        for (bool cover : {false, true}) {
            const Vass xs = cover ? x.with_finals({Configuration{0, {1, 0}}}) : x;
            const Vass ys = cover ? y.with_finals({Configuration{0, {0, 1}}}) : y;
            const auto wx = oracle::words_from(xs, xs.initial(), 5, cover, order);
            const auto wy = oracle::words_from(ys, ys.initial(), 5, cover, order);
            const auto expected = oracle::least_difference(wx, wy, order);
            const auto got = equal_bounded(xs, ys, 5, cover ? Semantics::Cover : Semantics::Trace);
            CAPTURE(i);
            CAPTURE(cover);
            CHECK(got.equal == !expected.has_value());
            if (expected) {
                CHECK(got.word == expected->word);
                CHECK(got.in_first == expected->in_first);
            }
        }
    }
}

TEST_CASE("property: verdicts are monotone in the bound")
{
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const Vass x = random_vass(rng);
        const Vass y = random_vass(rng);
        const auto full = trace_equal_bounded(x, y, 6);
        for (std::size_t k = 0; k <= 6; ++k) {
            const auto v = trace_equal_bounded(x, y, k);
            if (full.equal || full.word.size() > k) {
                CHECK(v.equal);
            } else {
                CHECK(v.word == full.word);
                CHECK(v.in_first == full.in_first);
            }
        }
        const auto c = containment_bounded(x, y, 6);
        if (!c.contained)
            CHECK(c.witness.size() >= (full.equal ? 7 : full.word.size()));
    }
}

TEST_CASE("theorem_harness")
{
    SUBCASE("halting machine")
    {
        const auto r = theorem_harness(example_machine(), 1000, 8);
        CHECK(r.status == HarnessStatus::Passed);
        CHECK(r.halted);
        REQUIRE(r.halting_word);
        CHECK(*r.halting_word == W("inc_1.z_2.z_2.h"));
        CHECK_FALSE(r.equivalence.equal);
        CHECK(r.equivalence.word.size() == 4);
        for (const auto& c : r.checks)
            CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    }
    SUBCASE("unreachable final state")
    {
        const auto r = theorem_harness(loop_machine(), 1000, 12);
        CHECK(r.status == HarnessStatus::Passed);
        CHECK_FALSE(r.halted);
        CHECK_FALSE(r.final_control_reachable);
        CHECK(r.equivalence.equal);
        CHECK(r.equivalence.checked_up_to == 12);
    }
    SUBCASE("no verdict either way")
    {
        const auto m = CounterMachine::make(
            "q_i", "q_f", {{"q_i", Op::inc_1, "q_1"}, {"q_1", Op::dec_2, "q_f"}, {"q_1", Op::z_2, "q_i"}});
        const auto r = theorem_harness(m, 200, 6);
        CHECK(r.status == HarnessStatus::Inconclusive);
        CHECK_FALSE(r.halted);
        CHECK(r.final_control_reachable);
    }
    SUBCASE("halting word beyond the bound")
    {
        const auto r = theorem_harness(gadget_machine(), 1000, 3);
        CHECK(r.status == HarnessStatus::Passed);
        CHECK(r.halted);
        CHECK_FALSE(r.notes.empty());
    }
    CHECK(to_string(HarnessStatus::Inconclusive) == "inconclusive");
}

TEST_CASE("budget exhaustion")
{
    const auto m = loop_machine();
    SearchOptions tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(trace_equal_bounded(build_a(m), build_b(m).b, 12, tiny), ResourceBound);
}
