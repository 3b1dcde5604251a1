#include "doctest.h"

#include "vasseq/random.hpp"
#include "vasseq/resolver.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace vasseq;
using namespace vasseq::testing;

namespace
{

std::optional<TransitionId> ask(const Resolver& r, const Vass& v, const Configuration& c, const std::string& letter)
{
    return r(History{{}, c}, *v.letter_id(letter));
}

} // namespace

TEST_CASE("jancar_resolver choices on the example")
{
    const auto r = build_b(example_machine());
    const Vass& b = r.b;
    const auto res = jancar_resolver(r);

    auto t = ask(res, b, config(b, "q_1@B", {1, 1}), "z_2");
    REQUIRE(t);
    CHECK(b.state_name(b.transition(*t).target) == "q_1!2@B");

    t = ask(res, b, config(b, "q_1@B", {1, 0}), "z_2");
    REQUIRE(t);
    CHECK(b.state_name(b.transition(*t).target) == "q_1~q_f@B");

    CHECK_FALSE(ask(res, b, config(b, "q_i@B", {0, 0}), "h"));
}

TEST_CASE("resolver_run")
{
    const auto r = build_b(example_machine());
    const Vass& b = r.b;
    const auto res = jancar_resolver(r);

    auto run = resolver_run(b, res, W("inc_1.z_2.z_2"));
    REQUIRE(run.complete);
    CHECK(run_end(b, run.run) == config(b, "q_f@B", {1, 0}));
    CHECK(word_of(b, run.run) == W("inc_1.z_2.z_2"));

    run = resolver_run(b, res, Word{});
    CHECK(run.complete);
    CHECK(run.run.steps.empty());
    CHECK(run.run.start == config(b, "q_i@B", {0, 0}));

    run = resolver_run(b, res, W("inc_1.dec_2"));
    CHECK_FALSE(run.complete);
    CHECK(run.failure_at == 2);

    SUBCASE("contract violations are reported")
    {
        Resolver wrong_letter = [](const History&, LetterId) { return std::optional<TransitionId>{0}; };
        CHECK_THROWS_AS(resolver_run(b, wrong_letter, W("z_2")), InvariantViolation);
        Resolver out_of_range = [](const History&, LetterId) { return std::optional<TransitionId>{999}; };
        CHECK_THROWS_AS(resolver_run(b, out_of_range, W("inc_1")), InvariantViolation);
    }
}

TEST_CASE("check_history_det_bounded")
{
    SUBCASE("B of the example with the cheated-zero-test resolver")
    {
        const auto r = build_b(example_machine());
        const auto v = check_history_det_bounded(r.b, jancar_resolver(r), 10);
        CHECK(v.ok);
        CHECK(v.checked_up_to == 10);
    }

    SUBCASE("never taking the gadget loses words")
    {
        const auto r = build_b(gadget_machine());
        // split-state transitions precede gadget transitions, so this one never cheats
        const auto lazy = first_enabled_resolver(r.b);

        // oracle: first word of L_T(B) (length-lex) that the lazy resolver cannot follow
        std::optional<Word> expected;
        for (const auto& w : oracle::trace_words(r.b, 6))
            if (!resolver_run(r.b, lazy, w).complete) {
                expected = w;
                break;
            }
        REQUIRE(expected);
        CHECK(*expected == W("inc_2.z_2.z_2.h"));

        const auto v = check_history_det_bounded(r.b, lazy, 6);
        CHECK_FALSE(v.ok);
        CHECK(v.counterexample == *expected);
        CHECK(check_history_det_bounded(r.b, jancar_resolver(r), 8).ok);
    }

    SUBCASE("deterministic VASSs with the only resolver")
    {
        const Vass a = build_a(example_machine());
        CHECK(check_history_det_bounded(a, first_enabled_resolver(a), 8).ok);
        Rng rng(3);
        for (int i = 0; i < 100; ++i) {
            const Vass v = random_vass(rng);
            if (is_deterministic(v))
                CHECK(check_history_det_bounded(v, first_enabled_resolver(v), 5).ok);
        }
    }

    SUBCASE("acceptance uses the VASS's own final set")
    {
        const Vass a = build_a(example_machine());
        const Vass halting = a.with_finals({config(a, "h@A", {0, 0})});
        CHECK(check_history_det_bounded(halting, first_enabled_resolver(halting), 6).ok);
        // a resolver that never moves loses the one accepted word
        Resolver stuck = [](const History&, LetterId) { return std::optional<TransitionId>{}; };
        const auto v = check_history_det_bounded(halting, stuck, 6);
        CHECK_FALSE(v.ok);
        CHECK(v.counterexample == W("inc_1.z_2.z_2.h"));
        CHECK(check_history_det_bounded(halting, stuck, 3).ok);
    }
}

TEST_CASE("property: jancar_resolver answers are enabled and over the letter")
{
    Rng rng(21);
    std::uniform_int_distribution<std::int64_t> small(0, 3);
    for (const auto& m : random_corpus(21, 40, 8)) {
        const auto r = build_b(m);
        const auto res = jancar_resolver(r);
        for (StateId q = 0; q < r.b.states().size(); ++q) {
            const Configuration c{q, {small(rng), small(rng)}};
            for (LetterId a = 0; a < r.b.alphabet().size(); ++a) {
                const auto choice = res(History{{}, c}, a);
                const auto options = enabled(r.b, c, a);
                CHECK(choice.has_value() == !options.empty());
                if (choice) {
                    CHECK(r.b.transition(*choice).letter == a);
                    CHECK(is_enabled(r.b.transition(*choice), c));
                }
            }
        }
    }
}

TEST_CASE("property: jancar_resolver is positional")
{
    for (const auto& m : random_corpus(22, 30, 8)) {
        const auto r = build_b(m);
        const auto res = jancar_resolver(r);
        for (const auto& w : oracle::trace_words(r.b, 6)) {
            const auto full = resolver_run(r.b, res, w);
            if (!full.complete)
                continue;
            // replay every step with the history cut down to nothing
            Configuration c = r.b.initial();
            History h{{}, c};
            for (std::size_t i = 0; i < w.size(); ++i) {
                const auto letter = *r.b.letter_id(w[i]);
                const auto with_history = res(h, letter);
                const auto without = res(History{{}, h.current}, letter);
                CHECK(with_history == without);
                CHECK(with_history == std::optional<TransitionId>{full.run.steps[i]});
                const auto next = fire(h.current, r.b.transition(*with_history));
                h.steps.emplace_back(h.current, *with_history);
                h.current = next;
            }
        }
    }
}
