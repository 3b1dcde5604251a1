#include "vasseq/random.hpp"

#include <algorithm>
#include <string>

namespace vasseq
{

namespace
{

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

CounterMachine random_machine(Rng& rng, std::size_t max_states)
{
    const std::size_t n = pick(rng, 2, std::max<std::size_t>(2, max_states));
    std::vector<std::string> names;
    for (std::size_t i = 0; i + 1 < n; ++i)
        names.push_back("q" + std::to_string(i));
    names.push_back("qf");

    auto any_state = [&] { return names[pick(rng, 0, n - 1)]; };
    std::vector<CmTransition> ts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t counter = pick(rng, 0, 1);
        if (pick(rng, 0, 1) == 0) {
            ts.push_back({names[i], counter == 0 ? Op::inc_1 : Op::inc_2, any_state()});
        } else {
            ts.push_back({names[i], counter == 0 ? Op::dec_1 : Op::dec_2, any_state()});
            ts.push_back({names[i], counter == 0 ? Op::z_1 : Op::z_2, any_state()});
        }
    }
    return CounterMachine::make(names.front(), names.back(), std::move(ts));
}

Vass random_vass(Rng& rng, const RandomVassShape& shape)
{
    const std::size_t n = pick(rng, 1, std::max<std::size_t>(1, shape.max_states));
    VassBuilder builder(shape.dimension);
    for (std::size_t l = 0; l < shape.letters; ++l)
        builder.add_letter(std::string(1, static_cast<char>('a' + l)));
    for (std::size_t i = 0; i < n; ++i)
        builder.add_state("s" + std::to_string(i));

    std::uniform_int_distribution<std::int64_t> effect(shape.min_effect, shape.max_effect);
    const std::size_t count = n + pick(rng, 0, shape.extra_transitions);
    for (std::size_t i = 0; i < count; ++i) {
        Counters e(shape.dimension);
        for (auto& x : e)
            x = effect(rng);
        builder.add_transition("s" + std::to_string(pick(rng, 0, n - 1)),
                               std::string(1, static_cast<char>('a' + pick(rng, 0, shape.letters - 1))), e,
                               "s" + std::to_string(pick(rng, 0, n - 1)));
    }
    Counters init(shape.dimension);
    for (auto& x : init)
        x = std::uniform_int_distribution<std::int64_t>(0, shape.max_initial)(rng);
    builder.set_initial("s0", init);
    return all_states_accepting(builder.build());
}

std::vector<CounterMachine> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_states)
{
    Rng rng(seed);
    std::vector<CounterMachine> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_machine(rng, max_states));
    return out;
}

} // namespace vasseq
