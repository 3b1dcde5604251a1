#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "vasseq/twocm.hpp"
#include "vasseq/vass.hpp"

namespace vasseq
{

using Rng = std::mt19937_64;

/// A valid two-counter machine with between 2 and `max_states` states.
/// The initial state is "q0" and the final one "qf".
CounterMachine random_machine(Rng& rng, std::size_t max_states);

struct RandomVassShape
{
    std::size_t max_states = 6;
    std::size_t dimension = 2;
    std::size_t letters = 2;
    std::int64_t min_effect = -2;
    std::int64_t max_effect = 2;
    std::int64_t max_initial = 2;
    /// Extra transitions on top of one per state (upper bound).
    std::size_t extra_transitions = 4;
};

/// A random VASS with states "s0".., letters "a", "b", .. and trace
/// semantics (every state final at the zero vector).
Vass random_vass(Rng& rng, const RandomVassShape& shape = {});

/// Deterministic corpus of `count` random machines for the given seed.
std::vector<CounterMachine> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_states);

} // namespace vasseq
