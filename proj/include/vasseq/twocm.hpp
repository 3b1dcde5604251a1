#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vasseq/vass.hpp"

namespace vasseq
{

/// Operations of a two-counter machine.
enum class Op : std::uint8_t
{
    inc_1,
    inc_2,
    dec_1,
    dec_2,
    z_1,
    z_2,
};

inline constexpr std::array<Op, 6> all_ops{Op::inc_1, Op::inc_2, Op::dec_1, Op::dec_2, Op::z_1, Op::z_2};

std::string_view to_string(Op op) noexcept;
std::optional<Op> parse_op(std::string_view text) noexcept;

/// Counter index (0 or 1) the operation acts on.
std::size_t counter_of(Op op) noexcept;
bool is_inc(Op op) noexcept;
bool is_dec(Op op) noexcept;
bool is_zero_test(Op op) noexcept;

struct CmTransition
{
    std::string source;
    Op op = Op::inc_1;
    std::string target;

    friend bool operator==(const CmTransition&, const CmTransition&) = default;
};

/// A two-counter machine (Q, q_i, q_f, δ). `states` lists every state in
/// order of first appearance (initial, final, then transition endpoints).
struct CounterMachine
{
    std::vector<std::string> states;
    std::string initial;
    std::string final;
    std::vector<CmTransition> transitions;

    /// Builds a machine, collecting the state list from the transitions.
    static CounterMachine make(std::string initial, std::string final, std::vector<CmTransition> transitions);

    friend bool operator==(const CounterMachine&, const CounterMachine&) = default;
};

struct CmConfig
{
    std::string state;
    std::array<std::int64_t, 2> counters{0, 0};

    friend bool operator==(const CmConfig&, const CmConfig&) = default;
};

struct Violation
{
    std::string state;
    std::string rule;
    /// Index of the offending transition when one is singled out.
    std::optional<std::size_t> transition;
};

/// Empty iff the machine is a well-formed two-counter machine: no moves out
/// of the final state, and every other state has either a single inc_i move
/// or exactly a dec_i / z_i pair on the same counter.
std::vector<Violation> validate(const CounterMachine& m);

/// Throws InvalidMachine listing every violation.
void require_valid(const CounterMachine& m);

struct CmStep
{
    CmConfig next;
    Op op;
    std::size_t transition;
};

/// One deterministic step; nullopt when `c` is at the final state.
/// dec_i is taken iff counter i is positive, z_i otherwise.
std::optional<CmStep> step(const CounterMachine& m, const CmConfig& c);

struct CmRunResult
{
    bool halted = false;
    std::size_t steps = 0;
    /// Operations performed; complete when halted, the first `steps` otherwise.
    std::vector<Op> ops;
    CmConfig last;
};

/// Runs from q_i(0,0) for at most `fuel` steps.
CmRunResult run_bounded(const CounterMachine& m, std::size_t fuel);

/// Halting run with every z_i doubled and h appended, if the machine halts within `fuel`.
std::optional<Word> halting_word(const CounterMachine& m, std::size_t fuel);

/// The final state is reachable from the initial one in the control graph
/// (ignoring counters). When false the machine provably never halts.
bool final_reachable_in_control_graph(const CounterMachine& m);

} // namespace vasseq
