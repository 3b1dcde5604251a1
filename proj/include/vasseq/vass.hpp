#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vasseq/search.hpp"

namespace vasseq
{

using StateId = std::uint32_t;
using LetterId = std::uint32_t;
using TransitionId = std::size_t;
using Counters = std::vector<std::int64_t>;

/// A word over letter names. Words are compared across VASSs by name.
using Word = std::vector<std::string>;

/// Componentwise `lhs >= rhs`. Both vectors must have the same length.
bool dominates(const Counters& lhs, const Counters& rhs) noexcept;

/// (source, letter, effect, target); the effect may be negative in any component.
struct Transition
{
    StateId source = 0;
    LetterId letter = 0;
    Counters effect;
    StateId target = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// A state together with a nonnegative counter vector, written q(u).
struct Configuration
{
    StateId state = 0;
    Counters counters;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ConfigurationHash
{
    std::size_t operator()(const Configuration& c) const noexcept;
};

/// A sequence of transitions fired one after another from `start`.
struct Run
{
    Configuration start;
    std::vector<TransitionId> steps;

    friend bool operator==(const Run&, const Run&) = default;
};

/// A k-VASS: alphabet, states, transitions, one initial configuration and a
/// finite set of final configurations. Immutable once constructed; the
/// constructor checks every structural invariant and throws
/// InvariantViolation on failure.
///
/// The order of `alphabet()` is the enumeration order used by every search.
class Vass
{
public:
    Vass(std::size_t dimension,
         std::vector<std::string> alphabet,
         std::vector<std::string> states,
         std::vector<Transition> transitions,
         Configuration initial,
         std::vector<Configuration> finals);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    const Configuration& initial() const noexcept { return initial_; }
    const std::vector<Configuration>& finals() const noexcept { return finals_; }

    const Transition& transition(TransitionId id) const { return transitions_.at(id); }
    const std::string& state_name(StateId id) const { return states_.at(id); }
    const std::string& letter_name(LetterId id) const { return alphabet_.at(id); }

    std::optional<StateId> state_id(std::string_view name) const;
    std::optional<LetterId> letter_id(std::string_view name) const;

    /// Transitions leaving `state` over `letter`, in insertion order.
    std::span<const TransitionId> outgoing(StateId state, LetterId letter) const;
    /// All transitions leaving `state`, ordered by letter then insertion index.
    std::span<const TransitionId> outgoing(StateId state) const;

    /// Renders q(u1,...,uk).
    std::string format(const Configuration& c) const;

    /// Same VASS with a different final set.
    Vass with_finals(std::vector<Configuration> finals) const;

    friend bool operator==(const Vass& lhs, const Vass& rhs);

private:
    std::size_t dimension_;
    std::vector<std::string> alphabet_;
    std::vector<std::string> states_;
    std::vector<Transition> transitions_;
    Configuration initial_;
    std::vector<Configuration> finals_;

    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::string, LetterId> letter_index_;
    // by_state_letter_[state * |alphabet| + letter], by_state_[state]
    std::vector<std::vector<TransitionId>> by_state_letter_;
    std::vector<std::vector<TransitionId>> by_state_;
};

/// Incremental construction of a Vass by names.
class VassBuilder
{
public:
    explicit VassBuilder(std::size_t dimension) : dimension_(dimension) {}

    StateId add_state(const std::string& name);
    LetterId add_letter(const std::string& name);
    TransitionId add_transition(const std::string& source, const std::string& letter,
                                Counters effect, const std::string& target);
    void set_initial(const std::string& state, Counters counters);
    void add_final(const std::string& state, Counters counters);

    bool has_state(const std::string& name) const { return state_index_.contains(name); }

    Vass build() const;

private:
    std::size_t dimension_;
    std::vector<std::string> alphabet_;
    std::vector<std::string> states_;
    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::string, LetterId> letter_index_;
    std::vector<Transition> transitions_;
    std::optional<Configuration> initial_;
    std::vector<Configuration> finals_;
};

/// Transitions over `letter` enabled in `c`, stable by insertion index.
std::vector<TransitionId> enabled(const Vass& v, const Configuration& c, LetterId letter);
/// Same, by letter name; a letter outside the alphabet enables nothing.
std::vector<TransitionId> enabled(const Vass& v, const Configuration& c, std::string_view letter);

bool is_enabled(const Transition& t, const Configuration& c) noexcept;

/// Fires `t` in `c`. Throws NotEnabled on a source mismatch or a negative counter.
Configuration fire(const Configuration& c, const Transition& t);

/// `c` covers some final configuration.
bool is_accepting(const Vass& v, const Configuration& c);

/// Final configuration reached by `run`; throws NotEnabled if some step is not firable.
Configuration run_end(const Vass& v, const Run& run);
Word word_of(const Vass& v, const Run& run);

/// Maps letter names to ids of `v`. Returns nullopt if some letter is foreign.
std::optional<std::vector<LetterId>> to_letter_ids(const Vass& v, const Word& w);

/// Some run over `w` starts in `c`.
bool reads(const Vass& v, const Configuration& c, const Word& w);

/// Words of length <= maxlen readable from the initial configuration,
/// in length-lexicographic order with respect to the alphabet order.
std::vector<Word> bounded_trace_language(const Vass& v, std::size_t maxlen, const SearchOptions& options = {});

/// Words of length <= maxlen read by a run ending in a configuration that
/// covers some final configuration, in length-lexicographic order.
std::vector<Word> bounded_cover_language(const Vass& v, std::size_t maxlen, const SearchOptions& options = {});

/// Every state at the zero vector becomes final.
Vass all_states_accepting(const Vass& v);

/// No two distinct transitions share (source, letter).
bool is_deterministic(const Vass& v);

struct UnambiguityVerdict
{
    bool unambiguous = true;
    std::size_t checked_up_to = 0;
    // Witness, meaningful only when !unambiguous.
    Word word;
    Run first;
    Run second;
};

/// Counts accepting runs per accepted word up to `maxlen` by exhaustive run
/// enumeration. Reports the enumeration-least word with two accepting runs.
UnambiguityVerdict is_unambiguous_bounded(const Vass& v, std::size_t maxlen, const SearchOptions& options = {});

/// Renders a word as letters joined by '.', or "ε" for the empty word.
std::string to_string(const Word& w);

/// Length-lexicographic order on words, letters ranked by `alphabet` order.
/// Letters outside `alphabet` rank after all letters inside it, by name.
bool length_lex_less(const std::vector<std::string>& alphabet, const Word& lhs, const Word& rhs);

} // namespace vasseq
