#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vasseq/equivalence.hpp"
#include "vasseq/resolver.hpp"
#include "vasseq/vass.hpp"

namespace vasseq
{

/// A position of the simulation game. `pending` holds the letter and the
/// transition Spoiler just fired when it is Duplicator's turn to answer.
struct GamePosition
{
    Configuration spoiler;
    Configuration duplicator;
    std::optional<std::pair<std::string, TransitionId>> pending;
};

/// Outcome of bounded game solving. A Spoiler win is a proof that the
/// duplicating VASS does not simulate the spoiling one; the absence of a win
/// within the bound proves nothing about longer plays.
struct GameVerdict
{
    bool spoiler_wins = false;
    /// Spoiler win: the least number of rounds in which Spoiler forces
    /// Duplicator to be stuck. Otherwise: the searched depth.
    std::size_t depth = 0;
    /// Letters Spoiler plays on the winning line (length == depth).
    Word witness;

    friend bool operator==(const GameVerdict&, const GameVerdict&) = default;
};

/// Decides whether Spoiler, playing in `spoiler_side` from its initial
/// configuration, can force Duplicator, answering in `duplicator_side` with a
/// transition over the same letter, into a position with no answer within
/// `depth` rounds. Spoiler loses a play as soon as he has no enabled move.
///
/// Witness: the enumeration-least word of the minimal length that Spoiler
/// can read while no Duplicator run follows it, when such a word exists
/// (always the case when Duplicator is history-deterministic); otherwise the
/// principal line of the game tree, with Spoiler taking the least winning
/// move and Duplicator the answer that survives longest.
GameVerdict simulates_bounded(const Vass& duplicator_side, const Vass& spoiler_side, std::size_t depth,
                              const SearchOptions& options = {});

/// (simulates_bounded(a, b, depth), simulates_bounded(b, a, depth)).
std::pair<GameVerdict, GameVerdict> two_sided_bounded(const Vass& a, const Vass& b, std::size_t depth,
                                                      const SearchOptions& options = {});

struct LemmaReport
{
    bool consistent = true;
    std::vector<std::string> issues;
    /// first: a simulates b (Spoiler in b); second: b simulates a.
    std::pair<GameVerdict, GameVerdict> games;
    EqVerdict languages;
};

/// Cross-checks bounded game verdicts against bounded trace comparison for
/// two history-deterministic VASSs: every Spoiler witness must be a word of
/// the spoiling side missing from the other, and the shortest distinguishing
/// word must give Spoiler a win in exactly that many rounds. Throws
/// PreconditionFailed unless both resolvers pass check_history_det_bounded
/// at `maxlen`.
LemmaReport lemma_consistency(const Vass& a, const Vass& b, const Resolver& ra, const Resolver& rb,
                              std::size_t depth, std::size_t maxlen, const SearchOptions& options = {});

} // namespace vasseq
