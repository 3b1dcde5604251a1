#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vasseq/twocm.hpp"
#include "vasseq/vass.hpp"

namespace vasseq
{

/// Which words a VASS accepts: every readable word (trace) or words whose
/// run can end covering a final configuration (cover).
enum class Semantics
{
    Trace,
    Cover,
};

struct EqVerdict
{
    bool equal = true;
    /// The bound the comparison ran to.
    std::size_t checked_up_to = 0;
    /// Shortest, then enumeration-least, word accepted by exactly one input.
    Word word;
    /// The distinguishing word belongs to the first input's language.
    bool in_first = false;

    friend bool operator==(const EqVerdict&, const EqVerdict&) = default;
};

struct ContainmentVerdict
{
    bool contained = true;
    std::size_t checked_up_to = 0;
    /// Enumeration-least word accepted by the first input but not the second.
    Word witness;

    friend bool operator==(const ContainmentVerdict&, const ContainmentVerdict&) = default;
};

/// Enumeration order for a pair of VASSs: the first alphabet, then the
/// letters only the second one has, in its order.
std::vector<std::string> joint_alphabet(const Vass& a, const Vass& b);

/// Compares languages up to length `maxlen` by a breadth-first search over
/// pairs of antichains, one per input. Prefixes reaching the same pair are
/// merged. EqualUpTo says nothing about longer words.
EqVerdict equal_bounded(const Vass& a, const Vass& b, std::size_t maxlen, Semantics semantics,
                        const SearchOptions& options = {});

EqVerdict trace_equal_bounded(const Vass& a, const Vass& b, std::size_t maxlen, const SearchOptions& options = {});
EqVerdict cover_equal_bounded(const Vass& a, const Vass& b, std::size_t maxlen, const SearchOptions& options = {});

ContainmentVerdict containment_bounded(const Vass& a, const Vass& b, std::size_t maxlen,
                                       Semantics semantics = Semantics::Trace, const SearchOptions& options = {});

enum class HarnessStatus
{
    Passed,
    Failed,
    Inconclusive,
};

std::string to_string(HarnessStatus status);

struct HarnessCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremReport
{
    HarnessStatus status = HarnessStatus::Passed;
    std::vector<HarnessCheck> checks;
    std::vector<std::string> notes;
    bool halted = false;
    std::optional<Word> halting_word;
    bool final_control_reachable = true;
    EqVerdict equivalence;
};

/// End-to-end pipeline on one machine: builds A and B, checks determinism of
/// A, history-determinism of B (via the cheated-zero-test resolver) up to
/// `maxlen`, and then relates halting to the bounded trace comparison.
/// Status is Inconclusive when the machine neither halts within `fuel` nor
/// has a final state unreachable in its control graph.
TheoremReport theorem_harness(const CounterMachine& m, std::size_t fuel, std::size_t maxlen,
                              const SearchOptions& options = {});

} // namespace vasseq
