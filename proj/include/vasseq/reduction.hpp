#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vasseq/twocm.hpp"
#include "vasseq/vass.hpp"

namespace vasseq
{

/// Where a state of A or B comes from.
///
/// Naming scheme of the constructed VASSs:
///   N: machine states keep their names, the split state of a zero test
///      q -z_i-> p is "q~p";
///   A: "<n>@A" for every state n of N, plus "h@A";
///   B: "<n>@B" (copy of N), "<a>@B" for every state a of A (so
///      "<n>@A@B" and "h@A@B"), and "<q>!<i>@B" for the gadget of the zero
///      test at q on counter i.
enum class TagKind
{
    NCopy,      ///< copy of a machine state on the N side of B
    ACopy,      ///< copy of a machine state inside A (or inside B's copy of A)
    SplitState, ///< split state q_t of a zero test, on either side
    Gadget,     ///< intermediate state of a cheated zero test in B
    HaltState,  ///< the target of the h transition
};

std::string_view to_string(TagKind kind) noexcept;

struct StateTag
{
    TagKind kind;
    /// State of N this one copies (the zero-tested state q for a gadget, "h" for halt states).
    std::string origin;
    /// False for states of A; for states of B, true on the N side.
    bool n_side = false;
    /// The state belongs to B (as opposed to A).
    bool in_b = false;

    friend bool operator==(const StateTag&, const StateTag&) = default;
};

/// A zero test q -z_i-> p of the machine, after splitting through q_t in N.
struct ZeroTestTriple
{
    std::string q;
    std::string split;
    std::string p;
    /// 0 or 1.
    std::size_t counter = 0;

    friend bool operator==(const ZeroTestTriple&, const ZeroTestTriple&) = default;
};

struct ReductionOutput
{
    Vass n;
    Vass a;
    Vass b;
    /// Every state of a and of b, with its provenance.
    std::map<std::string, StateTag> tags;
    std::vector<ZeroTestTriple> triples;
};

inline constexpr std::string_view halt_letter = "h";

/// Auxiliary VASS mirroring the machine: inc/dec moves copied with their
/// effect, each zero test split in two effect-free moves through a fresh state.
Vass build_n(const CounterMachine& m);

/// N plus a halt state reached from the final state over h. Deterministic.
Vass build_a(const CounterMachine& m);

/// N, A and the history-deterministic B (disjoint union of N and A joined by
/// one cheated zero-test gadget per zero test).
ReductionOutput build_b(const CounterMachine& m);

/// Recovers the zero tests of the machine from a VASS produced by build_n.
/// Throws MalformedN when a split state does not lead to exactly one state.
std::vector<ZeroTestTriple> zero_test_triples(const Vass& n);

/// Name of the B-side copy of N state `q` ("q@B"), etc.
std::string a_name(std::string_view n_state);
std::string b_n_name(std::string_view n_state);
std::string b_a_name(std::string_view n_state);
std::string gadget_name(std::string_view q, std::size_t counter);
std::string split_name(std::string_view q, std::string_view p);

} // namespace vasseq
