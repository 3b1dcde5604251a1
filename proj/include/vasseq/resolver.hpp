#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vasseq/reduction.hpp"
#include "vasseq/vass.hpp"

namespace vasseq
{

/// The run so far: each configuration paired with the transition taken from
/// it, then the current configuration.
struct History
{
    std::vector<std::pair<Configuration, TransitionId>> steps;
    Configuration current;
};

/// Chooses a transition over `letter` for the current configuration of the
/// history, or nothing. Any transition returned must be over `letter` and
/// enabled in `history.current`; resolver_run enforces this.
using Resolver = std::function<std::optional<TransitionId>(const History& history, LetterId letter)>;

/// Resolver for B: at an N-side state offering both a split-state move and a
/// cheated zero test over z_i, take the cheated (decrementing) one whenever it
/// is enabled; otherwise the unique enabled transition. Ignores history.
Resolver jancar_resolver(const ReductionOutput& r);

/// Picks the first enabled transition over the letter (insertion order).
/// On a deterministic VASS this is the only possible resolver.
Resolver first_enabled_resolver(const Vass& v);

struct ResolverRun
{
    bool complete = false;
    Run run;
    /// 1-based position of the first letter the resolver could not follow; 0 when complete.
    std::size_t failure_at = 0;
};

/// Follows `r` over `w` from the initial configuration of `v`. Throws
/// InvariantViolation if the resolver returns a transition that is over the
/// wrong letter or not enabled.
ResolverRun resolver_run(const Vass& v, const Resolver& r, const Word& w);

struct HistoryDeterminismVerdict
{
    bool ok = true;
    std::size_t checked_up_to = 0;
    Word counterexample;
};

/// For every word of length <= maxlen in the language of `v` (acceptance by
/// the VASS's own final set), the run built by `r` must exist and accept.
/// Returns the enumeration-least failing word otherwise.
HistoryDeterminismVerdict check_history_det_bounded(const Vass& v, const Resolver& r, std::size_t maxlen,
                                                    const SearchOptions& options = {});

} // namespace vasseq
