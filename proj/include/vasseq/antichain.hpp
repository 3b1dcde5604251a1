#pragma once

#include <cstddef>
#include <vector>

#include "vasseq/vass.hpp"

namespace vasseq
{

/// A set of configurations keeping, per state, only the componentwise-maximal
/// counter vectors. Elements are kept sorted, so two antichains holding the
/// same configurations compare (and hash) equal.
///
/// Sound for readability and coverability: both are upward closed in the
/// counters, so a dominated configuration never reads a word that its
/// dominator cannot.
class Antichain
{
public:
    Antichain() = default;
    explicit Antichain(Configuration c) { insert(std::move(c)); }

    /// Inserts `c` unless an element with the same state dominates it.
    /// Returns true when `c` was added (dominated elements are then dropped).
    bool insert(Configuration c);

    bool empty() const noexcept { return elems_.empty(); }
    std::size_t size() const noexcept { return elems_.size(); }
    const std::vector<Configuration>& elements() const noexcept { return elems_; }

    /// Some element covers a final configuration of `v`.
    bool any_accepting(const Vass& v) const;

    friend bool operator==(const Antichain&, const Antichain&) = default;

private:
    std::vector<Configuration> elems_;
};

struct AntichainHash
{
    std::size_t operator()(const Antichain& a) const noexcept;
};

/// All configurations reachable from `from` by one transition over `letter`, pruned.
Antichain post(const Vass& v, const Antichain& from, LetterId letter);

} // namespace vasseq
