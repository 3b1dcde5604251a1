#include "vasseq/antichain.hpp"

#include <algorithm>

namespace vasseq
{

bool Antichain::insert(Configuration c)
{
    for (const auto& e : elems_)
        if (e.state == c.state && dominates(e.counters, c.counters))
            return false;

    std::erase_if(elems_, [&](const Configuration& e) {
        return e.state == c.state && dominates(c.counters, e.counters);
    });
    auto pos = std::lower_bound(elems_.begin(), elems_.end(), c);
    elems_.insert(pos, std::move(c));
    return true;
}

bool Antichain::any_accepting(const Vass& v) const
{
    return std::any_of(elems_.begin(), elems_.end(), [&](const Configuration& c) { return is_accepting(v, c); });
}

std::size_t AntichainHash::operator()(const Antichain& a) const noexcept
{
    ConfigurationHash h;
    std::size_t seed = a.size();
    for (const auto& c : a.elements())
        seed ^= h(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
}

Antichain post(const Vass& v, const Antichain& from, LetterId letter)
{
    Antichain out;
    for (const auto& c : from.elements()) {
        for (TransitionId id : v.outgoing(c.state, letter)) {
            const Transition& t = v.transition(id);
            if (is_enabled(t, c))
                out.insert(fire(c, t));
        }
    }
    return out;
}

} // namespace vasseq
