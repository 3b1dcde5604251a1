#pragma once

// Brute-force reference semantics: exhaustive run enumeration with no
// antichain pruning and no memoization. Kept independent of the library's
// search code; only firing and acceptance of single configurations are shared.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "vasseq/vass.hpp"

namespace vasseq::oracle
{

// Every run of length <= maxlen from `start`, visited depth-first.
inline void for_each_run(const Vass& v, const Configuration& start, std::size_t maxlen,
                         const std::function<void(const std::vector<TransitionId>&, const Configuration&)>& visit)
{
    std::vector<TransitionId> steps;
    std::function<void(const Configuration&)> go = [&](const Configuration& c) {
        visit(steps, c);
        if (steps.size() == maxlen)
            return;
        for (TransitionId id = 0; id < v.transitions().size(); ++id) {
            const auto& t = v.transition(id);
            if (t.source != c.state)
                continue;
            Configuration next = c;
            bool ok = true;
            for (std::size_t i = 0; i < next.counters.size(); ++i) {
                next.counters[i] += t.effect[i];
                ok = ok && next.counters[i] >= 0;
            }
            if (!ok)
                continue;
            next.state = t.target;
            steps.push_back(id);
            go(next);
            steps.pop_back();
        }
    };
    go(start);
}

inline Word letters_of(const Vass& v, const std::vector<TransitionId>& steps)
{
    Word w;
    for (auto id : steps)
        w.push_back(v.letter_name(v.transition(id).letter));
    return w;
}

// Length-lex sorted set of words.
struct WordOrder
{
    std::vector<std::string> alphabet;
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == b[i])
                continue;
            auto ra = std::find(alphabet.begin(), alphabet.end(), a[i]) - alphabet.begin();
            auto rb = std::find(alphabet.begin(), alphabet.end(), b[i]) - alphabet.begin();
            return ra != rb ? ra < rb : a[i] < b[i];
        }
        return false;
    }
};

using WordSet = std::set<Word, WordOrder>;

inline WordSet words_from(const Vass& v, const Configuration& start, std::size_t maxlen, bool cover,
                          const std::vector<std::string>& order)
{
    WordSet out(WordOrder{order});
    for_each_run(v, start, maxlen, [&](const std::vector<TransitionId>& steps, const Configuration& end) {
        bool accept = true;
        if (cover) {
            accept = false;
            for (const auto& f : v.finals()) {
                bool ge = f.state == end.state;
                for (std::size_t i = 0; ge && i < f.counters.size(); ++i)
                    ge = end.counters[i] >= f.counters[i];
                accept = accept || ge;
            }
        }
        if (accept)
            out.insert(letters_of(v, steps));
    });
    return out;
}

inline WordSet trace_words(const Vass& v, std::size_t maxlen) { return words_from(v, v.initial(), maxlen, false, v.alphabet()); }
inline WordSet cover_words(const Vass& v, std::size_t maxlen) { return words_from(v, v.initial(), maxlen, true, v.alphabet()); }

inline bool reads(const Vass& v, const Configuration& start, const Word& w)
{
    bool found = false;
    for_each_run(v, start, w.size(), [&](const std::vector<TransitionId>& steps, const Configuration&) {
        if (!found && steps.size() == w.size() && letters_of(v, steps) == w)
            found = true;
    });
    return found;
}

struct Difference
{
    Word word;
    bool in_first;
};

// Least word (length-lex over `order`) in exactly one of the two sets.
inline std::optional<Difference> least_difference(const WordSet& a, const WordSet& b, const std::vector<std::string>& order)
{
    WordSet diff(WordOrder{order});
    for (const auto& w : a)
        if (!b.contains(w))
            diff.insert(w);
    for (const auto& w : b)
        if (!a.contains(w))
            diff.insert(w);
    if (diff.empty())
        return std::nullopt;
    const Word& w = *diff.begin();
    return Difference{w, a.contains(w)};
}

// Plain minimax for the simulation game: can Spoiler (in `sp`, at `s`) force
// Duplicator (in `dup`, at `d`) to be stuck within `k` rounds? No memo, no pruning.
inline bool spoiler_wins_within(const Vass& dup, const Vass& sp, const Configuration& s, const Configuration& d,
                                std::size_t k)
{
    if (k == 0)
        return false;
    auto step = [](const Configuration& c, const Transition& t) -> std::optional<Configuration> {
        if (t.source != c.state)
            return std::nullopt;
        Configuration next{t.target, c.counters};
        for (std::size_t i = 0; i < next.counters.size(); ++i) {
            next.counters[i] += t.effect[i];
            if (next.counters[i] < 0)
                return std::nullopt;
        }
        return next;
    };
    for (const auto& t : sp.transitions()) {
        auto s2 = step(s, t);
        if (!s2)
            continue;
        const auto& letter = sp.letter_name(t.letter);
        bool all_lose = true;
        for (const auto& r : dup.transitions()) {
            if (dup.letter_name(r.letter) != letter)
                continue;
            auto d2 = step(d, r);
            if (!d2)
                continue;
            if (!spoiler_wins_within(dup, sp, *s2, *d2, k - 1)) {
                all_lose = false;
                break;
            }
        }
        if (all_lose)
            return true;
    }
    return false;
}

// Least number of rounds <= depth in which Spoiler wins, if any.
inline std::optional<std::size_t> spoiler_win_depth(const Vass& dup, const Vass& sp, std::size_t depth)
{
    for (std::size_t k = 1; k <= depth; ++k)
        if (spoiler_wins_within(dup, sp, sp.initial(), dup.initial(), k))
            return k;
    return std::nullopt;
}

} // namespace vasseq::oracle
