#include "vasseq/games.hpp"

#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "vasseq/antichain.hpp"

namespace vasseq
{

namespace
{

constexpr std::size_t no_win = std::numeric_limits<std::size_t>::max();

struct PositionKey
{
    Configuration spoiler;
    Configuration duplicator;

    friend bool operator==(const PositionKey&, const PositionKey&) = default;
};

struct PositionKeyHash
{
    std::size_t operator()(const PositionKey& k) const noexcept
    {
        ConfigurationHash h;
        return h(k.spoiler) * 1000003u ^ h(k.duplicator);
    }
};

// Bounded backward induction over (Spoiler, Duplicator) configuration pairs.
class GameSolver
{
public:
    GameSolver(const Vass& duplicator, const Vass& spoiler, Budget& budget)
        : dup_(duplicator), sp_(spoiler), budget_(budget)
    {
        for (const auto& letter : spoiler.alphabet())
            letter_map_.push_back(duplicator.letter_id(letter));
    }

    // Duplicator's answers to `letter` (a spoiler letter id) from `d`, keeping
    // only the maximal ones: more counters never hurt Duplicator.
    Antichain answers(const Configuration& d, LetterId letter) const
    {
        const auto mapped = letter_map_[letter];
        if (!mapped)
            return {};
        return post(dup_, Antichain(d), *mapped);
    }

    // Least number of rounds <= k in which Spoiler forces a win from (s, d),
    // or no_win.
    std::size_t solve(const Configuration& s, const Configuration& d, std::size_t k)
    {
        if (k == 0)
            return no_win;
        PositionKey key{s, d};
        if (auto it = memo_.find(key); it != memo_.end()) {
            const auto& e = it->second;
            if (e.win != no_win)
                return e.win <= k ? e.win : no_win;
            if (e.no_win_upto >= k)
                return no_win;
        }
        budget_.charge();

        std::size_t best = no_win;
        for (TransitionId id : sp_.outgoing(s.state)) {
            const auto& t = sp_.transition(id);
            if (!is_enabled(t, s))
                continue;
            const Antichain replies = answers(d, t.letter);
            budget_.observe_antichain(replies.size());
            if (replies.empty()) {
                best = 1;
                break;
            }
            const std::size_t cap = std::min(k, best == no_win ? k : best - 1);
            if (cap <= 1)
                continue;
            const Configuration next = fire(s, t);
            std::size_t worst = 0;
            for (const auto& r : replies.elements()) {
                const auto v = solve(next, r, cap - 1);
                if (v == no_win) {
                    worst = no_win;
                    break;
                }
                worst = std::max(worst, v);
            }
            if (worst != no_win)
                best = worst + 1;
        }

        auto& e = memo_[key];
        if (best != no_win)
            e.win = best;
        else
            e.no_win_upto = std::max(e.no_win_upto, k);
        return best;
    }

    const Vass& spoiler() const { return sp_; }
    const Vass& duplicator() const { return dup_; }
    std::optional<LetterId> dup_letter(LetterId spoiler_letter) const { return letter_map_[spoiler_letter]; }

private:
    struct Entry
    {
        std::size_t win = no_win;
        std::size_t no_win_upto = 0;
    };

    const Vass& dup_;
    const Vass& sp_;
    Budget& budget_;
    std::vector<std::optional<LetterId>> letter_map_;
    std::unordered_map<PositionKey, Entry, PositionKeyHash> memo_;
};

struct SetsKey
{
    Antichain spoiler;
    Antichain duplicator;
    std::size_t remaining;

    friend bool operator==(const SetsKey&, const SetsKey&) = default;
};

struct SetsKeyHash
{
    std::size_t operator()(const SetsKey& k) const noexcept
    {
        AntichainHash h;
        return (h(k.spoiler) * 31 + h(k.duplicator)) * 31 + k.remaining;
    }
};

// Enumeration-least word of length exactly `remaining` that Spoiler can read
// and after which (and only after which) Duplicator has no run left.
class BlindWitness
{
public:
    BlindWitness(const GameSolver& solver, Budget& budget) : solver_(solver), budget_(budget) {}

    bool find(const Antichain& s, const Antichain& d, std::size_t remaining, std::vector<LetterId>& out)
    {
        if (remaining == 0)
            return d.empty();
        if (d.empty())
            return false;
        SetsKey key{s, d, remaining};
        if (failed_.contains(key))
            return false;
        budget_.charge();
        const auto& sp = solver_.spoiler();
        for (LetterId a = 0; a < sp.alphabet().size(); ++a) {
            Antichain s_next = post(sp, s, a);
            if (s_next.empty())
                continue;
            Antichain d_next;
            if (auto mapped = solver_.dup_letter(a))
                d_next = post(solver_.duplicator(), d, *mapped);
            out.push_back(a);
            if (find(s_next, d_next, remaining - 1, out))
                return true;
            out.pop_back();
        }
        failed_.insert(std::move(key));
        return false;
    }

private:
    const GameSolver& solver_;
    Budget& budget_;
    std::unordered_set<SetsKey, SetsKeyHash> failed_;
};

// Spoiler's least winning move at each step, Duplicator's longest-surviving answer.
Word principal_line(GameSolver& solver, Configuration s, Configuration d, std::size_t rounds)
{
    const auto& sp = solver.spoiler();
    Word line;
    while (rounds > 0) {
        bool moved = false;
        for (TransitionId id : sp.outgoing(s.state)) {
            const auto& t = sp.transition(id);
            if (!is_enabled(t, s))
                continue;
            const Antichain replies = solver.answers(d, t.letter);
            const Configuration next = fire(s, t);
            if (replies.empty()) {
                line.push_back(sp.letter_name(t.letter));
                return line;
            }
            std::size_t worst = 0;
            const Configuration* longest = nullptr;
            for (const auto& r : replies.elements()) {
                const auto v = solver.solve(next, r, rounds - 1);
                if (v == no_win) {
                    longest = nullptr;
                    break;
                }
                if (longest == nullptr || v > worst) {
                    worst = v;
                    longest = &r;
                }
            }
            if (longest == nullptr || worst + 1 > rounds)
                continue;
            line.push_back(sp.letter_name(t.letter));
            s = next;
            d = *longest;
            rounds = worst;
            moved = true;
            break;
        }
        if (!moved)
            break;
    }
    return line;
}

} // namespace

GameVerdict simulates_bounded(const Vass& duplicator_side, const Vass& spoiler_side, std::size_t depth,
                              const SearchOptions& options)
{
    Budget budget(options);
    GameSolver solver(duplicator_side, spoiler_side, budget);
    const auto rounds = solver.solve(spoiler_side.initial(), duplicator_side.initial(), depth);
    if (rounds == no_win)
        return GameVerdict{false, depth, {}};

    GameVerdict verdict{true, rounds, {}};
    BlindWitness blind(solver, budget);
    std::vector<LetterId> letters;
    if (blind.find(Antichain(spoiler_side.initial()), Antichain(duplicator_side.initial()), rounds, letters)) {
        for (auto a : letters)
            verdict.witness.push_back(spoiler_side.letter_name(a));
    } else {
        verdict.witness = principal_line(solver, spoiler_side.initial(), duplicator_side.initial(), rounds);
    }
    return verdict;
}

std::pair<GameVerdict, GameVerdict> two_sided_bounded(const Vass& a, const Vass& b, std::size_t depth,
                                                      const SearchOptions& options)
{
    return {simulates_bounded(a, b, depth, options), simulates_bounded(b, a, depth, options)};
}

LemmaReport lemma_consistency(const Vass& a, const Vass& b, const Resolver& ra, const Resolver& rb,
                              std::size_t depth, std::size_t maxlen, const SearchOptions& options)
{
    const auto hd_a = check_history_det_bounded(a, ra, maxlen, options);
    if (!hd_a.ok)
        throw PreconditionFailed("first resolver fails on " + to_string(hd_a.counterexample));
    const auto hd_b = check_history_det_bounded(b, rb, maxlen, options);
    if (!hd_b.ok)
        throw PreconditionFailed("second resolver fails on " + to_string(hd_b.counterexample));

    LemmaReport report;
    report.games = two_sided_bounded(a, b, depth, options);
    report.languages = trace_equal_bounded(a, b, maxlen, options);
    auto issue = [&](std::string text) {
        report.consistent = false;
        report.issues.push_back(std::move(text));
    };

    struct Side
    {
        const GameVerdict& game;
        const Vass& spoiler;
        const Vass& duplicator;
        const char* name;
    };
    const Side sides[] = {
        {report.games.first, b, a, "first simulates second"},
        {report.games.second, a, b, "second simulates first"},
    };
    const auto& lang = report.languages;
    for (const auto& side : sides) {
        const auto& g = side.game;
        if (!g.spoiler_wins)
            continue;
        if (!reads(side.spoiler, side.spoiler.initial(), g.witness) ||
            reads(side.duplicator, side.duplicator.initial(), g.witness))
            issue(std::string(side.name) + ": Spoiler witness " + to_string(g.witness) +
                  " is not a trace-language difference");
        if (lang.equal && g.depth <= maxlen)
            issue(std::string(side.name) + ": Spoiler wins in " + std::to_string(g.depth) +
                  " rounds but the languages agree up to length " + std::to_string(maxlen));
        if (!lang.equal && g.depth < lang.word.size())
            issue(std::string(side.name) + ": Spoiler wins in " + std::to_string(g.depth) +
                  " rounds, before the shortest difference " + to_string(lang.word));
    }

    if (!lang.equal) {
        const Vass& spoiler = lang.in_first ? a : b;
        const Vass& duplicator = lang.in_first ? b : a;
        const auto len = lang.word.size();
        const auto g = simulates_bounded(duplicator, spoiler, len, options);
        if (!g.spoiler_wins || g.depth != len)
            issue("shortest distinguishing word " + to_string(lang.word) + " does not give Spoiler a win in " +
                  std::to_string(len) + " rounds");
        const auto& at_depth = lang.in_first ? report.games.second : report.games.first;
        if (depth >= len && (!at_depth.spoiler_wins || at_depth.depth != len))
            issue("game at depth " + std::to_string(depth) + " misses the Spoiler win in " + std::to_string(len) +
                  " rounds");
    }
    return report;
}

} // namespace vasseq
