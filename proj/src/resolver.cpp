#include "vasseq/resolver.hpp"

#include <memory>

#include "vasseq/antichain.hpp"

namespace vasseq
{

Resolver jancar_resolver(const ReductionOutput& r)
{
    auto b = std::make_shared<const Vass>(r.b);
    auto gadget = std::make_shared<std::vector<bool>>(b->states().size(), false);
    for (const auto& [name, tag] : r.tags)
        if (tag.kind == TagKind::Gadget)
            if (auto id = b->state_id(name))
                (*gadget)[*id] = true;

    return [b, gadget](const History& history, LetterId letter) -> std::optional<TransitionId> {
        const auto choices = enabled(*b, history.current, letter);
        for (auto id : choices)
            if ((*gadget)[b->transition(id).target])
                return id;
        if (choices.empty())
            return std::nullopt;
        return choices.front();
    };
}

Resolver first_enabled_resolver(const Vass& v)
{
    auto vass = std::make_shared<const Vass>(v);
    return [vass](const History& history, LetterId letter) -> std::optional<TransitionId> {
        const auto choices = enabled(*vass, history.current, letter);
        if (choices.empty())
            return std::nullopt;
        return choices.front();
    };
}

namespace
{

// Asks `r` for the next move and checks the resolver contract.
std::optional<TransitionId> consult(const Vass& v, const Resolver& r, const History& h, LetterId letter)
{
    auto choice = r(h, letter);
    if (!choice)
        return std::nullopt;
    if (*choice >= v.transitions().size())
        throw InvariantViolation("resolver returned an unknown transition");
    const auto& t = v.transition(*choice);
    if (t.letter != letter)
        throw InvariantViolation("resolver returned a transition over the wrong letter");
    if (!is_enabled(t, h.current))
        throw InvariantViolation("resolver returned a transition not enabled in " + v.format(h.current));
    return choice;
}

void advance(const Vass& v, History& h, TransitionId id)
{
    Configuration next = fire(h.current, v.transition(id));
    h.steps.emplace_back(std::move(h.current), id);
    h.current = std::move(next);
}

} // namespace

ResolverRun resolver_run(const Vass& v, const Resolver& r, const Word& w)
{
    ResolverRun result;
    result.run.start = v.initial();
    History h{{}, v.initial()};
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto letter = v.letter_id(w[i]);
        std::optional<TransitionId> choice;
        if (letter)
            choice = consult(v, r, h, *letter);
        if (!choice) {
            result.failure_at = i + 1;
            return result;
        }
        result.run.steps.push_back(*choice);
        advance(v, h, *choice);
    }
    result.complete = true;
    return result;
}

HistoryDeterminismVerdict check_history_det_bounded(const Vass& v, const Resolver& r, std::size_t maxlen,
                                                    const SearchOptions& options)
{
    Budget budget(options);
    struct Node
    {
        std::vector<LetterId> word;
        Antichain readable;
        std::optional<History> followed; // empty once the resolver got stuck
    };

    auto failing = [&](const Node& node) {
        if (!node.readable.any_accepting(v))
            return false;
        return !node.followed || !is_accepting(v, node.followed->current);
    };
    auto to_word = [&](const std::vector<LetterId>& letters) {
        Word w;
        for (auto a : letters)
            w.push_back(v.letter_name(a));
        return w;
    };

    std::vector<Node> level;
    level.push_back(Node{{}, Antichain(v.initial()), History{{}, v.initial()}});
    budget.charge();
    for (std::size_t len = 0;; ++len) {
        for (const auto& node : level)
            if (failing(node))
                return HistoryDeterminismVerdict{false, maxlen, to_word(node.word)};
        if (len == maxlen)
            break;
        std::vector<Node> next;
        for (const auto& node : level) {
            for (LetterId a = 0; a < v.alphabet().size(); ++a) {
                Antichain succ = post(v, node.readable, a);
                if (succ.empty())
                    continue;
                budget.charge(succ.size());
                budget.observe_antichain(succ.size());
                std::optional<History> followed;
                if (node.followed) {
                    if (auto choice = consult(v, r, *node.followed, a)) {
                        followed = node.followed;
                        advance(v, *followed, *choice);
                    }
                }
                auto word = node.word;
                word.push_back(a);
                next.push_back(Node{std::move(word), std::move(succ), std::move(followed)});
            }
        }
        if (next.empty())
            break;
        level = std::move(next);
    }
    return HistoryDeterminismVerdict{true, maxlen, {}};
}

} // namespace vasseq
