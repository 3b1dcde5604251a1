#include "vasseq/equivalence.hpp"

#include <algorithm>
#include <unordered_set>

#include "vasseq/antichain.hpp"
#include "vasseq/reduction.hpp"
#include "vasseq/resolver.hpp"

namespace vasseq
{

std::vector<std::string> joint_alphabet(const Vass& a, const Vass& b)
{
    std::vector<std::string> out = a.alphabet();
    for (const auto& letter : b.alphabet())
        if (!a.letter_id(letter))
            out.push_back(letter);
    return out;
}

namespace
{

struct PairKey
{
    Antichain first;
    Antichain second;

    friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash
{
    std::size_t operator()(const PairKey& k) const noexcept
    {
        AntichainHash h;
        return h(k.first) * 31 + h(k.second);
    }
};

struct Hit
{
    Word word;
    bool in_first;
};

// Breadth-first over pairs of antichains. Returns the first prefix (in
// length-lex order) on which `hit(in_a, in_b)` holds.
template <typename IsHit>
std::optional<Hit> product_search(const Vass& a, const Vass& b, std::size_t maxlen, Semantics semantics,
                                  bool follow_second_alone, const SearchOptions& options, IsHit is_hit)
{
    Budget budget(options);
    const auto letters = joint_alphabet(a, b);
    std::vector<std::optional<LetterId>> in_a, in_b;
    for (const auto& l : letters) {
        in_a.push_back(a.letter_id(l));
        in_b.push_back(b.letter_id(l));
    }

    auto accepted = [&](const Vass& v, const Antichain& set) {
        return semantics == Semantics::Trace ? !set.empty() : set.any_accepting(v);
    };
    auto to_word = [&](const std::vector<std::size_t>& w) {
        Word out;
        for (auto i : w)
            out.push_back(letters[i]);
        return out;
    };

    struct Node
    {
        std::vector<std::size_t> word;
        PairKey sets;
    };
    std::unordered_set<PairKey, PairKeyHash> seen;
    std::vector<Node> level;
    level.push_back(Node{{}, PairKey{Antichain(a.initial()), Antichain(b.initial())}});
    seen.insert(level.front().sets);
    budget.charge(2);

    for (std::size_t len = 0;; ++len) {
        for (const auto& node : level) {
            const bool x = accepted(a, node.sets.first), y = accepted(b, node.sets.second);
            if (is_hit(x, y))
                return Hit{to_word(node.word), x};
        }
        if (len == maxlen)
            return std::nullopt;
        std::vector<Node> next;
        for (const auto& node : level) {
            for (std::size_t i = 0; i < letters.size(); ++i) {
                PairKey succ;
                if (in_a[i])
                    succ.first = post(a, node.sets.first, *in_a[i]);
                if (in_b[i])
                    succ.second = post(b, node.sets.second, *in_b[i]);
                if (succ.first.empty() && (succ.second.empty() || !follow_second_alone))
                    continue;
                budget.charge(succ.first.size() + succ.second.size());
                budget.observe_antichain(std::max(succ.first.size(), succ.second.size()));
                if (!seen.insert(succ).second)
                    continue;
                auto word = node.word;
                word.push_back(i);
                next.push_back(Node{std::move(word), std::move(succ)});
            }
        }
        if (next.empty())
            return std::nullopt;
        level = std::move(next);
    }
}

} // namespace

EqVerdict equal_bounded(const Vass& a, const Vass& b, std::size_t maxlen, Semantics semantics,
                        const SearchOptions& options)
{
    auto hit = product_search(a, b, maxlen, semantics, true, options, [](bool x, bool y) { return x != y; });
    if (!hit)
        return EqVerdict{true, maxlen, {}, false};
    return EqVerdict{false, maxlen, std::move(hit->word), hit->in_first};
}

EqVerdict trace_equal_bounded(const Vass& a, const Vass& b, std::size_t maxlen, const SearchOptions& options)
{
    return equal_bounded(a, b, maxlen, Semantics::Trace, options);
}

EqVerdict cover_equal_bounded(const Vass& a, const Vass& b, std::size_t maxlen, const SearchOptions& options)
{
    return equal_bounded(a, b, maxlen, Semantics::Cover, options);
}

ContainmentVerdict containment_bounded(const Vass& a, const Vass& b, std::size_t maxlen, Semantics semantics,
                                       const SearchOptions& options)
{
    auto hit = product_search(a, b, maxlen, semantics, false, options, [](bool x, bool y) { return x && !y; });
    if (!hit)
        return ContainmentVerdict{true, maxlen, {}};
    return ContainmentVerdict{false, maxlen, std::move(hit->word)};
}

std::string to_string(HarnessStatus status)
{
    switch (status) {
    case HarnessStatus::Passed: return "passed";
    case HarnessStatus::Failed: return "failed";
    case HarnessStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

TheoremReport theorem_harness(const CounterMachine& m, std::size_t fuel, std::size_t maxlen,
                              const SearchOptions& options)
{
    require_valid(m);
    TheoremReport report;
    const ReductionOutput r = build_b(m);
    auto check = [&](std::string name, bool passed, std::string detail = {}) {
        report.checks.push_back(HarnessCheck{std::move(name), passed, std::move(detail)});
    };

    check("A is deterministic", is_deterministic(r.a));

    const auto hd = check_history_det_bounded(r.b, jancar_resolver(r), maxlen, options);
    check("B is history-deterministic up to length " + std::to_string(maxlen), hd.ok,
          hd.ok ? std::string() : "resolver fails on " + to_string(hd.counterexample));

    const auto run = run_bounded(m, fuel);
    report.halted = run.halted;
    report.final_control_reachable = final_reachable_in_control_graph(m);
    report.equivalence = trace_equal_bounded(r.a, r.b, maxlen, options);
    const auto& eq = report.equivalence;

    bool certified = false;
    if (run.halted) {
        Word w = *halting_word(m, fuel);
        report.halting_word = w;
        check("halting word " + to_string(w) + " is readable in A", reads(r.a, r.a.initial(), w));
        check("halting word " + to_string(w) + " is not readable in B", !reads(r.b, r.b.initial(), w));
        if (w.size() <= maxlen) {
            const bool ok = !eq.equal && eq.word.size() <= w.size();
            check("bounded comparison distinguishes A and B within |w| = " + std::to_string(w.size()), ok,
                  eq.equal ? "no difference up to length " + std::to_string(maxlen)
                           : "distinguished by " + to_string(eq.word));
            certified = true;
        } else {
            report.notes.push_back("halting word has length " + std::to_string(w.size()) +
                                   ", beyond the comparison bound " + std::to_string(maxlen));
            certified = true;
        }
    } else if (!report.final_control_reachable) {
        check("no difference between A and B up to length " + std::to_string(maxlen), eq.equal,
              eq.equal ? std::string() : "distinguished by " + to_string(eq.word));
        certified = true;
    } else {
        report.notes.push_back("machine did not halt within " + std::to_string(fuel) +
                               " steps and its final state is reachable in the control graph");
    }

    const bool all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                        [](const HarnessCheck& c) { return c.passed; });
    if (!all_passed)
        report.status = HarnessStatus::Failed;
    else if (!certified)
        report.status = HarnessStatus::Inconclusive;
    else
        report.status = HarnessStatus::Passed;
    return report;
}

} // namespace vasseq
