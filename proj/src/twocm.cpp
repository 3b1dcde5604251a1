#include "vasseq/twocm.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vasseq
{

std::string_view to_string(Op op) noexcept
{
    switch (op) {
    case Op::inc_1: return "inc_1";
    case Op::inc_2: return "inc_2";
    case Op::dec_1: return "dec_1";
    case Op::dec_2: return "dec_2";
    case Op::z_1: return "z_1";
    case Op::z_2: return "z_2";
    }
    return "?";
}

std::optional<Op> parse_op(std::string_view text) noexcept
{
    for (Op op : all_ops)
        if (to_string(op) == text)
            return op;
    return std::nullopt;
}

std::size_t counter_of(Op op) noexcept
{
    return (op == Op::inc_1 || op == Op::dec_1 || op == Op::z_1) ? 0 : 1;
}

bool is_inc(Op op) noexcept { return op == Op::inc_1 || op == Op::inc_2; }
bool is_dec(Op op) noexcept { return op == Op::dec_1 || op == Op::dec_2; }
bool is_zero_test(Op op) noexcept { return op == Op::z_1 || op == Op::z_2; }

CounterMachine CounterMachine::make(std::string initial, std::string final, std::vector<CmTransition> transitions)
{
    CounterMachine m;
    m.initial = std::move(initial);
    m.final = std::move(final);
    m.transitions = std::move(transitions);
    auto add = [&](const std::string& q) {
        if (std::find(m.states.begin(), m.states.end(), q) == m.states.end())
            m.states.push_back(q);
    };
    add(m.initial);
    add(m.final);
    for (const auto& t : m.transitions) {
        add(t.source);
        add(t.target);
    }
    return m;
}

namespace
{

// Characters the reduction uses to derive state names, plus the comment and
// separator characters of the text format.
bool valid_state_name(const std::string& name)
{
    if (name.empty() || name == "h")
        return false;
    return std::none_of(name.begin(), name.end(), [](char ch) {
        return ch == '@' || ch == '~' || ch == '!' || ch == '#' || ch == '"' ||
               static_cast<unsigned char>(ch) <= ' ';
    });
}

} // namespace

std::vector<Violation> validate(const CounterMachine& m)
{
    std::vector<Violation> out;
    std::set<std::string> known(m.states.begin(), m.states.end());
    if (known.size() != m.states.size())
        out.push_back({"", "duplicate state in the state list", std::nullopt});

    for (const auto& q : m.states)
        if (!valid_state_name(q))
            out.push_back({q, "state name is empty, reserved (\"h\") or uses one of @ ~ ! # \" or whitespace",
                           std::nullopt});
    if (!known.contains(m.initial))
        out.push_back({m.initial, "initial state is not a state of the machine", std::nullopt});
    if (!known.contains(m.final))
        out.push_back({m.final, "final state is not a state of the machine", std::nullopt});

    std::map<std::string, std::vector<std::size_t>> leaving;
    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        if (!known.contains(t.source) || !known.contains(t.target))
            out.push_back({t.source, "transition endpoint is not a state of the machine", i});
        leaving[t.source].push_back(i);
    }

    for (const auto& q : m.states) {
        const auto& ts = leaving[q];
        if (q == m.final) {
            for (auto i : ts)
                out.push_back({q, "the final state has an outgoing transition", i});
            continue;
        }
        if (ts.size() == 1) {
            if (!is_inc(m.transitions[ts[0]].op))
                out.push_back({q, "a single outgoing transition must be inc_1 or inc_2", ts[0]});
            continue;
        }
        if (ts.size() == 2) {
            Op a = m.transitions[ts[0]].op, b = m.transitions[ts[1]].op;
            if (is_zero_test(a))
                std::swap(a, b);
            if (!is_dec(a) || !is_zero_test(b))
                out.push_back({q, "two outgoing transitions must be one dec_i and one z_i", std::nullopt});
            else if (counter_of(a) != counter_of(b))
                out.push_back({q, "dec_i and z_i must test the same counter", std::nullopt});
            continue;
        }
        out.push_back({q,
                       "a non-final state needs exactly one inc_i transition or exactly a dec_i/z_i pair (found " +
                           std::to_string(ts.size()) + " transitions)",
                       std::nullopt});
    }
    return out;
}

void require_valid(const CounterMachine& m)
{
    auto violations = validate(m);
    if (violations.empty())
        return;
    std::vector<std::string> problems;
    for (const auto& v : violations)
        problems.push_back((v.state.empty() ? std::string() : "state '" + v.state + "': ") + v.rule);
    throw InvalidMachine(std::move(problems));
}

InvalidMachine::InvalidMachine(std::vector<std::string> problems)
    : Error([&] {
          std::string msg = "invalid two-counter machine";
          for (const auto& p : problems)
              msg += "\n  " + p;
          return msg;
      }()),
      problems_(std::move(problems))
{
}

std::optional<CmStep> step(const CounterMachine& m, const CmConfig& c)
{
    if (c.state == m.final)
        return std::nullopt;
    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        if (t.source != c.state)
            continue;
        const auto k = counter_of(t.op);
        CmConfig next{t.target, c.counters};
        if (is_inc(t.op)) {
            ++next.counters[k];
            return CmStep{std::move(next), t.op, i};
        }
        if (is_dec(t.op) && c.counters[k] > 0) {
            --next.counters[k];
            return CmStep{std::move(next), t.op, i};
        }
        if (is_zero_test(t.op) && c.counters[k] == 0)
            return CmStep{std::move(next), t.op, i};
    }
    // Only reachable for machines that fail validation.
    throw InvalidMachine({"state '" + c.state + "' has no applicable transition"});
}

CmRunResult run_bounded(const CounterMachine& m, std::size_t fuel)
{
    CmRunResult result;
    result.last = CmConfig{m.initial, {0, 0}};
    while (true) {
        if (result.last.state == m.final) {
            result.halted = true;
            return result;
        }
        if (result.steps == fuel)
            return result;
        auto s = step(m, result.last);
        result.ops.push_back(s->op);
        result.last = std::move(s->next);
        ++result.steps;
    }
}

std::optional<Word> halting_word(const CounterMachine& m, std::size_t fuel)
{
    auto run = run_bounded(m, fuel);
    if (!run.halted)
        return std::nullopt;
    Word w;
    for (Op op : run.ops) {
        w.emplace_back(to_string(op));
        if (is_zero_test(op))
            w.emplace_back(to_string(op));
    }
    w.emplace_back("h");
    return w;
}

bool final_reachable_in_control_graph(const CounterMachine& m)
{
    std::set<std::string> seen{m.initial};
    std::vector<std::string> stack{m.initial};
    while (!stack.empty()) {
        auto q = std::move(stack.back());
        stack.pop_back();
        if (q == m.final)
            return true;
        for (const auto& t : m.transitions)
            if (t.source == q && seen.insert(t.target).second)
                stack.push_back(t.target);
    }
    return false;
}

} // namespace vasseq
