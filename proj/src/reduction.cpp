#include "vasseq/reduction.hpp"

#include <set>

namespace vasseq
{

std::string_view to_string(TagKind kind) noexcept
{
    switch (kind) {
    case TagKind::NCopy: return "NCopy";
    case TagKind::ACopy: return "ACopy";
    case TagKind::SplitState: return "SplitState";
    case TagKind::Gadget: return "Gadget";
    case TagKind::HaltState: return "HaltState";
    }
    return "?";
}

std::string a_name(std::string_view n_state) { return std::string(n_state) + "@A"; }
std::string b_n_name(std::string_view n_state) { return std::string(n_state) + "@B"; }
std::string b_a_name(std::string_view n_state) { return std::string(n_state) + "@A@B"; }

std::string gadget_name(std::string_view q, std::size_t counter)
{
    return std::string(q) + "!" + std::to_string(counter + 1) + "@B";
}

std::string split_name(std::string_view q, std::string_view p)
{
    return std::string(q) + "~" + std::string(p);
}

namespace
{

Counters effect_of(Op op)
{
    Counters e{0, 0};
    if (is_inc(op))
        e[counter_of(op)] = 1;
    else if (is_dec(op))
        e[counter_of(op)] = -1;
    return e;
}

void add_machine_alphabet(VassBuilder& builder)
{
    for (Op op : all_ops)
        builder.add_letter(std::string(to_string(op)));
}

void add_trace_finals(VassBuilder& builder, const std::vector<std::string>& states)
{
    for (const auto& q : states)
        builder.add_final(q, {0, 0});
}

// Copies every transition of `src` into `builder`, renaming states.
template <typename Rename>
void copy_into(VassBuilder& builder, const Vass& src, Rename rename)
{
    for (const auto& q : src.states())
        builder.add_state(rename(q));
    for (const auto& t : src.transitions())
        builder.add_transition(rename(src.state_name(t.source)), src.letter_name(t.letter), t.effect,
                               rename(src.state_name(t.target)));
}

} // namespace

Vass build_n(const CounterMachine& m)
{
    require_valid(m);
    VassBuilder builder(2);
    add_machine_alphabet(builder);
    for (const auto& q : m.states)
        builder.add_state(q);
    std::vector<std::string> states = m.states;
    for (const auto& t : m.transitions) {
        const std::string letter(to_string(t.op));
        if (!is_zero_test(t.op)) {
            builder.add_transition(t.source, letter, effect_of(t.op), t.target);
            continue;
        }
        const auto split = split_name(t.source, t.target);
        states.push_back(split);
        builder.add_transition(t.source, letter, {0, 0}, split);
        builder.add_transition(split, letter, {0, 0}, t.target);
    }
    builder.set_initial(m.initial, {0, 0});
    add_trace_finals(builder, states);
    return builder.build();
}

Vass build_a(const CounterMachine& m)
{
    const Vass n = build_n(m);
    VassBuilder builder(2);
    add_machine_alphabet(builder);
    builder.add_letter(std::string(halt_letter));
    copy_into(builder, n, a_name);
    builder.add_transition(a_name(m.final), std::string(halt_letter), {0, 0}, a_name(halt_letter));
    builder.set_initial(a_name(m.initial), {0, 0});

    std::vector<std::string> states;
    for (const auto& q : n.states())
        states.push_back(a_name(q));
    states.push_back(a_name(halt_letter));
    add_trace_finals(builder, states);
    return builder.build();
}

std::vector<ZeroTestTriple> zero_test_triples(const Vass& n)
{
    auto zero_letter = [&](LetterId a) -> std::optional<std::size_t> {
        const auto& name = n.letter_name(a);
        if (name == "z_1")
            return 0;
        if (name == "z_2")
            return 1;
        return std::nullopt;
    };

    // A split state has outgoing transitions, all of them zero tests.
    std::vector<bool> is_split(n.states().size(), false);
    for (StateId q = 0; q < n.states().size(); ++q) {
        const auto out = n.outgoing(q);
        is_split[q] = !out.empty();
        for (auto id : out)
            if (!zero_letter(n.transition(id).letter))
                is_split[q] = false;
    }

    std::vector<ZeroTestTriple> triples;
    std::set<StateId> used_splits;
    for (const auto& t : n.transitions()) {
        auto counter = zero_letter(t.letter);
        if (!counter || is_split[t.source])
            continue;
        const auto& q = n.state_name(t.source);
        const auto& split = n.state_name(t.target);
        if (!is_split[t.target])
            throw MalformedN("zero test from '" + q + "' does not enter a split state");
        if (!used_splits.insert(t.target).second)
            throw MalformedN("split state '" + split + "' is entered by more than one zero test");
        const auto next = n.outgoing(t.target, t.letter);
        if (next.size() != 1 || n.outgoing(t.target).size() != 1)
            throw MalformedN("split state '" + split + "' must have exactly one outgoing transition over " +
                             n.letter_name(t.letter));
        const auto& cont = n.transition(next.front());
        if (cont.effect != Counters(n.dimension(), 0) || t.effect != Counters(n.dimension(), 0))
            throw MalformedN("zero-test transitions around '" + split + "' must not change the counters");
        triples.push_back(ZeroTestTriple{q, split, n.state_name(cont.target), *counter});
    }
    return triples;
}

ReductionOutput build_b(const CounterMachine& m)
{
    Vass n = build_n(m);
    Vass a = build_a(m);
    auto triples = zero_test_triples(n);

    std::set<std::string> splits;
    for (const auto& tr : triples)
        splits.insert(tr.split);

    std::map<std::string, StateTag> tags;
    for (const auto& q : n.states()) {
        const auto kind = splits.contains(q) ? TagKind::SplitState : TagKind::ACopy;
        tags.emplace(a_name(q), StateTag{kind, q, false, false});
        tags.emplace(b_n_name(q), StateTag{kind == TagKind::ACopy ? TagKind::NCopy : kind, q, true, true});
        tags.emplace(b_a_name(q), StateTag{kind, q, false, true});
    }
    tags.emplace(a_name(halt_letter), StateTag{TagKind::HaltState, std::string(halt_letter), false, false});
    tags.emplace(b_a_name(halt_letter), StateTag{TagKind::HaltState, std::string(halt_letter), false, true});

    VassBuilder builder(2);
    for (const auto& letter : a.alphabet())
        builder.add_letter(letter);
    copy_into(builder, n, b_n_name);
    copy_into(builder, a, [](const std::string& q) { return b_n_name(q); });

    for (const auto& tr : triples) {
        const std::string letter = tr.counter == 0 ? "z_1" : "z_2";
        const auto gadget = gadget_name(tr.q, tr.counter);
        Counters down{0, 0}, up{0, 0};
        down[tr.counter] = -1;
        up[tr.counter] = 1;
        builder.add_transition(b_n_name(tr.q), letter, down, gadget);
        builder.add_transition(gadget, letter, up, b_a_name(tr.p));
        tags.emplace(gadget, StateTag{TagKind::Gadget, tr.q, true, true});
    }
    builder.set_initial(b_n_name(m.initial), {0, 0});

    Vass unfinished = builder.build();
    Vass b = all_states_accepting(unfinished);
    return ReductionOutput{std::move(n), std::move(a), std::move(b), std::move(tags), std::move(triples)};
}

} // namespace vasseq
