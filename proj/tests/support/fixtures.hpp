#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vasseq/reduction.hpp"
#include "vasseq/twocm.hpp"
#include "vasseq/vass.hpp"

namespace vasseq::testing
{

// "a.b.c" -> {a, b, c}; "" -> ε.
inline Word W(const std::string& dotted)
{
    Word w;
    if (dotted.empty())
        return w;
    std::istringstream in(dotted);
    std::string part;
    while (std::getline(in, part, '.'))
        w.push_back(part);
    return w;
}

inline std::vector<Word> Ws(std::initializer_list<const char*> dotted)
{
    std::vector<Word> out;
    for (const char* d : dotted)
        out.push_back(W(d));
    return out;
}

// q_i -inc_1-> q_1, q_1 -dec_2-> q_i, q_1 -z_2-> q_f.
inline CounterMachine example_machine()
{
    return CounterMachine::make("q_i", "q_f",
                                {{"q_i", Op::inc_1, "q_1"}, {"q_1", Op::dec_2, "q_i"}, {"q_1", Op::z_2, "q_f"}});
}

// Final state unreachable in the control graph.
inline CounterMachine loop_machine()
{
    return CounterMachine::make("q_i", "q_f", {{"q_i", Op::inc_1, "q_a"}, {"q_a", Op::inc_1, "q_i"}});
}

// Counter 2 is positive when the zero test is first offered, so B can cross
// through the gadget on inc_2.z_2.z_2.
inline CounterMachine gadget_machine()
{
    return CounterMachine::make("q_i", "q_f",
                                {{"q_i", Op::inc_2, "q_1"}, {"q_1", Op::dec_2, "q_1"}, {"q_1", Op::z_2, "q_f"}});
}

// Zero tests on both counters.
inline CounterMachine two_tests_machine()
{
    return CounterMachine::make("q_i", "q_f",
                                {{"q_i", Op::dec_1, "q_i"},
                                 {"q_i", Op::z_1, "q_2"},
                                 {"q_2", Op::dec_2, "q_2"},
                                 {"q_2", Op::z_2, "q_f"}});
}

inline Configuration config(const Vass& v, const std::string& state, Counters counters)
{
    return Configuration{*v.state_id(state), std::move(counters)};
}

inline std::vector<std::string> state_names(const Vass& v)
{
    auto s = v.states();
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace vasseq::testing
