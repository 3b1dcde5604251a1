#include "vasseq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vasseq
{

using ojson = nlohmann::ordered_json;

namespace
{

std::vector<std::string> split_tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

CmDocument read_cm(std::string_view text)
{
    CmDocument doc;
    std::optional<std::pair<std::string, std::string>> header;
    std::vector<CmTransition> transitions;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        if (!header) {
            if (tokens.size() != 3 || tokens[0] != "2cm")
                throw SyntaxError(line_no, "expected header '2cm <initial> <final>'");
            header.emplace(tokens[1], tokens[2]);
            doc.header_line = line_no;
            continue;
        }
        if (tokens.size() != 3)
            throw SyntaxError(line_no, "expected '<source> <op> <target>'");
        auto op = parse_op(tokens[1]);
        if (!op)
            throw SyntaxError(line_no, "unknown operation '" + tokens[1] +
                                           "' (expected inc_1, inc_2, dec_1, dec_2, z_1 or z_2)");
        transitions.push_back(CmTransition{tokens[0], *op, tokens[2]});
        doc.transition_lines.push_back(line_no);
    }
    if (!header)
        throw SyntaxError(line_no, "missing header '2cm <initial> <final>'");
    doc.machine = CounterMachine::make(header->first, header->second, std::move(transitions));
    return doc;
}

std::vector<std::string> describe_violations(const CmDocument& doc)
{
    std::vector<std::string> out;
    const auto& m = doc.machine;
    for (const auto& v : validate(m)) {
        std::size_t line = doc.header_line;
        if (v.transition)
            line = doc.transition_lines.at(*v.transition);
        else
            for (std::size_t i = 0; i < m.transitions.size(); ++i)
                if (m.transitions[i].source == v.state) {
                    line = doc.transition_lines[i];
                    break;
                }
        out.push_back("line " + std::to_string(line) + ": " +
                      (v.state.empty() ? std::string() : "state '" + v.state + "': ") + v.rule);
    }
    return out;
}

CounterMachine parse_cm(std::string_view text)
{
    auto doc = read_cm(text);
    auto problems = describe_violations(doc);
    if (!problems.empty())
        throw InvalidMachine(std::move(problems));
    return std::move(doc.machine);
}

std::string print_cm(const CounterMachine& m)
{
    std::string out = "2cm " + m.initial + " " + m.final + "\n";
    for (const auto& t : m.transitions)
        out += t.source + " " + std::string(to_string(t.op)) + " " + t.target + "\n";
    return out;
}

namespace
{

ojson configuration_json(const Vass& v, const Configuration& c)
{
    return ojson{{"state", v.state_name(c.state)}, {"counters", c.counters}};
}

template <typename T>
T field(const ojson& obj, const char* name, const char* where)
{
    if (!obj.is_object() || !obj.contains(name))
        throw SyntaxError(0, std::string(where) + ": missing field '" + name + "'");
    try {
        return obj.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SyntaxError(0, std::string(where) + ": field '" + name + "' has the wrong type");
    }
}

std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

} // namespace

Vass parse_vass(std::string_view text)
{
    ojson doc;
    try {
        doc = ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
    if (!doc.is_object())
        throw SyntaxError(1, "a VASS document must be an object");

    const auto dimension = field<std::size_t>(doc, "dimension", "document");
    const auto alphabet = field<std::vector<std::string>>(doc, "alphabet", "document");
    const auto states = field<std::vector<std::string>>(doc, "states", "document");
    const auto transitions = field<std::vector<ojson>>(doc, "transitions", "document");
    const auto initial = field<ojson>(doc, "initial", "document");
    const auto finals = field<std::vector<ojson>>(doc, "finals", "document");

    std::map<std::string, StateId> state_ids;
    for (std::size_t i = 0; i < states.size(); ++i)
        state_ids.emplace(states[i], static_cast<StateId>(i));
    auto lookup_state = [&](const std::string& name, const std::string& where) {
        auto it = state_ids.find(name);
        if (it == state_ids.end())
            throw InvariantViolation(where + ": unknown state '" + name + "'");
        return it->second;
    };
    auto lookup_letter = [&](const std::string& name, const std::string& where) {
        auto it = std::find(alphabet.begin(), alphabet.end(), name);
        if (it == alphabet.end())
            throw InvariantViolation(where + ": unknown letter '" + name + "'");
        return static_cast<LetterId>(it - alphabet.begin());
    };
    auto read_config = [&](const ojson& obj, const std::string& where) {
        const auto state = field<std::string>(obj, "state", where.c_str());
        const auto counters = field<Counters>(obj, "counters", where.c_str());
        return Configuration{lookup_state(state, where), counters};
    };

    std::vector<Transition> ts;
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const std::string where = "transition #" + std::to_string(i);
        const auto& t = transitions[i];
        Transition tr;
        tr.source = lookup_state(field<std::string>(t, "source", where.c_str()), where);
        tr.letter = lookup_letter(field<std::string>(t, "letter", where.c_str()), where);
        tr.effect = field<Counters>(t, "effect", where.c_str());
        tr.target = lookup_state(field<std::string>(t, "target", where.c_str()), where);
        ts.push_back(std::move(tr));
    }
    std::vector<Configuration> fs;
    for (std::size_t i = 0; i < finals.size(); ++i)
        fs.push_back(read_config(finals[i], "final #" + std::to_string(i)));

    return Vass(dimension, alphabet, states, std::move(ts), read_config(initial, "initial"), std::move(fs));
}

std::string print_vass(const Vass& v)
{
    std::ostringstream out;
    out << "{\n";
    out << "  \"dimension\": " << v.dimension() << ",\n";
    out << "  \"alphabet\": " << ojson(v.alphabet()).dump() << ",\n";
    out << "  \"states\": " << ojson(v.states()).dump() << ",\n";
    out << "  \"transitions\": [";
    for (std::size_t i = 0; i < v.transitions().size(); ++i) {
        const auto& t = v.transition(i);
        ojson tj{{"source", v.state_name(t.source)},
                 {"letter", v.letter_name(t.letter)},
                 {"effect", t.effect},
                 {"target", v.state_name(t.target)}};
        out << (i ? ",\n    " : "\n    ") << tj.dump();
    }
    out << (v.transitions().empty() ? "],\n" : "\n  ],\n");
    out << "  \"initial\": " << configuration_json(v, v.initial()).dump() << ",\n";
    out << "  \"finals\": [";
    for (std::size_t i = 0; i < v.finals().size(); ++i)
        out << (i ? ",\n    " : "\n    ") << configuration_json(v, v.finals()[i]).dump();
    out << (v.finals().empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

namespace
{

std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

std::string effect_label(const Counters& effect)
{
    std::string out = "(";
    for (std::size_t i = 0; i < effect.size(); ++i) {
        if (i)
            out += ",";
        if (effect[i] > 0)
            out += "+";
        out += std::to_string(effect[i]);
    }
    return out + ")";
}

} // namespace

std::string export_dot(const Vass& v, const std::map<std::string, StateTag>* tags)
{
    std::ostringstream out;
    out << "digraph vass {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (StateId q = 0; q < v.states().size(); ++q) {
        const auto& name = v.state_name(q);
        std::string style;
        if (tags != nullptr) {
            if (auto it = tags->find(name); it != tags->end()) {
                switch (it->second.kind) {
                case TagKind::Gadget: style = ", shape=diamond, color=red"; break;
                case TagKind::SplitState: style = ", style=dashed"; break;
                case TagKind::HaltState: style = ", shape=doublecircle"; break;
                case TagKind::NCopy: style = ", color=blue"; break;
                case TagKind::ACopy: break;
                }
            }
        }
        if (q == v.initial().state)
            style += ", penwidth=3";
        out << "  n" << q << " [label=\"" << dot_escape(name) << "\"" << style << "];\n";
    }
    for (const auto& t : v.transitions())
        out << "  n" << t.source << " -> n" << t.target << " [label=\"" << dot_escape(v.letter_name(t.letter))
            << " / " << effect_label(t.effect) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << contents;
}

} // namespace vasseq
