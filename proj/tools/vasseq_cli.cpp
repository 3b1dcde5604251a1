// vasseq: command-line front end for the counter-machine to VASS reduction,
// bounded language comparison, simulation games and resolver checks.
//
// Exit codes:
//   0  success / equal / contained / no refutation / resolver ok / harness passed
//   1  distinguished / witness found / Spoiler wins / counterexample / harness failed
//   2  node budget exhausted
//   3  parse, validation or I/O error
//   4  theorem harness inconclusive

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "vasseq/equivalence.hpp"
#include "vasseq/games.hpp"
#include "vasseq/io.hpp"
#include "vasseq/random.hpp"
#include "vasseq/reduction.hpp"
#include "vasseq/resolver.hpp"
#include "vasseq/twocm.hpp"

using namespace vasseq;
using ojson = nlohmann::ordered_json;

namespace
{

enum Exit
{
    exit_ok = 0,
    exit_negative = 1,
    exit_budget = 2,
    exit_input = 3,
    exit_inconclusive = 4,
};

struct Globals
{
    std::uint64_t budget = default_node_budget;
    std::string format = "text";
    std::uint64_t seed = 1;
    bool no_timing = false;
};

// Collects one structured document (machine-readable mode) or prints text.
class Reporter
{
public:
    Reporter(const Globals& g, std::string command)
        : machine_(g.format != "text"), timing_(!g.no_timing), start_(std::chrono::steady_clock::now())
    {
        doc_["command"] = std::move(command);
        options_.node_budget = g.budget;
        options_.stats = &stats_;
    }

    const SearchOptions& options() const { return options_; }
    bool machine() const { return machine_; }
    ojson& doc() { return doc_; }

    void line(const std::string& text)
    {
        if (!machine_)
            std::cout << text << '\n';
    }

    int finish(int code)
    {
        if (machine_) {
            doc_["exit_code"] = code;
            ojson stats{{"nodes_explored", stats_.nodes_explored}, {"max_antichain", stats_.max_antichain}};
            if (timing_)
                stats["wall_time_ms"] = std::chrono::duration<double, std::milli>(
                                            std::chrono::steady_clock::now() - start_)
                                            .count();
            doc_["stats"] = std::move(stats);
            std::cout << doc_.dump(2) << '\n';
        }
        return code;
    }

private:
    bool machine_;
    bool timing_;
    std::chrono::steady_clock::time_point start_;
    SearchStats stats_;
    SearchOptions options_;
    ojson doc_;
};

ojson word_json(const Word& w) { return ojson(w); }

CounterMachine load_cm(const std::string& path) { return parse_cm(read_file(path)); }
Vass load_vass(const std::string& path) { return parse_vass(read_file(path)); }

Semantics parse_semantics(const std::string& s) { return s == "cover" ? Semantics::Cover : Semantics::Trace; }

ojson game_json(const GameVerdict& g)
{
    if (g.spoiler_wins)
        return ojson{{"verdict", "SpoilerWins"}, {"depth", g.depth}, {"witness", word_json(g.witness)}};
    return ojson{{"verdict", "NoRefutationUpTo"}, {"depth", g.depth}};
}

std::string game_text(const GameVerdict& g)
{
    if (g.spoiler_wins)
        return "SpoilerWins(" + std::to_string(g.depth) + ", " + to_string(g.witness) + ")";
    return "NoRefutationUpTo(" + std::to_string(g.depth) + ")";
}

ojson eq_json(const EqVerdict& v)
{
    if (v.equal)
        return ojson{{"verdict", "EqualUpTo"}, {"maxlen", v.checked_up_to}};
    return ojson{{"verdict", "Distinguished"}, {"witness", word_json(v.word)}, {"in_first", v.in_first}};
}

std::string eq_text(const EqVerdict& v)
{
    if (v.equal)
        return "no difference up to length " + std::to_string(v.checked_up_to);
    return "Distinguished(" + to_string(v.word) + ", in " + (v.in_first ? "first" : "second") + ")";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Counter machines, VASS languages, simulation games and resolvers"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget", g.budget, "node budget for bounded searches")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "machine-readable", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized commands")->capture_default_str();
    app.add_flag("--no-timing", g.no_timing, "omit wall time from machine-readable output");
    app.fallthrough();

    std::string cm_path, vass_a, vass_b, out_path, dot_path, kind;
    std::size_t fuel = 100000, maxlen = 8, depth = 8, states = 8;
    std::string semantics = "trace";

    auto* validate_cmd = app.add_subcommand("validate", "check a two-counter machine file");
    validate_cmd->add_option("machine", cm_path)->required();

    auto* run_cmd = app.add_subcommand("run", "run a two-counter machine from q_i(0,0)");
    run_cmd->add_option("machine", cm_path)->required();
    run_cmd->add_option("--fuel", fuel)->capture_default_str();

    auto* build_cmd = app.add_subcommand("build", "build N, A or B from a two-counter machine");
    build_cmd->add_option("which", kind)->required()->check(CLI::IsMember({"n", "a", "b"}));
    build_cmd->add_option("machine", cm_path)->required();
    build_cmd->add_option("--out", out_path);
    build_cmd->add_option("--dot", dot_path);

    auto* lang_cmd = app.add_subcommand("lang", "list a bounded language");
    lang_cmd->add_option("vass", vass_a)->required();
    lang_cmd->add_option("--maxlen", maxlen)->capture_default_str();
    lang_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"trace", "cover"}))->capture_default_str();

    auto* eq_cmd = app.add_subcommand("eq", "compare two bounded languages");
    eq_cmd->add_option("first", vass_a)->required();
    eq_cmd->add_option("second", vass_b)->required();
    eq_cmd->add_option("--maxlen", maxlen)->capture_default_str();
    eq_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"trace", "cover"}))->capture_default_str();

    auto* contain_cmd = app.add_subcommand("contain", "bounded language inclusion of first in second");
    contain_cmd->add_option("first", vass_a)->required();
    contain_cmd->add_option("second", vass_b)->required();
    contain_cmd->add_option("--maxlen", maxlen)->capture_default_str();
    contain_cmd->add_option("--semantics", semantics)
        ->check(CLI::IsMember({"trace", "cover"}))
        ->capture_default_str();

    auto* sim_cmd = app.add_subcommand("sim", "bounded simulation game (does duplicator simulate spoiler?)");
    sim_cmd->add_option("duplicator", vass_a)->required();
    sim_cmd->add_option("spoiler", vass_b)->required();
    sim_cmd->add_option("--depth", depth)->capture_default_str();

    auto* twosim_cmd = app.add_subcommand("twosim", "bounded two-sided simulation");
    twosim_cmd->add_option("first", vass_a)->required();
    twosim_cmd->add_option("second", vass_b)->required();
    twosim_cmd->add_option("--depth", depth)->capture_default_str();

    auto* resolver_cmd = app.add_subcommand("resolver-check", "validate the resolver of B up to a bound");
    resolver_cmd->add_option("machine", cm_path)->required();
    resolver_cmd->add_option("--maxlen", maxlen)->capture_default_str();

    auto* theorem_cmd = app.add_subcommand("theorem", "end-to-end harness relating halting and A/B languages");
    theorem_cmd->add_option("machine", cm_path)->required();
    theorem_cmd->add_option("--fuel", fuel)->capture_default_str();
    theorem_cmd->add_option("--maxlen", maxlen)->capture_default_str();

    auto* gen_cmd = app.add_subcommand("random-2cm", "print a random valid two-counter machine (uses --seed)");
    gen_cmd->add_option("--states", states)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Reporter rep(g, command);
    const auto& opts = rep.options();

    try {
        if (command == "validate") {
            const auto doc = read_cm(read_file(cm_path));
            const auto problems = describe_violations(doc);
            rep.doc()["valid"] = problems.empty();
            rep.doc()["violations"] = problems;
            for (const auto& p : problems)
                std::cerr << cm_path << ":" << p << '\n';
            rep.line(problems.empty() ? "valid" : "invalid");
            return rep.finish(problems.empty() ? exit_ok : exit_input);
        }
        if (command == "run") {
            const auto m = load_cm(cm_path);
            const auto r = run_bounded(m, fuel);
            ojson ops = ojson::array();
            std::string text;
            for (Op op : r.ops) {
                ops.push_back(std::string(to_string(op)));
                text += (text.empty() ? "" : " ") + std::string(to_string(op));
            }
            rep.doc()["halted"] = r.halted;
            rep.doc()["steps"] = r.steps;
            rep.doc()["ops"] = ops;
            rep.doc()["last"] = {{"state", r.last.state}, {"counters", r.last.counters}};
            const std::string last = r.last.state + "(" + std::to_string(r.last.counters[0]) + "," +
                                     std::to_string(r.last.counters[1]) + ")";
            if (r.halted)
                rep.line("Halted(" + std::to_string(r.steps) + ") at " + last + ": " + text);
            else
                rep.line("Running(" + std::to_string(r.steps) + ") at " + last);
            return rep.finish(r.halted ? exit_ok : exit_negative);
        }
        if (command == "build") {
            const auto m = load_cm(cm_path);
            const auto r = build_b(m);
            const Vass& v = kind == "n" ? r.n : kind == "a" ? r.a : r.b;
            const auto text = print_vass(v);
            if (!dot_path.empty())
                write_file(dot_path, export_dot(v, kind == "n" ? nullptr : &r.tags));
            if (!out_path.empty())
                write_file(out_path, text);
            else
                std::cout << text;
            return exit_ok;
        }
        if (command == "lang") {
            const auto v = load_vass(vass_a);
            const auto words = parse_semantics(semantics) == Semantics::Trace ? bounded_trace_language(v, maxlen, opts)
                                                                             : bounded_cover_language(v, maxlen, opts);
            rep.doc()["maxlen"] = maxlen;
            rep.doc()["semantics"] = semantics;
            rep.doc()["words"] = ojson::array();
            for (const auto& w : words) {
                rep.doc()["words"].push_back(word_json(w));
                rep.line(to_string(w));
            }
            return rep.finish(exit_ok);
        }
        if (command == "eq") {
            const auto a = load_vass(vass_a), b = load_vass(vass_b);
            const auto v = equal_bounded(a, b, maxlen, parse_semantics(semantics), opts);
            rep.doc()["semantics"] = semantics;
            rep.doc()["result"] = eq_json(v);
            rep.line(eq_text(v));
            return rep.finish(v.equal ? exit_ok : exit_negative);
        }
        if (command == "contain") {
            const auto a = load_vass(vass_a), b = load_vass(vass_b);
            const auto v = containment_bounded(a, b, maxlen, parse_semantics(semantics), opts);
            rep.doc()["semantics"] = semantics;
            if (v.contained) {
                rep.doc()["result"] = {{"verdict", "ContainedUpTo"}, {"maxlen", v.checked_up_to}};
                rep.line("no counterexample to inclusion up to length " + std::to_string(v.checked_up_to));
            } else {
                rep.doc()["result"] = {{"verdict", "Witness"}, {"witness", word_json(v.witness)}};
                rep.line("Witness(" + to_string(v.witness) + ")");
            }
            return rep.finish(v.contained ? exit_ok : exit_negative);
        }
        if (command == "sim") {
            const auto dup = load_vass(vass_a), sp = load_vass(vass_b);
            const auto v = simulates_bounded(dup, sp, depth, opts);
            rep.doc()["result"] = game_json(v);
            rep.line(game_text(v));
            return rep.finish(v.spoiler_wins ? exit_negative : exit_ok);
        }
        if (command == "twosim") {
            const auto a = load_vass(vass_a), b = load_vass(vass_b);
            const auto [ab, ba] = two_sided_bounded(a, b, depth, opts);
            rep.doc()["first_simulates_second"] = game_json(ab);
            rep.doc()["second_simulates_first"] = game_json(ba);
            rep.line("first simulates second: " + game_text(ab));
            rep.line("second simulates first: " + game_text(ba));
            return rep.finish(ab.spoiler_wins || ba.spoiler_wins ? exit_negative : exit_ok);
        }
        if (command == "resolver-check") {
            const auto m = load_cm(cm_path);
            const auto r = build_b(m);
            const auto v = check_history_det_bounded(r.b, jancar_resolver(r), maxlen, opts);
            if (v.ok) {
                rep.doc()["result"] = {{"verdict", "OkUpTo"}, {"maxlen", v.checked_up_to}};
                rep.line("OkUpTo(" + std::to_string(v.checked_up_to) + ")");
            } else {
                rep.doc()["result"] = {{"verdict", "Counterexample"}, {"word", word_json(v.counterexample)}};
                rep.line("Counterexample(" + to_string(v.counterexample) + ")");
            }
            return rep.finish(v.ok ? exit_ok : exit_negative);
        }
        if (command == "theorem") {
            const auto m = load_cm(cm_path);
            const auto report = theorem_harness(m, fuel, maxlen, opts);
            rep.doc()["status"] = to_string(report.status);
            rep.doc()["halted"] = report.halted;
            rep.doc()["final_control_reachable"] = report.final_control_reachable;
            if (report.halting_word)
                rep.doc()["halting_word"] = word_json(*report.halting_word);
            rep.doc()["comparison"] = eq_json(report.equivalence);
            rep.doc()["checks"] = ojson::array();
            for (const auto& c : report.checks) {
                rep.doc()["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                rep.line(std::string(c.passed ? "[pass] " : "[FAIL] ") + c.name +
                         (c.detail.empty() ? "" : " (" + c.detail + ")"));
            }
            rep.doc()["notes"] = report.notes;
            for (const auto& n : report.notes)
                rep.line("note: " + n);
            rep.line("comparison: " + eq_text(report.equivalence));
            rep.line("status: " + to_string(report.status));
            const int code = report.status == HarnessStatus::Passed   ? exit_ok
                             : report.status == HarnessStatus::Failed ? exit_negative
                                                                      : exit_inconclusive;
            return rep.finish(code);
        }
        if (command == "random-2cm") {
            Rng rng(g.seed);
            std::cout << print_cm(random_machine(rng, states));
            return exit_ok;
        }
    } catch (const ResourceBound& e) {
        std::cerr << "vasseq: " << e.what() << '\n';
        rep.doc()["error"] = {{"kind", "ResourceBound"}, {"message", e.what()}};
        return rep.finish(exit_budget);
    } catch (const InvalidMachine& e) {
        for (const auto& p : e.problems())
            std::cerr << cm_path << ":" << p << '\n';
        rep.doc()["error"] = {{"kind", "InvalidMachine"}, {"problems", e.problems()}};
        return rep.finish(exit_input);
    } catch (const Error& e) {
        std::cerr << "vasseq: " << e.what() << '\n';
        rep.doc()["error"] = {{"kind", "InputError"}, {"message", e.what()}};
        return rep.finish(exit_input);
    }
    return exit_input;
}
