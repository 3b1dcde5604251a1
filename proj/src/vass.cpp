#include "vasseq/vass.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vasseq/antichain.hpp"

namespace vasseq
{

bool dominates(const Counters& lhs, const Counters& rhs) noexcept
{
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] < rhs[i])
            return false;
    return true;
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept
{
    std::size_t seed = std::hash<StateId>{}(c.state);
    for (auto x : c.counters)
        seed ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
}

namespace
{

void check_configuration(const char* what, const Configuration& c, std::size_t dimension, std::size_t n_states)
{
    if (c.state >= n_states)
        throw InvariantViolation(std::string(what) + " refers to an unknown state");
    if (c.counters.size() != dimension)
        throw InvariantViolation(std::string(what) + " has " + std::to_string(c.counters.size()) +
                                 " counters, expected " + std::to_string(dimension));
    if (std::any_of(c.counters.begin(), c.counters.end(), [](auto x) { return x < 0; }))
        throw InvariantViolation(std::string(what) + " has a negative counter");
}

} // namespace

Vass::Vass(std::size_t dimension,
           std::vector<std::string> alphabet,
           std::vector<std::string> states,
           std::vector<Transition> transitions,
           Configuration initial,
           std::vector<Configuration> finals)
    : dimension_(dimension),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      finals_(std::move(finals))
{
    if (dimension_ == 0)
        throw InvariantViolation("dimension must be positive");
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (!letter_index_.emplace(alphabet_[i], static_cast<LetterId>(i)).second)
            throw InvariantViolation("duplicate letter '" + alphabet_[i] + "'");
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (!state_index_.emplace(states_[i], static_cast<StateId>(i)).second)
            throw InvariantViolation("duplicate state '" + states_[i] + "'");

    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        const auto& t = transitions_[i];
        const std::string where = "transition #" + std::to_string(i);
        if (t.source >= states_.size() || t.target >= states_.size())
            throw InvariantViolation(where + " refers to an unknown state");
        if (t.letter >= alphabet_.size())
            throw InvariantViolation(where + " refers to an unknown letter");
        if (t.effect.size() != dimension_)
            throw InvariantViolation(where + " has an effect of length " + std::to_string(t.effect.size()) +
                                     ", expected " + std::to_string(dimension_));
    }
    check_configuration("initial configuration", initial_, dimension_, states_.size());
    for (const auto& f : finals_)
        check_configuration("final configuration", f, dimension_, states_.size());
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());

    by_state_letter_.resize(states_.size() * alphabet_.size());
    by_state_.resize(states_.size());
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        const auto& t = transitions_[i];
        by_state_letter_[t.source * alphabet_.size() + t.letter].push_back(i);
    }
    for (StateId q = 0; q < states_.size(); ++q)
        for (LetterId a = 0; a < alphabet_.size(); ++a) {
            const auto& ts = by_state_letter_[q * alphabet_.size() + a];
            by_state_[q].insert(by_state_[q].end(), ts.begin(), ts.end());
        }
}

std::optional<StateId> Vass::state_id(std::string_view name) const
{
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<LetterId> Vass::letter_id(std::string_view name) const
{
    auto it = letter_index_.find(std::string(name));
    if (it == letter_index_.end())
        return std::nullopt;
    return it->second;
}

std::span<const TransitionId> Vass::outgoing(StateId state, LetterId letter) const
{
    return by_state_letter_.at(state * alphabet_.size() + letter);
}

std::span<const TransitionId> Vass::outgoing(StateId state) const
{
    return by_state_.at(state);
}

std::string Vass::format(const Configuration& c) const
{
    std::ostringstream out;
    out << state_name(c.state) << '(';
    for (std::size_t i = 0; i < c.counters.size(); ++i)
        out << (i ? "," : "") << c.counters[i];
    out << ')';
    return out.str();
}

Vass Vass::with_finals(std::vector<Configuration> finals) const
{
    return Vass(dimension_, alphabet_, states_, transitions_, initial_, std::move(finals));
}

bool operator==(const Vass& lhs, const Vass& rhs)
{
    return lhs.dimension_ == rhs.dimension_ && lhs.alphabet_ == rhs.alphabet_ && lhs.states_ == rhs.states_ &&
           lhs.transitions_ == rhs.transitions_ && lhs.initial_ == rhs.initial_ && lhs.finals_ == rhs.finals_;
}

StateId VassBuilder::add_state(const std::string& name)
{
    auto [it, inserted] = state_index_.emplace(name, static_cast<StateId>(states_.size()));
    if (inserted)
        states_.push_back(name);
    return it->second;
}

LetterId VassBuilder::add_letter(const std::string& name)
{
    auto [it, inserted] = letter_index_.emplace(name, static_cast<LetterId>(alphabet_.size()));
    if (inserted)
        alphabet_.push_back(name);
    return it->second;
}

TransitionId VassBuilder::add_transition(const std::string& source, const std::string& letter,
                                         Counters effect, const std::string& target)
{
    Transition t{add_state(source), add_letter(letter), std::move(effect), add_state(target)};
    transitions_.push_back(std::move(t));
    return transitions_.size() - 1;
}

void VassBuilder::set_initial(const std::string& state, Counters counters)
{
    initial_ = Configuration{add_state(state), std::move(counters)};
}

void VassBuilder::add_final(const std::string& state, Counters counters)
{
    finals_.push_back(Configuration{add_state(state), std::move(counters)});
}

Vass VassBuilder::build() const
{
    if (!initial_)
        throw InvariantViolation("no initial configuration");
    return Vass(dimension_, alphabet_, states_, transitions_, *initial_, finals_);
}

bool is_enabled(const Transition& t, const Configuration& c) noexcept
{
    if (t.source != c.state || t.effect.size() != c.counters.size())
        return false;
    for (std::size_t i = 0; i < c.counters.size(); ++i)
        if (c.counters[i] + t.effect[i] < 0)
            return false;
    return true;
}

std::vector<TransitionId> enabled(const Vass& v, const Configuration& c, LetterId letter)
{
    std::vector<TransitionId> out;
    if (letter >= v.alphabet().size())
        return out;
    for (TransitionId id : v.outgoing(c.state, letter))
        if (is_enabled(v.transition(id), c))
            out.push_back(id);
    return out;
}

std::vector<TransitionId> enabled(const Vass& v, const Configuration& c, std::string_view letter)
{
    auto id = v.letter_id(letter);
    if (!id)
        return {};
    return enabled(v, c, *id);
}

Configuration fire(const Configuration& c, const Transition& t)
{
    if (t.source != c.state)
        throw NotEnabled("transition source does not match the configuration's state");
    if (t.effect.size() != c.counters.size())
        throw NotEnabled("transition effect has the wrong dimension");
    Configuration next{t.target, c.counters};
    for (std::size_t i = 0; i < next.counters.size(); ++i) {
        next.counters[i] += t.effect[i];
        if (next.counters[i] < 0)
            throw NotEnabled("counter " + std::to_string(i + 1) + " would become negative");
    }
    return next;
}

bool is_accepting(const Vass& v, const Configuration& c)
{
    return std::any_of(v.finals().begin(), v.finals().end(), [&](const Configuration& f) {
        return f.state == c.state && dominates(c.counters, f.counters);
    });
}

Configuration run_end(const Vass& v, const Run& run)
{
    Configuration c = run.start;
    for (TransitionId id : run.steps)
        c = fire(c, v.transition(id));
    return c;
}

Word word_of(const Vass& v, const Run& run)
{
    Word w;
    w.reserve(run.steps.size());
    for (TransitionId id : run.steps)
        w.push_back(v.letter_name(v.transition(id).letter));
    return w;
}

std::optional<std::vector<LetterId>> to_letter_ids(const Vass& v, const Word& w)
{
    std::vector<LetterId> out;
    out.reserve(w.size());
    for (const auto& a : w) {
        auto id = v.letter_id(a);
        if (!id)
            return std::nullopt;
        out.push_back(*id);
    }
    return out;
}

bool reads(const Vass& v, const Configuration& c, const Word& w)
{
    auto letters = to_letter_ids(v, w);
    if (!letters)
        return false;
    Antichain current(c);
    for (LetterId a : *letters) {
        current = post(v, current, a);
        if (current.empty())
            return false;
    }
    return true;
}

namespace
{

Word to_word(const Vass& v, const std::vector<LetterId>& letters)
{
    Word w;
    w.reserve(letters.size());
    for (auto a : letters)
        w.push_back(v.letter_name(a));
    return w;
}

// Breadth-first over readable prefixes; emits a word when `accept` holds of
// its antichain. Level order plus per-parent letter order is length-lex.
template <typename Accept>
std::vector<Word> enumerate_prefixes(const Vass& v, std::size_t maxlen, const SearchOptions& options, Accept accept)
{
    Budget budget(options);
    std::vector<Word> out;
    struct Node
    {
        std::vector<LetterId> word;
        Antichain set;
    };
    std::vector<Node> level;
    level.push_back(Node{{}, Antichain(v.initial())});
    budget.charge();
    for (std::size_t len = 0;; ++len) {
        for (const auto& node : level)
            if (accept(node.set))
                out.push_back(to_word(v, node.word));
        if (len == maxlen)
            break;
        std::vector<Node> next;
        for (const auto& node : level) {
            for (LetterId a = 0; a < v.alphabet().size(); ++a) {
                Antichain succ = post(v, node.set, a);
                if (succ.empty())
                    continue;
                budget.charge(succ.size());
                budget.observe_antichain(succ.size());
                auto word = node.word;
                word.push_back(a);
                next.push_back(Node{std::move(word), std::move(succ)});
            }
        }
        if (next.empty())
            break;
        level = std::move(next);
    }
    return out;
}

} // namespace

std::vector<Word> bounded_trace_language(const Vass& v, std::size_t maxlen, const SearchOptions& options)
{
    return enumerate_prefixes(v, maxlen, options, [](const Antichain&) { return true; });
}

std::vector<Word> bounded_cover_language(const Vass& v, std::size_t maxlen, const SearchOptions& options)
{
    if (v.finals().empty())
        return {};
    return enumerate_prefixes(v, maxlen, options, [&](const Antichain& a) { return a.any_accepting(v); });
}

Vass all_states_accepting(const Vass& v)
{
    std::vector<Configuration> finals;
    finals.reserve(v.states().size());
    for (StateId q = 0; q < v.states().size(); ++q)
        finals.push_back(Configuration{q, Counters(v.dimension(), 0)});
    return v.with_finals(std::move(finals));
}

bool is_deterministic(const Vass& v)
{
    for (StateId q = 0; q < v.states().size(); ++q)
        for (LetterId a = 0; a < v.alphabet().size(); ++a)
            if (v.outgoing(q, a).size() > 1)
                return false;
    return true;
}

UnambiguityVerdict is_unambiguous_bounded(const Vass& v, std::size_t maxlen, const SearchOptions& options)
{
    Budget budget(options);
    struct Node
    {
        std::vector<TransitionId> steps;
        Configuration end;
    };
    std::vector<Node> level{Node{{}, v.initial()}};
    budget.charge();
    for (std::size_t len = 0;; ++len) {
        // Word -> accepting runs over it, in generation order.
        std::map<std::vector<LetterId>, std::vector<std::size_t>> accepting;
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!is_accepting(v, level[i].end))
                continue;
            std::vector<LetterId> word;
            for (auto id : level[i].steps)
                word.push_back(v.transition(id).letter);
            accepting[word].push_back(i);
        }
        for (const auto& [word, runs] : accepting) {
            if (runs.size() > 1) {
                UnambiguityVerdict verdict;
                verdict.unambiguous = false;
                verdict.checked_up_to = maxlen;
                verdict.word = to_word(v, word);
                verdict.first = Run{v.initial(), level[runs[0]].steps};
                verdict.second = Run{v.initial(), level[runs[1]].steps};
                return verdict;
            }
        }
        if (len == maxlen)
            break;
        std::vector<Node> next;
        for (const auto& node : level) {
            for (TransitionId id : v.outgoing(node.end.state)) {
                const auto& t = v.transition(id);
                if (!is_enabled(t, node.end))
                    continue;
                budget.charge();
                auto steps = node.steps;
                steps.push_back(id);
                next.push_back(Node{std::move(steps), fire(node.end, t)});
            }
        }
        if (next.empty())
            break;
        level = std::move(next);
    }
    UnambiguityVerdict verdict;
    verdict.checked_up_to = maxlen;
    return verdict;
}

std::string to_string(const Word& w)
{
    if (w.empty())
        return "ε";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '.';
        out += w[i];
    }
    return out;
}

bool length_lex_less(const std::vector<std::string>& alphabet, const Word& lhs, const Word& rhs)
{
    if (lhs.size() != rhs.size())
        return lhs.size() < rhs.size();
    auto rank = [&](const std::string& a) {
        auto it = std::find(alphabet.begin(), alphabet.end(), a);
        return std::distance(alphabet.begin(), it);
    };
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == rhs[i])
            continue;
        auto l = rank(lhs[i]), r = rank(rhs[i]);
        if (l != r)
            return l < r;
        return lhs[i] < rhs[i];
    }
    return false;
}

} // namespace vasseq
