#include <formwidth/sequence.hpp>

#include <formwidth/error.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace formwidth {

Sequence::Sequence(std::vector<Letter> letters) :
    _letters(std::move(letters))
{
    for (std::size_t i = 0; i < _letters.size(); ++i)
        if (_letters[i] < 1)
            throw InvalidArgument("sequence letter " + std::to_string(_letters[i]) + " at index " + std::to_string(i) + " is not positive");
}

Sequence::Sequence(std::initializer_list<Letter> letters) :
    Sequence(std::vector<Letter>(letters))
{
}

auto Sequence::distinct() const -> std::size_t
{
    return std::set<Letter>(_letters.begin(), _letters.end()).size();
}

auto Sequence::max_letter() const noexcept -> Letter
{
    return _letters.empty() ? 0 : *std::max_element(_letters.begin(), _letters.end());
}

auto Sequence::to_string() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(_letters[i]);
    }
    return out;
}

auto operator<<(std::ostream & os, const Sequence & s) -> std::ostream &
{
    return os << s.to_string();
}

auto normalize(const Sequence & s) -> Sequence
{
    std::unordered_map<Letter, Letter> relabel;
    std::vector<Letter> out;
    out.reserve(s.size());
    for (auto x : s) {
        auto [it, inserted] = relabel.try_emplace(x, static_cast<Letter>(relabel.size() + 1));
        out.push_back(it->second);
    }
    return Sequence(std::move(out));
}

auto normalize_ordered(const Sequence & s) -> Sequence
{
    std::vector<Letter> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Letter> out;
    out.reserve(s.size());
    for (auto x : s)
        out.push_back(static_cast<Letter>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin() + 1));
    return Sequence(std::move(out));
}

auto red(const Sequence & s) -> Sequence
{
    std::vector<Letter> out;
    for (auto x : s)
        if (out.empty() || out.back() != x)
            out.push_back(x);
    return Sequence(std::move(out));
}

auto is_sparse(const Sequence & s, std::size_t window) -> bool
{
    if (window <= 1)
        return true;
    auto letters = s.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        auto lo = i >= window - 1 ? i - (window - 1) : 0;
        for (std::size_t j = lo; j < i; ++j)
            if (letters[j] == letters[i])
                return false;
    }
    return true;
}

auto concat(const Sequence & a, const Sequence & b) -> Sequence
{
    std::vector<Letter> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Sequence(std::move(out));
}

auto repeat(const Sequence & s, std::size_t times) -> Sequence
{
    std::vector<Letter> out;
    out.reserve(s.size() * times);
    for (std::size_t t = 0; t < times; ++t)
        out.insert(out.end(), s.begin(), s.end());
    return Sequence(std::move(out));
}

auto inflate(const Sequence & s, std::size_t copies) -> Sequence
{
    std::vector<Letter> out;
    out.reserve(s.size() * copies);
    for (auto x : s)
        out.insert(out.end(), copies, x);
    return Sequence(std::move(out));
}

auto complement(const Sequence & s) -> Sequence
{
    auto ordered = normalize_ordered(s);
    auto m = ordered.max_letter();
    std::vector<Letter> out;
    out.reserve(s.size());
    for (auto x : ordered)
        out.push_back(m + 1 - x);
    return Sequence(std::move(out));
}

namespace {

class SequenceParser
{
public:
    explicit SequenceParser(std::string_view text) :
        _text(text),
        _compact(text.find_first_of(" \t\r\n,") == std::string_view::npos)
    {
    }

    auto parse() -> Sequence
    {
        auto letters = parse_items(false);
        if (_pos != _text.size())
            throw ParseError("unexpected ')'", _pos);
        return Sequence(std::move(letters));
    }

private:
    auto parse_items(bool nested) -> std::vector<Letter>
    {
        std::vector<Letter> out;
        while (_pos < _text.size()) {
            char c = _text[_pos];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
                ++_pos;
            }
            else if (c == '(') {
                auto open = _pos++;
                auto inner = parse_items(true);
                if (_pos >= _text.size() || _text[_pos] != ')')
                    throw ParseError("unclosed '('", open);
                ++_pos;
                auto times = parse_power();
                for (std::size_t t = 0; t < times; ++t)
                    out.insert(out.end(), inner.begin(), inner.end());
            }
            else if (c == ')') {
                if (! nested)
                    throw ParseError("unexpected ')'", _pos);
                return out;
            }
            else if (c >= 'a' && c <= 'z') {
                out.push_back(c - 'a' + 1);
                ++_pos;
            }
            else if (std::isdigit(static_cast<unsigned char>(c))) {
                if (_compact) {
                    if (c == '0')
                        throw ParseError("letter 0 is not positive", _pos);
                    out.push_back(c - '0');
                    ++_pos;
                }
                else {
                    auto start = _pos;
                    auto value = read_number();
                    if (value < 1)
                        throw ParseError("letter " + std::to_string(value) + " is not positive", start);
                    out.push_back(static_cast<Letter>(value));
                }
            }
            else if (c == '^') {
                throw ParseError("'^' must follow a parenthesised group", _pos);
            }
            else {
                throw ParseError(std::string("unexpected character '") + c + "'", _pos);
            }
        }
        return out;
    }

    auto parse_power() -> std::size_t
    {
        if (_pos >= _text.size() || _text[_pos] != '^')
            return 1;
        ++_pos;
        if (_pos >= _text.size() || ! std::isdigit(static_cast<unsigned char>(_text[_pos])))
            throw ParseError("expected exponent after '^'", _pos);
        return static_cast<std::size_t>(read_number());
    }

    auto read_number() -> long long
    {
        auto start = _pos;
        long long value = 0;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            value = value * 10 + (_text[_pos] - '0');
            if (value > 1'000'000)
                throw ParseError("number too large", start);
            ++_pos;
        }
        return value;
    }

    std::string_view _text;
    bool _compact;
    std::size_t _pos = 0;
};

} // namespace

auto parse_sequence(std::string_view text) -> Sequence
{
    return SequenceParser(text).parse();
}

auto to_string(Semantics s) -> std::string_view
{
    return s == Semantics::Ordered ? "ordered" : "unordered";
}

PatternFamily::PatternFamily(std::vector<Sequence> members, Semantics semantics) :
    _semantics(semantics)
{
    if (members.empty())
        throw InvalidArgument("pattern family must have at least one member");
    _members.reserve(members.size());
    for (auto & m : members)
        _members.push_back(semantics == Semantics::Ordered ? normalize_ordered(m) : normalize(m));
}

auto PatternFamily::max_distinct() const -> std::size_t
{
    std::size_t best = 0;
    for (auto & m : _members)
        best = std::max(best, m.distinct());
    return best;
}

auto PatternFamily::common_distinct() const -> std::optional<std::size_t>
{
    auto first = _members.front().distinct();
    for (auto & m : _members)
        if (m.distinct() != first)
            return std::nullopt;
    return first;
}

auto red(const PatternFamily & f) -> PatternFamily
{
    std::vector<Sequence> reduced;
    reduced.reserve(f.size());
    for (auto & m : f.members())
        reduced.push_back(red(m));
    return PatternFamily(std::move(reduced), f.semantics());
}

} // namespace formwidth
