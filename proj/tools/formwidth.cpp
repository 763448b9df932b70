#include <formwidth/containment.hpp>
#include <formwidth/error.hpp>
#include <formwidth/extremal.hpp>
#include <formwidth/formations.hpp>
#include <formwidth/fw.hpp>
#include <formwidth/matrix.hpp>
#include <formwidth/mfw.hpp>
#include <formwidth/sequence.hpp>
#include <formwidth/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace formwidth;
using json = nlohmann::ordered_json;

namespace {

// Usage-level failure: bad flags or unparseable input. Exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Globals
{
    bool json = false;
    unsigned parallel = 1;
    std::optional<std::uint64_t> guard;
    std::string seed_order = "lex";
};

auto annotate(const std::string & text, const ParseError & e) -> UsageError
{
    std::string message = std::string(e.what()) + "\n  " + text + "\n  " + std::string(e.position(), ' ') + "^";
    return UsageError(message);
}

auto read_sequence(const std::string & text) -> Sequence
{
    try {
        return parse_sequence(text);
    }
    catch (const ParseError & e) {
        throw annotate(text, e);
    }
}

// Inline matrices write rows separated by '/', e.g. "100/001/010".
auto read_inline_matrix(const std::string & text) -> Matrix01
{
    std::string lines = text;
    std::replace(lines.begin(), lines.end(), '/', '\n');
    try {
        return parse_matrix(lines);
    }
    catch (const ParseError & e) {
        throw annotate(text, e);
    }
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw UsageError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Matrices in a file are separated by blank lines.
auto read_matrix_file(const std::string & path) -> std::vector<Matrix01>
{
    auto text = read_file(path);
    std::vector<Matrix01> out;
    std::string chunk;
    std::istringstream lines(text);
    std::string line;
    auto flush = [&] {
        if (chunk.empty())
            return;
        try {
            out.push_back(parse_matrix(chunk));
        }
        catch (const ParseError & e) {
            throw UsageError(path + ": " + e.what());
        }
        chunk.clear();
    };
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            flush();
        else
            chunk += line + "\n";
    }
    flush();
    return out;
}

// One sequence per non-empty line.
auto read_sequence_file(const std::string & path) -> std::vector<Sequence>
{
    std::istringstream lines(read_file(path));
    std::vector<Sequence> out;
    std::string line;
    while (std::getline(lines, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            out.push_back(read_sequence(line));
    return out;
}

// Parses "k=2 t=3 j=2" style arguments; bare numbers fill k, t, j in order.
auto read_pair_identity(const std::vector<std::string> & args) -> std::array<int, 3>
{
    std::array<int, 3> values{0, 0, 1};
    std::size_t next = 0;
    for (auto & arg : args) {
        auto eq = arg.find('=');
        std::string key = eq == std::string::npos ? "" : arg.substr(0, eq);
        std::string number = eq == std::string::npos ? arg : arg.substr(eq + 1);
        std::size_t slot = next;
        if (key == "k")
            slot = 0;
        else if (key == "t")
            slot = 1;
        else if (key == "j")
            slot = 2;
        else if (! key.empty())
            throw UsageError("unknown --pair-identity key '" + key + "'");
        if (slot > 2)
            throw UsageError("too many --pair-identity values");
        try {
            std::size_t used = 0;
            values[slot] = std::stoi(number, &used);
            if (used != number.size())
                throw std::invalid_argument(number);
        }
        catch (const std::exception &) {
            throw UsageError("--pair-identity expects integers, got '" + arg + "'");
        }
        next = slot + 1;
    }
    if (values[0] == 0 || values[1] == 0)
        throw UsageError("--pair-identity needs k and t");
    return values;
}

auto elapsed_since(std::chrono::steady_clock::time_point start) -> double
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

auto letter_map_json(const Embedding & e) -> json
{
    json out = json::array();
    for (auto [from, to] : e.letter_map)
        out.push_back({from, to});
    return out;
}

auto positions_json(const Embedding & e) -> json
{
    json out = json::array();
    for (auto p : e.positions)
        out.push_back(p + 1);
    return out;
}

auto sequence_json(const Sequence & s) -> json
{
    return json(s.letters());
}

auto matrix_rows(const Matrix01 & m) -> json
{
    json rows = json::array();
    std::istringstream lines(format_matrix(m));
    std::string line;
    while (std::getline(lines, line))
        rows.push_back(line);
    return rows;
}

auto inline_matrix(const Matrix01 & m) -> std::string
{
    std::string out;
    for (auto & row : matrix_rows(m))
        out += (out.empty() ? "" : "/") + row.get<std::string>();
    return out;
}

class Cli
{
public:
    auto run(int argc, char ** argv) -> int;

private:
    void emit(const std::string & command, json inputs, json value, std::optional<json> certificates, std::string text);
    auto engine() const -> EngineOptions;
    auto limits() const -> OracleLimits;
    auto cap() const -> std::uint64_t { return limits().enumeration_cap; }

    auto sequence_family(bool ordered) -> PatternFamily;
    auto matrix_family() -> MatrixFamily;

    auto do_width(const std::string & command) -> int;
    auto do_contains() -> int;
    auto do_red() -> int;
    auto do_chi() -> int;
    auto do_chi_inv() -> int;
    auto do_formation() -> int;
    auto do_extremal() -> int;
    auto do_verify() -> int;

    Globals _globals;
    std::chrono::steady_clock::time_point _start;

    // Shared subcommand state.
    std::vector<std::string> _patterns;
    bool _ordered = false;
    bool _certificate = false;
    bool _from_sequence = false;
    std::vector<std::string> _pair_identity;
    std::optional<int> _fat;
    std::optional<std::string> _file;
    std::string _mode = "unordered";
    std::optional<int> _r, _s, _n, _n_max, _k, _t, _j;
    std::optional<std::string> _binary;
    bool _enumerate = false;
    bool _matrix_output = false;
    std::vector<std::string> _family;
    std::optional<std::string> _formation;
    std::optional<std::string> _check;
    bool _all = false;
    bool _list = false;
};

auto Cli::engine() const -> EngineOptions
{
    EngineOptions e;
    e.threads = _globals.parallel;
    return e;
}

auto Cli::limits() const -> OracleLimits
{
    OracleLimits l;
    l.threads = _globals.parallel;
    if (_globals.guard)
        l.enumeration_cap = *_globals.guard;
    return l;
}

void Cli::emit(const std::string & command, json inputs, json value, std::optional<json> certificates, std::string text)
{
    if (! _globals.json) {
        std::cout << text;
        if (! text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    json out;
    out["command"] = command;
    out["inputs"] = std::move(inputs);
    out["value"] = std::move(value);
    if (certificates)
        out["certificates"] = std::move(*certificates);
    out["elapsed_ms"] = elapsed_since(_start);
    std::cout << out.dump(2) << '\n';
}

auto Cli::sequence_family(bool ordered) -> PatternFamily
{
    auto semantics = ordered ? Semantics::Ordered : Semantics::Unordered;
    if (! _pair_identity.empty()) {
        auto [k, t, j] = read_pair_identity(_pair_identity);
        return monotone_pair(k, t, _fat.value_or(j), semantics);
    }
    std::vector<Sequence> members;
    if (_file)
        members = read_sequence_file(*_file);
    for (auto & p : _patterns)
        members.push_back(read_sequence(p));
    if (members.empty())
        throw UsageError("no patterns given");
    return PatternFamily(std::move(members), semantics);
}

auto Cli::matrix_family() -> MatrixFamily
{
    if (! _pair_identity.empty()) {
        auto [k, t, j] = read_pair_identity(_pair_identity);
        return identity_pair(k, t, _fat.value_or(j));
    }
    std::vector<Matrix01> members;
    if (_file)
        members = read_matrix_file(*_file);
    for (auto & p : _patterns)
        members.push_back(_from_sequence ? chi(normalize_ordered(read_sequence(p))) : read_inline_matrix(p));
    if (members.empty())
        throw UsageError("no patterns given");
    return MatrixFamily(std::move(members));
}

auto Cli::do_width(const std::string & command) -> int
{
    bool matrix = command == "mfw" || command == "dmfw";
    json inputs;
    json certificates;
    std::ostringstream text;
    int width = 0;
    if (! matrix) {
        auto family = sequence_family(_ordered);
        auto answer = command == "fw" ? fw(family, engine()) : dfw(family, engine());
        width = answer.width;
        inputs["patterns"] = json::array();
        for (auto & m : family.members())
            inputs["patterns"].push_back(m.to_string());
        inputs["semantics"] = to_string(family.semantics());
        text << width << '\n';
        if (_certificate) {
            auto host = static_cast<int>(answer.host_size);
            certificates["r"] = host;
            if (answer.avoider) {
                certificates["avoider"] = {{"pattern", answer.avoider->to_string()},
                    {"formation", binary_formation(host, *answer.avoider).to_string()}};
                text << "avoider " << answer.avoider->to_string() << ": " << binary_formation(host, *answer.avoider).to_string() << '\n';
            }
            certificates["embeddings"] = json::array();
            for (auto & c : answer.embeddings) {
                certificates["embeddings"].push_back({{"pattern", c.pattern.to_string()}, {"member", c.member},
                    {"positions", positions_json(c.embedding)}, {"letter_map", letter_map_json(c.embedding)}});
                text << "embed " << c.pattern.to_string() << " member " << c.member << " positions";
                for (auto p : c.embedding.positions)
                    text << ' ' << p + 1;
                text << '\n';
            }
        }
    }
    else {
        auto family = matrix_family();
        auto answer = command == "mfw" ? mfw(family, engine()) : dmfw(family, engine());
        width = answer.width;
        inputs["patterns"] = json::array();
        for (auto & m : family.members())
            inputs["patterns"].push_back(inline_matrix(m));
        text << width << '\n';
        if (_certificate) {
            auto host = static_cast<int>(answer.host_size);
            certificates["r"] = host;
            if (answer.avoider) {
                auto formation = binary_matrix_formation(host, *answer.avoider);
                certificates["avoider"] = {{"pattern", answer.avoider->to_string()}, {"formation", matrix_rows(formation)}};
                text << "avoider " << answer.avoider->to_string() << ": " << inline_matrix(formation) << '\n';
            }
            certificates["embeddings"] = json::array();
            for (auto & c : answer.embeddings) {
                certificates["embeddings"].push_back({{"pattern", c.pattern.to_string()}, {"member", c.member},
                    {"rows", c.embedding.rows}, {"cols", c.embedding.cols}});
                text << "embed " << c.pattern.to_string() << " member " << c.member << " rows";
                for (auto r : c.embedding.rows)
                    text << ' ' << r;
                text << " cols";
                for (auto col : c.embedding.cols)
                    text << ' ' << col;
                text << '\n';
            }
        }
    }
    emit(command, inputs, width, _certificate ? std::optional<json>(certificates) : std::nullopt, text.str());
    return 0;
}

auto Cli::do_contains() -> int
{
    if (_patterns.size() != 2)
        throw UsageError("contains expects HOST PATTERN");
    json inputs = {{"host", _patterns[0]}, {"pattern", _patterns[1]}, {"mode", _mode}};
    std::optional<json> certificate;
    bool found = false;
    if (_mode == "matrix") {
        auto host = read_inline_matrix(_patterns[0]);
        auto pattern = read_inline_matrix(_patterns[1]);
        if (auto e = find_matrix(host, pattern)) {
            found = true;
            certificate = json{{"rows", e->rows}, {"cols", e->cols}};
        }
    }
    else {
        auto host = read_sequence(_patterns[0]);
        auto pattern = read_sequence(_patterns[1]);
        auto semantics = _mode == "ordered" ? Semantics::Ordered : Semantics::Unordered;
        if (auto e = find_embedding(host, pattern, semantics)) {
            found = true;
            certificate = json{{"positions", positions_json(*e)}, {"letter_map", letter_map_json(*e)}};
        }
    }
    emit("contains", inputs, found, _certificate ? certificate : std::nullopt, found ? "true" : "false");
    return 0;
}

auto Cli::do_red() -> int
{
    if (_patterns.size() != 1)
        throw UsageError("red expects one pattern");
    json inputs = {{"pattern", _patterns[0]}, {"mode", _mode}};
    if (_mode == "matrix") {
        auto reduced = red_matrix(read_inline_matrix(_patterns[0]));
        emit("red", inputs, matrix_rows(reduced), std::nullopt, format_matrix(reduced));
    }
    else {
        auto reduced = red(read_sequence(_patterns[0]));
        emit("red", inputs, sequence_json(reduced), std::nullopt, reduced.to_string());
    }
    return 0;
}

auto Cli::do_chi() -> int
{
    if (_patterns.size() != 1)
        throw UsageError("chi expects one sequence");
    auto m = chi(read_sequence(_patterns[0]));
    emit("chi", {{"sequence", _patterns[0]}}, matrix_rows(m), std::nullopt, format_matrix(m));
    return 0;
}

auto Cli::do_chi_inv() -> int
{
    Matrix01 m = [&] {
        if (_file) {
            auto all = read_matrix_file(*_file);
            if (all.size() != 1)
                throw UsageError("chi-inv expects exactly one matrix");
            return all.front();
        }
        if (_patterns.size() != 1)
            throw UsageError("chi-inv expects one matrix");
        return read_inline_matrix(_patterns[0]);
    }();
    auto s = chi_inv(m);
    emit("chi-inv", {{"matrix", matrix_rows(m)}}, sequence_json(s), std::nullopt, s.to_string());
    return 0;
}

auto Cli::do_formation() -> int
{
    if (! _r)
        throw UsageError("formation needs --r");
    int r = *_r;
    json inputs = {{"r", r}};
    if (_fat)
        inputs["fat"] = *_fat;
    if (_binary) {
        BinaryPattern pattern = [&] {
            try {
                return BinaryPattern::parse(*_binary);
            }
            catch (const ParseError & e) {
                throw annotate(*_binary, e);
            }
        }();
        inputs["binary"] = pattern.to_string();
        if (_matrix_output) {
            auto m = binary_matrix_formation(r, pattern, _fat);
            emit("formation", inputs, matrix_rows(m), std::nullopt, format_matrix(m));
        }
        else {
            auto s = binary_formation(r, pattern, _fat);
            emit("formation", inputs, sequence_json(s), std::nullopt, s.to_string());
        }
        return 0;
    }
    if (! _s)
        throw UsageError("formation needs --binary PATTERN or --s");
    int s = *_s;
    inputs["s"] = s;
    auto count = formation_count(r, s, _fat.value_or(1));
    if (! _enumerate) {
        emit("formation", inputs, count, std::nullopt, std::to_string(count));
        return 0;
    }
    json rows = json::array();
    std::ostringstream text;
    auto add = [&](const Sequence & seq) {
        if (_globals.json)
            rows.push_back(sequence_json(seq));
        else
            text << seq.to_string() << '\n';
    };
    if (_fat && *_fat > 1) {
        FatFormationStream stream(r, s, *_fat, cap());
        FatFormation f;
        while (stream.next(f))
            add(f.to_sequence());
    }
    else {
        FormationStream stream(r, s, cap());
        Formation f;
        while (stream.next(f))
            add(f.to_sequence());
    }
    emit("formation", inputs, rows, std::nullopt, text.str());
    return 0;
}

auto Cli::do_extremal() -> int
{
    ExtremalMode mode = _mode == "matrix" ? ExtremalMode::Matrix
        : _mode == "ordered"              ? ExtremalMode::OrderedSequence
                                          : ExtremalMode::UnorderedSequence;
    json inputs = {{"mode", _mode}};
    ExtremalTarget target = [&]() -> ExtremalTarget {
        if (_formation) {
            int r = 0, s = 0;
            char comma = 0;
            std::istringstream in(*_formation);
            if (! (in >> r >> comma >> s) || comma != ',' || ! in.eof())
                throw UsageError("--formation expects R,S");
            inputs["formation"] = {{"r", r}, {"s", s}};
            if (_fat)
                inputs["formation"]["fat"] = *_fat;
            return FormationTarget{r, s, _fat};
        }
        _patterns = _family;
        if (mode == ExtremalMode::Matrix) {
            auto family = matrix_family();
            inputs["family"] = json::array();
            for (auto & m : family.members())
                inputs["family"].push_back(inline_matrix(m));
            return family;
        }
        auto family = sequence_family(mode == ExtremalMode::OrderedSequence);
        inputs["family"] = json::array();
        for (auto & m : family.members())
            inputs["family"].push_back(m.to_string());
        return family;
    }();
    int low = _n.value_or(1);
    int high = _n_max.value_or(low);
    if (! _n && ! _n_max)
        throw UsageError("extremal needs --n or --n-max");
    if (! _n)
        low = 1;
    if (low < 1 || high < low)
        throw UsageError("bad n range");
    inputs["n"] = {low, high};
    json rows = json::array();
    std::ostringstream text;
    for (int n = low; n <= high; ++n) {
        ExtremalQuery query{target, n, mode};
        auto result = mode == ExtremalMode::Matrix ? ex_matrix(query, limits()) : ex_sequence(query, limits());
        json witness;
        std::string witness_text;
        if (auto * s = std::get_if<Sequence>(&result.witness)) {
            witness = sequence_json(*s);
            witness_text = s->empty() ? "-" : s->to_string();
        }
        else {
            auto & m = std::get<Matrix01>(result.witness);
            witness = matrix_rows(m);
            witness_text = inline_matrix(m);
        }
        rows.push_back({{"n", n}, {"value", result.value}, {"witness", witness}, {"nodes_explored", result.nodes_explored}});
        text << "n=" << n << " value=" << result.value << " witness=" << witness_text << " nodes=" << result.nodes_explored << '\n';
    }
    emit("extremal", inputs, rows, std::nullopt, text.str());
    return 0;
}

auto Cli::do_verify() -> int
{
    if (_list) {
        std::ostringstream text;
        json rows = json::array();
        for (auto & info : verify_checks()) {
            text << info.id << "  " << info.locus << '\n';
            rows.push_back({{"id", info.id}, {"locus", info.locus}});
        }
        emit("verify", json::object(), rows, std::nullopt, text.str());
        return 0;
    }
    if (_all == _check.has_value())
        throw UsageError("verify needs exactly one of --check ID or --all");
    VerifyOptions options;
    options.threads = _globals.parallel;
    options.check = _check;
    options.limits = limits();
    json inputs = json::object();
    inputs["check"] = _check ? json(*_check) : json("all");
    for (auto [name, value] : {std::pair{"k", _k}, {"t", _t}, {"r", _r}, {"s", _s}, {"n", _n}, {"j", _j}})
        if (value) {
            options.parameters[name] = *value;
            inputs[name] = *value;
        }
    VerifyReport report;
    try {
        report = run_verify(options);
    }
    catch (const InvalidArgument & e) {
        throw UsageError(e.what());
    }
    json checks = json::array();
    std::ostringstream text;
    for (auto & c : report.checks) {
        checks.push_back({{"id", c.id}, {"locus", c.locus}, {"parameters", c.parameters}, {"expected", c.expected},
            {"computed", c.computed}, {"pass", c.pass}, {"elapsed_ms", c.elapsed_ms}});
        text << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.parameters << "] expected " << c.expected << ", computed "
             << c.computed << " (" << c.locus << ")\n";
    }
    text << (report.overall() ? "all " : "FAILED: ") << report.checks.size() << " checks"
         << (report.overall() ? " pass" : "") << '\n';
    if (_globals.json) {
        json out;
        out["command"] = "verify";
        out["inputs"] = inputs;
        out["value"] = report.overall();
        out["checks"] = checks;
        out["elapsed_ms"] = elapsed_since(_start);
        std::cout << out.dump(2) << '\n';
    }
    else
        std::cout << text.str();
    return report.overall() ? 0 : 1;
}

auto Cli::run(int argc, char ** argv) -> int
{
    CLI::App app{"Formation width of forbidden sequence and 0-1 matrix patterns"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", _globals.json, "Emit JSON on stdout");
    app.add_option("--parallel", _globals.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--guard", _globals.guard, "Enumeration size limit");
    app.add_option("--seed-order", _globals.seed_order, "Enumeration order")->check(CLI::IsMember({"lex"}));

    if (const char * env = std::getenv("FORMWIDTH_GUARD")) {
        try {
            _globals.guard = std::stoull(env);
        }
        catch (const std::exception &) {
            std::cerr << "error: FORMWIDTH_GUARD must be an integer\n";
            return 2;
        }
    }

    std::string command;
    auto add_patterns = [&](CLI::App * sub, const std::string & description) {
        sub->add_option("patterns", _patterns, description);
    };
    auto mode_option = [&](CLI::App * sub, std::vector<std::string> modes) {
        sub->add_option("--mode", _mode, "Pattern kind")->check(CLI::IsMember(modes));
    };

    for (std::string name : {"fw", "dfw", "mfw", "dmfw"}) {
        bool matrix = name[0] == 'm' || name[1] == 'm';
        auto * sub = app.add_subcommand(name, name + " of a pattern family");
        add_patterns(sub, matrix ? "Matrices, rows separated by '/'" : "Sequences");
        if (! matrix)
            sub->add_flag("--ordered", _ordered, "Order-preserving containment");
        else
            sub->add_flag("--from-sequence", _from_sequence, "Patterns are sequences, mapped through chi");
        sub->add_flag("--certificate", _certificate, "Print avoider and embedding certificates");
        sub->add_option("--pair-identity", _pair_identity, "Monotone or identity pair: k=K t=T [j=J]")->expected(1, 3);
        sub->add_option("--fat", _fat, "Letter multiplicity for --pair-identity")->check(CLI::PositiveNumber);
        sub->add_option("--file", _file, matrix ? "Matrices separated by blank lines" : "One sequence per line");
        sub->callback([&, name] { command = name; });
    }

    auto * contains = app.add_subcommand("contains", "Test HOST contains PATTERN");
    add_patterns(contains, "HOST PATTERN");
    mode_option(contains, {"unordered", "ordered", "matrix"});
    contains->add_flag("--certificate", _certificate, "Print the embedding");
    contains->callback([&] { command = "contains"; });

    auto * red_cmd = app.add_subcommand("red", "Collapse adjacent repeated letters (or equal adjacent columns)");
    add_patterns(red_cmd, "Pattern");
    mode_option(red_cmd, {"unordered", "ordered", "matrix"});
    red_cmd->callback([&] { command = "red"; });

    auto * chi_cmd = app.add_subcommand("chi", "Sequence to 0-1 matrix");
    add_patterns(chi_cmd, "Sequence");
    chi_cmd->callback([&] { command = "chi"; });

    auto * chi_inv_cmd = app.add_subcommand("chi-inv", "0-1 matrix to sequence");
    add_patterns(chi_inv_cmd, "Matrix, rows separated by '/'");
    chi_inv_cmd->add_option("--file", _file, "Matrix file");
    chi_inv_cmd->callback([&] { command = "chi-inv"; });

    auto * formation = app.add_subcommand("formation", "Build or enumerate formations");
    formation->add_option("--r", _r, "Letters")->check(CLI::PositiveNumber);
    formation->add_option("--s", _s, "Blocks")->check(CLI::NonNegativeNumber);
    formation->add_option("--binary", _binary, "Block pattern such as ADA");
    formation->add_option("--fat", _fat, "Letter multiplicity")->check(CLI::PositiveNumber);
    formation->add_flag("--enumerate", _enumerate, "List every (r,s)-formation");
    formation->add_flag("--matrix", _matrix_output, "Emit the permutation matrix formation");
    formation->callback([&] { command = "formation"; });

    auto * extremal = app.add_subcommand("extremal", "Exact extremal function");
    mode_option(extremal, {"unordered", "ordered", "matrix"});
    extremal->add_option("--n", _n, "Alphabet size or matrix side")->check(CLI::PositiveNumber);
    extremal->add_option("--n-max", _n_max, "Tabulate n = 1..N")->check(CLI::PositiveNumber);
    extremal->add_option("--family", _family, "Forbidden patterns");
    extremal->add_option("--formation", _formation, "All (R,S)-formations");
    extremal->add_option("--pair-identity", _pair_identity, "k=K t=T [j=J]")->expected(1, 3);
    extremal->add_option("--fat", _fat, "Multiplicity for --formation or --pair-identity")->check(CLI::PositiveNumber);
    extremal->add_option("--file", _file, "Patterns file");
    extremal->callback([&] { command = "extremal"; });

    auto * verify = app.add_subcommand("verify", "Replay the desk-scale result grid");
    verify->add_option("--check", _check, "Run one check id");
    verify->add_flag("--all", _all, "Run every check");
    verify->add_flag("--list", _list, "List check ids");
    for (auto [flag, target] : {std::pair{"--k", &_k}, {"--t", &_t}, {"--r", &_r}, {"--s", &_s}, {"--n", &_n}, {"--j", &_j}})
        verify->add_option(flag, *target, "Grid override")->check(CLI::PositiveNumber);
    verify->callback([&] { command = "verify"; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    _start = std::chrono::steady_clock::now();
    try {
        if (command == "fw" || command == "dfw" || command == "mfw" || command == "dmfw")
            return do_width(command);
        if (command == "contains")
            return do_contains();
        if (command == "red")
            return do_red();
        if (command == "chi")
            return do_chi();
        if (command == "chi-inv")
            return do_chi_inv();
        if (command == "formation")
            return do_formation();
        if (command == "extremal")
            return do_extremal();
        if (command == "verify")
            return do_verify();
        return 2;
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const InvalidArgument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const GuardExceeded & e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return 1;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    Cli cli;
    return cli.run(argc, argv);
}
