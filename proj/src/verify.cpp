#include <formwidth/verify.hpp>

#include <formwidth/containment.hpp>
#include <formwidth/error.hpp>
#include <formwidth/fw.hpp>
#include <formwidth/mfw.hpp>

#include <algorithm>
#include <chrono>
#include <functional>

namespace formwidth {

auto VerifyReport::overall() const -> bool
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult & c) { return c.pass; });
}

namespace {

const std::vector<CheckInfo> infos = {
    {"formation-ex-ordered-unordered", "ordered and unordered extremal functions of the (r,s)-formation family coincide"},
    {"fw-alternation", "fw((a b c ...)^t) = 2t-1"},
    {"fw-pair", "fw({(1..k)^t, (k..1)^t}) = 2t-1 for ordered patterns"},
    {"pair-witness", "a binary formation with t-1 ascending and t-1 descending blocks avoids both (1..k)^t and (k..1)^t, as sequences and as matrices"},
    {"pair-upper-mechanism", "every (gamma, 2t-1)-formation contains (1..k)^t or (k..1)^t, so ex_o of the pair is at most zeta_{gamma,2t-1}"},
    {"dfw-red", "dfw(u) = fw(red(u)), cross-checked against r-tuple formations"},
    {"doubled-pair", "dfw of the pair with every letter repeated j times is 2t-1"},
    {"es-lemma", "every ((r-1)^(2^(s-1))+1, s)-formation contains a binary (r,s)-formation"},
    {"mfw-pair", "mfw({A_{k,t}, B_{k,t}}) = 2t-1"},
    {"linear-probe", "ex({A_k, B_k}, n) = Theta(n) for two concatenated identities"},
    {"dmfw-red", "dmfw(M) = mfw(red(M)); dmfw of the j-fat identity pair is 2t-1"},
    {"ordered-single", "fw(u) = |u| for a single ordered pattern u"},
    {"ordered-single-matrix", "mfw(chi(u)) = |u| for a single pattern matrix"},
    {"general-bound", "ex_u(u, n) <= zeta_{r, s-r+1}(n) with r = ||u||, s = |u|"},
    {"chi-correspondence", "a contains b (ordered) iff chi(a) contains chi(b)"},
};

using Clock = std::chrono::steady_clock;

class Runner
{
public:
    explicit Runner(const VerifyOptions & options) :
        _options(options)
    {
    }

    auto grid(const std::string & name, std::vector<int> defaults) const -> std::vector<int>
    {
        if (auto it = _options.parameters.find(name); it != _options.parameters.end())
            return {it->second};
        return defaults;
    }

    auto engine() const -> EngineOptions
    {
        EngineOptions e;
        e.threads = _options.threads;
        return e;
    }

    auto limits() const -> OracleLimits
    {
        auto l = _options.limits;
        l.threads = _options.threads;
        return l;
    }

    // Times fn and records one row; fn fills expected/computed and returns pass.
    void record(const std::string & id, const std::string & parameters,
        const std::function<bool(std::string & expected, std::string & computed)> & fn)
    {
        CheckResult row;
        row.id = id;
        row.locus = locus_of(id);
        row.parameters = parameters;
        auto start = Clock::now();
        try {
            row.pass = fn(row.expected, row.computed);
        }
        catch (const Error & e) {
            row.pass = false;
            row.computed = std::string("error: ") + e.what();
        }
        row.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        _report.checks.push_back(std::move(row));
    }

    auto take() -> VerifyReport { return std::move(_report); }

private:
    static auto locus_of(const std::string & id) -> std::string
    {
        for (auto & info : infos)
            if (info.id == id)
                return info.locus;
        return {};
    }

    const VerifyOptions & _options;
    VerifyReport _report;
};

auto param(std::initializer_list<std::pair<const char *, int>> values) -> std::string
{
    std::string out;
    for (auto [name, value] : values) {
        if (! out.empty())
            out += ' ';
        out += std::string(name) + "=" + std::to_string(value);
    }
    return out;
}

auto yes_no(bool b) -> std::string
{
    return b ? "true" : "false";
}

auto ordered_formation_family(int r, int s, std::uint64_t cap) -> PatternFamily
{
    FormationStream stream(r, s, cap);
    std::vector<Sequence> members;
    Formation f;
    while (stream.next(f))
        members.push_back(f.to_sequence());
    return PatternFamily(std::move(members), Semantics::Ordered);
}

void check_formation_ex(Runner & run)
{
    std::vector<std::pair<int, int>> shapes = {{2, 2}, {2, 3}, {3, 2}};
    auto rs = run.grid("r", {});
    auto ss = run.grid("s", {});
    if (! rs.empty() || ! ss.empty())
        shapes = {{rs.empty() ? 2 : rs[0], ss.empty() ? 2 : ss[0]}};
    for (auto [r, s] : shapes)
        for (auto n : run.grid("n", {1, 2, 3, 4}))
            run.record("formation-ex-ordered-unordered", param({{"r", r}, {"s", s}, {"n", n}}), [&](auto & expected, auto & computed) {
                auto unordered = ex_sequence({FormationTarget{r, s, std::nullopt}, n, ExtremalMode::UnorderedSequence}, run.limits());
                auto ordered = ex_sequence({ordered_formation_family(r, s, run.limits().enumeration_cap), n, ExtremalMode::OrderedSequence}, run.limits());
                expected = "ex_u=" + std::to_string(unordered.value);
                computed = "ex_o=" + std::to_string(ordered.value);
                return unordered.value == ordered.value;
            });
}

void check_fw_alternation(Runner & run)
{
    for (auto k : run.grid("k", {2, 3}))
        for (auto t : run.grid("t", {2, 3}))
            run.record("fw-alternation", param({{"k", k}, {"t", t}}), [&](auto & expected, auto & computed) {
                auto family = monotone_pair(k, t, 1, Semantics::Unordered);
                PatternFamily single({family[0]}, Semantics::Unordered);
                auto answer = fw(single, run.engine());
                expected = std::to_string(2 * t - 1);
                computed = std::to_string(answer.width);
                return answer.width == 2 * t - 1 && replay_answer(single, answer);
            });
}

void check_fw_pair(Runner & run)
{
    for (auto k : run.grid("k", {2, 3}))
        for (auto t : run.grid("t", {2, 3}))
            run.record("fw-pair", param({{"k", k}, {"t", t}}), [&](auto & expected, auto & computed) {
                auto family = monotone_pair(k, t);
                auto answer = fw(family, run.engine());
                expected = std::to_string(2 * t - 1);
                computed = std::to_string(answer.width);
                return answer.width == 2 * t - 1 && replay_answer(family, answer);
            });
}

void check_pair_witness(Runner & run)
{
    for (auto k : run.grid("k", {2, 3}))
        for (auto t : run.grid("t", {2, 3}))
            run.record("pair-witness", param({{"k", k}, {"t", t}}), [&](auto & expected, auto & computed) {
                auto pattern = avoidance_witness_pair(k, t, true);
                auto matrix_ok = verify_pair_lower_bound(k, t);
                expected = "avoids (sequence, matrix)";
                computed = pattern.to_string() + (matrix_ok ? " avoids (sequence, matrix)" : " matrix contains");
                return matrix_ok && pattern.size() == static_cast<std::size_t>(2 * t - 2);
            });
}

void check_pair_upper(Runner & run)
{
    for (auto t : run.grid("t", {2, 3})) {
        int k = 2;
        auto s = 2 * t - 1;
        run.record("pair-upper-mechanism", param({{"k", k}, {"t", t}}), [&](auto & expected, auto & computed) {
            auto gamma = static_cast<int>(es_gamma(k, s));
            auto family = monotone_pair(k, t);
            FormationStream stream(gamma, s, run.limits().enumeration_cap);
            Formation f;
            std::uint64_t missing = 0;
            while (stream.next(f))
                if (! contains_family(f.to_sequence(), family))
                    ++missing;
            expected = "0 avoiding (" + std::to_string(gamma) + "," + std::to_string(s) + ")-formations";
            computed = std::to_string(missing) + " avoiding of " + std::to_string(stream.size());
            return missing == 0;
        });
        for (auto n : run.grid("n", t == 2 ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{1, 2, 3}))
            run.record("pair-upper-mechanism", param({{"k", k}, {"t", t}, {"n", n}}), [&](auto & expected, auto & computed) {
                auto gamma = static_cast<int>(es_gamma(k, s));
                auto pair = ex_sequence({monotone_pair(k, t), n, ExtremalMode::OrderedSequence}, run.limits());
                auto zeta = ex_sequence({FormationTarget{gamma, s, std::nullopt}, n, ExtremalMode::UnorderedSequence}, run.limits());
                expected = "<= " + std::to_string(zeta.value);
                computed = std::to_string(pair.value);
                return pair.value <= zeta.value;
            });
    }
}

void check_dfw_red(Runner & run)
{
    // The doubled pair reduces to the plain pair. dfw quantifies over r-tuple
    // formations for some r; r = j = 3 is the least r at which s = 3 suffices.
    run.record("dfw-red", param({{"k", 2}, {"t", 2}, {"j", 2}}), [&](auto & expected, auto & computed) {
        auto family = monotone_pair(2, 2, 2);
        auto via_red = fw(red(family), run.engine()).width;
        auto width = dfw(family, run.engine()).width;
        auto cap = run.limits().enumeration_cap;
        // Every 3-tuple (3,3)-formation restricts on letters {a<b} to a 3-tuple (2,3)-formation.
        auto contains_at_width = dfw_direct_check(family, 2, width, 3, cap, run.engine().threads);
        auto avoids_below = ! dfw_direct_check(family, 3, width - 1, 3, cap, run.engine().threads)
            && ! dfw_direct_check(family, 2, width - 1, 2, cap, run.engine().threads);
        expected = "dfw=fw(red)=3, r-tuple check: contains at 3, avoider at 2";
        computed = "dfw=" + std::to_string(width) + " fw(red)=" + std::to_string(via_red) + ", contains at " + std::to_string(width)
            + "=" + yes_no(contains_at_width) + ", avoider at " + std::to_string(width - 1) + "=" + yes_no(avoids_below);
        return width == via_red && width == 3 && contains_at_width && avoids_below;
    });
}

void check_doubled_pair(Runner & run)
{
    for (auto k : run.grid("k", {2, 3}))
        for (auto t : run.grid("t", {2, 3}))
            for (auto j : run.grid("j", {2}))
                run.record("doubled-pair", param({{"k", k}, {"t", t}, {"j", j}}), [&](auto & expected, auto & computed) {
                    auto answer = dfw(monotone_pair(k, t, j), run.engine());
                    expected = std::to_string(2 * t - 1);
                    computed = std::to_string(answer.width);
                    return answer.width == 2 * t - 1;
                });
}

void check_es(Runner & run)
{
    std::vector<std::pair<int, int>> shapes = {{2, 2}, {3, 2}, {2, 3}};
    auto rs = run.grid("r", {});
    auto ss = run.grid("s", {});
    if (! rs.empty() || ! ss.empty())
        shapes = {{rs.empty() ? 2 : rs[0], ss.empty() ? 2 : ss[0]}};
    for (auto [r, s] : shapes)
        run.record("es-lemma", param({{"r", r}, {"s", s}}), [&](auto & expected, auto & computed) {
            auto gamma = es_gamma(r, s);
            auto count = formation_count(static_cast<int>(gamma), s);
            auto ok = check_es_lemma(r, s, run.limits().enumeration_cap, run.engine().threads);
            expected = "all " + std::to_string(count) + " (" + std::to_string(gamma) + "," + std::to_string(s) + ")-formations";
            computed = ok ? expected : "counterexample found";
            return ok;
        });
}

void check_mfw_pair(Runner & run)
{
    for (auto k : run.grid("k", {2, 3}))
        for (auto t : run.grid("t", {2, 3}))
            run.record("mfw-pair", param({{"k", k}, {"t", t}}), [&](auto & expected, auto & computed) {
                auto family = identity_pair(k, t);
                auto answer = mfw(family, run.engine());
                expected = std::to_string(2 * t - 1);
                computed = std::to_string(answer.width);
                return answer.width == 2 * t - 1 && replay_answer(family, answer);
            });
}

void check_linear_probe(Runner & run)
{
    auto n_max = run.grid("n", {4})[0];
    for (auto k : run.grid("k", {2}))
        run.record("linear-probe", param({{"k", k}, {"n_max", n_max}}), [&](auto & expected, auto & computed) {
            auto family = identity_pair(k, 2);
            auto probe = linearity_probe(family, n_max, run.limits());
            auto bound = 2 * family[0].cols() - 3;
            std::string values;
            for (auto & row : probe.rows)
                values += (values.empty() ? "" : ",") + std::to_string(row.value);
            expected = "monotone, differences <= " + std::to_string(bound);
            computed = values + " (max difference " + std::to_string(probe.max_difference) + ")";
            return probe.monotone && probe.max_difference <= bound;
        });
}

void check_dmfw(Runner & run)
{
    for (auto k : run.grid("k", {2, 3}))
        for (auto t : run.grid("t", {2, 3}))
            for (auto j : run.grid("j", {2}))
                run.record("dmfw-red", param({{"k", k}, {"t", t}, {"j", j}}), [&](auto & expected, auto & computed) {
                    auto family = identity_pair(k, t, j);
                    auto width = dmfw(family, run.engine()).width;
                    std::vector<Matrix01> reduced;
                    for (auto & m : family.members())
                        reduced.push_back(red_matrix(m));
                    auto via_red = mfw(MatrixFamily(reduced), run.engine()).width;
                    expected = std::to_string(2 * t - 1);
                    computed = std::to_string(width);
                    bool ok = width == via_red && width == 2 * t - 1;
                    if (k == 2 && t == 2) {
                        auto cap = run.limits().enumeration_cap;
                        auto at = dmfw_direct_check(family, k, width, j, cap);
                        auto below = dmfw_direct_check(family, k, width - 1, j, cap);
                        computed += ", " + std::to_string(j) + "-fat check: contains at " + std::to_string(width) + "=" + yes_no(at)
                            + ", avoider at " + std::to_string(width - 1) + "=" + yes_no(! below);
                        expected += ", " + std::to_string(j) + "-fat check: contains at 3=true, avoider at 2=true";
                        ok = ok && at && ! below;
                    }
                    return ok;
                });
}

// All sequences of the given length over 1..letters that use every letter of 1..m (order types).
auto order_types(int length, int letters) -> std::vector<Sequence>
{
    std::vector<Sequence> out;
    std::vector<Letter> current(static_cast<std::size_t>(length), 1);
    while (true) {
        Sequence s(current);
        if (normalize_ordered(s) == s)
            out.push_back(s);
        int i = length - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == letters)
            current[static_cast<std::size_t>(i--)] = 1;
        if (i < 0)
            break;
        ++current[static_cast<std::size_t>(i)];
    }
    return out;
}

void check_ordered_single(Runner & run)
{
    for (auto length : run.grid("s", {1, 2, 3, 4, 5}))
        run.record("ordered-single", param({{"length", length}}), [&](auto & expected, auto & computed) {
            auto patterns = order_types(length, length);
            std::size_t agree = 0;
            for (auto & u : patterns)
                if (fw(PatternFamily({u}, Semantics::Ordered), run.engine()).width == length)
                    ++agree;
            expected = "fw=" + std::to_string(length) + " for " + std::to_string(patterns.size()) + " patterns";
            computed = "fw=" + std::to_string(length) + " for " + std::to_string(agree) + " patterns";
            return agree == patterns.size();
        });
}

void check_ordered_single_matrix(Runner & run)
{
    for (auto length : run.grid("s", {1, 2, 3, 4}))
        run.record("ordered-single-matrix", param({{"length", length}}), [&](auto & expected, auto & computed) {
            auto patterns = order_types(length, length);
            std::size_t agree = 0;
            for (auto & u : patterns)
                if (mfw(MatrixFamily({chi(u)}), run.engine()).width == length)
                    ++agree;
            expected = "mfw=" + std::to_string(length) + " for " + std::to_string(patterns.size()) + " patterns";
            computed = "mfw=" + std::to_string(length) + " for " + std::to_string(agree) + " patterns";
            return agree == patterns.size();
        });
}

void check_general_bound(Runner & run)
{
    for (auto word : {"ab", "abab", "abc"})
        for (auto n : run.grid("n", {1, 2, 3}))
            run.record("general-bound", std::string("u=") + word + " n=" + std::to_string(n), [&](auto & expected, auto & computed) {
                auto bound = general_bound(parse_sequence(word), n, run.limits());
                expected = "<= " + std::to_string(bound.rhs);
                computed = std::to_string(bound.lhs);
                return bound.holds();
            });
}

void check_chi(Runner & run)
{
    auto max_host = run.grid("n", {6})[0];
    run.record("chi-correspondence", param({{"host_length", max_host}, {"pattern_length", 4}}), [&](auto & expected, auto & computed) {
        std::vector<Sequence> hosts, patterns;
        for (int len = 1; len <= max_host; ++len)
            for (auto & s : order_types(len, std::min(len, 3)))
                hosts.push_back(s);
        for (int len = 1; len <= 4; ++len)
            for (auto & s : order_types(len, len))
                patterns.push_back(s);
        std::uint64_t pairs = 0, agree = 0;
        for (auto & a : hosts) {
            auto ma = chi(a);
            for (auto & b : patterns) {
                ++pairs;
                if (contains_ordered(a, b) == contains_matrix(ma, chi(b)))
                    ++agree;
            }
        }
        expected = std::to_string(pairs) + " agreeing pairs";
        computed = std::to_string(agree) + " agreeing pairs";
        return agree == pairs;
    });
}

const std::map<std::string, std::function<void(Runner &)>> runners = {
    {"formation-ex-ordered-unordered", check_formation_ex},
    {"fw-alternation", check_fw_alternation},
    {"fw-pair", check_fw_pair},
    {"pair-witness", check_pair_witness},
    {"pair-upper-mechanism", check_pair_upper},
    {"dfw-red", check_dfw_red},
    {"doubled-pair", check_doubled_pair},
    {"es-lemma", check_es},
    {"mfw-pair", check_mfw_pair},
    {"linear-probe", check_linear_probe},
    {"dmfw-red", check_dmfw},
    {"ordered-single", check_ordered_single},
    {"ordered-single-matrix", check_ordered_single_matrix},
    {"general-bound", check_general_bound},
    {"chi-correspondence", check_chi},
};

} // namespace

auto verify_checks() -> const std::vector<CheckInfo> &
{
    return infos;
}

auto run_verify(const VerifyOptions & options) -> VerifyReport
{
    if (options.check && ! runners.contains(*options.check))
        throw InvalidArgument("unknown check id '" + *options.check + "'");
    Runner run(options);
    for (auto & info : infos)
        if (! options.check || *options.check == info.id)
            runners.at(info.id)(run);
    return run.take();
}

} // namespace formwidth
