#pragma once

#include <formwidth/error.hpp>
#include <formwidth/parallel.hpp>
#include <formwidth/width.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace formwidth::detail {

// Increments s from 0 and tests every binary pattern of length s. The first s
// at which every pattern hits is the width (containment by all patterns is
// monotone in s by the prefix argument).
//
// test(pattern) -> optional<pair<member, Certificate>>
// mirror(member, certificate) -> pair<member, Certificate> maps a hit for a
// pattern onto a hit for the swapped pattern; pass nullptr-like empty optional
// to disable pruning.
template <typename Certificate, typename Test, typename Mirror>
auto search_width(int host_size, Test && test, const std::optional<Mirror> & mirror, const EngineOptions & options)
    -> WidthAnswer<Certificate>
{
    using Hit = std::optional<std::pair<std::size_t, Certificate>>;

    WidthAnswer<Certificate> answer;
    answer.host_size = host_size;
    auto prune = mirror.has_value() && options.symmetry_pruning;

    for (int s = 0; s <= options.width_ceiling; ++s) {
        if (s > 62)
            break;
        auto total = std::uint64_t{1} << s;
        auto evaluated = (prune && s > 0) ? total / 2 : total;

        std::vector<Hit> hits(evaluated);
        parallel_for(evaluated, options.threads, [&](std::size_t i) {
            hits[i] = test(BinaryPattern::from_index(static_cast<std::size_t>(s), i));
        });

        std::optional<std::uint64_t> first_miss;
        for (std::uint64_t i = 0; i < evaluated; ++i)
            if (! hits[i]) {
                first_miss = i;
                break;
            }

        if (first_miss) {
            answer.avoider = BinaryPattern::from_index(static_cast<std::size_t>(s), *first_miss);
            continue;
        }

        answer.width = s;
        answer.embeddings.reserve(total);
        for (std::uint64_t i = 0; i < total; ++i) {
            auto pattern = BinaryPattern::from_index(static_cast<std::size_t>(s), i);
            if (i < evaluated) {
                answer.embeddings.push_back({std::move(pattern), hits[i]->first, std::move(hits[i]->second)});
            }
            else {
                // Swapped pattern of i is (total - 1 - i), which lies in the first half.
                auto & source = answer.embeddings[total - 1 - i];
                auto [member, cert] = (*mirror)(source.member, source.embedding);
                answer.embeddings.push_back({std::move(pattern), member, std::move(cert)});
            }
        }
        return answer;
    }

    throw Unresolved("width unresolved up to ceiling " + std::to_string(options.width_ceiling));
}

} // namespace formwidth::detail
