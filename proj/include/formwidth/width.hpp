#pragma once

#include <formwidth/formations.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace formwidth {

struct EngineOptions
{
    unsigned threads = 1;
    /// Largest width tried before giving up with Unresolved.
    int width_ceiling = 64;
    /// Skip Asc/Desc-swapped patterns when the family is closed under reversal.
    bool symmetry_pruning = true;
};

template <typename Certificate>
struct PatternCertificate
{
    BinaryPattern pattern;
    std::size_t member;
    Certificate embedding;
};

/// Result of a width computation.
///
/// `avoider` is a binary pattern of length width - 1 whose formation on
/// `host_size` letters (rows) avoids every member. `embeddings` holds one
/// certificate per binary pattern of length `width`, in enumeration order.
template <typename Certificate>
struct WidthAnswer
{
    int width = 0;
    int host_size = 0;
    std::optional<BinaryPattern> avoider;
    std::vector<PatternCertificate<Certificate>> embeddings;
};

} // namespace formwidth
