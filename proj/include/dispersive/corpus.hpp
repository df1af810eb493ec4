#pragma once

#include "dispersive/field.hpp"

#include <cstdint>
#include <vector>

namespace dispersive {

inline constexpr std::uint64_t default_corpus_seed = 0x5EED;
inline constexpr std::size_t default_corpus_size = 20;

/// Closed-form corpus member p(x - x0) exp(-(x - x0)^2 / (2 sigma^2)) exp(i(kappa x + phase))
/// with a cubic polynomial p. Defined on the whole line, so the same member
/// can be sampled on any grid (refinement studies) or rescaled.
struct CorpusMember {
    double center = 0.0;
    double sigma = 1.0;
    double kappa = 0.0;
    double phase = 0.0;
    double poly[4] = {1.0, 0.0, 0.0, 0.0};

    cplx operator()(double x) const;
    /// Samples x -> member(scale * x).
    Field sample(const Grid& grid, double scale = 1.0) const;
};

struct CorpusOptions {
    std::uint64_t seed = default_corpus_seed;
    std::size_t size = default_corpus_size;
    /// Real members: kappa = phase = 0 and real coefficients.
    bool real_valued = false;
};

/// Reproducible corpus. Members are drawn from a 64-bit Mersenne twister fed
/// the seed; uniform variates come from the top 53 bits of each draw, so the
/// sequence does not depend on the standard library's distributions.
std::vector<CorpusMember> make_corpus(const CorpusOptions& options);

/// Samples every member and checks the boundary-negligibility gate; throws
/// std::invalid_argument naming the first member that fails it.
std::vector<Field> sample_corpus(const std::vector<CorpusMember>& corpus, const Grid& grid, double scale = 1.0);

/// exp(-(x - x0)^2 / w^2).
Field gaussian(const Grid& grid, double width = 1.0, double center = 0.0);

} // namespace dispersive
