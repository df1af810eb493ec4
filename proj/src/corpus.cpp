#include "dispersive/corpus.hpp"

#include "dispersive/spectral.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dispersive {

cplx CorpusMember::operator()(double x) const {
    const double y = x - center;
    const double p = poly[0] + y * (poly[1] + y * (poly[2] + y * poly[3]));
    const double env = std::exp(-y * y / (2.0 * sigma * sigma));
    return p * env * std::polar(1.0, kappa * x + phase);
}

Field CorpusMember::sample(const Grid& grid, double scale) const {
    return Field::sample(grid, [&](double x) { return (*this)(scale * x); });
}

namespace {

class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : engine_(seed) {}
    double operator()(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

std::vector<CorpusMember> make_corpus(const CorpusOptions& options) {
    if (options.size == 0) throw std::invalid_argument("corpus: size must be positive");
    Uniform draw(options.seed);
    std::vector<CorpusMember> out;
    out.reserve(options.size);
    for (std::size_t i = 0; i < options.size; ++i) {
        CorpusMember m;
        m.center = draw(-1.0, 1.0);
        m.sigma = draw(0.7, 1.5);
        for (double& c : m.poly) c = draw(-1.0, 1.0);
        m.poly[0] += m.poly[0] >= 0.0 ? 0.5 : -0.5; // keeps the member away from zero
        const double kappa = draw(-2.0, 2.0);
        const double phase = draw(0.0, 2.0 * std::numbers::pi);
        if (!options.real_valued) {
            m.kappa = kappa;
            m.phase = phase;
        }
        out.push_back(m);
    }
    return out;
}

std::vector<Field> sample_corpus(const std::vector<CorpusMember>& corpus, const Grid& grid, double scale) {
    std::vector<Field> out;
    out.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Field f = corpus[i].sample(grid, scale);
        const BoundaryGate gate = boundary_gate(f);
        if (!gate.negligible) {
            std::ostringstream msg;
            msg << "corpus member " << i << " is not boundary-negligible on L=" << grid.half_length()
                << " (edge max " << gate.edge_max << " vs max " << gate.field_max << ")";
            throw std::invalid_argument(msg.str());
        }
        out.push_back(std::move(f));
    }
    return out;
}

Field gaussian(const Grid& grid, double width, double center) {
    return Field::sample(grid, [&](double x) {
        const double y = (x - center) / width;
        return std::exp(-y * y);
    });
}

} // namespace dispersive
