#include "rotns/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

namespace rotns {

namespace {
constexpr double kSupportLo = 0.75;
constexpr double kSupportHi = 8.0 / 3.0;

double bump(double r, double lo, double hi) {
    if (r <= lo || r >= hi) return 0.0;
    return std::exp(-1.0 / ((r - lo) * (hi - r)));
}
}  // namespace

void FourierBesovParams::validate() const {
    if (!(p >= 1.0)) throw std::invalid_argument("FourierBesovParams: p must be >= 1");
    if (!(q >= 1.0)) throw std::invalid_argument("FourierBesovParams: q must be >= 1");
    if (!std::isfinite(s)) throw std::invalid_argument("FourierBesovParams: s must be finite");
}

DyadicPartition DyadicPartition::build(const FrequencyGrid& grid) {
    double r_min = grid.min_nonzero_radius();
    double r_max = grid.max_radius();
    int j_min = static_cast<int>(std::floor(std::log2(r_min * kSupportLo))) - 1;
    int j_max = static_cast<int>(std::ceil(std::log2(r_max * kSupportHi))) + 1;
    return DyadicPartition(j_min, j_max, kSupportLo, kSupportHi);
}

DyadicPartition DyadicPartition::build_widened(const FrequencyGrid& grid, double widen) {
    if (!(widen > 0.0))
        throw std::invalid_argument("DyadicPartition: widen factor must be positive");
    DyadicPartition p = build(grid);
    p.lo_ = kSupportLo / widen;
    p.hi_ = kSupportHi * widen;
    // the normalizer keeps the nominal support, so a widened bump no
    // longer sums to one across blocks
    return p;
}

double DyadicPartition::chi(double r) const { return bump(r, lo_, hi_); }

double DyadicPartition::chi_dyadic_sum(double r) const {
    // only j with 2^-j r inside the nominal support contribute
    int ja = static_cast<int>(std::floor(std::log2(r / kSupportHi))) - 1;
    int jb = static_cast<int>(std::ceil(std::log2(r / kSupportLo))) + 1;
    double s = 0.0;
    for (int j = ja; j <= jb; ++j)
        s += bump(std::ldexp(r, -j), kSupportLo, kSupportHi);
    return s;
}

double DyadicPartition::profile(double r) const {
    if (r <= 0.0) return 0.0;
    double c = chi(r);
    if (c == 0.0) return 0.0;
    return c / chi_dyadic_sum(r);
}

double DyadicPartition::block_multiplier(int j, double r) const {
    if (r <= 0.0) return 0.0;
    return profile(std::ldexp(r, -j));
}

double DyadicPartition::lowpass_multiplier(int j, double r) const {
    if (r <= 0.0) return 0.0;
    int ka = static_cast<int>(std::floor(std::log2(r / hi_))) - 1;
    int kb = static_cast<int>(std::ceil(std::log2(r / lo_))) + 1;
    double s = 0.0;
    for (int k = ka; k <= std::min(kb, j - 1); ++k) s += block_multiplier(k, r);
    return s;
}

namespace {

template <typename Field>
Field multiplied_by_radial(const Field& f, const DyadicPartition& part,
                           double (DyadicPartition::*mult)(int, double) const, int j) {
    Field out = f;
    const FrequencyGrid& g = f.grid();
    std::vector<double> w(g.size());
    for (std::size_t m = 0; m < g.size(); ++m)
        w[m] = (part.*mult)(j, norm(g.wavevector(m)));
    if constexpr (std::is_same_v<Field, SpectralField>) {
        for (std::size_t m = 0; m < g.size(); ++m) out[m] *= w[m];
    } else {
        for (int c = 0; c < 3; ++c)
            for (std::size_t m = 0; m < g.size(); ++m) out.component(c)[m] *= w[m];
    }
    return out;
}

}  // namespace

SpectralField block_project(int j, const SpectralField& f, const DyadicPartition& part) {
    if (j < part.j_min() || j > part.j_max()) return SpectralField(f.grid());
    return multiplied_by_radial(f, part, &DyadicPartition::block_multiplier, j);
}

SpectralVectorField block_project(int j, const SpectralVectorField& f,
                                  const DyadicPartition& part) {
    if (j < part.j_min() || j > part.j_max()) return SpectralVectorField(f.grid());
    return multiplied_by_radial(f, part, &DyadicPartition::block_multiplier, j);
}

SpectralField low_pass(int j, const SpectralField& f, const DyadicPartition& part) {
    if (j - 1 < part.j_min()) return SpectralField(f.grid());
    return multiplied_by_radial(f, part, &DyadicPartition::lowpass_multiplier, j);
}

SpectralVectorField low_pass(int j, const SpectralVectorField& f,
                             const DyadicPartition& part) {
    if (j - 1 < part.j_min()) return SpectralVectorField(f.grid());
    return multiplied_by_radial(f, part, &DyadicPartition::lowpass_multiplier, j);
}

BonyDecomposition bony_decompose(const SpectralField& f, const SpectralField& g,
                                 const DyadicPartition& part,
                                 const FourierTransform& transform) {
    f.check_same_grid(g);
    double scale = std::max(f.max_abs(), g.max_abs());
    if (energy_beyond_cutoff(f) > 1e-13 * scale || energy_beyond_cutoff(g) > 1e-13 * scale)
        throw std::invalid_argument(
            "bony_decompose: input has energy beyond the dealias cutoff");

    BonyDecomposition out{SpectralField(f.grid()), SpectralField(f.grid()),
                          SpectralField(f.grid())};
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
        SpectralField df = block_project(j, f, part);
        SpectralField dg = block_project(j, g, part);
        out.low_high += multiply(low_pass(j - 1, f, part), dg, transform, true);
        out.high_low += multiply(low_pass(j - 1, g, part), df, transform, true);

        SpectralField dtilde_g = block_project(j - 1, g, part);
        dtilde_g += dg;
        dtilde_g += block_project(j + 1, g, part);
        out.resonant += multiply(df, dtilde_g, transform, true);
    }
    return out;
}

namespace {

double combine_block_norms(const std::vector<double>& block_norms, int j_min, double s,
                           double q) {
    if (q == kInf) {
        double m = 0.0;
        for (std::size_t b = 0; b < block_norms.size(); ++b) {
            int k = j_min + static_cast<int>(b);
            m = std::max(m, std::exp2(k * s) * block_norms[b]);
        }
        return m;
    }
    double acc = 0.0;
    for (std::size_t b = 0; b < block_norms.size(); ++b) {
        int k = j_min + static_cast<int>(b);
        acc += std::pow(std::exp2(k * s) * block_norms[b], q);
    }
    return std::pow(acc, 1.0 / q);
}

template <typename MagAt>
double fb_norm_impl(const FrequencyGrid& grid, MagAt mag_at,
                    const FourierBesovParams& params, const DyadicPartition& part) {
    params.validate();
    const double vol = grid.cell_volume();
    std::vector<double> block_norms;
    block_norms.reserve(part.j_max() - part.j_min() + 1);
    for (int k = part.j_min(); k <= part.j_max(); ++k) {
        double acc = 0.0;
        for (std::size_t m = 1; m < grid.size(); ++m) {
            double w = part.block_multiplier(k, norm(grid.wavevector(m)));
            if (w == 0.0) continue;
            double a = w * mag_at(m);
            if (!std::isfinite(a))
                throw std::invalid_argument("fb_norm: non-finite amplitude");
            if (params.p == kInf)
                acc = std::max(acc, a);
            else
                acc += std::pow(a, params.p) * vol;
        }
        block_norms.push_back(params.p == kInf ? acc : std::pow(acc, 1.0 / params.p));
    }
    return combine_block_norms(block_norms, part.j_min(), params.s, params.q);
}

}  // namespace

double lp_lattice_norm(const SpectralField& f, double p) {
    const double vol = f.grid().cell_volume();
    double acc = 0.0;
    for (std::size_t m = 0; m < f.size(); ++m) {
        double a = std::abs(f[m]);
        if (p == kInf)
            acc = std::max(acc, a);
        else
            acc += std::pow(a, p) * vol;
    }
    return p == kInf ? acc : std::pow(acc, 1.0 / p);
}

double lp_lattice_norm(const SpectralVectorField& f, double p) {
    const double vol = f.grid().cell_volume();
    double acc = 0.0;
    for (std::size_t m = 0; m < f.size(); ++m) {
        double a = abs(f.mode(m));
        if (p == kInf)
            acc = std::max(acc, a);
        else
            acc += std::pow(a, p) * vol;
    }
    return p == kInf ? acc : std::pow(acc, 1.0 / p);
}

double fb_norm(const SpectralField& f, const FourierBesovParams& params,
               const DyadicPartition& part) {
    return fb_norm_impl(
        f.grid(), [&](std::size_t m) { return std::abs(f[m]); }, params, part);
}

double fb_norm(const SpectralVectorField& f, const FourierBesovParams& params,
               const DyadicPartition& part) {
    return fb_norm_impl(
        f.grid(), [&](std::size_t m) { return abs(f.mode(m)); }, params, part);
}

}  // namespace rotns
