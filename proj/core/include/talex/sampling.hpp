#ifndef TALEX_SAMPLING_HPP
#define TALEX_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "talex/repn.hpp"

namespace talex {

/// Deterministic seeded source of numeric values: doubles are derived from
/// raw mt19937_64 output, so identical seeds give identical samples on any
/// platform.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53 mantissa bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    ComplexScalar complex_box() {
        double re = uniform(-1.0, 1.0);
        double im = uniform(-1.0, 1.0);
        return {BigFloat(re), BigFloat(im)};
    }

private:
    std::mt19937_64 engine_;
};

/// Random element of SL(2, C): a complex matrix with entries in the unit box
/// rescaled to determinant 1.
ScalarMatrix<ComplexScalar> random_sl2(SampleRng& rng);

/// Random point of the Case 1.1 stratum for T(mu p, mu q) with labels (a, b):
/// X and Y are random conjugates of the diagonal eigenvalue matrices and the
/// meridian images are random SL(2) matrices; candidates are rejected until
/// the pair condition u != 0 holds and no common eigenvector exists
/// (rank test with tolerance 1e-8).
MatrixTriple<ComplexScalar> random_case11_triple(const TorusLinkParams& params, int a, int b,
                                                 SampleRng& rng);

struct ConstancySample {
    CharacterPoint<ComplexScalar> point;
    RationalFn<ComplexScalar> reduced;
    bool polynomial = false;
};

struct ConstancyReport {
    std::vector<ConstancySample> samples;
    BigFloat max_deviation;  // max pairwise coefficient deviation after unit alignment
};

/// Computes the twisted invariant for `count` seeded Case 1.1 samples and
/// compares the reduced coefficient lists after unit alignment.
ConstancyReport local_constancy_experiment(const TorusLinkParams& params, int a, int b,
                                           int count, std::uint64_t seed);

}  // namespace talex

#endif
