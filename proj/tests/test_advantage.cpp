#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "naqc/advantage.hpp"
#include "test_support.hpp"

using namespace naqc;
using naqc::testing::Rng;

namespace {

constexpr std::array<CoherenceMeasure, 3> kMeasures{kL1, kRelativeEntropy, kSkewInformation};

double h2(double x)
{
    if (x <= 0.0 || x >= 1.0)
        return 0.0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

// Qubit coherence from the Bloch vector alone.
double bloch_coherence(const Eigen::Vector3d& r, int axis, CoherenceMeasure m)
{
    // Pure conditional states carry |r| = 1 up to round-off; snap so the square roots below stay exact.
    const double len = r.norm() > 1.0 - 1e-14 ? 1.0 : r.norm();
    const double perp2 = std::max(0.0, r.squaredNorm() - r[axis] * r[axis]);
    switch (m.kind()) {
    case CoherenceKind::L1:
        return std::sqrt(perp2);
    case CoherenceKind::RelativeEntropy:
        return std::max(0.0, h2(0.5 * (1 + r[axis])) - h2(0.5 * (1 + len)));
    case CoherenceKind::SkewInformation:
        return len > 0.0 ? (1 - std::sqrt(1 - len * len)) * perp2 / (len * len) : 0.0;
    }
    return 0.0;
}

// The twelve-term average written out with explicit traces, sharing no code with naqc_value.
double brute_force(const DensityMatrix& rho, CoherenceMeasure m)
{
    const ComplexMatrix sig[3] = {pauli::x(), pauli::y(), pauli::z()};
    double total = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 2; ++a) {
            const ComplexMatrix proj = 0.5 * (pauli::identity() + (a == 0 ? 1.0 : -1.0) * sig[j]);
            const ComplexMatrix lifted = kron(proj, pauli::identity());
            const double p = (lifted * rho.matrix()).trace().real();
            if (p < 1e-12)
                continue;
            const ComplexMatrix post = lifted * rho.matrix() * lifted / p;
            Eigen::Vector3d r;
            for (int k = 0; k < 3; ++k)
                r[k] = (post * kron(pauli::identity(), sig[k])).trace().real();
            for (int i = 0; i < 3; ++i)
                if (i != j)
                    total += p * bloch_coherence(r, i, m);
        }
    return 0.5 * total;
}

DensityMatrix pauli_on_b(const DensityMatrix& rho, const ComplexMatrix& sigma)
{
    return testing::conjugate(rho, kron(pauli::identity(), sigma));
}

} // namespace

TEST_CASE("maximally entangled and maximally mixed values")
{
    const DensityMatrix phi = bell_state(BellState::PhiPlus);
    const NaqcResult l1 = naqc_value(phi, kL1);
    CHECK(l1.value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(l1.achieved);
    CHECK(l1.margin == doctest::Approx(3.0 - std::sqrt(6.0)).epsilon(1e-12));
    CHECK(l1.measure == kL1);
    for (CoherenceMeasure m : kMeasures) {
        CHECK(naqc_value(phi, m).value == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(brute_force(phi, m) == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(has_naqc(phi, m));
        const NaqcResult mixed = naqc_value(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0), m);
        CHECK(mixed.value == 0.0);
        CHECK_FALSE(mixed.achieved);
    }
}

TEST_CASE("closed-form examples")
{
    CHECK(naqc_bds_closed({1, -1, 1}, kL1) == doctest::Approx(3.0));
    for (CoherenceMeasure m : kMeasures)
        CHECK(naqc_bds_closed({0, 0, 0}, m) == 0.0);
    const double expected = 2 * (1 - h2(0.95)) + (1 - h2(0.905));
    CHECK(naqc_bds_closed({-0.9, -0.81, -0.9}, kRelativeEntropy) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(naqc_bds_closed({-0.9, -0.81, -0.9}, kRelativeEntropy) == doctest::Approx(naqc_value(bds_from_pq({0.05, 0.05}), kRelativeEntropy).value).epsilon(1e-10));
    CHECK_THROWS_AS(naqc_bds_closed({1.1, 0, 0}, kL1), std::invalid_argument);
}

TEST_CASE("(0.05, 0.05) separates l1 from the other measures")
{
    const DensityMatrix rho = bds_from_pq({0.05, 0.05});
    const NaqcResult l1 = naqc_value(rho, kL1);
    const NaqcResult re = naqc_value(rho, kRelativeEntropy);
    const NaqcResult sk = naqc_value(rho, kSkewInformation);
    CHECK(l1.value == doctest::Approx(2.61).epsilon(1e-10));
    CHECK(l1.achieved);
    CHECK(std::abs(re.value - 1.974264) <= 1e-4);
    CHECK_FALSE(re.achieved);
    CHECK(std::abs(sk.value - 1.5417) <= 1e-4);
    CHECK_FALSE(sk.achieved);
}

TEST_CASE("(1, 0.7) has no advantage under l1")
{
    const DensityMatrix rho = bds_from_pq({1.0, 0.7});
    CHECK(naqc_value(rho, kL1).value == doctest::Approx(1.8).epsilon(1e-10));
    CHECK_FALSE(has_naqc(rho, kL1));
    CHECK_FALSE(has_naqc(rho, kRelativeEntropy));
    CHECK_FALSE(has_naqc(rho, kSkewInformation));
}

TEST_CASE("brute force, library sum and closed form agree on a 21x21 grid")
{
    for (double p : testing::unit_grid(21))
        for (double q : testing::unit_grid(21)) {
            const DensityMatrix rho = bds_from_pq({p, q});
            const Eigen::Vector3d c = bds_correlations({p, q});
            for (CoherenceMeasure m : kMeasures) {
                const double value = naqc_value(rho, m).value;
                CHECK(std::abs(value - naqc_bds_closed(c, m)) <= 1e-8);
                CHECK(std::abs(value - brute_force(rho, m)) <= 1e-8);
            }
        }
}

TEST_CASE("brute force agrees with naqc_value on random states")
{
    Rng rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho = testing::random_state(4, rng);
        for (CoherenceMeasure m : kMeasures)
            CHECK(std::abs(naqc_value(rho, m).value - brute_force(rho, m)) <= 1e-8);
    }
    // Relative entropy and skew information have unbounded slope at pure states, so eps-level
    // round-off in a pure conditional state shows up at the sqrt(eps) scale.
    for (int trial = 0; trial < 500; ++trial) {
        const DensityMatrix rho = testing::random_pure_state(4, rng);
        for (CoherenceMeasure m : kMeasures)
            CHECK(std::abs(naqc_value(rho, m).value - brute_force(rho, m)) <= 1e-6);
    }
}

TEST_CASE("closed form depends only on the multiset of |c_i|")
{
    Rng rng(9);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Vector3d c{uni(rng), uni(rng), uni(rng)};
        for (CoherenceMeasure m : kMeasures) {
            const double base = naqc_bds_closed(c, m);
            CHECK(std::abs(naqc_bds_closed({c[2], c[0], c[1]}, m) - base) <= 1e-12);
            CHECK(std::abs(naqc_bds_closed({-c[0], c[1], -c[2]}, m) - base) <= 1e-12);
            CHECK(std::abs(naqc_bds_closed({c[1], -c[0], c[2]}, m) - base) <= 1e-12);
        }
    }
}

TEST_CASE("a Pauli on Bob leaves the value of a Bell-diagonal state unchanged")
{
    for (double p : testing::unit_grid(11))
        for (double q : testing::unit_grid(11)) {
            const DensityMatrix rho = bds_from_pq({p, q});
            for (const ComplexMatrix& sigma : {pauli::x(), pauli::y(), pauli::z()}) {
                const DensityMatrix flipped = pauli_on_b(rho, sigma);
                for (CoherenceMeasure m : kMeasures)
                    CHECK(std::abs(naqc_value(flipped, m).value - naqc_value(rho, m).value) <= 1e-9);
            }
        }
}

TEST_CASE("product states never achieve the advantage")
{
    Rng rng(10);
    for (int trial = 0; trial < 10000; ++trial) {
        const DensityMatrix b = testing::random_state(2, rng);
        const DensityMatrix ab = tensor(testing::random_state(2, rng), b);
        for (CoherenceMeasure m : kMeasures) {
            const NaqcResult r = naqc_value(ab, m);
            CHECK_FALSE(r.achieved);
            // The conditional states are all rho_B, so the sum reduces to the complementarity sum.
            CHECK(std::abs(r.value - complementarity_sum(b, m)) <= 1e-9);
        }
    }
}

TEST_CASE("pure product states reach the skew bound but never pass it")
{
    // Every pure qubit has skew sum exactly 2, so these sit on the boundary up to round-off.
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const DensityMatrix b = testing::random_pure_state(2, rng);
        const DensityMatrix ab = tensor(testing::random_pure_state(2, rng), b);
        for (CoherenceMeasure m : kMeasures) {
            const NaqcResult r = naqc_value(ab, m);
            CHECK(r.margin <= 1e-12);
            CHECK(std::abs(r.value - complementarity_sum(b, m)) <= 1e-6);
        }
        CHECK(std::abs(naqc_value(ab, kSkewInformation).value - 2.0) <= 1e-6);
    }
}

TEST_CASE("value is nondecreasing in visibility for Bell-diagonal states")
{
    for (double p : testing::unit_grid(11))
        for (double q : testing::unit_grid(11)) {
            const DensityMatrix rho = bds_from_pq({p, q});
            for (CoherenceMeasure m : kMeasures) {
                double previous = -1.0;
                for (int k = 0; k <= 20; ++k) {
                    const double value = naqc_value(depolarize(rho, k / 20.0), m).value;
                    CHECK(value >= previous - 1e-12);
                    previous = value;
                }
            }
        }
}

TEST_CASE("achieved agrees with the sign of the margin")
{
    const DensityMatrix phi = bell_state(BellState::PhiPlus);
    for (double v : {std::sqrt(6.0) / 3.0 - 1e-6, std::sqrt(6.0) / 3.0 + 1e-6, 0.5, 0.9}) {
        const NaqcResult r = naqc_value(depolarize(phi, v), kL1);
        CHECK(r.margin == doctest::Approx(3.0 * v - std::sqrt(6.0)).epsilon(1e-9));
        CHECK(r.achieved == (r.margin > 0.0));
        CHECK(r.achieved == (v > std::sqrt(6.0) / 3.0));
    }
}
