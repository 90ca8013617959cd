#pragma once

#include "spincode/su2.hpp"

namespace spincode {

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j3 m3> by the Racah closed
/// form with log-factorial accumulation. Quantum numbers passed doubled.
double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3);

/// <j m; l 0 | j m> with l integer (passed undoubled), m doubled.
double clebsch_gordan_j_l0(SpinJ spin, int l, int tm);

/// Memoized <j m; l 0 | j m> for l = 0..2j.
struct CGCache {
    SpinJ spin;
    std::vector<std::vector<double>> values;  // [l][m index, m descending]

    explicit CGCache(SpinJ s);
    double at(int l, std::size_t m_index) const { return values[l][m_index]; }
};

/// Stratonovich-Weyl kernel at direction n_hat:
/// Delta = D(g) [sum_m sum_l ((2l+1)/(2j+1)) CG(j,l,m) |m><m|] D(g)^dag
/// with any g rotating z-hat onto n_hat. Hermitian, trace 1.
CMatrix wigner_kernel(SpinJ spin, const std::array<double, 3>& n_hat,
                      const CGCache& cache);
CMatrix wigner_kernel(SpinJ spin, const std::array<double, 3>& n_hat);

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// W(theta, phi) sampled on Gauss-Legendre nodes in cos theta (descending
/// theta-major rows) times a uniform phi grid. Integrals taken with these
/// weights are exact for the band-limited spin-j integrands.
struct WignerGrid {
    std::size_t n_theta = 0, n_phi = 0;
    std::vector<double> thetas, theta_weights;  // weights for d(cos theta)
    std::vector<double> phis;
    std::vector<double> values;  // row-major [theta][phi]

    double at(std::size_t t, std::size_t p) const { return values[t * n_phi + p]; }
    /// integral of the sampled function over the sphere
    double integrate() const;
    double integrate_product(const WignerGrid& other) const;
};

/// n_theta / n_phi are minimum counts; raised to 2j+1 / 4j+1 when below.
WignerGrid wigner_function(const CMatrix& op, SpinJ spin,
                           std::size_t n_theta = 0, std::size_t n_phi = 0);

struct PostulateReport {
    double standardization = 0;  // |4 pi tr A - (2j+1) int W_A|
    double traciality = 0;       // |4 pi tr(AB) - (2j+1) int W_A W_B|
    double reality = 0;          // max |Im W_A| over the grid, Hermitian A
    double covariance = 0;       // max |W_{DAD^dag}(n) - W_A(R^-1 n)|
    double self_duality = 0;     // max |A - (2j+1)/(4 pi) int W_A Delta|

    double worst() const;
};

/// Checks all five postulates over the given Hermitian sample operators,
/// with rotations for the covariance check drawn from the given seed.
PostulateReport verify_postulates(SpinJ spin, const std::vector<CMatrix>& sample_ops,
                                  unsigned seed = 1);

}  // namespace spincode
