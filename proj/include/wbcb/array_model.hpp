// SPDX-License-Identifier: Apache-2.0
//
// wbcb - wideband analog beamforming codebook design
// Copyright (C) 2026 The wbcb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WBCB_ARRAY_MODEL_HPP
#define WBCB_ARRAY_MODEL_HPP

#include <complex>
#include <cstddef>
#include <numbers>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wbcb
{
    using cplx = std::complex<double>;
    using cvec = Eigen::VectorXcd;
    using cmat = Eigen::MatrixXcd;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // m/s

    /*!MD
    # SystemConfig
    Carrier, band and array sizes shared by every stage of the design.

    - `carrier_hz` f_c, `bandwidth_hz` B with 0 <= B < 2 f_c so that both band edges are positive
    - `elements` N (half-wavelength uniform linear array), `beams` L
    - `solver_points` M, the number of composite-domain samples used by the ALM solver
    - `freq_points` size of the uniform frequency grid used for wideband minima (band edges always included)
    - `angle_points` size of the sine-uniform angle grid used for worst-case sweeps
    MD!*/
    struct SystemConfig
    {
        double carrier_hz = 140e9;
        double bandwidth_hz = 10e9;
        int elements = 16;
        int beams = 32;
        int solver_points = 32;
        int freq_points = 257;
        int angle_points = 4096;

        // Defaults for the remaining fields; M = 2N.
        static SystemConfig make(double carrier_hz, double bandwidth_hz, int elements, int beams);

        // Throws config_error when an invariant is violated.
        void validate() const;

        // Non-fatal remarks (currently only L < N).
        std::vector<std::string> warnings() const;

        double half_band_ratio() const { return bandwidth_hz / (2.0 * carrier_hz); }
    };

    // Constant-modulus analog beam, |w(i)| = 1/sqrt(N).
    class BeamVector
    {
    public:
        static constexpr double modulus_tolerance = 1e-12;

        BeamVector() = default;

        // Throws config_error if any entry violates the modulus constraint.
        static BeamVector from_weights(cvec weights);

        // w(i) = exp(j phases[i]) / sqrt(N)
        static BeamVector from_phases(std::span<const double> phases);

        // Nearest feasible beam in Euclidean norm; arg(0) is taken as 0.
        static BeamVector project(const cvec &v);

        const cvec &weights() const noexcept { return w_; }
        int size() const noexcept { return static_cast<int>(w_.size()); }
        cplx operator[](int i) const { return w_(i); }

        bool operator==(const BeamVector &) const = default;

    private:
        explicit BeamVector(cvec w) : w_(std::move(w)) {}
        cvec w_;
    };

    // h(x) = [1, e^{j pi x}, ..., e^{j pi (N-1) x}]
    struct SteeringVector
    {
        cvec entries;
        double composite = 0.0;
    };

    SteeringVector steering_composite(int elements, double composite);

    // Composite variable (1 + f/f_c) sin(phi).
    double composite_variable(const SystemConfig &cfg, double freq_hz, double phi);

    SteeringVector steering(const SystemConfig &cfg, double freq_hz, double phi);

    // |h(x)^H w|^2
    double pattern_gain(const BeamVector &w, double composite);

    double beam_gain(const SystemConfig &cfg, double freq_hz, double phi, const BeamVector &w);

    // Baseband frequencies of the wideband grid: freq_points uniform samples of [-B/2, B/2].
    std::vector<double> frequency_grid(const SystemConfig &cfg);

    // Minimum of beam_gain over the frequency grid (f = 0 is always part of the minimum).
    double wideband_beam_gain(const SystemConfig &cfg, double phi, const BeamVector &w);

    struct CodebookGain
    {
        double gain = 0.0;
        std::size_t best_index = 0; // zero-based, lowest index wins ties
    };

    CodebookGain codebook_gain(const SystemConfig &cfg, double phi, std::span<const BeamVector> beams);

    // Packs a set of beams for repeated wideband evaluation at many angles.
    class BeamBank
    {
    public:
        BeamBank(const SystemConfig &cfg, std::span<const BeamVector> beams);

        std::size_t size() const noexcept { return count_; }

        // Wideband gain of one beam at phi.
        double wideband_gain(double phi, std::size_t index) const;

        // Best beam at phi. When `assigned` is non-null, also returns the wideband gain of those
        // beams in `assigned_gain` (same order).
        CodebookGain best(double phi, std::span<const std::size_t> assigned = {},
                          std::vector<double> *assigned_gain = nullptr) const;

    private:
        struct AngleContext;
        struct Steering
        {
            bool on = false;
            double x0 = 0.0, amp2 = 0.0;
            cplx p1, pn; // exp(j pi x0 / 2), exp(j N pi x0 / 2)
        };
        static constexpr double steering_tolerance = 1e-13;

        static Steering detect_steering(const cvec &w);
        double steering_value(const Steering &st, cplx u, cplx un, double x) const;
        double steering_point(const AngleContext &ctx, const Steering &st, std::size_t slot) const;
        double scan_steering(const AngleContext &ctx, const Steering &st, double floor, double center) const;
        AngleContext context(double phi) const;
        double center_gain(const AngleContext &ctx, std::size_t index) const;
        double scan(const AngleContext &ctx, std::size_t index, double floor,
                    double center = std::numeric_limits<double>::quiet_NaN()) const;

        int n_ = 0;
        std::size_t count_ = 0;
        int freq_points_ = 2;
        double half_band_ratio_ = 0.0;
        std::vector<double> re_, im_;
        std::vector<Steering> steer_;
    };

    // Free-space amplitude with medium absorption, c/(4 pi f_c d) exp(-kappa d / 2).
    double path_loss(double carrier_hz, double distance_m, double absorption_per_m);

    // Delay spread (N-1)|sin phi|/(2 f_c) of a half-wavelength ULA.
    double delay_spread(const SystemConfig &cfg, double phi);

    // Cyclic-prefix length that must be strictly exceeded to remove ISI, (N-1)/(2 f_c).
    double min_cyclic_prefix(const SystemConfig &cfg);

    // |sum_{n=1..N} e^{j(n-1)x}|^2 = [sin(Nx/2)/sin(x/2)]^2, N^2 at multiples of 2 pi.
    double dirichlet_power(int elements, double x);
}

#endif
