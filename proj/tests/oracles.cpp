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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle
{
    double gain(const weights &w, double x)
    {
        cd acc = 0.0;
        for (std::size_t n = 0; n < w.size(); ++n)
            acc += std::exp(cd(0.0, -pi * static_cast<double>(n) * x)) * w[n];
        return std::norm(acc);
    }

    weights matched(int n, double s)
    {
        weights w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            w[static_cast<std::size_t>(i)] = std::exp(cd(0.0, pi * i * s)) / std::sqrt(static_cast<double>(n));
        return w;
    }

    double wideband_min(const weights &w, double fc, double b, double phi, int k)
    {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < k; ++i)
        {
            const double f = -b / 2.0 + b * i / (k - 1.0);
            m = std::min(m, gain(w, (1.0 + f / fc) * std::sin(phi)));
        }
        return m;
    }

    double codebook_best(const std::vector<weights> &beams, double fc, double b, double phi, int k)
    {
        double best = -1.0;
        for (const auto &w : beams)
            best = std::max(best, wideband_min(w, fc, b, phi, k));
        return best;
    }

    double dirichlet_sq(int n, double x)
    {
        const double r = std::remainder(x, 2.0 * pi);
        if (r == 0.0)
            return static_cast<double>(n) * n;
        const double v = std::sin(n * x / 2.0) / std::sin(x / 2.0);
        return v * v;
    }

    double narrowband_closed_form(double fc, double b, int n, int l)
    {
        if (!(n < 4.0 * fc * l / (2.0 * fc + b * l)))
            return 0.0;
        const double a = pi * (2.0 * fc + b * l) / (4.0 * fc * l);
        const double v = std::sin(n * a) / (std::sqrt(static_cast<double>(n)) * std::sin(a));
        return v * v;
    }

    double narrowband_b0(int n, int l)
    {
        const double v = std::sin(n * pi / (2.0 * l)) / (std::sqrt(static_cast<double>(n)) * std::sin(pi / (2.0 * l)));
        return v * v;
    }

    double aligned_closed_form(double fc, double b, int n, double phi_m, double phi)
    {
        const double u = fc * std::abs(std::sin(phi_m) - std::sin(phi)) + b / 2.0 * std::abs(std::sin(phi));
        if (u == 0.0)
            return n;
        const double a = pi / (2.0 * fc) * u;
        const double v = std::sin(n * a) / (std::sqrt(static_cast<double>(n)) * std::sin(a));
        return v * v;
    }

    double tan_2x_root(double tol)
    {
        // g(x) = sin x - 2x cos x: g > 0 just below pi/2, g < 0 near 0+.
        double lo = 0.5, hi = pi / 2.0 - 1e-12;
        while (hi - lo > tol)
        {
            const double mid = 0.5 * (lo + hi);
            if (std::sin(mid) - 2.0 * mid * std::cos(mid) > 0.0)
                hi = mid;
            else
                lo = mid;
        }
        return 0.5 * (lo + hi);
    }

    namespace
    {
        std::vector<double> sines_for(double fc, double b, int l, double width)
        {
            const double up = (fc + b / 2.0) / fc, down = (fc - b / 2.0) / fc;
            std::vector<double> s{-1.0};
            for (int i = 0; i < l; ++i)
            {
                const double prev = s.back();
                const double lower_edge = (prev < 0.0 ? up : down) * prev;
                const double upper_edge = lower_edge + width;
                s.push_back(upper_edge <= 0.0 ? upper_edge / down : upper_edge / up);
            }
            return s;
        }
    }

    std::pair<double, std::vector<double>> zone_sines(double fc, double b, int l)
    {
        // Regula falsi (Illinois) on width -> last sine - 1; the map is piecewise linear.
        double a = 1e-6, c = 4.0;
        double fa = sines_for(fc, b, l, a).back() - 1.0, fcv = sines_for(fc, b, l, c).back() - 1.0;
        int side = 0;
        double x = a;
        for (int it = 0; it < 500; ++it)
        {
            x = (a * fcv - c * fa) / (fcv - fa);
            const double fx = sines_for(fc, b, l, x).back() - 1.0;
            if (fx == 0.0 || std::abs(c - a) < 1e-17)
                break;
            if ((fx > 0.0) == (fcv > 0.0))
            {
                c = x, fcv = fx;
                if (side == -1)
                    fa /= 2.0;
                side = -1;
            }
            else
            {
                a = x, fa = fx;
                if (side == 1)
                    fcv /= 2.0;
                side = 1;
            }
        }
        return {x, sines_for(fc, b, l, x)};
    }

    double uniform(std::mt19937_64 &rng, double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
}
