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

#include "wbcb/array_model.hpp"
#include "wbcb/errors.hpp"
#include "kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wbcb
{
    namespace
    {
        void require_finite(double v, const char *name)
        {
            if (!std::isfinite(v))
                throw config_error(std::string(name) + " must be finite");
        }

        void check_angle(double phi)
        {
            require_finite(phi, "phi");
            if (phi < -pi / 2.0 || phi > pi / 2.0)
                throw config_error("phi must lie in [-pi/2, pi/2]");
        }

        void split(const cvec &w, double *re, double *im)
        {
            for (Eigen::Index i = 0; i < w.size(); ++i)
            {
                re[i] = w(i).real();
                im[i] = w(i).imag();
            }
        }
    }

    // ---------------------------------------------------------------- SystemConfig

    SystemConfig SystemConfig::make(double carrier_hz, double bandwidth_hz, int elements, int beams)
    {
        SystemConfig cfg;
        cfg.carrier_hz = carrier_hz;
        cfg.bandwidth_hz = bandwidth_hz;
        cfg.elements = elements;
        cfg.beams = beams;
        cfg.solver_points = 2 * elements;
        return cfg;
    }

    void SystemConfig::validate() const
    {
        require_finite(carrier_hz, "carrier_hz");
        require_finite(bandwidth_hz, "bandwidth_hz");
        if (carrier_hz <= 0.0)
            throw config_error("carrier_hz must be positive");
        if (bandwidth_hz < 0.0 || bandwidth_hz >= 2.0 * carrier_hz)
            throw config_error("bandwidth_hz must satisfy 0 <= B < 2 f_c");
        if (elements < 1)
            throw config_error("elements must be at least 1");
        if (beams < 1)
            throw config_error("beams must be at least 1");
        if (solver_points < 2)
            throw config_error("solver_points must be at least 2");
        if (freq_points < 2)
            throw config_error("freq_points must be at least 2");
        if (angle_points < 2)
            throw config_error("angle_points must be at least 2");
    }

    std::vector<std::string> SystemConfig::warnings() const
    {
        std::vector<std::string> out;
        if (beams < elements)
            out.push_back("beam count L=" + std::to_string(beams) + " is below element count N=" +
                          std::to_string(elements) + "; the zone design assumes L >= N");
        return out;
    }

    // ---------------------------------------------------------------- BeamVector

    BeamVector BeamVector::from_weights(cvec weights)
    {
        if (weights.size() == 0)
            throw config_error("beam must have at least one element");
        const double target = 1.0 / std::sqrt(static_cast<double>(weights.size()));
        for (Eigen::Index i = 0; i < weights.size(); ++i)
        {
            const double m = std::abs(weights(i));
            if (!std::isfinite(m) || std::abs(m - target) > modulus_tolerance)
                throw config_error("beam entry " + std::to_string(i) + " violates the constant-modulus constraint");
        }
        return BeamVector(std::move(weights));
    }

    BeamVector BeamVector::from_phases(std::span<const double> phases)
    {
        if (phases.empty())
            throw config_error("beam must have at least one element");
        const double scale = 1.0 / std::sqrt(static_cast<double>(phases.size()));
        cvec w(static_cast<Eigen::Index>(phases.size()));
        for (std::size_t i = 0; i < phases.size(); ++i)
            w(static_cast<Eigen::Index>(i)) = std::polar(scale, phases[i]);
        return BeamVector(std::move(w));
    }

    BeamVector BeamVector::project(const cvec &v)
    {
        if (v.size() == 0)
            throw config_error("beam must have at least one element");
        const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
        cvec w(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i)
        {
            const double phase = (v(i).real() == 0.0 && v(i).imag() == 0.0) ? 0.0 : std::arg(v(i));
            w(i) = std::polar(scale, phase);
        }
        return BeamVector(std::move(w));
    }

    // ---------------------------------------------------------------- steering / gains

    SteeringVector steering_composite(int elements, double composite)
    {
        if (elements < 1)
            throw config_error("elements must be at least 1");
        require_finite(composite, "composite");
        SteeringVector h;
        h.composite = composite;
        h.entries.resize(elements);
        h.entries(0) = cplx(1.0, 0.0);
        for (int n = 1; n < elements; ++n)
            h.entries(n) = std::polar(1.0, pi * static_cast<double>(n) * composite);
        return h;
    }

    double composite_variable(const SystemConfig &cfg, double freq_hz, double phi)
    {
        return (1.0 + freq_hz / cfg.carrier_hz) * std::sin(phi);
    }

    SteeringVector steering(const SystemConfig &cfg, double freq_hz, double phi)
    {
        require_finite(freq_hz, "frequency");
        check_angle(phi);
        const double half = cfg.bandwidth_hz / 2.0;
        if (std::abs(freq_hz) > half * (1.0 + 1e-12))
            throw config_error("frequency lies outside [-B/2, B/2]");
        return steering_composite(cfg.elements, composite_variable(cfg, freq_hz, phi));
    }

    double pattern_gain(const BeamVector &w, double composite)
    {
        const int n = w.size();
        std::vector<double> buf(4 * static_cast<std::size_t>(n));
        double *wr = buf.data(), *wi = wr + n, *pr = wi + n, *pim = pr + n;
        split(w.weights(), wr, wi);
        detail::conj_phasors(n, composite, pr, pim);
        return detail::power_of_dot(n, wr, wi, pr, pim);
    }

    double beam_gain(const SystemConfig &cfg, double freq_hz, double phi, const BeamVector &w)
    {
        require_finite(freq_hz, "frequency");
        check_angle(phi);
        if (w.size() != cfg.elements)
            throw config_error("beam length does not match the element count");
        return pattern_gain(w, composite_variable(cfg, freq_hz, phi));
    }

    std::vector<double> frequency_grid(const SystemConfig &cfg)
    {
        const int k = cfg.freq_points;
        const double b = cfg.bandwidth_hz;
        std::vector<double> f(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            f[static_cast<std::size_t>(i)] = -b / 2.0 + b * static_cast<double>(i) / static_cast<double>(k - 1);
        f.back() = b / 2.0;
        return f;
    }

    double wideband_beam_gain(const SystemConfig &cfg, double phi, const BeamVector &w)
    {
        check_angle(phi);
        BeamBank bank(cfg, std::span<const BeamVector>(&w, 1));
        return bank.wideband_gain(phi, 0);
    }

    CodebookGain codebook_gain(const SystemConfig &cfg, double phi, std::span<const BeamVector> beams)
    {
        if (beams.empty())
            throw config_error("codebook is empty");
        check_angle(phi);
        BeamBank bank(cfg, beams);
        return bank.best(phi);
    }

    // ---------------------------------------------------------------- BeamBank

    // Phasors for one angle. The frequency grid maps to an arithmetic progression of composite
    // values x_k = x_lo + k dx. Anchors sit at k = 0, S, 2S, ... and at the upper edge; the points
    // between two anchors are reached from the left one by rotating with the step phasor.
    struct BeamBank::AngleContext
    {
        std::vector<double> buf;
        std::vector<int> anchor_k; // grid index of each anchor, ascending, last = K-1
        double *cr, *ci;           // composite sin(phi)       (f = 0)
        double *zr, *zi;           // step phasor
        double *ar, *ai;           // anchor phasors, n per anchor

        // Steering beams: composite of every anchor (center last) and the half-angle phasors
        // exp(-j pi x / 2), exp(-j N pi x / 2) for each of them and for one grid step.
        std::vector<double> x;
        std::vector<cplx> h1, hn;
        cplx step1, stepn;
    };

    namespace
    {
        constexpr int anchor_stride = 12;
    }

    BeamBank::BeamBank(const SystemConfig &cfg, std::span<const BeamVector> beams)
        : n_(cfg.elements), count_(beams.size()), freq_points_(cfg.freq_points),
          half_band_ratio_(cfg.half_band_ratio())
    {
        if (freq_points_ < 2)
            throw config_error("freq_points must be at least 2");
        re_.resize(count_ * static_cast<std::size_t>(n_));
        im_.resize(count_ * static_cast<std::size_t>(n_));
        for (std::size_t l = 0; l < count_; ++l)
        {
            if (beams[l].size() != n_)
                throw config_error("beam " + std::to_string(l) + " length does not match the element count");
            split(beams[l].weights(), re_.data() + l * n_, im_.data() + l * n_);
            steer_.push_back(detect_steering(beams[l].weights()));
        }
    }

    // w_n = w_0 exp(j pi n x0) for some x0, checked entrywise.
    BeamBank::Steering BeamBank::detect_steering(const cvec &w)
    {
        Steering st;
        const Eigen::Index n = w.size();
        const cplx w0 = w(0);
        if (w0 == 0.0)
            return st;
        st.x0 = n > 1 ? std::arg(w(1) / w0) / pi : 0.0;
        for (Eigen::Index i = 1; i < n; ++i)
            if (std::abs(w(i) - w0 * std::polar(1.0, pi * static_cast<double>(i) * st.x0)) > steering_tolerance)
                return st;
        st.on = true;
        st.amp2 = std::norm(w0);
        st.p1 = std::polar(1.0, pi * st.x0 / 2.0);
        st.pn = std::polar(1.0, pi * std::remainder(static_cast<double>(n) * st.x0, 4.0) / 2.0);
        return st;
    }

    // amp2 |sum_n exp(j pi n d)|^2 with d = x0 - x, from the half-angle phasors u = exp(j pi d/2) and
    // un = exp(j N pi d/2). Near the main lobe the ratio is recomputed from d directly.
    double BeamBank::steering_value(const Steering &st, cplx u, cplx un, double x) const
    {
        constexpr double near_peak = 1e-2;
        if (std::abs(u.imag()) >= near_peak)
        {
            const double r = un.imag() / u.imag();
            return st.amp2 * r * r;
        }
        const double a = pi * std::remainder(st.x0 - x, 2.0) / 2.0;
        const double den = std::sin(a);
        const double nn = static_cast<double>(n_);
        if (den == 0.0)
            return st.amp2 * nn * nn;
        const double r = std::sin(nn * a) / den;
        return st.amp2 * r * r;
    }

    double BeamBank::steering_point(const AngleContext &ctx, const Steering &st, std::size_t slot) const
    {
        return steering_value(st, st.p1 * ctx.h1[slot], st.pn * ctx.hn[slot], ctx.x[slot]);
    }

    BeamBank::AngleContext BeamBank::context(double phi) const
    {
        AngleContext ctx;
        const int last = freq_points_ - 1;
        for (int k = 0; k < last; k += anchor_stride)
            ctx.anchor_k.push_back(k);
        ctx.anchor_k.push_back(last);

        const std::size_t n = static_cast<std::size_t>(n_);
        const std::size_t anchors = ctx.anchor_k.size();
        ctx.buf.resize((6 + 2 * anchors) * n);
        double *p = ctx.buf.data();
        ctx.cr = p, ctx.ci = p + n, ctx.zr = p + 2 * n, ctx.zi = p + 3 * n;
        double *jr = p + 4 * n, *ji = p + 5 * n; // stride phasor
        ctx.ar = p + 6 * n, ctx.ai = ctx.ar + anchors * n;

        const double s = std::sin(phi);
        const double b = half_band_ratio_;
        const double dx = s * (2.0 * b) / static_cast<double>(last);
        detail::conj_phasors(n_, s, ctx.cr, ctx.ci);
        detail::conj_phasors(n_, dx, ctx.zr, ctx.zi);
        detail::conj_phasors(n_, dx * anchor_stride, jr, ji);
        detail::conj_phasors(n_, (1.0 - b) * s, ctx.ar, ctx.ai);
        for (std::size_t a = 1; a + 1 < anchors; ++a)
        {
            const double *pr = ctx.ar + (a - 1) * n, *pi = ctx.ai + (a - 1) * n;
            double *qr = ctx.ar + a * n, *qi = ctx.ai + a * n;
            for (std::size_t i = 0; i < n; ++i)
            {
                qr[i] = pr[i] * jr[i] - pi[i] * ji[i];
                qi[i] = pr[i] * ji[i] + pi[i] * jr[i];
            }
        }
        detail::conj_phasors(n_, (1.0 + b) * s, ctx.ar + (anchors - 1) * n, ctx.ai + (anchors - 1) * n);

        const double nn = static_cast<double>(n_);
        const auto half = [&](double x, double scale)
        { return std::polar(1.0, -pi * std::remainder(scale * x, 4.0) / 2.0); };
        for (std::size_t a = 0; a + 1 < anchors; ++a)
            ctx.x.push_back((1.0 - b) * s + static_cast<double>(ctx.anchor_k[a]) * dx);
        ctx.x.push_back((1.0 + b) * s);
        ctx.x.push_back(s);
        for (const double x : ctx.x)
        {
            ctx.h1.push_back(half(x, 1.0));
            ctx.hn.push_back(half(x, nn));
        }
        ctx.step1 = half(dx, 1.0);
        ctx.stepn = half(dx, nn);
        return ctx;
    }

    double BeamBank::center_gain(const AngleContext &ctx, std::size_t index) const
    {
        if (steer_[index].on)
            return steering_point(ctx, steer_[index], ctx.x.size() - 1);
        const double *wr = re_.data() + index * n_, *wi = im_.data() + index * n_;
        return detail::power_of_dot(n_, wr, wi, ctx.cr, ctx.ci);
    }

    // Minimum over f = 0 and the frequency grid; returns early with a value below `floor` as soon
    // as one is found, so a returned value >= floor is always the exact minimum. Every point has
    // one fixed recipe, so the visiting order does not change any value.
    double BeamBank::scan(const AngleContext &ctx, std::size_t index, double floor, double center) const
    {
        const double *wr = re_.data() + index * n_, *wi = im_.data() + index * n_;
        const std::size_t n = static_cast<std::size_t>(n_);
        const std::size_t anchors = ctx.anchor_k.size();

        if (steer_[index].on)
            return scan_steering(ctx, steer_[index], floor, std::isnan(center) ? center_gain(ctx, index) : center);

        double m = std::isnan(center) ? detail::power_of_dot(n_, wr, wi, ctx.cr, ctx.ci) : center;
        if (m < floor)
            return m;

        thread_local std::vector<double> at;
        thread_local std::vector<double> seg;
        at.resize(anchors);
        for (std::size_t a = 0; a < anchors; ++a)
        {
            at[a] = detail::power_of_dot(n_, wr, wi, ctx.ar + a * n, ctx.ai + a * n);
            m = std::min(m, at[a]);
            if (m < floor)
                return m;
        }

        // Gaps next to the lowest anchors first.
        seg.resize(anchors - 1);
        for (std::size_t g = 0; g + 1 < anchors; ++g)
            seg[g] = std::min(at[g], at[g + 1]);

        thread_local std::vector<double> v;
        v.resize(2 * n);
        double *vr = v.data(), *vi = vr + n;
        constexpr double done = std::numeric_limits<double>::infinity();
        for (std::size_t left = anchors - 1; left > 0; --left)
        {
            const std::size_t g = static_cast<std::size_t>(std::min_element(seg.begin(), seg.end()) - seg.begin());
            seg[g] = done;
            const int k0 = ctx.anchor_k[g], k1 = ctx.anchor_k[g + 1];
            if (k1 - k0 < 2)
                continue;
            // v_n = conj(h_n(x_k0)) w_n, rotated by the step phasor once per grid point.
            const double *pr = ctx.ar + g * n, *pi = ctx.ai + g * n;
            for (std::size_t i = 0; i < n; ++i)
            {
                vr[i] = pr[i] * wr[i] - pi[i] * wi[i];
                vi[i] = pr[i] * wi[i] + pi[i] * wr[i];
            }
            for (int k = k0 + 1; k < k1; ++k)
            {
                m = std::min(m, detail::rotate_and_power(n_, vr, vi, ctx.zr, ctx.zi));
                if (m < floor)
                    return m;
            }
        }
        return m;
    }

    // Same visiting rule as scan() with O(1) work per grid point.
    double BeamBank::scan_steering(const AngleContext &ctx, const Steering &st, double floor, double center) const
    {
        double m = center;
        if (m < floor)
            return m;
        const std::size_t anchors = ctx.anchor_k.size();
        thread_local std::vector<double> at, seg;
        at.resize(anchors);
        for (std::size_t a = 0; a < anchors; ++a)
        {
            at[a] = steering_point(ctx, st, a);
            m = std::min(m, at[a]);
            if (m < floor)
                return m;
        }
        seg.resize(anchors - 1);
        for (std::size_t g = 0; g + 1 < anchors; ++g)
            seg[g] = std::min(at[g], at[g + 1]);

        constexpr double done = std::numeric_limits<double>::infinity();
        for (std::size_t left = anchors - 1; left > 0; --left)
        {
            const std::size_t g = static_cast<std::size_t>(std::min_element(seg.begin(), seg.end()) - seg.begin());
            seg[g] = done;
            const int k0 = ctx.anchor_k[g], k1 = ctx.anchor_k[g + 1];
            cplx u = st.p1 * ctx.h1[g], un = st.pn * ctx.hn[g];
            const double x0 = ctx.x[g], dx = (ctx.x[g + 1] - x0) / static_cast<double>(k1 - k0);
            for (int k = k0 + 1; k < k1; ++k)
            {
                u *= ctx.step1;
                un *= ctx.stepn;
                m = std::min(m, steering_value(st, u, un, x0 + static_cast<double>(k - k0) * dx));
                if (m < floor)
                    return m;
            }
        }
        return m;
    }

    double BeamBank::wideband_gain(double phi, std::size_t index) const
    {
        if (index >= count_)
            throw config_error("beam index out of range");
        const auto ctx = context(phi);
        return scan(ctx, index, -std::numeric_limits<double>::infinity());
    }

    CodebookGain BeamBank::best(double phi, std::span<const std::size_t> assigned, std::vector<double> *assigned_gain) const
    {
        if (count_ == 0)
            throw config_error("codebook is empty");
        const auto ctx = context(phi);

        const std::size_t n = static_cast<std::size_t>(n_);
        const std::size_t top = ctx.anchor_k.size() - 1;
        const double *hr = ctx.ar + top * n, *hi = ctx.ai + top * n;
        std::vector<double> centers(count_), bounds(count_);
        for (std::size_t l = 0; l < count_; ++l)
        {
            centers[l] = center_gain(ctx, l);
            if (steer_[l].on)
            {
                bounds[l] = std::min({centers[l], steering_point(ctx, steer_[l], 0), steering_point(ctx, steer_[l], top)});
                continue;
            }
            const double *wr = re_.data() + l * n, *wi = im_.data() + l * n;
            bounds[l] = std::min({centers[l], detail::power_of_dot(n_, wr, wi, ctx.ar, ctx.ai),
                                  detail::power_of_dot(n_, wr, wi, hr, hi)});
        }

        // The wideband gain never exceeds its value at f = 0 or at either band edge, so candidates
        // are visited in decreasing order of that bound and the scan stops once the bound cannot win.
        std::vector<std::size_t> order(count_);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                  { return bounds[a] != bounds[b] ? bounds[a] > bounds[b] : a < b; });

        constexpr double unknown = -1.0;
        std::vector<double> exact(assigned.empty() ? 0 : count_, unknown);

        CodebookGain result{-1.0, 0};
        for (const std::size_t l : order)
        {
            const double bound = bounds[l];
            if (bound < result.gain || (bound == result.gain && l > result.best_index))
                break;
            const double g = scan(ctx, l, result.gain, centers[l]);
            if (g < result.gain)
                continue;
            if (!exact.empty())
                exact[l] = g;
            if (g > result.gain || l < result.best_index)
                result = {g, l};
        }

        if (assigned_gain)
        {
            assigned_gain->clear();
            for (const std::size_t a : assigned)
            {
                if (a >= count_)
                    throw config_error("assigned beam index out of range");
                const double g = exact[a] != unknown ? exact[a] : scan(ctx, a, -std::numeric_limits<double>::infinity(), centers[a]);
                assigned_gain->push_back(g);
            }
        }
        return result;
    }

    // ---------------------------------------------------------------- link budget

    double path_loss(double carrier_hz, double distance_m, double absorption_per_m)
    {
        require_finite(carrier_hz, "carrier_hz");
        require_finite(distance_m, "distance");
        require_finite(absorption_per_m, "absorption");
        if (carrier_hz <= 0.0)
            throw config_error("carrier_hz must be positive");
        if (distance_m <= 0.0)
            throw config_error("distance must be positive");
        if (absorption_per_m < 0.0)
            throw config_error("absorption must be non-negative");
        return speed_of_light / (4.0 * pi * carrier_hz * distance_m) * std::exp(-0.5 * absorption_per_m * distance_m);
    }

    double delay_spread(const SystemConfig &cfg, double phi)
    {
        check_angle(phi);
        return static_cast<double>(cfg.elements - 1) * std::abs(std::sin(phi)) / (2.0 * cfg.carrier_hz);
    }

    double min_cyclic_prefix(const SystemConfig &cfg)
    {
        return static_cast<double>(cfg.elements - 1) / (2.0 * cfg.carrier_hz);
    }

    double dirichlet_power(int elements, double x)
    {
        const double half = x / 2.0;
        const double den = std::sin(half);
        const double n = static_cast<double>(elements);
        if (std::abs(den) < 1e-300 || std::remainder(x, 2.0 * pi) == 0.0)
            return n * n;
        const double r = std::sin(n * half) / den;
        return r * r;
    }
}
