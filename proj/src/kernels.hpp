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

// Internal evaluation kernels for general beams. Each grid point has one fixed recipe, so the same
// (beam, composite) pair yields bit-identical results regardless of the entry point.

#ifndef WBCB_KERNELS_HPP
#define WBCB_KERNELS_HPP

#include <cmath>
#include <numbers>

namespace wbcb::detail
{
    // conj(h_n(x)) = exp(-j pi (n-1) x), split into real and imaginary parts.
    inline void conj_phasors(int n, double x, double *re, double *im)
    {
        for (int i = 0; i < n; ++i)
        {
            const double a = std::numbers::pi * static_cast<double>(i) * x;
            re[i] = std::cos(a);
            im[i] = -std::sin(a);
        }
    }

    // |sum_i p_i w_i|^2 with two interleaved accumulators (fixed summation order).
    inline double power_of_dot(int n, const double *wr, const double *wi, const double *pr, const double *pi)
    {
        double sr0 = 0.0, si0 = 0.0, sr1 = 0.0, si1 = 0.0;
        int i = 0;
        for (; i + 1 < n; i += 2)
        {
            sr0 += pr[i] * wr[i] - pi[i] * wi[i];
            si0 += pr[i] * wi[i] + pi[i] * wr[i];
            sr1 += pr[i + 1] * wr[i + 1] - pi[i + 1] * wi[i + 1];
            si1 += pr[i + 1] * wi[i + 1] + pi[i + 1] * wr[i + 1];
        }
        if (i < n)
        {
            sr0 += pr[i] * wr[i] - pi[i] * wi[i];
            si0 += pr[i] * wi[i] + pi[i] * wr[i];
        }
        const double sr = sr0 + sr1, si = si0 + si1;
        return sr * sr + si * si;
    }

    // v_i <- v_i z_i in place, then |sum_i v_i|^2 with the same accumulator layout.
    inline double rotate_and_power(int n, double *vr, double *vi, const double *zr, const double *zi)
    {
        double sr0 = 0.0, si0 = 0.0, sr1 = 0.0, si1 = 0.0;
        int i = 0;
        for (; i + 1 < n; i += 2)
        {
            const double a0 = vr[i] * zr[i] - vi[i] * zi[i];
            const double b0 = vr[i] * zi[i] + vi[i] * zr[i];
            const double a1 = vr[i + 1] * zr[i + 1] - vi[i + 1] * zi[i + 1];
            const double b1 = vr[i + 1] * zi[i + 1] + vi[i + 1] * zr[i + 1];
            vr[i] = a0, vi[i] = b0, vr[i + 1] = a1, vi[i + 1] = b1;
            sr0 += a0, si0 += b0, sr1 += a1, si1 += b1;
        }
        if (i < n)
        {
            const double a0 = vr[i] * zr[i] - vi[i] * zi[i];
            const double b0 = vr[i] * zi[i] + vi[i] * zr[i];
            vr[i] = a0, vi[i] = b0;
            sr0 += a0, si0 += b0;
        }
        const double sr = sr0 + sr1, si = si0 + si1;
        return sr * sr + si * si;
    }
}

#endif
