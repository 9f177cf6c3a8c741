// Copyright 2026 The qctp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference computations for tests. These deliberately avoid the library's
// stride/offset machinery and sequential collapse: everything is built from
// the closed-form expressions and brute-force sums over full digit strings.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qctp/register.h"
#include "qctp/rng.h"

namespace qctp::oracle {

using cvec = std::vector<std::complex<double>>;

inline std::complex<double> omega_pow(int d, double exponent) {
    return std::exp(std::complex<double>(0, 2.0 * std::numbers::pi * exponent / d));
}

inline cvec kron(const cvec &a, const cvec &b) {
    cvec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

inline cvec x_vector(int d, int u) {
    cvec out(d);
    for (int l = 0; l < d; ++l) {
        out[l] = omega_pow(d, static_cast<double>(u) * l) / std::sqrt(static_cast<double>(d));
    }
    return out;
}

inline cvec bell_vector(int d, int u, int v) {
    cvec out(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (b == (a + v) % d) {
                out[static_cast<std::size_t>(a) * d + b] = omega_pow(d, static_cast<double>(a) * u) / std::sqrt(static_cast<double>(d));
            }
        }
    }
    return out;
}

inline cvec ghz_vector(int d, int parties) {
    std::size_t size = 1;
    for (int t = 0; t < parties; ++t) {
        size *= d;
    }
    cvec out(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t rest = idx;
        int first = static_cast<int>(rest % d);
        bool same = true;
        for (int t = 0; t < parties; ++t) {
            same = same && static_cast<int>(rest % d) == first;
            rest /= d;
        }
        if (same) {
            out[idx] = 1.0 / std::sqrt(static_cast<double>(d));
        }
    }
    return out;
}

inline std::vector<int> to_digits(std::size_t index, int d, int count) {
    std::vector<int> digits(count);
    for (int t = count - 1; t >= 0; --t) {
        digits[t] = static_cast<int>(index % d);
        index /= d;
    }
    return digits;
}

/// Weyl matrix built from its definition, M[(l+v) mod d][l] = omega^{u l}.
inline std::vector<cvec> pauli_matrix(int d, int u, int v) {
    std::vector<cvec> m(d, cvec(d));
    for (int l = 0; l < d; ++l) {
        m[(l + v) % d][l] = omega_pow(d, static_cast<double>(u) * l);
    }
    return m;
}

inline cvec random_amplitudes(std::size_t size, std::uint64_t seed) {
    Rng rng(seed);
    cvec out(size);
    double total = 0;
    for (auto &a : out) {
        a = {rng.normal(), rng.normal()};
        total += std::norm(a);
    }
    for (auto &a : out) {
        a /= std::sqrt(total);
    }
    return out;
}

/// One branch of the protocol computed by brute force over the full composite.
struct BruteBranch {
    std::vector<std::pair<int, int>> alpha;
    std::vector<std::vector<int>> beta;
    double probability = 0;
    /// Unnormalized receiver amplitudes over (c_1..c_m).
    cvec receiver;
};

/// Enumerates every (alpha, beta) outcome and contracts the composite
/// input (x) GHZ^m against the full product of projector vectors by looping
/// over all composite digit strings. Composite order: x_1..x_m, then
/// p_{k,0..n+1} for k = 1..m.
inline std::vector<BruteBranch> brute_force_protocol(const cvec &input, int d, int m, int n) {
    cvec composite = input;
    for (int k = 0; k < m; ++k) {
        composite = kron(composite, ghz_vector(d, n + 2));
    }
    const int total_qudits = m + m * (n + 2);
    const int outcome_digits = 2 * m + m * n;
    std::size_t outcome_count = 1;
    for (int t = 0; t < outcome_digits; ++t) {
        outcome_count *= d;
    }
    std::size_t receiver_size = 1;
    for (int k = 0; k < m; ++k) {
        receiver_size *= d;
    }
    auto x_pos = [](int k) { return k; };
    auto p_pos = [m, n](int k, int j) { return m + k * (n + 2) + j; };

    std::vector<BruteBranch> out;
    for (std::size_t o = 0; o < outcome_count; ++o) {
        auto od = to_digits(o, d, outcome_digits);
        BruteBranch branch;
        for (int k = 0; k < m; ++k) {
            branch.alpha.emplace_back(od[2 * k], od[2 * k + 1]);
        }
        branch.beta.assign(m, std::vector<int>(n));
        for (int k = 0; k < m; ++k) {
            for (int j = 0; j < n; ++j) {
                branch.beta[k][j] = od[2 * m + k * n + j];
            }
        }
        branch.receiver.assign(receiver_size, 0.0);
        for (std::size_t idx = 0; idx < composite.size(); ++idx) {
            if (composite[idx] == std::complex<double>{}) {
                continue;
            }
            auto digits = to_digits(idx, d, total_qudits);
            std::complex<double> weight = composite[idx];
            for (int k = 0; k < m; ++k) {
                auto bell = bell_vector(d, branch.alpha[k].first, branch.alpha[k].second);
                weight *= std::conj(bell[static_cast<std::size_t>(digits[x_pos(k)]) * d + digits[p_pos(k, 0)]]);
                for (int j = 0; j < n; ++j) {
                    weight *= std::conj(x_vector(d, branch.beta[k][j])[digits[p_pos(k, j + 1)]]);
                }
            }
            std::size_t r = 0;
            for (int k = 0; k < m; ++k) {
                r = r * d + digits[p_pos(k, n + 1)];
            }
            branch.receiver[r] += weight;
        }
        for (const auto &a : branch.receiver) {
            branch.probability += std::norm(a);
        }
        out.push_back(std::move(branch));
    }
    return out;
}

/// Receiver state after sender and controller outcomes, written directly
/// from the closed-form expression (unnormalized, prefactor d^{-m(1+n/2)}).
inline cvec closed_form_receiver(
    const cvec &input, int d, int m, int n, const std::vector<std::pair<int, int>> &alpha,
    const std::vector<std::vector<int>> &beta) {
    cvec out(input.size());
    const double prefactor = std::pow(static_cast<double>(d), -m * (1.0 + n / 2.0));
    for (std::size_t li = 0; li < input.size(); ++li) {
        auto l = to_digits(li, d, m);
        double exponent = 0;
        std::size_t target = 0;
        for (int k = 0; k < m; ++k) {
            double beta_sum = 0;
            for (int j = 0; j < n; ++j) {
                beta_sum += beta[k][j];
            }
            exponent += l[k] * alpha[k].first + (l[k] + alpha[k].second) * beta_sum;
            target = target * d + (l[k] + alpha[k].second) % d;
        }
        out[target] += prefactor * omega_pow(d, -exponent) * input[li];
    }
    return out;
}

}  // namespace qctp::oracle
