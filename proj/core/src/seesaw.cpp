// Copyright 2026 The bewit Authors
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

#include "bewit/seesaw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>

#include "bewit/errors.hpp"

namespace bewit {

namespace {

using Mat4 = Eigen::Matrix<Complex, 4, 4>;
using Vec4 = Eigen::Matrix<Complex, 4, 1>;
using Mat16 = Eigen::Matrix<Complex, 16, 16>;
using Vec16 = Eigen::Matrix<double, 16, 1>;

// Table indexed [x][z] or [y][z], zero-based.
using Mixed = std::array<std::array<Mat4, kBasisSize>, kBasisSize>;

struct Side {
    std::array<Vec4, kBasisSize> vec;
    std::array<Mat4, kBasisSize> proj;

    void set(int k, const Vec4& v) {
        vec[static_cast<std::size_t>(k)] = v;
        proj[static_cast<std::size_t>(k)] = v * v.adjoint();
    }
};

std::mt19937_64 restart_rng(std::uint64_t seed, int restart_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart_index), 0x62657769u};
    return std::mt19937_64(seq);
}

Vec4 random_pure_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec4 v;
    for (int i = 0; i < kLocalDim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    return v.normalized();
}

Vec4 basis_vector(int level) {
    Vec4 v = Vec4::Zero();
    v(level) = 1.0;
    return v;
}

class Sweep {
   public:
    Sweep(const WitnessCoefficients& w, bool classical) : classical_(classical) {
        for (int x = 0; x < kBasisSize; ++x) {
            for (int y = 0; y < kBasisSize; ++y) {
                for (int z = 0; z < kBasisSize; ++z) {
                    n_[x][y][z] = static_cast<double>(w.numerator(x + 1, y + 1, z + 1)) / 16.0;
                }
            }
        }
        factorized_ = !classical_ && factorize();
    }

    // Y[x][z] = sum_y w_xyz rho_y.
    Mixed mix_b(const Side& b) const {
        Mixed out;
        for (int x = 0; x < kBasisSize; ++x) {
            for (int z = 0; z < kBasisSize; ++z) {
                Mat4 acc = Mat4::Zero();
                for (int y = 0; y < kBasisSize; ++y) {
                    if (n_[x][y][z] != 0.0) {
                        acc += n_[x][y][z] * b.proj[static_cast<std::size_t>(y)];
                    }
                }
                out[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] = acc;
            }
        }
        return out;
    }

    // X[y][z] = sum_x w_xyz rho_x.
    Mixed mix_a(const Side& a) const {
        Mixed out;
        for (int y = 0; y < kBasisSize; ++y) {
            for (int z = 0; z < kBasisSize; ++z) {
                Mat4 acc = Mat4::Zero();
                for (int x = 0; x < kBasisSize; ++x) {
                    if (n_[x][y][z] != 0.0) {
                        acc += n_[x][y][z] * a.proj[static_cast<std::size_t>(x)];
                    }
                }
                out[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] = acc;
            }
        }
        return out;
    }

    // F_z = sum_x rho_x (x) Y_xz.
    static Mat16 witness_operator(const Side& a, const Mixed& y_mix, int z) {
        Mat16 f = Mat16::Zero();
        for (int x = 0; x < kBasisSize; ++x) {
            const Mat4& rho = a.proj[static_cast<std::size_t>(x)];
            const Mat4& y = y_mix[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    f.block<4, 4>(4 * i, 4 * j) += rho(i, j) * y;
                }
            }
        }
        return f;
    }

    // Step 3. Returns sum_z ||F_z||_1 (or its diagonal version).
    double observables(const Side& a, const Side& b, std::array<Mat16, kBasisSize>& c) const {
        if (factorized_) {
            return factored_observables(a, b, &c);
        }
        const Mixed y_mix = mix_b(b);
        double value = 0.0;
        Eigen::SelfAdjointEigenSolver<Mat16> eig;
        for (int z = 0; z < kBasisSize; ++z) {
            const Mat16 f = witness_operator(a, y_mix, z);
            Mat16& cz = c[static_cast<std::size_t>(z)];
            if (classical_) {
                cz.setZero();
                for (int i = 0; i < 16; ++i) {
                    const double d = f(i, i).real();
                    cz(i, i) = d >= 0.0 ? 1.0 : -1.0;
                    value += std::abs(d);
                }
            } else {
                eig.compute(f);
                Vec16 signs;
                for (int j = 0; j < 16; ++j) {
                    signs(j) = eig.eigenvalues()(j) >= 0.0 ? 1.0 : -1.0;
                    value += std::abs(eig.eigenvalues()(j));
                }
                cz = eig.eigenvectors() * signs.cast<Complex>().asDiagonal() *
                     eig.eigenvectors().adjoint();
            }
        }
        return value;
    }

    // Value with optimal observables, without forming them.
    double best_value(const Side& a, const Side& b) const {
        if (factorized_) {
            return factored_observables(a, b, nullptr);
        }
        const Mixed y_mix = mix_b(b);
        double value = 0.0;
        Eigen::SelfAdjointEigenSolver<Mat16> eig;
        for (int z = 0; z < kBasisSize; ++z) {
            eig.compute(witness_operator(a, y_mix, z), Eigen::EigenvaluesOnly);
            value += eig.eigenvalues().cwiseAbs().sum();
        }
        return value;
    }

    // Step 4: G_x = sum_z Tr_B[(I (x) Y_xz) C_z].
    double alice(Side& a, const Side& b, const std::array<Mat16, kBasisSize>& c) const {
        if (factorized_) {
            std::array<Mat4, kBasisSize> m;
            for (int z = 0; z < kBasisSize; ++z) {
                Mat4 yz = Mat4::Zero();
                for (int k = 0; k < kBasisSize; ++k) {
                    yz += v_[z][k] * b.proj[static_cast<std::size_t>(k)];
                }
                m[static_cast<std::size_t>(z)] = trace_b(yz, c[static_cast<std::size_t>(z)]);
            }
            double value = 0.0;
            for (int x = 0; x < kBasisSize; ++x) {
                Mat4 g = Mat4::Zero();
                for (int z = 0; z < kBasisSize; ++z) {
                    g += u_[z][x] * m[static_cast<std::size_t>(z)];
                }
                value += best_response(a, x, g);
            }
            return value;
        }
        const Mixed y_mix = mix_b(b);
        double value = 0.0;
        for (int x = 0; x < kBasisSize; ++x) {
            Mat4 g = Mat4::Zero();
            for (int z = 0; z < kBasisSize; ++z) {
                g += trace_b(y_mix[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)],
                             c[static_cast<std::size_t>(z)]);
            }
            value += best_response(a, x, g);
        }
        return value;
    }

    // Step 5: H_y = sum_z Tr_A[(X_yz (x) I) C_z].
    double bob(const Side& a, Side& b, const std::array<Mat16, kBasisSize>& c) const {
        if (factorized_) {
            std::array<Mat4, kBasisSize> m;
            for (int z = 0; z < kBasisSize; ++z) {
                Mat4 xz = Mat4::Zero();
                for (int k = 0; k < kBasisSize; ++k) {
                    xz += u_[z][k] * a.proj[static_cast<std::size_t>(k)];
                }
                m[static_cast<std::size_t>(z)] = trace_a(xz, c[static_cast<std::size_t>(z)]);
            }
            double value = 0.0;
            for (int y = 0; y < kBasisSize; ++y) {
                Mat4 h = Mat4::Zero();
                for (int z = 0; z < kBasisSize; ++z) {
                    h += v_[z][y] * m[static_cast<std::size_t>(z)];
                }
                value += best_response(b, y, h);
            }
            return value;
        }
        const Mixed x_mix = mix_a(a);
        double value = 0.0;
        for (int y = 0; y < kBasisSize; ++y) {
            Mat4 h = Mat4::Zero();
            for (int z = 0; z < kBasisSize; ++z) {
                h += trace_a(x_mix[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)],
                             c[static_cast<std::size_t>(z)]);
            }
            value += best_response(b, y, h);
        }
        return value;
    }

   private:
    // Tr_B[(I (x) Y) C]: entry (i,j) is sum_ab Y(a,b) C(4i+b, 4j+a).
    static Mat4 trace_b(const Mat4& y, const Mat16& c) {
        Mat4 g;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                g(i, j) = y.transpose().cwiseProduct(c.block<4, 4>(4 * i, 4 * j)).sum();
            }
        }
        return g;
    }

    // Tr_A[(X (x) I) C] = sum_ik X(i,k) C_block(k,i).
    static Mat4 trace_a(const Mat4& x, const Mat16& c) {
        Mat4 h = Mat4::Zero();
        for (int i = 0; i < 4; ++i) {
            for (int k = 0; k < 4; ++k) {
                h += x(i, k) * c.block<4, 4>(4 * k, 4 * i);
            }
        }
        return h;
    }

    // Every witness built from signs and a permutation has w_xyz = u_zx v_zy, so
    // F_z = X_z (x) Y_z and its eigensystem comes from two 4x4 problems.
    bool factorize() {
        for (int z = 0; z < kBasisSize; ++z) {
            int px = -1;
            int py = -1;
            for (int x = 0; x < kBasisSize && px < 0; ++x) {
                for (int y = 0; y < kBasisSize; ++y) {
                    if (n_[x][y][z] != 0.0) {
                        px = x;
                        py = y;
                        break;
                    }
                }
            }
            for (int k = 0; k < kBasisSize; ++k) {
                u_[z][k] = px < 0 ? 0.0 : n_[k][py][z];
                v_[z][k] = px < 0 ? 0.0 : n_[px][k][z] / n_[px][py][z];
            }
            for (int x = 0; x < kBasisSize; ++x) {
                for (int y = 0; y < kBasisSize; ++y) {
                    if (n_[x][y][z] != u_[z][x] * v_[z][y]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    double factored_observables(const Side& a, const Side& b,
                                std::array<Mat16, kBasisSize>* c) const {
        double value = 0.0;
        Eigen::SelfAdjointEigenSolver<Mat4> ex;
        Eigen::SelfAdjointEigenSolver<Mat4> ey;
        for (int z = 0; z < kBasisSize; ++z) {
            Mat4 xz = Mat4::Zero();
            Mat4 yz = Mat4::Zero();
            for (int k = 0; k < kBasisSize; ++k) {
                xz += u_[z][k] * a.proj[static_cast<std::size_t>(k)];
                yz += v_[z][k] * b.proj[static_cast<std::size_t>(k)];
            }
            ex.compute(xz, c ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
            ey.compute(yz, c ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
            value += ex.eigenvalues().cwiseAbs().sum() * ey.eigenvalues().cwiseAbs().sum();
            if (c == nullptr) {
                continue;
            }
            Mat16 basis;
            Vec16 signs;
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    const double lambda = ex.eigenvalues()(i) * ey.eigenvalues()(j);
                    signs(4 * i + j) = lambda >= 0.0 ? 1.0 : -1.0;
                    for (int r = 0; r < 4; ++r) {
                        basis.col(4 * i + j).segment<4>(4 * r) =
                            ex.eigenvectors()(r, i) * ey.eigenvectors().col(j);
                    }
                }
            }
            (*c)[static_cast<std::size_t>(z)] =
                basis * signs.cast<Complex>().asDiagonal() * basis.adjoint();
        }
        return value;
    }

    double best_response(Side& side, int k, const Mat4& g) const {
        if (classical_) {
            int best = 0;
            for (int i = 1; i < kLocalDim; ++i) {
                if (g(i, i).real() > g(best, best).real()) {
                    best = i;
                }
            }
            side.set(k, basis_vector(best));
            return g(best, best).real();
        }
        const Mat4 herm = 0.5 * (g + g.adjoint());
        Eigen::SelfAdjointEigenSolver<Mat4> eig(herm);
        side.set(k, eig.eigenvectors().col(3));
        return eig.eigenvalues()(3);
    }

    double n_[kBasisSize][kBasisSize][kBasisSize];
    double u_[kBasisSize][kBasisSize];
    double v_[kBasisSize][kBasisSize];
    bool classical_;
    bool factorized_ = false;
};

// Drift step: psi + t (psi - anchor), with anchor phases aligned to psi.
Side extrapolated(const Side& now, const std::array<Vec4, kBasisSize>& anchor, double t) {
    Side out;
    for (int k = 0; k < kBasisSize; ++k) {
        const Vec4& v = now.vec[static_cast<std::size_t>(k)];
        const Complex overlap = v.dot(anchor[static_cast<std::size_t>(k)]);
        Vec4 base = anchor[static_cast<std::size_t>(k)];
        if (std::abs(overlap) > 0.0) {
            base *= std::conj(overlap) / std::abs(overlap);
        }
        const Vec4 step = v + t * (v - base);
        out.set(k, step.norm() > 0.0 ? Vec4(step.normalized()) : v);
    }
    return out;
}

ComplexMatrix to_dynamic(const Mat4& m) { return ComplexMatrix(m); }
ComplexMatrix to_dynamic(const Mat16& m) { return ComplexMatrix(m); }

}  // namespace

double SeeSawRun::converged_fraction() const {
    if (restarts.empty()) {
        return 0.0;
    }
    const auto n = std::count_if(restarts.begin(), restarts.end(),
                                 [](const RestartSummary& r) { return r.converged; });
    return static_cast<double>(n) / static_cast<double>(restarts.size());
}

int default_thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) {
        n = 1;
    }
    if (const char* env = std::getenv("BEWIT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) {
            n = std::min(n, cap);
        }
    }
    return n;
}

SeeSawOutcome seesaw_restart(const WitnessCoefficients& w, const SeeSawOptions& options,
                             int restart_index) {
    if (options.max_iter < 1 || !(options.tol >= 0.0) || options.extrapolate_every < 0) {
        throw DomainError("seesaw_restart: need max_iter >= 1, tol >= 0, extrapolate_every >= 0");
    }
    std::mt19937_64 rng = restart_rng(options.seed, restart_index);
    const bool classical = options.classical;
    SeeSawOutcome out;
    out.seed = options.seed;
    out.restart_index = restart_index;

    Side a;
    Side b;
    std::uniform_int_distribution<int> level(0, kLocalDim - 1);
    for (int k = 0; k < kBasisSize; ++k) {
        a.set(k, classical ? basis_vector(level(rng)) : random_pure_state(rng));
    }
    for (int k = 0; k < kBasisSize; ++k) {
        b.set(k, classical ? basis_vector(level(rng)) : random_pure_state(rng));
    }

    const Sweep sweep(w, classical);
    std::array<Mat16, kBasisSize> c;
    const int every = classical ? 0 : std::max(0, options.extrapolate_every);
    std::array<Vec4, kBasisSize> anchor_a = a.vec;
    std::array<Vec4, kBasisSize> anchor_b = b.vec;
    double previous = -std::numeric_limits<double>::infinity();
    const int max_iter = std::max(1, options.max_iter);
    for (int iter = 1; iter <= max_iter; ++iter) {
        out.history.push_back(sweep.observables(a, b, c));
        out.history.push_back(sweep.alice(a, b, c));
        const double value = sweep.bob(a, b, c);
        out.history.push_back(value);
        out.value = value;
        out.iterations = iter;
        if (std::abs(value - previous) < options.tol * std::max(1.0, std::abs(value))) {
            out.converged = true;
            break;
        }
        previous = value;

        if (every > 0 && iter % every == 0 && iter < max_iter) {
            // Doubling line search along the drift since the last anchor.
            double best = sweep.best_value(a, b);
            Side best_a;
            Side best_b;
            bool moved = false;
            for (double t = 1.0; t <= 4096.0; t *= 2.0) {
                Side ta = extrapolated(a, anchor_a, t);
                Side tb = extrapolated(b, anchor_b, t);
                const double v = sweep.best_value(ta, tb);
                if (v > best) {
                    best = v;
                    best_a = std::move(ta);
                    best_b = std::move(tb);
                    moved = true;
                }
            }
            if (moved) {
                a = std::move(best_a);
                b = std::move(best_b);
            }
            anchor_a = a.vec;
            anchor_b = b.vec;
        }
    }

    for (int k = 0; k < kBasisSize; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out.strategy.prep_a[i] = to_dynamic(a.proj[i]);
        out.strategy.prep_b[i] = to_dynamic(b.proj[i]);
        out.strategy.observables[i] = to_dynamic(c[i]);
    }
    return out;
}

SeeSawRun run_seesaw(const WitnessCoefficients& w, const SeeSawOptions& options) {
    if (options.restarts < 1) {
        throw DomainError("run_seesaw: restarts must be >= 1");
    }
    if (options.max_iter < 1 || !(options.tol >= 0.0) || options.extrapolate_every < 0) {
        throw DomainError("run_seesaw: need max_iter >= 1, tol >= 0, extrapolate_every >= 0");
    }
    const int n = options.restarts;
    std::vector<SeeSawOutcome> outcomes(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            outcomes[static_cast<std::size_t>(i)] = seesaw_restart(w, options, i);
        }
    };
    const int threads =
        std::clamp(options.threads > 0 ? options.threads : default_thread_count(), 1, n);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    SeeSawRun run;
    run.restarts.reserve(outcomes.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const SeeSawOutcome& o = outcomes[i];
        run.restarts.push_back({o.restart_index, o.value, o.iterations, o.converged});
        if (o.value > outcomes[best].value) {
            best = i;
        }
    }
    run.best = std::move(outcomes[best]);
    return run;
}

SeeSawOutcome seesaw_separable(const WitnessCoefficients& w, std::uint64_t seed, int restarts,
                               int max_iter, double tol) {
    SeeSawOptions options;
    options.seed = seed;
    options.restarts = restarts;
    options.max_iter = max_iter;
    options.tol = tol;
    return run_seesaw(w, options).best;
}

SeeSawOutcome seesaw_classical(const WitnessCoefficients& w, std::uint64_t seed, int restarts,
                               int max_iter, double tol) {
    SeeSawOptions options;
    options.seed = seed;
    options.restarts = restarts;
    options.max_iter = max_iter;
    options.tol = tol;
    options.classical = true;
    return run_seesaw(w, options).best;
}

}  // namespace bewit
