#include "barber/noise.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "barber/errors.hpp"
#include "barber/rng.hpp"
#include "barber/statevector.hpp"

namespace barber {

namespace {

constexpr double kProbabilityFloor = 1e-20;
// Wider registers always use the sparse trajectory state; narrower ones only
// when the noiseless evolution stays on a small fraction of the basis.
constexpr int kDenseTrajectoryQubits = 14;
constexpr int kSparseShift = 4;

struct CompiledGate {
    Matrix local;
    std::vector<int> qubits;
};

struct CompiledLayer {
    std::vector<CompiledGate> gates;
    std::vector<double> gamma;  // per qubit
};

std::vector<CompiledLayer> compile(const Circuit& c, const DeviceProfile& p) {
    const Schedule s = schedule(c, p);
    std::vector<CompiledLayer> out;
    out.reserve(s.layers.size());
    for (const auto& layer : s.layers) {
        CompiledLayer cl;
        for (std::size_t idx : layer.ops)
            if (const auto* g = std::get_if<Gate>(&c.ops()[idx])) cl.gates.push_back({gate_matrix(*g), g->qubits});
        cl.gamma.resize(static_cast<std::size_t>(c.num_qubits()));
        for (int q = 0; q < c.num_qubits(); ++q)
            cl.gamma[static_cast<std::size_t>(q)] = damping_gamma(layer.duration_ns, p.t1_us[static_cast<std::size_t>(q)]);
        out.push_back(std::move(cl));
    }
    return out;
}

Matrix conjugate(const Matrix& m) {
    Matrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = std::conj(m(r, c));
    return out;
}

void damp_density(std::vector<Complex>& rho, int n, int q, double gamma) {
    const std::size_t cb = std::size_t{1} << q;
    const std::size_t rb = std::size_t{1} << (n + q);
    const double keep = std::sqrt(1.0 - gamma);
    for (std::size_t base = 0; base < rho.size(); ++base) {
        if (base & (cb | rb)) continue;
        const Complex p11 = rho[base | rb | cb];
        rho[base] += gamma * p11;
        rho[base | cb] *= keep;
        rho[base | rb] *= keep;
        rho[base | rb | cb] = (1.0 - gamma) * p11;
    }
}

/// One trajectory step of amplitude damping on qubit `q`.
void damp_trajectory(std::vector<Complex>& amps, int q, double gamma, double u) {
    const std::size_t bit = std::size_t{1} << q;
    double p1 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (i & bit) p1 += std::norm(amps[i]);
    const double jump = gamma * p1;
    if (u < jump) {
        const double scale = 1.0 / std::sqrt(p1);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & bit) continue;
            amps[i] = amps[i | bit] * scale;
            amps[i | bit] = 0.0;
        }
    } else {
        const double keep = std::sqrt(1.0 - gamma);
        const double scale = 1.0 / std::sqrt(1.0 - jump);
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= (i & bit) ? keep * scale : scale;
    }
}

/// Sorted (index, amplitude) list for wide registers whose trajectories stay
/// sparse (basis-state cascades, GHZ). Falls back to CapacityError when the
/// support blows past kMaxSparseSupport.
class SparseState {
public:
    static constexpr std::size_t kMaxSparseSupport = std::size_t{1} << 22;

    void reset() {
        entries_.assign(1, {Outcome{0}, Complex{1.0}});
    }

    void apply(const Matrix& local, const std::vector<int>& qubits) {
        const int k = static_cast<int>(qubits.size());
        const std::size_t dim = std::size_t{1} << k;
        Outcome mask = 0;
        std::vector<Outcome> offsets(dim, 0);
        for (int b = 0; b < k; ++b) {
            const Outcome bit = Outcome{1} << qubits[static_cast<std::size_t>(b)];
            mask |= bit;
            for (std::size_t j = 0; j < dim; ++j)
                if ((j >> (k - 1 - b)) & 1U) offsets[j] |= bit;
        }
        std::unordered_map<Outcome, std::size_t> slot;
        std::vector<Outcome> bases;
        std::vector<Complex> in;
        for (const auto& [idx, a] : entries_) {
            const Outcome base = idx & ~mask;
            auto [it, fresh] = slot.try_emplace(base, bases.size());
            if (fresh) {
                bases.push_back(base);
                in.resize(in.size() + dim);
            }
            std::size_t local_index = 0;
            for (int b = 0; b < k; ++b)
                if (idx & (Outcome{1} << qubits[static_cast<std::size_t>(b)])) local_index |= std::size_t{1} << (k - 1 - b);
            in[it->second * dim + local_index] = a;
        }
        entries_.clear();
        for (std::size_t s = 0; s < bases.size(); ++s) {
            for (std::size_t r = 0; r < dim; ++r) {
                Complex acc{};
                for (std::size_t c = 0; c < dim; ++c) acc += local(r, c) * in[s * dim + c];
                if (std::norm(acc) > kAmplitudeFloor) entries_.emplace_back(bases[s] | offsets[r], acc);
            }
        }
        if (entries_.size() > kMaxSparseSupport)
            throw CapacityError("sparse trajectory support exceeded " + std::to_string(kMaxSparseSupport) + " states");
        std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    void damp(int q, double gamma, double u) {
        const Outcome bit = Outcome{1} << q;
        double p1 = 0.0;
        for (const auto& [idx, a] : entries_)
            if (idx & bit) p1 += std::norm(a);
        const double jump = gamma * p1;
        if (u < jump) {
            const double scale = 1.0 / std::sqrt(p1);
            std::vector<std::pair<Outcome, Complex>> next;
            for (const auto& [idx, a] : entries_)
                if (idx & bit) next.emplace_back(idx & ~bit, a * scale);
            entries_ = std::move(next);
            std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        } else {
            const double keep = std::sqrt(1.0 - gamma);
            const double scale = 1.0 / std::sqrt(1.0 - jump);
            for (auto& [idx, a] : entries_) a *= (idx & bit) ? keep * scale : scale;
        }
    }

    Outcome sample(double u) const {
        double acc = 0.0;
        for (const auto& [idx, a] : entries_) {
            acc += std::norm(a);
            if (u < acc) return idx;
        }
        return entries_.back().first;
    }

private:
    static constexpr double kAmplitudeFloor = 1e-30;
    std::vector<std::pair<Outcome, Complex>> entries_;
};

bool prefer_sparse(const std::vector<CompiledLayer>& layers, int n) {
    if (n > kDenseTrajectoryQubits) return true;
    if (n < 2 * kSparseShift) return false;
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    const std::size_t limit = amps.size() >> kSparseShift;
    for (const auto& layer : layers) {
        for (const auto& g : layer.gates) apply_local_matrix(amps, n, g.local, g.qubits);
        const auto support = static_cast<std::size_t>(
            std::count_if(amps.begin(), amps.end(), [](const Complex& a) { return std::norm(a) > 1e-30; }));
        if (support > limit) return false;
    }
    return true;
}

Outcome sample_outcome(const std::vector<Complex>& amps, double u) {
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        if (u < acc) return static_cast<Outcome>(i);
    }
    // Rounding left u above the final cumulative sum: take the last populated state.
    for (std::size_t i = amps.size(); i-- > 0;)
        if (std::norm(amps[i]) > 0) return static_cast<Outcome>(i);
    return 0;
}

}  // namespace

double Schedule::wall_time_ns() const {
    double t = 0.0;
    for (const auto& l : layers) t += l.duration_ns;
    return t;
}

double Schedule::exposure_ns(int) const { return wall_time_ns(); }

Schedule schedule(const Circuit& c, const DeviceProfile& p) {
    if (p.num_qubits() < c.num_qubits())
        throw std::invalid_argument("profile '" + p.name + "' covers " + std::to_string(p.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(c.num_qubits()));
    p.validate();
    const Layering lay = asap_layers(c);
    Schedule s;
    s.layers.resize(static_cast<std::size_t>(lay.num_layers));
    for (std::size_t i = 0; i < c.ops().size(); ++i) {
        const int layer = lay.op_layer[i];
        if (layer == 0) continue;
        auto& l = s.layers[static_cast<std::size_t>(layer - 1)];
        l.ops.push_back(i);
        if (const auto* g = std::get_if<Gate>(&c.ops()[i])) {
            l.duration_ns = std::max(l.duration_ns, p.gate_duration_ns(g->arity()));
        } else {
            l.measurement = true;
            l.duration_ns = std::max(l.duration_ns, p.dur_meas_ns);
        }
    }
    return s;
}

Distribution run_exact(const Circuit& c, const DeviceProfile& p, const ExactOptions& opts) {
    const int n = c.num_qubits();
    if (opts.max_qubits > kMaxExactQubits)
        throw CapacityError("run_exact cap cannot exceed " + std::to_string(kMaxExactQubits) + " qubits");
    if (n > opts.max_qubits)
        throw CapacityError("run_exact limited to " + std::to_string(opts.max_qubits) + " qubits, got " +
                            std::to_string(n));
    if (n > kDefaultExactQubits)
        std::cerr << "warning: exact density-matrix run on " << n << " qubits needs "
                  << ((std::size_t{16} << (2 * n)) >> 20) << " MiB\n";

    const auto layers = compile(c, p);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> rho(dim * dim, Complex{});
    rho[0] = 1.0;

    std::vector<int> row_qubits;
    for (const auto& layer : layers) {
        for (const auto& g : layer.gates) {
            row_qubits.clear();
            for (int q : g.qubits) row_qubits.push_back(q + n);
            apply_local_matrix(rho, 2 * n, g.local, row_qubits);
            apply_local_matrix(rho, 2 * n, conjugate(g.local), g.qubits);
        }
        for (int q = 0; q < n; ++q) {
            const double gamma = layer.gamma[static_cast<std::size_t>(q)];
            if (gamma > 0) damp_density(rho, n, q, gamma);
        }
    }

    Distribution d{n, {}};
    for (std::size_t k = 0; k < dim; ++k) {
        const double pk = rho[k * dim + k].real();
        if (pk >= kProbabilityFloor) d.probs.emplace_hint(d.probs.end(), static_cast<Outcome>(k), pk);
    }
    return d;
}

OutcomeCounts run_trajectories(const Circuit& c, const DeviceProfile& p, std::uint64_t shots,
                               std::uint64_t seed, const TrajectoryOptions& opts) {
    if (shots == 0) throw std::invalid_argument("run_trajectories: shots must be positive");
    const int n = c.num_qubits();
    if (n > kMaxStatevectorQubits)
        throw CapacityError("trajectory sampler limited to " + std::to_string(kMaxStatevectorQubits) + " qubits");
    const auto layers = compile(c, p);

    unsigned workers = opts.workers ? opts.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shots));

    const bool sparse = prefer_sparse(layers, n);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, OutcomeCounts& out) {
        if (sparse) {
            SparseState state;
            for (std::uint64_t shot = begin; shot < end; ++shot) {
                std::mt19937_64 engine(derive_seed(seed, shot));
                state.reset();
                for (const auto& layer : layers) {
                    for (const auto& g : layer.gates) state.apply(g.local, g.qubits);
                    for (int q = 0; q < n; ++q) {
                        const double gamma = layer.gamma[static_cast<std::size_t>(q)];
                        if (gamma > 0) state.damp(q, gamma, uniform01(engine));
                    }
                }
                out.add(state.sample(uniform01(engine)));
            }
            return;
        }
        std::vector<Complex> amps(std::size_t{1} << n);
        for (std::uint64_t shot = begin; shot < end; ++shot) {
            std::mt19937_64 engine(derive_seed(seed, shot));
            std::fill(amps.begin(), amps.end(), Complex{});
            amps[0] = 1.0;
            for (const auto& layer : layers) {
                for (const auto& g : layer.gates) apply_local_matrix(amps, n, g.local, g.qubits);
                for (int q = 0; q < n; ++q) {
                    const double gamma = layer.gamma[static_cast<std::size_t>(q)];
                    if (gamma > 0) damp_trajectory(amps, q, gamma, uniform01(engine));
                }
            }
            out.add(sample_outcome(amps, uniform01(engine)));
        }
    };

    std::vector<OutcomeCounts> partial(workers, OutcomeCounts{n, 0, {}});
    if (workers == 1) {
        run_range(0, shots, partial[0]);
    } else {
        std::vector<std::jthread> threads;
        const std::uint64_t chunk = shots / workers, extra = shots % workers;
        std::uint64_t begin = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
            threads.emplace_back([&, w, begin, end] { run_range(begin, end, partial[w]); });
            begin = end;
        }
    }

    OutcomeCounts total{n, 0, {}};
    for (const auto& part : partial)
        for (const auto& [k, v] : part.counts) total.add(k, v);
    return total;
}

}  // namespace barber
