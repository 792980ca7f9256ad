#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rxeend/error.hpp"
#include "rxeend/matrix.hpp"

namespace rxeend {

using Shape = std::vector<std::int64_t>;

inline std::int64_t shape_numel(const Shape& s) {
    std::int64_t n = 1;
    for (auto d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(s[i]);
    }
    return out.empty() ? "scalar" : out;
}

// Row-major GEMM, BLAS-backed: C = alpha * op(A) * op(B) + beta * C where
// op transposes when the flag is set. A is m x k (k x m transposed), B is
// k x n (n x k transposed), C is m x n.
template <class S>
void gemm_rm(bool trans_a, bool trans_b, std::int64_t m, std::int64_t n, std::int64_t k, S alpha,
             const S* a, const S* b, S beta, S* c);

// Sigmoid outputs (and BCE probabilities) are clamped to [kProbEps, 1-kProbEps]
// so cross-entropy stays finite at saturation.
constexpr double kProbEps = 1e-7;

// Handle to a node on a Tape.
struct Var {
    std::int32_t id = -1;
    bool valid() const { return id >= 0; }
};

// Reverse-mode autodiff tape. Operations append nodes in execution order, so
// the record is topologically sorted by construction; backward() walks it once
// in reverse. Backward rules are only recorded for outputs that (transitively)
// depend on a requires_grad leaf, which makes pure-inference passes cheap.
template <class S>
class Tape {
  public:
    struct Node {
        Shape shape;
        std::vector<S> values;
        bool requires_grad = false;
        std::vector<S> grad;  // allocated by backward()
    };

    Var leaf(Shape shape, std::vector<S> values, bool requires_grad = false) {
        if (shape_numel(shape) != static_cast<std::int64_t>(values.size()))
            throw DimensionError("leaf: shape " + shape_str(shape) + " does not match " +
                                 std::to_string(values.size()) + " values");
        return push(std::move(shape), std::move(values), requires_grad);
    }

    template <class T>
    Var leaf_matrix(const Matrix<T>& m, bool requires_grad = false) {
        std::vector<S> vals(m.v.size());
        for (std::size_t i = 0; i < m.v.size(); ++i) vals[i] = static_cast<S>(m.v[i]);
        return push({m.rows, m.cols}, std::move(vals), requires_grad);
    }

    // ---- ops ---------------------------------------------------------------

    Var matmul(Var a, Var b) {
        const Node& na = node(a);
        const Node& nb = node(b);
        require_2d(na, "matmul");
        require_2d(nb, "matmul");
        const std::int64_t m = na.shape[0], k = na.shape[1], n = nb.shape[1];
        if (k != nb.shape[0])
            throw DimensionError("matmul: inner dimensions disagree: " + shape_str(na.shape) +
                                 " vs " + shape_str(nb.shape));
        std::vector<S> out(static_cast<std::size_t>(m * n));
        gemm_rm<S>(false, false, m, n, k, S(1), na.values.data(), nb.values.data(), S(0),
                   out.data());
        Var y = push({m, n}, std::move(out), na.requires_grad || nb.requires_grad);
        record(y, [a, b, y, m, n, k](Tape& t) {
            const auto& g = t.node(y).grad;
            if (t.node(a).requires_grad)
                gemm_rm<S>(false, true, m, k, n, S(1), g.data(), t.node(b).values.data(), S(1),
                           t.mutable_grad(a));
            if (t.node(b).requires_grad)
                gemm_rm<S>(true, false, k, n, m, S(1), t.node(a).values.data(), g.data(), S(1),
                           t.mutable_grad(b));
        });
        return y;
    }

    // a * b^T; a is m x k, b is n x k.
    Var matmul_nt(Var a, Var b) {
        const Node& na = node(a);
        const Node& nb = node(b);
        require_2d(na, "matmul_nt");
        require_2d(nb, "matmul_nt");
        const std::int64_t m = na.shape[0], k = na.shape[1], n = nb.shape[0];
        if (k != nb.shape[1])
            throw DimensionError("matmul_nt: inner dimensions disagree: " + shape_str(na.shape) +
                                 " vs " + shape_str(nb.shape) + " transposed");
        std::vector<S> out(static_cast<std::size_t>(m * n));
        gemm_rm<S>(false, true, m, n, k, S(1), na.values.data(), nb.values.data(), S(0),
                   out.data());
        Var y = push({m, n}, std::move(out), na.requires_grad || nb.requires_grad);
        record(y, [a, b, y, m, n, k](Tape& t) {
            const auto& g = t.node(y).grad;
            if (t.node(a).requires_grad)
                gemm_rm<S>(false, false, m, k, n, S(1), g.data(), t.node(b).values.data(), S(1),
                           t.mutable_grad(a));
            if (t.node(b).requires_grad)
                gemm_rm<S>(true, false, n, k, m, S(1), g.data(), t.node(a).values.data(), S(1),
                           t.mutable_grad(b));
        });
        return y;
    }

    Var add(Var a, Var b) {
        const Node& na = node(a);
        const Node& nb = node(b);
        if (na.shape != nb.shape)
            throw DimensionError("add: shape mismatch: " + shape_str(na.shape) + " vs " +
                                 shape_str(nb.shape));
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = na.values[i] + nb.values[i];
        Var y = push(na.shape, std::move(out), na.requires_grad || nb.requires_grad);
        record(y, [a, b, y](Tape& t) {
            const auto& g = t.node(y).grad;
            if (t.node(a).requires_grad) {
                S* ga = t.mutable_grad(a);
                for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i];
            }
            if (t.node(b).requires_grad) {
                S* gb = t.mutable_grad(b);
                for (std::size_t i = 0; i < g.size(); ++i) gb[i] += g[i];
            }
        });
        return y;
    }

    // x is m x n, bias is a length-n vector added to every row.
    Var add_row_bias(Var x, Var bias) {
        const Node& nx = node(x);
        const Node& nb = node(bias);
        require_2d(nx, "add_row_bias");
        if (nb.shape.size() != 1 || nb.shape[0] != nx.shape[1])
            throw DimensionError("add_row_bias: bias " + shape_str(nb.shape) +
                                 " does not match row width of " + shape_str(nx.shape));
        const std::int64_t m = nx.shape[0], n = nx.shape[1];
        std::vector<S> out(nx.values.size());
        for (std::int64_t r = 0; r < m; ++r)
            for (std::int64_t c = 0; c < n; ++c)
                out[static_cast<std::size_t>(r * n + c)] =
                    nx.values[static_cast<std::size_t>(r * n + c)] +
                    nb.values[static_cast<std::size_t>(c)];
        Var y = push(nx.shape, std::move(out), nx.requires_grad || nb.requires_grad);
        record(y, [x, bias, y, m, n](Tape& t) {
            const auto& g = t.node(y).grad;
            if (t.node(x).requires_grad) {
                S* gx = t.mutable_grad(x);
                for (std::size_t i = 0; i < g.size(); ++i) gx[i] += g[i];
            }
            if (t.node(bias).requires_grad) {
                S* gb = t.mutable_grad(bias);
                for (std::int64_t r = 0; r < m; ++r)
                    for (std::int64_t c = 0; c < n; ++c)
                        gb[c] += g[static_cast<std::size_t>(r * n + c)];
            }
        });
        return y;
    }

    Var mul(Var a, Var b) {
        const Node& na = node(a);
        const Node& nb = node(b);
        if (na.shape != nb.shape)
            throw DimensionError("mul: shape mismatch: " + shape_str(na.shape) + " vs " +
                                 shape_str(nb.shape));
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = na.values[i] * nb.values[i];
        Var y = push(na.shape, std::move(out), na.requires_grad || nb.requires_grad);
        record(y, [a, b, y](Tape& t) {
            const auto& g = t.node(y).grad;
            if (t.node(a).requires_grad) {
                S* ga = t.mutable_grad(a);
                const auto& vb = t.node(b).values;
                for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] * vb[i];
            }
            if (t.node(b).requires_grad) {
                S* gb = t.mutable_grad(b);
                const auto& va = t.node(a).values;
                for (std::size_t i = 0; i < g.size(); ++i) gb[i] += g[i] * va[i];
            }
        });
        return y;
    }

    Var scale(Var a, S c) {
        const Node& na = node(a);
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = na.values[i] * c;
        Var y = push(na.shape, std::move(out), na.requires_grad);
        record(y, [a, y, c](Tape& t) {
            const auto& g = t.node(y).grad;
            S* ga = t.mutable_grad(a);
            for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] * c;
        });
        return y;
    }

    Var relu(Var a) {
        const Node& na = node(a);
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = na.values[i] > S(0) ? na.values[i] : S(0);
        Var y = push(na.shape, std::move(out), na.requires_grad);
        record(y, [a, y](Tape& t) {
            const auto& g = t.node(y).grad;
            const auto& va = t.node(a).values;
            S* ga = t.mutable_grad(a);
            for (std::size_t i = 0; i < g.size(); ++i)
                if (va[i] > S(0)) ga[i] += g[i];
        });
        return y;
    }

    Var sigmoid(Var a) {
        const Node& na = node(a);
        const S lo = static_cast<S>(kProbEps);
        const S hi = S(1) - static_cast<S>(kProbEps);
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const S s = S(1) / (S(1) + std::exp(-na.values[i]));
            out[i] = std::min(hi, std::max(lo, s));
        }
        Var y = push(na.shape, std::move(out), na.requires_grad);
        record(y, [a, y](Tape& t) {
            const auto& g = t.node(y).grad;
            const auto& vy = t.node(y).values;
            S* ga = t.mutable_grad(a);
            for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] * vy[i] * (S(1) - vy[i]);
        });
        return y;
    }

    // Natural log with a 1e-30 floor so finite inputs always give finite
    // outputs; callers feed it clamped probabilities.
    Var log_floor(Var a) {
        const Node& na = node(a);
        const S floor_v = static_cast<S>(1e-30);
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::log(std::max(na.values[i], floor_v));
        Var y = push(na.shape, std::move(out), na.requires_grad);
        record(y, [a, y, floor_v](Tape& t) {
            const auto& g = t.node(y).grad;
            const auto& va = t.node(a).values;
            S* ga = t.mutable_grad(a);
            for (std::size_t i = 0; i < g.size(); ++i)
                ga[i] += g[i] / std::max(va[i], floor_v);
        });
        return y;
    }

    Var one_minus(Var a) {
        const Node& na = node(a);
        std::vector<S> out(na.values.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = S(1) - na.values[i];
        Var y = push(na.shape, std::move(out), na.requires_grad);
        record(y, [a, y](Tape& t) {
            const auto& g = t.node(y).grad;
            S* ga = t.mutable_grad(a);
            for (std::size_t i = 0; i < g.size(); ++i) ga[i] -= g[i];
        });
        return y;
    }

    // Row-wise softmax with max subtraction.
    Var softmax_rows(Var a) {
        const Node& na = node(a);
        require_2d(na, "softmax_rows");
        const std::int64_t m = na.shape[0], n = na.shape[1];
        std::vector<S> out(na.values.size());
        for (std::int64_t r = 0; r < m; ++r) {
            const S* xr = na.values.data() + r * n;
            S* yr = out.data() + r * n;
            S mx = xr[0];
            for (std::int64_t c = 1; c < n; ++c) mx = std::max(mx, xr[c]);
            S sum = S(0);
            for (std::int64_t c = 0; c < n; ++c) {
                yr[c] = std::exp(xr[c] - mx);
                sum += yr[c];
            }
            for (std::int64_t c = 0; c < n; ++c) yr[c] /= sum;
        }
        Var y = push(na.shape, std::move(out), na.requires_grad);
        record(y, [a, y, m, n](Tape& t) {
            const auto& g = t.node(y).grad;
            const auto& vy = t.node(y).values;
            S* ga = t.mutable_grad(a);
            for (std::int64_t r = 0; r < m; ++r) {
                const S* gr = g.data() + r * n;
                const S* yr = vy.data() + r * n;
                S dot = S(0);
                for (std::int64_t c = 0; c < n; ++c) dot += gr[c] * yr[c];
                for (std::int64_t c = 0; c < n; ++c) ga[r * n + c] += yr[c] * (gr[c] - dot);
            }
        });
        return y;
    }

    // Per-row normalization over the feature axis, then gain/bias.
    Var layer_norm(Var x, Var gain, Var bias, S eps) {
        if (eps <= S(0)) throw ContractError("layer_norm: eps must be positive");
        const Node& nx = node(x);
        const Node& ng = node(gain);
        const Node& nb = node(bias);
        require_2d(nx, "layer_norm");
        const std::int64_t m = nx.shape[0], n = nx.shape[1];
        if (ng.shape.size() != 1 || ng.shape[0] != n || nb.shape.size() != 1 || nb.shape[0] != n)
            throw DimensionError("layer_norm: gain/bias must be length-" + std::to_string(n) +
                                 " vectors");
        std::vector<S> out(nx.values.size());
        // xhat and inv_std are needed by the backward rule; keep copies.
        auto xhat = std::make_shared<std::vector<S>>(nx.values.size());
        auto inv_std = std::make_shared<std::vector<S>>(static_cast<std::size_t>(m));
        for (std::int64_t r = 0; r < m; ++r) {
            const S* xr = nx.values.data() + r * n;
            S mean = S(0);
            for (std::int64_t c = 0; c < n; ++c) mean += xr[c];
            mean /= static_cast<S>(n);
            S var = S(0);
            for (std::int64_t c = 0; c < n; ++c) var += (xr[c] - mean) * (xr[c] - mean);
            var /= static_cast<S>(n);
            const S inv = S(1) / std::sqrt(var + eps);
            (*inv_std)[static_cast<std::size_t>(r)] = inv;
            for (std::int64_t c = 0; c < n; ++c) {
                const S xh = (xr[c] - mean) * inv;
                (*xhat)[static_cast<std::size_t>(r * n + c)] = xh;
                out[static_cast<std::size_t>(r * n + c)] =
                    xh * ng.values[static_cast<std::size_t>(c)] +
                    nb.values[static_cast<std::size_t>(c)];
            }
        }
        Var y = push(nx.shape, std::move(out),
                     nx.requires_grad || ng.requires_grad || nb.requires_grad);
        record(y, [x, gain, bias, y, m, n, xhat, inv_std](Tape& t) {
            const auto& g = t.node(y).grad;
            const auto& gv = t.node(gain).values;
            if (t.node(gain).requires_grad) {
                S* gg = t.mutable_grad(gain);
                for (std::int64_t r = 0; r < m; ++r)
                    for (std::int64_t c = 0; c < n; ++c)
                        gg[c] += g[static_cast<std::size_t>(r * n + c)] *
                                 (*xhat)[static_cast<std::size_t>(r * n + c)];
            }
            if (t.node(bias).requires_grad) {
                S* gb = t.mutable_grad(bias);
                for (std::int64_t r = 0; r < m; ++r)
                    for (std::int64_t c = 0; c < n; ++c)
                        gb[c] += g[static_cast<std::size_t>(r * n + c)];
            }
            if (t.node(x).requires_grad) {
                // d/dx of (x - mean)/std per row:
                // dx = inv * (dxhat - mean(dxhat) - xhat * mean(dxhat . xhat))
                S* gx = t.mutable_grad(x);
                for (std::int64_t r = 0; r < m; ++r) {
                    const S inv = (*inv_std)[static_cast<std::size_t>(r)];
                    S sum_d = S(0), sum_dx = S(0);
                    for (std::int64_t c = 0; c < n; ++c) {
                        const S dxh = g[static_cast<std::size_t>(r * n + c)] *
                                      gv[static_cast<std::size_t>(c)];
                        sum_d += dxh;
                        sum_dx += dxh * (*xhat)[static_cast<std::size_t>(r * n + c)];
                    }
                    const S mean_d = sum_d / static_cast<S>(n);
                    const S mean_dx = sum_dx / static_cast<S>(n);
                    for (std::int64_t c = 0; c < n; ++c) {
                        const S dxh = g[static_cast<std::size_t>(r * n + c)] *
                                      gv[static_cast<std::size_t>(c)];
                        gx[r * n + c] +=
                            inv * (dxh - mean_d -
                                   (*xhat)[static_cast<std::size_t>(r * n + c)] * mean_dx);
                    }
                }
            }
        });
        return y;
    }

    // Horizontal concatenation of equally-tall matrices.
    Var concat_cols(const std::vector<Var>& parts) {
        if (parts.empty()) throw ContractError("concat_cols: no inputs");
        const std::int64_t m = node(parts[0]).shape[0];
        std::int64_t total = 0;
        bool rg = false;
        for (Var p : parts) {
            const Node& np = node(p);
            require_2d(np, "concat_cols");
            if (np.shape[0] != m)
                throw DimensionError("concat_cols: row counts disagree: " +
                                     shape_str(node(parts[0]).shape) + " vs " +
                                     shape_str(np.shape));
            total += np.shape[1];
            rg = rg || np.requires_grad;
        }
        std::vector<S> out(static_cast<std::size_t>(m * total));
        std::int64_t off = 0;
        for (Var p : parts) {
            const Node& np = node(p);
            const std::int64_t w = np.shape[1];
            for (std::int64_t r = 0; r < m; ++r)
                std::copy_n(np.values.data() + r * w, w, out.data() + r * total + off);
            off += w;
        }
        auto parts_copy = parts;
        Var y = push({m, total}, std::move(out), rg);
        record(y, [parts_copy, y, m, total](Tape& t) {
            const auto& g = t.node(y).grad;
            std::int64_t off2 = 0;
            for (Var p : parts_copy) {
                const std::int64_t w = t.node(p).shape[1];
                if (t.node(p).requires_grad) {
                    S* gp = t.mutable_grad(p);
                    for (std::int64_t r = 0; r < m; ++r)
                        for (std::int64_t c = 0; c < w; ++c)
                            gp[r * w + c] += g[static_cast<std::size_t>(r * total + off2 + c)];
                }
                off2 += w;
            }
        });
        return y;
    }

    Var slice_cols(Var x, std::int64_t start, std::int64_t len) {
        const Node& nx = node(x);
        require_2d(nx, "slice_cols");
        const std::int64_t m = nx.shape[0], n = nx.shape[1];
        if (start < 0 || len <= 0 || start + len > n)
            throw DimensionError("slice_cols: range [" + std::to_string(start) + ", " +
                                 std::to_string(start + len) + ") outside width " +
                                 std::to_string(n));
        std::vector<S> out(static_cast<std::size_t>(m * len));
        for (std::int64_t r = 0; r < m; ++r)
            std::copy_n(nx.values.data() + r * n + start, len, out.data() + r * len);
        Var y = push({m, len}, std::move(out), nx.requires_grad);
        record(y, [x, y, m, n, start, len](Tape& t) {
            const auto& g = t.node(y).grad;
            S* gx = t.mutable_grad(x);
            for (std::int64_t r = 0; r < m; ++r)
                for (std::int64_t c = 0; c < len; ++c)
                    gx[r * n + start + c] += g[static_cast<std::size_t>(r * len + c)];
        });
        return y;
    }

    Var sum_all(Var a) {
        const Node& na = node(a);
        S total = S(0);
        for (S v : na.values) total += v;
        Var y = push({1}, {total}, na.requires_grad);
        record(y, [a, y](Tape& t) {
            const S g = t.node(y).grad[0];
            S* ga = t.mutable_grad(a);
            const std::size_t sz = t.node(a).values.size();
            for (std::size_t i = 0; i < sz; ++i) ga[i] += g;
        });
        return y;
    }

    Var mean_all(Var a) {
        const Node& na = node(a);
        const S inv = S(1) / static_cast<S>(na.values.size());
        S total = S(0);
        for (S v : na.values) total += v;
        Var y = push({1}, {total * inv}, na.requires_grad);
        record(y, [a, y, inv](Tape& t) {
            const S g = t.node(y).grad[0] * inv;
            S* ga = t.mutable_grad(a);
            const std::size_t sz = t.node(a).values.size();
            for (std::size_t i = 0; i < sz; ++i) ga[i] += g;
        });
        return y;
    }

    // ---- backward ----------------------------------------------------------

    void backward(Var loss) {
        if (ran_backward_) throw ContractError("backward: already run on this tape");
        const Node& nl = node(loss);
        if (shape_numel(nl.shape) != 1)
            throw ContractError("backward: loss must be scalar, got " + shape_str(nl.shape));
        if (!nl.requires_grad)
            throw ContractError("backward: loss does not depend on any requires_grad tensor");
        ran_backward_ = true;
        for (Node& nd : nodes_)
            if (nd.requires_grad) nd.grad.assign(nd.values.size(), S(0));
        nodes_[static_cast<std::size_t>(loss.id)].grad[0] = S(1);
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) (*it)(*this);
    }

    bool ran_backward() const { return ran_backward_; }

    // ---- access ------------------------------------------------------------

    const Node& node(Var v) const {
        if (!v.valid() || static_cast<std::size_t>(v.id) >= nodes_.size())
            throw ContractError("invalid tape handle");
        return nodes_[static_cast<std::size_t>(v.id)];
    }

    const std::vector<S>& values(Var v) const { return node(v).values; }

    const std::vector<S>& grad(Var v) const {
        const Node& n = node(v);
        if (!n.requires_grad) throw ContractError("grad: node does not require gradients");
        if (!ran_backward_) throw ContractError("grad: backward has not run");
        return n.grad;
    }

    Matrix<S> matrix(Var v) const {
        const Node& n = node(v);
        require_2d(n, "matrix");
        Matrix<S> out(n.shape[0], n.shape[1]);
        out.v = n.values;
        return out;
    }

    std::size_t num_nodes() const { return nodes_.size(); }
    std::size_t num_ops() const { return ops_.size(); }

  private:
    static void require_2d(const Node& n, const char* op) {
        if (n.shape.size() != 2)
            throw DimensionError(std::string(op) + ": expected a 2-D tensor, got " +
                                 shape_str(n.shape));
    }

    Var push(Shape shape, std::vector<S> values, bool requires_grad) {
        nodes_.push_back(Node{std::move(shape), std::move(values), requires_grad, {}});
        return Var{static_cast<std::int32_t>(nodes_.size() - 1)};
    }

    void record(Var out, std::function<void(Tape&)> fn) {
        if (node(out).requires_grad) ops_.push_back(std::move(fn));
    }

    S* mutable_grad(Var v) { return nodes_[static_cast<std::size_t>(v.id)].grad.data(); }

    std::vector<Node> nodes_;
    std::vector<std::function<void(Tape&)>> ops_;
    bool ran_backward_ = false;
};

// Max relative error between the analytic gradient of f (a scalar-valued
// tape function of one tensor) and central finite differences with step h.
// Only meaningful in double precision.
inline double grad_check(const std::function<Var(Tape<double>&, Var)>& f, const Shape& shape,
                         const std::vector<double>& x0, double h = 1e-5) {
    Tape<double> tape;
    Var x = tape.leaf(shape, x0, true);
    Var y = f(tape, x);
    tape.backward(y);
    const std::vector<double> analytic = tape.grad(x);

    auto eval = [&](const std::vector<double>& xv) {
        Tape<double> t;
        Var xi = t.leaf(shape, xv, false);
        Var yi = f(t, xi);
        return t.values(yi)[0];
    };

    double max_err = 0.0;
    std::vector<double> xv = x0;
    for (std::size_t i = 0; i < xv.size(); ++i) {
        const double orig = xv[i];
        xv[i] = orig + h;
        const double fp = eval(xv);
        xv[i] = orig - h;
        const double fm = eval(xv);
        xv[i] = orig;
        const double fd = (fp - fm) / (2.0 * h);
        const double err = std::abs(analytic[i] - fd) / std::max(1.0, std::abs(analytic[i]));
        max_err = std::max(max_err, err);
    }
    return max_err;
}

}  // namespace rxeend
