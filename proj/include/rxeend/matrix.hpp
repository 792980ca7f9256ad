#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rxeend/error.hpp"

namespace rxeend {

// Dense row-major matrix.
template <class T>
struct Matrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<T> v;

    Matrix() = default;
    Matrix(std::int64_t r, std::int64_t c, T fill = T{})
        : rows(r), cols(c), v(static_cast<std::size_t>(r * c), fill) {}

    T& at(std::int64_t r, std::int64_t c) { return v[static_cast<std::size_t>(r * cols + c)]; }
    const T& at(std::int64_t r, std::int64_t c) const {
        return v[static_cast<std::size_t>(r * cols + c)];
    }
    T* row(std::int64_t r) { return v.data() + r * cols; }
    const T* row(std::int64_t r) const { return v.data() + r * cols; }

    std::int64_t numel() const { return rows * cols; }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> out(rows, cols);
        for (std::size_t i = 0; i < v.size(); ++i) out.v[i] = static_cast<U>(v[i]);
        return out;
    }
};

using MatF = Matrix<float>;
using MatD = Matrix<double>;

// T x S binary speaker-activity matrix; entry (t, s) = 1 when speaker s talks
// in frame t.
using LabelMatrix = Matrix<std::uint8_t>;

// Seconds between consecutive feature rows: 10 ms hop times stride 10.
constexpr double kFrameStepSec = 0.1;

// A single synthetic or loaded recording at feature level.
struct Dialogue {
    std::string id;
    std::uint64_t seed = 0;
    MatF features;       // T x F
    LabelMatrix labels;  // T x S
    double measured_overlap = 0.0;
};

}  // namespace rxeend
