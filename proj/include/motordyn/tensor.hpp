#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace motordyn {

/// Dense row-major array of 64-bit floats with shape metadata.
/// Rank is arbitrary but everything in this project is rank 1..3.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::initializer_list<std::size_t> s) : shape(s), data(count(shape), 0.0) {}
    explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)), data(count(shape), 0.0) {}
    Tensor(std::initializer_list<std::size_t> s, std::vector<double> d);

    static Tensor zeros(std::initializer_list<std::size_t> s) { return Tensor(s); }
    static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape); }
    static Tensor full(std::initializer_list<std::size_t> s, double v);
    static Tensor vec(std::vector<double> d);

    static std::size_t count(const std::vector<std::size_t>& s);

    std::size_t size() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t dim(std::size_t i) const { return shape.at(i); }

    // rank-2 accessors, shape [R x C]
    double& at(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }
    // rank-3 accessors, shape [A x B x C]
    double& at(std::size_t a, std::size_t b, std::size_t c) {
        return data[(a * shape[1] + b) * shape[2] + c];
    }
    double at(std::size_t a, std::size_t b, std::size_t c) const {
        return data[(a * shape[1] + b) * shape[2] + c];
    }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }
    bool all_finite() const;
    void fill(double v);

    std::string shape_str() const;
};

/// Throws std::invalid_argument when shapes differ; `what` names the operation.
void require_same_shape(const Tensor& a, const Tensor& b, const char* what);

double dot(const Tensor& a, const Tensor& b);

// Channel-wise concatenation/splitting of [C x T] tensors.
Tensor concat_rows(const Tensor& a, const Tensor& b);
Tensor slice_rows(const Tensor& x, std::size_t row_begin, std::size_t row_end);

}  // namespace motordyn
