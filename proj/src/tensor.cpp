#include "motordyn/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace motordyn {

Tensor::Tensor(std::initializer_list<std::size_t> s, std::vector<double> d)
    : shape(s), data(std::move(d)) {
    if (data.size() != count(shape))
        throw std::invalid_argument("Tensor: data length " + std::to_string(data.size()) +
                                    " does not match shape " + shape_str());
}

std::size_t Tensor::count(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (std::size_t e : s) n *= e;
    return s.empty() ? 0 : n;
}

Tensor Tensor::full(std::initializer_list<std::size_t> s, double v) {
    Tensor t(s);
    t.fill(v);
    return t;
}

Tensor Tensor::vec(std::vector<double> d) {
    Tensor t;
    t.shape = {d.size()};
    t.data = std::move(d);
    return t;
}

bool Tensor::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

void Tensor::fill(double v) {
    for (double& x : data) x = v;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? " x " : "") << shape[i];
    os << "]";
    return os.str();
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(what) + ": shape mismatch " + a.shape_str() +
                                    " vs " + b.shape_str());
}

double dot(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.data[i] * b.data[i];
    return s;
}

Tensor concat_rows(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.dim(1) != b.dim(1))
        throw std::invalid_argument("concat_rows: need [C x T] tensors with equal T, got " +
                                    a.shape_str() + " and " + b.shape_str());
    Tensor out({a.dim(0) + b.dim(0), a.dim(1)});
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(), out.data.begin() + static_cast<std::ptrdiff_t>(a.size()));
    return out;
}

Tensor slice_rows(const Tensor& x, std::size_t row_begin, std::size_t row_end) {
    if (x.rank() != 2 || row_end > x.dim(0) || row_begin > row_end)
        throw std::invalid_argument("slice_rows: bad row range on " + x.shape_str());
    const std::size_t t = x.dim(1);
    Tensor out({row_end - row_begin, t});
    std::copy(x.data.begin() + static_cast<std::ptrdiff_t>(row_begin * t),
              x.data.begin() + static_cast<std::ptrdiff_t>(row_end * t), out.data.begin());
    return out;
}

}  // namespace motordyn
