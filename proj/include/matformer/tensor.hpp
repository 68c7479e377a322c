#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matformer/errors.hpp"

namespace matformer::nn {

/// Dense row-major tensor of 64-bit floats, up to 4 axes.
///
/// Storage is shared between a tensor and its prefix views: view_first_rows(k)
/// returns a tensor whose data pointer is the parent's, with shape (k, ...).
/// Because storage is row-major and views start at row 0, a prefix view is
/// always contiguous.
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
        validate_shape(shape_);
        storage_ = std::make_shared<std::vector<double>>(count(shape_), 0.0);
    }

    static Tensor scalar(double v) {
        Tensor t(std::vector<int>{1});
        (*t.storage_)[0] = v;
        return t;
    }

    static Tensor from(std::vector<int> shape, std::vector<double> data) {
        validate_shape(shape);
        if (count(shape) != static_cast<int64_t>(data.size()))
            throw DimensionError("Tensor::from: shape/data size mismatch");
        Tensor t;
        t.shape_ = std::move(shape);
        t.storage_ = std::make_shared<std::vector<double>>(std::move(data));
        return t;
    }

    bool defined() const { return storage_ != nullptr; }
    const std::vector<int>& shape() const { return shape_; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_.at(static_cast<size_t>(i)); }
    int rows() const { return shape_.empty() ? 0 : shape_[0]; }
    int cols() const { return ndim() == 2 ? shape_[1] : throw DimensionError("cols(): not 2-D"); }

    int64_t numel() const { return count(shape_); }

    double* data() { return storage_->data(); }
    const double* data() const { return storage_->data(); }
    std::span<double> flat() { return {storage_->data(), static_cast<size_t>(numel())}; }
    std::span<const double> flat() const { return {storage_->data(), static_cast<size_t>(numel())}; }

    double& operator()(int i, int j) { return storage_->data()[static_cast<int64_t>(i) * shape_[1] + j]; }
    double operator()(int i, int j) const { return storage_->data()[static_cast<int64_t>(i) * shape_[1] + j]; }
    double& operator[](int64_t i) { return storage_->data()[i]; }
    double operator[](int64_t i) const { return storage_->data()[i]; }

    bool aliases(const Tensor& other) const { return storage_ && storage_ == other.storage_; }

    /// Deep, compact copy (drops any sharing with a larger parent buffer).
    Tensor clone() const {
        Tensor t;
        t.shape_ = shape_;
        t.storage_ = std::make_shared<std::vector<double>>(data(), data() + numel());
        return t;
    }

    /// Zero-copy view of the first k entries along axis 0.
    Tensor view_first_rows(int k) const {
        if (shape_.empty() || k < 0 || k > shape_[0])
            throw DimensionError("view_first_rows: k=" + std::to_string(k) + " out of range");
        Tensor t;
        t.shape_ = shape_;
        t.shape_[0] = k;
        t.storage_ = storage_;
        return t;
    }

    void fill(double v) {
        double* p = data();
        for (int64_t i = 0, n = numel(); i < n; ++i) p[i] = v;
    }

    static int64_t count(const std::vector<int>& shape) {
        int64_t n = 1;
        for (int d : shape) n *= d;
        return shape.empty() ? 0 : n;
    }

  private:
    static void validate_shape(const std::vector<int>& shape) {
        if (shape.empty() || shape.size() > 4)
            throw DimensionError("tensor rank must be 1..4");
        for (int d : shape)
            if (d < 0) throw DimensionError("negative dimension");
    }

    std::vector<int> shape_;
    std::shared_ptr<std::vector<double>> storage_;
};

/// Raises NumericError if any element is NaN or +-Inf.
void check_finite(const Tensor& t, const char* op_name);

}  // namespace matformer::nn
