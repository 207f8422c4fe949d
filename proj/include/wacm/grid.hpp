#ifndef WACM_GRID_HPP
#define WACM_GRID_HPP

#include <array>
#include <cassert>
#include <vector>

namespace wacm {

/// Dense rank-2 component grid templated on the scalar (double or Jet).
/// Index convention for (1,1)-tensors T: t(k, j) = (T e_j)^k.
template <class S>
class Grid2 {
public:
  Grid2() = default;
  Grid2(int n0, int n1) : n0_(n0), n1_(n1), data_(static_cast<size_t>(n0) * n1) {}

  S& operator()(int i, int j) { return data_[static_cast<size_t>(i) * n1_ + j]; }
  const S& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * n1_ + j]; }

  int rows() const { return n0_; }
  int cols() const { return n1_; }

private:
  int n0_ = 0, n1_ = 0;
  std::vector<S> data_;
};

template <class S>
class Grid3 {
public:
  Grid3() = default;
  Grid3(int n0, int n1, int n2)
      : n_{n0, n1, n2}, data_(static_cast<size_t>(n0) * n1 * n2) {}

  S& operator()(int i, int j, int k) {
    return data_[(static_cast<size_t>(i) * n_[1] + j) * n_[2] + k];
  }
  const S& operator()(int i, int j, int k) const {
    return data_[(static_cast<size_t>(i) * n_[1] + j) * n_[2] + k];
  }

  int size(int axis) const { return n_[axis]; }

private:
  std::array<int, 3> n_{0, 0, 0};
  std::vector<S> data_;
};

template <class S>
class Grid4 {
public:
  Grid4() = default;
  Grid4(int n0, int n1, int n2, int n3)
      : n_{n0, n1, n2, n3}, data_(static_cast<size_t>(n0) * n1 * n2 * n3) {}

  S& operator()(int i, int j, int k, int l) {
    return data_[((static_cast<size_t>(i) * n_[1] + j) * n_[2] + k) * n_[3] + l];
  }
  const S& operator()(int i, int j, int k, int l) const {
    return data_[((static_cast<size_t>(i) * n_[1] + j) * n_[2] + k) * n_[3] + l];
  }

  int size(int axis) const { return n_[axis]; }

private:
  std::array<int, 4> n_{0, 0, 0, 0};
  std::vector<S> data_;
};

}  // namespace wacm

#endif
