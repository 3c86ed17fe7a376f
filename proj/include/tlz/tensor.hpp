#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tlz/errors.hpp"
#include "tlz/poly.hpp"
#include "tlz/scalar.hpp"

namespace tlz {

template <class K>
using Vec = std::vector<K>;

/// Dense multi-index array over an exact coefficient type. The last index is
/// the output coordinate of the multilinear map the tensor encodes: an
/// arity-(k+1) tensor sends k input basis indices to the coefficient vector
/// of the result. Storage is row-major in index order.
template <class K>
class TensorT {
 public:
  TensorT() = default;

  explicit TensorT(std::vector<int> dims) : dims_(std::move(dims)) {
    std::size_t total = 1;
    for (int d : dims_) {
      if (d <= 0) throw ShapeError("tensor dimension must be positive");
      total *= static_cast<std::size_t>(d);
    }
    data_.assign(total, K());
  }

  int arity() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<K>& data() const { return data_; }
  std::vector<K>& data() { return data_; }

  K& at(const std::vector<int>& idx) { return data_[offset(idx)]; }
  const K& at(const std::vector<int>& idx) const { return data_[offset(idx)]; }

  std::size_t offset(const std::vector<int>& idx) const {
    if (idx.size() != dims_.size()) throw ShapeError("tensor index arity mismatch");
    std::size_t off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= dims_[k]) throw ShapeError("tensor index out of range");
      off = off * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(idx[k]);
    }
    return off;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!(v == K())) return false;
    }
    return true;
  }

  friend bool operator==(const TensorT& a, const TensorT& b) {
    return a.dims_ == b.dims_ && a.data_ == b.data_;
  }
  friend bool operator!=(const TensorT& a, const TensorT& b) { return !(a == b); }

  TensorT& operator+=(const TensorT& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  TensorT& operator-=(const TensorT& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend TensorT operator+(TensorT a, const TensorT& b) { return a += b; }
  friend TensorT operator-(TensorT a, const TensorT& b) { return a -= b; }

  TensorT operator-() const {
    TensorT out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend TensorT operator*(const K& c, TensorT t) {
    for (auto& v : t.data_) v = c * v;
    return t;
  }

 private:
  void require_same_shape(const TensorT& o) const {
    if (dims_ != o.dims_) throw ShapeError("tensor shape mismatch");
  }
  std::vector<int> dims_;
  std::vector<K> data_;
};

using Tensor = TensorT<Scalar>;
using PolyTensor = TensorT<PolyScalar>;

template <class K>
Vec<K> zero_vec(int n) {
  return Vec<K>(static_cast<std::size_t>(n), K());
}

template <class K>
Vec<K> basis_vec(int n, int i) {
  Vec<K> v = zero_vec<K>(n);
  v[static_cast<std::size_t>(i)] = K(Scalar(1));
  return v;
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const auto& c : v) {
    if (!(c == K())) return false;
  }
  return true;
}

template <class K>
Vec<K>& vec_add_in(Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

template <class K>
Vec<K> vec_add(Vec<K> a, const Vec<K>& b) {
  return vec_add_in(a, b);
}

template <class K>
Vec<K> vec_sub(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

template <class K, class C>
Vec<K> vec_scale(const C& c, Vec<K> v) {
  for (auto& x : v) x = c * x;
  return v;
}

/// Full multilinear application: `args` supplies one coefficient vector per
/// input slot (arity-1 of them) and the result is the output coefficient
/// vector. The tensor may be rational while the arguments carry polynomial
/// coefficients; the result type follows the arguments.
template <class KT, class KV>
Vec<KV> apply(const TensorT<KT>& t, const std::vector<Vec<KV>>& args) {
  int ar = t.arity();
  if (static_cast<int>(args.size()) != ar - 1) throw ShapeError("apply: wrong argument count");
  for (int k = 0; k + 1 < ar; ++k) {
    if (static_cast<int>(args[k].size()) != t.dims()[k]) {
      throw ShapeError("apply: argument length mismatch");
    }
  }
  int out_dim = t.dims()[ar - 1];
  Vec<KV> out = zero_vec<KV>(out_dim);
  const KV kv_zero{};
  const KV kv_one(Scalar(1));
  const KT kt_zero{};
  const std::vector<KT>& flat = t.data();
  std::vector<int> idx(static_cast<std::size_t>(ar), 0);
  // Odometer over the input slots; the innermost loop runs over the output
  // coordinate so each tensor entry is touched once. Combos with a zero
  // argument coefficient are skipped before any scalar work happens, which
  // makes applications to basis vectors cheap.
  while (true) {
    bool zero = false;
    for (int k = 0; k + 1 < ar; ++k) {
      if (args[k][static_cast<std::size_t>(idx[k])] == kv_zero) {
        zero = true;
        break;
      }
    }
    if (!zero) {
      KV weight = kv_one;
      for (int k = 0; k + 1 < ar; ++k) {
        const KV& c = args[k][static_cast<std::size_t>(idx[k])];
        if (!(c == kv_one)) weight = weight * c;
      }
      const std::size_t base = t.offset(idx);
      for (int o = 0; o < out_dim; ++o) {
        const KT& entry = flat[base + static_cast<std::size_t>(o)];
        if (!(entry == kt_zero)) out[o] += entry * weight;
      }
    }
    int k = ar - 2;
    while (k >= 0) {
      if (++idx[k] < t.dims()[k]) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

/// Braced-list convenience: apply(t, {x, y}) with deduced coefficient type.
template <class KT, class KV>
Vec<KV> apply(const TensorT<KT>& t, std::initializer_list<Vec<KV>> args) {
  return tlz::apply(t, std::vector<Vec<KV>>(args));
}

inline PolyTensor to_poly(const Tensor& t) {
  PolyTensor out(t.dims());
  for (std::size_t k = 0; k < t.data().size(); ++k) out.data()[k] = PolyScalar(t.data()[k]);
  return out;
}

inline Vec<PolyScalar> to_poly(const Vec<Scalar>& v) {
  Vec<PolyScalar> out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return out;
}

template <class K>
std::string vec_str(const Vec<K>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].str();
  }
  return out + ")";
}

}  // namespace tlz
