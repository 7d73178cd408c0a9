#pragma once

// Linear maps T_p : (C^n)^{⊗k} -> (C^n)^{⊗l} attached to pairings, and
// Hom-space dimensions computed as exact ranks of their spans.
//
// Index convention: the lower points 1..l carry the output multi-index
// j_1..j_l left to right; the upper circle points l+1..l+k carry the input
// multi-index i_k..i_1 (the upper row is numbered right to left on the
// circle).  Multi-indices are flattened with the leftmost index most
// significant.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "ostar/common.hpp"
#include "ostar/diagrams.hpp"
#include "ostar/kernels.hpp"

namespace ostar::tensor_maps {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix& operator*=(const BigInt& scalar);
  IntMatrix transpose() const;
  /// Kronecker product; the left factor indexes the most significant digits.
  IntMatrix kron(const IntMatrix& rhs) const;

  std::size_t nonzeros() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// n^e, throwing ResourceLimit once it passes `cap`.
std::uint64_t checked_power(int n, int e, std::uint64_t cap);

/// Flat positions (row * n^k + col) of the nonzero entries of T_p, sorted.
std::vector<std::uint64_t> tp_support(const diagrams::Pairing& p, int n,
                                      const Limits& limits = Limits::from_env());

IntMatrix build_Tp(const diagrams::Pairing& p, int n, const Limits& limits = Limits::from_env());

/// Rank over Q of the given integer vectors by fraction-free (Bareiss)
/// elimination.  `basis` receives the indices of the lexicographically first
/// independent subset.
std::size_t bareiss_rank(const std::vector<std::vector<BigInt>>& vectors,
                         std::vector<std::size_t>* basis = nullptr);

struct HomSpace {
  int n = 0;
  int k = 0;
  int l = 0;
  diagrams::Family family = diagrams::Family::E;
  std::size_t set_size = 0;
  std::size_t rank = 0;
  /// Indices into enumerate(k, l, family) of a spanning subset.
  std::vector<std::size_t> basis_indices;
  /// Rank modulo 2^31-1 of the same vectors; never exceeds `rank`.
  std::size_t modular_rank = 0;
};

HomSpace hom_dim(int n, int k, int l, diagrams::Family family,
                 const Limits& limits = Limits::from_env(),
                 const kernels::Dispatch& kernel = kernels::dispatch());

struct FunctorReport {
  bool composition = false;
  bool tensor = false;
  bool involution = false;
  bool all() const { return composition && tensor && involution; }
};

/// Checks T_q T_p = n^loops T_{q∘p}, T_{p⊗q} = T_p ⊗ T_q and
/// T_{p*} = T_p^t.  Throws std::invalid_argument when q and p do not compose.
FunctorReport functor_report(const diagrams::Pairing& q, const diagrams::Pairing& p, int n);
bool functor_check(const diagrams::Pairing& q, const diagrams::Pairing& p, int n);

/// {"rows":R,"cols":C,"entries":[[r,c,v],...]} with v as a decimal string
/// when it does not fit in 64 bits.
nlohmann::json to_sparse_json(const IntMatrix& m);

}  // namespace ostar::tensor_maps
