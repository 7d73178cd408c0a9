#include "ostar/tensor_maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ostar::tensor_maps {

using diagrams::Pairing;

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: inner sizes differ");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t m = 0; m < cols_; ++m) {
      const BigInt& a = (*this)(r, m);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (!rhs(m, c).is_zero()) out(r, c) += a * rhs(m, c);
    }
  return out;
}

IntMatrix& IntMatrix::operator*=(const BigInt& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::kron(const IntMatrix& rhs) const {
  IntMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t r1 = 0; r1 < rows_; ++r1)
    for (std::size_t c1 = 0; c1 < cols_; ++c1) {
      const BigInt& a = (*this)(r1, c1);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < rhs.rows_; ++r2)
        for (std::size_t c2 = 0; c2 < rhs.cols_; ++c2)
          out(r1 * rhs.rows_ + r2, c1 * rhs.cols_ + c2) = a * rhs(r2, c2);
    }
  return out;
}

std::size_t IntMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const BigInt& x) { return !x.is_zero(); }));
}

std::uint64_t checked_power(int n, int e, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("dimension parameter n must be at least 1");
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= static_cast<std::uint64_t>(n);
    if (v > cap)
      throw ResourceLimit("n^" + std::to_string(e) + " exceeds the cap of " +
                          std::to_string(cap) + " cells");
  }
  return v;
}

std::vector<std::uint64_t> tp_support(const Pairing& p, int n, const Limits& limits) {
  const int k = p.upper(), l = p.lower();
  checked_power(n, k + l, limits.max_cells);
  const std::uint64_t cols = checked_power(n, k, limits.max_cells);

  // Place value of each circle point inside its own multi-index.
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int a = 1; a <= p.size(); ++a) {
    const int digits_after = p.is_upper(a) ? k - p.position(a) : l - p.position(a);
    weight[a] = checked_power(n, digits_after, limits.max_cells);
  }

  const auto strings = p.pairs();
  const std::size_t s = strings.size();
  std::vector<int> value(s, 0);
  std::vector<std::uint64_t> out;
  while (true) {
    std::uint64_t row = 0, col = 0;
    for (std::size_t i = 0; i < s; ++i) {
      for (int point : {strings[i].first, strings[i].second}) {
        const std::uint64_t contrib = weight[point] * static_cast<std::uint64_t>(value[i]);
        if (p.is_upper(point))
          col += contrib;
        else
          row += contrib;
      }
    }
    out.push_back(row * cols + col);

    std::size_t i = 0;
    while (i < s && ++value[i] == n) value[i++] = 0;
    if (i == s) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix build_Tp(const Pairing& p, int n, const Limits& limits) {
  const std::uint64_t rows = checked_power(n, p.lower(), limits.max_cells);
  const std::uint64_t cols = checked_power(n, p.upper(), limits.max_cells);
  IntMatrix m(rows, cols);
  for (std::uint64_t flat : tp_support(p, n, limits)) m(flat / cols, flat % cols) = 1;
  return m;
}

std::size_t bareiss_rank(const std::vector<std::vector<BigInt>>& vectors,
                         std::vector<std::size_t>* basis) {
  if (basis) basis->clear();
  const std::size_t ncols = vectors.size();
  if (ncols == 0) return 0;
  const std::size_t nrows = vectors.front().size();

  // Vectors become columns, so pivot columns are the greedy basis.
  std::vector<std::vector<BigInt>> m(nrows, std::vector<BigInt>(ncols));
  for (std::size_t c = 0; c < ncols; ++c) {
    if (vectors[c].size() != nrows) throw std::invalid_argument("bareiss_rank: ragged input");
    for (std::size_t r = 0; r < nrows; ++r) m[r][c] = vectors[c][r];
  }

  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t pivot = rank;
    while (pivot < nrows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[rank]);
    const BigInt& piv = m[rank][c];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      const BigInt f = m[r][c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        // exact division: every entry is a minor of the input
        m[r][j] = (piv * m[r][j] - f * m[rank][j]) / prev;
      }
      m[r][c] = 0;
    }
    prev = piv;
    if (basis) basis->push_back(c);
    ++rank;
  }
  return rank;
}

HomSpace hom_dim(int n, int k, int l, diagrams::Family family, const Limits& limits,
                 const kernels::Dispatch& kernel) {
  if (n < 1) throw std::invalid_argument("hom_dim: n must be at least 1");
  if (k < 0 || l < 0) throw std::invalid_argument("hom_dim: negative tensor power");
  HomSpace out;
  out.n = n;
  out.k = k;
  out.l = l;
  out.family = family;
  if ((k + l) % 2 != 0) return out;
  checked_power(n, k + l, limits.max_cells);

  const auto set = diagrams::enumerate(k, l, family);
  out.set_size = set.size();

  std::vector<std::vector<std::uint64_t>> supports;
  std::vector<std::uint64_t> coords;
  for (const auto& p : set) {
    supports.push_back(tp_support(p, n, limits));
    coords.insert(coords.end(), supports.back().begin(), supports.back().end());
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  // Only coordinates touched by some T_p can contribute to the rank.
  auto compact = [&](std::uint64_t flat) {
    return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), flat) -
                                    coords.begin());
  };
  std::vector<std::vector<BigInt>> vectors;
  std::vector<std::vector<std::uint64_t>> residues;
  for (const auto& support : supports) {
    std::vector<BigInt> v(coords.size());
    std::vector<std::uint64_t> r(coords.size(), 0);
    for (std::uint64_t flat : support) {
      v[compact(flat)] = 1;
      r[compact(flat)] = 1;
    }
    vectors.push_back(std::move(v));
    residues.push_back(std::move(r));
  }

  out.rank = bareiss_rank(vectors, &out.basis_indices);
  out.modular_rank = kernels::rank_mod_prime(std::move(residues), kernel);
  return out;
}

FunctorReport functor_report(const Pairing& q, const Pairing& p, int n) {
  const auto composite = diagrams::compose(q, p);
  const Limits unlimited{};
  FunctorReport r;

  IntMatrix lhs = build_Tp(q, n, unlimited) * build_Tp(p, n, unlimited);
  IntMatrix rhs = build_Tp(composite.pairing, n, unlimited);
  BigInt scale = 1;
  for (int i = 0; i < composite.loops; ++i) scale *= n;
  rhs *= scale;
  r.composition = (lhs == rhs);

  r.tensor = build_Tp(diagrams::tensor(p, q), n, unlimited) ==
             build_Tp(p, n, unlimited).kron(build_Tp(q, n, unlimited));
  r.involution = build_Tp(diagrams::involute(p), n, unlimited) == build_Tp(p, n, unlimited).transpose();
  return r;
}

bool functor_check(const Pairing& q, const Pairing& p, int n) {
  return functor_report(q, p, n).all();
}

nlohmann::json to_sparse_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt& v = m(r, c);
      if (v.is_zero()) continue;
      if (v >= std::numeric_limits<std::int64_t>::min() &&
          v <= std::numeric_limits<std::int64_t>::max())
        entries.push_back({r, c, v.convert_to<std::int64_t>()});
      else
        entries.push_back({r, c, v.str()});
    }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

}  // namespace ostar::tensor_maps
