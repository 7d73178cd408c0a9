#include "ostar/fusion.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace ostar::fusion {

BigInt weyl_dim(const Weight& lambda) {
  if (!weights::is_dominant(lambda))
    throw std::invalid_argument(lambda.to_string() + " is not dominant");
  BigInt num = 1, den = 1;
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= BigInt(lambda[i] - lambda[j] + static_cast<std::int64_t>(j - i));
      den *= BigInt(static_cast<std::int64_t>(j - i));
    }
  return num / den;
}

BigInt dim(const GroupElement& a) { return weyl_dim(a.lambda); }

Weight conjugate_Un(const Weight& lambda) {
  Weight out(lambda.size());
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = -lambda[n - 1 - i];
  return out;
}

std::map<std::vector<std::int64_t>, std::int64_t> lr_coefficients(
    const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu, int max_rows,
    std::uint64_t max_terms) {
  const std::size_t rows = static_cast<std::size_t>(max_rows);
  std::map<std::vector<std::int64_t>, std::int64_t> out;
  if (lambda.size() > rows) {
    for (std::size_t r = rows; r < lambda.size(); ++r)
      if (lambda[r] != 0) return out;
  }
  std::vector<std::int64_t> shape(rows, 0);
  for (std::size_t r = 0; r < std::min(rows, lambda.size()); ++r) shape[r] = lambda[r];

  std::vector<std::int64_t> parts;
  for (auto m : mu)
    if (m > 0) parts.push_back(m);
  if (parts.size() > rows) return out;

  // placed[i][r]: boxes labelled i+1 in row r
  std::vector<std::vector<std::int64_t>> placed(parts.size(), std::vector<std::int64_t>(rows, 0));
  std::uint64_t tableaux = 0;

  std::function<void(std::size_t)> place_label;
  std::function<void(std::size_t, std::size_t, std::int64_t, std::int64_t, std::int64_t,
                     const std::vector<std::int64_t>&)>
      strip;

  place_label = [&](std::size_t label) {
    if (label == parts.size()) {
      if (++tableaux > max_terms)
        throw ResourceLimit("Littlewood-Richardson enumeration exceeds the summand cap");
      ++out[shape];
      return;
    }
    const std::vector<std::int64_t> before = shape;
    strip(label, 0, parts[label], 0, 0, before);
  };

  // Adds the horizontal strip of `label` row by row.  `cum` counts boxes of
  // this label placed in rows above r, `cum_prev` boxes of the previous label
  // in rows above r.
  strip = [&](std::size_t label, std::size_t r, std::int64_t remaining, std::int64_t cum,
              std::int64_t cum_prev, const std::vector<std::int64_t>& before) {
    if (remaining == 0) {
      place_label(label + 1);
      return;
    }
    if (r == rows) return;
    std::int64_t cap = remaining;
    if (r > 0) cap = std::min(cap, before[r - 1] - before[r]);
    if (label > 0) cap = std::min(cap, cum_prev - cum);
    const std::int64_t prev_here = label > 0 ? placed[label - 1][r] : 0;
    for (std::int64_t x = std::max<std::int64_t>(cap, 0); x >= 0; --x) {
      shape[r] = before[r] + x;
      placed[label][r] = x;
      strip(label, r + 1, remaining - x, cum + x, cum_prev + prev_here, before);
    }
    shape[r] = before[r];
    placed[label][r] = 0;
  };

  place_label(0);
  return out;
}

namespace {

void require_dominant(const Weight& w) {
  if (!weights::is_dominant(w)) throw std::invalid_argument(w.to_string() + " is not dominant");
}

std::int64_t shift_to_partition(const Weight& w) {
  std::int64_t lo = 0;
  for (auto x : w.coords()) lo = std::min(lo, x);
  return -lo;
}

}  // namespace

UnDecomposition tensor_Un(const Weight& lambda, const Weight& mu, const Limits& limits) {
  require_dominant(lambda);
  require_dominant(mu);
  if (lambda.size() != mu.size())
    throw std::invalid_argument("tensor_Un: weights of different lengths");
  const int n = lambda.n();
  const std::int64_t sl = shift_to_partition(lambda);
  const std::int64_t sm = shift_to_partition(mu);
  std::vector<std::int64_t> pl(lambda.coords()), pm(mu.coords());
  for (auto& x : pl) x += sl;
  for (auto& x : pm) x += sm;

  UnDecomposition out;
  for (const auto& [nu, c] : lr_coefficients(pl, pm, n, limits.max_summands)) {
    Weight w(nu);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= sl + sm;
    out.add(w, c);
  }
  return out;
}

OstarDecomposition tensor_Ostar(const GroupElement& a, const GroupElement& b,
                                const Limits& limits) {
  weights::validate(a);
  weights::validate(b);
  require_dominant(a.lambda);
  require_dominant(b.lambda);
  const Weight right = a.sector == weights::Sector::tau ? conjugate_Un(b.lambda) : b.lambda;
  const auto sector = a.sector * b.sector;
  OstarDecomposition out;
  for (const auto& [nu, c] : tensor_Un(a.lambda, right, limits)) {
    GroupElement g{nu, sector};
    weights::validate(g);
    out.add(g, c);
  }
  return out;
}

GroupElement conjugate_Ostar(const GroupElement& a) {
  weights::validate(a);
  require_dominant(a.lambda);
  if (a.sector == weights::Sector::tau) return a;
  return {conjugate_Un(a.lambda), weights::Sector::circ};
}

UnDecomposition tensor(const UnDecomposition& x, const UnDecomposition& y, const Limits& limits) {
  UnDecomposition out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : tensor_Un(a, b, limits)) out.add(c, ca * cb * cc);
  return out;
}

OstarDecomposition tensor(const OstarDecomposition& x, const OstarDecomposition& y,
                          const Limits& limits) {
  OstarDecomposition out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : tensor_Ostar(a, b, limits)) out.add(c, ca * cb * cc);
  return out;
}

UnDecomposition conjugate(const UnDecomposition& x) {
  UnDecomposition out;
  for (const auto& [a, c] : x) out.add(conjugate_Un(a), c);
  return out;
}

OstarDecomposition conjugate(const OstarDecomposition& x) {
  OstarDecomposition out;
  for (const auto& [a, c] : x) out.add(conjugate_Ostar(a), c);
  return out;
}

BigInt total_dim(const UnDecomposition& x) {
  BigInt t = 0;
  for (const auto& [a, c] : x) t += weyl_dim(a) * c;
  return t;
}

BigInt total_dim(const OstarDecomposition& x) {
  BigInt t = 0;
  for (const auto& [a, c] : x) t += dim(a) * c;
  return t;
}

UnDecomposition psi(const OstarDecomposition& x) {
  UnDecomposition out;
  for (const auto& [a, c] : x) out.add(a.lambda, c);
  return out;
}

GroupElement fundamental_Ostar(int n) { return weights::generator(n, 1); }
Weight fundamental_Un(int n) { return Weight::unit(n, 1); }
Weight antifundamental_Un(int n) { return -Weight::unit(n, n); }

OstarDecomposition decompose_power_Ostar(int n, int k, const Limits& limits) {
  if (k < 0) throw std::invalid_argument("negative tensor power");
  OstarDecomposition x;
  x.add(weights::identity(n), 1);
  OstarDecomposition u;
  u.add(fundamental_Ostar(n), 1);
  for (int i = 0; i < k; ++i) {
    x = tensor(x, u, limits);
    if (x.size() > limits.max_summands) throw ResourceLimit("tensor power exceeds summand cap");
  }
  return x;
}

UnDecomposition decompose_power_Un_alternating(int n, int k, const Limits& limits) {
  if (k < 0) throw std::invalid_argument("negative tensor power");
  UnDecomposition x;
  x.add(Weight::zero(n), 1);
  UnDecomposition v, vbar;
  v.add(fundamental_Un(n), 1);
  vbar.add(antifundamental_Un(n), 1);
  for (int i = 0; i < k; ++i) {
    x = tensor(x, i % 2 == 0 ? v : vbar, limits);
    if (x.size() > limits.max_summands) throw ResourceLimit("tensor power exceeds summand cap");
  }
  return x;
}

std::int64_t hom_dimension(const UnDecomposition& x, const UnDecomposition& y) {
  std::int64_t d = 0;
  for (const auto& [a, c] : x) d += c * y.multiplicity(a);
  return d;
}

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::json to_json(const OstarDecomposition& x) {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& [a, c] : x)
    summands.push_back({{"weight", a.lambda.coords()},
                        {"sector", weights::to_string(a.sector)},
                        {"mult", c},
                        {"dim", big_to_json(dim(a))}});
  return {{"summands", summands}, {"total_dim", big_to_json(total_dim(x))}};
}

nlohmann::json to_json(const UnDecomposition& x) {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& [a, c] : x)
    summands.push_back(
        {{"weight", a.coords()}, {"mult", c}, {"dim", big_to_json(weyl_dim(a))}});
  return {{"summands", summands}, {"total_dim", big_to_json(total_dim(x))}};
}

}  // namespace ostar::fusion
