#include "ostar/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ostar::oracles {

std::vector<std::vector<int>> matchings_by_permutation(int t) {
  std::vector<std::vector<int>> out;
  if (t < 0 || t % 2 != 0) return out;
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int a = 1; a <= t && ok; ++a) {
      const int b = perm[a - 1];
      ok = b != a && perm[b - 1] == a;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool noncrossing_by_stack(const std::vector<int>& partner) {
  std::vector<int> open;
  for (int a = 1; a <= static_cast<int>(partner.size()); ++a) {
    const int b = partner[a - 1];
    if (b > a) {
      open.push_back(a);
    } else {
      if (open.empty() || open.back() != b) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

bool alternating_by_parity(const std::vector<int>& partner) {
  for (int a = 1; a <= static_cast<int>(partner.size()); ++a)
    if ((a + partner[a - 1]) % 2 == 0) return false;
  return true;
}

std::uint64_t double_factorial_odd(int s) {
  std::uint64_t r = 1;
  for (int i = 1; i <= 2 * s - 1; i += 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t factorial(int s) {
  std::uint64_t r = 1;
  for (int i = 2; i <= s; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t catalan(int s) {
  // C_{i+1} = C_i * 2(2i+1)/(i+2)
  std::uint64_t c = 1;
  for (int i = 0; i < s; ++i)
    c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  return c;
}

fusion::UnDecomposition tensor_by_characters(const Weight& lambda, const Weight& mu,
                                             const Limits& limits) {
  const auto a = weights::weight_multiset_Un(lambda, limits);
  const auto b = weights::weight_multiset_Un(mu, limits);
  std::map<Weight, std::int64_t> product;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) product[x + y] += cx * cy;

  fusion::UnDecomposition out;
  while (true) {
    auto top = std::find_if(product.rbegin(), product.rend(),
                            [](const auto& e) { return e.second != 0; });
    if (top == product.rend()) break;
    const Weight hw = top->first;
    const std::int64_t m = top->second;
    if (m < 0 || !weights::is_dominant(hw))
      throw std::logic_error("character peeling met " + hw.to_string() + " with multiplicity " +
                             std::to_string(m));
    out.add(hw, m);
    for (const auto& [w, c] : weights::weight_multiset_Un(hw, limits)) product[w] -= m * c;
  }
  return out;
}

namespace {

fusion::UnDecomposition pieri_step(const Weight& lambda, int delta) {
  fusion::UnDecomposition out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    Weight w = lambda;
    w[i] += delta;
    bool dominant = true;
    for (std::size_t j = 1; j < w.size(); ++j)
      if (w[j - 1] < w[j]) dominant = false;
    if (dominant) out.add(w, 1);
  }
  return out;
}

}  // namespace

fusion::UnDecomposition pieri_fundamental(const Weight& lambda) { return pieri_step(lambda, 1); }
fusion::UnDecomposition pieri_antifundamental(const Weight& lambda) {
  return pieri_step(lambda, -1);
}

std::int64_t ostar_length(const Weight& lambda) {
  std::int64_t s = 0;
  for (auto x : lambda.coords()) s += std::abs(x);
  return s;
}

cayley::GrowthSeries su_volumes_from_un(int n, int kmax, const Limits& limits) {
  const auto un = cayley::build_graph(cayley::Group::Un, n, kmax, limits);
  std::map<Weight, std::pair<int, BigInt>> classes;
  for (const auto& v : un.vertices) {
    // shift the lift so the coordinate sum lands in 0..n-1
    const std::int64_t s = v.weight.sum();
    const std::int64_t c = (s >= 0 ? s / n : -((-s + n - 1) / n));
    Weight lift = v.weight;
    for (std::size_t i = 0; i < lift.size(); ++i) lift[i] -= c;
    auto [it, fresh] = classes.try_emplace(lift, v.length, v.dim);
    if (!fresh) it->second.first = std::min(it->second.first, v.length);
  }
  cayley::GrowthSeries b(static_cast<std::size_t>(kmax) + 1, 0);
  for (const auto& [w, info] : classes) b[static_cast<std::size_t>(info.first)] += info.second * info.second;
  for (std::size_t k = 1; k < b.size(); ++k) b[k] += b[k - 1];
  return b;
}

}  // namespace ostar::oracles
