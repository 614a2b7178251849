#include "tiverify/group.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tiverify/errors.hpp"

namespace tiv {

int GroupTable::power(int x, int k) const {
  int acc = kIdentity;
  for (int i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

int GroupTable::index_of(const Permutation& p) const {
  for (int i = 0; i < order_; ++i)
    if (perms_[i] == p) return i;
  return -1;
}

void GroupTable::finalize() {
  const int n = order_;
  if (n <= 0 || mul_.size() != static_cast<size_t>(n) * n)
    throw Error("malformed multiplication table");

  // Identity row/column and Latin property.
  std::vector<bool> seen(n);
  for (int a = 0; a < n; ++a) {
    if (mul(kIdentity, a) != a || mul(a, kIdentity) != a)
      throw Error("index 0 is not a two-sided identity");
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < n; ++b) {
      int v = mul(a, b);
      if (v < 0 || v >= n || seen[v]) throw Error("table row is not a permutation");
      seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < n; ++b) {
      int v = mul(b, a);
      if (seen[v]) throw Error("table column is not a permutation");
      seen[v] = true;
    }
  }

  // Associativity: exhaustive at small orders, sampled above.
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("multiplication table is not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw Error("multiplication table is not associative");
    }
  }

  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == kIdentity) {
        if (mul(b, a) != kIdentity) throw Error("inverse is not two-sided");
        inv_[a] = b;
        break;
      }

  element_orders_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int k = 1, acc = x;
    while (acc != kIdentity) {
      acc = mul(acc, x);
      ++k;
    }
    element_orders_[x] = k;
  }
}

GroupTable GroupTable::from_mul_table(int order, std::vector<int32_t> mul,
                                      std::string name, std::string provenance) {
  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.name_ = std::move(name);
  g.provenance_ = std::move(provenance);
  g.finalize();
  return g;
}

GroupTable group_from_generators(std::vector<Permutation> gens, std::string name,
                                 int max_order) {
  int degree = 1;
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  for (auto& g : gens)
    if (g.degree() < degree) g = g.extended_to(degree);

  std::vector<Permutation> elements;
  std::map<std::vector<int>, int> index;
  elements.push_back(Permutation::identity(degree));
  index[elements[0].images()] = 0;

  for (size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation product = elements[i] * g;
      auto [it, inserted] = index.try_emplace(product.images(),
                                              static_cast<int>(elements.size()));
      if (inserted) {
        elements.push_back(std::move(product));
        if (static_cast<int>(elements.size()) > max_order)
          throw CapError("group too large");
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  GroupTable g;
  g.order_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Permutation product = elements[a] * elements[b];
      g.mul_[static_cast<size_t>(a) * n + b] = index.at(product.images());
    }
  g.name_ = std::move(name);
  {
    std::string prov = "closure of generators:";
    if (gens.empty()) prov = "trivial group (no generators)";
    for (const auto& gen : gens) prov += " " + gen.to_cycle_string();
    g.provenance_ = std::move(prov);
  }
  g.perms_ = std::move(elements);
  g.finalize();
  return g;
}

std::vector<int> prime_divisors(long long n) {
  if (n < 1) throw Error("prime_divisors requires n >= 1");
  std::vector<int> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

long long p_part(long long n, int p) {
  long long part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

}  // namespace tiv
