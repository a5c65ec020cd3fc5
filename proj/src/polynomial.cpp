#include "tautilt/polynomial.hpp"

#include <algorithm>

namespace tautilt::poly {

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly monic(const Field& f, const Poly& p) {
  if (p.empty()) return p;
  const Scalar lead = f.inv(p.back());
  Poly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = f.mul(p[i], lead);
  return q;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Scalar x = i < a.size() ? a[i] : Scalar(0);
    Scalar y = i < b.size() ? b[i] : Scalar(0);
    c[i] = f.add(x, y);
  }
  return trim(std::move(c));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Scalar x = i < a.size() ? a[i] : Scalar(0);
    Scalar y = i < b.size() ? b[i] : Scalar(0);
    c[i] = f.sub(x, y);
  }
  return trim(std::move(c));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return trim(std::move(c));
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  Poly r = trim(a);
  if (degree(r) < degree(b)) return {{}, r};
  Poly q(r.size() - b.size() + 1);
  const Scalar lead = f.inv(b.back());
  while (!r.empty() && degree(r) >= degree(b)) {
    const std::size_t shift = r.size() - b.size();
    const Scalar c = f.mul(r.back(), lead);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
    r = trim(std::move(r));
  }
  return {trim(std::move(q)), r};
}

Poly gcd(const Field& f, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly derivative(const Field& f, const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = f.mul(Scalar(static_cast<long>(i)), p[i]);
  return trim(std::move(d));
}

Poly power(const Field& f, const Poly& p, unsigned e) {
  Poly result{Scalar(1)};
  for (unsigned i = 0; i < e; ++i) result = mul(f, result, p);
  return result;
}

Poly powmod(const Field& f, const Poly& base, const mpz_class& e, const Poly& m) {
  Poly result{Scalar(1)};
  Poly b = divmod(f, base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(f, mul(f, result, result), m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(f, mul(f, result, b), m).second;
  }
  return result;
}

Scalar evaluate(const Field& f, const Poly& p, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

std::vector<Poly> squarefree_decomposition(const Field& f, const Poly& p) {
  std::vector<Poly> parts;
  Poly a = monic(f, p);
  Poly b = gcd(f, a, derivative(f, a));
  Poly c = divmod(f, a, b).first;
  Poly d = sub(f, divmod(f, derivative(f, a), b).first, derivative(f, c));
  while (degree(c) > 0) {
    Poly s = gcd(f, c, d);
    parts.push_back(s);
    c = divmod(f, c, s).first;
    d = sub(f, divmod(f, d, s).first, derivative(f, c));
  }
  return parts;
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& n, long cap) {
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (d > cap) return {};
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<Scalar> rational_root(const Field& f, const Poly& p, long cap) {
  if (p[0] == 0) return Scalar(0);
  mpz_class denominators = 1;
  for (const auto& c : p) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c * denominators));
  const auto tops = divisors(abs(ints.front()), cap);
  const auto bottoms = divisors(abs(ints.back()), cap);
  for (const auto& q : bottoms) {
    for (const auto& r : tops) {
      for (int sign : {1, -1}) {
        Scalar x(r * sign, q);
        x.canonicalize();
        if (evaluate(f, p, x) == 0) return x;
      }
    }
  }
  return std::nullopt;
}

mpz_class random_below(const mpz_class& p, std::mt19937_64& rng) {
  mpz_class x = 0;
  const std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) x = (x << 64) + mpz_class(std::to_string(rng()));
  return x % p;
}

std::optional<Scalar> prime_root(const Field& f, const Poly& p, std::mt19937_64& rng) {
  const mpz_class& q = f.characteristic();
  const Poly x{Scalar(0), Scalar(1)};
  Poly g = gcd(f, p, sub(f, powmod(f, x, q, p), x));
  if (degree(g) < 1) return std::nullopt;
  const mpz_class half = (q - 1) / 2;
  for (int attempt = 0; degree(g) > 1 && attempt < 256; ++attempt) {
    const Poly shifted{f.reduce(Scalar(random_below(q, rng))), Scalar(1)};
    Poly h = gcd(f, g, sub(f, powmod(f, shifted, half, g), Poly{Scalar(1)}));
    if (degree(h) >= 1 && degree(h) < degree(g)) {
      Poly other = divmod(f, g, h).first;
      g = degree(h) <= degree(other) ? h : monic(f, other);
    }
  }
  if (degree(g) != 1) return std::nullopt;
  return f.neg(f.div(g[0], g[1]));
}

}  // namespace

std::optional<Scalar> find_root(const Field& f, const Poly& p, std::mt19937_64& rng, long divisor_cap) {
  if (degree(p) < 1) return std::nullopt;
  if (f.is_prime()) return prime_root(f, p, rng);
  return rational_root(f, p, divisor_cap);
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Field& f, const Poly& m, std::mt19937_64& rng) {
  const auto parts = squarefree_decomposition(f, m);
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (degree(parts[i]) > 0) present.push_back(i);
  if (present.size() > 1) {
    const std::size_t i = present.front();
    Poly a = power(f, parts[i], static_cast<unsigned>(i + 1));
    Poly b = divmod(f, monic(f, m), a).first;
    return std::make_pair(std::move(a), std::move(b));
  }
  if (present.empty()) return std::nullopt;
  const std::size_t i = present.front();
  const Poly& s = parts[i];
  if (degree(s) < 2) return std::nullopt;
  const auto root = find_root(f, s, rng);
  if (!root) return std::nullopt;
  const Poly linear{f.neg(*root), Scalar(1)};
  const unsigned e = static_cast<unsigned>(i + 1);
  Poly a = power(f, linear, e);
  Poly b = power(f, divmod(f, s, linear).first, e);
  return std::make_pair(std::move(a), std::move(b));
}

}  // namespace tautilt::poly
