#include "sta/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sta::grassmann {

QC operator+(const QC& a, const QC& b) { return {a.re + b.re, a.im + b.im}; }
QC operator-(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
QC operator-(const QC& a) { return {-a.re, -a.im}; }
QC operator*(const QC& a, const QC& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
bool operator==(const QC& a, const QC& b) { return a.re == b.re && a.im == b.im; }

Involution Involution::self_conjugate(int n) {
  Involution v;
  v.name = "self-conjugate, reversing";
  for (int i = 0; i < n; ++i) {
    v.gen_image.push_back(i);
    v.gen_sign.push_back(1);
  }
  return v;
}

Involution Involution::self_conjugate_order_preserving(int n) {
  Involution v = self_conjugate(n);
  v.reverses_products = false;
  v.name = "self-conjugate, order-preserving";
  return v;
}

Involution Involution::paired_graded(int n) {
  if (n % 2) throw std::invalid_argument("paired_graded: needs an even number of generators");
  Involution v;
  v.name = "paired, ** = -1 on generators";
  for (int i = 0; i < n; i += 2) {
    v.gen_image.push_back(i + 1);
    v.gen_sign.push_back(1);
    v.gen_image.push_back(i);
    v.gen_sign.push_back(-1);
  }
  return v;
}

int product_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  // count pairs (i in a, j in b) with i > j
  int swaps = 0;
  for (std::uint32_t bb = b; bb; bb &= bb - 1) {
    const int j = __builtin_ctz(bb);
    swaps += __builtin_popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

Element Element::scalar(int n, const QC& c) {
  Element e(n);
  e.add(0, c);
  return e;
}

Element Element::generator(int n, int i, const QC& c) {
  if (i < 0 || i >= n) throw std::out_of_range("Element::generator");
  Element e(n);
  e.add(1u << i, c);
  return e;
}

QC Element::coeff(std::uint32_t mask) const {
  auto it = t_.find(mask);
  return it == t_.end() ? QC() : it->second;
}

void Element::add(std::uint32_t mask, const QC& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(mask, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

bool Element::is_odd() const {
  for (const auto& [m, c] : t_)
    if (__builtin_popcount(m) % 2 == 0) return false;
  return true;
}

Element Element::star(const Involution& inv) const {
  if (static_cast<int>(inv.gen_image.size()) != n_) throw std::invalid_argument("Element::star: generator count");
  Element out(n_);
  for (const auto& [mask, c] : t_) {
    std::vector<int> idx;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (inv.reverses_products) std::reverse(idx.begin(), idx.end());
    Element term = scalar(n_, c.conj());
    for (int i : idx) term = term * generator(n_, inv.gen_image[i], QC(inv.gen_sign[i]));
    out = out + term;
  }
  return out;
}

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  r.n_ = std::max(a.n_, b.n_);
  for (const auto& [m, c] : b.t_) r.add(m, c);
  return r;
}

Element operator-(const Element& a, const Element& b) { return a + QC(-1) * b; }

Element operator*(const Element& a, const Element& b) {
  Element r(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      const int s = product_sign(ma, mb);
      if (s == 0) continue;
      r.add(ma | mb, QC(s) * ca * cb);
    }
  return r;
}

Element operator*(const QC& c, const Element& a) {
  Element r(a.n_);
  for (const auto& [m, v] : a.t_) r.add(m, c * v);
  return r;
}

bool operator==(const Element& a, const Element& b) { return (a - b).is_zero(); }

Element random_element(int n, std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), pick(0, 2);
  Element e(n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (degree >= 0 && __builtin_popcount(m) != degree) continue;
    if (degree < 0 && pick(rng) == 0) continue;
    e.add(m, QC(Q(num(rng), den(rng)), Q(num(rng), den(rng))));
  }
  return e;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re << (c.im < 0 ? "-" : "+") << abs(c.im) << "i)";
    for (int i = 0; i < 32; ++i)
      if (m & (1u << i)) os << "t" << i + 1;
  }
  return os.str();
}

std::size_t rank(std::vector<std::vector<Q>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace sta::grassmann
