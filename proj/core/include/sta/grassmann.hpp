#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace sta::grassmann {

using Q = boost::multiprecision::cpp_rational;

// exact complex rational re + i im
struct QC {
  Q re, im;

  QC() = default;
  QC(Q r, Q i = 0) : re(std::move(r)), im(std::move(i)) {}
  static QC I() { return {0, 1}; }

  QC conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};
QC operator+(const QC& a, const QC& b);
QC operator-(const QC& a, const QC& b);
QC operator-(const QC& a);
QC operator*(const QC& a, const QC& b);
bool operator==(const QC& a, const QC& b);

// Rules for the conjugation *. Antilinear in every variant.
struct Involution {
  bool reverses_products = true;  // (ab)* = b* a*, otherwise a* b*
  // theta_i* = gen_sign[i] theta_{gen_image[i]}; identity map with +1 is the self-conjugate case
  std::vector<int> gen_image;
  std::vector<int> gen_sign;
  std::string name;

  static Involution self_conjugate(int n);                    // theta_i* = theta_i, reversing
  static Involution self_conjugate_order_preserving(int n);   // theta_i* = theta_i, (ab)* = a* b*
  static Involution paired_graded(int n);                     // theta_{2k}* = theta_{2k+1}, theta_{2k+1}* = -theta_{2k}
};

// sum of c_S theta_S over subsets S of {0..n-1}, theta_S in increasing order
class Element {
 public:
  explicit Element(int n = 0) : n_(n) {}
  static Element scalar(int n, const QC& c);
  static Element generator(int n, int i, const QC& c = QC(1));

  int generators() const { return n_; }
  const std::map<std::uint32_t, QC>& terms() const { return t_; }
  QC coeff(std::uint32_t mask) const;
  void add(std::uint32_t mask, const QC& c);

  bool is_zero() const { return t_.empty(); }
  bool is_odd() const;  // every term has odd degree

  Element star(const Involution& inv) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const QC& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  int n_;
  std::map<std::uint32_t, QC> t_;
};

// sign from sorting theta_a theta_b into increasing order; 0 when they share a generator
int product_sign(std::uint32_t a, std::uint32_t b);

// random element with small integer-fraction coefficients; degree filter: -1 any, otherwise that degree only
Element random_element(int n, std::mt19937_64& rng, int degree = -1);

std::string to_string(const Element& e);

// Exact rank of a rational matrix (rows of equal length).
std::size_t rank(std::vector<std::vector<Q>> rows);

}  // namespace sta::grassmann
