#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hha {

using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" into a reduced rational. Rejects floats and empty input.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

/// n = unit * s^2 * d with d squarefree; returns (s, unit*d). Requires n != 0.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

/// The field Q(sqrt(d_1), ..., sqrt(d_m)) for squarefree integers d_i
/// (possibly negative, never 0 or 1) that are multiplicatively independent
/// modulo squares. Elements are coordinates on the 2^m basis monomials
/// prod_{i in S} sqrt(d_i), indexed by the bitmask of S.
class QuadraticField {
 public:
  static std::shared_ptr<const QuadraticField> make(std::vector<Integer> roots);

  const std::vector<Integer>& roots() const { return roots_; }
  std::size_t root_count() const { return roots_.size(); }

  /// m_S * m_T = factor * m_{S xor T} with factor = prod_{i in S&T} d_i.
  Integer monomial_product_factor(std::uint32_t s, std::uint32_t t) const;

 private:
  explicit QuadraticField(std::vector<Integer> roots) : roots_(std::move(roots)) {}
  std::vector<Integer> roots_;
};

using FieldPtr = std::shared_ptr<const QuadraticField>;

/// An exact element of a multi-quadratic extension. A null field means the
/// element is a plain rational and combines with any field.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long v);                  // NOLINT: implicit by design
  ExtScalar(const Rational& v);       // NOLINT
  ExtScalar(FieldPtr field, std::uint32_t mask, const Rational& coeff);

  static ExtScalar monomial(FieldPtr field, std::uint32_t mask);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  /// Value of the rational coordinate (mask 0).
  Rational rational_part() const;
  std::optional<Rational> as_rational() const;

  const FieldPtr& field() const { return field_; }
  const std::map<std::uint32_t, Rational>& coeffs() const { return coeffs_; }

  ExtScalar operator-() const;
  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const ExtScalar& o);
  ExtScalar& operator/=(const ExtScalar& o);
  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
  friend ExtScalar operator/(ExtScalar a, const ExtScalar& b) { return a /= b; }

  /// Multiplicative inverse; throws on zero.
  ExtScalar inverse() const;

  bool operator==(const ExtScalar& o) const;
  bool operator!=(const ExtScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend std::optional<ExtScalar> ext_sqrt(const ExtScalar&);

  void normalize();
  // Fields must agree (or one side rational); returns the surviving field.
  static FieldPtr merge_fields(const FieldPtr& a, const FieldPtr& b);

  FieldPtr field_;  // null: plain rational
  std::map<std::uint32_t, Rational> coeffs_;
};

/// Exact square root of a rational inside the given field, if representable.
std::optional<ExtScalar> sqrt_in_field(const FieldPtr& field, const Rational& r);

/// Exact square root of a field element inside its own field, if one exists.
std::optional<ExtScalar> ext_sqrt(const ExtScalar& a);

/// Accumulates the radicands a scenario needs and produces the smallest
/// multi-quadratic field containing all their square roots.
class FieldBuilder {
 public:
  void require_root(const Integer& squarefree_root);
  void require_sqrt(const Rational& radicand);
  FieldPtr build() const;

 private:
  std::vector<Integer> roots_;
};

}  // namespace hha
