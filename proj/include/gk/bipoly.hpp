#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/fp.hpp"

namespace gk {

/// tau^tau_exp * x^x_exp. Algebraic degree is tau_exp + x_exp.
struct Monomial {
  std::uint32_t tau_exp = 0;
  std::uint32_t x_exp = 0;

  std::uint32_t degree() const { return tau_exp + x_exp; }
  friend bool operator==(Monomial, Monomial) = default;
};

/// Highest x-power first, then highest tau-power.
struct CanonicalOrder {
  bool operator()(Monomial a, Monomial b) const {
    if (a.x_exp != b.x_exp) return a.x_exp > b.x_exp;
    return a.tau_exp > b.tau_exp;
  }
};

/// Sparse element of F_p[tau, x]. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class BiPoly {
 public:
  using Terms = std::map<Monomial, std::uint32_t, CanonicalOrder>;

  explicit BiPoly(PrimeModulus p) : p_(p) {}

  static BiPoly zero(PrimeModulus p) { return BiPoly(p); }
  static BiPoly constant(PrimeModulus p, std::int64_t c);
  static BiPoly monomial(PrimeModulus p, std::int64_t c, std::uint32_t tau_exp,
                         std::uint32_t x_exp);
  static BiPoly tau(PrimeModulus p) { return monomial(p, 1, 1, 0); }
  static BiPoly x(PrimeModulus p) { return monomial(p, 1, 0, 1); }
  /// x - kappa*tau
  static BiPoly linear(PrimeModulus p, std::int64_t kappa);

  /// Parses the canonical text form, e.g. "x^3 + 2*t^2*x". Accepts terms in
  /// any order; coefficients are reduced mod p. "0" is the zero polynomial.
  static BiPoly parse(PrimeModulus p, std::string_view text);

  PrimeModulus modulus() const { return p_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  FpScalar coefficient(std::uint32_t tau_exp, std::uint32_t x_exp) const;

  /// Maximal algebraic degree; nullopt for zero.
  std::optional<std::uint32_t> degree() const;
  /// Minimal algebraic degree; nullopt for zero.
  std::optional<std::uint32_t> low_degree() const;
  std::uint32_t x_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.x_exp; }
  std::uint32_t tau_degree() const;
  bool is_homogeneous() const;
  /// Zero is not monic. The only term of top x-degree must be exactly 1*x^d.
  bool is_monic_in_x() const;
  bool is_tau_only() const { return terms_.empty() || x_degree() == 0; }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scaled(FpScalar c) const;
  /// Multiplication by c*tau^i*x^j without a general convolution.
  BiPoly shifted(std::uint32_t tau_exp, std::uint32_t x_exp, std::uint32_t c = 1) const;

  /// Canonical text form: terms in CanonicalOrder, "c*t^i*x^j" with unit
  /// coefficients and exponents of 1 omitted, joined by " + ".
  std::string to_string() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  /// Adds c * mono. Coefficient is taken mod p.
  void add_term(Monomial m, std::uint32_t c);

 private:
  void check(const BiPoly& o) const;

  PrimeModulus p_;
  Terms terms_;
};

BiPoly pow(const BiPoly& base, std::uint64_t e);

struct DivModResult {
  BiPoly quotient;
  BiPoly remainder;
};

/// Long division in (F_p[tau])[x] by a divisor monic in x. Unique q, r with
/// dividend = q*divisor + r and deg_x r < deg_x divisor.
DivModResult divmod_x(const BiPoly& dividend, const BiPoly& divisor);

/// Remainder only; cheaper than divmod_x because the quotient is not built.
BiPoly reduce_mod_x(const BiPoly& dividend, const BiPoly& divisor);

bool is_divisible(const BiPoly& numerator, const BiPoly& divisor);

/// Sum of the terms of algebraic degree exactly `degree`.
BiPoly homogeneous_component(const BiPoly& m, std::uint32_t degree);

/// Polynomial in K with coefficients in F_p[tau, x]. coeffs()[k] multiplies K^k;
/// the highest stored coefficient is nonzero (zero is the empty sequence).
class TriPoly {
 public:
  explicit TriPoly(PrimeModulus p) : p_(p) {}
  TriPoly(PrimeModulus p, std::vector<BiPoly> coeffs);

  /// K itself.
  static TriPoly variable(PrimeModulus p);
  static TriPoly constant(const BiPoly& c);

  PrimeModulus modulus() const { return p_; }
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in K; 0 for constants and zero.
  std::size_t k_degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  /// Substitutes K := value.
  BiPoly evaluate(const BiPoly& value) const;

  friend bool operator==(const TriPoly& a, const TriPoly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  PrimeModulus p_;
  std::vector<BiPoly> coeffs_;
};

TriPoly pow(const TriPoly& base, std::uint64_t e);

}  // namespace gk
