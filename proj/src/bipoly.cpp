#include "gk/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace gk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("malformed polynomial term '" + std::string(context) + "'");
  return v;
}

}  // namespace

BiPoly BiPoly::constant(PrimeModulus p, std::int64_t c) { return monomial(p, c, 0, 0); }

BiPoly BiPoly::monomial(PrimeModulus p, std::int64_t c, std::uint32_t tau_exp,
                        std::uint32_t x_exp) {
  BiPoly out(p);
  out.add_term({tau_exp, x_exp}, p.reduce(c));
  return out;
}

BiPoly BiPoly::linear(PrimeModulus p, std::int64_t kappa) {
  BiPoly out = x(p);
  out.add_term({1, 0}, p.reduce(-kappa));
  return out;
}

void BiPoly::add_term(Monomial m, std::uint32_t c) {
  c %= p_.value();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = p_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void BiPoly::check(const BiPoly& o) const {
  if (!(p_ == o.p_)) throw UsageError("modulus mismatch between polynomials");
}

FpScalar BiPoly::coefficient(std::uint32_t tau_exp, std::uint32_t x_exp) const {
  auto it = terms_.find({tau_exp, x_exp});
  return FpScalar(p_, it == terms_.end() ? 0 : it->second);
}

std::optional<std::uint32_t> BiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<std::uint32_t> BiPoly::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

std::uint32_t BiPoly::tau_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.tau_exp);
  return d;
}

bool BiPoly::is_homogeneous() const { return degree() == low_degree(); }

bool BiPoly::is_monic_in_x() const {
  if (terms_.empty()) return false;
  auto it = terms_.begin();
  if (it->first.tau_exp != 0 || it->second != 1) return false;
  auto next = std::next(it);
  return next == terms_.end() || next->first.x_exp < it->first.x_exp;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, p_.neg(c));
  return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly out = *this;
  out += o;
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly out = *this;
  out -= o;
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out(p_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, p_.neg(c));
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  check(o);
  BiPoly out(p_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      out.add_term({ma.tau_exp + mb.tau_exp, ma.x_exp + mb.x_exp}, p_.mul(ca, cb));
  return out;
}

BiPoly BiPoly::scaled(FpScalar c) const {
  if (!(c.modulus() == p_)) throw UsageError("modulus mismatch between polynomial and scalar");
  return shifted(0, 0, c.value());
}

BiPoly BiPoly::shifted(std::uint32_t tau_exp, std::uint32_t x_exp, std::uint32_t c) const {
  BiPoly out(p_);
  c %= p_.value();
  if (c == 0) return out;
  // Shifting preserves the canonical order, so hinted insertion at the end is exact.
  for (const auto& [m, v] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), Monomial{m.tau_exp + tau_exp, m.x_exp + x_exp},
                            p_.mul(v, c));
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || m.degree() == 0) factors.push_back(std::to_string(c));
    if (m.tau_exp == 1) factors.emplace_back("t");
    if (m.tau_exp > 1) factors.push_back("t^" + std::to_string(m.tau_exp));
    if (m.x_exp == 1) factors.emplace_back("x");
    if (m.x_exp > 1) factors.push_back("x^" + std::to_string(m.x_exp));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

BiPoly BiPoly::parse(PrimeModulus p, std::string_view text) {
  BiPoly out(p);
  text = trim(text);
  if (text.empty()) throw UsageError("empty polynomial text");
  if (text == "0") return out;
  while (true) {
    auto plus = text.find('+');
    std::string_view term = trim(text.substr(0, plus));
    if (term.empty()) throw UsageError("empty term in polynomial text");
    std::uint32_t coeff = 1;
    Monomial mono;
    std::string_view rest = term;
    while (true) {
      auto star = rest.find('*');
      std::string_view factor = trim(rest.substr(0, star));
      if (factor.empty()) throw UsageError("malformed polynomial term '" + std::string(term) + "'");
      char head = factor.front();
      if (head == 't' || head == 'x') {
        std::uint64_t e = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw UsageError("malformed polynomial term '" + std::string(term) + "'");
          e = parse_uint(factor.substr(2), term);
        }
        (head == 't' ? mono.tau_exp : mono.x_exp) += static_cast<std::uint32_t>(e);
      } else {
        coeff = p.mul(coeff, p.reduce(static_cast<std::int64_t>(parse_uint(factor, term) % p.value())));
      }
      if (star == std::string_view::npos) break;
      rest = rest.substr(star + 1);
    }
    out.add_term(mono, coeff);
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  return out;
}

BiPoly pow(const BiPoly& base, std::uint64_t e) {
  BiPoly result = BiPoly::constant(base.modulus(), 1);
  BiPoly b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

namespace {

void require_monic(const BiPoly& divisor) {
  if (!divisor.is_monic_in_x()) throw UsageError("divisor must be monic in x: " + divisor.to_string());
}

// Repeatedly cancels the top-x term of `rem`; `on_step` sees each quotient term.
template <typename OnStep>
void long_divide(BiPoly& rem, const BiPoly& divisor, OnStep on_step) {
  const PrimeModulus p = rem.modulus();
  const std::uint32_t d = divisor.x_degree();
  while (!rem.is_zero() && rem.terms().begin()->first.x_exp >= d) {
    const auto [top, c] = *rem.terms().begin();
    const Monomial shift{top.tau_exp, top.x_exp - d};
    on_step(shift, c);
    const std::uint32_t neg_c = p.neg(c);
    for (const auto& [m, v] : divisor.terms())
      rem.add_term({m.tau_exp + shift.tau_exp, m.x_exp + shift.x_exp}, p.mul(v, neg_c));
  }
}

}  // namespace

DivModResult divmod_x(const BiPoly& dividend, const BiPoly& divisor) {
  require_monic(divisor);
  if (!(dividend.modulus() == divisor.modulus())) throw UsageError("modulus mismatch between polynomials");
  DivModResult out{BiPoly(dividend.modulus()), dividend};
  long_divide(out.remainder, divisor, [&](Monomial m, std::uint32_t c) { out.quotient.add_term(m, c); });
  return out;
}

BiPoly reduce_mod_x(const BiPoly& dividend, const BiPoly& divisor) {
  require_monic(divisor);
  if (!(dividend.modulus() == divisor.modulus())) throw UsageError("modulus mismatch between polynomials");
  BiPoly rem = dividend;
  long_divide(rem, divisor, [](Monomial, std::uint32_t) {});
  return rem;
}

bool is_divisible(const BiPoly& numerator, const BiPoly& divisor) {
  return reduce_mod_x(numerator, divisor).is_zero();
}

BiPoly homogeneous_component(const BiPoly& m, std::uint32_t degree) {
  BiPoly out(m.modulus());
  for (const auto& [mono, c] : m.terms())
    if (mono.degree() == degree) out.add_term(mono, c);
  return out;
}

// --- TriPoly ---------------------------------------------------------------

TriPoly::TriPoly(PrimeModulus p, std::vector<BiPoly> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.modulus() == p_)) throw UsageError("modulus mismatch in K-polynomial");
  trim();
}

TriPoly TriPoly::variable(PrimeModulus p) {
  return TriPoly(p, {BiPoly(p), BiPoly::constant(p, 1)});
}

TriPoly TriPoly::constant(const BiPoly& c) { return TriPoly(c.modulus(), {c}); }

void TriPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  if (!(p_ == o.p_)) throw UsageError("modulus mismatch in K-polynomial");
  std::vector<BiPoly> out(std::max(coeffs_.size(), o.coeffs_.size()), BiPoly(p_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[k] += o.coeffs_[k];
  return TriPoly(p_, std::move(out));
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  if (!(p_ == o.p_)) throw UsageError("modulus mismatch in K-polynomial");
  if (is_zero() || o.is_zero()) return TriPoly(p_);
  std::vector<BiPoly> out(coeffs_.size() + o.coeffs_.size() - 1, BiPoly(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return TriPoly(p_, std::move(out));
}

BiPoly TriPoly::evaluate(const BiPoly& value) const {
  BiPoly acc(p_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

TriPoly pow(const TriPoly& base, std::uint64_t e) {
  TriPoly result = TriPoly::constant(BiPoly::constant(base.modulus(), 1));
  TriPoly b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

}  // namespace gk
