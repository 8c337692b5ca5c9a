#include "polytot/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace polytot {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c >= field_.q()) throw std::invalid_argument("coefficient code out of range");
  trim();
}

Poly Poly::constant(const Field& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, Elem c, unsigned k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigNat Poly::norm() const {
  if (is_zero()) return 0;
  return pow_ui(field_.q(), static_cast<unsigned long>(degree()));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  Poly r(field_);
  if (c == 0) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (auto a : coeffs_) r.coeffs_.push_back(field_.mul(a, c));
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    // k * a_k with k reduced mod p, as a repeated sum in the field.
    Elem acc = 0;
    for (std::size_t i = 0; i < k % field_.p(); ++i) acc = field_.add(acc, coeffs_[k]);
    r.coeffs_[k - 1] = acc;
  }
  r.trim();
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (auto c = coeffs_.size() <=> o.coeffs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (auto c = coeffs_[i] <=> o.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Elem> rem = a.coeffs();
  const auto& den = b.coeffs();
  const std::size_t db = den.size() - 1;
  std::vector<Elem> quo(rem.size() - db, 0);
  const Elem lead_inv = F.inv(den.back());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const Elem factor = F.mul(rem[i], lead_inv);
    quo[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(factor, den[j]));
  }
  rem.resize(db);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, const BigNat& exp, const Poly& modulus) {
  const Field& F = base.field();
  Poly result = Poly::constant(F, 1) % modulus;
  Poly b = base % modulus;
  const auto bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

Poly pow(const Poly& base, unsigned exp) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const Elem c = f.coeff(static_cast<unsigned>(k));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + '*';
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed polynomial '" + std::string(whole) + "': bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw ParseError("malformed polynomial: empty text");

  std::map<unsigned, Elem> terms;
  std::size_t start = 0;
  while (start <= compact.size()) {
    const auto plus = compact.find('+', start);
    const std::string_view term =
        std::string_view(compact).substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw ParseError("malformed polynomial '" + std::string(text) + "': empty term");

    std::uint64_t coeff = 1;
    unsigned exponent = 0;
    const auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coeff = parse_number(term, text);
    } else {
      std::string_view head = term.substr(0, xpos);
      std::string_view tail = term.substr(xpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("malformed polynomial '" + std::string(text) + "': expected '*'");
        coeff = parse_number(head.substr(0, head.size() - 1), text);
      }
      if (tail.empty()) {
        exponent = 1;
      } else {
        if (tail.front() != '^') throw ParseError("malformed polynomial '" + std::string(text) + "': expected '^'");
        const auto e = parse_number(tail.substr(1), text);
        if (e > 1'000'000) throw ParseError("malformed polynomial: exponent too large");
        exponent = static_cast<unsigned>(e);
      }
    }
    if (coeff >= field.q())
      throw ParseError("malformed polynomial '" + std::string(text) + "': coefficient " + std::to_string(coeff) +
                       " not in [0, " + std::to_string(field.q()) + ")");
    terms[exponent] = field.add(terms[exponent], static_cast<Elem>(coeff));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }

  std::vector<Elem> coeffs(terms.rbegin()->first + 1, 0);
  for (const auto& [k, c] : terms) coeffs[k] = c;
  return Poly(field, std::move(coeffs));
}

}  // namespace polytot
