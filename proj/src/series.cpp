#include "qlab/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qlab {

namespace {

// acc += x * y without temporaries.
inline void add_product(Rational& acc, const Rational& x, const Rational& y, Rational& tmp) {
  mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

inline void sub_product(Rational& acc, const Rational& x, const Rational& y, Rational& tmp) {
  mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
  mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

Monomial inverse(const Monomial& m) {
  if (m.is_zero()) throw NotInvertible("inverse of the zero monomial");
  return {1 / m.coeff, -m.exp};
}

Monomial pow(const Monomial& m, std::int64_t n) {
  if (n == 0) return {1, 0};
  if (n < 0) return pow(inverse(m), -n);
  Rational c;
  auto e = static_cast<unsigned long>(n);
  mpz_pow_ui(c.get_num_mpz_t(), m.coeff.get_num_mpz_t(), e);
  mpz_pow_ui(c.get_den_mpz_t(), m.coeff.get_den_mpz_t(), e);
  return {c, m.exp * n};
}

Monomial parse_monomial(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  if (text.empty()) throw InvalidParameter("empty monomial");

  auto parse_rational = [&](const std::string& s) -> Rational {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                ((ch == '-' || ch == '+') && i == 0);
      if (!ok) throw InvalidParameter("bad coefficient in monomial '" + raw + "'");
    }
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    Rational r;
    if (r.set_str(digits, 10) != 0) throw InvalidParameter("bad coefficient in monomial '" + raw + "'");
    if (digits.find('/') != std::string::npos && sgn(mpz_class(r.get_den())) == 0)
      throw InvalidParameter("zero denominator in monomial '" + raw + "'");
    r.canonicalize();
    return r;
  };

  auto qpos = text.find('q');
  if (qpos == std::string::npos) return {parse_rational(text), 0};
  if (text.find('q', qpos + 1) != std::string::npos)
    throw InvalidParameter("bad monomial '" + raw + "'");

  std::string head = text.substr(0, qpos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  Monomial m{parse_rational(head), 1};

  std::string tail = text.substr(qpos + 1);
  if (!tail.empty()) {
    if (tail[0] != '^' || tail.size() < 2) throw InvalidParameter("bad exponent in monomial '" + raw + "'");
    std::string e = tail.substr(1);
    if (e.size() > 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
    std::size_t used = 0;
    try {
      m.exp = std::stoll(e, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("bad exponent in monomial '" + raw + "'");
    }
    if (used != e.size()) throw InvalidParameter("bad exponent in monomial '" + raw + "'");
  }
  if (m.is_zero()) m.exp = 0;
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.is_zero()) return "0";
  if (m.exp == 0) return m.coeff.get_str();
  std::string out;
  if (m.coeff == -1) {
    out = "-";
  } else if (m.coeff != 1) {
    out = m.coeff.get_str() + "*";
  }
  out += "q";
  if (m.exp != 1) out += "^" + std::to_string(m.exp);
  return out;
}

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(Exponent min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
  auto skipped = static_cast<Exponent>(first - coeffs_.begin());
  if (skipped == 0) return;
  coeffs_.erase(coeffs_.begin(), first);
  min_exp_ += skipped;
}

LaurentSeries LaurentSeries::zero(Exponent order) { return LaurentSeries(order, {}); }

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent k, Exponent order) {
  if (k >= order)
    throw InvalidWindow("monomial q^" + std::to_string(k) + " outside window of order " + std::to_string(order));
  std::vector<Rational> coeffs(static_cast<std::size_t>(order - k));
  coeffs[0] = c;
  return LaurentSeries(k, std::move(coeffs));
}

LaurentSeries LaurentSeries::from_coefficients(Exponent min_exp, std::vector<Rational> coeffs) {
  return LaurentSeries(min_exp, std::move(coeffs));
}

LaurentSeries LaurentSeries::from_coefficients(Exponent min_exp, std::initializer_list<long> coeffs) {
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (long c : coeffs) values.emplace_back(c);
  return LaurentSeries(min_exp, std::move(values));
}

Rational LaurentSeries::coefficient(Exponent k) const {
  if (k >= order())
    throw OutOfWindow("coefficient of q^" + std::to_string(k) + " requested from series of order " +
                      std::to_string(order()));
  if (k < min_exp_) return 0;
  return coeffs_[static_cast<std::size_t>(k - min_exp_)];
}

LaurentSeries LaurentSeries::truncated(Exponent new_order) const {
  if (new_order > order())
    throw OutOfWindow("cannot extend window of order " + std::to_string(order()) + " to " +
                      std::to_string(new_order));
  if (new_order <= min_exp_) return zero(new_order);
  std::vector<Rational> coeffs(coeffs_.begin(), coeffs_.begin() + (new_order - min_exp_));
  return LaurentSeries(min_exp_, std::move(coeffs));
}

LaurentSeries LaurentSeries::shifted(Exponent k) const& {
  LaurentSeries out = *this;
  out.min_exp_ += k;
  return out;
}

LaurentSeries LaurentSeries::shifted(Exponent k) && {
  min_exp_ += k;
  return std::move(*this);
}

LaurentSeries& LaurentSeries::mul_binomial(const Rational& c, Exponent k) {
  if (sgn(c) == 0) return *this;
  if (k == 0) {
    Rational factor = 1 + c;
    if (sgn(factor) == 0) {
      *this = zero(order());
      return *this;
    }
    return *this *= factor;
  }
  if (k < 0) {
    // 1 + c q^k = c q^k (1 + q^-k / c)
    min_exp_ += k;
    *this *= c;
    return mul_binomial(1 / c, -k);
  }
  auto len = static_cast<Exponent>(coeffs_.size());
  Rational tmp;
  if (c == 1) {
    for (Exponent i = len - 1; i >= k; --i) coeffs_[i] += coeffs_[i - k];
  } else if (c == -1) {
    for (Exponent i = len - 1; i >= k; --i) coeffs_[i] -= coeffs_[i - k];
  } else {
    for (Exponent i = len - 1; i >= k; --i) add_product(coeffs_[i], c, coeffs_[i - k], tmp);
  }
  return *this;
}

LaurentSeries& LaurentSeries::div_binomial(const Rational& c, Exponent k) {
  if (sgn(c) == 0) return *this;
  if (k == 0) {
    Rational factor = 1 + c;
    if (sgn(factor) == 0) throw NotInvertible("division by the zero factor (1 - 1)");
    return *this *= Rational(1 / factor);
  }
  if (k < 0) {
    div_binomial(1 / c, -k);
    *this *= Rational(1 / c);
    min_exp_ -= k;
    return *this;
  }
  auto len = static_cast<Exponent>(coeffs_.size());
  Rational tmp;
  if (c == 1) {
    for (Exponent i = k; i < len; ++i) coeffs_[i] -= coeffs_[i - k];
  } else if (c == -1) {
    for (Exponent i = k; i < len; ++i) coeffs_[i] += coeffs_[i - k];
  } else {
    for (Exponent i = k; i < len; ++i) sub_product(coeffs_[i], c, coeffs_[i - k], tmp);
  }
  return *this;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  Exponent lo = std::min(min_exp_, rhs.min_exp_);
  Exponent hi = std::min(order(), rhs.order());
  std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo));
  for (Exponent e = std::max(lo, min_exp_); e < std::min(hi, order()); ++e)
    coeffs[e - lo] = coeffs_[e - min_exp_];
  for (Exponent e = std::max(lo, rhs.min_exp_); e < std::min(hi, rhs.order()); ++e)
    coeffs[e - lo] += rhs.coeffs_[e - rhs.min_exp_];
  min_exp_ = lo;
  coeffs_ = std::move(coeffs);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) { return *this += -rhs; }

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    *this = zero(order());
    return *this;
  }
  if (c == 1) return *this;
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  Exponent lo = a.min_exp_ + b.min_exp_;
  Exponent hi = std::min(a.order() + b.min_exp_, b.order() + a.min_exp_);
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(hi);
  auto len = static_cast<std::size_t>(hi - lo);
  std::vector<Rational> coeffs(len);
  Rational tmp;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j <= i; ++j) add_product(coeffs[i], a.coeffs_[j], b.coeffs_[i - j], tmp);
  }
  return LaurentSeries(lo, std::move(coeffs));
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Exponent e = min_exp_ + static_cast<Exponent>(i);
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  if (!first) os << " + ";
  os << "O(q^" << order() << ")";
  return os.str();
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) throw NotInvertible("series has no nonzero coefficient in its window");
  auto u = a.coefficients();
  std::vector<Rational> b(u.size());
  Rational lead_inv = 1 / u[0];
  Rational tmp;
  b[0] = lead_inv;
  for (std::size_t i = 1; i < u.size(); ++i) {
    Rational s;
    for (std::size_t j = 1; j <= i; ++j) add_product(s, u[j], b[i - j], tmp);
    mpq_mul(b[i].get_mpq_t(), s.get_mpq_t(), lead_inv.get_mpq_t());
    mpq_neg(b[i].get_mpq_t(), b[i].get_mpq_t());
  }
  return LaurentSeries::from_coefficients(-a.min_exp(), std::move(b));
}

LaurentSeries substitute_power(const LaurentSeries& a, Exponent k) {
  if (k < 1) throw InvalidParameter("substitute_power requires k >= 1");
  if (k == 1) return a;
  if (a.is_zero()) return LaurentSeries::zero(a.order() * k);
  auto src = a.coefficients();
  std::vector<Rational> coeffs(static_cast<std::size_t>((a.order() - a.min_exp()) * k));
  for (std::size_t i = 0; i < src.size(); ++i) coeffs[i * static_cast<std::size_t>(k)] = src[i];
  return LaurentSeries::from_coefficients(a.min_exp() * k, std::move(coeffs));
}

LaurentSeries negate_variable(const LaurentSeries& a) {
  auto src = a.coefficients();
  if (src.empty()) return a;
  std::vector<Rational> coeffs(src.begin(), src.end());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e = a.min_exp() + static_cast<Exponent>(i);
    if (e % 2 != 0) coeffs[i] = -coeffs[i];
  }
  return LaurentSeries::from_coefficients(a.min_exp(), std::move(coeffs));
}

Comparison equal_up_to(const LaurentSeries& a, const LaurentSeries& b, Exponent order) {
  if (order > a.order() || order > b.order())
    throw OutOfWindow("comparison order " + std::to_string(order) + " exceeds windows " +
                      std::to_string(a.order()) + " and " + std::to_string(b.order()));
  for (Exponent e = std::min(a.min_exp(), b.min_exp()); e < order; ++e) {
    Rational x = a.coefficient(e);
    Rational y = b.coefficient(e);
    if (x != y) return {false, Mismatch{e, std::move(x), std::move(y)}};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------

Product& Product::times(const Monomial& m) {
  prefactor_ = prefactor_ * m;
  return *this;
}

Product& Product::times(const Rational& c) {
  prefactor_.coeff *= c;
  return *this;
}

Product& Product::times_binomial(const Rational& c, Exponent k) {
  binomials_.push_back({c, k, false});
  return *this;
}

Product& Product::over_binomial(const Rational& c, Exponent k) {
  binomials_.push_back({c, k, true});
  return *this;
}

Product& Product::times(const PochhammerSpec& p, int power) {
  for (int i = 0; i < power; ++i) factors_.push_back({p, false});
  return *this;
}

Product& Product::over(const PochhammerSpec& p, int power) {
  for (int i = 0; i < power; ++i) factors_.push_back({p, true});
  return *this;
}

LaurentSeries Product::eval(Exponent order) const {
  Rational coeff = prefactor_.coeff;
  Exponent lead = prefactor_.exp;
  bool vanishes = sgn(coeff) == 0;

  struct Pending {
    Rational c;
    Exponent k;
    bool inverse;
  };
  std::vector<Pending> positive;

  // Folds factors with nonpositive exponent into the prefactor.
  auto fold = [&](const Rational& c, Exponent k, bool inv) {
    if (sgn(c) == 0) return;
    if (k > 0) {
      positive.push_back({c, k, inv});
      return;
    }
    if (k == 0) {
      Rational f = 1 + c;
      if (sgn(f) == 0) {
        if (inv) throw NotInvertible("denominator contains the zero factor (1 - 1)");
        vanishes = true;
        return;
      }
      if (inv) coeff /= f; else coeff *= f;
      return;
    }
    if (inv) {
      coeff /= c;
      lead -= k;
    } else {
      coeff *= c;
      lead += k;
    }
    positive.push_back({1 / c, -k, inv});
  };

  for (const auto& b : binomials_) fold(b.c, b.k, b.inverse);

  // Infinite products are expanded in a second pass once the lead is known.
  std::vector<const Factor*> unbounded;
  for (const auto& f : factors_) {
    const auto& spec = f.spec;
    if (spec.base.is_zero()) continue;
    if (spec.step < 1) throw InvalidParameter("q-Pochhammer step must be positive");
    if (spec.length && *spec.length < 0) throw InvalidParameter("q-Pochhammer length must be nonnegative");
    Rational c = -spec.base.coeff;
    if (spec.length) {
      for (std::int64_t j = 0; j < *spec.length; ++j) fold(c, spec.base.exp + j * spec.step, f.inverse);
    } else {
      for (std::int64_t j = 0; spec.base.exp + j * spec.step <= 0; ++j)
        fold(c, spec.base.exp + j * spec.step, f.inverse);
      unbounded.push_back(&f);
    }
  }

  if (vanishes || lead >= order) return LaurentSeries::zero(order);
  Exponent window = order - lead;

  for (const Factor* f : unbounded) {
    const auto& spec = f->spec;
    Rational c = -spec.base.coeff;
    std::int64_t j = 0;
    while (spec.base.exp + j * spec.step <= 0) ++j;
    for (; spec.base.exp + j * spec.step < window; ++j)
      positive.push_back({c, spec.base.exp + j * spec.step, f->inverse});
  }

  LaurentSeries out = LaurentSeries::monomial(coeff, lead, order);
  for (const auto& p : positive) {
    if (p.k >= window) continue;
    if (p.inverse) out.div_binomial(p.c, p.k); else out.mul_binomial(p.c, p.k);
  }
  return out;
}

LaurentSeries pochhammer(const PochhammerSpec& spec, Exponent order) {
  return Product{}.times(spec).eval(order);
}

LaurentSeries sum_terms(const TermGenerator& generator, Exponent order, std::int64_t cap, std::int64_t first) {
  LaurentSeries acc = LaurentSeries::zero(order);
  for (std::int64_t i = 0; i < cap; ++i) {
    LaurentSeries term = generator(first + i);
    if (term.min_exp() >= order) return acc;
    acc += term;
  }
  throw TruncationStall("no term fell below order " + std::to_string(order) + " within " +
                        std::to_string(cap) + " evaluations");
}

}  // namespace qlab
