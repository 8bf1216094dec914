#include "knotrep/lpoly.hpp"

#include <algorithm>
#include <sstream>

namespace knotrep {

namespace {
BigInt bigint_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

LPoly LPoly::constant(RegistryPtr reg, BigInt c) {
  LPoly p(std::move(reg));
  if (c != 0) p.terms_.emplace(ExpVec(p.reg_->size(), 0), std::move(c));
  return p;
}

LPoly LPoly::variable(RegistryPtr reg, int idx, int exp) {
  LPoly p(std::move(reg));
  if (idx < 0 || idx >= p.reg_->size()) throw input_error("variable index out of range");
  if (exp < 0 && !p.reg_->is_unit(idx))
    throw input_error("negative exponent on non-unit variable " + p.reg_->name(idx));
  ExpVec e(p.reg_->size(), 0);
  e[idx] = exp;
  p.terms_.emplace(std::move(e), BigInt(1));
  return p;
}

LPoly LPoly::monomial(RegistryPtr reg, const ExpVec& e, BigInt c) {
  LPoly p(std::move(reg));
  if (static_cast<int>(e.size()) != p.reg_->size())
    throw input_error("exponent vector size mismatch");
  for (int i = 0; i < p.reg_->size(); ++i)
    if (e[i] < 0 && !p.reg_->is_unit(i))
      throw input_error("negative exponent on non-unit variable " + p.reg_->name(i));
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

bool LPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

bool LPoly::is_one() const {
  return terms_.size() == 1 && is_constant() && terms_.begin()->second == 1;
}

bool LPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1 && c != -1) return false;
  for (int i = 0; i < reg_->size(); ++i)
    if (e[i] != 0 && !reg_->is_unit(i)) return false;
  return true;
}

long LPoly::max_coeff_bits() const {
  long bits = 0;
  for (const auto& [e, c] : terms_) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (a != 0) bits = std::max(bits, static_cast<long>(boost::multiprecision::msb(a)) + 1);
  }
  return bits;
}

void LPoly::check_budget() const {
  const Budget& b = global_budget();
  if (terms_.size() > b.max_terms)
    throw budget_error("polynomial exceeded " + std::to_string(b.max_terms) + " terms");
  if (max_coeff_bits() > b.max_coeff_bits)
    throw budget_error("coefficient exceeded " + std::to_string(b.max_coeff_bits) + " bits");
}

void LPoly::check_same_registry(const LPoly& a, const LPoly& b) {
  if (a.reg_ != b.reg_) throw input_error("operation on polynomials over different registries");
}

void LPoly::add_term(const ExpVec& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LPoly LPoly::operator-() const {
  LPoly r(reg_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (!reg_) reg_ = o.reg_;
  else if (o.reg_ && !o.terms_.empty()) check_same_registry(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (!reg_) reg_ = o.reg_;
  else if (o.reg_ && !o.terms_.empty()) check_same_registry(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly::check_same_registry(a, b);
  LPoly r(a.reg_);
  ExpVec e(a.reg_ ? a.reg_->size() : 0, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  r.check_budget();
  return r;
}

LPoly LPoly::operator*(const BigInt& c) const {
  LPoly r(reg_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

bool LPoly::operator<(const LPoly& o) const { return terms_ < o.terms_; }

LPoly LPoly::pow(long e) const {
  if (e < 0) return inverse_monomial().pow(-e);
  LPoly r = LPoly::constant(reg_, 1);
  LPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

LPoly LPoly::inverse_monomial() const {
  if (!is_unit_monomial())
    throw input_error("inverse requires a unit monomial (got " + str() + ")");
  const auto& [e, c] = *terms_.begin();
  ExpVec inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return monomial(reg_, inv, c);  // c is +-1, its own inverse
}

bool LPoly::has_var(int idx) const {
  for (const auto& [e, c] : terms_)
    if (e[idx] != 0) return true;
  return false;
}

std::vector<int> LPoly::vars_present() const {
  std::vector<int> out;
  if (!reg_) return out;
  for (int i = 0; i < reg_->size(); ++i)
    if (has_var(i)) out.push_back(i);
  return out;
}

int LPoly::degree_in(int idx) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return d;
}

int LPoly::low_in(int idx) const {
  if (terms_.empty()) return 0;
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx] < d) d = e[idx];
    first = false;
  }
  return d;
}

long LPoly::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (int32_t x : e)
      if (x > 0) s += x;
    d = std::max(d, s);
  }
  return d;
}

LPoly LPoly::coeff_in(int idx, int k) const {
  LPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    ExpVec e2 = e;
    e2[idx] = 0;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

LPoly LPoly::derivative(int idx) const {
  LPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    ExpVec e2 = e;
    e2[idx] -= 1;
    r.add_term(e2, c * e[idx]);
  }
  return r;
}

LPoly LPoly::substitute(int idx, const LPoly& val) const {
  check_same_registry(*this, val);
  if (!has_var(idx)) return *this;
  int lo = low_in(idx), hi = degree_in(idx);
  LPoly power(reg_);
  if (lo < 0) {
    if (!val.is_unit_monomial())
      throw input_error("substituting a non-invertible value into a negative power of " +
                        reg_->name(idx));
    power = val.inverse_monomial().pow(-lo);
  } else {
    power = val.pow(lo);
  }
  LPoly res(reg_);
  for (int k = lo; k <= hi; ++k) {
    LPoly ck = coeff_in(idx, k);
    if (!ck.is_zero()) res += ck * power;
    if (k < hi) power = power * val;
  }
  return res;
}

LPoly LPoly::substitute_ratio(int idx, const LPoly& num, const LPoly& den) const {
  check_same_registry(*this, num);
  check_same_registry(*this, den);
  if (!has_var(idx)) return *this;
  int lo = low_in(idx), hi = degree_in(idx);
  if (lo < 0 && !num.is_unit_monomial())
    throw input_error("ratio substitution into a negative power of " + reg_->name(idx) +
                      " requires an invertible numerator");
  // result = sum_k coeff_k * num^k * den^(hi-k), i.e. the original scaled
  // by den^hi (plus num^lo when lo < 0).
  LPoly res(reg_);
  for (int k = lo; k <= hi; ++k) {
    LPoly ck = coeff_in(idx, k);
    if (ck.is_zero()) continue;
    LPoly nk = k >= 0 ? num.pow(k) : num.inverse_monomial().pow(-k);
    res += ck * nk * den.pow(hi - k);
  }
  return res;
}

LPoly LPoly::cleared_denominators() const {
  if (terms_.empty()) return *this;
  ExpVec mins = monomial_content();
  ExpVec shift(mins.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < mins.size(); ++i)
    if (mins[i] < 0) {
      shift[i] = -mins[i];
      any = true;
    }
  if (!any) return *this;
  LPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += shift[i];
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

ExpVec LPoly::monomial_content() const {
  if (terms_.empty()) return ExpVec(reg_ ? reg_->size() : 0, 0);
  ExpVec mins = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
  return mins;
}

BigInt LPoly::integer_content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    g = bigint_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LPoly LPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  ExpVec mins = monomial_content();
  BigInt g = integer_content();
  if (terms_.rbegin()->second < 0) g = -g;
  LPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= mins[i];
    r.terms_.emplace(std::move(e2), c / g);
  }
  return r;
}

LPoly LPoly::normalized_sign() const {
  if (terms_.empty()) return *this;
  return terms_.rbegin()->second < 0 ? -*this : *this;
}

cdouble LPoly::eval(const std::vector<cdouble>& point) const {
  if (reg_ && static_cast<int>(point.size()) != reg_->size())
    throw input_error("evaluation point has wrong dimension");
  cdouble acc = 0.0;
  for (const auto& [e, c] : terms_) {
    cdouble t = static_cast<double>(c.convert_to<double>());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      t *= std::pow(point[i], static_cast<double>(e[i]));
    }
    acc += t;
  }
  return acc;
}

std::string LPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vs;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vs << "*";
      vs << reg_->name(static_cast<int>(i));
      if (e[i] != 1) vs << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << vs.str();
    }
  }
  return os.str();
}

bool equal_up_to_unit(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.term_count() != b.term_count()) return false;
  ExpVec ca = a.monomial_content(), cb = b.monomial_content();
  const RegistryPtr& reg = a.registry();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i] && !reg->is_unit(static_cast<int>(i))) return false;
  // compare terms relative to each polynomial's own monomial content,
  // allowing one global sign flip
  auto shifted = [](const LPoly& p, const ExpVec& mins) {
    std::vector<std::pair<ExpVec, BigInt>> v;
    for (const auto& [e, c] : p.terms()) {
      ExpVec e2 = e;
      for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= mins[i];
      v.emplace_back(std::move(e2), c);
    }
    return v;
  };
  auto va = shifted(a, ca), vb = shifted(b, cb);
  if (va == vb) return true;
  for (auto& [e, c] : vb) c = -c;
  return va == vb;
}

}  // namespace knotrep
