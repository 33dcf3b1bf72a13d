#include "qschur/polyq.hpp"

#include <sstream>

namespace qschur {

void PolyQ::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::q_power(int k) {
  PolyQ p;
  p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
  p.c_.back() = 1;
  return p;
}

PolyQ PolyQ::gauss(int m) {
  if (m < 0) throw BadLabel("gauss: negative argument");
  PolyQ p;
  p.c_.assign(static_cast<size_t>(m), Int(1));
  return p;
}

Int PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[static_cast<size_t>(i)];
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  PolyQ r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  *this = *this * o;
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Int PolyQ::eval_at(const Int& q0) const {
  Int v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * q0 + c_[i];
  return v;
}

PolyQ PolyQ::halved() const {
  PolyQ r = *this;
  for (auto& c : r.c_) {
    if (c % 2 != 0) throw NotDivisible("halve: odd coefficient in " + str());
    c /= 2;
  }
  return r;
}

bool PolyQ::all_coeffs_nonneg() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

std::string PolyQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Int& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = c > 0 ? c : Int(-c);
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qschur
