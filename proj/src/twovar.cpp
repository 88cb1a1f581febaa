#include "g2lift/twovar.hpp"

#include <algorithm>

namespace g2lift {

mpz_class LaurentPoly::coeff(long r) const {
  const long idx = r - lo;
  if (idx < 0 || idx >= static_cast<long>(c.size())) return 0;
  return c[static_cast<size_t>(idx)];
}

void LaurentPoly::add_term(long r, const mpz_class& v) {
  if (v == 0) return;
  if (c.empty()) {
    lo = r;
    c.push_back(v);
    return;
  }
  if (r < lo) {
    c.insert(c.begin(), static_cast<size_t>(lo - r), mpz_class(0));
    lo = r;
  } else if (r >= lo + static_cast<long>(c.size())) {
    c.resize(static_cast<size_t>(r - lo + 1));
  }
  c[static_cast<size_t>(r - lo)] += v;
}

void LaurentPoly::trim() {
  size_t head = 0;
  while (head < c.size() && c[head] == 0) ++head;
  size_t tail = c.size();
  while (tail > head && c[tail - 1] == 0) --tail;
  if (head == tail) {
    lo = 0;
    c.clear();
    return;
  }
  c = std::vector<mpz_class>(c.begin() + static_cast<long>(head), c.begin() + static_cast<long>(tail));
  lo += static_cast<long>(head);
}

bool LaurentPoly::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return v == 0; });
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (size_t i = 0; i < b.c.size(); ++i) r.add_term(b.lo + static_cast<long>(i), b.c[i]);
  r.trim();
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

LaurentPoly operator*(const mpz_class& s, const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& v : r.c) v *= s;
  r.trim();
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  x.trim();
  y.trim();
  return x.lo == y.lo && x.c == y.c;
}

TwoVarSeries TwoVarSeries::one(int prec) { return monomial(1, 0, 0, prec); }

TwoVarSeries TwoVarSeries::monomial(const mpz_class& c, int n, long r, int prec) {
  TwoVarSeries s(prec);
  if (n >= 0 && n < prec) s.row(n).add_term(r, c);
  return s;
}

TwoVarSeries TwoVarSeries::from_series(const QExpansion& f) {
  TwoVarSeries s(f.prec());
  for (int n = 0; n < f.prec(); ++n) s.row(n).add_term(0, f.coeff(n));
  return s;
}

TwoVarSeries operator+(const TwoVarSeries& a, const TwoVarSeries& b) {
  TwoVarSeries r(std::min(a.prec(), b.prec()));
  for (int n = 0; n < r.prec(); ++n) r.row(n) = a.row(n) + b.row(n);
  return r;
}

TwoVarSeries operator*(const TwoVarSeries& a, const TwoVarSeries& b) {
  TwoVarSeries r(std::min(a.prec(), b.prec()));
  for (int i = 0; i < r.prec(); ++i) {
    if (a.row(i).c.empty()) continue;
    for (int j = 0; i + j < r.prec(); ++j) {
      if (b.row(j).c.empty()) continue;
      r.row(i + j) = r.row(i + j) + a.row(i) * b.row(j);
    }
  }
  return r;
}

TwoVarSeries operator*(const mpz_class& s, const TwoVarSeries& a) {
  TwoVarSeries r(a.prec());
  for (int n = 0; n < r.prec(); ++n) r.row(n) = s * a.row(n);
  return r;
}

TwoVarSeries operator*(const QExpansion& f, const TwoVarSeries& a) {
  return TwoVarSeries::from_series(f) * a;
}

bool operator==(const TwoVarSeries& a, const TwoVarSeries& b) {
  if (a.prec() != b.prec()) return false;
  for (int n = 0; n < a.prec(); ++n)
    if (!(a.row(n) == b.row(n))) return false;
  return true;
}

}  // namespace g2lift
