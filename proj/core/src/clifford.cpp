#include "spinform/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace spinform {

CVector CVector::zero(const SpinParams& p) {
  CVector v;
  v.coeffs.assign(static_cast<std::size_t>(p.dimV()), Scalar::zero());
  return v;
}

bool CVector::isZero() const {
  for (const Scalar& s : coeffs)
    if (!s.isZero()) return false;
  return true;
}

bool CVector::isReal() const {
  for (const Scalar& s : coeffs)
    if (!s.isReal()) return false;
  return true;
}

CVector basisVec(const SpinParams& p, int i) {
  if (i < 1 || i > p.dimV()) throw std::out_of_range("basisVec: index");
  CVector v = CVector::zero(p);
  v.coeffs[static_cast<std::size_t>(i - 1)] = Scalar::one();
  return v;
}

CVector xVec(const SpinParams& p, int j) {
  if (j < 1 || j > p.genCount()) throw std::out_of_range("xVec: index");
  CVector v = CVector::zero(p);
  v.coeffs[static_cast<std::size_t>(2 * j - 1)] = Scalar(0, 0, rat(1, 2), 0);
  v.coeffs[static_cast<std::size_t>(2 * j)] = Scalar(0, 0, 0, rat(-1, 2));
  return v;
}

CVector yVec(const SpinParams& p, int j) {
  if (j < 1 || j > p.genCount()) throw std::out_of_range("yVec: index");
  CVector v = CVector::zero(p);
  v.coeffs[static_cast<std::size_t>(2 * j - 1)] = Scalar(0, 0, rat(1, 2), 0);
  v.coeffs[static_cast<std::size_t>(2 * j)] = Scalar(0, 0, 0, rat(1, 2));
  return v;
}

CVector operator+(const CVector& v, const CVector& w) {
  CVector out = v;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) out.coeffs[i] += w.coeffs[i];
  return out;
}

CVector operator-(const CVector& v, const CVector& w) {
  CVector out = v;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) out.coeffs[i] -= w.coeffs[i];
  return out;
}

CVector operator*(const Scalar& s, const CVector& v) {
  CVector out = v;
  for (Scalar& c : out.coeffs) c = s * c;
  return out;
}

bool operator==(const CVector& v, const CVector& w) {
  return v.coeffs == w.coeffs;
}

Scalar gMetric(const CVector& v, const CVector& w) {
  Scalar out = Scalar::zero();
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs[i].isZero() || w.coeffs[i].isZero()) continue;
    out += v.coeffs[i] * w.coeffs[i];
  }
  return out;
}

Form Form::zero(int degree) {
  Form f;
  f.degree = degree;
  return f;
}

Form Form::unit() {
  Form f;
  f.degree = 0;
  f.terms.emplace(0, Scalar::one());
  return f;
}

Scalar Form::coeff(std::uint64_t key) const {
  auto it = terms.find(key);
  return it == terms.end() ? Scalar::zero() : it->second;
}

void Form::addTerm(std::uint64_t key, const Scalar& s) {
  if (s.isZero()) return;
  if (std::popcount(key) != degree)
    throw std::invalid_argument("Form::addTerm: degree mismatch");
  auto [it, inserted] = terms.emplace(key, s);
  if (!inserted) {
    it->second += s;
    if (it->second.isZero()) terms.erase(it);
  }
}

bool operator==(const Form& a, const Form& b) {
  return a.degree == b.degree && a.terms == b.terms;
}
bool operator!=(const Form& a, const Form& b) { return !(a == b); }

Form operator+(const Form& a, const Form& b) {
  if (a.degree != b.degree) throw std::invalid_argument("Form +: degree");
  Form out = a;
  for (const auto& [k, s] : b.terms) out.addTerm(k, s);
  return out;
}

Form operator-(const Form& a, const Form& b) {
  if (a.degree != b.degree) throw std::invalid_argument("Form -: degree");
  Form out = a;
  for (const auto& [k, s] : b.terms) out.addTerm(k, -s);
  return out;
}

Form operator*(const Scalar& s, const Form& a) {
  Form out = Form::zero(a.degree);
  if (s.isZero()) return out;
  for (const auto& [k, t] : a.terms) out.terms.emplace(k, s * t);
  return out;
}

Form basisForm(const SpinParams& p, int i) {
  if (i < 1 || i > p.dimV()) throw std::out_of_range("basisForm: index");
  Form f = Form::zero(1);
  f.terms.emplace(std::uint64_t{1} << (i - 1), Scalar::one());
  return f;
}

namespace {

int mergeSign64(std::uint64_t a, std::uint64_t b) {
  int inversions = 0;
  for (std::uint64_t t = b; t != 0; t &= t - 1) {
    int bitIdx = std::countr_zero(t);
    inversions += std::popcount(a >> (bitIdx + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
  Form out = Form::zero(a.degree + b.degree);
  for (const auto& [ka, sa] : a.terms) {
    for (const auto& [kb, sb] : b.terms) {
      if (ka & kb) continue;
      Scalar v = sa * sb;
      if (mergeSign64(ka, kb) < 0) v = -v;
      out.addTerm(ka | kb, v);
    }
  }
  return out;
}

Form wedgePower(const Form& a, int k) {
  if (k < 0) throw std::invalid_argument("wedgePower: negative exponent");
  Form out = Form::unit();
  for (int t = 0; t < k; ++t) out = wedge(out, a);
  return out;
}

Form conjForm(const Form& a) {
  Form out = Form::zero(a.degree);
  for (const auto& [k, s] : a.terms) out.terms.emplace(k, conj(s));
  return out;
}

Form contractBasis(int i, const Form& a) {
  if (a.degree == 0) return Form::zero(0);
  Form out = Form::zero(a.degree - 1);
  std::uint64_t bit = std::uint64_t{1} << (i - 1);
  for (const auto& [k, s] : a.terms) {
    if (!(k & bit)) continue;
    int below = std::popcount(k & (bit - 1));
    out.addTerm(k & ~bit, (below % 2 == 0) ? s : -s);
  }
  return out;
}

Form contractVec(const CVector& v, const Form& a) {
  if (a.degree == 0) return Form::zero(0);
  Form out = Form::zero(a.degree - 1);
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs[i].isZero()) continue;
    Form part = contractBasis(static_cast<int>(i) + 1, a);
    for (const auto& [k, s] : part.terms) out.addTerm(k, v.coeffs[i] * s);
  }
  return out;
}

namespace {

int signBelowSpinor(Monomial m, int j) {
  Monomial below = m & ((1u << (j - 1)) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

}  // namespace

Spinor cliffE(const SpinParams& p, int i, const Spinor& psi) {
  if (i < 1 || i > p.dimV()) throw std::out_of_range("cliffE: index");
  Spinor out;
  if (i == 1) {
    const Scalar pos = Scalar::i();
    const Scalar neg = -Scalar::i();
    for (const auto& [m, s] : psi.terms)
      out.terms.emplace(m, (grade(m) % 2 == 0) ? pos * s : neg * s);
    return out;
  }
  const int j = i / 2;  // generator index for the pair (e_{2j}, e_{2j+1})
  const Monomial bit = 1u << (j - 1);
  const bool even = (i % 2 == 0);
  for (const auto& [m, s] : psi.terms) {
    int sign = signBelowSpinor(m, j);
    if (m & bit) {
      // contraction term: +i for e_{2j}, -1 for e_{2j+1}
      Scalar v = even ? Scalar::i() * s : -s;
      out.addTerm(m & ~bit, (sign > 0) ? v : -v);
    } else {
      // wedge term: +i for e_{2j}, +1 for e_{2j+1}
      Scalar v = even ? Scalar::i() * s : s;
      out.addTerm(m | bit, (sign > 0) ? v : -v);
    }
  }
  return out;
}

Spinor cliffVec(const SpinParams& p, const CVector& v, const Spinor& psi) {
  Spinor out;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs[i].isZero()) continue;
    Spinor part = cliffE(p, static_cast<int>(i) + 1, psi);
    out = out + v.coeffs[i] * part;
  }
  return out;
}

Spinor cliffForm(const SpinParams& p, const Form& theta, const Spinor& psi) {
  Spinor out;
  for (const auto& [k, s] : theta.terms) {
    Spinor acc = psi;
    // Rightmost factor acts first: descend through set bits.
    std::uint64_t key = k;
    while (key != 0) {
      int top = 63 - std::countl_zero(key);
      acc = cliffE(p, top + 1, acc);
      key &= ~(std::uint64_t{1} << top);
    }
    out = out + s * acc;
  }
  return out;
}

Endo Endo::zero(int dim) {
  Endo t;
  t.m.assign(static_cast<std::size_t>(dim),
             std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar::zero()));
  return t;
}

Endo Endo::identity(int dim) {
  Endo t = zero(dim);
  for (int i = 0; i < dim; ++i) t.m[i][i] = Scalar::one();
  return t;
}

bool operator==(const Endo& a, const Endo& b) { return a.m == b.m; }

Endo operator+(const Endo& a, const Endo& b) {
  Endo out = a;
  for (int r = 0; r < out.dim(); ++r)
    for (int c = 0; c < out.dim(); ++c) out.m[r][c] += b.m[r][c];
  return out;
}

Endo operator-(const Endo& a, const Endo& b) {
  Endo out = a;
  for (int r = 0; r < out.dim(); ++r)
    for (int c = 0; c < out.dim(); ++c) out.m[r][c] -= b.m[r][c];
  return out;
}

Endo operator*(const Scalar& s, const Endo& a) {
  Endo out = a;
  for (auto& row : out.m)
    for (Scalar& v : row) v = s * v;
  return out;
}

Endo compose(const Endo& a, const Endo& b) {
  Endo out = Endo::zero(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int k = 0; k < a.dim(); ++k) {
      if (a.m[r][k].isZero()) continue;
      for (int c = 0; c < a.dim(); ++c) {
        if (b.m[k][c].isZero()) continue;
        out.m[r][c] += a.m[r][k] * b.m[k][c];
      }
    }
  return out;
}

Endo commutator(const Endo& a, const Endo& b) {
  return compose(a, b) - compose(b, a);
}

bool isSkew(const Endo& a) {
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c <= r; ++c)
      if (a.m[r][c] != -a.m[c][r]) return false;
  return true;
}

CVector applyEndo(const Endo& t, const CVector& v) {
  CVector out;
  out.coeffs.assign(v.coeffs.size(), Scalar::zero());
  for (std::size_t c = 0; c < v.coeffs.size(); ++c) {
    if (v.coeffs[c].isZero()) continue;
    for (std::size_t r = 0; r < v.coeffs.size(); ++r) {
      if (t.m[r][c].isZero()) continue;
      out.coeffs[r] += t.m[r][c] * v.coeffs[c];
    }
  }
  return out;
}

Form formFromSkew(const Endo& t) {
  Form out = Form::zero(2);
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i + 1; j < t.dim(); ++j)
      out.addTerm((std::uint64_t{1} << i) | (std::uint64_t{1} << j), t.m[j][i]);
  return out;
}

Endo skewFromForm(const SpinParams& p, const Form& theta) {
  if (theta.degree != 2) throw std::invalid_argument("skewFromForm: degree");
  Endo t = Endo::zero(p.dimV());
  for (const auto& [k, s] : theta.terms) {
    int i = std::countr_zero(k);
    int j = 63 - std::countl_zero(k);
    t.m[j][i] += s;
    t.m[i][j] -= s;
  }
  return t;
}

Spinor spinLift(const SpinParams& p, const Endo& t, const Spinor& psi) {
  if (!isSkew(t)) throw std::invalid_argument("spinLift: endomorphism not skew");
  Form theta = formFromSkew(t);
  return Scalar::ofRational(rat(1, 2)) * cliffForm(p, theta, psi);
}

Form soActionOnForm(const Endo& t, const Form& theta) {
  Form out = Form::zero(theta.degree);
  for (const auto& [k, s] : theta.terms) {
    for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
      int pos = std::countr_zero(rest);  // replace factor e_{pos+1}
      std::uint64_t without = k & ~(std::uint64_t{1} << pos);
      for (int r = 0; r < t.dim(); ++r) {
        const Scalar& entry = t.m[static_cast<std::size_t>(r)]
                                 [static_cast<std::size_t>(pos)];
        if (entry.isZero()) continue;
        std::uint64_t rbit = std::uint64_t{1} << r;
        if (without & rbit) continue;  // repeated factor
        int lo = std::min(r, pos), hi = std::max(r, pos);
        std::uint64_t between =
            without & ((~std::uint64_t{0} << (lo + 1)) &
                       ((std::uint64_t{1} << hi) - 1));
        Scalar v = entry * s;
        if (std::popcount(between) % 2 == 1) v = -v;
        out.addTerm(without | rbit, v);
      }
    }
  }
  return out;
}

std::string toString(const Form& a) {
  if (a.terms.empty()) return "0";
  std::string out;
  for (const auto& [k, s] : a.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + toString(s) + ")";
    if (k != 0) {
      std::string mono;
      for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
        if (!mono.empty()) mono += "^";
        mono += "e_" + std::to_string(std::countr_zero(rest) + 1);
      }
      out += "*" + mono;
    }
  }
  return out;
}

}  // namespace spinform
