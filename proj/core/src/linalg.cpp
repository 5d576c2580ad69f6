#include "spinform/linalg.hpp"

#include <algorithm>

namespace spinform {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int cur = 0;
  for (int c = 0; c < cols && cur < rows; ++c) {
    int pivot = -1;
    for (int r = cur; r < rows; ++r) {
      if (!m[r][c].isZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[cur], m[pivot]);
    if (m[cur][c] != Scalar::one()) {
      Scalar s = inv(m[cur][c]);
      for (int k = c; k < cols; ++k)
        if (!m[cur][k].isZero()) m[cur][k] *= s;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == cur || m[r][c].isZero()) continue;
      Scalar f = m[r][c];
      for (int k = c; k < cols; ++k)
        if (!m[cur][k].isZero()) m[r][k] -= f * m[cur][k];
    }
    pivots.push_back(c);
    ++cur;
  }
  m.resize(static_cast<std::size_t>(cur));  // drop zero rows
  return pivots;
}

int rankOf(Mat m) { return static_cast<int>(rref(m).size()); }

Mat kernelBasisOf(const Mat& m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  Mat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> isPivot(cols, false);
  for (int c : pivots) isPivot[c] = true;
  Mat out;
  for (int f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    Vec v(cols, Scalar::zero());
    v[f] = Scalar::one();
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -r[pr][f];
    out.push_back(std::move(v));
  }
  return out;
}

Echelon makeEchelon(Mat m) {
  Echelon e;
  e.pivots = rref(m);
  e.rows = std::move(m);
  return e;
}

Vec reduceAgainst(const Echelon& e, Vec v) {
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    int c = e.pivots[r];
    if (v[c].isZero()) continue;
    Scalar f = v[c];
    const Vec& row = e.rows[r];
    for (std::size_t k = static_cast<std::size_t>(c); k < v.size(); ++k)
      if (!row[k].isZero()) v[k] -= f * row[k];
  }
  return v;
}

bool inSpan(const Echelon& e, const Vec& v) {
  Vec r = reduceAgainst(e, v);
  return std::all_of(r.begin(), r.end(),
                     [](const Scalar& s) { return s.isZero(); });
}

bool spanEquals(const Mat& a, const Mat& b) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  Echelon ea = makeEchelon(a);
  Echelon eb = makeEchelon(b);
  if (ea.pivots != eb.pivots) return false;
  for (const Vec& v : b)
    if (!inSpan(ea, v)) return false;
  for (const Vec& v : a)
    if (!inSpan(eb, v)) return false;
  return true;
}

void sparseAdd(SparseVec& into, const SparseVec& v, const Scalar& scale) {
  if (scale.isZero()) return;
  for (const auto& [k, s] : v) {
    Scalar t = scale * s;
    if (t.isZero()) continue;
    auto [it, inserted] = into.emplace(k, t);
    if (!inserted) {
      it->second += t;
      if (it->second.isZero()) into.erase(it);
    }
  }
}

namespace {

// Dense coordinates of sparse vectors over the union of their keys.
std::vector<Key> collectKeys(const std::vector<SparseVec>& vs) {
  std::vector<Key> keys;
  for (const SparseVec& v : vs)
    for (const auto& [k, s] : v) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

Mat densify(const std::vector<SparseVec>& vs, const std::vector<Key>& keys) {
  Mat m(vs.size(), Vec(keys.size(), Scalar::zero()));
  for (std::size_t r = 0; r < vs.size(); ++r) {
    std::size_t c = 0;
    for (const auto& [k, s] : vs[r]) {
      while (keys[c] < k) ++c;
      m[r][c] = s;
    }
  }
  return m;
}

std::vector<SparseVec> sparsify(const Mat& m, const std::vector<Key>& keys) {
  std::vector<SparseVec> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < keys.size(); ++c)
      if (!m[r][c].isZero()) out[r].emplace(keys[c], m[r][c]);
  return out;
}

}  // namespace

std::vector<SparseVec> jointKernelSparse(const std::vector<Key>& basisKeys,
                                         const std::vector<SparseOp>& ops) {
  std::vector<SparseVec> cur;
  cur.reserve(basisKeys.size());
  for (Key k : basisKeys) cur.push_back(SparseVec{{k, Scalar::one()}});
  for (const SparseOp& op : ops) {
    if (cur.empty()) break;
    std::vector<SparseVec> images(cur.size());
    for (std::size_t j = 0; j < cur.size(); ++j) images[j] = op(cur[j]);
    std::vector<Key> ikeys = collectKeys(images);
    if (ikeys.empty()) continue;  // operator kills everything; basis unchanged
    // Rows = image coordinates, columns = current basis members.
    Mat a(ikeys.size(), Vec(cur.size(), Scalar::zero()));
    for (std::size_t j = 0; j < cur.size(); ++j) {
      for (const auto& [k, s] : images[j]) {
        std::size_t r = static_cast<std::size_t>(
            std::lower_bound(ikeys.begin(), ikeys.end(), k) - ikeys.begin());
        a[r][j] = s;
      }
    }
    Mat ker = kernelBasisOf(a);
    std::vector<SparseVec> next;
    next.reserve(ker.size());
    for (const Vec& coeffs : ker) {
      SparseVec v;
      for (std::size_t j = 0; j < cur.size(); ++j)
        sparseAdd(v, cur[j], coeffs[j]);
      next.push_back(std::move(v));
    }
    cur = std::move(next);
  }
  if (cur.empty()) return cur;
  // Echelonize for a canonical basis: ascending keys, leading coefficient 1.
  std::vector<Key> keys = collectKeys(cur);
  Mat m = densify(cur, keys);
  rref(m);
  return sparsify(m, keys);
}

bool sparseInSpan(const std::vector<SparseVec>& basis, const SparseVec& v) {
  if (v.empty()) return true;
  std::vector<SparseVec> all = basis;
  all.push_back(v);
  std::vector<Key> keys = collectKeys(all);
  Mat bm = densify(basis, keys);
  Echelon e = makeEchelon(std::move(bm));
  Mat vm = densify({v}, keys);
  return inSpan(e, vm[0]);
}

bool sparseSpanEquals(const std::vector<SparseVec>& a,
                      const std::vector<SparseVec>& b) {
  std::vector<SparseVec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::vector<Key> keys = collectKeys(all);
  Mat am = densify(a, keys);
  Mat bm = densify(b, keys);
  return spanEquals(am, bm);
}

SparseVec toSparse(const Spinor& s) {
  SparseVec v;
  for (const auto& [m, c] : s.terms) v.emplace(static_cast<Key>(m), c);
  return v;
}

Spinor fromSparse(const SparseVec& v) {
  Spinor s;
  for (const auto& [k, c] : v) s.terms.emplace(static_cast<Monomial>(k), c);
  return s;
}

namespace {

std::vector<Spinor> kernelViaSparse(const std::vector<Monomial>& monomials,
                                    const std::vector<SpinorOp>& ops) {
  std::vector<Key> keys(monomials.begin(), monomials.end());
  std::vector<SparseOp> sops;
  sops.reserve(ops.size());
  for (const SpinorOp& op : ops) {
    sops.push_back([&op](const SparseVec& v) {
      return toSparse(op(fromSparse(v)));
    });
  }
  std::vector<SparseVec> ker = jointKernelSparse(keys, sops);
  std::vector<Spinor> out;
  out.reserve(ker.size());
  for (const SparseVec& v : ker) out.push_back(fromSparse(v));
  return out;
}

}  // namespace

std::vector<Spinor> jointKernel(const SpinParams& p,
                                const std::vector<SpinorOp>& ops) {
  std::vector<Monomial> monomials(p.spinorDim());
  for (std::uint32_t m = 0; m < p.spinorDim(); ++m) monomials[m] = m;
  return kernelViaSparse(monomials, ops);
}

std::vector<Spinor> jointKernelOn(const std::vector<Monomial>& monomials,
                                  const std::vector<SpinorOp>& ops) {
  return kernelViaSparse(monomials, ops);
}

bool spinorInSpan(const std::vector<Spinor>& basis, const Spinor& v) {
  std::vector<SparseVec> b;
  b.reserve(basis.size());
  for (const Spinor& s : basis) b.push_back(toSparse(s));
  return sparseInSpan(b, toSparse(v));
}

bool spinorSpanEquals(const std::vector<Spinor>& a,
                      const std::vector<Spinor>& b) {
  std::vector<SparseVec> sa, sb;
  sa.reserve(a.size());
  sb.reserve(b.size());
  for (const Spinor& s : a) sa.push_back(toSparse(s));
  for (const Spinor& s : b) sb.push_back(toSparse(s));
  return sparseSpanEquals(sa, sb);
}

}  // namespace spinform
