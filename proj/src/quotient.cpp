#include "wonder/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wonder {

std::optional<std::vector<Rational>> is_distinguished(const ColorSet& cs,
                                                      std::span<const int> subset) {
  std::vector<std::vector<int>> rows;
  for (int d : subset) {
    if (d < 0 || d >= (int)cs.colors.size())
      throw std::invalid_argument("color index out of range");
    rows.push_back(cs.c_full[d]);
  }
  int ncols = cs.c_full.empty() ? 0 : (int)cs.c_full[0].size();
  return positive_combination_certificate(rows, ncols);
}

namespace {

std::vector<DistinguishedSubset> scan_range(const ColorSet& cs, unsigned long lo,
                                            unsigned long hi) {
  std::vector<DistinguishedSubset> out;
  int m = (int)cs.colors.size();
  for (unsigned long mask = lo; mask < hi; ++mask) {
    std::vector<int> subset;
    for (int d = 0; d < m; ++d)
      if (mask & (1ul << d)) subset.push_back(d);
    auto cert = is_distinguished(cs, subset);
    if (cert) out.push_back({std::move(subset), std::move(*cert)});
  }
  return out;
}

}  // namespace

std::vector<DistinguishedSubset> enumerate_distinguished_serial(const ColorSet& cs,
                                                                int max_colors) {
  int m = (int)cs.colors.size();
  if (m > max_colors)
    throw bound_exceeded("card Delta = " + std::to_string(m) + " exceeds bound " +
                         std::to_string(max_colors));
  return scan_range(cs, 0, 1ul << m);
}

std::vector<DistinguishedSubset> enumerate_distinguished(const ColorSet& cs, int max_colors) {
  int m = (int)cs.colors.size();
  if (m > max_colors)
    throw bound_exceeded("card Delta = " + std::to_string(m) + " exceeds bound " +
                         std::to_string(max_colors));
  unsigned long total = 1ul << m;
#ifdef _OPENMP
  if (total >= 64) {
    int nchunks = omp_get_max_threads() * 16;  // popcount skew wants fine chunks
    unsigned long chunk = (total + nchunks - 1) / nchunks;
    std::vector<std::vector<DistinguishedSubset>> parts(nchunks);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < nchunks; ++k) {
      unsigned long lo = k * chunk;
      unsigned long hi = std::min(total, lo + chunk);
      if (lo < hi) parts[k] = scan_range(cs, lo, hi);
    }
    std::vector<DistinguishedSubset> out;
    for (auto& p : parts)
      for (auto& d : p) out.push_back(std::move(d));
    return out;
  }
#endif
  return scan_range(cs, 0, total);
}

std::vector<std::vector<int>> monoid_basis(const std::vector<std::vector<int>>& a, int r) {
  if (r == 0) return {};
  const int d = (int)a.size();
  auto image = [&](const std::vector<int>& x) {
    std::vector<long long> v(d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < r; ++j) v[i] += (long long)a[i][j] * x[j];
    return v;
  };
  auto is_zero = [](const std::vector<long long>& v) {
    for (auto x : v)
      if (x != 0) return false;
    return true;
  };

  std::vector<std::vector<int>> basis;
  auto dominated = [&](const std::vector<int>& x) {
    for (const auto& b : basis) {
      bool le = true;
      for (int j = 0; j < r && le; ++j) le = b[j] <= x[j];
      if (le) return true;
    }
    return false;
  };

  std::set<std::vector<int>> frontier;
  for (int j = 0; j < r; ++j) {
    std::vector<int> e(r, 0);
    e[j] = 1;
    frontier.insert(std::move(e));
  }
  size_t guard = 0;
  while (!frontier.empty()) {
    if (++guard > 100000) throw std::logic_error("monoid completion runaway");
    std::set<std::vector<int>> next;
    for (const auto& t : frontier) {
      auto v = image(t);
      if (is_zero(v)) {
        if (!dominated(t)) basis.push_back(t);
        continue;
      }
      for (int j = 0; j < r; ++j) {
        long long dot = 0;
        for (int i = 0; i < d; ++i) dot += v[i] * a[i][j];
        if (dot < 0) {
          std::vector<int> u(t);
          u[j] += 1;
          if (!dominated(u)) next.insert(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  // descending lex keeps the identity quotient's sigma in input order
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

namespace {

int height(const std::vector<int>& x) {
  int h = 0;
  for (int v : x) h += v;
  return h;
}

// number of ways to write x over the basis (multisets), capped at 2
int count_decompositions(const std::vector<int>& x, const std::vector<std::vector<int>>& basis,
                         size_t min_idx) {
  if (height(x) == 0) return 1;
  int total = 0;
  for (size_t k = min_idx; k < basis.size(); ++k) {
    bool le = true;
    for (size_t j = 0; j < x.size() && le; ++j) le = basis[k][j] <= x[j];
    if (!le) continue;
    std::vector<int> rest(x);
    for (size_t j = 0; j < x.size(); ++j) rest[j] -= basis[k][j];
    total += count_decompositions(rest, basis, k);
    if (total > 1) return total;
  }
  return total;
}

void enumerate_bounded(int r, int h, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn, int pos = 0) {
  if (pos == r) {
    fn(cur);
    return;
  }
  for (int v = 0; v <= h; ++v) {
    cur[pos] = v;
    enumerate_bounded(r, h - v, cur, fn, pos + 1);
  }
  cur[pos] = 0;
}

void assert_freeness(const std::vector<std::vector<int>>& a, int r,
                     const std::vector<std::vector<int>>& basis) {
  int hmax = 0;
  for (const auto& b : basis) hmax = std::max(hmax, height(b));
  int bound = 3 * hmax;
  std::vector<int> cur(r, 0);
  enumerate_bounded(r, bound, cur, [&](const std::vector<int>& x) {
    if (height(x) == 0) return;
    for (size_t i = 0; i < a.size(); ++i) {
      long long s = 0;
      for (int j = 0; j < r; ++j) s += (long long)a[i][j] * x[j];
      if (s != 0) return;
    }
    if (count_decompositions(x, basis, 0) != 1)
      throw std::logic_error("quotient monoid is not free (decomposition not unique)");
  });
}

}  // namespace

QuotientResult quotient_by(const SphericalSystem& sys, const ColorSet& cs,
                           std::span<const int> subset, const RankOneTable& table) {
  auto cert = is_distinguished(cs, subset);
  if (!cert) throw std::invalid_argument("subset of colors is not distinguished");

  const int n = sys.rs.rank();
  const int r = (int)sys.sigma.size();
  std::set<int> dset(subset.begin(), subset.end());

  std::vector<std::vector<int>> killed;
  for (int d : subset) killed.push_back(cs.c_full[d]);
  auto basis = monoid_basis(killed, r);
  if ((int)basis.size() > r) throw std::logic_error("monoid basis larger than card Sigma");
  assert_freeness(killed, r, basis);

  QuotientResult qr;
  qr.sigma_expansion = basis;

  SphericalSystem q;
  q.rs = sys.rs;
  for (const auto& x : basis) {
    Weight w(n, 0);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < n; ++i) w[i] += x[j] * sys.sigma[j][i];
    q.sigma.push_back(std::move(w));
  }
  for (int i = 0; i < n; ++i) {
    bool contained = true;
    for (int c : cs.delta_of[i]) contained = contained && dset.count(c);
    if (contained) q.sp.push_back(i);  // sp roots have empty delta_of, so stay
  }

  // A rows of the quotient: colors moved by a simple root that survives in
  // the new sigma, re-expressed through the expansions
  auto expand_row = [&](int color) {
    std::vector<int> row(basis.size());
    for (size_t jq = 0; jq < basis.size(); ++jq) {
      long long s = 0;
      for (int j = 0; j < r; ++j) s += (long long)basis[jq][j] * cs.c_full[color][j];
      row[jq] = (int)s;
    }
    return row;
  };
  std::vector<int> added;
  for (int i = 0; i < n; ++i) {
    Weight u(n, 0);
    u[i] = 1;
    if (std::find(q.sigma.begin(), q.sigma.end(), u) == q.sigma.end()) continue;
    for (int c : cs.delta_of[i]) {
      if (cs.colors[c].kind != Color::A) throw std::logic_error("simple new sigma without A pair");
      if (dset.count(c)) throw std::logic_error("killed color moved by surviving simple root");
      if (std::find(added.begin(), added.end(), c) == added.end()) added.push_back(c);
    }
  }
  std::sort(added.begin(), added.end());  // original row order, so Delta' = {} is the identity
  for (int c : added) q.a_rows.push_back({cs.colors[c].name, expand_row(c)});

  auto rep = validate(q, table);
  if (!rep.valid())
    throw std::logic_error("quotient fails validation:\n" + rep.summary());

  // match the surviving colors against the quotient's derived colors via
  // (pairing row, moved-by set) signatures
  ColorSet qcs = colors(q);
  struct Sig {
    std::vector<int> row;
    std::vector<int> roots;
    bool operator<(const Sig& o) const {
      if (row != o.row) return row < o.row;
      return roots < o.roots;
    }
  };
  auto sig_of_new = [&](int k) {
    Sig s;
    s.row = qcs.c_full[k];
    for (int i = 0; i < n; ++i)
      for (int c : qcs.delta_of[i])
        if (c == k) s.roots.push_back(i);
    return s;
  };
  auto sig_of_old = [&](int c) {
    Sig s;
    s.row = expand_row(c);
    for (int i = 0; i < n; ++i)
      for (int cc : cs.delta_of[i])
        if (cc == c) s.roots.push_back(i);
    return s;
  };
  std::map<Sig, std::vector<int>> new_by_sig;
  for (size_t k = 0; k < qcs.colors.size(); ++k) new_by_sig[sig_of_new((int)k)].push_back((int)k);
  for (size_t c = 0; c < cs.colors.size(); ++c) {
    if (dset.count((int)c)) continue;
    auto it = new_by_sig.find(sig_of_old((int)c));
    if (it == new_by_sig.end() || it->second.empty())
      throw std::logic_error("surviving color has no counterpart in the quotient");
    qr.surviving_colors.emplace_back((int)c, it->second.front());
    it->second.erase(it->second.begin());
  }
  for (auto& [sig, rem] : new_by_sig)
    if (!rem.empty()) throw std::logic_error("quotient color not reached by a survivor");

  qr.quotient = std::move(q);
  return qr;
}

QuotientClass classify_quotient(const SphericalSystem& sys, const ColorSet& cs,
                                std::span<const int> subset, const RankOneTable& table) {
  if (subset.empty()) throw std::invalid_argument("classify_quotient needs a nonempty subset");
  QuotientClass out;
  auto qr = quotient_by(sys, cs, subset, table);
  out.rank0 = qr.quotient.sigma.empty();

  out.essential = true;
  for (const auto& s : qr.quotient.sigma)
    if (std::find(sys.sigma.begin(), sys.sigma.end(), s) != sys.sigma.end()) out.essential = false;

  int dq = defect(qr.quotient), ds = defect(sys);
  out.defect_relation = dq > ds   ? DefectRelation::Higher
                        : dq == ds ? DefectRelation::Constant
                                   : DefectRelation::Lower;

  out.minimal = true;
  int k = (int)subset.size();
  for (unsigned long mask = 1; mask + 1 < (1ul << k) && out.minimal; ++mask) {
    std::vector<int> sub;
    for (int p = 0; p < k; ++p)
      if (mask & (1ul << p)) sub.push_back(subset[p]);
    if (is_distinguished(cs, sub)) out.minimal = false;
  }
  return out;
}

}  // namespace wonder
