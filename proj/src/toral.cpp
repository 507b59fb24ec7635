#include "eap/toral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace eap {

namespace {

uint64_t upow64(int b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= static_cast<uint64_t>(b);
  return r;
}

// Multiset as sorted packed codes, the comparison key everywhere here.
std::vector<uint32_t> packed_sorted(const WeightMultiset& W) {
  std::vector<uint32_t> out;
  out.reserve(W.weights.size());
  for (const auto& w : W.weights) out.push_back(fp_pack(w, W.p));
  std::sort(out.begin(), out.end());
  return out;
}

WeightMultiset from_packed(int p, int d, int n, std::vector<uint32_t> codes) {
  std::sort(codes.begin(), codes.end());
  WeightMultiset W;
  W.p = p;
  W.d = d;
  W.n = n;
  for (uint32_t c : codes) W.weights.push_back(fp_unpack(c, d, p));
  return W;
}

bool spans_affinely(const WeightMultiset& W) {
  if (W.d == 0) return true;
  std::vector<FpVec> diffs;
  for (size_t i = 1; i < W.weights.size(); ++i)
    diffs.push_back(fp_sub(W.weights[i], W.weights[0], W.p));
  return fp_rank(diffs, W.p) == W.d;
}

std::map<uint32_t, int> multiplicity_map(const WeightMultiset& W) {
  std::map<uint32_t, int> m;
  for (const auto& w : W.weights) ++m[fp_pack(w, W.p)];
  return m;
}

}  // namespace

WeightMultiset WeightMultiset::trivial(int p, int n) {
  WeightMultiset W;
  W.p = p;
  W.d = 0;
  W.n = n;
  W.weights.assign(n, FpVec{});
  return W;
}

std::string WeightMultiset::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i) os << ",";
    for (int j = 0; j < d; ++j) os << static_cast<int>(weights[i][j]);
    if (d == 0) os << "0";
  }
  os << "}";
  return os.str();
}

WeightMultiset canonical_form(const WeightMultiset& W) {
  if (W.d == 0) return WeightMultiset::trivial(W.p, W.n);
  if (!spans_affinely(W))
    throw RankDeficient("weight differences do not span the full rank");
  auto gl = enumerate_gl(W.d, W.p);

  std::vector<uint32_t> best;
  std::vector<uint32_t> cand(W.n);
  for (const auto& A : gl) {
    std::vector<FpVec> mapped(W.n);
    for (int i = 0; i < W.n; ++i) mapped[i] = fp_apply(A, W.weights[i]);
    // The least representative starts with the zero vector, so it is enough
    // to translate each mapped weight to the origin in turn.
    for (int i = 0; i < W.n; ++i) {
      for (int s = 0; s < W.n; ++s)
        cand[s] = fp_pack(fp_sub(mapped[s], mapped[i], W.p), W.p);
      std::sort(cand.begin(), cand.end());
      if (best.empty() || cand < best) best = cand;
    }
  }
  return from_packed(W.p, W.d, W.n, best);
}

namespace {

// Orbit sweep state for one rank: supports are bitmasks over the p^d points.
struct SupportOrbits {
  int p, d, npoints;
  std::vector<std::vector<int>> gen_perms;  // point permutations of AGL generators

  SupportOrbits(int p_, int d_) : p(p_), d(d_) {
    npoints = static_cast<int>(upow64(p, d));
    // AGL generators: GL generators plus basis translations.
    std::vector<FpMat> glgens;
    if (d >= 1 && p > 2) {
      FpMat s = FpMat::identity(p, d);
      // least primitive residue mod p
      int g = 2;
      for (; g < p; ++g) {
        int ord = 1, t = g;
        while (t != 1) {
          t = t * g % p;
          ++ord;
        }
        if (ord == p - 1) break;
      }
      s.at(0, 0) = static_cast<uint8_t>(g);
      glgens.push_back(s);
    }
    if (d >= 2) {
      FpMat cyc(p, d);
      for (int i = 0; i < d; ++i) cyc.at(i, (i + 1) % d) = 1;
      glgens.push_back(cyc);
      FpMat tv = FpMat::identity(p, d);
      tv.at(0, 1) = 1;
      glgens.push_back(tv);
    }
    for (const auto& A : glgens) {
      std::vector<int> perm(npoints);
      for (int c = 0; c < npoints; ++c)
        perm[c] = static_cast<int>(fp_pack(fp_apply(A, fp_unpack(c, d, p)), p));
      gen_perms.push_back(std::move(perm));
    }
    for (int j = 0; j < d; ++j) {
      FpVec e(d, 0);
      e[j] = 1;
      std::vector<int> perm(npoints);
      for (int c = 0; c < npoints; ++c)
        perm[c] = static_cast<int>(fp_pack(fp_add(fp_unpack(c, d, p), e, p), p));
      gen_perms.push_back(std::move(perm));
    }
  }

  uint64_t apply(const std::vector<int>& perm, uint64_t mask) const {
    uint64_t out = 0;
    while (mask) {
      int b = __builtin_ctzll(mask);
      mask &= mask - 1;
      out |= 1ull << perm[b];
    }
    return out;
  }
};

// Compositions of n into k positive parts.
void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 1 || n < k) return;
  std::vector<int> parts(k);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == k - 1) {
      parts[pos] = remaining;
      fn(parts);
      return;
    }
    for (int v = 1; v <= remaining - (k - pos - 1); ++v) {
      parts[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, n);
}

}  // namespace

std::vector<WeightMultiset> enumerate_toral_classes(int n, int p, int d_max) {
  if (d_max > n - 1) throw InvalidConfig("rank bound exceeds n-1");
  std::vector<WeightMultiset> out;
  for (int d = 1; d <= d_max; ++d) {
    uint64_t npoints = upow64(p, d);
    if (npoints > 27 || n > 16)
      throw CapacityExceeded("toral enumeration envelope is p^d <= 27, n <= 16");
    auto gl = enumerate_gl(d, p);
    SupportOrbits so(p, d);
    int pts = static_cast<int>(npoints);

    std::vector<bool> visited(1ull << pts, false);
    // k-subset masks containing the minimum unseen point, all k
    for (int k = d + 1; k <= std::min(n, pts); ++k) {
      // enumerate k-subsets of {0..pts-1} as masks via combinations
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        uint64_t mask = 0;
        for (int v : idx) mask |= 1ull << v;
        if (!visited[mask]) {
          // sweep the orbit
          std::vector<uint64_t> frontier{mask};
          visited[mask] = true;
          std::vector<uint64_t> orbit{mask};
          while (!frontier.empty()) {
            uint64_t m = frontier.back();
            frontier.pop_back();
            for (const auto& perm : so.gen_perms) {
              uint64_t im = so.apply(perm, m);
              if (!visited[im]) {
                visited[im] = true;
                frontier.push_back(im);
                orbit.push_back(im);
              }
            }
          }
          // affine span check on the representative
          std::vector<FpVec> ptsvec;
          for (int b = 0; b < pts; ++b)
            if (mask >> b & 1) ptsvec.push_back(fp_unpack(b, d, p));
          std::vector<FpVec> diffs;
          for (size_t i = 1; i < ptsvec.size(); ++i)
            diffs.push_back(fp_sub(ptsvec[i], ptsvec[0], p));
          if (fp_rank(diffs, p) != d) goto next_subset;

          {
            // set stabilizer of the support as permutations of its points
            std::vector<int> support;
            for (int b = 0; b < pts; ++b)
              if (mask >> b & 1) support.push_back(b);
            std::vector<int> pos(pts, -1);
            for (int i = 0; i < k; ++i) pos[support[i]] = i;

            std::vector<std::vector<int>> stab;
            FpVec vv(d);
            for (const auto& A : gl) {
              std::vector<int> imgpt(k);
              for (int i = 0; i < k; ++i)
                imgpt[i] = static_cast<int>(fp_pack(fp_apply(A, fp_unpack(support[i], d, p)), p));
              for (uint32_t vc = 0; vc < npoints; ++vc) {
                FpVec v = fp_unpack(vc, d, p);
                std::vector<int> permk(k);
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) {
                  FpVec im = fp_add(fp_unpack(imgpt[i], d, p), v, p);
                  int target = pos[fp_pack(im, p)];
                  if (target < 0)
                    ok = false;
                  else
                    permk[i] = target;
                }
                if (ok) stab.push_back(permk);
              }
            }

            // multiplicity assignments up to the stabilizer action
            std::vector<std::vector<int>> seen;
            for_each_composition(n, k, [&](const std::vector<int>& comp) {
              std::vector<int> best = comp;
              std::vector<int> img(k);
              for (const auto& perm : stab) {
                for (int i = 0; i < k; ++i) img[perm[i]] = comp[i];
                if (img < best) best = img;
              }
              if (best == comp) {
                WeightMultiset W;
                W.p = p;
                W.d = d;
                W.n = n;
                for (int i = 0; i < k; ++i)
                  for (int c = 0; c < comp[i]; ++c)
                    W.weights.push_back(fp_unpack(support[i], d, p));
                out.push_back(canonical_form(W));
              }
            });
          }
        }
      next_subset:
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == pts - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const WeightMultiset& a, const WeightMultiset& b) {
              if (a.d != b.d) return a.d < b.d;
              return a.weights < b.weights;
            });
  return out;
}

std::vector<FpVec> translation_stabilizer(const WeightMultiset& W) {
  std::vector<FpVec> out;
  if (W.d == 0) {
    out.push_back(FpVec{});
    return out;
  }
  auto base = packed_sorted(W);
  uint64_t npoints = upow64(W.p, W.d);
  std::vector<uint32_t> shifted(W.n);
  for (uint32_t vc = 0; vc < npoints; ++vc) {
    FpVec v = fp_unpack(vc, W.d, W.p);
    for (int i = 0; i < W.n; ++i)
      shifted[i] = fp_pack(fp_add(W.weights[i], v, W.p), W.p);
    std::sort(shifted.begin(), shifted.end());
    if (shifted == base) out.push_back(v);
  }
  return out;
}

ToralDecomposition decompose_disconnected(const WeightMultiset& W) {
  auto V = translation_stabilizer(W);
  int r1 = fp_rank(V, W.p);
  if (r1 == 0) throw NotDisconnected("translation stabilizer is trivial");

  // Coordinate change mapping a basis of the stabilizer onto the leading
  // coordinates; quotient coordinates are the trailing d-r1 after it.
  std::vector<FpVec> basis;
  for (const auto& v : V) {
    auto probe = basis;
    probe.push_back(v);
    if (fp_rank(probe, W.p) > static_cast<int>(basis.size())) basis.push_back(v);
    if (static_cast<int>(basis.size()) == r1) break;
  }
  uint64_t npoints = upow64(W.p, W.d);
  for (uint32_t c = 0; c < npoints && static_cast<int>(basis.size()) < W.d; ++c) {
    FpVec v = fp_unpack(c, W.d, W.p);
    auto probe = basis;
    probe.push_back(v);
    if (fp_rank(probe, W.p) > static_cast<int>(basis.size())) basis.push_back(v);
  }
  FpMat B(W.p, W.d);
  for (int j = 0; j < W.d; ++j)
    for (int i = 0; i < W.d; ++i) B.at(i, j) = basis[j][i];
  FpMat Binv = fp_inv(B);

  // In the new coordinates the multiset is constant on stabilizer cosets;
  // project onto the quotient part and divide out the coset size.
  std::map<uint32_t, int> quot;
  for (const auto& w : W.weights) {
    FpVec t = fp_apply(Binv, w);
    FpVec y(t.begin() + r1, t.end());
    ++quot[fp_pack(y, W.p)];
  }
  uint64_t block = upow64(W.p, r1);
  WeightMultiset H;
  H.p = W.p;
  H.d = W.d - r1;
  H.n = static_cast<int>(W.n / block);
  for (auto [code, mult] : quot) {
    if (mult % block != 0)
      throw Error("translation block does not divide fibers evenly");
    for (uint64_t c = 0; c < static_cast<uint64_t>(mult) / block; ++c)
      H.weights.push_back(fp_unpack(code, H.d, W.p));
  }
  WeightMultiset Hc = H.d == 0 ? WeightMultiset::trivial(W.p, H.n) : canonical_form(H);

  // Verify: the translation block times the residue recanonicalizes to W.
  WeightMultiset prod;
  prod.p = W.p;
  prod.d = W.d;
  prod.n = W.n;
  for (uint64_t x = 0; x < block; ++x) {
    FpVec xv = fp_unpack(static_cast<uint32_t>(x), r1, W.p);
    for (const auto& y : Hc.weights) {
      FpVec w(W.d);
      for (int i = 0; i < r1; ++i) w[i] = xv[i];
      for (int i = 0; i < W.d - r1; ++i) w[r1 + i] = y[i];
      prod.weights.push_back(w);
    }
  }
  if (!(canonical_form(prod) == canonical_form(W)))
    throw Error("translation-block decomposition failed to reproduce the class");

  ToralDecomposition dec;
  dec.r1 = r1;
  dec.rest = Hc;
  return dec;
}

AffineSymmetryGroup affine_symmetries(const WeightMultiset& W) {
  AffineSymmetryGroup G;
  G.p = W.p;
  G.d = W.d;
  if (W.d == 0) {
    G.elements.push_back({FpMat(W.p, 0), FpVec{}});
    return G;
  }
  auto gl = enumerate_gl(W.d, W.p);
  auto base = packed_sorted(W);
  uint64_t npoints = upow64(W.p, W.d);
  std::vector<uint32_t> mapped(W.n), cand(W.n);
  for (const auto& A : gl) {
    for (int i = 0; i < W.n; ++i)
      mapped[i] = fp_pack(fp_apply(A, W.weights[i]), W.p);
    for (uint32_t vc = 0; vc < npoints; ++vc) {
      FpVec v = fp_unpack(vc, W.d, W.p);
      for (int i = 0; i < W.n; ++i) {
        FpVec t = fp_add(fp_unpack(mapped[i], W.d, W.p), v, W.p);
        cand[i] = fp_pack(t, W.p);
      }
      std::sort(cand.begin(), cand.end());
      if (cand == base) G.elements.push_back({A, v});
    }
  }
  return G;
}

felem form_compatible_root(const GroupSpec& spec, int p) {
  const Field* F = spec.mat_field.get();
  if (spec.form == GroupForm::linear) {
    return F->root_of_unity(p);  // throws NoSuchRoot if p does not divide q-1
  }
  if ((spec.q + 1) % p != 0)
    throw NoSuchRoot("no norm-one eigenvalue of order p: p does not divide q+1");
  // Element of order p inside the norm-one subgroup of GF(q^2).
  int64_t q2 = F->q();
  felem g = F->generator();
  return F->pow(g, (q2 - 1) / (spec.q + 1) * ((spec.q + 1) / p));
}

std::vector<ProjMat> realize_in_group(const WeightMultiset& W, const GroupSpec& spec) {
  if (W.n != spec.n) throw InvalidConfig("slot count does not match group dimension");
  const Field* F = spec.mat_field.get();
  felem beta = form_compatible_root(spec, W.p);
  std::vector<ProjMat> out;
  for (int j = 0; j < W.d; ++j) {
    std::vector<felem> diag(W.n);
    for (int i = 0; i < W.n; ++i) diag[i] = F->pow(beta, W.weights[i][j]);
    out.push_back(proj_normalize(Mat::diagonal(F, diag)));
  }
  return out;
}

}  // namespace eap
