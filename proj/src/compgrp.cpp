#include "eap/compgrp.hpp"

#include <algorithm>
#include <unordered_set>

namespace eap {

int symp_form(const FpVec& u, const FpVec& v, int p) {
  int r = static_cast<int>(u.size()) / 2;
  int s = 0;
  for (int i = 0; i < r; ++i)
    s += u[2 * i] * v[2 * i + 1] + (p - 1) * u[2 * i + 1] * v[2 * i];
  return s % p;
}

int quad_form(const FpVec& v, int sign) {
  int r = static_cast<int>(v.size()) / 2;
  int s = 0;
  for (int i = 0; i < r; ++i) s ^= v[2 * i] & v[2 * i + 1];
  if (sign < 0) s ^= (v[2 * r - 2] & v[2 * r - 2]) ^ (v[2 * r - 1] & v[2 * r - 1]);
  return s & 1;
}

namespace {

FpMat transvection(int p, const FpVec& v, int lambda) {
  int n = static_cast<int>(v.size());
  FpMat M = FpMat::identity(p, n);
  for (int j = 0; j < n; ++j) {
    FpVec ej(n, 0);
    ej[j] = 1;
    int c = lambda * symp_form(ej, v, p) % p;
    if (c == 0) continue;
    for (int i = 0; i < n; ++i)
      M.at(i, j) = static_cast<uint8_t>((M.at(i, j) + c * v[i]) % p);
  }
  return M;
}

FpMat pair_swap(int p, int r, int i, int j) {
  FpMat M(p, 2 * r);
  for (int k = 0; k < 2 * r; ++k) M.at(k, k) = 1;
  M.at(2 * i, 2 * i) = M.at(2 * i + 1, 2 * i + 1) = 0;
  M.at(2 * j, 2 * j) = M.at(2 * j + 1, 2 * j + 1) = 0;
  M.at(2 * i, 2 * j) = M.at(2 * i + 1, 2 * j + 1) = 1;
  M.at(2 * j, 2 * i) = M.at(2 * j + 1, 2 * i + 1) = 1;
  return M;
}

uint64_t pack_mat(const FpMat& m) {
  int bits = 1;
  while ((1 << bits) < m.p) ++bits;
  if (bits * m.n * m.n > 64) throw CapExceeded("matrix does not pack into 64 bits");
  uint64_t code = 0;
  for (size_t i = m.a.size(); i-- > 0;) code = (code << bits) | m.a[i];
  return code;
}

}  // namespace

std::vector<FpMat> sp_generators(int r, int p) {
  if (r < 1) throw InvalidConfig("symplectic rank must be >= 1");
  int n = 2 * r;
  uint64_t npts = 1;
  for (int i = 0; i < n; ++i) npts *= static_cast<uint64_t>(p);
  std::vector<FpMat> gens;
  for (uint64_t c = 1; c < npts; ++c) {
    FpVec v = fp_unpack(static_cast<uint32_t>(c), n, p);
    for (int lambda = 1; lambda < p; ++lambda)
      gens.push_back(transvection(p, v, lambda));
  }
  return gens;
}

std::vector<FpMat> so_generators(int r, int sign) {
  if (r < 1) throw InvalidConfig("orthogonal rank must be >= 1");
  if (sign != 1 && sign != -1) throw InvalidConfig("form type must be +1 or -1");
  int n = 2 * r;
  std::vector<FpMat> gens;
  for (uint32_t c = 1; c < (1u << n); ++c) {
    FpVec v = fp_unpack(c, n, 2);
    if (quad_form(v, sign) == 1) gens.push_back(transvection(2, v, 1));
  }
  int hyp = sign > 0 ? r : r - 1;  // pairs that may be permuted freely
  for (int i = 0; i + 1 < hyp; ++i) gens.push_back(pair_swap(2, r, i, i + 1));
  return gens;
}

std::vector<FpMat> fp_group_closure(const std::vector<FpMat>& gens, uint64_t cap) {
  if (gens.empty()) return {};
  int p = gens[0].p, n = gens[0].n;
  std::vector<FpMat> elems;
  std::unordered_set<uint64_t> seen;
  elems.push_back(FpMat::identity(p, n));
  seen.insert(pack_mat(elems[0]));

  if (p == 2 && n <= 8) {
    // rows as bitmasks for the million-scale binary closures
    auto rowpack = [n](const FpMat& m) {
      uint64_t code = 0;
      for (int i = 0; i < n; ++i) {
        uint64_t row = 0;
        for (int j = 0; j < n; ++j) row |= static_cast<uint64_t>(m.at(i, j)) << j;
        code |= row << (8 * i);
      }
      return code;
    };
    std::vector<uint64_t> gcodes;
    for (const auto& g : gens) gcodes.push_back(rowpack(g));
    std::sort(gcodes.begin(), gcodes.end());
    gcodes.erase(std::unique(gcodes.begin(), gcodes.end()), gcodes.end());

    std::vector<uint64_t> pool{rowpack(elems[0])};
    std::unordered_set<uint64_t> seen2(pool.begin(), pool.end());
    size_t head = 0;
    while (head < pool.size()) {
      uint64_t a = pool[head++];
      for (uint64_t b : gcodes) {
        uint64_t c = 0;
        for (int i = 0; i < n; ++i) {
          uint64_t arow = (a >> (8 * i)) & 0xff;
          uint64_t crow = 0;
          while (arow) {
            int k = __builtin_ctzll(arow);
            arow &= arow - 1;
            crow ^= (b >> (8 * k)) & 0xff;
          }
          c |= crow << (8 * i);
        }
        if (seen2.insert(c).second) {
          if (pool.size() >= cap) throw CapExceeded("group closure exceeds cap");
          pool.push_back(c);
        }
      }
    }
    std::vector<FpMat> out;
    out.reserve(pool.size());
    for (uint64_t code : pool) {
      FpMat m(p, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m.at(i, j) = static_cast<uint8_t>((code >> (8 * i + j)) & 1);
      out.push_back(std::move(m));
    }
    return out;
  }

  size_t head = 0;
  while (head < elems.size()) {
    FpMat a = elems[head++];
    for (const auto& g : gens) {
      FpMat c = fp_mul(a, g);
      if (seen.insert(pack_mat(c)).second) {
        if (elems.size() >= cap) throw CapExceeded("group closure exceeds cap");
        elems.push_back(std::move(c));
      }
    }
  }
  return elems;
}

uint64_t fp_group_closure_order(const std::vector<FpMat>& gens, uint64_t cap) {
  return fp_group_closure(gens, cap).size();
}

std::vector<FpMat> filter_sp_by_form(int r, int sign) {
  if (r > 3) throw CapacityExceeded("form filtering supported for r <= 3");
  auto sp = fp_group_closure(sp_generators(r, 2), 2'000'000);
  int n = 2 * r;
  std::vector<FpMat> out;
  for (const auto& g : sp) {
    bool ok = true;
    // Q(g e_j) = Q(e_j) on a basis suffices once the symplectic form (the
    // polarization) is preserved.
    for (int j = 0; j < n && ok; ++j) {
      FpVec col(n);
      for (int i = 0; i < n; ++i) col[i] = g.at(i, j);
      FpVec ej(n, 0);
      ej[j] = 1;
      ok = quad_form(col, sign) == quad_form(ej, sign);
    }
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<uint32_t>> quadratic_form_orbits(int r, int sign) {
  int n = 2 * r;
  auto gens = so_generators(r, sign);
  uint32_t npts = 1u << n;
  std::vector<int> orbit_of(npts, -1);
  std::vector<std::vector<uint32_t>> orbits;
  for (uint32_t s = 0; s < npts; ++s) {
    if (orbit_of[s] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<uint32_t> orb{s};
    orbit_of[s] = id;
    for (size_t head = 0; head < orb.size(); ++head) {
      FpVec v = fp_unpack(orb[head], n, 2);
      for (const auto& g : gens) {
        uint32_t im = fp_pack(fp_apply(g, v), 2);
        if (orbit_of[im] < 0) {
          orbit_of[im] = id;
          orb.push_back(im);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<AffineGen> fusion_shears(int p, int r, int r1) {
  if (r < 1 || r1 < 1) throw InvalidConfig("shears need r >= 1 and r1 >= 1");
  int dim = 2 * r + r1;
  std::vector<AffineGen> out;
  for (int j = 0; j < r1; ++j) {
    FpMat A = FpMat::identity(p, dim);
    A.at(0, 2 * r + j) = static_cast<uint8_t>(p == 2 ? 1 : p - 1);
    out.push_back({A, FpVec(dim, 0)});
  }
  return out;
}

ActionSpace build_action_space(int p, int r, int r1, bool so_twist) {
  ActionSpace sp;
  sp.p = p;
  sp.r = r;
  sp.r1 = r1;
  int dim = 2 * r + r1;
  auto embed_x = [&](const FpMat& M) {
    FpMat A = FpMat::identity(p, dim);
    for (int i = 0; i < 2 * r; ++i)
      for (int j = 0; j < 2 * r; ++j) A.at(i, j) = M.at(i, j);
    return A;
  };
  auto embed_b = [&](const FpMat& M) {
    FpMat A = FpMat::identity(p, dim);
    for (int i = 0; i < r1; ++i)
      for (int j = 0; j < r1; ++j) A.at(2 * r + i, 2 * r + j) = M.at(i, j);
    return A;
  };

  if (r >= 1) {
    if (!so_twist) {
      for (const auto& g : sp_generators(r, p))
        sp.gens.push_back({embed_x(g), FpVec(dim, 0)});
    } else {
      if (p != 2) throw InvalidConfig("orthogonal twist only arises for p = 2");
      for (const auto& g : so_generators(r, +1))
        sp.gens.push_back({embed_x(g), FpVec(dim, 0)});
      // One affine representative outside the form stabilizer: transvection
      // along a singular vector, translating by that vector. Such maps
      // preserve the hyperbolic form values, and the classes become its
      // level sets.
      FpVec w(2 * r, 0);
      w[0] = 1;  // lone first coordinate: singular
      FpMat tw = embed_x(transvection(2, w, 1));
      FpVec trans(dim, 0);
      trans[0] = 1;
      sp.gens.push_back({tw, trans});
    }
  }
  if (r1 >= 1) {
    for (const auto& g : enumerate_gl(r1, p)) sp.gens.push_back({embed_b(g), FpVec(dim, 0)});
    if (r >= 1)
      for (const auto& s : fusion_shears(p, r, r1)) sp.gens.push_back(s);
  }
  return sp;
}

std::vector<OrbitClass> f_twisted_classes(const ActionSpace& space) {
  int dim = space.dim();
  uint64_t npts = 1;
  for (int i = 0; i < dim; ++i) {
    npts *= static_cast<uint64_t>(space.p);
    if (npts > 1'000'000) throw CapacityExceeded("component-group space exceeds 10^6 points");
  }
  std::vector<int> cls(npts, -1);
  std::vector<OrbitClass> out;
  for (uint32_t s = 0; s < npts; ++s) {
    if (cls[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<uint32_t> orb{s};
    cls[s] = id;
    for (size_t head = 0; head < orb.size(); ++head) {
      FpVec v = fp_unpack(orb[head], dim, space.p);
      for (const auto& g : space.gens) {
        FpVec im = fp_add(fp_apply(g.A, v), g.t, space.p);
        uint32_t code = fp_pack(im, space.p);
        if (cls[code] < 0) {
          cls[code] = id;
          orb.push_back(code);
        }
      }
    }
    out.push_back({fp_unpack(s, dim, space.p), orb.size()});
  }
  return out;
}

}  // namespace eap
