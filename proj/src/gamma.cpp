#include "eap/gamma.hpp"

namespace eap {

namespace {
int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

std::vector<int> sigma_perm(int p, int r, int s) {
  if (s < 0 || s > r - 1) throw IndexOutOfRange("sigma index s must lie in 0..r-1");
  int n = ipow(p, r);
  int ps = ipow(p, s);
  int ps1 = ps * p;
  std::vector<int> sigma(n + 1, 0);  // 1-based
  for (int i = 1; i <= n; ++i) {
    int m = ((i - 1) % ps1) + 1;
    sigma[i] = m <= (p - 1) * ps ? i + ps : i - (p - 1) * ps;
  }
  return sigma;
}

Mat a_matrix(const Field* F, int p, int r, int s, felem beta) {
  if (beta == F->one() || F->pow(beta, p) != F->one())
    throw BadRoot("beta must be a primitive p-th root of unity");
  int n = ipow(p, r);
  int ps = ipow(p, s);
  Mat A(F, n);
  for (int i = 1; i <= n; ++i) A.at(i - 1, i - 1) = F->pow(beta, ((i - 1) / ps) % p);
  return A;
}

Mat b_matrix(const Field* F, int p, int r, int s) {
  auto sigma = sigma_perm(p, r, s);
  int n = ipow(p, r);
  Mat B(F, n);
  for (int i = 1; i <= n; ++i) B.at(i - 1, sigma[i] - 1) = F->one();
  return B;
}

GammaGens gamma_generators(int p, int r, int k, const FieldPtr& F) {
  GammaGens g;
  g.p = p;
  g.r = r;
  g.k = k;
  g.field = F;
  g.beta = F->root_of_unity(p);
  for (int s = 0; s < r; ++s) {
    g.a_list.push_back(proj_normalize(block_diag(a_matrix(F.get(), p, r, s, g.beta), k)));
    g.b_list.push_back(proj_normalize(block_diag(b_matrix(F.get(), p, r, s), k)));
  }
  return g;
}

bool check_relations(const GammaGens& g) {
  const Field* F = g.field.get();
  auto commutator = [](const Mat& X, const Mat& Y) {
    return mat_mul(mat_mul(X, Y), mat_mul(mat_inv(X), mat_inv(Y)));
  };
  int n = g.a_list.empty() ? 0 : g.a_list[0].m.n;
  Mat I = Mat::identity(F, n);
  Mat betaI = mat_scale(I, g.beta);
  for (int t = 0; t < g.r; ++t) {
    for (int s = 0; s < g.r; ++s) {
      if (!(commutator(g.a_list[t].m, g.a_list[s].m) == I)) return false;
      if (!(commutator(g.b_list[t].m, g.b_list[s].m) == I)) return false;
      Mat c = commutator(g.b_list[t].m, g.a_list[s].m);
      if (t == s) {
        if (!(c == betaI)) return false;
      } else {
        if (!(c == I)) return false;
      }
    }
  }
  return true;
}

std::vector<ProjMat> toral_generators(const Field* F, int p, int d, int n_slots,
                                      felem beta) {
  if (d > n_slots - 1)
    throw InvalidConfig("toral rank exceeds slot count - 1");
  if (beta == F->one() || F->pow(beta, p) != F->one())
    throw BadRoot("beta must be a primitive p-th root of unity");
  std::vector<ProjMat> gens;
  for (int i = 0; i < d; ++i) {
    std::vector<felem> diag(n_slots, F->one());
    diag[i] = beta;
    gens.push_back(proj_normalize(Mat::diagonal(F, diag)));
  }
  return gens;
}

XYGens xy_generators(int p, int r, int m, const FieldPtr& F) {
  if (m < 1 || r < 1) throw InvalidConfig("xy generators need m >= 1, r >= 1");
  felem beta = F->root_of_unity(p);
  int pr = ipow(p, r);
  int k = m + 1;
  XYGens out;
  out.p = p;
  out.r = r;
  out.m = m;
  out.x.resize(m);
  out.y.resize(m);

  // Slot-local action: the level-(j-1) permutation generator twists the
  // level-(j-1) diagonal one by the slot character, and the diagonal one
  // twists the permutation one by its inverse. For p = 2 the product does
  // both at once, matching the required conjugation table.
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= r; ++j) {
      Mat a = a_matrix(F.get(), p, r, j - 1, beta);
      Mat b = b_matrix(F.get(), p, r, j - 1);
      Mat xblock = p == 2 ? mat_mul(b, a) : b;
      Mat yblock = a;

      Mat X(F.get(), pr * k), Y(F.get(), pr * k);
      for (int slot = 0; slot < k; ++slot) {
        const Mat& bx = slot == i - 1 ? xblock : Mat::identity(F.get(), pr);
        const Mat& by = slot == i - 1 ? yblock : Mat::identity(F.get(), pr);
        for (int a1 = 0; a1 < pr; ++a1)
          for (int a2 = 0; a2 < pr; ++a2) {
            X.at(slot * pr + a1, slot * pr + a2) = bx.at(a1, a2);
            Y.at(slot * pr + a1, slot * pr + a2) = by.at(a1, a2);
          }
      }
      out.x[i - 1].push_back(proj_normalize(X));
      out.y[i - 1].push_back(proj_normalize(Y));
    }
  }
  return out;
}

}  // namespace eap
