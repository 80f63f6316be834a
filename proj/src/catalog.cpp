#include "wqh/catalog.hpp"

#include <functional>

namespace wqh {

namespace {

Matrix one(const Scalar& s) { return Matrix::scalar(s); }

// Brute-force theta among 4n-th roots of unity satisfying the ribbon relations.
std::vector<Scalar> solve_theta_impl(const CategoryData& cat, long order) {
  const int r = cat.rank();
  std::vector<Scalar> theta(r);
  theta[0] = 1;
  std::vector<int> assigned(r, 0);
  assigned[0] = 1;
  std::function<bool(int)> rec = [&](int a) -> bool {
    if (a == r) return true;
    for (long k = 0; k < order; ++k) {
      theta[a] = Scalar::root_of_unity(order, k);
      assigned[a] = 1;
      bool ok = true;
      for (int b = 0; b <= a && ok; ++b) {
        int d = cat.ring.dual(b);
        if (assigned[d] && !(theta[b] == theta[d])) ok = false;
        for (int x = 0; x <= a && ok; ++x)
          for (int c : cat.ring.channels(b, x)) {
            if (!assigned[c]) continue;
            Scalar lhs = cat.rmatrix(x, b, c)(0, 0) * cat.rmatrix(b, x, c)(0, 0);
            if (!(lhs == theta[b] * theta[x] / theta[c])) {
              ok = false;
              break;
            }
          }
      }
      if (ok && rec(a + 1)) return true;
      assigned[a] = 0;
    }
    return false;
  };
  if (!rec(1)) throw MathError("no twist among roots of unity of order " + std::to_string(order));
  return theta;
}

}  // namespace

std::vector<Scalar> ribbon_twists(const CategoryData& cat, long order) { return solve_theta_impl(cat, order); }

Scalar golden_ratio() {
  Scalar z = Scalar::root_of_unity(5, 1);
  // sqrt5 = z + z^4 - z^2 - z^3
  Scalar s5 = z + Scalar::root_of_unity(5, 4) - Scalar::root_of_unity(5, 2) - Scalar::root_of_unity(5, 3);
  return (Scalar(1) + s5) / Scalar(2);
}

Scalar sqrt2() { return Scalar::root_of_unity(8, 1) + Scalar::root_of_unity(8, 7); }

CategoryData vec_zn_data(int n, int q) {
  if (n < 1) throw InputError("vec_zn needs n >= 1");
  CategoryData cat;
  cat.name = "vec_zn(" + std::to_string(n) + "," + std::to_string(q) + ")";
  cat.ring = zn_ring(n);
  auto wrap = [n](long x, long y) -> long { return x + y >= n ? 1 : 0; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long ab = static_cast<long>(q) * a * b;
      // odd n: exp(pi i q a b / n) is not a bicharacter, use the well-defined half (n+1)/2
      Scalar r = n % 2 == 0 ? Scalar::root_of_unity(2L * n, ab) : Scalar::root_of_unity(n, ab * ((n + 1) / 2));
      cat.R[{a, b, (a + b) % n}] = one(r);
      for (int c = 0; c < n; ++c) {
        // even n: the standard abelian cocycle; odd n: coboundary of g(a,b) = (-1)^{q a b}
        long e = n % 2 == 0 ? q * a * wrap(b, c) : q * (a * wrap(b, c) + c * wrap(a, b));
        cat.F[{a, b, c, (a + b + c) % n}] = one(Scalar(e % 2 == 0 ? 1 : -1));
      }
    }
  cat.theta = solve_theta_impl(cat, 4L * n);
  return cat;
}

CategoryData svec_data() {
  CategoryData cat;
  cat.name = "svec";
  cat.ring = FusionRing({"1", "psi"}, {0, 1});
  cat.ring.set_N(0, 0, 0, 1);
  cat.ring.set_N(0, 1, 1, 1);
  cat.ring.set_N(1, 0, 1, 1);
  cat.ring.set_N(1, 1, 0, 1);
  cat.R[{1, 1, 0}] = one(Scalar(-1));
  cat.theta = {Scalar(1), Scalar(1)};
  cat.fill_defaults();
  return cat;
}

CategoryData fibonacci_data() {
  CategoryData cat;
  cat.name = "fibonacci";
  cat.ring = fibonacci_ring();
  Scalar phi = golden_ratio();
  Scalar inv = phi.inverse();
  // rows e in {1, tau}, columns f in {1, tau}
  cat.F[{1, 1, 1, 1}] = Matrix::from_rows({{inv, Scalar(1)}, {inv, -inv}});
  cat.R[{1, 1, 0}] = one(Scalar::root_of_unity(5, 3));
  cat.R[{1, 1, 1}] = one(-Scalar::root_of_unity(5, 4));
  cat.theta = {Scalar(1), Scalar::root_of_unity(5, 3)};
  cat.fill_defaults();
  return cat;
}

CategoryData ising_data() {
  CategoryData cat;
  cat.name = "ising";
  cat.ring = ising_ring();
  Scalar h = sqrt2().inverse();
  cat.F[{1, 1, 1, 1}] = Matrix::from_rows({{h, h}, {h, -h}});
  cat.F[{1, 2, 1, 2}] = one(Scalar(-1));
  cat.F[{2, 1, 2, 1}] = one(Scalar(-1));
  cat.R[{1, 1, 0}] = one(Scalar::root_of_unity(16, 15));
  cat.R[{1, 1, 2}] = one(Scalar::root_of_unity(16, 3));
  cat.R[{1, 2, 1}] = one(Scalar::root_of_unity(4, 3));
  cat.R[{2, 1, 1}] = one(Scalar::root_of_unity(4, 3));
  cat.R[{2, 2, 0}] = one(Scalar(-1));
  cat.theta = {Scalar(1), Scalar::root_of_unity(16, 15), Scalar(-1)};
  cat.fill_defaults();
  return cat;
}

Report certify(const CategoryData& cat, const Tolerance& tol) {
  Report rep = verify_fusion_ring(cat.ring);
  rep.merge(verify_pentagon(cat, tol));
  rep.merge(verify_hexagons(cat, tol));
  rep.merge(verify_snakes(cat, tol));
  rep.merge(verify_ribbon(cat, tol));
  return rep;
}

std::vector<std::string> builtin_names() { return {"vec_zn", "svec", "fibonacci", "ising"}; }

CatalogEntry builtin(const std::string& name, int n, int q) {
  CatalogEntry e;
  e.name = name;
  if (name == "vec_zn") {
    e.data = vec_zn_data(n, q);
    e.name = e.data.name;
    e.provenance = "closed-form abelian 3-cocycle with quadratic braiding";
    e.expected_dimensions.assign(n, Scalar(1));
  } else if (name == "svec") {
    e.data = svec_data();
    e.provenance = "Z/2 with R(psi,psi) = -1 and trivial twist";
    e.expected_dimensions = {Scalar(1), Scalar(-1)};
  } else if (name == "fibonacci") {
    e.data = fibonacci_data();
    e.provenance = "pentagon/hexagon solution in the gauge F^{ttt}_t(1,tau) = 1";
    e.expected_dimensions = {Scalar(1), golden_ratio()};
  } else if (name == "ising") {
    e.data = ising_data();
    e.provenance = "pentagon/hexagon solution over Q(zeta_16)";
    e.expected_dimensions = {Scalar(1), sqrt2(), Scalar(1)};
  } else {
    throw InputError("unknown builtin '" + name + "'");
  }
  e.expected_twists = e.data.theta;
  e.data.fill_defaults();
  e.certificate = certify(e.data);
  if (!e.certificate.ok()) throw MathError("builtin " + e.name + " failed certification:\n" + e.certificate.human());
  return e;
}

}  // namespace wqh
