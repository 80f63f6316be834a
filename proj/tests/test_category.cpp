#include <algorithm>
#include <doctest.h>

#include <random>

#include "wqh/catalog.hpp"

using namespace wqh;

namespace {

Morphism random_morphism(const CategoryData& cat, const Word& dom, const Word& cod, std::mt19937& rng) {
  Morphism m = zero_morphism(cat, dom, cod);
  for (auto& b : m.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = static_cast<long>(rng() % 5) - 2;
  return m;
}

Word random_word(int rank, int max_leaves, std::mt19937& rng) {
  int n = 1 + static_cast<int>(rng() % max_leaves);
  std::vector<Word> parts;
  for (int i = 0; i < n; ++i) parts.push_back(Word::leaf(static_cast<int>(rng() % rank)));
  while (parts.size() > 1) {
    std::size_t k = rng() % (parts.size() - 1);
    parts[k] = Word::join(parts[k], parts[k + 1]);
    parts.erase(parts.begin() + static_cast<long>(k) + 1);
  }
  return parts[0];
}

const Word T = Word::leaf(1);

}  // namespace

TEST_CASE("tree basis sizes") {
  CategoryData fib = fibonacci_data();
  CHECK(tree_basis(fib, 1, T).size() == 1);
  CHECK(tree_basis(fib, 1, Word::join(T, T)).size() == 1);
  auto b = tree_basis(fib, 1, Word::join(Word::join(T, T), T));
  REQUIRE(b.size() == 2);
  CHECK(b[0].left_label == 0);
  CHECK(b[1].left_label == 1);
  CHECK(tree_basis(fib, 0, Word()).size() == 1);
  CHECK(word_dims(fib.ring, Word::left_nested({1, 1, 1, 1})) == std::vector<long>{2, 3});
}

TEST_CASE("composition and inverses") {
  CategoryData fib = fibonacci_data();
  std::mt19937 rng(1);
  Word w = Word::join(Word::join(T, T), T);
  Morphism f = random_morphism(fib, w, w, rng);
  CHECK(compose(identity_morphism(fib, w), f) == f);
  CHECK(compose(f, identity_morphism(fib, w)) == f);
  Morphism phi = associator(fib, T, T, T);
  CHECK(compose(invert(phi), phi) == identity_morphism(fib, Word::join(T, Word::join(T, T))));
  CHECK(compose(phi, invert(phi)) == identity_morphism(fib, w));
  CHECK_THROWS_AS(compose(phi, f), std::invalid_argument);
}

TEST_CASE("tensor product of morphisms") {
  CategoryData fib = fibonacci_data();
  Word w = Word::join(T, T);
  CHECK(tensor_morphisms(fib, identity_morphism(fib, w), identity_morphism(fib, T)) ==
        identity_morphism(fib, Word::join(w, T)));
  Scalar s = golden_ratio();
  CHECK(tensor_morphisms(fib, scale(s, identity_morphism(fib, T)), identity_morphism(fib, w)) ==
        scale(s, identity_morphism(fib, Word::join(T, w))));
}

TEST_CASE("bifunctoriality on random Fibonacci morphisms") {
  CategoryData fib = fibonacci_data();
  std::mt19937 rng(7);
  for (int t = 0; t < 25; ++t) {
    Word a = random_word(2, 3, rng), b = random_word(2, 3, rng), c = random_word(2, 3, rng);
    Word d = random_word(2, 3, rng), e = random_word(2, 3, rng), f = random_word(2, 3, rng);
    Morphism f2 = random_morphism(fib, a, b, rng), f1 = random_morphism(fib, b, c, rng);
    Morphism g2 = random_morphism(fib, d, e, rng), g1 = random_morphism(fib, e, f, rng);
    Morphism lhs = tensor_morphisms(fib, compose(f1, f2), compose(g1, g2));
    Morphism rhs = compose(tensor_morphisms(fib, f1, g1), tensor_morphisms(fib, f2, g2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("associator blocks") {
  CategoryData fib = fibonacci_data();
  Morphism phi = associator(fib, T, T, T);
  CHECK(phi.blocks[1] == fib.fmatrix(1, 1, 1, 1));
  CHECK(phi.blocks[0].rows() == 1);
  CHECK(phi.blocks[0](0, 0).is_one());
  Morphism unit_arg = associator(fib, Word::leaf(0), T, T);
  for (const auto& b : unit_arg.blocks) CHECK(b.is_identity());
  Morphism unit_word = associator(fib, Word(), T, T);
  CHECK(unit_word == identity_morphism(fib, Word::join(T, T)));
}

TEST_CASE("braiding") {
  CategoryData fib = fibonacci_data();
  Morphism psi = braiding(fib, T, T);
  CHECK(psi.blocks[0](0, 0) == Scalar::root_of_unity(5, 3));
  CHECK(psi.blocks[1](0, 0) == -Scalar::root_of_unity(5, 4));
  CHECK(braiding(fib, Word(), T) == identity_morphism(fib, T));
  CategoryData sv = svec_data();
  Word P = Word::leaf(1);
  CHECK(braiding(sv, P, P).blocks[0](0, 0) == Scalar(-1));
  // naturality: Psi_{b,d} (f g) = (g f) Psi_{a,c}
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Word a = random_word(2, 2, rng), b = random_word(2, 2, rng), c = random_word(2, 2, rng), d = random_word(2, 2, rng);
    Morphism f = random_morphism(fib, a, b, rng), g = random_morphism(fib, c, d, rng);
    CHECK(compose(braiding(fib, b, d), tensor_morphisms(fib, f, g)) ==
          compose(tensor_morphisms(fib, g, f), braiding(fib, a, c)));
  }
}

TEST_CASE("pentagon and hexagons on the catalog") {
  CHECK(verify_pentagon(vec_zn_data(3, 0)).ok());
  CHECK(verify_hexagons(vec_zn_data(3, 0)).ok());
  for (auto cat : {fibonacci_data(), ising_data(), svec_data(), vec_zn_data(4, 1), vec_zn_data(5, 2)}) {
    CAPTURE(cat.name);
    CHECK(verify_pentagon(cat).ok());
    CHECK(verify_hexagons(cat).ok());
  }
}

TEST_CASE("pentagon perturbation names the tuple") {
  CategoryData fib = fibonacci_data();
  fib.F[{1, 1, 1, 1}](0, 0) = -fib.F[{1, 1, 1, 1}](0, 0);
  Report rep = verify_pentagon(fib);
  CHECK_FALSE(rep.ok());
  const auto& w = rep.find("pentagon")->witness_indices;
  CHECK(std::find(w.begin(), w.end(), std::vector<long>{1, 1, 1, 1}) != w.end());
}

TEST_CASE("ev and coev") {
  for (auto cat : {fibonacci_data(), ising_data(), vec_zn_data(3, 1)}) {
    CAPTURE(cat.name);
    EvCoev u = ev_coev(cat, 0);
    CHECK(u.ev.blocks[0](0, 0).is_one());
    CHECK(u.coev.blocks[0](0, 0).is_one());
    CHECK(verify_snakes(cat).ok());
  }
  // first snake gives ev = 1 / F^{-1}(1,1), which is the golden ratio for Fibonacci
  CHECK(ev_coev(fibonacci_data(), 1).ev.blocks[0](0, 0) == golden_ratio());
}

TEST_CASE("ribbon") {
  CHECK(verify_ribbon(vec_zn_data(3, 0)).ok());
  CHECK(verify_ribbon(svec_data()).ok());
  CHECK(verify_ribbon(fibonacci_data()).ok());
  CategoryData bad = fibonacci_data();
  bad.theta[1] = Scalar::root_of_unity(5, 2);
  CHECK_FALSE(verify_ribbon(bad).ok());
}

TEST_CASE("trace and dimension") {
  CategoryData fib = fibonacci_data(), is = ising_data();
  CHECK(dimension(fib, 0).is_one());
  Scalar d = dimension(fib, 1);
  CHECK(d * d == d + Scalar(1));
  CHECK(d == golden_ratio());
  Scalar s = dimension(is, 1);
  CHECK(s * s == Scalar(2));
  for (const auto& cat : {fib, is, vec_zn_data(3, 1)}) {
    auto dims = dimensions(cat);
    for (int a = 0; a < cat.rank(); ++a) {
      CHECK(dims[a] == dims[cat.ring.dual(a)]);
      for (int b = 0; b < cat.rank(); ++b) {
        Scalar sum;
        for (int c = 0; c < cat.rank(); ++c) sum += Scalar(cat.ring.N(a, b, c)) * dims[c];
        CHECK(dims[a] * dims[b] == sum);
        Word ab = Word::join(Word::leaf(a), Word::leaf(b));
        CHECK(trace(cat, identity_morphism(cat, ab)) == dims[a] * dims[b]);
      }
    }
  }
}

TEST_CASE("trace properties on random morphisms") {
  CategoryData fib = fibonacci_data();
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    Word a = random_word(2, 3, rng), b = random_word(2, 3, rng);
    Morphism f = random_morphism(fib, a, b, rng), g = random_morphism(fib, b, a, rng);
    CHECK(trace(fib, compose(f, g)) == trace(fib, compose(g, f)));
    Morphism h = random_morphism(fib, a, a, rng), k = random_morphism(fib, b, b, rng);
    CHECK(trace(fib, tensor_morphisms(fib, h, k)) == trace(fib, h) * trace(fib, k));
    // rescaling one tree-basis vector conjugates each block by a diagonal matrix
    Morphism rescaled = h;
    for (auto& blk : rescaled.blocks) {
      if (blk.rows() == 0) continue;
      Matrix s = Matrix::identity(blk.rows());
      s(0, 0) = 3;
      blk = s * blk * *inverse(s);
    }
    CHECK(trace(fib, rescaled) == trace(fib, h));
  }
  CHECK_THROWS_AS(trace(fib, associator(fib, T, T, T)), std::invalid_argument);
}

TEST_CASE("conditional expectation") {
  CategoryData fib = fibonacci_data();
  Scalar dt = dimension(fib, 1);
  std::mt19937 rng(5);
  Word A = Word::join(T, T);
  Word AX = Word::join(A, T);
  CHECK(conditional_expectation(fib, identity_morphism(fib, AX), A, 1) == scale(dt, identity_morphism(fib, A)));
  Morphism f = random_morphism(fib, A, A, rng);
  CHECK(conditional_expectation(fib, tensor_morphisms(fib, f, identity_morphism(fib, T)), A, 1) == scale(dt, f));
  // bimodule property
  Morphism g = random_morphism(fib, A, A, rng), h = random_morphism(fib, AX, AX, rng);
  Morphism idX = identity_morphism(fib, T);
  Morphism lhs = conditional_expectation(
      fib, compose(tensor_morphisms(fib, g, idX), compose(h, tensor_morphisms(fib, f, idX))), A, 1);
  CHECK(lhs == compose(g, compose(conditional_expectation(fib, h, A, 1), f)));
  // E(f (x) Psi_{X,X}) = f (x) sigma(X)^-1, associators inserted to reach (A X) X
  Word B = T;
  Morphism fb = random_morphism(fib, B, B, rng);
  Morphism phi = associator(fib, B, T, T);
  Morphism lifted = compose(phi, compose(tensor_morphisms(fib, fb, braiding(fib, T, T)), invert(phi)));
  Morphism sigma_inv = scale(fib.theta[1].inverse(), identity_morphism(fib, T));
  CHECK(conditional_expectation(fib, lifted, Word::join(B, T), 1) == tensor_morphisms(fib, fb, sigma_inv));
  // iterated expectation on End(X X) is the trace
  Morphism e = random_morphism(fib, Word::join(T, T), Word::join(T, T), rng);
  Morphism once = conditional_expectation(fib, e, T, 1);
  Morphism twice = conditional_expectation(fib, once, Word(), 1);
  CHECK(twice.blocks[0](0, 0) == trace(fib, e));
}
