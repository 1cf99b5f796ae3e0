#ifndef TORSIONLAB_GENERATE_HPP
#define TORSIONLAB_GENERATE_HPP

// Seeded generators for randomized suites.  Both the test binaries and the
// CLI verification suites draw from these, so a seed fully determines a run.

#include <cstddef>
#include <vector>

#include "torsionlab/chain_complex.hpp"
#include "torsionlab/rng.hpp"

namespace torsionlab {

// Random based chain complex: boundaries are built inside the kernel of the
// previous map, so the complex condition holds by construction.
template <class K>
ChainComplex<K> random_chain_complex(Rng& rng, std::size_t max_length = 3,
                                     std::size_t max_dim = 5, bool random_bases = false) {
  std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_length)));
  std::vector<std::size_t> dims(n + 1);
  for (auto& d : dims) d = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim)));
  std::vector<Matrix<K>> boundaries;
  Matrix<K> prev_kernel;  // columns spanning ker of the previous boundary
  for (std::size_t p = 1; p <= n; ++p) {
    if (p == 1) {
      boundaries.push_back(rng.matrix<K>(dims[0], dims[1], 2, 2));
    } else {
      Matrix<K> mix = rng.matrix<K>(prev_kernel.cols(), dims[p], 2, 2);
      boundaries.push_back(prev_kernel * mix);
    }
    prev_kernel = kernel_basis(boundaries.back());
  }
  std::vector<std::optional<Matrix<K>>> bases;
  if (random_bases) {
    for (std::size_t p = 0; p <= n; ++p) bases.emplace_back(rng.invertible<K>(dims[p]));
  }
  return ChainComplex<K>(std::move(dims), std::move(boundaries), std::move(bases));
}

// A short exact sequence of based complexes with compatible bases, suitable
// for exercising multiplicativity of torsion.  The total complex has
// block-triangular boundaries over the ends, a unimodular change of basis
// (random sign included) and generically nontrivial connecting maps.
template <class K>
struct ExactTriple {
  ChainComplex<K> sub, total, quotient;
  std::vector<Matrix<K>> inclusions, projections;
};

template <class K>
ExactTriple<K> random_exact_triple(Rng& rng, std::size_t max_length = 2, std::size_t max_dim = 3) {
  for (;;) {
    try {
      std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_length)));
      ChainComplex<K> a0 = random_chain_complex<K>(rng, n, max_dim);
      ChainComplex<K> d0 = random_chain_complex<K>(rng, n, max_dim);
      std::vector<std::size_t> zdims(n + 1, 0);
      std::vector<Matrix<K>> zbnd;
      for (std::size_t p = 1; p <= n; ++p) zbnd.emplace_back(0, 0);
      ChainComplex<K> zero(zdims, zbnd);
      ChainComplex<K> a = direct_sum(a0, zero);  // pad to length n
      ChainComplex<K> d = direct_sum(d0, zero);

      // Extension blocks X_p with dA_{p-1} X_p + X_{p-1} dD_p = 0.
      std::vector<Matrix<K>> x(n + 1);
      bool ok = true;
      for (std::size_t p = 1; p <= n && ok; ++p) {
        if (p == 1) {
          x[1] = rng.matrix<K>(a.dim(0), d.dim(1), 1, 1);
          continue;
        }
        try {
          Matrix<K> part = solve(a.boundary(p - 1), -(x[p - 1] * d.boundary(p)));
          Matrix<K> ker = kernel_basis(a.boundary(p - 1));
          Matrix<K> blend = ker.cols() > 0
                                ? ker * rng.matrix<K>(ker.cols(), d.dim(p), 1, 1)
                                : Matrix<K>(a.dim(p - 1), d.dim(p));
          x[p] = part + blend;
        } catch (const SingularError&) {
          ok = false;
        }
      }
      if (!ok) continue;

      std::vector<std::size_t> bdims(n + 1);
      for (std::size_t p = 0; p <= n; ++p) bdims[p] = a.dim(p) + d.dim(p);
      std::vector<Matrix<K>> bbnd;
      for (std::size_t p = 1; p <= n; ++p) {
        Matrix<K> blk(bdims[p - 1], bdims[p]);
        blk.set_block(0, 0, a.boundary(p));
        blk.set_block(0, a.dim(p), x[p]);
        blk.set_block(a.dim(p - 1), a.dim(p), d.boundary(p));
        bbnd.push_back(std::move(blk));
      }
      std::vector<std::optional<Matrix<K>>> bbases;
      for (std::size_t p = 0; p <= n; ++p) {
        Matrix<K> u = rng.unimodular<K>(bdims[p]);
        if (bdims[p] > 0 && rng.coin())
          for (std::size_t r = 0; r < bdims[p]; ++r) u(r, 0) = -u(r, 0);
        bbases.emplace_back(std::move(u));
      }
      ChainComplex<K> b(bdims, std::move(bbnd), std::move(bbases));

      std::vector<Matrix<K>> incl, proj;
      for (std::size_t p = 0; p <= n; ++p) {
        Matrix<K> in(bdims[p], a.dim(p));
        in.set_block(0, 0, Matrix<K>::identity(a.dim(p)));
        Matrix<K> pr(d.dim(p), bdims[p]);
        pr.set_block(0, a.dim(p), Matrix<K>::identity(d.dim(p)));
        incl.push_back(std::move(in));
        proj.push_back(std::move(pr));
      }
      return ExactTriple<K>{std::move(a), std::move(b), std::move(d), std::move(incl),
                            std::move(proj)};
    } catch (const Error&) {
    }
  }
}

}  // namespace torsionlab

#endif  // TORSIONLAB_GENERATE_HPP
