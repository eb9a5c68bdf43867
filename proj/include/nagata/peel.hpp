#ifndef NAGATA_PEEL_HPP
#define NAGATA_PEEL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nagata/morphism.hpp"

namespace nagata {

// Finite ansatz for the matching solvers: candidate coefficients are
// z^a / D^max_den_power with a <= max_num_degree, D the monic lcm of all
// denominators in the inputs times z. Negative fields select per-use
// defaults (max_den_power = m + 2; max_num_degree = 2 + the max z-degree
// occurring in the inputs + deg D^max_den_power, so plain powers of z stay
// representable).
struct MatchBounds {
  int max_den_power = -1;
  int max_num_degree = -1;
};

// A solver miss means "not found within bounds", never a nonexistence
// proof.
std::optional<std::vector<std::pair<RatFunc, RatFunc>>> solve_proportional(
    const NCElement& u, const NCElement& v, const MatchBounds& bounds);

// H with H(v,...,v) = u, m letters, coefficients within bounds.
std::optional<TailForm> solve_multilinear_match(const NCElement& u,
                                                const NCElement& v, int m,
                                                const MatchBounds& bounds);

// Alternating elementary decomposition, steps in process order: the list
// [s1,...,sn] denotes s1 . s2 ... sn and replay passes through the stages
// E_i = E_{i-1} . s_i of the degree-increasing process.
struct NCDecomposition {
  std::vector<ElementaryAuto> steps;
};

Endo nc_recompose(const NCDecomposition& d);
std::vector<Endo> replay(const NCDecomposition& d);

class DecompositionError : public Error {
 public:
  DecompositionError(const std::string& msg, Endo residual)
      : Error(ErrorCode::DecompositionFailed, msg),
        residual_(std::move(residual)) {}
  const Endo& residual() const { return residual_; }

 private:
  Endo residual_;
};

// Peels an automorphism candidate into alternating transvections with
// Scale / LinearLeft factors at the ends. Throws DecompositionError with
// the residual endomorphism when the input is out of reach (not an
// automorphism, or no match within bounds).
NCDecomposition nc_decompose(const Endo& e, const MatchBounds& bounds = {});

// Rewrites a sandwich-free process so that after every intermediate stage
// both images have polynomial, jointly coprime boundary coefficient sets,
// threading two-sided scalings through the tails. The composite is
// unchanged. Throws SandwichPresent if some stage has a sandwich.
NCDecomposition coefficient_improve(const NCDecomposition& d);

// True iff both images have all left (resp. right) boundary coefficients
// in F[z] with unit gcd per image.
bool boundary_coefficients_improved(const Endo& e);

}  // namespace nagata

#endif
