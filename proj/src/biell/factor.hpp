#pragma once

#include <vector>

#include "biell/isometry.hpp"

namespace biell {

/// Factor an isotropic primitive special class v over a split type as the
/// image of the point class: returns a word w with compose(w)(p4) == v.
///
/// The algorithm is the Euclidean one: Shift normalizes the rank positive,
/// tensor letters make the e1-coordinate positive, then quotient steps
/// alternate tlb(q,0) and fma(1,q,0,1) letters until the rank drops to zero,
/// where a single Fourier-Mukai letter (found by extended Euclid on the
/// remaining coprime pair) finishes. Word length is logarithmic in the
/// coordinate size.
///
/// Preconditions (each reported as a distinct failed check):
/// split type, v in the default Delta model, isotropic, primitive.
///
/// If `trace` is non-null it receives every intermediate class, starting with
/// v and ending with p4; each is guaranteed to still be special, isotropic
/// and primitive.
GeneratorWord factor_point_image(const NumClass& v, std::vector<NumClass>* trace = nullptr);

/// Result of splitting an isometry m as compose(word) * block(residual).
struct Decomposition {
  GeneratorWord word;
  UIsometry residual;
};

/// Split-type decomposition of an isometry preserving the default Delta:
/// m == compose(word) * block(residual) exactly, with residual in O(U).
/// m lies in the autoequivalence-realized subgroup iff residual == id.
Decomposition decompose(const NumIsometry& m, SurfaceType t);

struct ImageCheck {
  bool in_image;
  GeneratorWord word;  // certificate: m == compose(word) * block(residual)
  UIsometry residual;
};

ImageCheck is_in_image(const NumIsometry& m, SurfaceType t);

/// Does the word compose exactly to the claimed isometry?
bool verify_word(const GeneratorWord& w, const NumIsometry& claim);

/// Does the word send the point class exactly to the claimed class?
bool verify_word(const GeneratorWord& w, const NumClass& claim);

}  // namespace biell
