#include "biell/factor.hpp"

#include <stdexcept>
#include <utility>

#include "biell/errors.hpp"

namespace biell {

namespace {

// One reduction step of the factorization: append letter l to the word and
// replace cur by l^-1(cur), preserving the invariant
// v == compose(word)(cur). Every intermediate class must stay special,
// isotropic and primitive; a violation is a library defect.
class Reducer {
 public:
  Reducer(NumClass start, DeltaModel model, std::vector<NumClass>* trace)
      : word_(start.type()), cur_(std::move(start)), model_(std::move(model)), trace_(trace) {
    if (trace_) trace_->push_back(cur_);
  }

  const NumClass& cur() const noexcept { return cur_; }

  void step(const GeneratorLetter& l) {
    word_.push_back(l);
    cur_ = l.action().inverse().apply(cur_);
    if (!in_delta(model_, cur_) || !is_isotropic(cur_) || cur_.is_zero() || !is_primitive(cur_))
      throw internal_error("factor_point_image: intermediate class left the special cone");
    if (trace_) trace_->push_back(cur_);
  }

  GeneratorWord take_word() && { return std::move(word_); }

 private:
  GeneratorWord word_;
  NumClass cur_;
  DeltaModel model_;
  std::vector<NumClass>* trace_;
};

// Finishing letter for a rank-zero class (0, x, 0, s) with x != 0: a single
// fmb letter maps p4 to it. gcd(x, s) == 1, so extended Euclid solves
// c*s - x*e == 1; c is canonicalized to the least nonnegative residue mod |x|.
GeneratorLetter finish_rank0_x(const NumClass& v, const Int& n) {
  const Int& x = v.x();
  const Int& s = v.s();
  Xgcd bez = xgcd(s, x);  // u*s + v*x == 1
  if (bez.g != 1) throw internal_error("factor_point_image: finishing pair is not coprime");
  Int c = mod_floor(bez.u, x);
  Int e = (c * s - 1) / x;
  return GeneratorLetter::rel_fm_b(v.type(), SL2{std::move(c), x / n, n * e, s});
}

// Same for (0, 0, y, s) with y != 0: a single fma letter. On split types the
// divisibility side condition is vacuous.
GeneratorLetter finish_rank0_y(const NumClass& v) {
  const Int& y = v.y();
  const Int& s = v.s();
  Xgcd bez = xgcd(s, y);
  if (bez.g != 1) throw internal_error("factor_point_image: finishing pair is not coprime");
  Int c = mod_floor(bez.u, y);
  Int d = (c * s - 1) / y;
  return GeneratorLetter::rel_fm_a(v.type(), SL2{std::move(c), y, std::move(d), s});
}

}  // namespace

GeneratorWord factor_point_image(const NumClass& v, std::vector<NumClass>* trace) {
  const SurfaceType t = v.type();
  const SurfaceProfile p = surface_profile(t);
  if (!p.split)
    throw precondition_error("non-split type",
                             "factorization is only defined for the split types 1, 3, 5, 7");
  const DeltaModel model = default_delta(t);
  if (!in_delta(model, v))
    throw precondition_error("not in delta", "class is not special: " +
                                                 std::string(check_delta(model, v).rank_ok
                                                                 ? "divisor part outside the lattice"
                                                                 : "rank not divisible by n"));
  if (!is_isotropic(v))
    throw precondition_error("not isotropic", "class has nonzero self-pairing");
  if (v.is_zero() || !is_primitive(v))
    throw precondition_error("not primitive", "class is zero or divisible");

  const Int n = p.n;
  const NumClass point = NumClass::p4(t);
  Reducer red(v, model, trace);

  // Each pass either terminates or strictly reduces (|r|, then the Euclidean
  // pair); the bound is a defensive guard only.
  for (int guard = 0; guard < 100000; ++guard) {
    const NumClass& cur = red.cur();
    if (cur == point) return std::move(red).take_word();
    if (cur == -point) {
      red.step(GeneratorLetter::shift(t));
      continue;
    }
    if (cur.r() == 0) {
      // Isotropy forces x*y == 0; both zero would make the class +-p4.
      if (cur.x() != 0 && cur.y() != 0)
        throw internal_error("factor_point_image: rank-zero class with x*y != 0");
      if (cur.x() != 0)
        red.step(finish_rank0_x(cur, n));
      else if (cur.y() != 0)
        red.step(finish_rank0_y(cur));
      else
        throw internal_error("factor_point_image: primitive rank-zero class with zero divisor");
      continue;
    }
    if (cur.r() < 0) {
      red.step(GeneratorLetter::shift(t));
      continue;
    }
    // r > 0 from here on.
    if (cur.x() == 0) {
      // Isotropy gives s == 0; the inverted fma(0,1,-1,0) letter rotates the
      // class into rank zero.
      red.step(GeneratorLetter::rel_fm_a(t, SL2{0, 1, -1, 0}).inverted());
      continue;
    }
    if (cur.x() < 0) {
      Int q = floor_div(-cur.x(), cur.r()) + 1;  // smallest twist making x positive
      red.step(GeneratorLetter::tensor_lb(DivisorClass(t, -q, 0)));
      continue;
    }
    // r > 0, x > 0: one Euclidean quotient step on (r/n, x/n).
    Int c0 = cur.r() / n;
    Int a0 = cur.x() / n;
    if (c0 >= a0) {
      Int q = c0 / a0;
      red.step(GeneratorLetter::rel_fm_a(t, SL2{1, std::move(q), 0, 1}));
    } else {
      Int q = a0 / c0;
      red.step(GeneratorLetter::tensor_lb(DivisorClass(t, std::move(q), 0)));
    }
  }
  throw internal_error("factor_point_image: reduction did not terminate");
}

Decomposition decompose(const NumIsometry& m, SurfaceType t) {
  const SurfaceProfile p = surface_profile(t);
  if (!p.split)
    throw precondition_error("non-split type",
                             "decomposition is only defined for the split types 1, 3, 5, 7");
  const DeltaModel model = default_delta(t);
  if (!preserves_delta(m, model))
    throw precondition_error("delta not preserved",
                             "isometry does not map the special classes onto themselves");

  // Peel the word off: first match the image of the point class, then the
  // image of p0 (forced to be a line-bundle class), leaving a block isometry.
  const NumClass v = m.apply(NumClass::p4(t));
  GeneratorWord word = factor_point_image(v);
  const NumIsometry m1 = compose(word).inverse() * m;

  const NumClass u = m1.apply(NumClass::p0(t));
  if (u.r() != 1 || u.s() != u.x() * u.y())
    throw internal_error("decompose: image of p0 is not a line-bundle class");
  const GeneratorLetter twist = GeneratorLetter::tensor_lb(u.divisor());
  const NumIsometry m2 = twist.action().inverse() * m1;
  word.push_back(twist);

  for (UIsometry psi : kAllUIsometries)
    if (m2 == block(psi)) return Decomposition{std::move(word), psi};
  throw internal_error("decompose: residual fixing p0 and p4 is not a block isometry");
}

ImageCheck is_in_image(const NumIsometry& m, SurfaceType t) {
  Decomposition d = decompose(m, t);
  const bool in = d.residual == UIsometry::id;
  return ImageCheck{in, std::move(d.word), d.residual};
}

bool verify_word(const GeneratorWord& w, const NumIsometry& claim) {
  return compose(w) == claim;
}

bool verify_word(const GeneratorWord& w, const NumClass& claim) {
  if (!(claim.type() == w.type()))
    throw std::domain_error("verify_word: claim lives over a different surface type");
  return compose(w).apply(NumClass::p4(w.type())) == claim;
}

}  // namespace biell
