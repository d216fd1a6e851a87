#include "biell/isometry.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "biell/errors.hpp"

namespace biell {

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
  return m;
}

Mat4 Mat4::transpose() const {
  Mat4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t.at(i, j) = at(j, i);
  return t;
}

Mat4 Mat4::operator-() const {
  Mat4 n;
  for (std::size_t i = 0; i < 16; ++i) n.e[i] = -e[i];
  return n;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int acc = 0;
      for (int l = 0; l < 4; ++l) acc += a.at(i, l) * b.at(l, j);
      p.at(i, j) = std::move(acc);
    }
  return p;
}

std::array<Int, 4> Mat4::apply(const std::array<Int, 4>& v) const {
  std::array<Int, 4> out{};
  for (int i = 0; i < 4; ++i) {
    Int acc = 0;
    for (int j = 0; j < 4; ++j) acc += at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

const Mat4& euler_gram() {
  static const Mat4 g = [] {
    Mat4 m;
    m.at(0, 3) = 1;
    m.at(1, 2) = -1;
    m.at(2, 1) = -1;
    m.at(3, 0) = 1;
    return m;
  }();
  return g;
}

bool is_isometry(const Mat4& m) {
  const Mat4& g = euler_gram();
  return m.transpose() * g * m == g;
}

NumIsometry::NumIsometry(Mat4 m) : m_(std::move(m)) {
  if (!is_isometry(m_))
    throw precondition_error("not an isometry", "matrix does not preserve the Euler pairing");
}

NumIsometry NumIsometry::inverse() const {
  const Mat4& g = euler_gram();
  return NumIsometry(g * m_.transpose() * g);
}

NumIsometry operator*(const NumIsometry& a, const NumIsometry& b) {
  return NumIsometry(a.m_ * b.m_);
}

NumClass NumIsometry::apply(const NumClass& v) const {
  auto w = m_.apply({v.r(), v.x(), v.y(), v.s()});
  return NumClass(v.type(), std::move(w[0]), std::move(w[1]), std::move(w[2]), std::move(w[3]));
}

UIsometry u_mul(UIsometry a, UIsometry b) {
  // Klein four-group: composition is XOR on the (negate, swap) flags.
  return static_cast<UIsometry>(static_cast<int>(a) ^ static_cast<int>(b));
}

std::string_view u_name(UIsometry u) {
  switch (u) {
    case UIsometry::id: return "id";
    case UIsometry::iota: return "iota";
    case UIsometry::sigma: return "sigma";
    case UIsometry::iota_sigma: return "iota_sigma";
  }
  throw internal_error("u_name: bad enum value");
}

UIsometry u_from_name(std::string_view name) {
  for (UIsometry u : kAllUIsometries)
    if (u_name(u) == name) return u;
  throw std::invalid_argument("unknown divisor-lattice isometry name: " + std::string(name));
}

NumIsometry block(UIsometry psi) {
  Mat4 m = Mat4::identity();
  const int i = static_cast<int>(psi);
  const bool negate = (i & 1) != 0;
  const bool swap = (i & 2) != 0;
  const Int sign = negate ? -1 : 1;
  m.at(1, 1) = swap ? 0 : sign;
  m.at(2, 2) = swap ? 0 : sign;
  m.at(1, 2) = swap ? sign : 0;
  m.at(2, 1) = swap ? sign : 0;
  return NumIsometry(std::move(m));
}

GeneratorLetter::GeneratorLetter(SurfaceType t, Kind kind, DivisorClass twist, SL2 m, bool inverted)
    : type_(t), kind_(kind), twist_(std::move(twist)), sl2_(std::move(m)), inverted_(inverted) {}

GeneratorLetter GeneratorLetter::shift(SurfaceType t) {
  return {t, Kind::shift, DivisorClass::zero(t), SL2{}, false};
}

GeneratorLetter GeneratorLetter::tensor_lb(const DivisorClass& m) {
  return {m.type(), Kind::tensor_lb, m, SL2{}, false};
}

namespace {

SL2 checked_sl2(SL2 m, const Int& lambda, const char* kind) {
  if (m.det() != 1)
    throw precondition_error("letter determinant",
                             std::string(kind) + " letter must have determinant 1, got " +
                                 m.det().str());
  if (m.d % lambda != 0)
    throw precondition_error("letter divisibility", std::string(kind) + " letter needs " +
                                                        lambda.str() + " | d, got d = " +
                                                        m.d.str());
  return m;
}

}  // namespace

GeneratorLetter GeneratorLetter::rel_fm_a(SurfaceType t, SL2 m) {
  const Int k = surface_profile(t).k;
  return {t, Kind::rel_fm_a, DivisorClass::zero(t), checked_sl2(std::move(m), k, "fma"), false};
}

GeneratorLetter GeneratorLetter::rel_fm_b(SurfaceType t, SL2 m) {
  const Int n = surface_profile(t).n;
  return {t, Kind::rel_fm_b, DivisorClass::zero(t), checked_sl2(std::move(m), n, "fmb"), false};
}

const DivisorClass& GeneratorLetter::twist() const {
  if (kind_ != Kind::tensor_lb) throw internal_error("twist() on a non-tensor letter");
  return twist_;
}

const SL2& GeneratorLetter::sl2() const {
  if (kind_ != Kind::rel_fm_a && kind_ != Kind::rel_fm_b)
    throw internal_error("sl2() on a non-Fourier-Mukai letter");
  return sl2_;
}

GeneratorLetter GeneratorLetter::inverted() const {
  GeneratorLetter l = *this;
  l.inverted_ = !l.inverted_;
  return l;
}

bool GeneratorLetter::geometric() const noexcept {
  if (kind_ == Kind::rel_fm_a || kind_ == Kind::rel_fm_b) return sl2_.a > 0;
  return true;
}

namespace {

// N + N on the coordinate pairs (i0, i1) and (j0, j1).
Mat4 doubled_block(const Int& n00, const Int& n01, const Int& n10, const Int& n11, int i0, int i1,
                   int j0, int j1) {
  Mat4 m;
  m.at(i0, i0) = n00;
  m.at(i0, i1) = n01;
  m.at(i1, i0) = n10;
  m.at(i1, i1) = n11;
  m.at(j0, j0) = n00;
  m.at(j0, j1) = n01;
  m.at(j1, j0) = n10;
  m.at(j1, j1) = n11;
  return m;
}

}  // namespace

NumIsometry GeneratorLetter::action() const {
  Mat4 m;
  switch (kind_) {
    case Kind::shift:
      m = -Mat4::identity();
      break;
    case Kind::tensor_lb: {
      const Int& mx = twist_.x();
      const Int& my = twist_.y();
      m = Mat4::identity();
      m.at(1, 0) = mx;
      m.at(2, 0) = my;
      m.at(3, 0) = mx * my;
      m.at(3, 1) = my;
      m.at(3, 2) = mx;
      break;
    }
    case Kind::rel_fm_a: {
      const Int k = surface_profile(type_).k;
      m = doubled_block(sl2_.c, sl2_.a * k, sl2_.d / k, sl2_.b, 0, 1, 2, 3);
      break;
    }
    case Kind::rel_fm_b: {
      const Int n = surface_profile(type_).n;
      m = doubled_block(sl2_.c, sl2_.a * n, sl2_.d / n, sl2_.b, 0, 2, 1, 3);
      break;
    }
  }
  NumIsometry iso((std::move(m)));
  return inverted_ ? iso.inverse() : iso;
}

GeneratorWord::GeneratorWord(SurfaceType t, std::vector<GeneratorLetter> letters)
    : type_(t), letters_(std::move(letters)) {
  for (const GeneratorLetter& l : letters_)
    if (!(l.type() == t)) throw std::domain_error("word letters must share the word's surface type");
}

void GeneratorWord::push_back(GeneratorLetter l) {
  if (!(l.type() == type_))
    throw std::domain_error("word letters must share the word's surface type");
  letters_.push_back(std::move(l));
}

GeneratorWord operator+(const GeneratorWord& a, const GeneratorWord& b) {
  if (!(a.type() == b.type()))
    throw std::domain_error("cannot concatenate words over different surface types");
  GeneratorWord w = a;
  for (const GeneratorLetter& l : b.letters_) w.letters_.push_back(l);
  return w;
}

NumIsometry compose(const GeneratorWord& w) {
  NumIsometry acc = NumIsometry::identity();
  for (const GeneratorLetter& l : w.letters()) acc = acc * l.action();
  return acc;
}

bool preserves_delta(const NumIsometry& m, const DeltaModel& model) {
  const NumIsometry inv = m.inverse();
  for (const NumClass& u : delta_basis(model)) {
    if (!in_delta(model, m.apply(u))) return false;
    if (!in_delta(model, inv.apply(u))) return false;
  }
  return true;
}

int image_index(const DeltaModel& model) {
  int count = 0;
  for (UIsometry psi : kAllUIsometries)
    if (preserves_delta(block(psi), model)) ++count;
  return count;
}

}  // namespace biell
