#include "biell/literals.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace biell {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<Int> parse_int_list(std::string_view s, std::size_t count, const char* what) {
  auto parts = split(s, ',');
  if (parts.size() != count)
    bad(std::string(what) + ": expected " + std::to_string(count) +
        " comma-separated integers, got " + std::to_string(parts.size()));
  std::vector<Int> out;
  out.reserve(count);
  for (auto p : parts) out.push_back(parse_int(p));
  return out;
}

}  // namespace

Int parse_int(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && s[i] == '-') {
    neg = true;
    ++i;
  }
  if (i == s.size()) bad("integer literal is empty: \"" + std::string(s) + "\"");
  if (s[i] == '0' && s.size() > i + 1)
    bad("integer literal has a leading zero: \"" + std::string(s) + "\"");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      bad("integer literal has a non-digit character: \"" + std::string(s) + "\"");
    v = v * 10 + (s[i] - '0');
  }
  if (neg && v == 0) bad("integer literal \"-0\" is not canonical");
  return neg ? Int(-v) : v;
}

std::string format_int(const Int& v) { return v.str(); }

NumClass parse_class(SurfaceType t, std::string_view s) {
  auto ints = parse_int_list(s, 4, "class literal");
  return NumClass(t, std::move(ints[0]), std::move(ints[1]), std::move(ints[2]),
                  std::move(ints[3]));
}

std::string format_class(const NumClass& v) {
  return v.r().str() + "," + v.x().str() + "," + v.y().str() + "," + v.s().str();
}

Mat4 parse_matrix16(std::string_view s) {
  auto ints = parse_int_list(s, 16, "matrix literal");
  Mat4 m;
  for (std::size_t i = 0; i < 16; ++i) m.e[i] = std::move(ints[i]);
  return m;
}

std::string format_matrix16(const Mat4& m) {
  std::string out;
  for (std::size_t i = 0; i < 16; ++i) {
    if (i) out += ',';
    out += m.e[i].str();
  }
  return out;
}

namespace {

GeneratorLetter parse_letter(SurfaceType t, std::string_view tok) {
  bool inverted = false;
  if (tok.size() >= 3 && tok.substr(tok.size() - 3) == "^-1") {
    inverted = true;
    tok = tok.substr(0, tok.size() - 3);
  }
  GeneratorLetter letter = [&]() -> GeneratorLetter {
    if (tok == "shift") return GeneratorLetter::shift(t);
    auto args = [&](std::string_view name, std::size_t count) {
      // name(...) with exactly `count` strict integers inside
      std::string_view inner = tok.substr(name.size() + 1, tok.size() - name.size() - 2);
      return parse_int_list(inner, count, "letter arguments");
    };
    if (tok.starts_with("tlb(") && tok.ends_with(")")) {
      auto v = args("tlb", 2);
      return GeneratorLetter::tensor_lb(DivisorClass(t, std::move(v[0]), std::move(v[1])));
    }
    if (tok.starts_with("fma(") && tok.ends_with(")")) {
      auto v = args("fma", 4);
      return GeneratorLetter::rel_fm_a(
          t, SL2{std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3])});
    }
    if (tok.starts_with("fmb(") && tok.ends_with(")")) {
      auto v = args("fmb", 4);
      return GeneratorLetter::rel_fm_b(
          t, SL2{std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3])});
    }
    bad("unknown word letter: \"" + std::string(tok) + "\"");
  }();
  return inverted ? letter.inverted() : letter;
}

}  // namespace

GeneratorWord parse_word(SurfaceType t, std::string_view s) {
  GeneratorWord w(t);
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    w.push_back(parse_letter(t, s.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string format_letter(const GeneratorLetter& l) {
  std::string out;
  switch (l.kind()) {
    case GeneratorLetter::Kind::shift:
      out = "shift";
      break;
    case GeneratorLetter::Kind::tensor_lb:
      out = "tlb(" + l.twist().x().str() + "," + l.twist().y().str() + ")";
      break;
    case GeneratorLetter::Kind::rel_fm_a:
    case GeneratorLetter::Kind::rel_fm_b: {
      const SL2& m = l.sl2();
      out = (l.kind() == GeneratorLetter::Kind::rel_fm_a ? "fma(" : "fmb(") + m.c.str() + "," +
            m.a.str() + "," + m.d.str() + "," + m.b.str() + ")";
      break;
    }
  }
  if (l.is_inverted()) out += "^-1";
  return out;
}

std::string format_word(const GeneratorWord& w) {
  std::string out;
  for (const GeneratorLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

namespace {

// |p|/q * name with q > 0 and gcd already removed.
std::string term_abs(const Int& p_abs, const Int& q, const char* name) {
  if (q == 1) return (p_abs == 1 ? "" : p_abs.str()) + std::string(name);
  return "(" + p_abs.str() + "/" + q.str() + ")" + name;
}

void append_term(std::string& out, const Int& p, int denom, const char* name) {
  if (p == 0) return;
  Int g = gcd(p, denom);
  Int num = p / g;
  Int den = denom / g;
  Int num_abs = num < 0 ? Int(-num) : num;
  if (out.empty())
    out += (num < 0 ? "-" : "") + term_abs(num_abs, den, name);
  else
    out += (num < 0 ? " - " : " + ") + term_abs(num_abs, den, name);
}

}  // namespace

std::string format_class_ab(const NumClass& v) {
  const SurfaceProfile p = surface_profile(v.type());
  std::string div;
  append_term(div, v.x(), p.n, "A");
  append_term(div, v.y(), p.k, "B");
  if (div.empty()) div = "0";
  return "(" + v.r().str() + ", " + div + ", " + v.s().str() + ")";
}

}  // namespace biell
