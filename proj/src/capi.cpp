// C boundary of the lattice core. All exceptions are converted to status
// codes here; the message lands in a thread-local slot for
// biell_last_error().

#include "bielliptic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "biell/biell.hpp"

struct biell_delta_model {
  biell::DeltaModel impl;
};

struct biell_isometry {
  biell::NumIsometry impl;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
biell_status wrap(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return BIELL_OK;
  } catch (const biell::precondition_error& e) {
    g_last_error = std::string(e.check()) + ": " + e.what();
    return BIELL_ERR_PRECONDITION;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BIELL_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return BIELL_ERR_REFERENCE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return BIELL_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BIELL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BIELL_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

biell::SurfaceType surface(int type) { return biell::SurfaceType(type); }

biell::DivisorClass parse_divisor(biell::SurfaceType t, const char* d) {
  require(d != nullptr, "null divisor literal");
  std::string_view sv(d);
  auto comma = sv.find(',');
  require(comma != std::string_view::npos && sv.find(',', comma + 1) == std::string_view::npos,
          "divisor literal must be two comma-separated integers");
  return biell::DivisorClass(t, biell::parse_int(sv.substr(0, comma)),
                             biell::parse_int(sv.substr(comma + 1)));
}

biell::NumClass parse_class_checked(biell::SurfaceType t, const char* v) {
  require(v != nullptr, "null class literal");
  return biell::parse_class(t, v);
}

}  // namespace

extern "C" {

const char* biell_version(void) { return "0.1.0"; }

const char* biell_last_error(void) { return g_last_error.c_str(); }

void biell_string_free(char* s) { std::free(s); }

namespace {

// One cached profile per type so the string members have stable addresses.
const biell::SurfaceProfile& cached_profile(biell::SurfaceType t) {
  static const std::vector<biell::SurfaceProfile> all = [] {
    std::vector<biell::SurfaceProfile> v;
    for (biell::SurfaceType ty : biell::all_surface_types()) v.push_back(biell::surface_profile(ty));
    return v;
  }();
  return all[static_cast<std::size_t>(t.id() - 1)];
}

}  // namespace

biell_status biell_surface_profile(int type, biell_profile* out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    const biell::SurfaceProfile& p = cached_profile(surface(type));
    out->type = p.type.id();
    out->n = p.n;
    out->k = p.k;
    out->g_order = p.g_order;
    out->split = p.split ? 1 : 0;
    out->lambda_p_a = p.lambda_p_a;
    out->lambda_p_b = p.lambda_p_b;
    out->group = p.group.c_str();
    out->lattice = p.lattice.c_str();
  });
}

biell_status biell_intersect(int type, const char* d1, const char* d2, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    const biell::SurfaceType t = surface(type);
    *out = copy_out(
        biell::format_int(biell::intersect(parse_divisor(t, d1), parse_divisor(t, d2))));
  });
}

biell_status biell_euler_pairing(int type, const char* v, const char* w, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    const biell::SurfaceType t = surface(type);
    *out = copy_out(biell::format_int(
        biell::euler_pairing(parse_class_checked(t, v), parse_class_checked(t, w))));
  });
}

biell_status biell_is_isotropic(int type, const char* v, int* out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    *out = biell::is_isotropic(parse_class_checked(surface(type), v)) ? 1 : 0;
  });
}

biell_status biell_is_primitive(int type, const char* v, int* out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    *out = biell::is_primitive(parse_class_checked(surface(type), v)) ? 1 : 0;
  });
}

biell_status biell_line_bundle_class(int type, const char* divisor, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    *out = copy_out(
        biell::format_class(biell::line_bundle_class(parse_divisor(surface(type), divisor))));
  });
}

biell_status biell_class_to_ab(int type, const char* v, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    *out = copy_out(biell::format_class_ab(parse_class_checked(surface(type), v)));
  });
}

biell_status biell_delta_model_count(int type, int* out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    *out = static_cast<int>(biell::enumerate_admissible_models(surface(type)).size());
  });
}

biell_status biell_delta_model_get(int type, int index, biell_delta_model** out) {
  return wrap([&] {
    require(out != nullptr, "null output argument");
    auto models = biell::enumerate_admissible_models(surface(type));
    if (index < 0 || static_cast<std::size_t>(index) >= models.size())
      throw std::out_of_range("delta model index " + std::to_string(index) +
                              " out of range: type " + std::to_string(type) + " has " +
                              std::to_string(models.size()) + " model(s)");
    *out = new biell_delta_model{std::move(models[static_cast<std::size_t>(index)])};
  });
}

void biell_delta_model_free(biell_delta_model* m) { delete m; }

biell_status biell_delta_model_hnf(const biell_delta_model* m, char** out) {
  return wrap([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const auto h = m->impl.hnf();
    *out = copy_out(h[0].str() + "," + h[1].str() + "," + h[2].str() + "," + h[3].str());
  });
}

biell_status biell_delta_basis(const biell_delta_model* m, char** out) {
  return wrap([&] {
    require(m != nullptr && out != nullptr, "null argument");
    std::string joined;
    for (const biell::NumClass& u : biell::delta_basis(m->impl)) {
      if (!joined.empty()) joined += ';';
      joined += biell::format_class(u);
    }
    *out = copy_out(joined);
  });
}

biell_status biell_in_delta(const biell_delta_model* m, const char* v, int* verdict,
                            char** failed) {
  return wrap([&] {
    require(m != nullptr && verdict != nullptr, "null argument");
    const biell::DeltaVerdict d =
        biell::check_delta(m->impl, parse_class_checked(m->impl.type(), v));
    *verdict = d.in() ? 1 : 0;
    if (failed) {
      std::string why;
      if (!d.rank_ok) why = "rank divisibility";
      if (!d.divisor_ok) why += why.empty() ? "divisor lattice" : "; divisor lattice";
      *failed = copy_out(why);
    }
  });
}

biell_status biell_image_index(const biell_delta_model* m, int* out) {
  return wrap([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = biell::image_index(m->impl);
  });
}

biell_status biell_is_isometry(const char* m16, int* out) {
  return wrap([&] {
    require(m16 != nullptr && out != nullptr, "null argument");
    *out = biell::is_isometry(biell::parse_matrix16(m16)) ? 1 : 0;
  });
}

biell_status biell_isometry_new(const char* m16, biell_isometry** out) {
  return wrap([&] {
    require(m16 != nullptr && out != nullptr, "null argument");
    *out = new biell_isometry{biell::NumIsometry(biell::parse_matrix16(m16))};
  });
}

void biell_isometry_free(biell_isometry* m) { delete m; }

biell_status biell_isometry_entries(const biell_isometry* m, char** out) {
  return wrap([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = copy_out(biell::format_matrix16(m->impl.matrix()));
  });
}

biell_status biell_isometry_mul(const biell_isometry* a, const biell_isometry* b,
                                biell_isometry** out) {
  return wrap([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new biell_isometry{a->impl * b->impl};
  });
}

biell_status biell_isometry_inverse(const biell_isometry* a, biell_isometry** out) {
  return wrap([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = new biell_isometry{a->impl.inverse()};
  });
}

biell_status biell_isometry_apply(const biell_isometry* a, int type, const char* v, char** out) {
  return wrap([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = copy_out(
        biell::format_class(a->impl.apply(parse_class_checked(surface(type), v))));
  });
}

biell_status biell_block(const char* psi, biell_isometry** out) {
  return wrap([&] {
    require(psi != nullptr && out != nullptr, "null argument");
    *out = new biell_isometry{biell::block(biell::u_from_name(psi))};
  });
}

biell_status biell_preserves_delta(const biell_isometry* m, const biell_delta_model* model,
                                   int* out) {
  return wrap([&] {
    require(m != nullptr && model != nullptr && out != nullptr, "null argument");
    *out = biell::preserves_delta(m->impl, model->impl) ? 1 : 0;
  });
}

biell_status biell_compose_word(int type, const char* word, biell_isometry** out) {
  return wrap([&] {
    require(word != nullptr && out != nullptr, "null argument");
    *out = new biell_isometry{biell::compose(biell::parse_word(surface(type), word))};
  });
}

biell_status biell_word_canonical(int type, const char* word, char** out) {
  return wrap([&] {
    require(word != nullptr && out != nullptr, "null argument");
    *out = copy_out(biell::format_word(biell::parse_word(surface(type), word)));
  });
}

biell_status biell_factor_point_image(int type, const char* v, char** out_word) {
  return wrap([&] {
    require(out_word != nullptr, "null output argument");
    const biell::SurfaceType t = surface(type);
    *out_word =
        copy_out(biell::format_word(biell::factor_point_image(parse_class_checked(t, v))));
  });
}

biell_status biell_decompose(int type, const biell_isometry* m, char** out_word,
                             char** out_residual, int* in_image) {
  return wrap([&] {
    require(m != nullptr && out_word != nullptr && out_residual != nullptr &&
                in_image != nullptr,
            "null argument");
    biell::Decomposition d = biell::decompose(m->impl, surface(type));
    *out_word = copy_out(biell::format_word(d.word));
    *out_residual = copy_out(std::string(biell::u_name(d.residual)));
    *in_image = d.residual == biell::UIsometry::id ? 1 : 0;
  });
}

biell_status biell_verify_word_class(int type, const char* word, const char* v, int* match) {
  return wrap([&] {
    require(word != nullptr && match != nullptr, "null argument");
    const biell::SurfaceType t = surface(type);
    *match = biell::verify_word(biell::parse_word(t, word), parse_class_checked(t, v)) ? 1 : 0;
  });
}

biell_status biell_verify_word_matrix(int type, const char* word, const char* m16, int* match) {
  return wrap([&] {
    require(word != nullptr && m16 != nullptr && match != nullptr, "null argument");
    const biell::SurfaceType t = surface(type);
    *match = biell::verify_word(biell::parse_word(t, word),
                                biell::NumIsometry(biell::parse_matrix16(m16)))
                 ? 1
                 : 0;
  });
}

}  // extern "C"
