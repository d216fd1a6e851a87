// biell — command-line front end for the bielliptic lattice library.
// Talks to the core exclusively through the public C interface.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bielliptic.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 usage or
// parse error, 3 bad reference (model index), 4 failed precondition,
// 70 internal defect.
int exit_code(biell_status st) {
  switch (st) {
    case BIELL_OK: return 0;
    case BIELL_ERR_USAGE: return 2;
    case BIELL_ERR_REFERENCE: return 3;
    case BIELL_ERR_PRECONDITION: return 4;
    case BIELL_ERR_INTERNAL: return 5;
  }
  return 5;
}

int fail(biell_status st) {
  std::fprintf(stderr, "error: %s\n", biell_last_error());
  int rc = exit_code(st);
  return rc == 5 ? 70 : rc;
}

struct CStr {
  char* p = nullptr;
  ~CStr() { biell_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Iso {
  biell_isometry* p = nullptr;
  ~Iso() { biell_isometry_free(p); }
};

struct Model {
  biell_delta_model* p = nullptr;
  ~Model() { biell_delta_model_free(p); }
};

std::size_t comma_count(const std::string& s) {
  std::size_t c = 0;
  for (char ch : s)
    if (ch == ',') ++c;
  return c;
}

std::size_t word_length(const std::string& w) {
  std::size_t count = 0;
  bool in_tok = false;
  for (char ch : w) {
    bool sp = ch == ' ' || ch == '\t' || ch == '\n';
    if (!sp && !in_tok) ++count;
    in_tok = !sp;
  }
  return count;
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

// ---- info ----------------------------------------------------------------

int cmd_info(int type, bool as_json) {
  biell_profile p{};
  if (biell_status st = biell_surface_profile(type, &p); st != BIELL_OK) return fail(st);
  if (as_json) {
    json j;
    j["type"] = p.type;
    j["n"] = p.n;
    j["k"] = p.k;
    j["g_order"] = p.g_order;
    j["split"] = p.split != 0;
    j["lambda_p_a"] = p.lambda_p_a;
    j["lambda_p_b"] = p.lambda_p_b;
    j["group"] = p.group;
    j["lattice"] = p.lattice;
    emit(j);
  } else {
    std::printf("type: %d\n", p.type);
    std::printf("n: %d\n", p.n);
    std::printf("k: %d\n", p.k);
    std::printf("g_order: %d\n", p.g_order);
    std::printf("split: %s\n", p.split ? "yes" : "no");
    std::printf("lambda_p_a: %d\n", p.lambda_p_a);
    std::printf("lambda_p_b: %d\n", p.lambda_p_b);
    std::printf("group: %s\n", p.group);
    std::printf("lattice: %s\n", p.lattice);
  }
  return 0;
}

// ---- delta ---------------------------------------------------------------

int list_models(int type, bool as_json) {
  int count = 0;
  if (biell_status st = biell_delta_model_count(type, &count); st != BIELL_OK) return fail(st);
  json models = json::array();
  for (int i = 0; i < count; ++i) {
    Model m;
    if (biell_status st = biell_delta_model_get(type, i, &m.p); st != BIELL_OK) return fail(st);
    CStr hnf;
    if (biell_status st = biell_delta_model_hnf(m.p, &hnf.p); st != BIELL_OK) return fail(st);
    CStr basis;
    if (biell_status st = biell_delta_basis(m.p, &basis.p); st != BIELL_OK) return fail(st);
    if (as_json) {
      json row;
      row["index"] = i;
      row["hnf"] = hnf.str();
      row["basis"] = basis.str();
      models.push_back(row);
    } else {
      std::printf("model %d: hnf %s  basis %s\n", i, hnf.p, basis.p);
    }
  }
  if (as_json) {
    json j;
    j["type"] = type;
    j["count"] = count;
    j["models"] = models;
    emit(j);
  } else {
    std::printf("count: %d\n", count);
  }
  return 0;
}

int cmd_delta(int type, const std::string& cls, int model_index, bool models, bool as_json,
              bool ab) {
  if (models) return list_models(type, as_json);
  if (cls.empty()) {
    std::fprintf(stderr, "error: delta needs a class literal or --models\n");
    return 2;
  }
  Model m;
  if (biell_status st = biell_delta_model_get(type, model_index, &m.p); st != BIELL_OK)
    return fail(st);
  int verdict = 0;
  CStr failed;
  if (biell_status st = biell_in_delta(m.p, cls.c_str(), &verdict, &failed.p); st != BIELL_OK)
    return fail(st);
  CStr abs;
  if (ab) {
    if (biell_status st = biell_class_to_ab(type, cls.c_str(), &abs.p); st != BIELL_OK)
      return fail(st);
  }
  if (as_json) {
    json j;
    j["type"] = type;
    j["model"] = model_index;
    j["class"] = cls;
    if (ab) j["ab"] = abs.str();
    j["special"] = verdict != 0;
    j["failed"] = failed.str();
    emit(j);
  } else {
    if (ab) std::printf("class: %s\n", abs.p);
    if (verdict)
      std::printf("special\n");
    else
      std::printf("not special (failed: %s)\n", failed.p);
  }
  return verdict ? 0 : 1;
}

// ---- index ---------------------------------------------------------------

int cmd_index(int type, bool all_models, bool as_json) {
  int count = 1;
  if (all_models) {
    if (biell_status st = biell_delta_model_count(type, &count); st != BIELL_OK) return fail(st);
  }
  std::vector<int> indices;
  for (int i = 0; i < count; ++i) {
    Model m;
    if (biell_status st = biell_delta_model_get(type, i, &m.p); st != BIELL_OK) return fail(st);
    int idx = 0;
    if (biell_status st = biell_image_index(m.p, &idx); st != BIELL_OK) return fail(st);
    indices.push_back(idx);
  }
  if (as_json) {
    json j;
    j["type"] = type;
    j["indices"] = indices;
    emit(j);
  } else if (all_models) {
    for (int i = 0; i < count; ++i) std::printf("model %d: %d\n", i, indices[static_cast<std::size_t>(i)]);
  } else {
    std::printf("%d\n", indices[0]);
  }
  return 0;
}

// ---- factor --------------------------------------------------------------

int cmd_factor(int type, const std::string& cls, bool as_json) {
  CStr word;
  if (biell_status st = biell_factor_point_image(type, cls.c_str(), &word.p); st != BIELL_OK)
    return fail(st);
  int match = 0;
  if (biell_status st = biell_verify_word_class(type, word.p, cls.c_str(), &match);
      st != BIELL_OK)
    return fail(st);
  if (!match) {
    std::fprintf(stderr, "error: factorization failed its own recomposition check\n");
    return 70;
  }
  if (as_json) {
    json j;
    j["type"] = type;
    j["class"] = cls;
    j["word"] = word.str();
    j["length"] = word_length(word.str());
    j["recomposition"] = "ok";
    emit(j);
  } else {
    std::printf("word: %s\n", word.p);
    std::printf("length: %zu\n", word_length(word.str()));
    std::printf("recomposition: ok\n");
  }
  return 0;
}

// ---- decompose -----------------------------------------------------------

int cmd_decompose(int type, const std::string& m16, bool as_json) {
  Iso m;
  if (biell_status st = biell_isometry_new(m16.c_str(), &m.p); st != BIELL_OK) return fail(st);
  CStr word, residual;
  int in_image = 0;
  if (biell_status st = biell_decompose(type, m.p, &word.p, &residual.p, &in_image);
      st != BIELL_OK)
    return fail(st);

  // Reconstruction check: compose(word) * block(residual) must equal the input.
  Iso wm, bm, prod;
  if (biell_status st = biell_compose_word(type, word.p, &wm.p); st != BIELL_OK) return fail(st);
  if (biell_status st = biell_block(residual.p, &bm.p); st != BIELL_OK) return fail(st);
  if (biell_status st = biell_isometry_mul(wm.p, bm.p, &prod.p); st != BIELL_OK) return fail(st);
  CStr lhs, rhs;
  if (biell_status st = biell_isometry_entries(prod.p, &lhs.p); st != BIELL_OK) return fail(st);
  if (biell_status st = biell_isometry_entries(m.p, &rhs.p); st != BIELL_OK) return fail(st);
  if (lhs.str() != rhs.str()) {
    std::fprintf(stderr, "error: decomposition failed its own reconstruction check\n");
    return 70;
  }

  if (as_json) {
    json j;
    j["type"] = type;
    j["matrix"] = rhs.str();
    j["word"] = word.str();
    j["length"] = word_length(word.str());
    j["residual"] = residual.str();
    j["in_image"] = in_image != 0;
    j["reconstruction"] = "ok";
    emit(j);
  } else {
    std::printf("word: %s\n", word.p);
    std::printf("residual: %s\n", residual.p);
    std::printf("in_image: %s\n", in_image ? "yes" : "no");
    std::printf("reconstruction: ok\n");
  }
  return 0;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(int type, const std::string& word, const std::string& claim, bool as_json) {
  std::size_t commas = comma_count(claim);
  int match = 0;
  const char* kind = nullptr;
  if (commas == 3) {
    kind = "class";
    if (biell_status st = biell_verify_word_class(type, word.c_str(), claim.c_str(), &match);
        st != BIELL_OK)
      return fail(st);
  } else if (commas == 15) {
    kind = "matrix";
    if (biell_status st = biell_verify_word_matrix(type, word.c_str(), claim.c_str(), &match);
        st != BIELL_OK)
      return fail(st);
  } else {
    std::fprintf(stderr,
                 "error: claim must be a class (4 integers) or a matrix (16 integers)\n");
    return 2;
  }
  if (as_json) {
    json j;
    j["type"] = type;
    j["word"] = word;
    j["claim"] = claim;
    j["kind"] = kind;
    j["match"] = match != 0;
    emit(j);
  } else {
    std::printf("%s\n", match ? "match" : "mismatch");
  }
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice invariants of bielliptic surfaces"};
  app.set_version_flag("--version", std::string(biell_version()));
  app.require_subcommand(1);

  int type = 0;
  std::string cls, matrix, word, claim;
  int model_index = 0;
  bool as_json = false, ab = false, models = false, all_models = false;

  auto add_type = [&](CLI::App* c) {
    c->add_option("type", type, "surface type (1..7)")->required();
    c->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* info = app.add_subcommand("info", "surface type profile");
  add_type(info);

  CLI::App* delta = app.add_subcommand("delta", "special-class membership and models");
  add_type(delta);
  delta->add_option("class", cls, "class literal r,x,y,s");
  delta->add_option("--model", model_index, "Delta model index (default 0)");
  delta->add_flag("--models", models, "list admissible models");
  delta->add_flag("--ab", ab, "echo the class in fiber-class form");

  CLI::App* index = app.add_subcommand("index", "autoequivalence image index");
  add_type(index);
  index->add_flag("--all-models", all_models, "index for every admissible model");

  CLI::App* factor = app.add_subcommand("factor", "factor a class as a word image of the point class");
  add_type(factor);
  factor->add_option("class", cls, "class literal r,x,y,s")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "split an isometry into word and residual");
  add_type(decompose);
  decompose->add_option("matrix", matrix, "16 row-major comma-separated entries")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a word against a claimed class or matrix");
  add_type(verify);
  verify->add_option("word", word, "word literal (may be empty)")->required();
  verify->add_option("claim", claim, "class (4 ints) or matrix (16 ints)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(info)) return cmd_info(type, as_json);
  if (app.got_subcommand(delta)) return cmd_delta(type, cls, model_index, models, as_json, ab);
  if (app.got_subcommand(index)) return cmd_index(type, all_models, as_json);
  if (app.got_subcommand(factor)) return cmd_factor(type, cls, as_json);
  if (app.got_subcommand(decompose)) return cmd_decompose(type, matrix, as_json);
  if (app.got_subcommand(verify)) return cmd_verify(type, word, claim, as_json);
  return 2;
}
