#include "pqalg/pqalg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pqalg/commands.hpp"
#include "pqalg/drazin.hpp"
#include "pqalg/error.hpp"
#include "pqalg/models.hpp"
#include "pqalg/serialize.hpp"

struct pqalg_presentation {
  pqalg::Presentation value;
};
struct pqalg_element {
  pqalg::Element value;
};
struct pqalg_matrix {
  pqalg::RationalMatrix value;
};
struct pqalg_model {
  pqalg::ModelPair value;
};

namespace {

thread_local std::string last_error;

pqalg_status fail(pqalg_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
pqalg_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return PQALG_OK;
  } catch (const pqalg::Error& e) {
    return fail(static_cast<pqalg_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(PQALG_INVALID_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PQALG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PQALG_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pqalg::Json parse(const char* text) {
  try {
    return pqalg::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw pqalg::ParameterError(std::string("malformed JSON: ") + e.what());
  }
}

pqalg::ZnVanishing vanishing_of(int v) { return v ? pqalg::ZnVanishing::PQ : pqalg::ZnVanishing::QP; }

#define PQALG_REQUIRE(...)                                                        \
  do {                                                                            \
    const void* args_[] = {__VA_ARGS__};                                          \
    for (const void* a_ : args_)                                                  \
      if (!a_) return fail(PQALG_NULL_ARGUMENT, "null argument to " + std::string(__func__)); \
  } while (0)

}  // namespace

extern "C" {

const char* pqalg_last_error(void) { return last_error.c_str(); }

const char* pqalg_status_name(pqalg_status status) {
  switch (status) {
    case PQALG_OK: return "OK";
    case PQALG_CHECK_FAILED: return "CHECK_FAILED";
    case PQALG_INVALID_INPUT: return "INVALID_INPUT";
    case PQALG_HYPOTHESIS_VIOLATION: return "HYPOTHESIS_VIOLATION";
    case PQALG_PRESENTATION_MISMATCH: return "PRESENTATION_MISMATCH";
    case PQALG_ASSOCIATIVITY_VIOLATION: return "ASSOCIATIVITY_VIOLATION";
    case PQALG_CONSTRUCTION_FAILURE: return "CONSTRUCTION_FAILURE";
    case PQALG_WITNESS_INVALID: return "WITNESS_INVALID";
    case PQALG_PRECONDITION_VIOLATION: return "PRECONDITION_VIOLATION";
    case PQALG_INTERNAL: return "INTERNAL";
    case PQALG_NULL_ARGUMENT: return "NULL_ARGUMENT";
  }
  return "UNKNOWN";
}

void pqalg_string_free(char* s) { std::free(s); }

pqalg_status pqalg_presentation_zn(int n, int vanishing, pqalg_presentation** out) {
  PQALG_REQUIRE(out);
  return guarded([&] { *out = new pqalg_presentation{pqalg::Presentation::zn(n, vanishing_of(vanishing))}; });
}

pqalg_status pqalg_presentation_family(const char* family, int m, pqalg_presentation** out) {
  PQALG_REQUIRE(family, out);
  return guarded([&] {
    pqalg::Family f = pqalg::parse_family(family);
    if (f == pqalg::Family::Zn) throw pqalg::ParameterError("use pqalg_presentation_zn for Zn");
    *out = new pqalg_presentation{pqalg::Presentation::family(f, m)};
  });
}

pqalg_status pqalg_presentation_from_json(const char* json, pqalg_presentation** out) {
  PQALG_REQUIRE(json, out);
  return guarded([&] { *out = new pqalg_presentation{pqalg::presentation_from_json(parse(json))}; });
}

pqalg_status pqalg_presentation_to_json(const pqalg_presentation* p, char** out) {
  PQALG_REQUIRE(p, out);
  return guarded([&] { *out = copy_string(pqalg::presentation_json(p->value).dump()); });
}

pqalg_status pqalg_presentation_dimension(const pqalg_presentation* p, size_t* out) {
  PQALG_REQUIRE(p, out);
  *out = p->value.dimension();
  return PQALG_OK;
}

void pqalg_presentation_free(pqalg_presentation* p) { delete p; }

pqalg_status pqalg_element_word(const pqalg_presentation* p, char start, int order, pqalg_element** out) {
  PQALG_REQUIRE(p, out);
  return guarded([&] {
    if (start != 'P' && start != 'Q') throw pqalg::ParameterError("start must be 'P' or 'Q'");
    pqalg::Word w(start == 'P' ? pqalg::Letter::P : pqalg::Letter::Q, order);
    *out = new pqalg_element{pqalg::Element::word(p->value, w)};
  });
}

pqalg_status pqalg_element_from_json(const char* json, pqalg_element** out) {
  PQALG_REQUIRE(json, out);
  return guarded([&] { *out = new pqalg_element{pqalg::element_from_json(parse(json))}; });
}

pqalg_status pqalg_element_to_json(const pqalg_element* a, char** out) {
  PQALG_REQUIRE(a, out);
  return guarded([&] { *out = copy_string(pqalg::element_json(a->value).dump()); });
}

pqalg_status pqalg_element_add(const pqalg_element* a, const pqalg_element* b, pqalg_element** out) {
  PQALG_REQUIRE(a, b, out);
  return guarded([&] { *out = new pqalg_element{a->value + b->value}; });
}

pqalg_status pqalg_element_mul(const pqalg_element* a, const pqalg_element* b, pqalg_element** out) {
  PQALG_REQUIRE(a, b, out);
  return guarded([&] { *out = new pqalg_element{pqalg::multiply(a->value, b->value)}; });
}

pqalg_status pqalg_element_scale(const pqalg_element* a, const char* c, pqalg_element** out) {
  PQALG_REQUIRE(a, c, out);
  return guarded([&] { *out = new pqalg_element{pqalg::parse_rational(c) * a->value}; });
}

pqalg_status pqalg_element_equal(const pqalg_element* a, const pqalg_element* b, int* out) {
  PQALG_REQUIRE(a, b, out);
  *out = a->value == b->value ? 1 : 0;
  return PQALG_OK;
}

pqalg_status pqalg_element_drazin(const pqalg_element* a, pqalg_element** inverse, int* index) {
  PQALG_REQUIRE(a, inverse, index);
  return guarded([&] {
    auto r = pqalg::algebra_drazin(a->value);
    if (!r.verified()) throw pqalg::Error(pqalg::ErrorCode::CheckFailed, "Drazin residuals do not vanish");
    *inverse = new pqalg_element{r.inverse};
    *index = r.index;
  });
}

void pqalg_element_free(pqalg_element* a) { delete a; }

pqalg_status pqalg_matrix_from_json(const char* json, pqalg_matrix** out) {
  PQALG_REQUIRE(json, out);
  return guarded([&] { *out = new pqalg_matrix{pqalg::matrix_from_json(parse(json))}; });
}

pqalg_status pqalg_matrix_to_json(const pqalg_matrix* m, char** out) {
  PQALG_REQUIRE(m, out);
  return guarded([&] { *out = copy_string(pqalg::matrix_json(m->value).dump()); });
}

pqalg_status pqalg_matrix_rank(const pqalg_matrix* m, size_t* out) {
  PQALG_REQUIRE(m, out);
  return guarded([&] { *out = pqalg::rank(m->value); });
}

pqalg_status pqalg_matrix_drazin(const pqalg_matrix* m, pqalg_matrix** inverse, int* index) {
  PQALG_REQUIRE(m, inverse, index);
  return guarded([&] {
    auto r = pqalg::matrix_drazin(m->value);
    if (!r.verified()) throw pqalg::Error(pqalg::ErrorCode::CheckFailed, "Drazin residuals do not vanish");
    *inverse = new pqalg_matrix{r.inverse};
    *index = r.index;
  });
}

void pqalg_matrix_free(pqalg_matrix* m) { delete m; }

pqalg_status pqalg_model_family(const char* family, int m, pqalg_model** out) {
  PQALG_REQUIRE(family, out);
  return guarded([&] { *out = new pqalg_model{pqalg::build_family_pair(pqalg::parse_family(family), m)}; });
}

pqalg_status pqalg_model_zn(int n, int ambient_unit, int vanishing, pqalg_model** out) {
  PQALG_REQUIRE(out);
  return guarded([&] {
    auto unit = ambient_unit ? pqalg::AmbientUnit::Included : pqalg::AmbientUnit::Excluded;
    *out = new pqalg_model{pqalg::build_zn_pair(n, unit, vanishing_of(vanishing))};
  });
}

pqalg_status pqalg_model_to_json(const pqalg_model* model, char** out) {
  PQALG_REQUIRE(model, out);
  return guarded([&] { *out = copy_string(pqalg::model_pair_json(model->value).dump()); });
}

pqalg_status pqalg_model_represent(const pqalg_model* model, const pqalg_element* a, pqalg_matrix** out) {
  PQALG_REQUIRE(model, a, out);
  return guarded([&] { *out = new pqalg_matrix{pqalg::represent(a->value, model->value)}; });
}

void pqalg_model_free(pqalg_model* model) { delete model; }

pqalg_status pqalg_run(const char* command, const char* request_json, pqalg_format format, char** report,
                       char** pretty_json, int* exit_code) {
  PQALG_REQUIRE(command, request_json, report, exit_code);
  return guarded([&] {
    pqalg::RunReport r;
    try {
      r = pqalg::run_command(command, parse(request_json));
    } catch (const pqalg::ParameterError& e) {
      r.command = command;
      r.inputs = nullptr;
      r.results = pqalg::Json::object();
      r.error = {{"code", "InvalidInput"}, {"message", e.what()}};
      r.exit_code = static_cast<int>(pqalg::ExitCode::InputError);
    }
    std::string text;
    switch (format) {
      case PQALG_FORMAT_JSON: text = r.to_json().dump() + "\n"; break;
      case PQALG_FORMAT_PRETTY: text = r.to_json().dump(2) + "\n"; break;
      default: text = r.to_text(); break;
    }
    *report = copy_string(text);
    if (pretty_json) *pretty_json = copy_string(r.to_json().dump(2) + "\n");
    *exit_code = r.exit_code;
  });
}

}  // extern "C"
