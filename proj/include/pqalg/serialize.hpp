#pragma once

#include <json.hpp>

#include "pqalg/classify.hpp"
#include "pqalg/closed_form.hpp"
#include "pqalg/coupling.hpp"
#include "pqalg/drazin.hpp"
#include "pqalg/element.hpp"
#include "pqalg/matrix.hpp"
#include "pqalg/models.hpp"
#include "pqalg/spectrum.hpp"
#include "pqalg/structure.hpp"

namespace pqalg {

using Json = nlohmann::ordered_json;

// Readers throw ParameterError on malformed input.

Json rational_json(const Rational& r);  // "a" or "a/b"
Rational rational_from_json(const Json& j);  // string or integer

Json word_json(const Word& w);
Word word_from_json(const Json& j);

// {"family":"F1","m":2} or {"family":"Zn","n":3,"vanishing":"QP"}
Json presentation_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// Presentation fields plus "coeffs":[{"start","order","num","den"}, ...]
Json element_json(const Element& a);
Element element_from_json(const Json& j);

Json matrix_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json polynomial_json(const Polynomial& f);  // coefficients from degree 0
Json multiplicity_json(const RootMultiplicity& m);  // integer or "INFINITE"

Json profile_json(const CoefficientProfile& p);
CoefficientProfile profile_from_json(const Json& j);

Json psi_bundle_json(const PsiBundle& b);
Json verdict_json(const Verdict& v);
Json residuals_json(const DrazinResiduals& r);
Json drazin_json(const DrazinResult<Element>& r);
Json drazin_json(const DrazinResult<RationalMatrix>& r);
Json closed_form_coefficients_json(const ClosedFormCoefficients& c);
Json relation_report_json(const RelationReport& r);
Json model_intent_json(const ModelIntent& intent);
Json model_pair_json(const ModelPair& pair);
Json structure_table_json(const StructureTable& t);
Json spectrum_json(const Spectrum& s);
Json coupling_witness_json(const CouplingWitness& w);

}  // namespace pqalg
