#pragma once

#include <string>

#include "pqalg/classify.hpp"
#include "pqalg/matrix.hpp"
#include "pqalg/models.hpp"

namespace pqalg {

enum class SettingKind { ZmUnit, ZmNoUnit, ZmW3, ZmW4 };

struct ClassifierSetting {
  SettingKind kind;
  int m;
  ZnVanishing vanishing = ZnVanishing::QP;

  std::string name() const;
  Presentation z_presentation() const;
  bool has_w_summand() const { return kind == SettingKind::ZmW3 || kind == SettingKind::ZmW4; }
};

// Verified matrix model for the setting (memoised).
const ModelPair& setting_model(const ClassifierSetting& s);

RationalMatrix represent_profile(const CoefficientProfile& profile, const ModelPair& pair);

// Rank-based classification in the matrix model; never consults a theorem.
Verdict oracle_verdict(const CoefficientProfile& profile, const ClassifierSetting& s);
int oracle_index(const CoefficientProfile& profile, const ClassifierSetting& s);

// Dispatch to the theorem classifier for the setting.
Verdict theorem_verdict(const CoefficientProfile& profile, const ClassifierSetting& s);

}  // namespace pqalg
