#include "pqalg/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "pqalg/drazin.hpp"
#include "pqalg/error.hpp"
#include "pqalg/spectrum.hpp"

namespace pqalg {

std::string ClassifierSetting::name() const {
  std::string base;
  switch (kind) {
    case SettingKind::ZmUnit: base = "Zm+unit"; break;
    case SettingKind::ZmNoUnit: base = "Zm"; break;
    case SettingKind::ZmW3: base = "Zm+W3"; break;
    case SettingKind::ZmW4: base = "Zm+W4"; break;
  }
  return base + "(m=" + std::to_string(m) + "," + vanishing_name(vanishing) + ")";
}

Presentation ClassifierSetting::z_presentation() const { return Presentation::zn(m, vanishing); }

const ModelPair& setting_model(const ClassifierSetting& s) {
  using Key = std::tuple<int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<ModelPair>> cache;
  const Key key{static_cast<int>(s.kind), s.m, static_cast<int>(s.vanishing)};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto build = [&s]() {
    switch (s.kind) {
      case SettingKind::ZmUnit: return build_zn_pair(s.m, AmbientUnit::Included, s.vanishing);
      case SettingKind::ZmNoUnit: return build_zn_pair(s.m, AmbientUnit::Excluded, s.vanishing);
      case SettingKind::ZmW3: return build_z_plus_w_pair(s.m, s.vanishing, WType::W3);
      case SettingKind::ZmW4: break;
    }
    return build_z_plus_w_pair(s.m, s.vanishing, WType::W4);
  };
  return *cache.emplace(key, std::make_unique<ModelPair>(build())).first->second;
}

RationalMatrix represent_profile(const CoefficientProfile& profile, const ModelPair& pair) {
  RationalMatrix out(pair.size(), pair.size());
  RationalMatrix wp = pair.p, wq = pair.q;  // current P- and Q-started words
  for (std::size_t i = 1; i <= profile.length(); ++i) {
    if (i > 1) {
      const bool odd = i % 2 == 1;
      wp = wp * (odd ? pair.p : pair.q);
      wq = wq * (odd ? pair.q : pair.p);
    }
    if (!is_zero(profile.x_at(i))) out += profile.x_at(i) * wp;
    if (!is_zero(profile.y_at(i))) out += profile.y_at(i) * wq;
  }
  return out;
}

namespace {

RationalMatrix profile_matrix(const CoefficientProfile& profile, const ClassifierSetting& s) {
  if (!s.has_w_summand()) element_of(profile, s.z_presentation());
  return represent_profile(profile, setting_model(s));
}

}  // namespace

int oracle_index(const CoefficientProfile& profile, const ClassifierSetting& s) {
  return std::max(matrix_drazin_index(profile_matrix(profile, s)), 1);
}

Verdict oracle_verdict(const CoefficientProfile& profile, const ClassifierSetting& s) {
  const RationalMatrix a = profile_matrix(profile, s);
  Verdict v;
  v.rule_fired = "oracle";
  if (a.is_zero()) {
    v.kind = VerdictKind::Zero;
    v.spectrum = {Rational(0)};
    return v;
  }
  v.spectrum = spectrum_oracle(a).eigenvalues;
  const std::size_t r1 = rank(a);
  if (r1 == a.rows()) {
    v.kind = VerdictKind::Invertible;
    return v;
  }
  const RationalMatrix a2 = a * a;
  if (rank(a2) == r1) {
    v.kind = VerdictKind::ProperlyGroupInvertible;
    return v;
  }
  const int k = matrix_drazin_index(a);
  v.index = k;
  v.kind = a.pow(static_cast<unsigned>(k)).is_zero() ? VerdictKind::Nilpotent : VerdictKind::DrazinOnly;
  return v;
}

Verdict theorem_verdict(const CoefficientProfile& profile, const ClassifierSetting& s) {
  switch (s.kind) {
    case SettingKind::ZmUnit: return classify_zm(profile, s.m, true, s.vanishing);
    case SettingKind::ZmNoUnit: return classify_zm(profile, s.m, false, s.vanishing);
    case SettingKind::ZmW3: return classify_zm_w3(profile, s.m, s.vanishing);
    case SettingKind::ZmW4: return classify_zm_w4(profile, s.m, s.vanishing);
  }
  throw Error(ErrorCode::Internal, "unknown classifier setting");
}

}  // namespace pqalg
