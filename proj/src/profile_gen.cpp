#include "pqalg/profile_gen.hpp"

#include "pqalg/error.hpp"
#include "pqalg/matrix.hpp"

namespace pqalg {

std::string profile_mode_name(ProfileMode m) {
  switch (m) {
    case ProfileMode::Random: return "random";
    case ProfileMode::Zero: return "zero";
    case ProfileMode::Nilpotent: return "nilpotent";
    case ProfileMode::OneSided: return "one-sided";
    case ProfileMode::Multiplicity: return "multiplicity";
    case ProfileMode::WPartZero: return "w-part-zero";
    case ProfileMode::WProduct: return "w-product";
    case ProfileMode::ZPartZero: return "z-part-zero";
  }
  return "?";
}

std::size_t profile_length(const ClassifierSetting& s) {
  const std::size_t k = static_cast<std::size_t>(s.z_presentation().zn_k());
  return s.has_w_summand() ? k + 2 : k;
}

int ProfileGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational ProfileGenerator::small_rational(bool nonzero) {
  for (;;) {
    int num = uniform(-3, 3);
    if (nonzero && num == 0) continue;
    int den = uniform(0, 4) == 0 ? uniform(2, 3) : 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
}

Element ProfileGenerator::random_element(const Presentation& pres, double density) {
  Element e(pres);
  std::bernoulli_distribution keep(density);
  for (const Word& w : pres.basis())
    if (keep(rng_)) e.add_term(w, small_rational(true));
  return e;
}

std::optional<std::vector<Rational>> ProfileGenerator::solve(const std::vector<std::optional<Rational>>& pinned,
                                                             const std::vector<std::vector<Rational>>& rows,
                                                             const std::vector<Rational>& rhs) {
  const std::size_t n = pinned.size();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!pinned[i]) free.push_back(i);
  RationalMatrix aug(rows.size(), free.size() + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational b = rhs[r];
    for (std::size_t i = 0; i < n; ++i)
      if (pinned[i]) b -= rows[r][i] * *pinned[i];
    for (std::size_t j = 0; j < free.size(); ++j) aug(r, j) = rows[r][free[j]];
    aug(r, free.size()) = b;
  }
  RowEchelon e = rref(aug);
  std::vector<bool> is_pivot(free.size() + 1, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  if (is_pivot[free.size()]) return std::nullopt;

  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (pinned[i]) v[i] = *pinned[i];
  for (std::size_t j = 0; j < free.size(); ++j)
    if (!is_pivot[j]) v[free[j]] = uniform(0, 2) == 0 ? Rational(0) : small_rational();
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t pc = e.pivots[r];
    Rational val = e.reduced(r, free.size());
    for (std::size_t j = pc + 1; j < free.size(); ++j)
      if (!is_pivot[j]) val -= e.reduced(r, j) * v[free[j]];
    v[free[pc]] = val;
  }
  return v;
}

namespace {

CoefficientProfile from_coords(const std::vector<Rational>& v, std::size_t len) {
  CoefficientProfile p;
  p.x.assign(v.begin(), v.begin() + static_cast<long>(len));
  p.y.assign(v.begin() + static_cast<long>(len), v.end());
  return p;
}

std::vector<Rational> unit_row(std::size_t n, const std::vector<std::pair<std::size_t, int>>& entries) {
  std::vector<Rational> row(n);
  for (auto [i, c] : entries) row[i] += c;
  return row;
}

}  // namespace

ProfileMode ProfileGenerator::pick_mode(const ClassifierSetting& s) {
  int r = uniform(0, 99);
  if (r < 2) return ProfileMode::Zero;
  if (!s.has_w_summand()) {
    if (r < 30) return ProfileMode::Random;
    if (r < 45) return ProfileMode::Nilpotent;
    if (r < 65) return ProfileMode::OneSided;
    return ProfileMode::Multiplicity;
  }
  if (r < 17) return ProfileMode::Random;
  if (r < 27) return ProfileMode::Nilpotent;
  if (r < 40) return ProfileMode::OneSided;
  if (r < 55) return ProfileMode::Multiplicity;
  if (r < 72) return ProfileMode::WPartZero;
  if (r < 90) return ProfileMode::WProduct;
  return ProfileMode::ZPartZero;
}

CoefficientProfile ProfileGenerator::generate(const ClassifierSetting& s, ProfileMode mode,
                                              std::optional<bool> force_y1_zero) {
  const Presentation z = s.z_presentation();
  const std::size_t len = profile_length(s);
  const std::size_t n = 2 * len;
  auto xi = [](std::size_t i) { return i - 1; };
  auto yi = [len](std::size_t i) { return len + i - 1; };
  auto word_of = [len](std::size_t c) {
    return c < len ? Word(Letter::P, static_cast<int>(c + 1)) : Word(Letter::Q, static_cast<int>(c - len + 1));
  };

  // Z-only settings cannot carry weight past the horizon.
  std::vector<std::optional<Rational>> pinned(n);
  if (!s.has_w_summand())
    for (std::size_t c = 0; c < n; ++c)
      if (!z.is_basis_word(word_of(c))) pinned[c] = Rational(0);

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  auto add_row = [&](std::vector<Rational> row, Rational b) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  };

  const bool one_sided = mode == ProfileMode::OneSided || mode == ProfileMode::Multiplicity ||
                         ((mode == ProfileMode::WPartZero || mode == ProfileMode::WProduct) && uniform(0, 1) == 0);
  bool y1_zero = uniform(0, 1) == 0;
  if (force_y1_zero) y1_zero = *force_y1_zero;

  switch (mode) {
    case ProfileMode::Zero: return from_coords(std::vector<Rational>(n), len);
    case ProfileMode::Random: break;
    case ProfileMode::Nilpotent:
      pinned[xi(1)] = Rational(0);
      pinned[yi(1)] = Rational(0);
      break;
    case ProfileMode::ZPartZero:
      for (std::size_t c = 0; c < n; ++c)
        if (z.is_basis_word(word_of(c))) pinned[c] = Rational(0);
      break;
    default: break;
  }
  if (pinned[yi(1)]) y1_zero = true;  // Z_1 under (qp)_k = 0
  if (pinned[xi(1)]) y1_zero = false;
  if (one_sided) {
    pinned[y1_zero ? yi(1) : xi(1)] = Rational(0);
    pinned[y1_zero ? xi(1) : yi(1)] = small_rational(true);
  } else if (mode == ProfileMode::WPartZero || mode == ProfileMode::WProduct) {
    pinned[xi(1)] = small_rational(true);
    pinned[yi(1)] = small_rational(true);
  }

  const bool w3 = s.kind == SettingKind::ZmW3;
  if (mode == ProfileMode::WPartZero) {
    std::vector<std::pair<std::size_t, int>> xo, xe, yo, ye;
    for (std::size_t i = 1; i <= len; ++i) {
      (i % 2 ? xo : xe).push_back({xi(i), 1});
      (i % 2 ? yo : ye).push_back({yi(i), 1});
    }
    auto join = [](auto a, const auto& b, int sign) {
      for (auto [i, c] : b) a.push_back({i, sign * c});
      return a;
    };
    if (w3) {
      add_row(unit_row(n, join(xo, ye, 1)), 0);
      add_row(unit_row(n, join(xe, ye, -1)), 0);
      add_row(unit_row(n, join(yo, ye, 1)), 0);
    } else {
      for (const auto* g : {&xo, &xe, &yo, &ye}) add_row(unit_row(n, *g), 0);
    }
  }

  // With x (or y) fixed, psi is linear in the other side: pin the fixed side
  // first, then ask for the low psi coefficients to vanish.
  if (mode == ProfileMode::Multiplicity || (one_sided && uniform(0, 1) == 0)) {
    const int thr = psi_threshold(s.m, z.vanishing(), y1_zero);
    const int target = std::max(0, thr + uniform(-1, 1));
    const std::size_t fixed_lo = y1_zero ? 0 : len, fixed_hi = y1_zero ? len : n;
    for (std::size_t c = fixed_lo; c < fixed_hi; ++c)
      if (!pinned[c] && (s.has_w_summand() ? z.is_basis_word(word_of(c)) : true))
        pinned[c] = uniform(0, 2) == 0 ? Rational(0) : small_rational();
    for (std::size_t c = fixed_lo; c < fixed_hi; ++c)
      if (!pinned[c]) pinned[c] = small_rational();
    // Columns of the linear map: psi coefficients of each unit vector, computed
    // on the Z part only.
    std::vector<Rational> base(n);
    for (std::size_t c = fixed_lo; c < fixed_hi; ++c)
      if (z.is_basis_word(word_of(c))) base[c] = *pinned[c];
    std::vector<std::vector<Rational>> cols(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (c >= fixed_lo && c < fixed_hi) continue;
      if (!z.is_basis_word(word_of(c))) continue;
      std::vector<Rational> v = base;
      v[c] = 1;
      Polynomial psi = psi_bundle(from_coords(v, len)).psi;
      cols[c].resize(static_cast<std::size_t>(target));
      for (int d = 0; d < target; ++d) cols[c][d] = psi.coeff(static_cast<std::size_t>(d));
    }
    for (int d = 0; d < target; ++d) {
      std::vector<Rational> row(n);
      for (std::size_t c = 0; c < n; ++c)
        if (!cols[c].empty()) row[c] = cols[c][d];
      add_row(std::move(row), 0);
    }
  }

  auto v = solve(pinned, rows, rhs);
  if (!v) {
    rows.clear();
    rhs.clear();
    v = solve(pinned, rows, rhs);
  }
  CoefficientProfile p = from_coords(*v, len);

  if (mode == ProfileMode::WProduct) {
    // Adjust one odd y slot (never y1) so that x_odd y_odd = x_even y_even.
    Rational xo, xe, yo, ye;
    for (std::size_t i = 1; i <= len; ++i) {
      (i % 2 ? xo : xe) += p.x_at(i);
      (i % 2 ? yo : ye) += p.y_at(i);
    }
    for (std::size_t i = len; i >= 3; --i) {
      if (i % 2 == 0) continue;
      if (!is_zero(xo)) {
        Rational target = xe * ye / xo;
        p.y[i - 1] += target - yo;
      } else {
        // x_odd = 0: need x_even y_even = 0.
        Rational shift = -xe;
        for (std::size_t j = len; j >= 2; --j)
          if (j % 2 == 0) {
            p.x[j - 1] += shift;
            break;
          }
      }
      break;
    }
  }
  return p;
}

}  // namespace pqalg
