#include "pqalg/models.hpp"

#include <map>

#include "pqalg/error.hpp"

namespace pqalg {

std::string wtype_name(WType w) { return w == WType::W3 ? "W3" : "W4"; }

void LambdaSpec::validate() const {
  if (m < 2) throw ParameterError("lambda family needs m >= 2, got " + std::to_string(m));
  if (lambda == 1) throw ParameterError("lambda must differ from 1");
}

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> RelationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

namespace {

struct ChainSpec {
  int arrows;
  bool ends_with_b;  // last arrow goes from the B side to the A side
};

struct ZnBlocks {
  int a = 0;
  int b = 0;
  RationalMatrix bmat;  // a x b
  RationalMatrix cmat;  // b x a
};

ZnBlocks zn_blocks(int n, ZnVanishing vanishing) {
  const int k = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
  std::vector<ChainSpec> chains;
  if (n % 2 == 0) {
    chains.push_back({k - 2, true});
    chains.push_back({k - 2, false});
  } else {
    chains.push_back({k - 1, vanishing == ZnVanishing::QP});
  }
  // Vertex sides and positions inside their block.
  struct Vertex {
    bool a_side;
    int pos;
  };
  std::vector<std::vector<Vertex>> verts;
  ZnBlocks z;
  for (const auto& ch : chains) {
    std::vector<Vertex> vs;
    for (int j = 0; j <= ch.arrows; ++j) {
      bool same_as_end = (ch.arrows - j) % 2 == 0;
      bool a_side = same_as_end == ch.ends_with_b;
      vs.push_back({a_side, a_side ? z.a++ : z.b++});
    }
    verts.push_back(std::move(vs));
  }
  z.bmat = RationalMatrix(z.a, z.b);
  z.cmat = RationalMatrix(z.b, z.a);
  for (const auto& vs : verts)
    for (std::size_t j = 0; j + 1 < vs.size(); ++j) {
      if (!vs[j].a_side)
        z.bmat(vs[j + 1].pos, vs[j].pos) = 1;
      else
        z.cmat(vs[j + 1].pos, vs[j].pos) = 1;
    }
  return z;
}

RationalMatrix slice(const RationalMatrix& m, std::size_t off, std::size_t size) {
  RationalMatrix s(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) s(r, c) = m(off + r, off + c);
  return s;
}

void require_verified(const ModelPair& pair) {
  RelationReport report = verify_relations(pair);
  if (!report.all_pass()) {
    std::string msg = pair.label + " failed:";
    for (const auto& f : report.failures()) msg += " [" + f + "]";
    throw ConstructionFailure(msg);
  }
}

// Images of (P,1..max) and (Q,1..max).
struct WordImages {
  std::vector<RationalMatrix> p_words;
  std::vector<RationalMatrix> q_words;
  const RationalMatrix& operator()(const Word& w) const {
    return (w.start == Letter::P ? p_words : q_words).at(static_cast<std::size_t>(w.order - 1));
  }
};

WordImages word_images(const ModelPair& pair, int max_order) {
  WordImages im;
  for (Letter s : {Letter::P, Letter::Q}) {
    auto& v = s == Letter::P ? im.p_words : im.q_words;
    RationalMatrix cur = s == Letter::P ? pair.p : pair.q;
    v.push_back(cur);
    Letter next = other(s);
    for (int o = 2; o <= max_order; ++o) {
      cur = cur * (next == Letter::P ? pair.p : pair.q);
      v.push_back(cur);
      next = other(next);
    }
  }
  return im;
}

void add_check(RelationReport& r, std::string name, bool pass) { r.checks.push_back({std::move(name), pass}); }

void check_idempotent(RelationReport& r, const ModelPair& pair) {
  add_check(r, "P^2 = P", pair.p * pair.p == pair.p);
  add_check(r, "Q^2 = Q", pair.q * pair.q == pair.q);
}

std::string word_label(const Word& w) { return w.to_string(); }

void verify_zn(RelationReport& r, const ModelPair& pair, const Presentation& pres) {
  const int k = pres.zn_k();
  WordImages im = word_images(pair, k + 1);
  for (int o = 1; o <= k + 1; ++o)
    for (Letter s : {Letter::P, Letter::Q}) {
      Word w(s, o);
      bool vanishes = pres.zn_word_vanishes(w);
      bool zero = im(w).is_zero();
      add_check(r, word_label(w) + (vanishes ? " = 0" : " != 0"), zero == vanishes);
    }
  std::vector<RationalMatrix> basis;
  for (const Word& w : pres.basis()) basis.push_back(im(w));
  add_check(r, "basis images independent", span_rank(basis) == pres.dimension());
  RationalMatrix unit(pair.size(), pair.size());
  for (const Word& w : pres.basis()) unit += Rational(w.order % 2 == 1 ? 1 : -1) * im(w);
  if (pair.contains_ambient_unit) {
    add_check(r, "internal unit equals ambient identity", unit == RationalMatrix::identity(pair.size()));
  } else {
    basis.push_back(RationalMatrix::identity(pair.size()));
    add_check(r, "ambient identity outside the span", span_rank(basis) == pres.dimension() + 1);
    add_check(r, "internal unit acts as unit on P and Q", unit * pair.p == pair.p && pair.p * unit == pair.p &&
                                                           unit * pair.q == pair.q && pair.q * unit == pair.q);
  }
}

void verify_family(RelationReport& r, const ModelPair& pair, const Presentation& pres) {
  const int m = pres.parameter();
  const Family f = pres.family();
  WordImages im = word_images(pair, 2 * m + 2);
  auto W = [&](Letter s, int o) -> const RationalMatrix& { return im(Word(s, o)); };
  const Letter P = Letter::P, Q = Letter::Q;

  add_check(r, "(pq)^m = (pq)^(m-1)", W(P, 2 * m) == W(P, 2 * m - 2));
  bool qp_collapse = W(Q, 2 * m) == W(Q, 2 * m - 2);
  bool expect_qp = f == Family::F1 || f == Family::F3;
  add_check(r, expect_qp ? "(qp)^m = (qp)^(m-1)" : "(qp)^m != (qp)^(m-1)", qp_collapse == expect_qp);

  bool rel1 = W(Q, 2 * m - 2) + W(P, 2 * m - 2) == W(Q, 2 * m - 1) + W(P, 2 * m - 1);
  bool rel2 = W(Q, 2 * m) + W(P, 2 * m - 2) == W(Q, 2 * m - 1) + W(P, 2 * m - 1);
  const std::string r1 = "(qp)^(m-1) + (pq)^(m-1) = (qp)^(m-1)q + (pq)^(m-1)p";
  const std::string r2 = "(qp)^m + (pq)^(m-1) = (qp)^(m-1)q + (pq)^(m-1)p";
  auto negate = [](std::string s) { return s.replace(s.find(" = "), 3, " != "); };
  switch (f) {
    case Family::F1: add_check(r, r1, rel1); break;
    case Family::F2:
      add_check(r, r2, rel2);
      add_check(r, negate(r1), !rel1);
      break;
    case Family::F3:
    case Family::F4:
      add_check(r, negate(r1), !rel1);
      add_check(r, negate(r2), !rel2);
      break;
    case Family::Zn: break;
  }
  add_check(r, "(pq)^(m-2)p != (pq)^(m-1)p", !(W(P, 2 * m - 3) == W(P, 2 * m - 1)));

  std::vector<RationalMatrix> basis;
  for (const Word& w : pres.basis()) basis.push_back(im(w));
  add_check(r, "basis images independent", span_rank(basis) == pres.dimension());

  bool coupled = false;
  for (int o = 1; o <= 2 * m + 1 && !coupled; ++o)
    for (Letter s : {P, Q})
      for (int o2 = o; o2 <= o + 1; ++o2)
        for (Letter s2 : {P, Q}) {
          if (o2 == o && s2 <= s) continue;
          if (W(s, o) == W(s2, o2)) coupled = true;
        }
  add_check(r, "not tightly coupled", !coupled);
}

void verify_w(RelationReport& r, const ModelPair& pair, WType w) {
  const RationalMatrix& p = pair.p;
  const RationalMatrix& q = pair.q;
  RationalMatrix pq = p * q, qp = q * p;
  add_check(r, "pqp = p", pq * p == p);
  add_check(r, "qpq = q", qp * q == q);
  bool sum = p + q == pq + qp;
  add_check(r, w == WType::W3 ? "p + q = pq + qp" : "p + q != pq + qp", sum == (w == WType::W3));
  std::vector<RationalMatrix> words{p, q, pq, qp};
  bool distinct = true;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (words[i] == words[j]) distinct = false;
  add_check(r, "p, q, pq, qp pairwise distinct", distinct);
  add_check(r, "span dimension " + std::string(w == WType::W3 ? "3" : "4"),
            span_rank(words) == (w == WType::W3 ? 3u : 4u));
}

void verify_lambda(RelationReport& r, const ModelPair& pair, const LambdaSpec& spec) {
  RationalMatrix pq = pair.p * pair.q;
  RationalMatrix top = pq.pow(static_cast<unsigned>(spec.m - 1));
  add_check(r, "lambda != 1", spec.lambda != 1);
  add_check(r, "lambda (pq)^(m-1) = (pq)^m", spec.lambda * top == top * pq);
  add_check(r, "(pq)^(m-1) != 0", !top.is_zero());
  if (spec.m > 2) {
    RationalMatrix below = pq.pow(static_cast<unsigned>(spec.m - 2));
    add_check(r, "(pq)^(m-2) not proportional to (pq)^(m-1)", span_rank({below, top}) == 2);
  }
  if (!pair.contains_ambient_unit) {
    WordImages im = word_images(pair, 2 * spec.m + 1);
    std::vector<RationalMatrix> fam;
    for (int o = 1; o <= 2 * spec.m + 1; ++o)
      for (Letter s : {Letter::P, Letter::Q}) fam.push_back(im(Word(s, o)));
    std::size_t base = span_rank(fam);
    fam.push_back(RationalMatrix::identity(pair.size()));
    add_check(r, "ambient identity outside the span", span_rank(fam) == base + 1);
  }
}

}  // namespace

ModelPair build_zn_pair(int n, AmbientUnit unit, ZnVanishing vanishing) {
  Presentation pres = Presentation::zn(n, vanishing);
  ZnBlocks z = zn_blocks(n, pres.vanishing());
  const std::size_t a = z.a, b = z.b;
  const bool extra = unit == AmbientUnit::Excluded;
  const std::size_t size = a + b + (extra ? 1 : 0);
  RationalMatrix p(size, size), q(size, size);
  for (std::size_t i = 0; i < a; ++i) p(i, i) = 1;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) p(i, a + j) = z.bmat(i, j);
  for (std::size_t i = 0; i < b; ++i) q(a + i, a + i) = 1;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j) q(a + i, j) = z.cmat(i, j);
  if (extra) {
    for (std::size_t i = 0; i < a; ++i) p(i, a + b) = 1;
    for (std::size_t i = 0; i < b; ++i) q(a + i, a + b) = 1;
  }
  ModelPair pair{p, q, pres, !extra, pres.name() + (extra ? " without ambient unit" : " with ambient unit")};
  require_verified(pair);
  return pair;
}

ModelPair build_example_z3() {
  ModelPair pair{RationalMatrix::from_ints({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                 RationalMatrix::from_ints({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}), Presentation::zn(3, ZnVanishing::QP),
                 false, "Z3 example pair"};
  require_verified(pair);
  return pair;
}

ModelPair build_w_pair(WType w) {
  ModelPair pair{{}, {}, w, false, wtype_name(w) + " pair"};
  if (w == WType::W3) {
    pair.p = RationalMatrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    pair.q = RationalMatrix::from_ints({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
  } else {
    pair.p = RationalMatrix::from_ints({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    pair.q = RationalMatrix::from_ints({{1, 1, 0}, {0, 0, 0}, {1, 1, 0}});
  }
  require_verified(pair);
  return pair;
}

ModelPair build_z_plus_w_pair(int n, ZnVanishing vanishing, WType w) {
  ModelPair z = build_zn_pair(n, AmbientUnit::Included, vanishing);
  ModelPair wp = build_w_pair(w);
  const Presentation& zp = std::get<Presentation>(z.intended);
  ModelPair pair{block_diagonal({z.p, wp.p}), block_diagonal({z.q, wp.q}), ZPlusW{zp, w}, false,
                 zp.name() + " + " + wtype_name(w)};
  require_verified(pair);
  return pair;
}

ModelPair build_family_pair(Family f, int m) {
  Presentation pres = Presentation::family(f, m);
  const bool short_z = f == Family::F1 || f == Family::F3;
  const int n = short_z ? 4 * m - 6 : 4 * m - 5;
  const ZnVanishing v = short_z ? ZnVanishing::QP : ZnVanishing::PQ;
  const WType w = (f == Family::F1 || f == Family::F2) ? WType::W3 : WType::W4;
  ModelPair z = build_zn_pair(n, AmbientUnit::Included, v);
  ModelPair wp = build_w_pair(w);
  ModelPair pair{block_diagonal({z.p, wp.p}), block_diagonal({z.q, wp.q}), pres, false,
                 pres.name() + " as " + std::get<Presentation>(z.intended).name() + " + " + wtype_name(w)};
  require_verified(pair);
  return pair;
}

RationalMatrix lambda_cell_p() { return RationalMatrix::from_ints({{1, 0}, {0, 0}}); }

RationalMatrix lambda_cell_q(const Rational& lambda) {
  RationalMatrix q(2, 2);
  q(0, 0) = lambda;
  q(0, 1) = 1;
  q(1, 0) = lambda * (1 - lambda);
  q(1, 1) = 1 - lambda;
  return q;
}

ModelPair build_lambda_pair(const LambdaSpec& spec, AmbientUnit unit) {
  spec.validate();
  std::vector<RationalMatrix> ps{lambda_cell_p()}, qs{lambda_cell_q(spec.lambda)};
  if (spec.m > 2) {
    // lambda = 0 only asks for (pq)^m = 0, so the tail keeps (pq)^(m-1).
    const int n = spec.degenerate() ? 4 * spec.m - 4 : 4 * spec.m - 6;
    ModelPair tail = build_zn_pair(n, AmbientUnit::Included, ZnVanishing::QP);
    ps.push_back(tail.p);
    qs.push_back(tail.q);
  }
  if (unit == AmbientUnit::Excluded) {
    ps.emplace_back(1, 1);
    qs.emplace_back(1, 1);
  }
  ModelPair pair{block_diagonal(ps), block_diagonal(qs), spec, unit == AmbientUnit::Included,
                 "lambda pair m=" + std::to_string(spec.m) + " lambda=" + to_string(spec.lambda) +
                     (spec.degenerate() ? " (degenerate)" : "")};
  require_verified(pair);
  return pair;
}

RationalMatrix word_image(const ModelPair& pair, const Word& w) {
  RationalMatrix cur = w.start == Letter::P ? pair.p : pair.q;
  Letter next = other(w.start);
  for (int o = 2; o <= w.order; ++o) {
    cur = cur * (next == Letter::P ? pair.p : pair.q);
    next = other(next);
  }
  return cur;
}

RationalMatrix represent(const Element& a, const ModelPair& pair) {
  const auto* pres = std::get_if<Presentation>(&pair.intended);
  if (!pres || !(*pres == a.presentation()))
    throw PresentationMismatch("model " + pair.label + " does not realise " + a.presentation().name());
  int max_order = 1;
  for (const auto& [w, c] : a.coefficients()) max_order = std::max(max_order, w.order);
  WordImages im = word_images(pair, max_order);
  RationalMatrix out(pair.size(), pair.size());
  for (const auto& [w, c] : a.coefficients()) out += c * im(w);
  return out;
}

RelationReport verify_relations(const ModelPair& pair) {
  RelationReport r;
  if (!pair.p.is_square() || pair.p.rows() != pair.q.rows() || pair.p.cols() != pair.q.cols()) {
    add_check(r, "P and Q square of equal size", false);
    return r;
  }
  check_idempotent(r, pair);
  if (const auto* pres = std::get_if<Presentation>(&pair.intended)) {
    if (pres->is_zn())
      verify_zn(r, pair, *pres);
    else
      verify_family(r, pair, *pres);
  } else if (const auto* spec = std::get_if<LambdaSpec>(&pair.intended)) {
    verify_lambda(r, pair, *spec);
  } else if (const auto* w = std::get_if<WType>(&pair.intended)) {
    verify_w(r, pair, *w);
  } else {
    const auto& zw = std::get<ZPlusW>(pair.intended);
    std::size_t wsize = zw.w == WType::W3 ? 4 : 3;
    std::size_t zsize = pair.size() - wsize;
    ModelPair z{slice(pair.p, 0, zsize), slice(pair.q, 0, zsize), zw.z, true, "Z summand"};
    ModelPair ws{slice(pair.p, zsize, wsize), slice(pair.q, zsize, wsize), zw.w, false, "W summand"};
    add_check(r, "block diagonal",
              block_diagonal({z.p, ws.p}) == pair.p && block_diagonal({z.q, ws.q}) == pair.q);
    for (auto c : verify_relations(z).checks) add_check(r, "Z: " + c.name, c.pass);
    for (auto c : verify_relations(ws).checks) add_check(r, "W: " + c.name, c.pass);
  }
  return r;
}

}  // namespace pqalg
