#include "orbw/schwartz.hpp"

#include <algorithm>

namespace orbw {

int Ambient::dim() const {
  switch (kind) {
    case SpaceKind::tilde_gl:
      return n * n + 2 * n;
    case SpaceKind::gl_next:
      return (n + 1) * (n + 1);
    case SpaceKind::vec:
      return n;
    case SpaceKind::u_tilde:
      return 3;  // n = 1 only
  }
  return 0;
}

std::vector<int> Ambient::block_scales(const BaseField& F) const {
  std::vector<int> b(static_cast<size_t>(dim()), 0);
  if (kind == SpaceKind::u_tilde) {
    int vb = static_cast<int>(val_p(2 * beta, F.p));
    b[1] = vb;
    b[2] = vb;
  }
  return b;
}

std::vector<Rat> flatten(const TildeGl& X) {
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(X.n) * X.n + 2 * X.n);
  for (const auto& a : X.A.e) out.push_back(a);
  for (const auto& a : X.v) out.push_back(a);
  for (const auto& a : X.u) out.push_back(a);
  return out;
}

TildeGl unflatten_tilde(int n, const std::vector<Rat>& x) {
  TildeGl X = TildeGl::zero(n);
  size_t idx = 0;
  for (auto& a : X.A.e) a = x[idx++];
  for (auto& a : X.v) a = x[idx++];
  for (auto& a : X.u) a = x[idx++];
  return X;
}

LatticeCosetFunction LatticeCosetFunction::zero(const Ambient& amb) { return {amb, {}}; }

LatticeCosetFunction LatticeCosetFunction::std_lattice(const Ambient& amb, int depth) {
  CosetTerm t;
  t.weight = 1;
  t.center.assign(static_cast<size_t>(amb.dim()), Rat(0));
  t.depths.assign(static_cast<size_t>(amb.dim()), depth);
  return {amb, {t}};
}

LatticeCosetFunction LatticeCosetFunction::indicator(const Ambient& amb,
                                                     const std::vector<Rat>& center, int depth,
                                                     const Rat& weight) {
  if (static_cast<int>(center.size()) != amb.dim()) throw std::invalid_argument("bad center size");
  CosetTerm t;
  t.weight = weight;
  t.center = center;
  t.depths.assign(static_cast<size_t>(amb.dim()), depth);
  return {amb, {t}};
}

bool LatticeCosetFunction::plain() const {
  for (const auto& t : terms)
    if (!t.phase.empty()) return false;
  return true;
}

Rat pairing(const BaseField& F, const Ambient& amb, const std::vector<Rat>& x,
            const std::vector<Rat>& y) {
  switch (amb.kind) {
    case SpaceKind::vec: {
      Rat acc(0);
      for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
      return acc;
    }
    case SpaceKind::tilde_gl: {
      int n = amb.n;
      Rat acc(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += x[static_cast<size_t>(i * n + j)] * y[static_cast<size_t>(j * n + i)];
      size_t voff = static_cast<size_t>(n) * n, uoff = voff + n;
      for (int i = 0; i < n; ++i) {
        acc += x[uoff + i] * y[voff + i];  // u_1 v_2
        acc += y[uoff + i] * x[voff + i];  // u_2 v_1
      }
      return acc;
    }
    case SpaceKind::gl_next: {
      int m = amb.n + 1;
      Rat acc(0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          acc += x[static_cast<size_t>(i * m + j)] * y[static_cast<size_t>(j * m + i)];
      return acc;
    }
    case SpaceKind::u_tilde: {
      // a b + Tr_{E/F}(beta v w^c)
      Rat acc = x[0] * y[0];
      if (F.inert()) {
        acc += amb.beta * 2 * (x[1] * y[1] - Rat(F.d) * x[2] * y[2]);
      } else {
        acc += amb.beta * (x[1] * y[2] + x[2] * y[1]);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Rat reduce_mod_pm(const Rat& c, const BaseField& F, int m) {
  if (c == 0) return Rat(0);
  long v = F.val(c);
  if (v >= m) return Rat(0);
  // c = p^v * w with w a p-unit; residue of w mod p^{m-v} as an integer.
  Rat w = c / pow_p(F.p, v);
  Int num(w.get_num()), den(w.get_den());
  Int mod = 1;
  for (long i = 0; i < m - v; ++i) mod *= F.p;
  Int r = num % mod * mod_inverse(((den % mod) + mod) % mod, mod) % mod;
  if (r < 0) r += mod;
  return Rat(r) * pow_p(F.p, v);
}

static bool rational_phase_shift_ok(const BaseField& F, const Ambient& amb,
                                    const std::vector<Rat>& delta, const std::vector<Rat>& center) {
  return F.val(pairing(F, amb, delta, center)) >= 0;
}

void canonicalize(const BaseField& F, LatticeCosetFunction& f) {
  std::vector<CosetTerm> out;
  for (auto& t : f.terms) {
    if (t.weight == 0) continue;
    CosetTerm r = t;
    for (size_t i = 0; i < r.center.size(); ++i)
      r.center[i] = reduce_mod_pm(r.center[i], F, r.depths[static_cast<size_t>(i)]);
    if (!r.phase.empty()) {
      // Reduce the phase mod the dual lattice when the induced root of unity is 1.
      std::vector<Rat> reduced(r.phase.size());
      auto scales = f.ambient.block_scales(F);
      bool all_zero = true;
      for (size_t i = 0; i < r.phase.size(); ++i) {
        // The phase matters modulo the dual lattice L* = prod p^{-m_i - b_i}.
        int dual_depth = -r.depths[i] - scales[i];
        reduced[i] = reduce_mod_pm(r.phase[i], F, dual_depth);
        if (reduced[i] != 0) all_zero = false;
      }
      std::vector<Rat> delta(r.phase.size());
      for (size_t i = 0; i < r.phase.size(); ++i) delta[i] = r.phase[i] - reduced[i];
      if (rational_phase_shift_ok(F, f.ambient, delta, r.center)) {
        // psi(<delta, X>) = psi(<delta, c>) = 1 on the coset.
        r.phase = all_zero ? std::vector<Rat>{} : reduced;
      }
    }
    bool merged = false;
    for (auto& o : out) {
      if (o.depths == r.depths && o.center == r.center && o.phase == r.phase) {
        o.weight += r.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(r));
  }
  std::erase_if(out, [](const CosetTerm& t) { return t.weight == 0; });
  f.terms = std::move(out);
}

LatticeCosetFunction lcf_add(const BaseField& F, const LatticeCosetFunction& f,
                             const LatticeCosetFunction& g) {
  if (!(f.ambient == g.ambient)) throw std::invalid_argument("ambient mismatch");
  LatticeCosetFunction h = f;
  h.terms.insert(h.terms.end(), g.terms.begin(), g.terms.end());
  canonicalize(F, h);
  return h;
}

LatticeCosetFunction lcf_scale(const Rat& a, const LatticeCosetFunction& f) {
  LatticeCosetFunction h = f;
  if (a == 0) {
    h.terms.clear();
    return h;
  }
  for (auto& t : h.terms) t.weight *= a;
  return h;
}

Rat evaluate(const BaseField& F, const LatticeCosetFunction& f, const std::vector<Rat>& x) {
  Rat acc(0);
  for (const auto& t : f.terms) {
    bool inside = true;
    for (size_t i = 0; i < x.size() && inside; ++i)
      if (F.val(x[i] - t.center[i]) < t.depths[i]) inside = false;
    if (!inside) continue;
    Rat w = t.weight;
    if (!t.phase.empty()) {
      Rat pr = pairing(F, f.ambient, t.phase, x);
      if (F.val(pr) < 0)
        throw std::domain_error("phase evaluates to an irrational root of unity at this point");
    }
    acc += w;
  }
  return acc;
}

LatticeCosetFunction translate(const BaseField& F, const LatticeCosetFunction& f,
                               const std::vector<Rat>& c) {
  LatticeCosetFunction h = f;
  for (auto& t : h.terms) {
    for (size_t i = 0; i < t.center.size(); ++i) t.center[i] -= c[i];
    if (!t.phase.empty())
      throw std::invalid_argument("translation of phased functions is not supported");
  }
  canonicalize(F, h);
  return h;
}

LatticeCosetFunction reflect(const BaseField& F, const LatticeCosetFunction& f) {
  LatticeCosetFunction h = f;
  for (auto& t : h.terms) {
    for (auto& c : t.center) c = -c;
    for (auto& c : t.phase) c = -c;
  }
  canonicalize(F, h);
  return h;
}

LatticeCosetFunction act_unit(const BaseField& F, const LatticeCosetFunction& f, const MatQ& g) {
  if (f.ambient.kind != SpaceKind::tilde_gl)
    throw std::invalid_argument("group action transport only on tilde_gl");
  if (!is_integral(g, F.p) || F.val(det(g)) != 0)
    throw std::invalid_argument("act_unit requires g in GL_n(O)");
  int n = f.ambient.n;
  MatQ gi = inverse(g);
  LatticeCosetFunction h = f;
  for (auto& t : h.terms) {
    for (int d : t.depths)
      if (d != t.depths[0]) throw std::invalid_argument("act_unit requires uniform depth");
    TildeGl c = unflatten_tilde(n, t.center);
    // {X : X.g in c + p^m Lambda} = c.g^{-1} + p^m Lambda.
    TildeGl cg = act(c, gi);
    t.center = flatten(cg);
    if (!t.phase.empty()) {
      // Pairing invariance: <c*, X.g> = <c*.g^{-1}, X>.
      TildeGl ph = unflatten_tilde(n, t.phase);
      t.phase = flatten(act(ph, gi));
    }
  }
  canonicalize(F, h);
  return h;
}

LatticeCosetFunction act_scalar_power(const BaseField& F, const LatticeCosetFunction& f, long k) {
  if (f.ambient.kind != SpaceKind::tilde_gl)
    throw std::invalid_argument("group action transport only on tilde_gl");
  int n = f.ambient.n;
  LatticeCosetFunction h = f;
  Rat pk = pow_p(F.p, k);
  for (auto& t : h.terms) {
    if (!t.phase.empty()) throw std::invalid_argument("scalar action on phased functions unsupported");
    // X.(p^k) = (A, p^{-k} v, p^k u): v-center scales by p^k, depth += k; u by -k.
    size_t voff = static_cast<size_t>(n) * n, uoff = voff + n;
    for (size_t i = voff; i < uoff; ++i) {
      t.center[i] *= pk;
      t.depths[i] += static_cast<int>(k);
    }
    for (size_t i = uoff; i < uoff + static_cast<size_t>(n); ++i) {
      t.center[i] /= pk;
      t.depths[i] -= static_cast<int>(k);
    }
  }
  canonicalize(F, h);
  return h;
}

std::vector<Rat> theta_point(const Ambient& amb, const std::vector<Rat>& x) {
  if (amb.kind != SpaceKind::tilde_gl) throw std::invalid_argument("theta only on tilde_gl");
  int n = amb.n;
  std::vector<Rat> y(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[static_cast<size_t>(i * n + j)] = x[static_cast<size_t>(j * n + i)];
  size_t voff = static_cast<size_t>(n) * n, uoff = voff + n;
  for (int i = 0; i < n; ++i) {
    y[voff + static_cast<size_t>(i)] = x[uoff + static_cast<size_t>(i)];
    y[uoff + static_cast<size_t>(i)] = x[voff + static_cast<size_t>(i)];
  }
  return y;
}

LatticeCosetFunction theta_transport(const BaseField& F, const LatticeCosetFunction& f) {
  LatticeCosetFunction h = f;
  for (auto& t : h.terms) {
    t.center = theta_point(f.ambient, t.center);
    std::vector<int> nd(t.depths.size());
    // theta permutes coordinates; depths follow the same permutation.
    int n = f.ambient.n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) nd[static_cast<size_t>(i * n + j)] = t.depths[static_cast<size_t>(j * n + i)];
    size_t voff = static_cast<size_t>(n) * n, uoff = voff + n;
    for (int i = 0; i < n; ++i) {
      nd[voff + static_cast<size_t>(i)] = t.depths[uoff + static_cast<size_t>(i)];
      nd[uoff + static_cast<size_t>(i)] = t.depths[voff + static_cast<size_t>(i)];
    }
    t.depths = nd;
    if (!t.phase.empty()) t.phase = theta_point(f.ambient, t.phase);
  }
  canonicalize(F, h);
  return h;
}

Rat lambda0_volume(const BaseField& F, const Ambient& amb) {
  auto scales = amb.block_scales(F);
  long tot = 0;
  for (int s : scales) tot += s;
  if (tot % 2 != 0) throw std::logic_error("pairing determinant valuation must be even");
  return pow_p(F.p, -tot / 2);
}

LatticeCosetFunction fourier(const BaseField& F, const LatticeCosetFunction& f) {
  auto scales = f.ambient.block_scales(F);
  Rat vol0 = lambda0_volume(F, f.ambient);
  LatticeCosetFunction h = LatticeCosetFunction::zero(f.ambient);
  for (const auto& t : f.terms) {
    CosetTerm r;
    // F(w psi(<c*,X>) 1_{c+L})(Y) = w psi(<c,c*>) vol(L) psi(<c,Y>) 1_{-c* + L*}.
    std::vector<Rat> cstar = t.phase.empty()
                                 ? std::vector<Rat>(t.center.size(), Rat(0))
                                 : t.phase;
    Rat cross = pairing(F, f.ambient, t.center, cstar);
    if (F.val(cross) < 0)
      throw std::domain_error("phase composition outside the rational domain");
    Rat vol = vol0;
    for (size_t i = 0; i < t.depths.size(); ++i) vol *= pow_p(F.p, -t.depths[i]);
    r.weight = t.weight * vol;
    r.phase = t.center;
    bool phase_zero = true;
    for (const auto& c : r.phase)
      if (c != 0) phase_zero = false;
    if (phase_zero) r.phase.clear();
    r.center.resize(t.center.size());
    r.depths.resize(t.depths.size());
    for (size_t i = 0; i < t.center.size(); ++i) {
      r.center[i] = -cstar[i];
      r.depths[i] = -t.depths[i] - scales[i];
    }
    h.terms.push_back(std::move(r));
  }
  canonicalize(F, h);
  return h;
}

long min_support_val(const LatticeCosetFunction& f, const BaseField& F) {
  long m = VAL_INF;
  for (const auto& t : f.terms) {
    for (size_t i = 0; i < t.center.size(); ++i)
      m = std::min(m, std::min(static_cast<long>(t.depths[i]), F.val(t.center[i])));
  }
  return m;
}

int max_depth(const LatticeCosetFunction& f) {
  int m = 0;
  for (const auto& t : f.terms)
    for (int d : t.depths) m = std::max(m, d);
  return m;
}

}  // namespace orbw
