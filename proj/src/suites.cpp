#include "pinosp/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pinosp/dunkl_oracle.hpp"

namespace pinosp {

// ---------------------------------------------------------------- configs

GroupConfig load_group(const std::string& spec) {
  GroupConfig out;
  out.name = spec;
  if (spec.rfind("custom:", 0) == 0) {
    std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read group file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    CustomGroup g = parse_custom_group(buf.str());
    out.group = g.group;
    out.kappa_labels = g.kappa_labels;
    return out;
  }
  out.group = std::make_shared<ReflectionGroup>(parse_group_spec(spec));
  return out;
}

KappaMode KappaMode::parse(const std::string& text) {
  KappaMode k;
  if (text.empty() || text == "symbolic") return k;
  k.symbolic = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Scalar s = Scalar::parse(item);
    if (!s.is_constant()) throw ParseError("kappa value '" + item + "' must be a number");
    k.values.push_back(s.constant_value());
  }
  if (k.values.empty()) throw ParseError("empty kappa list");
  return k;
}

std::string KappaMode::label() const {
  if (symbolic) return "symbolic";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].to_string();
  return out;
}

AlgebraPtr make_algebra(const GroupConfig& config, const KappaMode& kappa) {
  if (kappa.symbolic) return Algebra::create(config.group, config.kappa_labels);
  return Algebra::create(config.group, config.kappa_labels, kappa.values);
}

// ---------------------------------------------------------------- workspace

Workspace::Workspace(AlgebraPtr ctx) : ctx_(std::move(ctx)), sc_(ctx_) {}

Covector Workspace::x(int i) const { return basis_covector(dim(), i - 1); }
Vector Workspace::y(int i) const { return basis_vector(dim(), i - 1); }

std::vector<Covector> Workspace::tuple(int n) const {
  int d = dim();
  std::vector<Covector> out;
  for (int j = 0; j < n; ++j) {
    if (n <= d) {
      out.push_back(x(j + 1));
    } else {
      out.push_back(j < d ? x(j + 1) : x(j % d + 1) + x((j + 1) % d + 1));
    }
  }
  return out;
}

std::vector<Covector> Workspace::xs(const std::vector<int>& idx) const {
  std::vector<Covector> out;
  for (int i : idx) out.push_back(x(i));
  return out;
}

Element Workspace::psi(const Covector& u, const Covector& v) const {
  Element out(ctx_);
  for (const auto& r : ctx_->group().reflections()) {
    Scalar c = B(r.root, u) * B(v, r.root);
    if (c.is_zero()) continue;
    out += (Scalar(2) * c * ctx_->kappa(r.cls) / r.root_norm) * group(r.element);
  }
  return out;
}

// ---------------------------------------------------------------- catalog

namespace {

using Eqs = std::vector<Equation>;

Element sc(const Element& a, const Element& b) { return supercommutator(a, b); }
Element asc(const Element& a, const Element& b) { return anticommutator(a, b); }
Element sq(const Element& a) { return a * a; }
Scalar half() { return Scalar(frac(1, 2)); }

int parity(Aux a) { return a == Aux::gamma ? 1 : 0; }

// The form b on C^{2|1}: b(x-, x+) = 1 = -b(x+, x-), b(gamma, gamma) = 2.
Scalar bform(Aux w, Aux z) {
  if (w == Aux::xminus && z == Aux::xplus) return 1;
  if (w == Aux::xplus && z == Aux::xminus) return -1;
  if (w == Aux::gamma && z == Aux::gamma) return 2;
  return 0;
}

Scalar omega(Aux w, Aux z) { return (w == Aux::gamma || z == Aux::gamma) ? Scalar(0) : bform(w, z); }

const Aux kAux[] = {Aux::xplus, Aux::xminus, Aux::gamma};
const Aux kEven[] = {Aux::xplus, Aux::xminus};

// u (x) w for a covector u.
Element tensor(const Workspace& ws, const Covector& u, Aux w) {
  switch (w) {
    case Aux::xplus:
      return ws.lin(u);
    case Aux::xminus:
      return ws.beta(u);
    case Aux::gamma:
      return ws.gamma(u);
  }
  return ws.zero();
}

using AuxCombo = std::vector<std::pair<Scalar, Aux>>;

Element pair_combo(const Workspace& ws, const AuxCombo& a, const AuxCombo& b) {
  Element out = ws.zero();
  for (const auto& [ca, wa] : a)
    for (const auto& [cb, wb] : b)
      if (!(ca * cb).is_zero()) out += (ca * cb) * ws.osp().pair_element(wa, wb);
  return out;
}

Element AP(const Workspace& ws, const std::vector<Covector>& us, const std::vector<int>& sizes) {
  std::vector<SkewFactor> f(sizes.size(), [&ws](const std::vector<Covector>& v) { return ws.O(v); });
  return antisymmetrized_product(ws.ctx(), us, sizes, f);
}

Element e_top(const Workspace& ws) {
  Element out = ws.num(1);
  for (int p = 0; p < ws.dim(); ++p) out = out * Element::e(ws.ctx(), p);
  return out;
}

std::vector<std::vector<int>> subsets(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < d; ++i)
      if (pick[i]) s.push_back(i + 1);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Tuples for membership and route agreement: ascending basis subsets with
// n <= min(d, 4), then non-orthogonal ones.
std::vector<std::vector<Covector>> membership_tuples(const Workspace& ws) {
  std::vector<std::vector<Covector>> out;
  int d = ws.dim();
  for (int n = 1; n <= std::min(d, 4); ++n)
    for (const auto& s : subsets(d, n)) out.push_back(ws.xs(s));
  if (d >= 2) out.push_back({ws.x(1), ws.x(1) + ws.x(2)});
  if (d >= 3) out.push_back({ws.x(1), ws.x(2), ws.x(1) + ws.x(3)});
  return out;
}

// A sample of elements of Cent(sl(2)) in A_kappa.
std::vector<Element> sl2_central_samples(const Workspace& ws) {
  std::vector<Element> out;
  for (const auto& r : ws.ctx()->group().reflections()) out.push_back(ws.group(r.element));
  out.push_back(ws.gamma(ws.x(1)));
  if (ws.dim() >= 2) {
    Element m = ws.M(ws.x(1), ws.x(2));
    out.push_back(m);
    out.push_back(ws.gamma(ws.x(1)) * ws.gamma(ws.x(2)));
    out.push_back(m * ws.gamma(ws.x(1)));
    out.push_back(m * ws.group(ws.ctx()->group().reflections()[0].element));
  }
  return out;
}

// Arbitrary elements for the projector laws.
std::vector<Element> generic_samples(const Workspace& ws) {
  const auto& ctx = ws.ctx();
  std::vector<Element> out{Element::x(ctx, 0) * Element::e(ctx, 0), Element::x(ctx, 0) * Element::y(ctx, 0)};
  if (ws.dim() >= 2) out.push_back(Element::x(ctx, 0) * Element::y(ctx, 1) * Element::e(ctx, 0) * Element::e(ctx, 1));
  out.push_back(Element::x(ctx, 0) * Element::x(ctx, 0) * ws.group(ws.ctx()->group().reflections()[0].element));
  return out;
}

std::vector<IdentityCase> build_catalog() {
  std::vector<IdentityCase> cat;
  auto add = [&](std::string id, std::string anchor, int min_dim, bool ortho,
                 std::function<Eqs(const Workspace&)> f) {
    cat.push_back({std::move(id), std::move(anchor), min_dim, ortho, std::move(f)});
  };

  // ---- osp(1|2) relations with X = sqrt2 F+, D = sqrt2 F-
  const char* osp_anchor = "osp(1|2) relations that have nonzero right-hand side";
  add("osp12re.FpFm", osp_anchor, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sc(o.X(), o.D()), Scalar(2) * o.H()}};
  });
  add("osp12re.HF", osp_anchor, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sc(o.H(), o.X()), o.X()}, {sc(o.H(), o.D()), -o.D()}};
  });
  add("osp12re.FF", osp_anchor, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sc(o.X(), o.X()), Scalar(4) * o.Ep()}, {sc(o.D(), o.D()), Scalar(-4) * o.Em()}};
  });
  add("osp12re.EpEm", osp_anchor, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sc(o.Ep(), o.Em()), o.H()}};
  });
  add("osp12re.HE", osp_anchor, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sc(o.H(), o.Ep()), Scalar(2) * o.Ep()}, {sc(o.H(), o.Em()), Scalar(-2) * o.Em()}};
  });
  add("osp12re.FE", osp_anchor, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sc(o.X(), o.Em()), o.D()}, {sc(o.D(), o.Ep()), o.X()}};
  });
  add("osp12.C", "realization criterion [[e_d, e_-d], e_+-d] = +-C e_+-d", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element xd = sc(o.X(), o.D());
    return Eqs{{sc(xd, o.X()), Scalar(2) * o.X()}, {sc(xd, o.D()), Scalar(-2) * o.D()}};
  });
  add("osp12.normalization", "normalization F = e / sqrt(C), E = +-[e, e] / 2C", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element fp = Scalar(BaseNumber(0, 0, frac(1, 2), 0)) * o.X();
    return Eqs{{o.Fp(), fp},
               {Scalar(frac(1, 4)) * sc(o.X(), o.X()), o.Ep()},
               {Scalar(frac(-1, 4)) * sc(o.D(), o.D()), o.Em()},
               {sc(o.Fp(), o.Fm()), o.H()}};
  });

  // ---- projectors
  add("p_osp12.membership", "Cent(osp(1|2)) = P_+ Cent(osp(1|2)_0)", 1, false, [](const Workspace& ws) {
    Eqs out;
    for (const auto& a : sl2_central_samples(ws)) {
      Element p = ws.osp().P_plus(a);
      out.push_back({sc(ws.osp().X(), p), ws.zero()});
      out.push_back({sc(ws.osp().D(), p), ws.zero()});
    }
    return out;
  });
  add("p_osp12.PmPp", "actions of P_- and P_+ coincide on Cent(osp(1|2)_0)", 1, false, [](const Workspace& ws) {
    Eqs out;
    for (const auto& a : sl2_central_samples(ws)) out.push_back({ws.osp().P_minus(a), ws.osp().P_plus(a)});
    return out;
  });
  add("p_osp12.P-dPd", "P_- = 1 + F+F- = P_+ + H", 1, false, [](const Workspace& ws) {
    Eqs out;
    for (const auto& a : generic_samples(ws))
      out.push_back({ws.osp().P_minus(a) - ws.osp().P_plus(a), sc(ws.osp().H(), a)});
    return out;
  });
  const char* pdelta = "properties of P_+- used for the supercentralizer";
  add("l_Pdelta.additive", pdelta, 1, false, [](const Workspace& ws) {
    auto s = generic_samples(ws);
    Eqs out;
    for (int sign : {1, -1}) out.push_back({ws.osp().P(s[0] + s[1], sign), ws.osp().P(s[0], sign) + ws.osp().P(s[1], sign)});
    return out;
  });
  add("l_Pdelta.fixed", pdelta, 1, false, [](const Workspace& ws) {
    Eqs out;
    std::vector<Element> cent{ws.O({ws.x(1)}), rho(ws.ctx(), 0)};
    if (ws.dim() >= 2) cent.push_back(ws.O({ws.x(1), ws.x(2)}));
    for (const auto& a : cent)
      for (int sign : {1, -1}) out.push_back({ws.osp().P(a, sign), a});
    return out;
  });
  add("l_Pdelta.product", pdelta, 1, false, [](const Workspace& ws) {
    Eqs out;
    std::vector<Element> cent{ws.O({ws.x(1)}), rho(ws.ctx(), 0)};
    if (ws.dim() >= 2) cent.push_back(ws.O({ws.x(1), ws.x(2)}));
    for (const auto& a : cent)
      for (const auto& b : generic_samples(ws))
        for (int sign : {1, -1}) {
          out.push_back({ws.osp().P(a * b, sign), ws.osp().P(a, sign) * ws.osp().P(b, sign)});
          out.push_back({ws.osp().P(b * a, sign), ws.osp().P(b, sign) * ws.osp().P(a, sign)});
        }
    return out;
  });
  add("l_Pdelta.sandwich", pdelta, 1, false, [](const Workspace& ws) {
    Eqs out;
    Element a = ws.O({ws.x(1)}), c = rho(ws.ctx(), 0);
    for (const auto& b : generic_samples(ws))
      for (int sign : {1, -1}) out.push_back({ws.osp().P(a * b * c, sign), a * ws.osp().P(b, sign) * c});
    return out;
  });
  add("p_sl2.Palpha", "Cent(sl(2)) = P_alpha Cent(h)", 1, false, [](const Workspace& ws) {
    const auto& ctx = ws.ctx();
    const Osp& o = ws.osp();
    std::vector<Element> as{Element::x(ctx, 0) * Element::y(ctx, 0),
                            Element::x(ctx, 0) * Element::y(ctx, 0) * ws.group(ctx->group().reflections()[0].element)};
    if (ws.dim() >= 2) {
      as.push_back(Element::x(ctx, 0) * Element::y(ctx, 1) * Element::e(ctx, 1));
      as.push_back(Element::x(ctx, 0) * Element::x(ctx, 1) * Element::y(ctx, 0) * Element::y(ctx, 1));
    }
    Eqs out;
    for (const auto& a : as) {
      Element p = o.P_alpha(a);
      out.push_back({sc(o.Ep(), p), ws.zero()});
      out.push_back({sc(o.Em(), p), ws.zero()});
      out.push_back({sc(o.H(), p), ws.zero()});
    }
    if (ws.dim() >= 2) {
      Element m = ws.M(ws.x(1), ws.x(2));
      out.push_back({o.P_alpha(m), m});
    }
    return out;
  });

  // ---- Casimir and Scasimir of U(osp(1|2))
  const char* casi = "quadratic Casimir element of U(osp(1|2))";
  add("e_Casiosp.PpFpFm", casi, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element fpfm = half() * (o.X() * o.D());
    return Eqs{{o.P_plus(fpfm), o.H() * o.H() + Scalar(4) * (o.Ep() * o.Em()) - Scalar(2) * fpfm}};
  });
  add("e_Casiosp.PpFmFp", casi, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element fmfp = half() * (o.D() * o.X());
    return Eqs{{o.P_plus(fmfp), -(o.H() * o.H()) - Scalar(4) * (o.Em() * o.Ep()) - Scalar(2) * fmfp}};
  });
  add("e_Casiosp.combined", casi, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element c = o.casimir();
    Element diff = half() * (o.X() * o.D() - o.D() * o.X());
    return Eqs{{o.P_plus(diff), Scalar(2) * c},
               {c, o.H() * o.H() + Scalar(2) * (o.Ep() * o.Em() + o.Em() * o.Ep()) - diff}};
  });
  add("e_Casiosp.central", casi, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element c = o.casimir();
    return Eqs{{sc(c, o.X()), ws.zero()}, {sc(c, o.D()), ws.zero()}, {sc(c, o.H()), ws.zero()}};
  });
  const char* scasi = "osp(1|2) Scasimir element";
  add("e_SCasiosp.square", scasi, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{sq(o.scasimir()), o.casimir() + ws.num(frac(1, 4))}};
  });
  add("e_SCasiosp.parity", scasi, 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element s = o.scasimir();
    return Eqs{{commutator(s, o.H()), ws.zero()},          {commutator(s, o.Ep()), ws.zero()},
               {commutator(s, o.Em()), ws.zero()},         {plain_anticommutator(s, o.X()), ws.zero()},
               {plain_anticommutator(s, o.D()), ws.zero()}};
  });
  add("e_SCasiosprel.P", "P_+-(S) = 2 Omega_osp + 1/2 = 2 S^2", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    Element s = o.scasimir();
    return Eqs{{o.P_plus(s), Scalar(2) * sq(s)},
               {o.P_minus(s), Scalar(2) * sq(s)},
               {Scalar(2) * sq(s), Scalar(2) * o.casimir() + ws.num(half())}};
  });

  // ---- generalized symmetries
  add("p_gensym.Qminus", "Q^-(a) is a generalized symmetry of F^-", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    std::vector<Element> as{ws.gamma(ws.x(1)), ws.group(ws.ctx()->group().reflections()[0].element)};
    if (ws.dim() >= 2) as.push_back(ws.gamma(ws.x(1)) * ws.gamma(ws.x(2)));
    Eqs out;
    for (const auto& a : as) {
      Scalar sign = a.parity().value_or(0) ? -1 : 1;
      Element q = o.Q_minus(a);
      out.push_back({sc(o.Em(), a), ws.zero()});
      out.push_back({o.D() * q, sign * ((q + a) * o.D())});
    }
    return out;
  });
  add("p_gensym.Qplus", "a similar result holds for F^+ using Q^+", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    std::vector<Element> as{ws.gamma(ws.x(1)), ws.group(ws.ctx()->group().reflections()[0].element)};
    if (ws.dim() >= 2) as.push_back(ws.gamma(ws.x(1)) * ws.gamma(ws.x(2)));
    Eqs out;
    for (const auto& a : as) {
      Scalar sign = a.parity().value_or(0) ? -1 : 1;
      Element q = o.Q_plus(a);
      out.push_back({o.X() * q, sign * ((q - a) * o.X())});
    }
    return out;
  });
  add("p_gensym2.R", "R_u is a generalized symmetry of D", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    std::vector<Covector> us{ws.x(1)};
    if (ws.dim() >= 2) {
      us.push_back(ws.x(2));
      us.push_back(ws.x(1) + ws.x(2));
    }
    Eqs out;
    for (const auto& u : us) {
      Element r = o.R(u);
      out.push_back({r, o.Q_minus(ws.gamma(u))});
      out.push_back({o.D() * r + (r + ws.gamma(u)) * o.D(), ws.zero()});
    }
    return out;
  });

  // ---- bilinear form, Clifford algebra, antisymmetrizer
  auto pairs_of = [](const Workspace& ws) {
    std::vector<Covector> us{ws.x(1)};
    if (ws.dim() >= 2) {
      us.push_back(ws.x(2));
      us.push_back(ws.x(1) + ws.x(2));
      us.push_back(ws.x(1) - Scalar(2) * ws.x(2));
    }
    return us;
  };
  add("e_Clifcom.anticommutator", "gamma(u) gamma(v) + gamma(v) gamma(u) = 2 B(u, v)", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    auto us = pairs_of(ws);
    for (const auto& u : us)
      for (const auto& v : us)
        out.push_back({ws.gamma(u) * ws.gamma(v) + ws.gamma(v) * ws.gamma(u), ws.num(Scalar(2) * ws.B(u, v))});
    return out;
  });
  add("e_Gamma.chirality", "chirality element of the Clifford algebra", 1, true, [](const Workspace& ws) {
    Element g = chirality(ws.ctx());
    Eqs out{{sq(g), ws.num(1)}};
    Scalar sign = (ws.dim() - 1) % 2 ? -1 : 1;
    for (int p = 1; p <= ws.dim(); ++p) out.push_back({g * ws.gamma(ws.x(p)), sign * (ws.gamma(ws.x(p)) * g)});
    return out;
  });
  add("e_asym.idempotent", "anti-symmetrization operator, A A = A", 2, false, [](const Workspace& ws) {
    Eqs out;
    for (int n = 2; n <= 3; ++n) {
      auto us = ws.tuple(n);
      us[0] = us[0] + ws.x(2);
      auto inner = [&ws](const std::vector<Covector>& v) { return antisymmetrize(ws.ctx(), v); };
      out.push_back({antisymmetrize(ws.ctx(), us, inner), antisymmetrize(ws.ctx(), us)});
    }
    return out;
  });
  add("e_asym2.expansion", "A(f_{u_1...u_n}) = (1/n) sum_j (-1)^{j-1} f_{u_j} A(...)", 2, false, [](const Workspace& ws) {
    Eqs out;
    for (int n = 2; n <= 4; ++n) {
      auto us = ws.tuple(n);
      us[0] = us[0] + ws.x(2);
      Element rhs = ws.zero();
      for (int j = 0; j < n; ++j) {
        std::vector<Covector> rest;
        for (int k = 0; k < n; ++k)
          if (k != j) rest.push_back(us[k]);
        rhs += Scalar(j % 2 ? -1 : 1) * (ws.gamma(us[j]) * antisymmetrize(ws.ctx(), rest));
      }
      out.push_back({antisymmetrize(ws.ctx(), us), Scalar(frac(1, n)) * rhs});
    }
    return out;
  });
  const char* quant = "quantization map on low degrees";
  add("e_Auv.quantization", quant, 2, false, [](const Workspace& ws) {
    Covector u = ws.x(1), v = ws.x(1) + ws.x(2);
    return Eqs{{antisymmetrize(ws.ctx(), {u, v}), ws.gamma(u) * ws.gamma(v) - ws.num(ws.B(u, v))}};
  });
  add("e_Auvw.quantization", quant, 2, false, [](const Workspace& ws) {
    auto t = ws.tuple(3);
    Covector u = t[0] + t[1], v = t[1], w = t[2];
    auto g = [&ws](const Covector& a) { return ws.gamma(a); };
    return Eqs{{antisymmetrize(ws.ctx(), {u, v, w}),
                g(u) * g(v) * g(w) - ws.B(u, v) * g(w) + ws.B(u, w) * g(v) - ws.B(v, w) * g(u)}};
  });
  add("e_Auvwx.quantization", quant, 2, false, [](const Workspace& ws) {
    auto t = ws.tuple(4);
    Covector u = t[0] + t[1], v = t[1], w = t[2], x = t[3] - t[0];
    auto g = [&ws](const Covector& a) { return ws.gamma(a); };
    auto B = [&ws](const Covector& a, const Covector& b) { return ws.B(a, b); };
    Element rhs = g(u) * g(v) * g(w) * g(x) - B(u, v) * (g(w) * g(x)) + B(u, w) * (g(v) * g(x)) -
                  B(v, w) * (g(u) * g(x)) - B(u, x) * (g(v) * g(w)) + B(v, x) * (g(u) * g(w)) -
                  B(w, x) * (g(u) * g(v)) + ws.num(B(u, v) * B(w, x) - B(u, w) * B(v, x) + B(u, x) * B(v, w));
    return Eqs{{antisymmetrize(ws.ctx(), {u, v, w, x}), rhs}};
  });
  add("e_adso.action", "adjoint action of so(d) on gamma(V*)", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    auto us = pairs_of(ws);
    for (const auto& u : us)
      for (const auto& v : us)
        for (const auto& w : us)
          out.push_back({sc(half() * (ws.gamma(u) * ws.gamma(v)), ws.gamma(w)),
                         ws.B(v, w) * ws.gamma(u) - ws.B(u, w) * ws.gamma(v)});
    return out;
  });

  // ---- rational Cherednik algebra and A_kappa
  add("e_RC.relations", "defining relations of the rational Cherednik algebra", 1, false, [](const Workspace& ws) {
    Eqs out;
    int d = ws.dim();
    for (int p = 1; p <= d; ++p)
      for (int q = 1; q <= d; ++q) {
        out.push_back({sc(ws.lin(ws.x(p)), ws.lin(ws.x(q))), ws.zero()});
        out.push_back({sc(ws.lin(ws.y(p)), ws.lin(ws.y(q))), ws.zero()});
        Element rhs = ws.num(pairing(ws.y(p), ws.x(q)));
        for (const auto& r : ws.ctx()->group().reflections()) {
          Scalar c = pairing(ws.y(p), r.root) * pairing(r.coroot, ws.x(q));
          if (!c.is_zero()) rhs += (c * ws.ctx()->kappa(r.cls)) * ws.group(r.element);
        }
        out.push_back({sc(ws.lin(ws.y(p)), ws.lin(ws.x(q))), rhs});
      }
    return out;
  });
  add("e_s.conjugation", "g u g^{-1} = g(u) in the crossed product", 1, false, [](const Workspace& ws) {
    Eqs out;
    const auto& G = ws.ctx()->group();
    for (int g = 0; g < G.order(); ++g)
      for (int p = 1; p <= ws.dim(); ++p) {
        Element gi = ws.group(G.inverse(g));
        out.push_back({ws.group(g) * ws.lin(ws.x(p)) * gi, ws.lin(G.act(g, ws.x(p)))});
        out.push_back({ws.group(g) * ws.lin(ws.y(p)) * gi, ws.lin(G.act(g, ws.y(p)))});
      }
    for (const auto& r : G.reflections()) {
      Covector u = ws.tuple(1)[0];
      Covector su = u - pairing(r.coroot, u) * r.root;
      out.push_back({ws.group(r.element) * ws.lin(u) * ws.group(r.element), ws.lin(su)});
    }
    return out;
  });
  add("l_Buv.symmetry", "[beta(u), v] = [beta(v), u]", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    auto us = pairs_of(ws);
    for (const auto& u : us)
      for (const auto& v : us) {
        Element l = sc(ws.beta(u), ws.lin(v));
        out.push_back({l, sc(ws.beta(v), ws.lin(u))});
        out.push_back({l, ws.num(ws.B(u, v)) + ws.psi(u, v)});
        Vector bu = ws.ctx()->space().beta(u), bv = ws.ctx()->space().beta(v);
        out.push_back({sc(ws.beta(bu), ws.lin(bv)), sc(ws.beta(bv), ws.lin(bu))});
      }
    return out;
  });
  add("e_psiB.invariance", "G-invariant symmetric map psi_kappa^B", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    const auto& G = ws.ctx()->group();
    auto us = pairs_of(ws);
    for (const auto& u : us)
      for (const auto& v : us) {
        out.push_back({ws.psi(u, v), ws.psi(v, u)});
        for (int g = 0; g < G.order(); ++g)
          out.push_back({ws.psi(G.act(g, u), G.act(g, v)), ws.group(g) * ws.psi(u, v) * ws.group(G.inverse(g))});
      }
    return out;
  });
  add("e_comre.relations", "defining relations of A_kappa", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    auto us = pairs_of(ws);
    for (const auto& u : us)
      for (const auto& v : us)
        for (Aux w : kAux)
          for (Aux z : kAux)
            out.push_back({sc(tensor(ws, u, w), tensor(ws, v, z)),
                           ws.num(ws.B(u, v) * bform(w, z)) + omega(w, z) * ws.psi(u, v)});
    for (const auto& r : ws.ctx()->group().reflections())
      for (const auto& u : us) out.push_back({ws.group(r.element) * ws.gamma(u), ws.gamma(u) * ws.group(r.element)});
    return out;
  });

  // ---- Pin cover
  add("l_rhoG.conjugation", "rho(g~) u rho(g~^{-1}) = (-1)^{|g~||u|} p(g~).u", 1, false, [](const Workspace& ws) {
    Eqs out;
    const auto& G = ws.ctx()->group();
    const auto& refl = G.reflections();
    Covector u = ws.tuple(1)[0];
    if (ws.dim() >= 2) u = u + Scalar(2) * ws.x(2);
    for (std::size_t k = 0; k < refl.size(); ++k) {
      int g = refl[k].element;
      Element rs = rho(ws.ctx(), static_cast<int>(k));
      out.push_back({rs * rs, ws.num(1)});
      out.push_back({rs * ws.lin(u) * rs, ws.lin(G.act(g, u))});
      out.push_back({rs * ws.beta(u) * rs, ws.lin(G.act(g, ws.ctx()->space().beta(u)))});
      out.push_back({rs * ws.gamma(u) * rs, -ws.gamma(G.act(g, u))});
      for (const auto& t : refl) {
        int conj = G.multiply(G.multiply(g, t.element), G.inverse(g));
        out.push_back({rs * ws.group(t.element) * rs, ws.group(conj)});
      }
      if (ws.dim() >= 2) {
        Element gg = ws.gamma(ws.x(1)) * ws.gamma(ws.x(2));
        out.push_back({rs * gg * rs, ws.gamma(G.act(g, ws.x(1))) * ws.gamma(G.act(g, ws.x(2)))});
      }
      // even element of the cover: rho(s~_k s~_l)
      for (std::size_t l = 0; l < refl.size(); ++l) {
        Element w = rho_word(ws.ctx(), {static_cast<int>(k), static_cast<int>(l)});
        Element winv = rho_word(ws.ctx(), {static_cast<int>(l), static_cast<int>(k)});
        int h = G.multiply(g, refl[l].element);
        out.push_back({w * ws.gamma(u) * winv, ws.gamma(G.act(h, u))});
        out.push_back({w * ws.lin(u) * winv, ws.lin(G.act(h, u))});
      }
    }
    return out;
  });
  add("e_Ov.rho_form", "O_u as a combination of rho(s~)", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    const auto& refl = ws.ctx()->group().reflections();
    for (const auto& u : pairs_of(ws)) {
      Element rhs = ws.zero();
      for (std::size_t k = 0; k < refl.size(); ++k) {
        Scalar c = ws.B(refl[k].root, u) * Scalar(inverse_sqrt(refl[k].root_norm)) * ws.ctx()->kappa(refl[k].cls);
        rhs += c * rho(ws.ctx(), static_cast<int>(k));
      }
      out.push_back({ws.ocal(u), rhs});
    }
    return out;
  });
  add("e_Ogamma.anticommutator", "[gamma_u, O_v] = [beta(u), v] - B(u, v) = [gamma_v, O_u]", 1, false,
      [pairs_of](const Workspace& ws) {
        Eqs out;
        auto us = pairs_of(ws);
        for (const auto& u : us)
          for (const auto& v : us) {
            Element l = sc(ws.gamma(u), ws.ocal(v));
            out.push_back({l, sc(ws.beta(u), ws.lin(v)) - ws.num(ws.B(u, v))});
            out.push_back({l, sc(ws.gamma(v), ws.ocal(u))});
          }
        return out;
      });
  add("l_Ogammas.positions", "A(O_{u_1} gamma_{u_2...u_n}) = ... = A(gamma_{u_1...u_{n-1}} O_{u_n})", 2, false,
      [](const Workspace& ws) {
        Eqs out;
        SkewFactor g = [&ws](const std::vector<Covector>& v) { return ws.gamma(v[0]); };
        SkewFactor o = [&ws](const std::vector<Covector>& v) { return ws.ocal(v[0]); };
        for (int n = 2; n <= 4; ++n) {
          auto us = ws.tuple(n);
          us[0] = us[0] + ws.x(2);
          std::vector<int> sizes(n, 1);
          Element first;
          for (int p = 0; p < n; ++p) {
            std::vector<SkewFactor> f(n, g);
            f[p] = o;
            Element v = antisymmetrized_product(ws.ctx(), us, sizes, f);
            if (p == 0)
              first = v;
            else
              out.push_back({v, first});
          }
        }
        return out;
      });

  // ---- (w . z)(B) and osp(1|2) in A_kappa
  add("e_Bwz2.forms", "(w . z)(B) under the relations of A_kappa", 1, false, [](const Workspace& ws) {
    Eqs out;
    int d = ws.dim();
    const Matrix& bd = ws.ctx()->space().gram_dual();
    Element omega_k = omega_kappa(ws.ctx());
    for (Aux w : kAux)
      for (Aux z : kAux) {
        Element rhs = ws.zero();
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            if (!bd[p][q].is_zero()) rhs += Scalar(bd[p][q]) * (ws.osp().aux(p, w) * ws.osp().aux(q, z));
        rhs -= ws.num(bform(w, z) * Scalar(frac(d, 2)));
        rhs -= omega(w, z) * omega_k;
        out.push_back({ws.osp().pair_element(w, z), rhs});
      }
    return out;
  });
  add("e_Omega.central", "Omega_kappa is central in C[G]", 1, false, [](const Workspace& ws) {
    Eqs out;
    Element om = omega_kappa(ws.ctx());
    for (int g = 0; g < ws.ctx()->group().order(); ++g) out.push_back({sc(om, ws.group(g)), ws.zero()});
    return out;
  });
  add("l_Bg.rho", "[(w . z)(B), rho(G~)] = 0", 1, false, [](const Workspace& ws) {
    Eqs out;
    int nrefl = static_cast<int>(ws.ctx()->group().reflections().size());
    for (Aux w : kAux)
      for (Aux z : kAux)
        for (int k = 0; k < nrefl; ++k) out.push_back({sc(ws.osp().pair_element(w, z), rho(ws.ctx(), k)), ws.zero()});
    return out;
  });
  add("l_lemma3.e3", "adjoint action of (xi_1 . xi_2)(B) on V* (x) C^{2|1}", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    for (const auto& u : pairs_of(ws))
      for (Aux x1 : kEven)
        for (Aux x2 : kEven)
          for (Aux eta : kAux)
            out.push_back({sc(ws.osp().pair_element(x1, x2), tensor(ws, u, eta)),
                           bform(x2, eta) * tensor(ws, u, x1) + bform(x1, eta) * tensor(ws, u, x2)});
    return out;
  });
  add("l_lemma3.e1", "adjoint action of (xi_1 . gamma)(B) on V* (x) C^{2|1}", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    for (const auto& u : pairs_of(ws))
      for (Aux x1 : kEven)
        for (Aux eta : kAux)
          out.push_back({sc(ws.osp().pair_element(x1, Aux::gamma), tensor(ws, u, eta)),
                         bform(Aux::gamma, eta) * tensor(ws, u, x1) +
                             bform(x1, eta) * (ws.gamma(u) + Scalar(2) * ws.ocal(u))});
    return out;
  });
  add("e_lemma1.ab", "relations of the sl(2) realization on V and V*", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    const Osp& o = ws.osp();
    Element mm = o.pair_element(Aux::xminus, Aux::xminus), pp = o.pair_element(Aux::xplus, Aux::xplus),
            pm = o.pair_element(Aux::xplus, Aux::xminus);
    for (const auto& u : pairs_of(ws)) {
      Vector v = ws.ctx()->space().beta(u) + ws.y(1);
      out.push_back({sc(mm, ws.lin(u)), Scalar(2) * ws.beta(u)});
      out.push_back({sc(pp, ws.lin(v)), Scalar(-2) * ws.beta(v)});
      out.push_back({sc(pm, ws.lin(u)), ws.lin(u)});
      out.push_back({sc(pm, ws.lin(v)), -ws.lin(v)});
    }
    return out;
  });
  add("e_Ov2.commutator", "O_u = ([(x^- . gamma)(B), u] - gamma_u) / 2", 1, false, [pairs_of](const Workspace& ws) {
    Eqs out;
    for (const auto& u : pairs_of(ws)) {
      Element sum = ws.zero();
      for (int p = 1; p <= ws.dim(); ++p) sum += sc(ws.lin(ws.y(p)), ws.lin(u)) * ws.gamma(ws.x(p));
      out.push_back({ws.ocal(u), half() * (sc(ws.osp().pair_element(Aux::xminus, Aux::gamma), ws.lin(u)) - ws.gamma(u))});
      out.push_back({ws.ocal(u), half() * (sum - ws.gamma(u))});
    }
    return out;
  });
  add("l_Oug.Omega", "(O (x) gamma)(B) = Omega_kappa = (gamma (x) O)(B)", 1, false, [](const Workspace& ws) {
    int d = ws.dim();
    const Matrix& bd = ws.ctx()->space().gram_dual();
    Element l = ws.zero(), r = ws.zero();
    for (int p = 1; p <= d; ++p)
      for (int q = 1; q <= d; ++q) {
        if (bd[p - 1][q - 1].is_zero()) continue;
        Scalar c(bd[p - 1][q - 1]);
        l += c * (ws.ocal(ws.x(p)) * ws.gamma(ws.x(q)));
        r += c * (ws.gamma(ws.x(p)) * ws.ocal(ws.x(q)));
      }
    Element om = omega_kappa(ws.ctx());
    return Eqs{{l, om}, {r, om}};
  });
  add("p_BB.bracket", "(w . z)(B) realize osp(C^{2|1}, b)", 1, false, [](const Workspace& ws) {
    Eqs out;
    for (Aux z1 : kAux)
      for (Aux z2 : kAux)
        for (Aux z3 : kAux)
          for (Aux z4 : kAux) {
            Scalar s23 = parity(z2) * parity(z3) ? -1 : 1, s24 = parity(z2) * parity(z4) ? -1 : 1;
            AuxCombo w1{{bform(z2, z3), z1}, {s23 * bform(z1, z3), z2}};
            AuxCombo w2{{bform(z2, z4), z1}, {s24 * bform(z1, z4), z2}};
            Scalar sign = ((parity(z1) + parity(z2)) * parity(z3)) % 2 ? -1 : 1;
            Element rhs = pair_combo(ws, w1, {{1, z4}}) + sign * pair_combo(ws, {{1, z3}}, w2);
            out.push_back({sc(ws.osp().pair_element(z1, z2), ws.osp().pair_element(z3, z4)), rhs});
          }
    return out;
  });
  add("e_osp.generators", "osp(1|2) generators in A_kappa", 1, false, [](const Workspace& ws) {
    const Osp& o = ws.osp();
    return Eqs{{o.X(), o.pair_element(Aux::xplus, Aux::gamma)},
               {o.D(), o.pair_element(Aux::xminus, Aux::gamma)},
               {o.H(), o.pair_element(Aux::xplus, Aux::xminus)},
               {o.Ep(), half() * o.pair_element(Aux::xplus, Aux::xplus)},
               {o.Em(), -half() * o.pair_element(Aux::xminus, Aux::xminus)}};
  });

  // ---- centralizer of sl(2)
  auto m_pairs = [](const Workspace& ws) {
    std::vector<std::pair<Covector, Covector>> out{{ws.x(1), ws.x(2)}, {ws.x(1) + ws.x(2), ws.x(1)}};
    if (ws.dim() >= 3) out.push_back({ws.x(2), ws.x(3) - ws.x(1)});
    return out;
  };
  add("e_DAMO.forms", "Dunkl angular momentum M(u, v)", 2, false, [m_pairs](const Workspace& ws) {
    Eqs out;
    for (const auto& [u, v] : m_pairs(ws)) {
      Element m = ws.M(u, v);
      Element lu = ws.lin(u), lv = ws.lin(v), bu = ws.beta(u), bv = ws.beta(v);
      out.push_back({m, half() * (lu * bv - bu * lv - lv * bu + bv * lu)});
      out.push_back({m, bv * lu - bu * lv});
    }
    return out;
  });
  add("e_Centsl2.commute", "M_uv and G generate Cent(sl(2))", 2, false, [m_pairs](const Workspace& ws) {
    Eqs out;
    const Osp& o = ws.osp();
    const auto& G = ws.ctx()->group();
    for (const auto& [u, v] : m_pairs(ws)) {
      Element m = ws.M(u, v);
      out.push_back({sc(m, o.H()), ws.zero()});
      out.push_back({sc(m, o.Ep()), ws.zero()});
      out.push_back({sc(m, o.Em()), ws.zero()});
      for (int g = 0; g < G.order(); ++g)
        out.push_back({ws.group(g) * m * ws.group(G.inverse(g)), ws.M(G.act(g, u), G.act(g, v))});
    }
    for (const auto& r : G.reflections()) {
      out.push_back({sc(ws.group(r.element), o.Ep()), ws.zero()});
      out.push_back({sc(ws.group(r.element), o.Em()), ws.zero()});
    }
    return out;
  });
  add("p_bbH.bracket", "deformation of so(d) generated by M(u, v)", 2, false, [](const Workspace& ws) {
    std::vector<std::array<Covector, 4>> quads;
    quads.push_back({ws.x(1), ws.x(2), ws.x(1) + ws.x(2), ws.x(1)});
    quads.push_back({ws.x(1), ws.x(2), ws.x(2), ws.x(1) - Scalar(2) * ws.x(2)});
    if (ws.dim() >= 3) {
      quads.push_back({ws.x(1), ws.x(2), ws.x(2), ws.x(3)});
      quads.push_back({ws.x(1) + ws.x(3), ws.x(2), ws.x(1), ws.x(2) - ws.x(3)});
    }
    Eqs out;
    for (const auto& [u, v, x, y] : quads) {
      auto Bk = [&ws](const Covector& a, const Covector& b) { return ws.num(ws.B(a, b)) + ws.psi(a, b); };
      out.push_back({sc(ws.M(u, v), ws.M(x, y)), ws.M(v, x) * Bk(u, y) - ws.M(u, x) * Bk(v, y) -
                                                     ws.M(v, y) * Bk(u, x) + ws.M(u, y) * Bk(v, x)});
    }
    return out;
  });
  add("l_uvx.nested", "[[x*, u], v] = [[x*, v], u]", 2, false, [](const Workspace& ws) {
    Eqs out;
    std::vector<Vector> vs{ws.y(1), ws.y(2), ws.y(1) + ws.y(2)};
    std::vector<Covector> cs{ws.x(1), ws.x(2), ws.x(1) - ws.x(2)};
    for (const auto& xs : cs)
      for (const auto& u : vs)
        for (const auto& v : vs) {
          Element x = ws.lin(xs);
          out.push_back({sc(sc(x, ws.lin(u)), ws.lin(v)), sc(sc(x, ws.lin(v)), ws.lin(u))});
        }
    for (const auto& xs : cs)
      for (const auto& ys : cs)
        for (const auto& v : vs)
          out.push_back({sc(sc(ws.lin(xs), ws.lin(v)), ws.lin(ys)), sc(sc(ws.lin(ys), ws.lin(v)), ws.lin(xs))});
    return out;
  });

  // ---- supercentralizer generators
  add("centralizer-membership.tuples", "O_{u_1...u_n} lies in the supercentralizer of osp(1|2)", 1, false,
      [](const Workspace& ws) {
        Eqs out;
        for (const auto& us : membership_tuples(ws)) {
          Element o = ws.O(us);
          out.push_back({sc(ws.osp().X(), o), ws.zero()});
          out.push_back({sc(ws.osp().D(), o), ws.zero()});
        }
        return out;
      });
  add("centralizer-membership.witt", "O with indices in a Witt basis", 2, true, [](const Workspace& ws) {
    WittBasis w = witt_basis(ws.ctx()->space());
    std::vector<std::vector<Covector>> tuples{{w.plus[0]}, {w.minus[0]}, {w.plus[0], w.minus[0]}};
    if (w.has_zero) tuples.push_back({w.plus[0], w.minus[0], w.zero});
    Eqs out;
    for (const auto& us : tuples) {
      Element o = ws.O(us);
      out.push_back({sc(ws.osp().X(), o), ws.zero()});
      out.push_back({sc(ws.osp().D(), o), ws.zero()});
    }
    return out;
  });
  add("l_groupaction.rho", "rho(g~) O_{u_1...u_n} = (-1)^{|g~|n} O_{g.u_1...g.u_n} rho(g~)", 1, false,
      [](const Workspace& ws) {
        Eqs out;
        const auto& G = ws.ctx()->group();
        const auto& refl = G.reflections();
        for (int n = 1; n <= std::min(ws.dim(), 3); ++n) {
          auto us = ws.tuple(n);
          if (ws.dim() >= 2) us[0] = us[0] + ws.x(2);
          for (std::size_t k = 0; k < refl.size(); ++k) {
            std::vector<Covector> gus;
            for (const auto& u : us) gus.push_back(G.act(refl[k].element, u));
            Element r = rho(ws.ctx(), static_cast<int>(k));
            out.push_back({r * ws.O(us), Scalar(n % 2 ? -1 : 1) * (ws.O(gus) * r)});
          }
        }
        return out;
      });
  add("l_Pdeltagamma.expansion", "P_+-(gamma_{u_1} ... gamma_{u_n}) in terms of O_u and u beta(v) - beta(u) v", 1, false,
      [](const Workspace& ws) {
        Eqs out;
        for (int n = 1; n <= 3; ++n) {
          auto us = ws.tuple(n);
          if (ws.dim() >= 2) us[0] = us[0] + ws.x(2);
          auto prod = [&](int skip1, int skip2, int swap_at) {
            Element e = ws.num(1);
            for (int j = 0; j < n; ++j) {
              if (j == skip1 || j == skip2) continue;
              e = e * (j == swap_at ? ws.ocal(us[j]) : ws.gamma(us[j]));
            }
            return e;
          };
          Element rhs = Scalar(1 - n) * prod(-1, -1, -1);
          for (int j = 0; j < n; ++j) rhs -= Scalar(2) * prod(-1, -1, j);
          for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
              Element m = ws.lin(us[j]) * ws.beta(us[k]) - ws.beta(us[j]) * ws.lin(us[k]);
              // (-1)^{j+k-1} with 1-based j, k
              Scalar sign = (j + k + 1) % 2 ? -1 : 1;
              rhs -= (Scalar(2) * sign) * (m * prod(j, k, -1));
            }
          Element g = prod(-1, -1, -1);
          out.push_back({ws.osp().P_plus(g), rhs});
          out.push_back({ws.osp().P_minus(g), rhs});
        }
        return out;
      });
  add("l_Oun.first", "explicit expression for O_{u_1...u_n} via O_u and M_uv", 1, false, [](const Workspace& ws) {
    Eqs out;
    for (const auto& us : membership_tuples(ws)) out.push_back({ws.O(us), ws.sc().O_explicit(us, Route::first)});
    return out;
  });
  add("l_Oun.second", "explicit expression for O_{u_1...u_n} via O_u and O_uv", 1, false, [](const Workspace& ws) {
    Eqs out;
    for (const auto& us : membership_tuples(ws)) out.push_back({ws.O(us), ws.sc().O_explicit(us, Route::second)});
    return out;
  });
  add("l_O2gammas.positions", "A(O_{u_1u_2} gamma_{u_3...u_n}) = ... = A(gamma_{u_1...u_{n-2}} O_{u_{n-1}u_n})", 2, false,
      [](const Workspace& ws) {
        Eqs out;
        SkewFactor g = [&ws](const std::vector<Covector>& v) { return ws.gamma(v[0]); };
        SkewFactor o = [&ws](const std::vector<Covector>& v) { return ws.O(v); };
        for (int n = 3; n <= 4; ++n) {
          auto us = ws.tuple(n);
          us[0] = us[0] + ws.x(2);
          Element first;
          for (int p = 0; p + 2 <= n; ++p) {
            std::vector<int> sizes;
            std::vector<SkewFactor> f;
            for (int j = 0; j < n;) {
              if (j == p) {
                sizes.push_back(2);
                f.push_back(o);
                j += 2;
              } else {
                sizes.push_back(1);
                f.push_back(g);
                ++j;
              }
            }
            Element v = antisymmetrized_product(ws.ctx(), us, sizes, f);
            if (p == 0)
              first = v;
            else
              out.push_back({v, first});
          }
        }
        return out;
      });
  for (int n = 3; n <= 4; ++n) {
    add("l_Oun2.n" + std::to_string(n), "(n-3) O = -4(n-2) A(O_{u_1} O_{u_2...u_n}) + 2(n-1) A(O_{u_1u_2} O_{u_3...u_n})", n,
        false, [n](const Workspace& ws) {
          auto us = ws.tuple(n);
          if (ws.dim() > n) us[0] = us[0] + ws.x(n + 1);
          Element rhs = Scalar(-4 * (n - 2)) * AP(ws, us, {1, n - 1}) + Scalar(2 * (n - 1)) * AP(ws, us, {2, n - 2});
          return Eqs{{Scalar(n - 3) * ws.O(us), rhs}};
        });
  }
  const char* ouv = "O_uv in terms of M, gamma and O_u";
  auto uv_pairs = [](const Workspace& ws) {
    return std::vector<std::pair<Covector, Covector>>{{ws.x(1), ws.x(2)}, {ws.x(1), ws.x(1) + ws.x(2)}};
  };
  add("e_Ouv.line1", ouv, 2, false, [uv_pairs](const Workspace& ws) {
    Eqs out;
    for (const auto& [u, v] : uv_pairs(ws))
      out.push_back({ws.O({u, v}), ws.lin(u) * ws.beta(v) - ws.beta(u) * ws.lin(v) +
                                       half() * (ws.gamma(u) * ws.gamma(v) + ws.num(ws.B(u, v))) +
                                       ws.ocal(u) * ws.gamma(v) + ws.gamma(u) * ws.ocal(v)});
    return out;
  });
  add("e_Ouv.line2", ouv, 2, false, [uv_pairs](const Workspace& ws) {
    Eqs out;
    for (const auto& [u, v] : uv_pairs(ws))
      out.push_back({ws.O({u, v}), ws.lin(u) * ws.beta(v) - ws.lin(v) * ws.beta(u) +
                                       half() * (ws.gamma(u) * ws.gamma(v) - ws.num(ws.B(u, v))) +
                                       ws.ocal(u) * ws.gamma(v) - ws.ocal(v) * ws.gamma(u)});
    return out;
  });
  add("e_Ouv2.antisymmetrized", "O_uv = A(gamma_uv)/2 + 2 A(O_u gamma_v) + M_uv", 2, false, [uv_pairs](const Workspace& ws) {
    Eqs out;
    SkewFactor g = [&ws](const std::vector<Covector>& v) { return ws.gamma(v[0]); };
    SkewFactor o = [&ws](const std::vector<Covector>& v) { return ws.ocal(v[0]); };
    for (const auto& [u, v] : uv_pairs(ws))
      out.push_back({ws.O({u, v}), half() * antisymmetrize(ws.ctx(), {u, v}) +
                                       Scalar(2) * antisymmetrized_product(ws.ctx(), {u, v}, {1, 1}, {o, g}) + ws.M(u, v)});
    return out;
  });
  add("e_POuv.projector", "-P_delta(gamma_u gamma_v)/2 = O_uv - B(u, v)/2", 2, false, [uv_pairs](const Workspace& ws) {
    Eqs out;
    for (const auto& [u, v] : uv_pairs(ws)) {
      Element g = ws.gamma(u) * ws.gamma(v), rhs = ws.O({u, v}) - ws.num(half() * ws.B(u, v));
      out.push_back({-half() * ws.osp().P_plus(g), rhs});
      out.push_back({-half() * ws.osp().P_minus(g), rhs});
    }
    return out;
  });
  add("e_Ouvw.explicit", "O_uvw in terms of A(gamma), M and O_u", 3, false, [](const Workspace& ws) {
    std::vector<std::array<Covector, 3>> ts{{ws.x(1), ws.x(2), ws.x(3)}, {ws.x(1) + ws.x(2), ws.x(2), ws.x(3) - ws.x(1)}};
    Eqs out;
    auto A2 = [&ws](const Covector& a, const Covector& b) { return antisymmetrize(ws.ctx(), {a, b}); };
    for (const auto& [u, v, w] : ts)
      out.push_back({ws.O({u, v, w}), antisymmetrize(ws.ctx(), {u, v, w}) + ws.M(v, w) * ws.gamma(u) -
                                          ws.M(u, w) * ws.gamma(v) + ws.M(u, v) * ws.gamma(w) +
                                          ws.ocal(u) * A2(v, w) - ws.ocal(v) * A2(u, w) + ws.ocal(w) * A2(u, v)});
    return out;
  });
  const char* ospcent = "generated by rho(G~) and the elements O_uv and O_uvw";
  add("p_ospcent.Pomegauv", ospcent, 2, false, [uv_pairs](const Workspace& ws) {
    Eqs out;
    for (const auto& [u, v] : uv_pairs(ws)) {
      Element rhs = Scalar(2) * ws.O({u, v}) + Scalar(2) * (ws.ocal(u) * ws.ocal(v)) - Scalar(2) * (ws.ocal(v) * ws.ocal(u));
      out.push_back({ws.osp().P_plus(ws.M(u, v)), rhs});
      out.push_back({ws.osp().P_minus(ws.M(u, v)), rhs});
    }
    return out;
  });
  add("p_ospcent.Ps", ospcent, 1, false, [](const Workspace& ws) {
    Eqs out;
    const auto& refl = ws.ctx()->group().reflections();
    for (std::size_t k = 0; k < refl.size(); ++k) {
      Scalar c = Scalar(-2) * Scalar(inverse_sqrt(refl[k].root_norm));
      Element rhs = c * (ws.ocal(refl[k].root) * rho(ws.ctx(), static_cast<int>(k)));
      out.push_back({ws.osp().P_plus(ws.group(refl[k].element)), rhs});
      out.push_back({ws.osp().P_minus(ws.group(refl[k].element)), rhs});
    }
    return out;
  });
  add("p_ospcent.rho", ospcent, 1, false, [](const Workspace& ws) {
    Eqs out;
    for (int k = 0; k < static_cast<int>(ws.ctx()->group().reflections().size()); ++k) {
      out.push_back({sc(ws.osp().X(), rho(ws.ctx(), k)), ws.zero()});
      out.push_back({sc(ws.osp().D(), rho(ws.ctx(), k)), ws.zero()});
    }
    return out;
  });

  // ---- relations of the supercentralizer
  for (int n = 2; n <= 5; ++n) {
    add("p_OujOun.n" + std::to_string(n), "A(O_{u_1} O_{u_2...u_n}) = A(O_{u_1...u_{n-1}} O_{u_n})", n, false,
        [n](const Workspace& ws) {
          auto us = ws.tuple(n);
          if (ws.dim() > n) us[0] = us[0] + ws.x(n + 1);
          Eqs out{{AP(ws, us, {1, n - 1}), AP(ws, us, {n - 1, 1})}};
          if (n >= 3) out.push_back({AP(ws, us, {2, n - 2}), AP(ws, us, {n - 2, 2})});
          return out;
        });
  }
  const char* specific = "Specific cases of the previous proposition";
  add("e_OuvwOx.line1", specific, 2, false, [](const Workspace& ws) {
    std::vector<std::vector<Covector>> ts{ws.tuple(3), {ws.x(1) + ws.x(2), ws.x(2), ws.x(1)}};
    Eqs out;
    for (const auto& t : ts) {
      const auto &u = t[0], &v = t[1], &w = t[2];
      out.push_back({sc(ws.O({u, v}), ws.O({w})) - sc(ws.O({u, w}), ws.O({v})) + sc(ws.O({v, w}), ws.O({u})), ws.zero()});
    }
    return out;
  });
  add("e_OuvwOx.line2", specific, 3, false, [](const Workspace& ws) {
    auto t = ws.tuple(4);
    Covector u = t[0], v = t[1], w = t[2], z = t[3];
    return Eqs{{sc(ws.O({u, v, w}), ws.O({z})) - sc(ws.O({u, v, z}), ws.O({w})) + sc(ws.O({u, w, z}), ws.O({v})) -
                    sc(ws.O({v, w, z}), ws.O({u})),
                ws.zero()}};
  });
  for (int n = 4; n <= 5; ++n) {
    add("l_O45.n" + std::to_string(n), "O with four or five indices via products of O with fewer indices", n, false,
        [n](const Workspace& ws) {
          auto us = ws.tuple(n);
          if (n == 4) return Eqs{{ws.O(us), Scalar(6) * AP(ws, us, {2, 2}) - Scalar(8) * AP(ws, us, {3, 1})}};
          return Eqs{{ws.O(us), Scalar(4) * AP(ws, us, {3, 2}) + Scalar(48) * AP(ws, us, {3, 1, 1}) -
                                    Scalar(36) * AP(ws, us, {2, 2, 1})}};
        });
  }
  const char* oabouv = "bracket [O_ab, O_uv]";
  auto quads_for = [](const Workspace& ws) {
    return std::vector<std::array<Covector, 4>>{{ws.x(1), ws.x(2), ws.x(3), ws.x(1)},
                                                {ws.x(1), ws.x(2), ws.x(2), ws.x(3)},
                                                {ws.x(1), ws.x(2), ws.x(1) + ws.x(2), ws.x(3)},
                                                {ws.x(1) + ws.x(3), ws.x(2), ws.x(1), ws.x(2) - ws.x(3)}};
  };
  add("p_OabOuv.first", oabouv, 3, false, [quads_for](const Workspace& ws) {
    Eqs out;
    auto G = [&ws](const Covector& a, const Covector& b) { return asc(ws.ocal(a), ws.ocal(b)); };
    for (const auto& [a, b, u, v] : quads_for(ws)) {
      auto n = [&ws](const Scalar& c) { return ws.num(c); };
      Element rhs = n(ws.B(b, u)) * (ws.O({a, v}) + G(a, v)) - n(ws.B(a, u)) * (ws.O({b, v}) + G(b, v)) -
                    n(ws.B(b, v)) * (ws.O({a, u}) + G(a, u)) + n(ws.B(a, v)) * (ws.O({b, u}) + G(b, u)) +
                    half() * (sc(ws.O({a}), ws.O({b, u, v})) - sc(ws.O({b}), ws.O({a, u, v})) +
                              sc(ws.O({a, b, u}), ws.O({v})) - sc(ws.O({a, b, v}), ws.O({u})));
      out.push_back({sc(ws.O({a, b}), ws.O({u, v})), rhs});
    }
    return out;
  });
  add("p_OabOuv.second", oabouv, 3, false, [quads_for](const Workspace& ws) {
    Eqs out;
    auto G = [&ws](const Covector& a, const Covector& b) { return asc(ws.ocal(a), ws.ocal(b)); };
    for (const auto& [a, b, u, v] : quads_for(ws)) {
      Covector uh = ws.B(b, u) * a - ws.B(a, u) * b, vh = ws.B(b, v) * a - ws.B(a, v) * b;
      Element rhs = ws.O({uh, v}) + G(uh, v) + sc(ws.O({a, b, u}), ws.O({v})) + ws.O({u, vh}) + G(u, vh) -
                    sc(ws.O({a, b, v}), ws.O({u}));
      out.push_back({sc(ws.O({a, b}), ws.O({u, v})), rhs});
    }
    return out;
  });
  const char* o2o34 = "denote x^ = B(b,x)a - B(a,x)b";
  add("p_O2O34.first", o2o34, 4, false, [](const Workspace& ws) {
    std::vector<std::array<Covector, 5>> ts{{ws.x(1), ws.x(2), ws.x(3), ws.x(4), ws.x(1)},
                                            {ws.x(1), ws.x(2), ws.x(1), ws.x(3), ws.x(4)},
                                            {ws.x(1), ws.x(2), ws.x(2), ws.x(1) + ws.x(3), ws.x(4)}};
    if (ws.dim() >= 5) ts.push_back({ws.x(1), ws.x(2), ws.x(3), ws.x(4), ws.x(5)});
    Eqs out;
    for (const auto& [a, b, u, v, w] : ts) {
      auto hat = [&](const Covector& x) { return ws.B(b, x) * a - ws.B(a, x) * b; };
      Element rhs = ws.O({hat(u), v, w}) + ws.O({u, hat(v), w}) + ws.O({u, v, hat(w)}) +
                    asc(ws.ocal(hat(u)), ws.O({v, w})) - asc(ws.ocal(hat(v)), ws.O({u, w})) +
                    asc(ws.ocal(hat(w)), ws.O({u, v})) + sc(ws.O({a}), ws.O({b, u, v, w})) -
                    sc(ws.O({b}), ws.O({a, u, v, w}));
      out.push_back({sc(ws.O({a, b}), ws.O({u, v, w})), rhs});
    }
    return out;
  });
  add("p_O2O34.second", o2o34, 6, false, [](const Workspace& ws) {
    std::vector<std::array<Covector, 6>> ts{{ws.x(1), ws.x(2), ws.x(3), ws.x(4), ws.x(1), ws.x(5)},
                                            {ws.x(1), ws.x(2), ws.x(3) + ws.x(1), ws.x(2), ws.x(5), ws.x(6) + ws.x(2)},
                                            {ws.x(1), ws.x(2), ws.x(3), ws.x(1) + ws.x(4), ws.x(2), ws.x(6)}};
    Eqs out;
    for (const auto& [a, b, c, u, v, w] : ts) {
      auto hat = [&](const Covector& x) { return ws.B(b, x) * a - ws.B(a, x) * b; };
      Element rhs = ws.O({hat(c), u, v, w}) + ws.O({c, hat(u), v, w}) + ws.O({c, u, hat(v), w}) +
                    ws.O({c, u, v, hat(w)}) + asc(ws.ocal(hat(c)), ws.O({u, v, w})) -
                    asc(ws.ocal(hat(u)), ws.O({c, v, w})) + asc(ws.ocal(hat(v)), ws.O({c, u, w})) -
                    asc(ws.ocal(hat(w)), ws.O({c, u, v})) + sc(ws.O({a}), ws.O({b, c, u, v, w})) -
                    sc(ws.O({b}), ws.O({a, c, u, v, w}));
      out.push_back({sc(ws.O({a, b}), ws.O({c, u, v, w})), rhs});
    }
    return out;
  });
  add("p_O3O3.pairing", "the only B-pairings between {a,b,c} and {u,v,w} are B(a,u), B(b,v), B(c,w)", 6, false,
      [](const Workspace& ws) {
        std::vector<std::array<Covector, 6>> ts{
            {ws.x(1), ws.x(2), ws.x(3), ws.x(4), ws.x(5), ws.x(6)},
            {ws.x(1), ws.x(2), ws.x(3), ws.x(1) + ws.x(4), ws.x(2) + ws.x(5), ws.x(3) + ws.x(6)},
            {ws.x(1), ws.x(2), ws.x(3), ws.x(1), ws.x(5), ws.x(6)},
            {ws.x(1), ws.x(2), ws.x(3), ws.x(1), ws.x(2), ws.x(6)},
            {ws.x(1), ws.x(2), ws.x(3), ws.x(1), ws.x(2), ws.x(3)}};
        Eqs out;
        for (const auto& [a, b, c, u, v, w] : ts) {
          Scalar bau = ws.B(a, u), bbv = ws.B(b, v), bcw = ws.B(c, w);
          auto O = [&ws](std::vector<Covector> us) { return ws.O(us); };
          Element rhs = bau * (O({b, c, v, w}) + asc(O({b, c}), O({v, w}))) + sc(O({a}), O({b, c, u, v, w})) +
                        bbv * (O({a, c, u, w}) + asc(O({a, c}), O({u, w}))) - sc(O({b}), O({a, c, u, v, w})) +
                        bcw * (O({a, b, u, v}) + asc(O({a, b}), O({u, v}))) + sc(O({c}), O({a, b, u, v, w})) +
                        (bbv * bcw) * sc(O({a}), O({u})) + (bau * bcw) * sc(O({b}), O({v})) +
                        (bau * bbv) * sc(O({c}), O({w})) - ws.num(half() * bau * bbv * bcw);
          out.push_back({sc(O({a, b, c}), O({u, v, w})), rhs});
        }
        return out;
      });

  // ---- orthonormal basis corollary; i, j, k, l, m, n are 1..6 in order
  const char* cor = "distinct elements of the set {1,...,d}";
  auto corollary = [&](const std::string& name, int min_dim, std::function<Eqs(const Workspace&)> f) {
    add("corollary." + name, cor, min_dim, true, std::move(f));
  };
  corollary("ij_ki", 3, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3;
    return Eqs{{sc(O({i, j}), O({k, i})), O({j, k}) + asc(O({j}), O({k})) + sc(O({i, j, k}), O({i}))}};
  });
  corollary("ij_kl", 4, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3, l = 4;
    Element lhs = sc(O({i, j}), O({k, l}));
    return Eqs{{lhs, half() * (sc(O({i}), O({j, k, l})) - sc(O({j}), O({i, k, l})) - sc(O({i, j, l}), O({k})) +
                               sc(O({i, j, k}), O({l})))},
               {lhs, sc(O({i}), O({j, k, l})) - sc(O({j}), O({i, k, l}))}};
  });
  corollary("jk_lmn", 5, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3, m = 4, n = 5;
    return Eqs{{sc(O({j, k}), O({l, m, n})), sc(O({j}), O({k, l, m, n})) - sc(O({k}), O({j, l, m, n}))}};
  });
  corollary("jk_jlm", 4, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3, m = 4;
    return Eqs{{sc(O({j, k}), O({j, l, m})), -O({k, l, m}) - asc(O({k}), O({l, m})) - sc(O({j}), O({j, k, l, m}))}};
  });
  corollary("jk_jkl", 3, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3;
    return Eqs{{sc(O({j, k}), O({j, k, l})), -asc(O({j}), O({j, l})) - asc(O({k}), O({k, l}))}};
  });
  corollary("e24", 3, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3;
    Element s = sq(O({i})) + sq(O({j})) + sq(O({k})) + sq(O({i, j})) + sq(O({i, k})) + sq(O({j, k}));
    return Eqs{{sc(O({i, j, k}), O({i, j, k})), Scalar(2) * s - ws.num(half())}};
  });
  corollary("e25", 4, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3, l = 4;
    return Eqs{{sc(O({i, j, k}), O({i, j, l})),
                sc(O({k}), O({l})) + asc(O({i, k}), O({i, l})) + asc(O({j, k}), O({j, l}))}};
  });
  corollary("e26", 5, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3, m = 4, n = 5;
    return Eqs{{sc(O({i, j, k}), O({i, m, n})),
                O({j, k, m, n}) + asc(O({j, k}), O({m, n})) + sc(O({i}), O({i, j, k, m, n}))}};
  });
  corollary("e27", 6, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3, l = 4, m = 5, n = 6;
    return Eqs{{sc(O({i, j, k}), O({l, m, n})), sc(O({i}), O({j, k, l, m, n})) - sc(O({j}), O({i, k, l, m, n})) +
                                                    sc(O({k}), O({i, j, l, m, n}))}};
  });
  corollary("jk_jklm", 4, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3, m = 4;
    return Eqs{{sc(O({j, k}), O({j, k, l, m})), -asc(O({j}), O({j, l, m})) - asc(O({k}), O({k, l, m}))}};
  });
  corollary("jk_jlmn", 5, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3, m = 4, n = 5;
    return Eqs{{sc(O({j, k}), O({j, l, m, n})),
                -O({k, l, m, n}) - asc(O({k}), O({l, m, n})) - sc(O({j}), O({j, k, l, m, n}))}};
  });
  corollary("ij_klmn", 6, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int i = 1, j = 2, k = 3, l = 4, m = 5, n = 6;
    return Eqs{{sc(O({i, j}), O({k, l, m, n})), sc(O({i}), O({j, k, l, m, n})) - sc(O({j}), O({i, k, l, m, n}))}};
  });
  corollary("Ouvw2", 3, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int a = 1, b = 2, c = 3;
    return Eqs{{sq(O({a, b, c})), ws.num(frac(-1, 4)) + sq(O({a})) + sq(O({b})) + sq(O({c})) + sq(O({a, b})) +
                                      sq(O({a, c})) + sq(O({b, c}))}};
  });
  corollary("jkl_jkm", 4, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3, m = 4;
    return Eqs{{asc(O({j, k, l}), O({j, k, m})), -O({l, m}) - asc(O({l}), O({m})) + asc(O({j, k}), O({j, k, l, m}))}};
  });
  corollary("jkl_jmn", 5, [](const Workspace& ws) {
    auto O = [&ws](std::vector<int> a) { return ws.Oi(a); };
    int j = 1, k = 2, l = 3, m = 4, n = 5;
    return Eqs{{asc(O({j, k, l}), O({j, m, n})), -asc(O({j}), O({j, k, l, m, n})) - asc(O({j, k}), O({j, l, m, n})) +
                                                     asc(O({j, l}), O({j, k, m, n}))}};
  });

  for (int n = 1; n <= 4; ++n) {
    add("p_OA2.n" + std::to_string(n), "(e_A)^2 = (-1)^{n(n-1)/2}", n, true, [n](const Workspace& ws) {
      int d = ws.dim();
      std::vector<std::vector<int>> As;
      std::vector<int> low(n), high(n);
      for (int j = 0; j < n; ++j) {
        low[j] = j + 1;
        high[j] = d - n + j + 1;
      }
      As.push_back(low);
      if (high != low) As.push_back(high);
      Eqs out;
      for (const auto& A : As) {
        Element s1 = ws.zero(), s2 = ws.zero();
        for (std::size_t p = 0; p < A.size(); ++p) {
          s1 += sq(ws.Oi({A[p]}));
          for (std::size_t q = p + 1; q < A.size(); ++q) s2 += sq(ws.Oi({A[p], A[q]}));
        }
        Scalar sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
        Element rhs = sign * (ws.num(frac((n - 1) * (n - 2), 8)) - Scalar(n - 2) * s1 - s2);
        out.push_back({sq(ws.Oi(A)), rhs});
      }
      return out;
    });
  }

  // ---- the top element and the central element
  add("e_OD.signs", "O_{1...d} (anti)commutes with O_u, O_uv, O_uvw", 1, false, [](const Workspace& ws) {
    Element top = ws.sc().O_top();
    Eqs out;
    std::vector<Covector> ones{ws.x(1)};
    if (ws.dim() >= 2) ones.push_back(ws.x(1) + ws.x(2));
    for (const auto& u : ones) out.push_back({asc(top, ws.O({u})), ws.zero()});
    if (ws.dim() >= 2) {
      out.push_back({sc(top, ws.O({ws.x(1), ws.x(2)})), ws.zero()});
      out.push_back({sc(top, ws.O({ws.x(1) + ws.x(2), ws.x(1)})), ws.zero()});
    }
    if (ws.dim() >= 3) {
      out.push_back({asc(top, ws.O(ws.xs({1, 2, 3}))), ws.zero()});
      out.push_back({asc(top, ws.O({ws.x(1) + ws.x(2), ws.x(2), ws.x(3)})), ws.zero()});
    }
    return out;
  });
  add("e_OD.scasimir", "O_{1...d} = (F-F+ - F+F- - 1/2) e_{1...d}", 1, false, [](const Workspace& ws) {
    return Eqs{{ws.sc().O_top(), -(ws.osp().scasimir() * e_top(ws))}};
  });
  const char* central = "is central in Cent(osp(1|2))";
  add("e_central.Oj", central, 1, true, [](const Workspace& ws) {
    Element om = ws.sc().central_omega();
    Eqs out;
    for (int j = 1; j <= ws.dim(); ++j) out.push_back({sc(om, ws.Oi({j})), ws.zero()});
    return out;
  });
  add("e_central.Ojk", central, 2, true, [](const Workspace& ws) {
    Element om = ws.sc().central_omega();
    Eqs out;
    for (const auto& s : subsets(ws.dim(), 2)) out.push_back({sc(om, ws.Oi(s)), ws.zero()});
    return out;
  });
  add("e_central.Ojkl", central, 3, true, [](const Workspace& ws) {
    Element om = ws.sc().central_omega();
    Eqs out;
    for (const auto& s : subsets(ws.dim(), 3)) out.push_back({sc(om, ws.Oi(s)), ws.zero()});
    return out;
  });
  add("e_central.rho", central, 1, true, [](const Workspace& ws) {
    Element om = ws.sc().central_omega();
    Eqs out;
    for (int k = 0; k < static_cast<int>(ws.ctx()->group().reflections().size()); ++k)
      out.push_back({sc(om, rho(ws.ctx(), k)), ws.zero()});
    return out;
  });
  add("e_central.sumO3", "sum of (O_ijk)^2 over i < j < k", 3, true, [](const Workspace& ws) {
    int d = ws.dim();
    Element s1 = ws.zero(), s2 = ws.zero(), s3 = ws.zero();
    for (const auto& s : subsets(d, 1)) s1 += sq(ws.Oi(s));
    for (const auto& s : subsets(d, 2)) s2 += sq(ws.Oi(s));
    for (const auto& s : subsets(d, 3)) s3 += sq(ws.Oi(s));
    return Eqs{{s3, ws.num(frac(-d * (d - 1) * (d - 2), 24)) + Scalar(frac((d - 1) * (d - 2), 2)) * s1 +
                        Scalar(d - 2) * s2}};
  });
  add("e_central.alternative", "the following combination is also central", 3, true, [](const Workspace& ws) {
    int d = ws.dim();
    Element c = ws.zero();
    for (const auto& s : subsets(d, 1)) c += Scalar(frac((d - 1) * (d - 2), 2)) * sq(ws.Oi(s));
    for (const auto& s : subsets(d, 2)) c += sq(ws.Oi(s));
    for (const auto& s : subsets(d, 3)) c += sq(ws.Oi(s));
    Eqs out;
    for (int n = 1; n <= 3; ++n)
      for (const auto& s : subsets(d, n)) out.push_back({sc(c, ws.Oi(s)), ws.zero()});
    return out;
  });

  std::sort(cat.begin(), cat.end(), [](const IdentityCase& a, const IdentityCase& b) { return a.id < b.id; });
  return cat;
}

}  // namespace

const std::vector<IdentityCase>& catalog() {
  static const std::vector<IdentityCase> cat = build_catalog();
  return cat;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& c : catalog())
    if (out.empty() || out.back() != c.suite()) out.push_back(c.suite());
  return out;
}

const IdentityCase* find_case(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return &c;
  return nullptr;
}

// ---------------------------------------------------------------- runner

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

namespace {

std::vector<PolySpinor> oracle_samples(const DunklOracle& oracle, std::uint64_t seed, int count, int max_degree) {
  std::vector<PolySpinor> out;
  for (int k = 0; k < count; ++k) out.push_back(oracle.random_vector(seed * 1000003ULL + k, max_degree));
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SuiteReport run_case(const IdentityCase& c, const Workspace& ws, const GroupConfig& config, const KappaMode& kappa,
                     const RunOptions& options) {
  SuiteReport rep;
  rep.id = c.id;
  rep.anchor = c.anchor;
  rep.group = config.name;
  rep.dim = ws.dim();
  rep.kappa = kappa.label();
  if (ws.dim() < c.min_dim) {
    rep.status = Status::skipped;
    rep.reason = "needs d >= " + std::to_string(c.min_dim);
    return rep;
  }
  if (c.needs_orthonormal && !ws.orthonormal()) {
    rep.status = Status::skipped;
    rep.reason = "needs an orthonormal basis";
    return rep;
  }
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<Equation> eqs = c.build(ws);
    rep.status = Status::pass;
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      Element r = eqs[k].lhs - eqs[k].rhs;
      if (r.is_zero()) continue;
      rep.residual_terms += r.size();
      if (rep.status == Status::pass) {
        rep.status = Status::fail;
        rep.witness = "equation " + std::to_string(k + 1) + ": " + monomial_string(*ws.ctx(), *r.witness());
      }
    }
    if (options.oracle && rep.status == Status::pass && ws.orthonormal()) {
      DunklOracle oracle(ws.ctx());
      auto samples = oracle_samples(oracle, options.seed, options.oracle_samples, options.max_degree);
      bool agree = true;
      for (std::size_t k = 0; k < eqs.size() && k < 2 && agree; ++k)
        for (const auto& v : samples)
          if (!(oracle.act(eqs[k].lhs, v) == oracle.act(eqs[k].rhs, v))) {
            agree = false;
            break;
          }
      rep.oracle = agree;
      if (!agree) {
        rep.status = Status::fail;
        rep.witness = "oracle disagrees with the engine";
      }
    }
  } catch (const std::exception& e) {
    rep.status = Status::fail;
    rep.reason = std::string("error: ") + e.what();
  }
  rep.ms = options.timing ? elapsed_ms(t0) : 0;
  return rep;
}

std::vector<SuiteReport> run_suite(const std::string& suite, const GroupConfig& config, const KappaMode& kappa,
                                   const RunOptions& options) {
  std::vector<const IdentityCase*> cases;
  for (const auto& c : catalog())
    if (suite == "all" || c.suite() == suite || c.id == suite) cases.push_back(&c);
  if (cases.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  Workspace ws(make_algebra(config, kappa));
  std::vector<SuiteReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) reports[i] = run_case(*cases[i], ws, config, kappa, options);
  };
  int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

// ---------------------------------------------------------------- oracle cross-check

const std::vector<std::string>& oracle_probe_ids() {
  static const std::vector<std::string> ids{
      "osp12re.FpFm",     "osp12re.HF",        "osp12re.FF",          "osp12re.EpEm",
      "osp12re.HE",       "osp12re.FE",        "e_RC.relations",      "l_Buv.symmetry",
      "e_Ogamma.anticommutator", "l_Oug.Omega", "e_Ov2.commutator",   "p_gensym2.R",
      "e_DAMO.forms",     "p_bbH.bracket",     "e_Ouv.line2",         "e_POuv.projector",
      "p_ospcent.Pomegauv", "p_ospcent.Ps",    "e_Centsl2.commute",   "l_rhoG.conjugation",
      "e_Ouvw.explicit",  "e_OuvwOx.line1",    "e_comre.relations",   "e_Clifcom.anticommutator"};
  return ids;
}

Element random_element(const AlgebraPtr& ctx, std::mt19937_64& rng, int terms, int max_degree) {
  int d = ctx->dim();
  int order = ctx->group().order();
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_degree), coord(0, d - 1), grp(0, order - 1),
      mask(0, (1 << d) - 1), kap(0, 3);
  Element out(ctx);
  for (int t = 0; t < terms; ++t) {
    Element word = Element::scalar(ctx, 1);
    int total = deg(rng);
    for (int k = 0; k < total; ++k) {
      int p = coord(rng);
      word = word * ((rng() & 1) ? Element::x(ctx, p) : Element::y(ctx, p));
    }
    word = word * Element::group(ctx, grp(rng));
    int m = mask(rng);
    for (int p = 0; p < d; ++p)
      if (m >> p & 1) word = word * Element::e(ctx, p);
    int c = coef(rng);
    if (c == 0) c = 1;
    Scalar s(c);
    if (kap(rng) == 0 && ctx->kappa_classes() > 0) s = s * ctx->kappa(0);
    if (kap(rng) == 1) s = s * Scalar(BaseNumber::i());
    out += s * word;
  }
  return out;
}

SuiteReport run_oracle_crosscheck(const GroupConfig& config, const KappaMode& kappa, const CrosscheckOptions& options) {
  SuiteReport rep;
  rep.id = options.mutate ? "oracle.mutation" : "oracle.crosscheck";
  rep.anchor = "natural (faithful) action on the polynomial space S(V*)";
  rep.group = config.name;
  rep.kappa = kappa.label();
  auto t0 = std::chrono::steady_clock::now();
  try {
    Workspace ws(make_algebra(config, kappa));
    rep.dim = ws.dim();
    DunklOracle oracle(ws.ctx());
    auto samples = oracle_samples(oracle, options.seed, options.samples, options.max_degree);
    rep.status = Status::pass;
    auto fail = [&](const std::string& w) {
      if (rep.status == Status::pass) rep.witness = w;
      rep.status = Status::fail;
      ++rep.residual_terms;
    };
    int used = 0;
    for (const auto& id : oracle_probe_ids()) {
      if (used >= options.residuals) break;
      const IdentityCase* c = find_case(id);
      if (!c || ws.dim() < c->min_dim) continue;
      auto eqs = c->build(ws);
      if (eqs.empty()) continue;
      Equation e = eqs.front();
      if (used == 0 && options.mutate) e.lhs += ws.num(1);
      if (!(e.lhs - e.rhs).is_zero()) fail(id + ": engine residual is nonzero");
      for (std::size_t k = 0; k < samples.size(); ++k)
        if (!(oracle.act(e.lhs, samples[k]) == oracle.act(e.rhs, samples[k]))) {
          fail(id + ": oracle actions differ on sample " + std::to_string(k));
          break;
        }
      ++used;
    }
    if (used < options.residuals) fail("only " + std::to_string(used) + " probe identities fit this group");
    std::mt19937_64 rng(options.seed);
    for (int k = 0; k < options.products; ++k) {
      Element a = random_element(ws.ctx(), rng, 2, 2), b = random_element(ws.ctx(), rng, 2, 2);
      Element ab = a * b;
      for (std::size_t s = 0; s < samples.size(); ++s)
        if (!(oracle.act(ab, samples[s]) == oracle.act(a, oracle.act(b, samples[s])))) {
          fail("product " + std::to_string(k) + ": act(ab, v) != act(a, act(b, v)) on sample " + std::to_string(s));
          break;
        }
    }
  } catch (const std::exception& e) {
    rep.status = Status::fail;
    rep.reason = std::string("error: ") + e.what();
  }
  rep.ms = elapsed_ms(t0);
  return rep;
}

// ---------------------------------------------------------------- output

std::string report_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["group"] = r.group;
    j["dim"] = r.dim;
    j["kappa"] = r.kappa;
    j["status"] = to_string(r.status);
    j["residual_terms"] = r.residual_terms;
    j["witness"] = r.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.witness);
    j["ms"] = std::round(r.ms * 1000) / 1000;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.oracle) j["oracle"] = *r.oracle;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string report_table(const std::vector<SuiteReport>& reports) {
  std::size_t w = 4;
  for (const auto& r : reports) w = std::max(w, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::setw(8) << "status" << std::setw(10) << "group"
     << std::setw(10) << "kappa" << std::right << std::setw(8) << "terms" << std::setw(11) << "ms"
     << "  detail\n";
  for (const auto& r : reports) {
    std::string detail = r.witness.empty() ? r.reason : r.witness;
    if (r.oracle) detail += (detail.empty() ? "" : "; ") + std::string(*r.oracle ? "oracle agrees" : "oracle disagrees");
    os << std::left << std::setw(static_cast<int>(w)) << r.id << "  " << std::setw(8) << to_string(r.status)
       << std::setw(10) << r.group << std::setw(10) << r.kappa << std::right << std::setw(8) << r.residual_terms
       << std::setw(11) << std::fixed << std::setprecision(1) << r.ms << "  " << detail << "\n";
  }
  return os.str();
}

}  // namespace pinosp
