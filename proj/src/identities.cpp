#include "wacm/identities.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <thread>

#include "wacm/forms.hpp"
#include "wacm/sampling.hpp"
#include "wacm/spectral.hpp"

namespace wacm {

namespace {

using A4 = std::array<Vec, 4>;

Parts vec_eq(Vec l, Vec r) {
  Parts p;
  p.vecs.emplace_back(std::move(l), std::move(r));
  return p;
}

Parts scal_eq(double l, double r) {
  Parts p;
  p.scalars.emplace_back(l, r);
  return p;
}

// operator field with raw partials, for assembling two-form component fields
struct OpField {
  Mat m;
  Grid3<double> dm;  // (k, a, b) = d_k m(a, b)
};

OpField op_mul(const OpField& A, const OpField& B, int d) {
  OpField out;
  out.m = A.m * B.m;
  out.dm = Grid3<double>(d, d, d);
  for (int k = 0; k < d; ++k)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        double s = 0.0;
        for (int m = 0; m < d; ++m)
          s += A.dm(k, a, m) * B.m(m, b) + A.m(a, m) * B.dm(k, m, b);
        out.dm(k, a, b) = s;
      }
  return out;
}

OpField op_phi_field(const StructureData& G) { return {G.phi, G.dphi_raw}; }
OpField op_h_field(const StructureData& G) { return {G.h, G.dh_raw}; }
OpField op_Qt_field(const StructureData& G) {
  return {G.Qt, G.dQ_raw};  // d(Q - id) = dQ
}

// bilinear form field B(X,Y) = g(F X, Y) with raw partials
struct BilForm {
  Grid2<double> b;
  Grid3<double> db;
};

BilForm lower_op(const StructureData& G, const OpField& F) {
  const int d = G.d;
  BilForm out;
  out.b = Grid2<double>(d, d);
  out.db = Grid3<double>(d, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += F.m(k, i) * G.geo.g(k, j);
      out.b(i, j) = s;
      for (int m = 0; m < d; ++m) {
        double t = 0.0;
        for (int k = 0; k < d; ++k)
          t += F.dm(m, k, i) * G.geo.g(k, j) + F.m(k, i) * G.geo.dg(m, k, j);
        out.db(m, i, j) = t;
      }
    }
  return out;
}

Grid2<double> antisym_part(const Grid2<double>& b) {
  const int d = b.rows();
  Grid2<double> out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out(i, j) = 0.5 * (b(i, j) - b(j, i));
  return out;
}

void add(std::vector<IdentityRecord>& cat, std::string id, std::string alias, Hyp hyp,
         int arity, bool needs_fields, std::string anchor, std::string note,
         std::function<Parts(const StructureData&, const A4&)> eval) {
  IdentityRecord r;
  r.id = std::move(id);
  r.alias = std::move(alias);
  r.hypothesis = hyp;
  r.arity = arity;
  r.needs_fields = needs_fields;
  r.anchor = std::move(anchor);
  r.note = std::move(note);
  r.eval = std::move(eval);
  cat.push_back(std::move(r));
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> cat;

  // ---- structure axioms -------------------------------------------------
  add(cat, "AX-1", "E-nS-2.2", Hyp::H0, 2, false,
      "sec 2: g(phi X, phi Y) = g(X, Q Y) - eta(X) eta(Y)", "",
      [](const StructureData& G, const A4& a) {
        return scal_eq(G.ip(G.phi * a[0], G.phi * a[1]),
                       G.ip(a[0], G.Q * a[1]) - G.eta_of(a[0]) * G.eta_of(a[1]));
      });
  add(cat, "AX-2", "", Hyp::H0, 0, false, "sec 2: eta(xi) = 1, phi xi = 0", "",
      [](const StructureData& G, const A4&) {
        Parts p = scal_eq(G.eta_of(G.xi), 1.0);
        p.vecs.emplace_back(G.phi * G.xi, Vec::Zero(G.d));
        return p;
      });
  add(cat, "AX-3", "", Hyp::H0, 1, false, "sec 2: eta o phi = 0", "",
      [](const StructureData& G, const A4& a) {
        return scal_eq(G.eta_of(G.phi * a[0]), 0.0);
      });
  add(cat, "AX-4", "", Hyp::H0, 1, false, "sec 2: eta o Q = eta", "",
      [](const StructureData& G, const A4& a) {
        return scal_eq(G.eta_of(G.Q * a[0]), G.eta_of(a[0]));
      });
  add(cat, "AX-5", "", Hyp::H0, 1, false, "sec 2: [Q, phi] = Q phi - phi Q = 0", "",
      [](const StructureData& G, const A4& a) {
        return vec_eq(G.Q * (G.phi * a[0]), G.phi * (G.Q * a[0]));
      });
  add(cat, "AX-6", "", Hyp::H0, 2, false,
      "sec 2: phi is skew-symmetric, Q is self-adjoint", "",
      [](const StructureData& G, const A4& a) {
        Parts p = scal_eq(G.ip(G.phi * a[0], a[1]), -G.ip(a[0], G.phi * a[1]));
        p.scalars.emplace_back(G.ip(G.Q * a[0], a[1]), G.ip(a[0], G.Q * a[1]));
        return p;
      });

  // ---- kernel-level commutation ------------------------------------------
  add(cat, "RIC-1", "E-nS-05", Hyp::HANY, 4, false,
      "sec 2: Ricci identity for the (1,1)-tensor phi", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &V = a[2], &Z = a[3];
        double lhs = G.ip(G.d2phi(X, Y, V), Z) - G.ip(G.d2phi(Y, X, V), Z);
        double rhs = G.curv4(X, Y, G.phi * V, Z) + G.curv4(X, Y, V, G.phi * Z);
        return scal_eq(lhs, rhs);
      });

  // ---- Sasakian characterization -----------------------------------------
  add(cat, "SAS-0", "E-nS-Sas", Hyp::HSAS, 2, false,
      "sec 1: (nabla_X phi)Y = g(X,Y) xi - eta(Y) X", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1];
        return vec_eq(G.dphi(X, Y), G.ip(X, Y) * G.xi - G.eta_of(Y) * X);
      });

  // ---- weak nearly Sasakian definition ------------------------------------
  add(cat, "NS-0", "E-nS-00b", Hyp::H1, 2, false,
      "definition: (nabla_Y phi)Z + (nabla_Z phi)Y = 2 g(Y,Z) xi - eta(Z) Y - eta(Y) Z",
      "",
      [](const StructureData& G, const A4& a) {
        const Vec &Y = a[0], &Z = a[1];
        return vec_eq(G.dphi(Y, Z) + G.dphi(Z, Y),
                      2.0 * G.ip(Y, Z) * G.xi - G.eta_of(Z) * Y - G.eta_of(Y) * Z);
      });
  add(cat, "NS-SKEW", "E-nS-05e", Hyp::H1, 4, false,
      "sec 2: nabla phi and nabla^2 phi are skew-symmetric", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &V = a[2], &Z = a[3];
        Parts p = scal_eq(G.ip(G.dphi(Y, V), Z), -G.ip(G.dphi(Y, Z), V));
        p.scalars.emplace_back(G.ip(G.d2phi(X, Y, V), Z), -G.ip(G.d2phi(X, Y, Z), V));
        return p;
      });
  add(cat, "GEO-1", "", Hyp::H1, 0, false, "sec 2: xi is a geodesic field", "",
      [](const StructureData& G, const A4&) {
        return vec_eq(G.nabla_xi * G.xi, Vec::Zero(G.d));
      });
  add(cat, "KILL-1", "", Hyp::H1, 2, false, "sec 2: xi is a Killing vector field", "",
      [](const StructureData& G, const A4& a) {
        return scal_eq(G.ip(G.nabla_xi * a[0], a[1]) + G.ip(G.nabla_xi * a[1], a[0]), 0.0);
      });

  // ---- Lemma 1 -------------------------------------------------------------
  add(cat, "L1-a", "E-nS-01a", Hyp::H1, 1, false,
      "Lemma 1: (nabla_X h) xi = -h(h - phi) X", "",
      [](const StructureData& G, const A4& a) {
        Mat hmf = G.h - G.phi;
        return vec_eq(G.dh(a[0], G.xi), -(G.h * (hmf * a[0])));
      });
  add(cat, "L1-b", "E-nS-01b", Hyp::H1, 1, false,
      "Lemma 1: h phi + phi h = -2 Qt", "",
      [](const StructureData& G, const A4& a) {
        return vec_eq(G.h * (G.phi * a[0]) + G.phi * (G.h * a[0]), -2.0 * (G.Qt * a[0]));
      });
  add(cat, "L1-c", "E-nS-01c", Hyp::H1, 1, false,
      "Lemma 1: (nabla_X phi) xi = -phi(h - phi) X", "",
      [](const StructureData& G, const A4& a) {
        Mat hmf = G.h - G.phi;
        return vec_eq(G.dphi(a[0], G.xi), -(G.phi * (hmf * a[0])));
      });
  add(cat, "L1-d", "E-nS-01d", Hyp::H1, 1, false, "Lemma 1: h Q = Q h", "",
      [](const StructureData& G, const A4& a) {
        return vec_eq(G.h * (G.Q * a[0]), G.Q * (G.h * a[0]));
      });
  add(cat, "L1-e", "", Hyp::H1, 1, false,
      "Lemma 1: h^2 phi = phi h^2, h phi^2 = phi^2 h, h^2 phi^2 = phi^2 h^2", "",
      [](const StructureData& G, const A4& a) {
        Mat h2 = G.h * G.h, f2 = G.phi * G.phi;
        Parts p = vec_eq(h2 * (G.phi * a[0]), G.phi * (h2 * a[0]));
        p.vecs.emplace_back(G.h * (f2 * a[0]), f2 * (G.h * a[0]));
        p.vecs.emplace_back(h2 * (f2 * a[0]), f2 * (h2 * a[0]));
        return p;
      });

  // ---- parallelism and curvature-invariance conditions ---------------------
  add(cat, "QPAR-1", "E-nS-10", Hyp::H2a, 2, false,
      "condition: (nabla_X Qt) Y = 0 for Y in ker eta", "",
      [](const StructureData& G, const A4& a) {
        return vec_eq(G.dQt(a[0], G.ker_project(a[1])), Vec::Zero(G.d));
      });
  add(cat, "QPAR-2", "", Hyp::H1, 1, false, "sec 2: nabla_xi Qt = 0", "",
      [](const StructureData& G, const A4& a) {
        return vec_eq(G.dQt(G.xi, a[0]), Vec::Zero(G.d));
      });
  add(cat, "CI-1", "E-nS-04c", Hyp::H2b, 3, false,
      "condition: R_{Qt X, Y} Z in ker eta for X, Y, Z in ker eta", "",
      [](const StructureData& G, const A4& a) {
        Vec X = G.ker_project(a[0]), Y = G.ker_project(a[1]), Z = G.ker_project(a[2]);
        return scal_eq(G.eta_of(G.curv(G.Qt * X, Y, Z)), 0.0);
      });
  add(cat, "CI-2", "E-nS-04cc", Hyp::H2b, 3, false,
      "sec 2: ker eta is curvature invariant", "",
      [](const StructureData& G, const A4& a) {
        Vec X = G.ker_project(a[0]), Y = G.ker_project(a[1]), Z = G.ker_project(a[2]);
        return scal_eq(G.eta_of(G.curv(X, Y, Z)), 0.0);
      });
  add(cat, "CI-3", "", Hyp::H2b, 3, false,
      "sec 2: R_{X,Y} Qt Z in ker eta for X, Y, Z in ker eta", "",
      [](const StructureData& G, const A4& a) {
        Vec X = G.ker_project(a[0]), Y = G.ker_project(a[1]), Z = G.ker_project(a[2]);
        return scal_eq(G.eta_of(G.curv(X, Y, G.Qt * Z)), 0.0);
      });

  // ---- Lemma 2 --------------------------------------------------------------
  add(cat, "L2-a", "E-3.24", Hyp::H2b, 2, false,
      "Lemma 2: R_{X,xi} Y = (nabla_X (h - phi)) Y = g((h-phi)^2 X, Y) xi - eta(Y) (h-phi)^2 X",
      "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1];
        Mat hmf = G.h - G.phi;
        Vec mid = G.dh(X, Y) - G.dphi(X, Y);
        Vec hmf2X = hmf * (hmf * X);
        Parts p = vec_eq(G.curv(X, G.xi, Y), mid);
        p.vecs.emplace_back(mid, G.ip(hmf2X, Y) * G.xi - G.eta_of(Y) * hmf2X);
        return p;
      });
  add(cat, "L2-b", "E-3.23b", Hyp::H2b, 3, false,
      "Lemma 2: g(R_{xi,X} Y, Z) = eta(Y) g((h-phi)^2 X, Z) - eta(Z) g((h-phi)^2 X, Y)",
      "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2];
        Mat hmf = G.h - G.phi;
        Vec hmf2X = hmf * (hmf * X);
        return scal_eq(G.curv4(G.xi, X, Y, Z),
                       G.eta_of(Y) * G.ip(hmf2X, Z) - G.eta_of(Z) * G.ip(hmf2X, Y));
      });
  add(cat, "L2-c", "", Hyp::H2b, 1, false,
      "Lemma 2: nabla_xi h = nabla_xi phi = phi h + Qt", "",
      [](const StructureData& G, const A4& a) {
        Vec target = G.phi * (G.h * a[0]) + G.Qt * a[0];
        Parts p = vec_eq(G.dh(G.xi, a[0]), target);
        p.vecs.emplace_back(G.dphi(G.xi, a[0]), target);
        return p;
      });

  // ---- Lemma 3 (covariant derivatives of phi) -------------------------------
  add(cat, "L3-a", "E-3.29", Hyp::H2a, 3, false,
      "Lemma 3: g((nabla_X phi) phi Y, Z) = g((nabla_X phi) Y, phi Z) + eta-terms", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2];
        Mat hmf = G.h - G.phi;
        double lhs = G.ip(G.dphi(X, G.phi * Y), Z);
        double rhs = G.ip(G.dphi(X, Y), G.phi * Z) + G.eta_of(Y) * G.ip(hmf * X, Z) +
                     G.eta_of(Z) * G.ip(hmf * X, G.Q * Y);
        return scal_eq(lhs, rhs);
      });
  add(cat, "L3-b", "E-3.30", Hyp::H2a, 3, false,
      "Lemma 3: g((nabla_{phi X} phi) Y, Z) expansion", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2];
        Mat hmf = G.h - G.phi;
        double lhs = G.ip(G.dphi(G.phi * X, Y), Z);
        double rhs = G.ip(G.dphi(X, Y), G.phi * Z) - G.eta_of(X) * G.ip(G.h * Y, Z) -
                     2.0 * G.eta_of(Y) * G.ip(G.phi * X, Z) +
                     2.0 * G.eta_of(Z) * G.ip(G.phi * X, Y) -
                     G.eta_of(Z) * G.ip(G.Q * X, hmf * Y);
        return scal_eq(lhs, rhs);
      });
  add(cat, "L3-c", "E-3.31", Hyp::H2a, 3, false,
      "Lemma 3: g((nabla_{phi X} phi) phi Y, Z) expansion", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2];
        Mat hmf = G.h - G.phi;
        double lhs = G.ip(G.dphi(G.phi * X, G.phi * Y), Z);
        double rhs = -G.ip(G.dphi(X, Y), G.Q * Z) +
                     G.eta_of(X) * G.ip(Y, G.h * (G.phi * Z)) +
                     G.eta_of(Y) * G.ip(G.h * (G.phi * X) + G.phi * (G.phi * X), Z) +
                     G.eta_of(Z) * G.ip(G.phi * (hmf * X), Y) +
                     G.eta_of(Z) * G.ip(hmf * (G.phi * X), G.Q * Y);
        return scal_eq(lhs, rhs);
      });

  // ---- Lemma 4 (curvature relations) ----------------------------------------
  // The displayed right-hand sides of these three rows fail on classical
  // (Q = id) models; the rows are evaluated under corrected readings verified
  // across the corpus. See the record notes.
  add(cat, "L4-a", "E-3.4", Hyp::H1, 4, false,
      "Lemma 4: four-fold phi-rotation of the curvature tensor",
      "displayed algebraic right-hand side dropped: the phi-rotation sum "
      "vanishes identically (corpus-verified); the displayed form fails on "
      "classical models",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2], &V = a[3];
        double lhs = G.curv4(G.phi * X, Y, Z, V) + G.curv4(X, G.phi * Y, Z, V) +
                     G.curv4(X, Y, G.phi * Z, V) + G.curv4(X, Y, Z, G.phi * V);
        return scal_eq(lhs, 0.0);
      });
  add(cat, "L4-b", "E-3.6", Hyp::H2b, 4, false,
      "Lemma 4: g(R_{phi X, phi Y} Z, V) vs g(R_{X,Y} phi Z, phi V) with delta",
      "algebraic tail replaced by the xi-curvature terms the combination "
      "actually produces; the displayed form fails on classical models",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2], &V = a[3];
        auto fv = [&](const Vec& W) { return Vec(G.phi * W); };
        double lhs = G.curv4(fv(X), fv(Y), Z, V);
        double cterm = -G.eta_of(Z) * G.curv4(G.xi, V, X, Y) +
                       G.eta_of(V) * G.curv4(G.xi, Z, X, Y) +
                       G.eta_of(X) * G.curv4(G.xi, Y, Z, V) -
                       G.eta_of(Y) * G.curv4(G.xi, X, Z, V);
        double rhs = G.curv4(X, Y, fv(Z), fv(V)) - 0.5 * G.delta4(X, Y, Z, V) -
                     0.5 * cterm;
        return scal_eq(lhs, rhs);
      });
  add(cat, "L4-c", "E-3.5", Hyp::H2b, 4, false,
      "Lemma 4: g(R_{phi X, phi Y} phi Z, phi V) via phi^2 reduction with delta",
      "evaluated as the corrected E-3.6 applied to phi Z, phi V; the displayed "
      "form fails on classical models",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2], &V = a[3];
        auto fv = [&](const Vec& W) { return Vec(G.phi * W); };
        double lhs = G.curv4(fv(X), fv(Y), fv(Z), fv(V));
        double cterm = G.eta_of(X) * G.curv4(G.xi, Y, fv(Z), fv(V)) -
                       G.eta_of(Y) * G.curv4(G.xi, X, fv(Z), fv(V));
        double rhs = G.curv4(X, Y, fv(fv(Z)), fv(fv(V))) -
                     0.5 * G.delta4(X, Y, fv(Z), fv(V)) - 0.5 * cterm;
        return scal_eq(lhs, rhs);
      });

  // ---- delta tensor ----------------------------------------------------------
  add(cat, "DLT-1", "", Hyp::H1, 4, false,
      "Remark 1: delta(Y,X,Z,V) = delta(X,Y,V,Z) = delta(Z,V,X,Y) = -delta(X,Y,Z,V)", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2], &V = a[3];
        const double base = G.delta4(X, Y, Z, V);
        Parts p = scal_eq(G.delta4(Y, X, Z, V), -base);
        p.scalars.emplace_back(G.delta4(X, Y, V, Z), -base);
        p.scalars.emplace_back(G.delta4(Z, V, X, Y), -base);
        return p;
      });
  add(cat, "DLT-2", "", Hyp::H2b, 3, false,
      "Remark 1: delta vanishes whenever one slot is xi", "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2];
        Parts p = scal_eq(G.delta4(G.xi, X, Y, Z), 0.0);
        p.scalars.emplace_back(G.delta4(X, G.xi, Y, Z), 0.0);
        p.scalars.emplace_back(G.delta4(X, Y, G.xi, Z), 0.0);
        p.scalars.emplace_back(G.delta4(X, Y, Z, G.xi), 0.0);
        return p;
      });

  // ---- Lemma 5 ----------------------------------------------------------------
  add(cat, "L5-a", "E-3.50c", Hyp::H3, 3, false,
      "Lemma 5: g((nabla_X phi) Y, h Z) = -eta(X) g((phi h^2 + Qt h) Z, Y) + eta(Y) g((phi h^2 - h + Qt h) Z, X)",
      "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1], &Z = a[2];
        Mat fh2 = G.phi * G.h * G.h, Qth = G.Qt * G.h;
        double lhs = G.ip(G.dphi(X, Y), G.h * Z);
        double rhs = -G.eta_of(X) * G.ip(fh2 * Z + Qth * Z, Y) +
                     G.eta_of(Y) * G.ip(fh2 * Z - G.h * Z + Qth * Z, X);
        return scal_eq(lhs, rhs);
      });

  // ---- Proposition 2 -----------------------------------------------------------
  add(cat, "P2-a", "EC-14", Hyp::H3, 2, false,
      "Proposition 2: (nabla_X phi) Y = eta(X)(phi h Y + Qt Y) - eta(Y)(phi h X + Q X) + g(phi h X + Q X, Y) xi",
      "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1];
        Mat fh = G.phi * G.h;
        Vec rhs = G.eta_of(X) * (fh * Y + G.Qt * Y) - G.eta_of(Y) * (fh * X + G.Q * X) +
                  G.ip(fh * X + G.Q * X, Y) * G.xi;
        return vec_eq(G.dphi(X, Y), rhs);
      });
  add(cat, "P2-b", "EC-15", Hyp::H3, 2, false,
      "Proposition 2: (nabla_X h) Y = eta(X)(phi h Y + Qt Y) - eta(Y) h(h-phi) X + g(h(h-phi) X, Y) xi",
      "",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1];
        Mat fh = G.phi * G.h, hhmf = G.h * (G.h - G.phi);
        Vec rhs = G.eta_of(X) * (fh * Y + G.Qt * Y) - G.eta_of(Y) * (hhmf * X) +
                  G.ip(hhmf * X, Y) * G.xi;
        return vec_eq(G.dh(X, Y), rhs);
      });
  add(cat, "P2-c", "EC-16", Hyp::H3, 2, false,
      "Proposition 2: (nabla_X phi h) Y expansion",
      "middle term read as the vector eta(Y)(phi h^2 X - Q h X + 2 Qt phi X); the "
      "displayed form wraps it in a stray g(",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1];
        Mat fh2 = G.phi * G.h * G.h, Qtf = G.Qt * G.phi, Qh = G.Q * G.h,
            Qth = G.Qt * G.h;
        Vec rhs = G.eta_of(X) * (fh2 * Y - G.h * Y + Qtf * Y) -
                  G.eta_of(Y) * (fh2 * X - Qh * X + 2.0 * (Qtf * X)) +
                  G.ip(fh2 * X - G.h * X + Qth * X, Y) * G.xi;
        return vec_eq(G.dphih(X, Y), rhs);
      });
  add(cat, "P2-d", "EC-14b", Hyp::H3, 3, false,
      "Proposition 2 proof: g((nabla_X phi) Y, V) = -eta(Y) g(X, V) for V in D_0",
      "V is the D_0 projection of the third argument; trivially zero when D_0 = 0",
      [](const StructureData& G, const A4& a) {
        const Vec &X = a[0], &Y = a[1];
        SpectrumResult sp = h2_spectrum(G);
        Vec V = sp.P_D0 * a[2];
        if (G.gnorm(V) < 1e-10) return scal_eq(0.0, 0.0);
        return scal_eq(G.ip(G.dphi(X, Y), V), -G.eta_of(Y) * G.ip(X, V));
      });

  // ---- two-form calculus ---------------------------------------------------
  // The cyclic derivative and cyclic wedge below follow the displayed
  // normalizations 3 d beta(X,Y,Z) = sum_cyc (nabla_X beta)(Y,Z) and
  // 3 (eta ^ beta)(X,Y,Z) = sum_cyc eta(X) beta(Y,Z). With those, the
  // derivative relations carry coefficient 3 (and d Psi_0 the + sign); both
  // facts follow from Proposition 2 with Lemma 1 and are verified numerically.
  auto tf_forms = [](const StructureData& G) {
    const int d = G.d;
    OpField f = op_phi_field(G), h = op_h_field(G), qt = op_Qt_field(G);
    OpField fh = op_mul(f, h, d);
    OpField fh2 = op_mul(fh, h, d);
    OpField qtf = op_mul(qt, f, d);
    OpField qth = op_mul(qt, h, d);
    struct TF {
      BilForm phi0, phi1, phi2, psi0, psi1, psi2;
    } out{};
    out.phi0 = lower_op(G, h);
    out.phi1 = lower_op(G, fh);
    out.phi2 = lower_op(G, fh2);
    out.psi0 = lower_op(G, qt);
    out.psi1 = lower_op(G, qtf);
    out.psi2 = lower_op(G, qth);
    return out;
  };
  auto bil_add = [](const BilForm& A, double cb, const BilForm& B, int d) {
    BilForm out;
    out.b = Grid2<double>(d, d);
    out.db = Grid3<double>(d, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        out.b(i, j) = A.b(i, j) + cb * B.b(i, j);
        for (int k = 0; k < d; ++k) out.db(k, i, j) = A.db(k, i, j) + cb * B.db(k, i, j);
      }
    return out;
  };

  add(cat, "TF-1", "E-c-03a", Hyp::H3, 3, false,
      "Theorem 5 proof: d Phi_0 = eta ^ (Phi_1 + Psi_0), Phi_0 = g(h.,.)",
      "carries coefficient 3 under the displayed cyclic normalizations of d and "
      "the wedge; follows from EC-15 with Lemma 1",
      [tf_forms, bil_add](const StructureData& G, const A4& a) {
        auto tf = tf_forms(G);
        BilForm rhs_form = bil_add(tf.phi1, 1.0, tf.psi0, G.d);
        Grid3<double> lhs3 = cyclic_derivative_bilinear(G.geo, tf.phi0.b, tf.phi0.db);
        Grid3<double> rhs3 = cyclic_wedge(G.eta, rhs_form.b);
        return scal_eq(form_apply(lhs3, a[0], a[1], a[2]),
                       3.0 * form_apply(rhs3, a[0], a[1], a[2]));
      });
  add(cat, "TF-2", "E-c-03b", Hyp::H3, 3, false,
      "Theorem 5 proof: d Phi_1 = eta ^ (Phi_2 - Phi_0 + Psi_1), Phi_1 = g(phi h.,.)",
      "carries coefficient 3 under the displayed cyclic normalizations; follows "
      "from EC-16",
      [tf_forms, bil_add](const StructureData& G, const A4& a) {
        auto tf = tf_forms(G);
        BilForm rhs_form = bil_add(bil_add(tf.phi2, -1.0, tf.phi0, G.d), 1.0, tf.psi1, G.d);
        Grid3<double> lhs3 = cyclic_derivative_bilinear(G.geo, tf.phi1.b, tf.phi1.db);
        Grid3<double> rhs3 = cyclic_wedge(G.eta, rhs_form.b);
        return scal_eq(form_apply(lhs3, a[0], a[1], a[2]),
                       3.0 * form_apply(rhs3, a[0], a[1], a[2]));
      });
  add(cat, "TF-3", "", Hyp::H3, 3, false,
      "Theorem 5 proof: d Psi_0 = eta ^ (Psi_2 - Psi_1), Psi_0 = g(Qt.,.)",
      "evaluated with the + sign, which the parallelism of Qt forces; the "
      "displayed relation carries a - sign",
      [tf_forms, bil_add](const StructureData& G, const A4& a) {
        auto tf = tf_forms(G);
        BilForm rhs_form = bil_add(tf.psi2, -1.0, tf.psi1, G.d);
        Grid3<double> lhs3 = cyclic_derivative_bilinear(G.geo, tf.psi0.b, tf.psi0.db);
        Grid3<double> rhs3 = cyclic_wedge(G.eta, rhs_form.b);
        return scal_eq(form_apply(lhs3, a[0], a[1], a[2]),
                       form_apply(rhs3, a[0], a[1], a[2]));
      });
  add(cat, "TF-4", "E-Nic-27", Hyp::H3, 4, false,
      "Theorem 5 proof: d eta ^ (Phi_1 + Psi_0) = 0 (from d^2 Phi_0 = 0)", "",
      [tf_forms, bil_add](const StructureData& G, const A4& a) {
        auto tf = tf_forms(G);
        BilForm s = bil_add(tf.phi1, 1.0, tf.psi0, G.d);
        Grid4<double> w4 = wedge22(G.deta_form, antisym_part(s.b));
        return scal_eq(form_apply(w4, a[0], a[1], a[2], a[3]), 0.0);
      });

  return cat;
}

}  // namespace

// Proof-chain rows live in identities_pc.cpp.
namespace detail {
void build_catalog_pc(std::vector<IdentityRecord>& cat);
}

namespace {

const std::vector<IdentityRecord>& catalog_instance() {
  static const std::vector<IdentityRecord> cat = [] {
    std::vector<IdentityRecord> c = build_catalog();
    detail::build_catalog_pc(c);
    return c;
  }();
  return cat;
}

}  // namespace

const std::vector<IdentityRecord>& identity_catalog() { return catalog_instance(); }

const IdentityRecord& find_identity(const std::string& name) {
  for (const IdentityRecord& r : identity_catalog())
    if (r.id == name || (!r.alias.empty() && r.alias == name)) return r;
  throw UnknownNameError("unknown identity: " + name);
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const IdentityRecord& r : identity_catalog()) ids.push_back(r.id);
  return ids;
}

double evaluate_identity(const IdentityRecord& rec, const StructureData& G,
                         const std::array<Vec, 4>& args) {
  std::array<Vec, 4> a = args;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Parts p = rec.eval(G, a);
    double m = 0.0;
    for (const auto& [l, r] : p.vecs) m = std::max(m, rel_residual(G, l, r));
    for (const auto& [l, r] : p.scalars) m = std::max(m, rel_residual(l, r));
    if (std::isfinite(m)) return m;
    std::rotate(a.begin(), a.begin() + 1, a.end());  // deterministic resample
  }
  throw std::runtime_error("evaluate_identity: non-finite residual for " + rec.id);
}

Vec evaluate_identity_raw(const IdentityRecord& rec, const StructureData& G,
                          const std::array<Vec, 4>& args) {
  Parts p = rec.eval(G, args);
  int n = 0;
  for (const auto& v : p.vecs) n += static_cast<int>(v.first.size());
  n += static_cast<int>(p.scalars.size());
  Vec out(n);
  int at = 0;
  for (const auto& [l, r] : p.vecs) {
    out.segment(at, l.size()) = l - r;
    at += static_cast<int>(l.size());
  }
  for (const auto& [l, r] : p.scalars) out[at++] = l - r;
  return out;
}

}  // namespace wacm
