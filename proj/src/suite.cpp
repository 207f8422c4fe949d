#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <thread>

#include "wacm/forms.hpp"
#include "wacm/identities.hpp"
#include "wacm/sampling.hpp"
#include "wacm/spectral.hpp"

namespace wacm {

namespace {

bool declared_covers(Hyp declared, bool profile_sasakian, Hyp needed) {
  auto rank = [](Hyp h) {
    switch (h) {
      case Hyp::HANY: return 0;
      case Hyp::H0: return 1;
      case Hyp::H1: return 2;
      case Hyp::H2a:
      case Hyp::H2b: return 3;
      case Hyp::H3: return 4;
      case Hyp::HSAS: return -1;
    }
    return 0;
  };
  if (needed == Hyp::HANY) return true;
  if (needed == Hyp::HSAS) return profile_sasakian;
  if (needed == Hyp::H2a) return declared == Hyp::H2a || declared == Hyp::H3;
  if (needed == Hyp::H2b) return declared == Hyp::H2b || declared == Hyp::H3;
  return rank(declared) >= rank(needed);
}

struct Accum {
  double maxr = 0.0;
  double sum = 0.0;
  long n = 0;
};

// residual accumulation of a fixed record set over pre-drawn samples;
// per-point cells keep aggregation order-canonical under threading
void accumulate(const WeakStructure& S, const SampleSet& samples,
                const std::vector<const IdentityRecord*>& recs, int threads,
                std::vector<std::vector<Accum>>& cells) {
  const int npts = static_cast<int>(samples.points.size());
  cells.assign(npts, std::vector<Accum>(recs.size()));

  int nthreads = threads > 0 ? threads
                             : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::max(1, std::min({nthreads, npts, 16}));

  auto worker = [&](int begin, int end) {
    for (int pi = begin; pi < end; ++pi) {
      StructureData G = structure_data(S, samples.points[pi]);
      for (size_t ri = 0; ri < recs.size(); ++ri) {
        const IdentityRecord& rec = *recs[ri];
        Accum& cell = cells[pi][ri];
        if (rec.arity == 0) {
          double r = evaluate_identity(rec, G, samples.tuples[pi][0]);
          cell.maxr = std::max(cell.maxr, r);
          cell.sum += r;
          cell.n += 1;
        } else {
          for (const auto& tup : samples.tuples[pi]) {
            double r = evaluate_identity(rec, G, tup);
            cell.maxr = std::max(cell.maxr, r);
            cell.sum += r;
            cell.n += 1;
          }
        }
      }
    }
  };

  if (nthreads == 1) {
    worker(0, npts);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (npts + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const int b = t * chunk, e = std::min(npts, b + chunk);
      if (b < e) pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }
}

Accum merge_record(const std::vector<std::vector<Accum>>& cells, size_t ri) {
  Accum total;
  for (const auto& row : cells) {
    total.maxr = std::max(total.maxr, row[ri].maxr);
    total.sum += row[ri].sum;
    total.n += row[ri].n;
  }
  return total;
}

// records whose residuals define the hypothesis classes
const std::vector<std::string>& h0_ids() {
  static const std::vector<std::string> ids = {"AX-1", "AX-2", "AX-3",
                                               "AX-4", "AX-5", "AX-6"};
  return ids;
}

double normality_residual_at(const StructureData& G, const std::array<Vec, 4>& tup) {
  Vec nij = G.nijenhuis(tup[0], tup[1]);
  Vec rhs = -2.0 * G.deta(tup[0], tup[1]) * G.xi;
  return rel_residual(G, nij, rhs);
}

}  // namespace

bool HypStatus::satisfies(Hyp h) const {
  switch (h) {
    case Hyp::HANY: return true;
    case Hyp::H0: return h0;
    case Hyp::H1: return h1;
    case Hyp::H2a: return h2a;
    case Hyp::H2b: return h2b;
    case Hyp::H3: return h3;
    case Hyp::HSAS: return hsas;
  }
  return false;
}

HypStatus verify_hypotheses(const WeakStructure& S, int points, int tuples,
                            std::uint64_t seed, double tol) {
  SampleSet samples = draw_samples(S.chart, points, tuples, seed);

  std::vector<const IdentityRecord*> recs;
  for (const std::string& id : h0_ids()) recs.push_back(&find_identity(id));
  recs.push_back(&find_identity("NS-0"));
  recs.push_back(&find_identity("QPAR-1"));
  recs.push_back(&find_identity("CI-1"));
  recs.push_back(&find_identity("SAS-0"));

  std::vector<std::vector<Accum>> cells;
  accumulate(S, samples, recs, 0, cells);

  double ax = 0.0;
  for (size_t i = 0; i < h0_ids().size(); ++i) ax = std::max(ax, merge_record(cells, i).maxr);
  const double ns = merge_record(cells, 6).maxr;
  const double qpar = merge_record(cells, 7).maxr;
  const double ci = merge_record(cells, 8).maxr;
  const double sas = merge_record(cells, 9).maxr;

  // normality is part of the Sasakian verification
  double norm_res = 0.0;
  for (size_t pi = 0; pi < samples.points.size(); ++pi) {
    StructureData G = structure_data(S, samples.points[pi]);
    for (const auto& tup : samples.tuples[pi])
      norm_res = std::max(norm_res, normality_residual_at(G, tup));
    if (pi >= 9) break;  // a few points suffice for the gate hypothesis
  }

  HypStatus st;
  st.h0_residual = ax;
  st.h1_residual = ns;
  st.h2a_residual = qpar;
  st.h2b_residual = ci;
  st.hsas_residual = std::max(sas, norm_res);
  st.h0 = ax < tol;
  st.h1 = st.h0 && ns < tol;
  st.h2a = st.h1 && qpar < tol;
  st.h2b = st.h1 && ci < tol;
  st.h3 = st.h2a && st.h2b;
  st.hsas = st.h0 && st.hsas_residual < tol;
  st.declared_ok = st.satisfies(S.declared) && (!S.profile.sasakian || st.hsas);
  return st;
}

CheckReport run_suite(const RunConfig& config) {
  CheckReport rep;
  rep.run = config;

  std::vector<const ModelEntry*> models;
  for (const std::string& name : config.models) models.push_back(&find_model(name));

  std::vector<const IdentityRecord*> selected;
  for (const std::string& id : config.identities) selected.push_back(&find_identity(id));

  // defining rows are always evaluated so hypothesis classes can be re-verified
  std::vector<const IdentityRecord*> recs = selected;
  auto ensure = [&recs](const IdentityRecord& r) {
    for (const IdentityRecord* q : recs)
      if (q->id == r.id) return;
    recs.push_back(&r);
  };
  for (const std::string& id : h0_ids()) ensure(find_identity(id));
  ensure(find_identity("NS-0"));
  ensure(find_identity("QPAR-1"));
  ensure(find_identity("CI-1"));
  ensure(find_identity("SAS-0"));

  if (selected.empty()) return rep;  // empty identity list: empty report

  for (const ModelEntry* model : models) {
    SampleSet samples =
        draw_samples(model->structure.chart, config.points, config.tuples, config.seed);
    std::vector<std::vector<Accum>> cells;
    accumulate(model->structure, samples, recs, config.threads, cells);

    auto max_of = [&](const std::string& id) {
      for (size_t ri = 0; ri < recs.size(); ++ri)
        if (recs[ri]->id == id) return merge_record(cells, ri).maxr;
      return 0.0;
    };
    HypStatus st;
    {
      double ax = 0.0;
      for (const std::string& id : h0_ids()) ax = std::max(ax, max_of(id));
      st.h0_residual = ax;
      st.h1_residual = max_of("NS-0");
      st.h2a_residual = max_of("QPAR-1");
      st.h2b_residual = max_of("CI-1");
      st.hsas_residual = max_of("SAS-0");
      st.h0 = st.h0_residual < config.tol;
      st.h1 = st.h0 && st.h1_residual < config.tol;
      st.h2a = st.h1 && st.h2a_residual < config.tol;
      st.h2b = st.h1 && st.h2b_residual < config.tol;
      st.h3 = st.h2a && st.h2b;
      st.hsas = st.h0 && st.hsas_residual < config.tol;
      st.declared_ok =
          st.satisfies(model->declared) && (!model->profile.sasakian || st.hsas);
    }

    for (size_t ri = 0; ri < selected.size(); ++ri) {
      const IdentityRecord& rec = *selected[ri];
      Accum acc = merge_record(cells, ri);
      ReportRow row;
      row.model = model->name;
      row.identity = rec.id;
      row.n = config.points;
      row.max_residual = acc.maxr;
      row.mean_residual = acc.n > 0 ? acc.sum / static_cast<double>(acc.n) : 0.0;

      const bool declared =
          declared_covers(model->declared, model->profile.sasakian, rec.hypothesis);
      const bool verified = st.satisfies(rec.hypothesis);
      if (!declared) {
        row.hypothesis_ok = false;
        row.pass = true;
        row.note = std::string("informational: ") + hyp_name(rec.hypothesis) +
                   " not declared for this model";
      } else if (!verified) {
        row.hypothesis_ok = false;
        row.pass = true;
        row.note = std::string("informational: declared ") + hyp_name(rec.hypothesis) +
                   " failed verification";
      } else {
        row.hypothesis_ok = true;
        row.pass = acc.maxr < config.tol;
        if (!rec.note.empty()) row.note = "reading: " + rec.note;
      }
      rep.rows.push_back(std::move(row));
    }

    // declared-hypothesis verification row
    ReportRow hyp_row;
    hyp_row.model = model->name;
    hyp_row.identity = "HYP-CHECK";
    hyp_row.hypothesis_ok = st.declared_ok;
    hyp_row.n = config.points;
    hyp_row.max_residual = std::max({st.h0_residual, st.h1_residual});
    hyp_row.mean_residual = 0.0;
    hyp_row.pass = st.declared_ok;
    hyp_row.note = std::string("declared ") + hyp_name(model->declared) +
                   (model->profile.sasakian ? "+Sasakian" : "") +
                   (st.declared_ok ? " verified" : " VIOLATED");
    rep.rows.push_back(std::move(hyp_row));
  }
  return rep;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

GateResult theorem_t01_gate(const WeakStructure& S, int points, int tuples,
                            std::uint64_t seed, double tol) {
  GateResult out;
  HypStatus st = verify_hypotheses(S, points, tuples, seed, tol);
  if (!st.h0) {
    out.note = "inapplicable: structure axioms fail";
    return out;
  }
  if (!(st.hsas_residual < tol)) {
    out.note = "inapplicable: covariant-derivative characterization fails";
    return out;
  }
  if (!(st.h2a_residual < tol)) {
    out.note = "inapplicable: Qt not parallel on ker eta";
    return out;
  }

  // conclusions: Qt = 0, h = 0, normality, and h phi = phi h = -Qt
  SampleSet samples = draw_samples(S.chart, points, tuples, seed);
  double worst = 0.0;
  for (size_t pi = 0; pi < samples.points.size(); ++pi) {
    StructureData G = structure_data(S, samples.points[pi]);
    worst = std::max(worst, g_operator_norm(G, G.Qt));
    worst = std::max(worst, g_operator_norm(G, G.h));
    worst = std::max(worst, g_operator_norm(G, G.h * G.phi + G.Qt));
    worst = std::max(worst, g_operator_norm(G, G.phi * G.h + G.Qt));
    for (const auto& tup : samples.tuples[pi])
      worst = std::max(worst, normality_residual_at(G, tup));
  }
  out.max_residual = worst;
  out.verdict = worst < tol ? Verdict::Pass : Verdict::Fail;
  out.note = out.verdict == Verdict::Pass ? "Q = id and structure Sasakian"
                                          : "conclusion residual above tolerance";
  return out;
}

GateResult theorem_th45_gate(const WeakStructure& S, int points, int tuples,
                             std::uint64_t seed, double tol) {
  GateResult out;
  if (S.chart.dim <= 5) {
    out.note = "inapplicable: dimension not greater than 5";
    return out;
  }
  HypStatus st = verify_hypotheses(S, points, tuples, seed, tol);
  if (!st.h3) {
    out.note = "inapplicable: weak nearly Sasakian with both conditions not verified";
    return out;
  }

  SampleSet samples = draw_samples(S.chart, points, tuples, seed);
  const IdentityRecord* tf[4] = {&find_identity("TF-1"), &find_identity("TF-2"),
                                 &find_identity("TF-3"), &find_identity("TF-4")};
  const IdentityRecord& sas = find_identity("SAS-0");
  double worst = 0.0;
  for (size_t pi = 0; pi < samples.points.size(); ++pi) {
    StructureData G = structure_data(S, samples.points[pi]);
    worst = std::max(worst, g_operator_norm(G, G.phi * G.h + G.Qt));
    worst = std::max(worst, g_operator_norm(G, G.h));
    worst = std::max(worst, g_operator_norm(G, G.Qt));
    for (const auto& tup : samples.tuples[pi]) {
      for (const IdentityRecord* r : tf)
        worst = std::max(worst, evaluate_identity(*r, G, tup));
      worst = std::max(worst, evaluate_identity(sas, G, tup));
      worst = std::max(worst, normality_residual_at(G, tup));
    }
  }
  out.max_residual = worst;
  out.verdict = worst < tol ? Verdict::Pass : Verdict::Fail;
  out.note = out.verdict == Verdict::Pass ? "Q = id and structure Sasakian"
                                          : "conclusion residual above tolerance";
  return out;
}

int wedge_kernel_dimension(const Grid2<double>& two_form, int d) {
  const int cols = d * (d - 1) / 2;
  const int rows = d * (d - 1) * (d - 2) * (d - 3) / 24;
  Mat M = Mat::Zero(rows, cols);

  int col = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Grid2<double> basis(d, d);
      basis(i, j) = 1.0;
      basis(j, i) = -1.0;
      Grid4<double> w4 = wedge22(two_form, basis);
      int row = 0;
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
          for (int c = b + 1; c < d; ++c)
            for (int e = c + 1; e < d; ++e) M(row++, col) = w4(a, b, c, e);
      ++col;
    }

  Eigen::JacobiSVD<Mat> svd(M);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  if (smax < 1e-300) return cols;  // zero map
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) >= 1e-10 * smax) ++rank;
  return cols - rank;
}

WedgeInjectivity wedge_injectivity(const StructureData& G) {
  WedgeInjectivity out;
  out.contact_volume = contact_volume(G.eta, G.deta_form);
  if (std::abs(out.contact_volume) < 1e-12)
    throw UnsupportedError("injectivity claim inapplicable: eta is not contact here");
  const int d = G.d;
  out.domain_dim = d * (d - 1) / 2;
  out.image_dim = d * (d - 1) * (d - 2) * (d - 3) / 24;
  out.kernel_dim = wedge_kernel_dimension(G.deta_form, d);

  // sigma_max for reporting
  Mat M = Mat::Zero(out.image_dim, out.domain_dim);
  int col = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Grid2<double> basis(d, d);
      basis(i, j) = 1.0;
      basis(j, i) = -1.0;
      Grid4<double> w4 = wedge22(G.deta_form, basis);
      int row = 0;
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
          for (int c = b + 1; c < d; ++c)
            for (int e = c + 1; e < d; ++e) M(row++, col) = w4(a, b, c, e);
      ++col;
    }
  Eigen::JacobiSVD<Mat> svd(M);
  out.sigma_max = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return out;
}

}  // namespace wacm
