#include <algorithm>
#include <sstream>

#include "gl2wb/bpcore.hpp"
#include "gl2wb/hom.hpp"

namespace gl2wb {

namespace {

std::vector<WeightLabel> without(const std::vector<WeightLabel>& all, const WeightLabel& x) {
  std::vector<WeightLabel> out;
  for (const auto& L : all)
    if (!(L == x)) out.push_back(L);
  return out;
}

// Rows of R_sigma / S (quotient coordinates) lifted to R_sigma.
Matrix lift(const Submodule& S, const Matrix& inQ) {
  std::vector<int> free;
  std::vector<char> piv(S.ambient->dim(), 0);
  for (int c : S.basis.pivots) piv[c] = 1;
  for (int j = 0; j < S.ambient->dim(); ++j)
    if (!piv[j]) free.push_back(j);
  Matrix out(S.ambient->field(), inQ.rows(), S.ambient->dim());
  for (int i = 0; i < inQ.rows(); ++i)
    for (size_t j = 0; j < free.size(); ++j) out(i, free[j]) = inQ(i, static_cast<int>(j));
  return out;
}

Matrix place(const Matrix& rows, int offset, int total) {
  Matrix out(rows.field(), rows.rows(), total);
  for (int i = 0; i < rows.rows(); ++i) std::copy(rows.row(i), rows.row(i) + rows.cols(), out.row(i) + offset);
  return out;
}

std::vector<int> offsets(const D0Result& d0) {
  std::vector<int> off;
  int o = 0;
  for (const auto& part : d0.parts) {
    off.push_back(o);
    o += part.ctx->R->dim();
  }
  return off;
}

}  // namespace

D0Result build_D0(const Field& F, const std::vector<WeightLabel>& weights) {
  D0Result out;
  std::vector<Module> Rs;
  for (const auto& s : weights) {
    auto ctx = sigma_context(F, s);
    Submodule inA = max_submodule_avoiding(ctx->A_node, without(weights, s));
    out.parts.push_back({s, ctx, push_up(ctx->A, inA)});
    Rs.push_back(ctx->R);
  }
  out.ambient = direct_sum(Rs);
  auto off = offsets(out);
  Matrix rows(F, 0, out.ambient->dim());
  for (size_t k = 0; k < out.parts.size(); ++k)
    rows = rows.stack(place(out.parts[k].D.rows(), off[k], out.ambient->dim()));
  out.D0 = make_sub(out.ambient, rows);
  return out;
}

std::vector<Check> check_D0(const D0Result& d0) {
  const Field& F = d0.ambient->field();
  std::vector<Check> out;
  std::vector<WeightLabel> weights;
  for (const auto& part : d0.parts) weights.push_back(part.sigma);
  std::vector<WeightLabel> sorted = weights;
  std::sort(sorted.begin(), sorted.end());

  Module D0mod = sub_module(d0.D0);
  auto soc = labels_of(socle(D0mod));
  out.push_back({"socle", soc == sorted, "soc D0 = " + to_string(soc)});

  auto factors = composition_factors(D0mod);
  bool once = true;
  for (const auto& s : weights) once = once && std::count(factors.begin(), factors.end(), s) == 1;
  out.push_back({"each-weight-once", once, std::to_string(factors.size()) + " constituents"});
  out.push_back({"multiplicity-free", std::adjacent_find(factors.begin(), factors.end()) == factors.end(),
                 "dim D0 = " + std::to_string(D0mod->dim())});

  for (const auto& part : d0.parts) {
    const auto& ctx = *part.ctx;
    const std::string tag = to_string(part.sigma);
    Module Q = quotient(part.D);
    auto above = labels_of(socle(Q));
    bool maximal = true;
    for (const auto& t : above) maximal = maximal && std::find(weights.begin(), weights.end(), t) != weights.end();
    out.push_back({"ext-tau-maximality " + tag, maximal, "soc(R/D) = " + to_string(above)});

    for (const auto& tau : without(weights, part.sigma)) {
      Module T = build_weight(F, tau);
      auto H1 = hom_space(T, ctx.R_mod_soc);
      const int e2 = hom_dim(T, Q);
      std::vector<Matrix> images;
      int r = 0;
      if (!H1.empty()) {
        Matrix flat(F, static_cast<int>(H1.size()), T->dim() * Q->dim());
        for (size_t k = 0; k < H1.size(); ++k) {
          Matrix img = project(part.D, lift(ctx.soc, H1[k]));
          std::copy(img.data().begin(), img.data().end(), flat.row(static_cast<int>(k)));
        }
        r = rank(flat);
      }
      const int e1 = static_cast<int>(H1.size());
      std::ostringstream os;
      os << "Ext1(" << to_string(tau) << ", sigma) = " << e1 << ", Ext1(" << to_string(tau) << ", D) = " << e2
         << ", rank " << r;
      out.push_back({"ext-tau-iso " + tag, e1 == e2 && r == e1, os.str()});
    }

    out.push_back({"ext-sigma-alternative " + tag, is_alternative(ctx, part.D), "gr1 = " + to_string(gr1_labels(ctx, part.D))});
    const int es = ext1(part.sigma, sub_module(part.D)).dim;
    out.push_back({"ext-sigma-vanishing " + tag, es == 0, "Ext1(sigma, D) = " + std::to_string(es)});
  }
  return out;
}

LocalCriterion local_criterion(const D0Result& d0, const Submodule& W) {
  const Field& F = d0.ambient->field();
  if (!contains(W, d0.D0)) throw ConditionViolated("W does not contain D0");
  Module Wmod = sub_module(W);
  int socdim = 0;
  for (const auto& part : d0.parts) socdim += dimension(part.sigma);
  if (socle_sub(Wmod).dim() != socdim) throw ConditionViolated("soc W is larger than soc D0");
  std::vector<WeightLabel> weights;
  for (const auto& part : d0.parts) weights.push_back(part.sigma);
  LocalCriterion out;
  out.holds = true;
  for (const auto& tau : weights) {
    std::vector<WeightLabel> S;
    for (const auto& s : without(weights, tau))
      if (ext1_dim(F, tau, s) != 0) S.push_back(s);
    Module U = universal_extension(F, tau, S);
    const int h = hom_dim(U, Wmod);
    out.hom_dims.emplace_back(tau, h);
    out.holds = out.holds && h == 1;
  }
  return out;
}

std::vector<Submodule> one_step_enlargements(const D0Result& d0) {
  const Field& F = d0.ambient->field();
  const int total = d0.ambient->dim();
  auto off = offsets(d0);
  // Lifted images of each basis map tau -> R_sigma / D_sigma, grouped by tau.
  std::vector<std::pair<WeightLabel, std::vector<Matrix>>> byTau;
  for (size_t k = 0; k < d0.parts.size(); ++k) {
    const auto& part = d0.parts[k];
    Module Q = quotient(part.D);
    for (const auto& piece : socle(Q)) {
      for (const auto& h : hom_space(build_weight(F, piece.label), Q)) {
        Matrix lifted = place(lift(part.D, h), off[k], total);
        auto it = std::find_if(byTau.begin(), byTau.end(), [&](const auto& e) { return e.first == piece.label; });
        if (it == byTau.end()) {
          byTau.push_back({piece.label, {}});
          it = byTau.end() - 1;
        }
        it->second.push_back(lifted);
      }
    }
  }
  std::vector<Submodule> out;
  for (const auto& [tau, maps] : byTau) {
    for (const auto& m : maps) out.push_back(make_sub(d0.ambient, d0.D0.rows().stack(m)));
    if (maps.size() > 1) {
      Matrix diag = maps[0];
      for (size_t k = 1; k < maps.size(); ++k) diag = diag + maps[k];
      out.push_back(make_sub(d0.ambient, d0.D0.rows().stack(diag)));
    }
  }
  return out;
}

}  // namespace gl2wb
