#include "gl2wb/structure.hpp"

#include <algorithm>

#include "gl2wb/hom.hpp"

namespace gl2wb {

std::vector<Isotypic> socle(const Module& M) {
  const Field& F = M->field();
  std::vector<Isotypic> out;
  if (M->dim() == 0) return out;
  const Rref& U = M->u_invariants();
  std::vector<Character> seen;
  for (int i = 0; i < U.rank; ++i) {
    Character chi = M->chars()[U.pivots[i]];
    if (std::find(seen.begin(), seen.end(), chi) != seen.end()) continue;
    seen.push_back(chi);
    for (const auto& L : labels_with_highest_weight(F, chi)) {
      auto homs = hom_space(build_weight(F, L), M);
      if (homs.empty()) continue;
      Matrix rows(F, 0, M->dim());
      for (const auto& h : homs) rows = rows.stack(h);
      Submodule S = make_sub(M, rows);
      if (S.dim() != static_cast<int>(homs.size()) * dimension(L))
        throw AmbiguousIdentification("isotypic component of " + to_string(L) + " has unexpected dimension");
      out.push_back({L, static_cast<int>(homs.size()), std::move(S)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Isotypic& x, const Isotypic& y) { return x.label < y.label; });
  // every simple submodule carries exactly one U-fixed line
  int total = 0;
  for (const auto& piece : out) total += piece.mult;
  Submodule all = zero_sub(M);
  for (const auto& piece : out) all = sum(all, piece.sub);
  if (all.dim() > 0 && sub_module(all)->u_invariants().rank != total)
    throw AmbiguousIdentification("socle pieces do not account for all U-fixed vectors");
  if (total == 0) throw AmbiguousIdentification("nonzero module with empty socle");
  return out;
}

Submodule socle_sub(const Module& M) {
  Submodule all = zero_sub(M);
  for (const auto& piece : socle(M)) all = sum(all, piece.sub);
  return all;
}

Submodule isotypic(const Module& M, const WeightLabel& L) {
  const Field& F = M->field();
  Matrix rows(F, 0, M->dim());
  for (const auto& h : hom_space(build_weight(F, L), M)) rows = rows.stack(h);
  return make_sub(M, rows);
}

Cosocle cosocle(const Module& M) {
  const Field& F = M->field();
  Cosocle out;
  if (M->dim() == 0) {
    out.radical = zero_sub(M);
    return out;
  }
  Module D = dual(M);
  Matrix S(F, 0, M->dim());
  for (const auto& piece : socle(D)) {
    out.pieces.push_back({dual_label(F, piece.label), piece.mult});
    S = S.stack(piece.sub.rows());
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const CosoclePiece& x, const CosoclePiece& y) { return x.label < y.label; });
  // radical = annihilator of soc(M^*)
  out.radical = make_sub(M, kernel(S));
  return out;
}

SocleFiltration socle_filtration(const Module& M) {
  SocleFiltration out;
  Submodule cur = zero_sub(M);
  while (cur.dim() < M->dim()) {
    Module Q = quotient(cur);
    std::vector<WeightLabel> layer;
    Submodule s = zero_sub(Q);
    for (const auto& piece : socle(Q)) {
      for (int k = 0; k < piece.mult; ++k) layer.push_back(piece.label);
      s = sum(s, piece.sub);
    }
    cur = preimage(cur, s);
    out.fil.push_back(cur);
    std::sort(layer.begin(), layer.end());
    out.layers.push_back(std::move(layer));
  }
  return out;
}

std::vector<std::vector<WeightLabel>> socle_series(const Module& M) { return socle_filtration(M).layers; }

std::vector<WeightLabel> composition_factors(const Module& M) {
  std::vector<WeightLabel> out;
  for (const auto& layer : socle_series(M)) out.insert(out.end(), layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

int multiplicity(const Module& M, const WeightLabel& L) {
  auto all = composition_factors(M);
  return static_cast<int>(std::count(all.begin(), all.end(), L));
}

bool is_multiplicity_free(const Module& M) {
  auto all = composition_factors(M);
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool is_irreducible(const Module& M) {
  if (M->dim() == 0) return false;
  auto s = socle(M);
  return s.size() == 1 && s[0].mult == 1 && s[0].sub.dim() == M->dim();
}

std::vector<WeightLabel> labels_of(const std::vector<Isotypic>& pieces) {
  std::vector<WeightLabel> out;
  for (const auto& p : pieces)
    for (int k = 0; k < p.mult; ++k) out.push_back(p.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightLabel> labels_of(const Cosocle& c) {
  std::vector<WeightLabel> out;
  for (const auto& p : c.pieces)
    for (int k = 0; k < p.mult; ++k) out.push_back(p.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gl2wb
