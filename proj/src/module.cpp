#include "gl2wb/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gl2wb {

struct NodeAccess {
  static void finalize(ModuleNode& n) { n.finalize(); }
};

namespace {

int mod(long long x, int n) { return static_cast<int>(((x % n) + n) % n); }

template <class T, class... Args>
Module make_node(Args&&... args) {
  auto node = std::make_shared<T>(std::forward<Args>(args)...);
  NodeAccess::finalize(*node);
  return node;
}

std::vector<int> complement(int n, const std::vector<int>& pivots) {
  std::vector<char> is(n, 0);
  for (int c : pivots) is[c] = 1;
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (!is[j]) out.push_back(j);
  return out;
}

class SymNode final : public ModuleNode {
 public:
  SymNode(const Field& F, int r, int frob) : ModuleNode(F, r + 1, make_chars(F, r, frob)), r_(r), frob_(frob) {}
  std::string describe() const override {
    std::ostringstream os;
    os << "Sym^" << r_;
    if (frob_) os << "^Fr" << frob_;
    return os.str();
  }

 protected:
  Matrix eval_impl(const GroupElement& g0) const override {
    const Field& F = field();
    GroupElement g = g_frob(F, g0, frob_);
    const int r = r_;
    // pa[m] = (a + cY)^m and pb[m] = (b + dY)^m as coefficient lists in Y
    std::vector<std::vector<Elem>> pa(r + 1), pb(r + 1);
    pa[0] = pb[0] = {1};
    auto step = [&](const std::vector<Elem>& P, Elem c0, Elem c1) {
      std::vector<Elem> out(P.size() + 1, 0);
      for (size_t k = 0; k < P.size(); ++k) {
        out[k] = F.add(out[k], F.mul(P[k], c0));
        out[k + 1] = F.add(out[k + 1], F.mul(P[k], c1));
      }
      return out;
    };
    for (int m = 1; m <= r; ++m) {
      pa[m] = step(pa[m - 1], g.a, g.c);
      pb[m] = step(pb[m - 1], g.b, g.d);
    }
    Matrix T(F, r + 1, r + 1);
    for (int j = 0; j <= r; ++j) {
      const auto& A = pa[r - j];
      const auto& B = pb[j];
      Elem* row = T.row(j);
      for (size_t x = 0; x < A.size(); ++x) {
        if (A[x] == 0) continue;
        for (size_t y = 0; y < B.size(); ++y) row[x + y] = F.add(row[x + y], F.mul(A[x], B[y]));
      }
    }
    return T;
  }

 private:
  static std::vector<Character> make_chars(const Field& F, int r, int frob) {
    long long pk = 1;
    for (int i = 0; i < frob; ++i) pk *= F.p();
    std::vector<Character> out;
    for (int j = 0; j <= r; ++j) out.push_back(char_of(F, (r - j) * pk, j * pk));
    return out;
  }
  int r_, frob_;
};

class TensorNode final : public ModuleNode {
 public:
  TensorNode(Module A, Module B)
      : ModuleNode(A->field(), A->dim() * B->dim(), make_chars(*A, *B)), A_(std::move(A)), B_(std::move(B)) {}
  std::string describe() const override { return "(" + A_->describe() + " x " + B_->describe() + ")"; }

 protected:
  Matrix eval_impl(const GroupElement& g) const override { return kron(A_->eval(g), B_->eval(g)); }
  Matrix gen_impl(int k) const override { return kron(A_->gen(k), B_->gen(k)); }

 private:
  static std::vector<Character> make_chars(const ModuleNode& A, const ModuleNode& B) {
    const Field& F = A.field();
    std::vector<Character> out;
    for (auto x : A.chars())
      for (auto y : B.chars()) out.push_back(char_of(F, x.a + y.a, x.b + y.b));
    return out;
  }
  Module A_, B_;
};

class SumNode final : public ModuleNode {
 public:
  SumNode(const Field& F, std::vector<Module> parts) : ModuleNode(F, total(parts), make_chars(parts)), parts_(std::move(parts)) {}
  std::string describe() const override {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) s += (i ? " + " : "") + parts_[i]->describe();
    return s + ")";
  }

 protected:
  Matrix eval_impl(const GroupElement& g) const override {
    std::vector<Matrix> blocks;
    for (const auto& P : parts_) blocks.push_back(P->eval(g));
    return block_diag(blocks);
  }
  Matrix gen_impl(int k) const override {
    std::vector<Matrix> blocks;
    for (const auto& P : parts_) blocks.push_back(P->gen(k));
    return block_diag(blocks);
  }

 private:
  Matrix block_diag(const std::vector<Matrix>& blocks) const {
    Matrix out(field(), dim(), dim());
    int off = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < b.rows(); ++i) std::copy(b.row(i), b.row(i) + b.cols(), out.row(off + i) + off);
      off += b.rows();
    }
    return out;
  }
  static int total(const std::vector<Module>& parts) {
    int n = 0;
    for (const auto& P : parts) n += P->dim();
    return n;
  }
  static std::vector<Character> make_chars(const std::vector<Module>& parts) {
    std::vector<Character> out;
    for (const auto& P : parts) out.insert(out.end(), P->chars().begin(), P->chars().end());
    return out;
  }
  std::vector<Module> parts_;
};

class FrobNode final : public ModuleNode {
 public:
  FrobNode(Module M, int k) : ModuleNode(M->field(), M->dim(), make_chars(*M, k)), M_(std::move(M)), k_(k) {}
  std::string describe() const override { return M_->describe() + "^Fr" + std::to_string(k_); }

 protected:
  Matrix eval_impl(const GroupElement& g) const override { return M_->eval(g_frob(field(), g, k_)); }

 private:
  static std::vector<Character> make_chars(const ModuleNode& M, int k) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= M.field().p();
    std::vector<Character> out;
    for (auto c : M.chars()) out.push_back(char_of(M.field(), c.a * pk, c.b * pk));
    return out;
  }
  Module M_;
  int k_;
};

class DetNode final : public ModuleNode {
 public:
  DetNode(Module M, long long a) : ModuleNode(M->field(), M->dim(), make_chars(*M, a)), M_(std::move(M)), a_(a) {}
  std::string describe() const override { return M_->describe() + "*det^" + std::to_string(a_); }

 protected:
  Matrix eval_impl(const GroupElement& g) const override {
    return M_->eval(g).scaled(field().pow(g_det(field(), g), a_));
  }
  Matrix gen_impl(int k) const override {
    const auto gens = generators(field());
    return M_->gen(k).scaled(field().pow(g_det(field(), gens[k]), a_));
  }

 private:
  static std::vector<Character> make_chars(const ModuleNode& M, long long a) {
    std::vector<Character> out;
    for (auto c : M.chars()) out.push_back(char_of(M.field(), c.a + a, c.b + a));
    return out;
  }
  Module M_;
  long long a_;
};

class DualNode final : public ModuleNode {
 public:
  explicit DualNode(Module M) : ModuleNode(M->field(), M->dim(), make_chars(*M)), M_(std::move(M)) {}
  std::string describe() const override { return M_->describe() + "^*"; }

 protected:
  Matrix eval_impl(const GroupElement& g) const override { return M_->eval(g_inv(field(), g)).transpose(); }
  Matrix gen_impl(int k) const override { return inverse(M_->gen(k)).transpose(); }

 private:
  static std::vector<Character> make_chars(const ModuleNode& M) {
    std::vector<Character> out;
    for (auto c : M.chars()) out.push_back(char_of(M.field(), -c.a, -c.b));
    return out;
  }
  Module M_;
};

class SubNode final : public ModuleNode {
 public:
  explicit SubNode(Submodule S) : ModuleNode(S.ambient->field(), S.dim(), S.chars()), S_(std::move(S)) {}
  std::string describe() const override { return "sub[" + std::to_string(dim()) + "](" + S_.ambient->describe() + ")"; }

 protected:
  Matrix eval_impl(const GroupElement& g) const override { return restrict_mat(S_.ambient->eval(g)); }
  Matrix gen_impl(int k) const override { return restrict_mat(S_.ambient->gen(k)); }

 private:
  Matrix restrict_mat(const Matrix& T) const { return (S_.rows() * T).select_cols(S_.basis.pivots); }
  Submodule S_;
};

class QuotNode final : public ModuleNode {
 public:
  explicit QuotNode(Submodule S)
      : ModuleNode(S.ambient->field(), S.ambient->dim() - S.dim(), make_chars(S)),
        S_(std::move(S)),
        free_(complement(S_.ambient->dim(), S_.basis.pivots)) {}
  std::string describe() const override {
    return S_.ambient->describe() + "/[" + std::to_string(S_.dim()) + "]";
  }

 protected:
  Matrix eval_impl(const GroupElement& g) const override { return reduce(S_.ambient->eval(g)); }
  Matrix gen_impl(int k) const override { return reduce(S_.ambient->gen(k)); }

 private:
  Matrix reduce(const Matrix& T) const {
    Matrix Y = T.select_rows(free_);
    Matrix Yn = Y.select_cols(free_);
    if (S_.dim() == 0) return Yn;
    return Yn - Y.select_cols(S_.basis.pivots) * S_.rows().select_cols(free_);
  }
  static std::vector<Character> make_chars(const Submodule& S) {
    std::vector<Character> out;
    for (int j : complement(S.ambient->dim(), S.basis.pivots)) out.push_back(S.ambient->chars()[j]);
    return out;
  }
  Submodule S_;
  std::vector<int> free_;
};

class WordsNode final : public ModuleNode {
 public:
  WordsNode(const Field& F, int n, std::vector<Matrix> gens, std::vector<Character> chars, std::string name)
      : ModuleNode(F, n, std::move(chars)), given_(std::move(gens)), name_(std::move(name)) {
    if (static_cast<int>(given_.size()) != num_generators(F)) throw std::invalid_argument("wrong number of generators");
    for (const auto& m : given_)
      if (m.rows() != dim() || m.cols() != dim()) throw std::invalid_argument("generator shape mismatch");
  }
  std::string describe() const override { return name_; }

 protected:
  Matrix eval_impl(const GroupElement& g) const override { return eval_by_words(*this, g); }
  Matrix gen_impl(int k) const override { return given_[k]; }

 private:
  std::vector<Matrix> given_;
  std::string name_;
};

class ZeroNode final : public ModuleNode {
 public:
  explicit ZeroNode(const Field& F) : ModuleNode(F, 0, {}) {}
  std::string describe() const override { return "0"; }

 protected:
  Matrix eval_impl(const GroupElement&) const override { return Matrix(field(), 0, 0); }
};

}  // namespace

Matrix ModuleNode::gen_impl(int k) const { return eval_impl(generators(field())[k]); }

void ModuleNode::finalize() {
  gens_.clear();
  for (int k = 0; k < num_generators(field()); ++k) gens_.push_back(gen_impl(k));
}

const Rref& ModuleNode::u_invariants() const {
  std::lock_guard lock(cache_mu_);
  if (!uinv_) {
    const Field& F = field();
    Matrix K = Matrix::identity(F, dim());
    // intersect the fixed spaces of u_0, ..., u_{f-1} one at a time
    for (int j = 0; j < F.f() && K.rows() > 0; ++j) {
      Matrix D = K * gens_[j] - K;
      K = left_kernel(D) * K;
    }
    uinv_ = std::make_shared<const Rref>(rref(K));
  }
  return *uinv_;
}

std::vector<Character> Submodule::chars() const {
  std::vector<Character> out;
  for (int c : basis.pivots) out.push_back(ambient->chars()[c]);
  return out;
}

Character char_of(const Field& F, long long a, long long b) {
  const int n = F.q() - 1;
  return {mod(a, n), mod(b, n)};
}

Module sym(const Field& F, int r, int frob) {
  if (r < 0) throw std::invalid_argument("negative symmetric power");
  return make_node<SymNode>(F, r, ((frob % F.f()) + F.f()) % F.f());
}

Module tensor(const Module& A, const Module& B) { return make_node<TensorNode>(A, B); }

Module tensor(const std::vector<Module>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty tensor product");
  Module out = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  return make_node<SumNode>(parts[0]->field(), parts);
}

Module frob_twist(const Module& M, int k) {
  k = ((k % M->field().f()) + M->field().f()) % M->field().f();
  if (k == 0) return M;
  return make_node<FrobNode>(M, k);
}

Module det_twist(const Module& M, long long a) {
  if (mod(a, M->field().q() - 1) == 0) return M;
  return make_node<DetNode>(M, mod(a, M->field().q() - 1));
}

Module dual(const Module& M) { return make_node<DualNode>(M); }
Module sub_module(const Submodule& S) { return make_node<SubNode>(S); }
Module quotient(const Submodule& S) { return make_node<QuotNode>(S); }
Module zero_module(const Field& F) { return make_node<ZeroNode>(F); }

Module from_generators(const Field& F, std::vector<Matrix> gens, std::vector<Character> chars, std::string name) {
  const int dim = static_cast<int>(chars.size());
  return make_node<WordsNode>(F, dim, std::move(gens), std::move(chars), std::move(name));
}

Matrix eval_by_words(const ModuleNode& M, const GroupElement& g) {
  const Field& F = M.field();
  Matrix T = Matrix::identity(F, M.dim());
  // g = s_1 s_2 ... s_n, and rho(g) = rho(s_n) ... rho(s_1)
  for (auto [k, e] : bruhat_word(F, g))
    for (int i = 0; i < e; ++i) T = M.gen(k) * T;
  return T;
}

Submodule make_sub(const Module& M, const Matrix& rows) {
  if (rows.cols() != M->dim()) throw std::invalid_argument("submodule rows do not match ambient dimension");
  return Submodule{M, rref(rows)};
}

Submodule zero_sub(const Module& M) { return make_sub(M, Matrix(M->field(), 0, M->dim())); }
Submodule whole(const Module& M) { return make_sub(M, Matrix::identity(M->field(), M->dim())); }

bool is_stable(const Module& M, const Matrix& rows) {
  Rref b = rref(rows);
  for (const auto& T : M->gens()) {
    Matrix img = b.m * T;
    for (int i = 0; i < img.rows(); ++i)
      if (!in_span(b, img.row(i))) return false;
  }
  return true;
}

Submodule spin(const Module& M, const Matrix& vectors) {
  const Field& F = M->field();
  const int n = M->dim();
  // echelon basis kept fully reduced so membership is a single pass
  Rref ech;
  ech.m = Matrix(F, 0, n);
  std::vector<std::vector<Elem>> queue;
  auto add = [&](std::vector<Elem> v) {
    if (reduce_against(ech, v.data())) return;
    int piv = 0;
    while (v[piv] == 0) ++piv;
    scale_row(F, v.data(), F.inv(v[piv]), n);
    for (int i = 0; i < ech.rank; ++i) {
      Elem c = ech.m(i, piv);
      if (c != 0) axpy(F, ech.m.row(i), v.data(), F.neg(c), n);
    }
    ech.m.append_row(v.data());
    ech.pivots.push_back(piv);
    ++ech.rank;
    queue.push_back(std::move(v));
  };
  for (int i = 0; i < vectors.rows(); ++i) add(vectors.row_vec(i));
  for (size_t head = 0; head < queue.size() && ech.rank < n; ++head) {
    for (const auto& T : M->gens()) {
      Matrix v(F, 1, n);
      std::copy(queue[head].begin(), queue[head].end(), v.row(0));
      Matrix w = v * T;
      add(w.row_vec(0));
    }
  }
  return make_sub(M, ech.m);
}

Submodule sum(const Submodule& S, const Submodule& T) { return make_sub(S.ambient, S.rows().stack(T.rows())); }

Submodule meet(const Submodule& S, const Submodule& T) {
  return make_sub(S.ambient, subspace_meet_join(S.rows(), T.rows()).first);
}

bool contains(const Submodule& big, const Submodule& small) {
  for (int i = 0; i < small.dim(); ++i)
    if (!in_span(big.basis, small.rows().row(i))) return false;
  return true;
}

bool equal(const Submodule& S, const Submodule& T) { return S.dim() == T.dim() && S.rows() == T.rows(); }

Matrix project(const Submodule& S, const Matrix& v) {
  std::vector<int> free = complement(S.ambient->dim(), S.basis.pivots);
  Matrix out = v.select_cols(free);
  if (S.dim() == 0) return out;
  return out - v.select_cols(S.basis.pivots) * S.rows().select_cols(free);
}

Submodule preimage(const Submodule& S, const Submodule& inQ) {
  std::vector<int> free = complement(S.ambient->dim(), S.basis.pivots);
  Matrix lift(S.ambient->field(), inQ.dim(), S.ambient->dim());
  for (int i = 0; i < inQ.dim(); ++i)
    for (size_t j = 0; j < free.size(); ++j) lift(i, free[j]) = inQ.rows()(i, static_cast<int>(j));
  return make_sub(S.ambient, S.rows().stack(lift));
}

Submodule push_up(const Submodule& S, const Submodule& T) { return make_sub(S.ambient, T.rows() * S.rows()); }

Matrix restrict_to(const Submodule& S, const Matrix& v) { return coordinates(S.basis, v); }

Submodule pull_down(const Submodule& S, const Module& Snode, const Submodule& T) {
  return make_sub(Snode, restrict_to(S, T.rows()));
}

Submodule hom_image(const Module& N, const Matrix& phi) { return make_sub(N, phi); }
Submodule hom_kernel(const Module& M, const Matrix& phi) { return make_sub(M, left_kernel(phi)); }

bool is_hom(const Module& M, const Module& N, const Matrix& phi) {
  if (phi.rows() != M->dim() || phi.cols() != N->dim()) return false;
  for (int k = 0; k < num_generators(M->field()); ++k)
    if (!(M->gen(k) * phi == phi * N->gen(k))) return false;
  return true;
}

std::uint64_t fingerprint(const ModuleNode& M) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(M.field().p());
  mix(M.field().f());
  mix(M.dim());
  for (auto c : M.chars()) {
    mix(c.a);
    mix(c.b);
  }
  for (const auto& T : M.gens())
    for (Elem x : T.data()) mix(x);
  return h;
}

}  // namespace gl2wb
