#include "qaff/hopf.hpp"

#include <algorithm>

namespace qaff {

namespace {

bool is_identity_or_absent(const MatrixModule& m, const GenSymbol& g) {
  return !m.has(g) || equal(m.at(g), identity(m.dim));
}

std::vector<int> chevalley_nodes(const MatrixModule& m) {
  std::vector<int> out;
  for (int i = 0; i < m.type.size(); ++i)
    if (m.has(GenSymbol::E(i))) out.push_back(i);
  return out;
}

Matrix scaled(const RatFunc& c, const Matrix& x) { return c * x; }

}  // namespace

Vector tensor_vector(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < y.size(); ++j) out(i * y.size() + j) = x(i) * y(j);
  return out;
}

TensorModule tensor(const MatrixModule& left, const MatrixModule& right) {
  if (!(left.type == right.type))
    throw TypeMismatch("tensor factors have types " + left.type.name() + " and " + right.type.name());
  for (const MatrixModule* f : {&left, &right})
    for (int sg : {1, -1})
      if (!is_identity_or_absent(*f, GenSymbol::GammaHalf(sg)) ||
          !is_identity_or_absent(*f, GenSymbol::GammaPrimeHalf(sg)))
        throw TypeMismatch("tensor factors must have γ = γ' = 1");
  TensorModule t{left, right, {}};
  MatrixModule& m = t.module;
  m.dim = left.dim * right.dim;
  m.type = left.type;
  const Matrix il = identity(left.dim), ir = identity(right.dim);
  const std::vector<int> nl = chevalley_nodes(left), nr = chevalley_nodes(right);
  for (int i : nl) {
    if (std::find(nr.begin(), nr.end(), i) == nr.end()) continue;
    m.set(GenSymbol::E(i), kron(left.at(GenSymbol::E(i)), ir) +
                               kron(left.at(GenSymbol::W(i)), right.at(GenSymbol::E(i))));
    m.set(GenSymbol::F(i), kron(il, right.at(GenSymbol::F(i))) +
                               kron(left.at(GenSymbol::F(i)), right.at(GenSymbol::Wp(i))));
    for (int sg : {1, -1}) {
      m.set(GenSymbol::W(i, sg), kron(left.at(GenSymbol::W(i, sg)), right.at(GenSymbol::W(i, sg))));
      m.set(GenSymbol::Wp(i, sg), kron(left.at(GenSymbol::Wp(i, sg)), right.at(GenSymbol::Wp(i, sg))));
    }
  }
  const Matrix id = identity(m.dim);
  for (int sg : {1, -1}) {
    m.set(GenSymbol::GammaHalf(sg), id);
    m.set(GenSymbol::GammaPrimeHalf(sg), id);
  }
  return t;
}

std::vector<std::string> check_antipode(const MatrixModule& m) {
  std::vector<std::string> out;
  const Matrix id = identity(m.dim), zero = zeros(m.dim);
  auto expect = [&](const std::string& what, const Matrix& got, const Matrix& want) {
    if (!equal(got, want)) out.push_back(what + ": " + render_inline(got) + " != " + render_inline(want));
  };
  for (int i : chevalley_nodes(m)) {
    const std::string si = std::to_string(i);
    const Matrix e = m.at(GenSymbol::E(i)), f = m.at(GenSymbol::F(i));
    const Matrix w = m.at(GenSymbol::W(i)), wi = m.at(GenSymbol::W(i, -1));
    const Matrix wp = m.at(GenSymbol::Wp(i)), wpi = m.at(GenSymbol::Wp(i, -1));
    const Matrix Se = -(wi * e), Sf = -(f * wpi);
    // Δ(e) = e⊗1 + ω⊗e, Δ(f) = 1⊗f + f⊗ω'
    expect("S(e" + si + ")1 + S(w" + si + ")e" + si, Se + wi * e, zero);
    expect("e" + si + "S(1) + w" + si + "S(e" + si + ")", e + w * Se, zero);
    expect("S(1)f" + si + " + S(f" + si + ")w'" + si, f + Sf * wp, zero);
    expect("1S(f" + si + ") + f" + si + "S(w'" + si + ")", Sf + f * wpi, zero);
    expect("S(w" + si + ")w" + si, wi * w, id);
    expect("S(w'" + si + ")w'" + si, wpi * wp, id);
  }
  return out;
}

std::vector<Vector> span_closure(const MatrixModule& m, const Vector& seed) {
  // Reduced rows, pivot entries 1; `pivots` parallel to `rows`.
  std::vector<Vector> rows;
  std::vector<Eigen::Index> pivots;
  auto reduce = [&](Vector v) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!v(pivots[r]).is_zero()) v -= v(pivots[r]) * rows[r];
    return v;
  };
  auto insert = [&](Vector v) {
    Eigen::Index p = 0;
    while (v(p).is_zero()) ++p;
    v *= v(p).inverse();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!rows[r](p).is_zero()) rows[r] -= rows[r](p) * v;
    rows.push_back(v);
    pivots.push_back(p);
  };
  std::vector<Vector> queue;
  if (!is_zero(seed)) queue.push_back(seed);
  while (!queue.empty()) {
    Vector v = reduce(queue.back());
    queue.pop_back();
    if (is_zero(v)) continue;
    insert(v);
    if (static_cast<Eigen::Index>(rows.size()) == m.dim) break;
    for (const auto& [g, mat] : m.assign) queue.push_back(mat * v);
  }
  std::vector<std::size_t> order(rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return pivots[x] < pivots[y]; });
  std::vector<Vector> out;
  for (auto k : order) out.push_back(rows[k]);
  return out;
}

std::string to_string(const Automorphism& aut) {
  if (const auto* a = std::get_if<ASigma>(&aut)) {
    std::string s = "a_sigma(";
    for (std::size_t k = 0; k < a->sigma.size(); ++k) s += (k ? "," : "") + std::to_string(a->sigma[k]);
    return s + ")";
  }
  if (std::holds_alternative<Gamma1>(aut)) return "Gamma1";
  return "Gamma2(" + std::get<Gamma2>(aut).c.str() + ")";
}

MatrixModule twist(const MatrixModule& m, const Automorphism& aut) {
  MatrixModule out = m;
  if (const auto* a = std::get_if<ASigma>(&aut)) {
    if (static_cast<int>(a->sigma.size()) != m.type.size())
      throw IndexOutOfRange("a_sigma needs one sign per node");
    out.assign.clear();
    for (int i = 0; i < m.type.size(); ++i) {
      const int sg = a->sigma[static_cast<std::size_t>(i)];
      if (sg != 1 && sg != -1) throw IndexOutOfRange("a_sigma entries must be +1 or -1");
      const RatFunc c(static_cast<long>(sg));
      // σ_i = σ_i^{-1}, so the inverses scale the same way.
      out.set(GenSymbol::E(i), scaled(c, m.at(GenSymbol::E(i))));
      out.set(GenSymbol::F(i), m.at(GenSymbol::F(i)));
      for (int e : {1, -1}) {
        out.set(GenSymbol::W(i, e), scaled(c, m.at(GenSymbol::W(i, e))));
        out.set(GenSymbol::Wp(i, e), scaled(c, m.at(GenSymbol::Wp(i, e))));
      }
    }
    for (int e : {1, -1})
      for (const auto& g : {GenSymbol::GammaHalf(e), GenSymbol::GammaPrimeHalf(e)})
        if (m.has(g)) out.set(g, m.at(g));
    out.kmax = 0;
    return out;
  }

  bool any_current = false;
  for (const auto& [g, mat] : m.assign) any_current |= g.kind == GenKind::Xp || g.kind == GenKind::Xm;
  if (!any_current) throw MissingGenerator(to_string(aut) + " acts on current generators; the module has none");

  if (std::holds_alternative<Gamma1>(aut)) {
    for (auto& [g, mat] : out.assign) {
      switch (g.kind) {
        case GenKind::Xp:
        case GenKind::Xm:
          if (g.k % 2 != 0) mat = -mat;
          break;
        case GenKind::GammaHalf:
        case GenKind::GammaPrimeHalf:
          mat = -mat;
          break;
        case GenKind::E:
        case GenKind::F:
          // e_0, f_0 are degree ±1 in the loop grading.
          if (g.i == 0) mat = -mat;
          break;
        default:
          break;
      }
    }
    return out;
  }

  const RatFunc& c = std::get<Gamma2>(aut).c;
  for (auto& [g, mat] : out.assign) {
    long deg = 0;
    switch (g.kind) {
      case GenKind::Xp:
      case GenKind::Xm:
      case GenKind::Wser:
      case GenKind::Aimag:
        deg = g.k;
        break;
      case GenKind::Wpser:
        deg = -g.k;  // ω'(-m)
        break;
      case GenKind::E:
        deg = g.i == 0 ? 1 : 0;
        break;
      case GenKind::F:
        deg = g.i == 0 ? -1 : 0;
        break;
      default:
        break;
    }
    if (deg != 0) mat = c.pow(deg) * mat;
  }
  return out;
}

MatrixModule mutate(const MatrixModule& m, const std::string& kind) {
  MatrixModule out = m;
  if (kind == "xplus") {
    out.set(GenSymbol::Xp(1, 1), RatFunc(2) * m.at(GenSymbol::Xp(1, 1)));
  } else if (kind == "e1") {
    out.set(GenSymbol::E(1), RatFunc(2) * m.at(GenSymbol::E(1)));
  } else if (kind == "omega") {
    out.set(GenSymbol::W(1, 1), RatFunc::r() * m.at(GenSymbol::W(1, 1)));
    out.set(GenSymbol::W(1, -1), RatFunc::r().inverse() * m.at(GenSymbol::W(1, -1)));
  } else {
    throw Unsupported("unknown mutation \"" + kind + "\" (expected xplus, e1 or omega)");
  }
  return out;
}

}  // namespace qaff
