#include "qaff/relations.hpp"

#include <chrono>
#include <regex>
#include <sstream>

namespace qaff {

namespace {

using Clock = std::chrono::steady_clock;

std::string inst(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  return os.str();
}

class Checker {
 public:
  explicit Checker(std::string id) : start_(Clock::now()) { rep_.relation_id = std::move(id); }

  template <typename DA, typename DB>
  void expect(const std::string& where, const Eigen::MatrixBase<DA>& lhs, const Eigen::MatrixBase<DB>& rhs) {
    if (!equal(lhs, rhs)) rep_.failures.push_back({where, render_inline(lhs), render_inline(rhs)});
  }

  void count() { ++rep_.instances_checked; }

  RelationReport done() {
    rep_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(rep_);
  }

 private:
  RelationReport rep_;
  Clock::time_point start_;
};

Matrix mat_pow(const Matrix& m, const Matrix& minv, long e) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (long j = 0; j < std::abs(e); ++j) out = out * (e > 0 ? m : minv);
  return out;
}

// γ^{h/2} or γ'^{h/2}; identity when the module leaves the gammas unassigned.
Matrix gamma_pow(const MatrixModule& m, bool prime, long half_steps) {
  const GenSymbol up = prime ? GenSymbol::GammaPrimeHalf(1) : GenSymbol::GammaHalf(1);
  const GenSymbol down = prime ? GenSymbol::GammaPrimeHalf(-1) : GenSymbol::GammaHalf(-1);
  if (!m.has(up)) return identity(m.dim);
  return mat_pow(m.at(up), m.at(down), half_steps);
}

Matrix conj(const Matrix& g, const Matrix& x, const Matrix& ginv) { return g * x * ginv; }

}  // namespace

GenSymbol GenSymbol::Aimag(int i, int l) {
  if (l == 0) throw IndexOutOfRange("a_i(l) needs l != 0");
  return {GenKind::Aimag, i, l};
}

std::string GenSymbol::str() const {
  const std::string si = std::to_string(i);
  const std::string sk = std::to_string(k);
  switch (kind) {
    case GenKind::E: return "E(" + si + ")";
    case GenKind::F: return "F(" + si + ")";
    case GenKind::W: return "W(" + si + "," + sk + ")";
    case GenKind::Wp: return "Wp(" + si + "," + sk + ")";
    case GenKind::GammaHalf: return "GammaHalf(" + sk + ")";
    case GenKind::GammaPrimeHalf: return "GammaPrimeHalf(" + sk + ")";
    case GenKind::Xp: return "Xp(" + si + "," + sk + ")";
    case GenKind::Xm: return "Xm(" + si + "," + sk + ")";
    case GenKind::Aimag: return "Aimag(" + si + "," + sk + ")";
    case GenKind::Wser: return "Wser(" + si + "," + sk + ")";
    case GenKind::Wpser: return "Wpser(" + si + "," + std::to_string(-k) + ")";
  }
  return "?";
}

GenSymbol GenSymbol::parse(const std::string& text) {
  static const std::regex one(R"(\s*(E|F|GammaHalf|GammaPrimeHalf)\(\s*(-?\d+)\s*\)\s*)");
  static const std::regex two(R"(\s*(W|Wp|Xp|Xm|Aimag|Wser|Wpser)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch mt;
  if (std::regex_match(text, mt, one)) {
    const int x = std::stoi(mt[2]);
    if (mt[1] == "E") return E(x);
    if (mt[1] == "F") return F(x);
    if (mt[1] == "GammaHalf") return GammaHalf(x);
    return GammaPrimeHalf(x);
  }
  if (std::regex_match(text, mt, two)) {
    const int x = std::stoi(mt[2]);
    const int y = std::stoi(mt[3]);
    const std::string k = mt[1];
    if (k == "W") return W(x, y);
    if (k == "Wp") return Wp(x, y);
    if (k == "Xp") return Xp(x, y);
    if (k == "Xm") return Xm(x, y);
    if (k == "Aimag") return Aimag(x, y);
    if (k == "Wser") return Wser(x, y);
    return Wpser(x, -y);  // written with the sign of the mode: Wpser(1,-2) = ω'(-2)
  }
  throw ParseError("bad generator symbol \"" + text + "\"");
}

bool MatrixModule::has(const GenSymbol& g) const { return assign.count(g) != 0; }

Matrix MatrixModule::at(const GenSymbol& g) const {
  if ((g.kind == GenKind::Wser || g.kind == GenKind::Wpser) && g.k < 0) return zeros(dim);
  auto it = assign.find(g);
  if (it == assign.end()) throw MissingGenerator("module has no matrix for " + g.str());
  return it->second;
}

bool all_passed(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

Vector basis_vector(int dim, int i) {
  if (i < 0 || i >= dim) throw IndexOutOfRange("basis index " + std::to_string(i));
  Vector v = Vector::Zero(dim);
  v(i) = RatFunc(1);
  return v;
}

Vector apply_word(const MatrixModule& m, const std::vector<GenSymbol>& word, const Vector& v) {
  Vector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = m.at(*it) * out;
  return out;
}

// ---------------------------------------------------------------------------
// Chevalley presentation

std::vector<RelationReport> check_chevalley(const MatrixModule& m) {
  return check_chevalley(m, build_pairing(m.type));
}

std::vector<RelationReport> check_chevalley(const MatrixModule& m, const PairingTable& t) {
  std::vector<int> nodes;
  for (int i = 0; i < t.size(); ++i) nodes.push_back(i);
  return check_chevalley(m, t, nodes);
}

std::vector<RelationReport> check_chevalley(const MatrixModule& m, const PairingTable& t,
                                            const std::vector<int>& nodes) {
  const int N = t.size();
  for (int i : nodes)
    if (i < 0 || i >= N) throw IndexOutOfRange("node " + std::to_string(i) + " outside " + t.type.name());
  const Matrix id = identity(m.dim);
  std::vector<Matrix> w(N), wi(N), wp(N), wpi(N), e(N), f(N);
  for (int i : nodes) {
    w[i] = m.at(GenSymbol::W(i, 1));
    wi[i] = m.at(GenSymbol::W(i, -1));
    wp[i] = m.at(GenSymbol::Wp(i, 1));
    wpi[i] = m.at(GenSymbol::Wp(i, -1));
    e[i] = m.at(GenSymbol::E(i));
    f[i] = m.at(GenSymbol::F(i));
  }
  std::vector<RelationReport> out;

  {
    Checker c("R1");
    c.count();
    const Matrix g = gamma_pow(m, false, 2), gp = gamma_pow(m, true, 2);
    const RatFunc level = (t.r * t.s).pow(static_cast<long>(m.central_charge));
    c.expect("gamma*gamma'", g * gp, level * id);
    for (const auto& [sym, mat] : m.assign) {
      if (sym.kind == GenKind::GammaHalf || sym.kind == GenKind::GammaPrimeHalf) continue;
      for (bool prime : {false, true}) {
        const Matrix h = gamma_pow(m, prime, 1);
        c.expect(std::string(prime ? "gamma'" : "gamma") + " central vs " + sym.str(), h * mat, mat * h);
      }
    }
    for (int i : nodes) {
      c.count();
      c.expect(inst({{"i", i}}) + " w*w^-1", w[i] * wi[i], id);
      c.expect(inst({{"i", i}}) + " w'*w'^-1", wp[i] * wpi[i], id);
    }
    for (int i : nodes)
      for (int j : nodes) {
        c.count();
        const std::string at = inst({{"i", i}, {"j", j}});
        c.expect(at + " [w_i,w_j]", commutator(w[i], w[j]), zeros(m.dim));
        c.expect(at + " [w_i,w'_j]", commutator(w[i], wp[j]), zeros(m.dim));
        c.expect(at + " [w'_i,w'_j]", commutator(wp[i], wp[j]), zeros(m.dim));
      }
    out.push_back(c.done());
  }

  {
    Checker c("R2");
    for (int i : nodes)
      for (int j : nodes) {
        c.count();
        const std::string at = inst({{"i", i}, {"j", j}});
        const RatFunc pij = t.entries(i, j), pji = t.entries(j, i);
        c.expect(at + " w_j e_i w_j^-1", conj(w[j], e[i], wi[j]), pij * e[i]);
        c.expect(at + " w_j f_i w_j^-1", conj(w[j], f[i], wi[j]), pij.inverse() * f[i]);
        c.expect(at + " w'_j e_i w'_j^-1", conj(wp[j], e[i], wpi[j]), pji.inverse() * e[i]);
        c.expect(at + " w'_j f_i w'_j^-1", conj(wp[j], f[i], wpi[j]), pji * f[i]);
      }
    out.push_back(c.done());
  }

  {
    // Cleared of the 1/(r-s) so the same check survives s -> r.
    Checker c("R3");
    const RatFunc rms = t.r - t.s;
    for (int i : nodes)
      for (int j : nodes) {
        c.count();
        const Matrix rhs = i == j ? Matrix(w[i] - wp[i]) : zeros(m.dim);
        c.expect(inst({{"i", i}, {"j", j}}) + " (r-s)[e_i,f_j]", rms * commutator(e[i], f[j]), rhs);
      }
    out.push_back(c.done());
  }

  {
    Checker c("R4");
    for (int i : nodes)
      for (int j : nodes) {
        if (i == j) continue;
        c.count();
        const int times = 1 - t.cartan(i, j);
        Matrix be = e[j], bf = f[j];
        for (int k = 0; k < times; ++k) {
          be = e[i] * be - w[i] * be * wi[i] * e[i];
          bf = bf * f[i] - f[i] * wpi[i] * bf * wp[i];
        }
        const std::string at = inst({{"i", i}, {"j", j}});
        c.expect(at + " (ad_l e_i)^(1-a_ij) e_j", be, zeros(m.dim));
        c.expect(at + " (ad_r f_i)^(1-a_ij) f_j", bf, zeros(m.dim));
      }
    out.push_back(c.done());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Drinfeld presentation

std::vector<RelationReport> check_drinfeld(const MatrixModule& m, int kmax, int lmax) {
  return check_drinfeld(m, kmax, lmax, build_pairing(m.type));
}

std::vector<RelationReport> check_drinfeld(const MatrixModule& m, int K, int L, const PairingTable& t) {
  if (K > m.kmax)
    throw WindowTooSmall("relations need currents up to |k| = " + std::to_string(K + 1) + ", module has " +
                         std::to_string(m.kmax + 1));
  const int n = t.size() - 1;
  const Matrix id = identity(m.dim), zero = zeros(m.dim);
  const RatFunc rs = t.r * t.s;
  auto x = [&](int sign, int i, int k) { return m.at(sign > 0 ? GenSymbol::Xp(i, k) : GenSymbol::Xm(i, k)); };
  auto rms = [&](int i) { return t.ri[static_cast<std::size_t>(i)] - t.si[static_cast<std::size_t>(i)]; };
  std::vector<RelationReport> out;

  {
    Checker c("D1");
    c.count();
    const RatFunc level = rs.pow(static_cast<long>(m.central_charge));
    c.expect("gamma*gamma'", gamma_pow(m, false, 2) * gamma_pow(m, true, 2), level * id);
    for (const auto& [sym, mat] : m.assign) {
      if (sym.kind == GenKind::GammaHalf || sym.kind == GenKind::GammaPrimeHalf) continue;
      for (bool prime : {false, true}) {
        const Matrix h = gamma_pow(m, prime, 1);
        c.expect(std::string(prime ? "gamma'" : "gamma") + " central vs " + sym.str(), h * mat, mat * h);
      }
    }
    for (int i = 1; i <= n; ++i) {
      c.count();
      c.expect(inst({{"i", i}}) + " w*w^-1", m.at(GenSymbol::W(i, 1)) * m.at(GenSymbol::W(i, -1)), id);
      c.expect(inst({{"i", i}}) + " w'*w'^-1", m.at(GenSymbol::Wp(i, 1)) * m.at(GenSymbol::Wp(i, -1)), id);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        c.count();
        const std::string at = inst({{"i", i}, {"j", j}});
        const Matrix wi = m.at(GenSymbol::W(i)), wj = m.at(GenSymbol::W(j)), wpi = m.at(GenSymbol::Wp(i)),
                     wpj = m.at(GenSymbol::Wp(j));
        c.expect(at + " [w_i,w_j]", commutator(wi, wj), zero);
        c.expect(at + " [w_i,w'_j]", commutator(wi, wpj), zero);
        c.expect(at + " [w'_i,w'_j]", commutator(wpi, wpj), zero);
      }
    out.push_back(c.done());
  }

  std::vector<int> ls;
  for (int l = 1; l <= L; ++l) {
    ls.push_back(l);
    ls.push_back(-l);
  }

  {
    Checker c("D2");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int l : ls)
          for (int lp : ls) {
            c.count();
            Matrix rhs = zero;
            if (l + lp == 0) {
              const long al = std::abs(l);
              const long la = static_cast<long>(l) * t.cartan(i, j);
              const RatFunc ri = t.ri[static_cast<std::size_t>(i)], si = t.si[static_cast<std::size_t>(i)];
              const RatFunc coef = rs.pow(frac(al, 2)) * (ri * si).pow(frac(-la, 2)) *
                                   quantum_int(la, ri, si) / RatFunc(al) / (t.r - t.s);
              rhs = coef * (gamma_pow(m, false, 2 * al) - gamma_pow(m, true, 2 * al));
            }
            c.expect(inst({{"i", i}, {"j", j}, {"l", l}, {"l'", lp}}),
                     commutator(m.at(GenSymbol::Aimag(i, l)), m.at(GenSymbol::Aimag(j, lp))), rhs);
          }
    out.push_back(c.done());
  }

  {
    Checker c("D3");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int l : ls) {
          c.count();
          const Matrix a = m.at(GenSymbol::Aimag(i, l));
          const std::string at = inst({{"i", i}, {"j", j}, {"l", l}});
          for (int sg : {1, -1}) {
            c.expect(at + " [a,w^" + std::to_string(sg) + "]", commutator(a, m.at(GenSymbol::W(j, sg))), zero);
            c.expect(at + " [a,w'^" + std::to_string(sg) + "]", commutator(a, m.at(GenSymbol::Wp(j, sg))), zero);
          }
        }
    out.push_back(c.done());
  }

  {
    Checker c("D4");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = -K; k <= K; ++k) {
          c.count();
          const Matrix w = m.at(GenSymbol::W(i, 1)), wi = m.at(GenSymbol::W(i, -1));
          const Matrix wp = m.at(GenSymbol::Wp(i, 1)), wpi = m.at(GenSymbol::Wp(i, -1));
          const RatFunc pji = t.entries(j, i), pij = t.entries(i, j);
          for (int sg : {1, -1}) {
            const Matrix xj = x(sg, j, k);
            const std::string at = inst({{"i", i}, {"j", j}, {"k", k}, {"sign", sg}});
            c.expect(at + " w_i x_j w_i^-1", conj(w, xj, wi), pji.pow(static_cast<long>(sg)) * xj);
            c.expect(at + " w'_i x_j w'_i^-1", conj(wp, xj, wpi), pij.pow(static_cast<long>(-sg)) * xj);
          }
        }
    out.push_back(c.done());
  }

  {
    // Cleared of l(r_i - s_i).
    Checker c("D5");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int l : ls)
          for (int k = -K; k <= K; ++k) {
            if (std::abs(l + k) > K + 1) continue;
            const RatFunc q = t.entries(i, i);
            const long la = static_cast<long>(l) * t.cartan(i, j);
            const RatFunc coef = rs.pow(frac(std::abs(l), 2)) * (q.pow(frac(la, 2)) - q.pow(frac(-la, 2)));
            const Matrix a = m.at(GenSymbol::Aimag(i, l));
            for (int sg : {1, -1}) {
              c.count();
              // l > 0 carries γ'^{±l/2}, l < 0 carries γ^{±l/2}.
              const Matrix g = gamma_pow(m, l > 0, static_cast<long>(sg) * l);
              const Matrix lhs = RatFunc(static_cast<long>(l)) * rms(i) * commutator(a, x(sg, j, k));
              const Matrix rhs = RatFunc(static_cast<long>(sg)) * coef * (g * x(sg, j, l + k));
              c.expect(inst({{"i", i}, {"j", j}, {"l", l}, {"k", k}, {"sign", sg}}), lhs, rhs);
            }
          }
    out.push_back(c.done());
  }

  {
    Checker c("D6");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = -K - 1; k <= K; ++k)
          for (int kp = -K - 1; kp <= K; ++kp)
            for (int sg : {1, -1}) {
              c.count();
              const RatFunc pji = t.entries(j, i).pow(static_cast<long>(sg));
              const RatFunc pij = t.entries(i, j).pow(static_cast<long>(sg));
              const RatFunc root = (t.entries(j, i) / t.entries(i, j)).pow(frac(sg, 2));
              const Matrix lhs = x(sg, i, k + 1) * x(sg, j, kp) - pji * (x(sg, j, kp) * x(sg, i, k + 1));
              const Matrix rhs =
                  -root * Matrix(x(sg, j, kp + 1) * x(sg, i, k) - pij * (x(sg, i, k) * x(sg, j, kp + 1)));
              c.expect(inst({{"i", i}, {"j", j}, {"k", k}, {"k'", kp}, {"sign", sg}}), lhs, rhs);
            }
    out.push_back(c.done());
  }

  {
    // Cleared of 1/(r_i - s_i).
    Checker c("D7");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = -K; k <= K; ++k)
          for (int kp = -K; kp <= K; ++kp) {
            const int sum = k + kp;
            if (std::abs(sum) > K) continue;
            c.count();
            Matrix rhs = zero;
            if (i == j) {
              const Matrix om = m.at(GenSymbol::Wser(i, sum));
              const Matrix omp = m.at(GenSymbol::Wpser(i, -sum));
              rhs = gamma_pow(m, true, -2L * k) * gamma_pow(m, false, -sum) * om -
                    gamma_pow(m, false, 2L * kp) * gamma_pow(m, true, sum) * omp;
            }
            c.expect(inst({{"i", i}, {"j", j}, {"k", k}, {"k'", kp}}), rms(i) * commutator(x(1, i, k), x(-1, j, kp)),
                     rhs);
          }
    out.push_back(c.done());
  }

  {
    Checker c("D8_1");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (t.cartan(i, j) != 0) continue;
        for (int mm = -K; mm <= K; ++mm)
          for (int k = -K; k <= K; ++k)
            for (int sg : {1, -1}) {
              c.count();
              const RatFunc pji = t.entries(j, i).pow(static_cast<long>(sg));
              c.expect(inst({{"i", i}, {"j", j}, {"m", mm}, {"k", k}, {"sign", sg}}), x(sg, i, mm) * x(sg, j, k),
                       pji * (x(sg, j, k) * x(sg, i, mm)));
            }
      }
    out.push_back(c.done());
  }

  // The index range "1 <= j < i < n" of the Serre-type current relations is
  // ambiguous for small rank; they are vacuous at rank 1 and not guessed above.
  for (const char* id : {"D8_2", "D8_3"}) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && t.cartan(i, j) != 0)
          throw Unsupported(std::string(id) + " is not implemented for current modules of rank > 1");
    Checker c(id);
    out.push_back(c.done());
  }
  return out;
}

}  // namespace qaff
