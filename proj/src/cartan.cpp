#include "qaff/cartan.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "qaff/exact_linalg.hpp"

namespace qaff {

namespace {

RatFunc mono(const Rational& er, const Rational& es) { return RatFunc::monomial(Rational(1), er, es); }

const RatFunc& rs() {
  static const RatFunc v = mono(1, 1);
  return v;
}

struct Edge {
  int i, j;
};

// Band data: symmetrizers, Dynkin edges and the printed corner entries that
// do not follow the edge rule.
struct Layout {
  std::vector<Rational> d;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, RatFunc>> corners;
};

Layout layout_for(const AffineType& t) {
  const int n = t.rank;
  Layout l;
  l.d.assign(static_cast<std::size_t>(n + 1), Rational(1));
  auto corner = [&](int i, int j, RatFunc v) { l.corners.push_back({{i, j}, std::move(v)}); };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) l.edges.push_back({i, i + 1});
      if (n >= 2) {
        // Cycle edge 0-n; its entries are printed the other way round.
        l.edges.push_back({0, n});
        corner(0, n, RatFunc::s());
        corner(n, 0, RatFunc::r().inverse());
      }
      break;
    case Family::B:
      l.d[static_cast<std::size_t>(n)] = Rational(1, 2);
      l.edges.push_back({0, 2});
      for (int i = 1; i < n; ++i) l.edges.push_back({i, i + 1});
      corner(0, 1, rs().inverse());
      corner(1, 0, rs());
      corner(0, n, rs());
      corner(n, 0, rs().inverse());
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) l.d[static_cast<std::size_t>(i)] = Rational(1, 2);
      for (int i = 0; i < n; ++i) l.edges.push_back({i, i + 1});
      corner(0, n, rs());
      corner(n, 0, rs().inverse());
      break;
    case Family::D:
      l.edges.push_back({0, 2});
      for (int i = 1; i < n - 2; ++i) l.edges.push_back({i, i + 1});
      l.edges.push_back({n - 2, n - 1});
      l.edges.push_back({n - 2, n});
      corner(0, 1, rs().inverse());
      corner(1, 0, rs());
      corner(n - 1, n, rs().inverse());
      corner(n, n - 1, rs());
      corner(0, n, rs().pow(2));
      corner(n, 0, rs().pow(-2));
      break;
    case Family::E6:
    case Family::F4:
    case Family::G2:
      break;  // transcribed whole below
  }
  return l;
}

// The three exceptional tables, row by row as printed.
std::vector<std::vector<RatFunc>> exceptional_rows(Family f) {
  const RatFunc one(1);
  const RatFunc d = mono(1, -1);  // rs^{-1}
  const RatFunc ri = mono(-1, 0), s = mono(0, 1), rsi = rs().inverse(), rs1 = rs();
  const RatFunc r2s = mono(-2, -1), rs2 = mono(1, 2);
  const RatFunc h = mono(Rational(1, 2), Rational(-1, 2)), hri = mono(Rational(-1, 2), 0),
                hs = mono(0, Rational(1, 2));
  switch (f) {
    case Family::E6:
      return {{d, rsi, r2s, rsi, rs1, rs1, rs1},
              {rs1, d, one, ri, one, one, one},
              {rs2, one, d, one, ri, one, one},
              {rs1, s, one, d, ri, one, one},
              {rsi, one, s, s, d, ri, one},
              {rsi, one, one, one, s, d, ri},
              {rsi, one, one, one, one, s, d}};
    case Family::F4:
      return {{d, r2s, rsi, rs1, rs1},
              {rs2, d, ri, one, one},
              {rs1, s, d, ri, one},
              {rsi, one, s, h, hri},
              {rsi, one, one, hs, h}};
    case Family::G2:
      return {{d, r2s, rs1},
              {rs2, d, ri},
              {rsi, s, mono(Rational(1, 3), Rational(-1, 3))}};
    default:
      return {};
  }
}

std::vector<Edge> exceptional_edges(Family f) {
  switch (f) {
    case Family::E6: return {{0, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
    case Family::F4: return {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    case Family::G2: return {{0, 1}, {1, 2}};
    default: return {};
  }
}

std::vector<Rational> exceptional_d(Family f) {
  switch (f) {
    case Family::E6: return std::vector<Rational>(7, Rational(1));
    case Family::F4: return {1, 1, 1, Rational(1, 2), Rational(1, 2)};
    case Family::G2: return {1, 1, Rational(1, 3)};
    default: return {};
  }
}

Eigen::MatrixXi cartan_from(const std::vector<Rational>& d, const std::vector<Edge>& edges, const AffineType& t) {
  const int m = static_cast<int>(d.size());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(m, m);
  for (int i = 0; i < m; ++i) a(i, i) = 2;
  if (t.family == Family::A && t.rank == 1) {
    a(0, 1) = a(1, 0) = -2;
    return a;
  }
  for (const auto& e : edges) {
    const Rational dmax = std::max(d[static_cast<std::size_t>(e.i)], d[static_cast<std::size_t>(e.j)]);
    Rational aij = -dmax / d[static_cast<std::size_t>(e.i)];
    Rational aji = -dmax / d[static_cast<std::size_t>(e.j)];
    a(e.i, e.j) = static_cast<int>(aij.get_num().get_si());
    a(e.j, e.i) = static_cast<int>(aji.get_num().get_si());
  }
  return a;
}

}  // namespace

AffineType AffineType::make(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 3; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E6: ok = rank == 6; break;
    case Family::F4: ok = rank == 4; break;
    case Family::G2: ok = rank == 2; break;
  }
  AffineType t{f, rank};
  if (!ok) throw UnsupportedRank("unsupported affine type " + t.name());
  return t;
}

AffineType AffineType::parse(std::string_view name) {
  if (name.size() < 2) throw UnsupportedRank("bad affine type \"" + std::string(name) + "\"");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000)
      throw UnsupportedRank("bad affine type \"" + std::string(name) + "\"");
    rank = rank * 10 + (ch - '0');
  }
  switch (c) {
    case 'A': return make(Family::A, rank);
    case 'B': return make(Family::B, rank);
    case 'C': return make(Family::C, rank);
    case 'D': return make(Family::D, rank);
    case 'E': return make(Family::E6, rank);
    case 'F': return make(Family::F4, rank);
    case 'G': return make(Family::G2, rank);
    default: throw UnsupportedRank("bad affine type \"" + std::string(name) + "\"");
  }
}

std::string AffineType::name() const {
  static constexpr const char* letters[] = {"A", "B", "C", "D", "E", "F", "G"};
  return letters[static_cast<int>(family)] + std::to_string(rank);
}

PairingTable build_pairing(const AffineType& t0) {
  const AffineType t = AffineType::make(t0.family, t0.rank);
  PairingTable out;
  out.type = t;
  const int m = t.size();
  std::vector<Edge> edges;

  if (t.family == Family::E6 || t.family == Family::F4 || t.family == Family::G2) {
    const auto rows = exceptional_rows(t.family);
    out.entries.resize(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.entries(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out.d = exceptional_d(t.family);
    edges = exceptional_edges(t.family);
  } else {
    Layout l = layout_for(t);
    out.d = l.d;
    edges = l.edges;
    out.entries = Matrix::Constant(m, m, RatFunc(1));
    for (int i = 0; i < m; ++i) {
      const Rational di = out.d[static_cast<std::size_t>(i)];
      out.entries(i, i) = mono(di, -di);
    }
    if (t.family == Family::A && t.rank == 1) {
      out.entries(0, 1) = out.entries(1, 0) = mono(-1, 1);
    } else {
      for (const auto& e : edges) {
        const Rational di = out.d[static_cast<std::size_t>(e.i)], dj = out.d[static_cast<std::size_t>(e.j)];
        // Short-short edges carry half powers; long and mixed edges r^{-1}, s.
        const Rational w = std::max(di, dj);
        out.entries(e.i, e.j) = mono(-w, 0);
        out.entries(e.j, e.i) = mono(0, w);
      }
      for (const auto& [e, v] : l.corners) out.entries(e.i, e.j) = v;
    }
  }
  out.cartan = cartan_from(out.d, edges, t);
  for (const auto& di : out.d) {
    out.ri.push_back(RatFunc::var(Var::r, di));
    out.si.push_back(RatFunc::var(Var::s, di));
  }
  out.diagnostics = check_table_laws(out);
  return out;
}

RatFunc pairing(const PairingTable& t, int i, int j) {
  if (i < 0 || j < 0 || i >= t.size() || j >= t.size())
    throw IndexOutOfRange("pairing index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                          t.type.name());
  return t.entries(i, j);
}

RatFunc weight_pairing(const PairingTable& t, const std::vector<Rational>& lam, int i) {
  const int n = t.size() - 1;
  if (static_cast<int>(lam.size()) != n)
    throw IndexOutOfRange("weight needs " + std::to_string(n) + " fundamental-weight coordinates");
  if (i < 0 || i > n) throw IndexOutOfRange("weight_pairing index " + std::to_string(i));
  // lam = sum_j c_j alpha_j with lam_k = sum_j a_kj c_j over the finite nodes.
  MatrixX<RatFunc> a(n, n);
  Vector rhs(n);
  for (int k = 0; k < n; ++k) {
    rhs(k) = RatFunc(lam[static_cast<std::size_t>(k)]);
    for (int j = 0; j < n; ++j) a(k, j) = RatFunc(t.cartan(k + 1, j + 1));
  }
  const Vector c = solve(a, rhs);
  RatFunc out(1);
  for (int j = 0; j < n; ++j) {
    const Rational cj = c(j).constant_value();
    if (sgn(cj) == 0) continue;
    out *= t.entries(j + 1, i).pow(cj);
  }
  return out;
}

std::vector<std::string> check_table_laws(const PairingTable& t) {
  std::vector<std::string> out;
  const int m = t.size();
  for (int i = 0; i < m; ++i) {
    const RatFunc qi = t.ri[static_cast<std::size_t>(i)] / t.si[static_cast<std::size_t>(i)];
    if (!(t.entries(i, i) == qi))
      out.push_back("<" + std::to_string(i) + "," + std::to_string(i) + "> = " + t.entries(i, i).str() +
                    ", expected " + qi.str());
    for (int j = i + 1; j < m; ++j) {
      const RatFunc prod = t.entries(i, j) * t.entries(j, i);
      const RatFunc qj = t.ri[static_cast<std::size_t>(j)] / t.si[static_cast<std::size_t>(j)];
      const RatFunc want_i = qi.pow(static_cast<long>(t.cartan(i, j)));
      const RatFunc want_j = qj.pow(static_cast<long>(t.cartan(j, i)));
      if (!(prod == want_i) || !(prod == want_j))
        out.push_back("<" + std::to_string(i) + "," + std::to_string(j) + "><" + std::to_string(j) + "," +
                      std::to_string(i) + "> = " + prod.str() + ", expected " + want_i.str());
    }
  }
  return out;
}

std::string render_table(const PairingTable& t) {
  std::ostringstream os;
  os << t.type.name() << '\n';
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) os << (j ? " | " : "") << t.entries(i, j).str();
    os << '\n';
  }
  return os.str();
}

}  // namespace qaff
