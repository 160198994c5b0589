#include "qaff/specialize.hpp"

#include <regex>

#include "qaff/hopf.hpp"

namespace qaff {

SpecMap SpecMap::r_to_s_pow(int k) {
  if (k == 1) throw Unsupported("r -> s^1 is the map s -> r");
  return {Kind::RToSPow, k};
}

SpecMap SpecMap::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t == "s=r") return s_to_r();
  if (t == "s=r^-1" || t == "s=r^(-1)" || t == "s=1/r") return s_to_r_inverse();
  static const std::regex pow_re(R"(r=s(\^\(?(-?\d+)\)?)?)");
  std::smatch mt;
  if (std::regex_match(t, mt, pow_re)) return r_to_s_pow(mt[2].matched ? std::stoi(mt[2]) : 1);
  throw ParseError("unknown specialization \"" + std::string(text) + "\" (expected s=r, s=r^-1 or r=s^k)");
}

std::string SpecMap::str() const {
  switch (kind) {
    case Kind::SToRInverse: return "s=r^-1";
    case Kind::SToR: return "s=r";
    case Kind::RToSPow: return "r=s^" + std::to_string(k);
  }
  return "";
}

Substitution SpecMap::substitution() const {
  Substitution sub;
  const RatFunc r = RatFunc::r();
  switch (kind) {
    case Kind::SToRInverse:
      sub.set(Var::s, r.inverse());
      break;
    case Kind::SToR:
      sub.set(Var::s, r);
      break;
    case Kind::RToSPow: {
      // q^2 = r s^{-1} = s^{k-1}
      const Rational e = frac(2, k - 1);
      sub.set(Var::s, RatFunc::var(Var::q, e));
      sub.set(Var::r, RatFunc::var(Var::q, e * k));
      break;
    }
  }
  return sub;
}

RatFunc specialize(const RatFunc& x, const SpecMap& m) { return substitute(x, m.substitution()); }

Matrix specialize(const Matrix& x, const SpecMap& m) {
  const Substitution sub = m.substitution();
  return map_entries(x, [&](const RatFunc& v) { return substitute(v, sub); });
}

PairingTable specialize_table(const PairingTable& t, const SpecMap& m) {
  const Substitution sub = m.substitution();
  PairingTable out = t;
  out.entries = specialize(t.entries, m);
  for (auto& x : out.ri) x = substitute(x, sub);
  for (auto& x : out.si) x = substitute(x, sub);
  out.r = substitute(t.r, sub);
  out.s = substitute(t.s, sub);
  return out;
}

MatrixModule specialize_module(const MatrixModule& m, const SpecMap& sm) {
  MatrixModule out = m;
  for (auto& [g, mat] : out.assign) mat = specialize(mat, sm);
  return out;
}

std::vector<std::string> check_centrality(const MatrixModule& m) {
  std::vector<std::string> out;
  for (const auto& [h, hm] : m.assign) {
    if (h.kind != GenKind::W && h.kind != GenKind::Wp) continue;
    for (const auto& [g, gm] : m.assign) {
      const Matrix c = commutator(hm, gm);
      if (!is_zero(c)) out.push_back("[" + h.str() + ", " + g.str() + "] = " + render_inline(c));
    }
  }
  return out;
}

std::vector<int> closure_dimensions(const MatrixModule& m) {
  std::vector<int> out;
  for (int i = 0; i < m.dim; ++i) out.push_back(static_cast<int>(span_closure(m, basis_vector(m.dim, i)).size()));
  return out;
}

}  // namespace qaff
