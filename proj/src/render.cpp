#include <sstream>

#include "qaff/eigen_support.hpp"
#include "qaff/trunc_series.hpp"

namespace qaff {

std::vector<std::vector<std::string>> render(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j).str());
  return rows;
}

std::string render_inline(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
  }
  os << ']';
  return os.str();
}

std::string to_string(const Series& s) {
  const std::string v = s.var() == SeriesVar::z ? "z" : "u";
  const bool desc = s.direction() == Direction::descending;
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    RatFunc c = s[k];
    if (c.is_zero()) continue;
    const bool neg = c.is_monomial() && sgn(c.num().lead().coeff) < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (k == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << (c.is_monomial() ? c.str() : "(" + c.str() + ")") << '*';
      os << v;
      if (desc)
        os << "^(-" << k << ')';
      else if (k > 1)
        os << '^' << k;
    }
    first = false;
  }
  if (first) os << '0';
  os << " + O(" << v << '^' << (desc ? "(-" + std::to_string(s.order() + 1) + ")" : std::to_string(s.order() + 1))
     << ')';
  return os.str();
}

}  // namespace qaff
