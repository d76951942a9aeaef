#include <complex>
#include <utility>

#include "io_detail.hpp"

namespace fhyp {

using io_detail::fail;
using io_detail::header_value;
using io_detail::Lines;

template <typename F>
std::vector<BallPoint<F>> read_vertices(std::istream& in) {
  Lines lines{in};
  if (lines.expect("signature") != "fhyp-vertices")
    fail(lines.lineno, "missing fhyp-vertices signature");
  const std::string field = header_value(lines, "field");
  if (field != field_traits<F>::name)
    fail(lines.lineno, "file is for field " + field + ", expected " +
                           std::string(field_traits<F>::name));
  const int n = std::stoi(header_value(lines, "n"));
  if (n < 1) fail(lines.lineno, "dimension must be positive");
  if (lines.expect("'begin vertices'") != "begin vertices")
    fail(lines.lineno, "expected 'begin vertices'");
  std::vector<BallPoint<F>> pts;
  std::string s;
  while (true) {
    s = lines.expect("vertex row or 'end'");
    if (s == "end") break;
    FRow<F> z = io_detail::parse_packed_row<F>(s, n, lines.lineno);
    try {
      pts.emplace_back(std::move(z));
    } catch (const std::invalid_argument& e) {
      fail(lines.lineno, e.what());
    }
  }
  return pts;
}

template <typename F>
void write_vertices(std::ostream& out, const std::vector<BallPoint<F>>& pts) {
  out << "fhyp-vertices\n";
  out << "field " << field_traits<F>::name << '\n';
  out << "n " << (pts.empty() ? 0 : pts.front().n()) << '\n';
  out << "begin vertices\n";
  for (const BallPoint<F>& p : pts) io_detail::print_packed_row<F>(out, p.z);
  out << "end\n";
}

std::vector<CycleTriangle> read_triangles(std::istream& in) {
  Lines lines{in};
  if (lines.expect("signature") != "fhyp-cycle") fail(lines.lineno, "missing fhyp-cycle signature");
  if (lines.expect("'begin triangles'") != "begin triangles")
    fail(lines.lineno, "expected 'begin triangles'");
  std::vector<CycleTriangle> tris;
  std::string s;
  while (true) {
    s = lines.expect("triangle row or 'end'");
    if (s == "end") break;
    std::istringstream is(s);
    CycleTriangle t;
    if (!(is >> t.a >> t.b >> t.c >> t.mult)) fail(lines.lineno, "expected 'a b c mult'");
    int extra;
    if (is >> extra) fail(lines.lineno, "trailing numbers");
    tris.push_back(t);
  }
  return tris;
}

void write_triangles(std::ostream& out, const std::vector<CycleTriangle>& tris) {
  out << "fhyp-cycle\n";
  out << "begin triangles\n";
  for (const CycleTriangle& t : tris)
    out << t.a << ' ' << t.b << ' ' << t.c << ' ' << t.mult << '\n';
  out << "end\n";
}

template std::vector<BallPoint<double>> read_vertices<double>(std::istream&);
template std::vector<BallPoint<std::complex<double>>> read_vertices<std::complex<double>>(std::istream&);
template std::vector<BallPoint<Quaternion<double>>> read_vertices<Quaternion<double>>(std::istream&);
template void write_vertices<double>(std::ostream&, const std::vector<BallPoint<double>>&);
template void write_vertices<std::complex<double>>(std::ostream&, const std::vector<BallPoint<std::complex<double>>>&);
template void write_vertices<Quaternion<double>>(std::ostream&, const std::vector<BallPoint<Quaternion<double>>>&);

}  // namespace fhyp
