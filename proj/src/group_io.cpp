#include <complex>
#include <utility>

#include "io_detail.hpp"

namespace fhyp {

using io_detail::fail;
using io_detail::header_value;
using io_detail::Lines;

template <typename F>
GroupData<F> read_group(std::istream& in) {
  Lines lines{in};
  if (lines.expect("signature") != "fhyp-group") fail(lines.lineno, "missing fhyp-group signature");
  const std::string field = header_value(lines, "field");
  if (field != field_traits<F>::name)
    fail(lines.lineno, "file is for field " + field + ", expected " +
                           std::string(field_traits<F>::name));
  const int n = std::stoi(header_value(lines, "n"));
  if (n < 2) fail(lines.lineno, "dimension must be at least 2");
  const std::string kind_name = header_value(lines, "kind");
  GroupKind kind;
  if (kind_name == "amalgam")
    kind = GroupKind::amalgam;
  else if (kind_name == "hnn")
    kind = GroupKind::hnn;
  else
    fail(lines.lineno, "unknown kind '" + kind_name + "'");

  GroupData<F> G{kind, {}, {}, FMat<F>()};
  bool have_axis = false;
  std::string s;
  while (lines.next(s)) {
    std::istringstream is(s);
    std::string word, what, role_kv;
    is >> word >> what >> role_kv;
    if (word != "begin" || what != "generator" || role_kv.rfind("role=", 0) != 0)
      fail(lines.lineno, "expected 'begin generator role=...'");
    const std::string role = role_kv.substr(5);
    FMat<F> M(n + 1, n + 1);
    for (int i = 0; i < n + 1; ++i) {
      const std::string row = lines.expect("matrix row");
      M.row(i) = io_detail::parse_packed_row<F>(row, n + 1, lines.lineno);
    }
    if (lines.expect("'end'") != "end") fail(lines.lineno, "expected 'end'");
    if (form_residual<F>(M) > 1e-9) fail(lines.lineno, "generator does not preserve the form");
    if (role == "gamma1")
      G.gamma1.push_back(std::move(M));
    else if (role == "gamma2")
      G.gamma2.push_back(std::move(M));
    else if (role == "axis") {
      if (have_axis) fail(lines.lineno, "duplicate axis generator");
      G.gamma_alpha = std::move(M);
      have_axis = true;
    } else
      fail(lines.lineno, "unknown role '" + role + "'");
  }
  if (!have_axis) throw std::runtime_error("group file: missing axis generator");
  return G;
}

template <typename F>
void write_group(std::ostream& out, const GroupData<F>& G) {
  out << "fhyp-group\n";
  out << "field " << field_traits<F>::name << '\n';
  out << "n " << (G.gamma_alpha.rows() - 1) << '\n';
  out << "kind " << (G.kind == GroupKind::amalgam ? "amalgam" : "hnn") << '\n';
  const auto block = [&](const FMat<F>& M, const char* role) {
    out << "begin generator role=" << role << '\n';
    for (Eigen::Index i = 0; i < M.rows(); ++i) io_detail::print_packed_row<F>(out, FRow<F>(M.row(i)));
    out << "end\n";
  };
  for (const FMat<F>& M : G.gamma1) block(M, "gamma1");
  for (const FMat<F>& M : G.gamma2) block(M, "gamma2");
  block(G.gamma_alpha, "axis");
}

template <typename F>
BallPoint<F> parse_ball_point(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("point spec needs a 'b:' or 'c:' prefix: " + spec);
  const std::string tag = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (tag != "b" && tag != "c") throw std::runtime_error("unknown point prefix '" + tag + "'");
  if (tag == "c" && body == "inf") {
    // dimension-free spec: the smallest model, matching the n = 2 tools
    return boundary_to_ball<F>(NPoint<F>::infinity(1));
  }

  constexpr int comps = int(field_traits<F>::components);
  std::vector<F> entries;
  std::istringstream groups(body);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream cs(group);
    std::string tok;
    std::vector<double> buf;
    while (std::getline(cs, tok, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw std::runtime_error("bad number '" + tok + "' in point spec");
      }
      if (used != tok.size()) throw std::runtime_error("bad number '" + tok + "' in point spec");
      buf.push_back(v);
    }
    if (int(buf.size()) != comps)
      throw std::runtime_error("each entry needs " + std::to_string(comps) +
                               " components, got " + std::to_string(buf.size()));
    entries.push_back(field_traits<F>::unpack(buf));
  }
  if (entries.empty()) throw std::runtime_error("empty point spec");

  if (tag == "b") {
    FRow<F> z(int(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) z(int(i)) = entries[i];
    return BallPoint<F>{std::move(z)};  // ball validation reports outside points
  }
  if (entries.size() < 2)
    throw std::runtime_error("carnot spec needs horizontal entries and a last imaginary entry");
  FRow<F> xi(int(entries.size()) - 1);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) xi(int(i)) = entries[i];
  return boundary_to_ball<F>(NPoint<F>(std::move(xi), entries.back()));
}

template GroupData<double> read_group<double>(std::istream&);
template GroupData<std::complex<double>> read_group<std::complex<double>>(std::istream&);
template GroupData<Quaternion<double>> read_group<Quaternion<double>>(std::istream&);
template void write_group<double>(std::ostream&, const GroupData<double>&);
template void write_group<std::complex<double>>(std::ostream&, const GroupData<std::complex<double>>&);
template void write_group<Quaternion<double>>(std::ostream&, const GroupData<Quaternion<double>>&);
template BallPoint<double> parse_ball_point<double>(const std::string&);
template BallPoint<std::complex<double>> parse_ball_point<std::complex<double>>(const std::string&);
template BallPoint<Quaternion<double>> parse_ball_point<Quaternion<double>>(const std::string&);

}  // namespace fhyp
