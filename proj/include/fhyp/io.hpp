#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhyp/groups.hpp"
#include "fhyp/invariants.hpp"

namespace fhyp {

// Group files are line-oriented text: a "fhyp-group" signature, then
// field / n / kind headers, then one block per generator
//   begin generator role=(gamma1|gamma2|axis)
//   ... n+1 rows of (n+1) * components doubles ...
//   end
// '#' starts a comment.  Reading validates the field tag, the dimensions
// and form preservation of every matrix.
template <typename F>
GroupData<F> read_group(std::istream& in);
template <typename F>
void write_group(std::ostream& out, const GroupData<F>& G);

// Vertex files: "fhyp-vertices", field / n headers, then a begin
// vertices block of boundary points, one per line in packed ball
// coordinates.  Cycle files: "fhyp-cycle" and a begin triangles block of
// "a b c mult" rows.
template <typename F>
std::vector<BallPoint<F>> read_vertices(std::istream& in);
template <typename F>
void write_vertices(std::ostream& out, const std::vector<BallPoint<F>>& pts);
std::vector<CycleTriangle> read_triangles(std::istream& in);
void write_triangles(std::ostream& out, const std::vector<CycleTriangle>& tris);

// Command-line point syntax: "b:" + semicolon-separated ball entries or
// "c:" + Carnot-horospherical entries (horizontal part, then the
// imaginary t), each entry comma-separated components; "c:inf" is the
// point at infinity.
template <typename F>
BallPoint<F> parse_ball_point(const std::string& spec);

// Shortest round-trip decimal form; infinities print as "inf".
std::string format_double(double x);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t, const nlohmann::ordered_json& metadata);

}  // namespace fhyp
